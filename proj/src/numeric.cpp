#include "ospec/numeric.hpp"

#include <algorithm>

#include "ospec/error.hpp"

namespace ospec {

Factorization factorize(unsigned n) {
  if (n == 0) fail(errc::invalid_argument, "factorize: n must be positive");
  Factorization f;
  f.value = n;
  while (n % 2 == 0) {
    ++f.alpha;
    n /= 2;
  }
  for (unsigned p = 3; p * p <= n; p += 2) {
    if (n % p) continue;
    unsigned t = 0;
    while (n % p == 0) {
      ++t;
      n /= p;
    }
    f.odd_primes.emplace_back(p, t);
  }
  if (n > 1) f.odd_primes.emplace_back(n, 1);
  return f;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned p = 3; p * p <= n; p += 2)
    if (n % p == 0) return false;
  return true;
}

std::vector<unsigned> divisors(unsigned n) {
  if (n == 0) fail(errc::invalid_argument, "divisors: n must be positive");
  std::vector<unsigned> out;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned divisor_count(unsigned n) {
  return static_cast<unsigned>(divisors(n).size());
}

unsigned divisor_sum(unsigned n) {
  unsigned s = 0;
  for (unsigned d : divisors(n)) s += d;
  return s;
}

}  // namespace ospec
