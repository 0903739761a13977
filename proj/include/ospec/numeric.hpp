#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ospec {

// n = 2^alpha * prod(p_i^t_i) with the odd primes p_i ascending.
struct Factorization {
  unsigned value = 1;
  unsigned alpha = 0;
  std::vector<std::pair<unsigned, unsigned>> odd_primes;  // (p_i, t_i)

  unsigned odd_part() const {
    unsigned m = 1;
    for (auto [p, t] : odd_primes)
      for (unsigned i = 0; i < t; ++i) m *= p;
    return m;
  }
  std::size_t distinct_odd_primes() const { return odd_primes.size(); }
};

Factorization factorize(unsigned n);

bool is_prime(unsigned n);

// Divisors of n in ascending order.
std::vector<unsigned> divisors(unsigned n);

unsigned divisor_count(unsigned n);  // tau
unsigned divisor_sum(unsigned n);    // sigma

}  // namespace ospec
