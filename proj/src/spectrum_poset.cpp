#include "ospec/spectrum_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ospec/numeric.hpp"

namespace ospec {

namespace {

bool spectrum_subset(const OrderSpectrum& a, const OrderSpectrum& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string spectrum_label(const OrderSpectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

SpectrumPoset assemble(GroupSpec spec, unsigned group_order,
                       std::map<OrderSpectrum, std::vector<Subgroup>> by_spectrum) {
  SpectrumPoset p;
  p.group = std::move(spec);
  p.group_order = group_order;
  for (auto& [s, reps] : by_spectrum)
    p.classes.push_back(SpectrumClass{s, std::move(reps)});
  // std::map ordering == lexicographic on spectra, the canonical class order
  std::vector<std::string> labels;
  for (const auto& c : p.classes) labels.push_back(spectrum_label(c.spectrum));
  p.poset = build_poset(std::move(labels), [&p](int a, int b) {
    return spectrum_subset(p.classes[a].spectrum, p.classes[b].spectrum);
  });
  return p;
}

}  // namespace

std::optional<int> SpectrumPoset::class_index(const OrderSpectrum& s) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].spectrum == s) return static_cast<int>(i);
  return std::nullopt;
}

SpectrumPoset build_spectrum_poset(const FiniteGroup& g, unsigned cap) {
  if (g.spec.kind == GroupKind::dihedral) return dihedral_spectrum_poset(g.spec.n);
  std::map<OrderSpectrum, std::vector<Subgroup>> by_spectrum;
  for (Subgroup& h : all_subgroups(g, cap)) {
    OrderSpectrum s = order_spectrum(g, h);
    by_spectrum[std::move(s)].push_back(std::move(h));
  }
  return assemble(g.spec, g.order, std::move(by_spectrum));
}

bool operator==(const DihedralClassKey& a, const DihedralClassKey& b) {
  return a.m == b.m && a.with_two == b.with_two;
}

bool operator<(const DihedralClassKey& a, const DihedralClassKey& b) {
  return a.m != b.m ? a.m < b.m : a.with_two < b.with_two;
}

DihedralClassKey normalize_class_key(unsigned n, unsigned m, bool with_two) {
  if (n == 0 || m == 0 || n % m != 0)
    fail(errc::validation, "class key: m = " + std::to_string(m) +
                               " is not a divisor of n = " + std::to_string(n));
  if (m % 2 == 0) with_two = false;  // 2 already lies in divisors(m)
  if (m == 2) {                      // divisors(2) = {1,2}: fold into (1, true)
    m = 1;
    with_two = true;
  }
  return DihedralClassKey{m, with_two};
}

OrderSpectrum key_spectrum(const DihedralClassKey& key) {
  OrderSpectrum s = divisors(key.m);
  if (key.with_two && key.m % 2 != 0) {
    s.push_back(2);
    std::sort(s.begin(), s.end());
  }
  return s;
}

bool key_has_two(const DihedralClassKey& key) {
  return key.with_two || key.m % 2 == 0;
}

std::vector<DihedralClassKey> dihedral_class_keys(unsigned n) {
  std::set<DihedralClassKey> keys;
  for (unsigned m : divisors(n)) {
    keys.insert(normalize_class_key(n, m, false));
    keys.insert(normalize_class_key(n, m, true));
  }
  return std::vector<DihedralClassKey>(keys.begin(), keys.end());
}

DihedralClassKey key_of_spectrum(unsigned n, const OrderSpectrum& s) {
  if (s.empty()) fail(errc::invalid_argument, "key_of_spectrum: empty spectrum");
  bool with_two = std::binary_search(s.begin(), s.end(), 2u);
  // Largest entry other than an adjoined 2.
  unsigned m = 1;
  for (unsigned v : s)
    if (v != 2) m = std::max(m, v);
  DihedralClassKey key = normalize_class_key(n, m, with_two);
  if (key_spectrum(key) != s)
    fail(errc::validation,
         "spectrum " + spectrum_label(s) + " is not a class spectrum of D_" +
             std::to_string(n));
  return key;
}

SpectrumPoset dihedral_spectrum_poset(unsigned n) {
  if (n == 0) fail(errc::invalid_argument, "dihedral_spectrum_poset: n must be >= 1");
  std::map<OrderSpectrum, std::vector<Subgroup>> by_spectrum;
  for (Subgroup& h : dihedral_subgroup_listing(n)) {
    const DihedralCoord& c = *h.coord;
    DihedralClassKey key = normalize_class_key(
        n, n / c.d, c.kind == DihedralKind::mixed);
    by_spectrum[key_spectrum(key)].push_back(std::move(h));
  }
  // Every class key must be realized by a listed subgroup and vice versa.
  std::vector<DihedralClassKey> keys = dihedral_class_keys(n);
  if (by_spectrum.size() != keys.size())
    fail(errc::validation, "dihedral_spectrum_poset: class/key count mismatch");
  for (const DihedralClassKey& key : keys)
    if (!by_spectrum.count(key_spectrum(key)))
      fail(errc::validation, "dihedral_spectrum_poset: unrealized class key");
  return assemble(GroupSpec::dihedral(n), 2 * n, std::move(by_spectrum));
}

namespace {

void require_canonical(unsigned n, const DihedralClassKey& k, const char* who) {
  DihedralClassKey c = normalize_class_key(n, k.m, k.with_two);
  if (!(c == k))
    fail(errc::validation, std::string(who) + ": key (" + std::to_string(k.m) +
                               "," + (k.with_two ? "true" : "false") +
                               ") is not in canonical form for n = " +
                               std::to_string(n));
}

}  // namespace

std::pair<DihedralClassKey, DihedralClassKey> closed_form_join_meet(
    unsigned n, const DihedralClassKey& a, const DihedralClassKey& b) {
  require_canonical(n, a, "closed_form_join_meet");
  require_canonical(n, b, "closed_form_join_meet");
  bool two_a = key_has_two(a), two_b = key_has_two(b);
  DihedralClassKey join =
      normalize_class_key(n, std::lcm(a.m, b.m), two_a || two_b);
  DihedralClassKey meet =
      normalize_class_key(n, std::gcd(a.m, b.m), two_a && two_b);
  return {join, meet};
}

LemmaJoinMeet join_meet_via_lemma(const SpectrumPoset& p, int a, int b) {
  const int m = p.poset.m;
  if (a < 0 || a >= m || b < 0 || b >= m)
    fail(errc::invalid_argument, "join_meet_via_lemma: class index out of range");
  LemmaJoinMeet out;
  bool first = true;
  for (int c = 0; c < m; ++c) {
    if (!(p.poset.leq(a, c) && p.poset.leq(b, c))) continue;
    const OrderSpectrum& s = p.classes[c].spectrum;
    if (first) {
      out.upper_intersection = s;
      first = false;
    } else {
      OrderSpectrum tmp;
      std::set_intersection(out.upper_intersection.begin(),
                            out.upper_intersection.end(), s.begin(), s.end(),
                            std::back_inserter(tmp));
      out.upper_intersection = std::move(tmp);
    }
  }
  for (int c = 0; c < m; ++c) {
    if (!(p.poset.leq(c, a) && p.poset.leq(c, b))) continue;
    const OrderSpectrum& s = p.classes[c].spectrum;
    OrderSpectrum tmp;
    std::set_union(out.lower_union.begin(), out.lower_union.end(), s.begin(),
                   s.end(), std::back_inserter(tmp));
    out.lower_union = std::move(tmp);
  }
  out.join = p.class_index(out.upper_intersection);
  out.meet = p.class_index(out.lower_union);
  return out;
}

ProductIso phi_to_divisor_product(unsigned n) {
  if (n == 0 || n % 2 == 0)
    fail(errc::domain, "phi_to_divisor_product: n = " + std::to_string(n) +
                           " is not odd");
  ProductIso iso;
  iso.domain = dihedral_spectrum_poset(n);
  iso.codomain = product_lattice(divisor_lattice(n), chain_lattice(2));

  std::vector<unsigned> divs = divisors(n);
  auto divisor_index = [&](unsigned d) {
    return int(std::lower_bound(divs.begin(), divs.end(), d) - divs.begin());
  };

  const int m = iso.domain.poset.m;
  if (m != int(2 * divs.size()))
    fail(errc::validation, "phi_to_divisor_product: class count is not 2 tau(n)");
  iso.class_to_node.assign(m, -1);
  std::vector<char> hit(m, 0);
  std::vector<DihedralClassKey> keys(m);
  for (int i = 0; i < m; ++i) {
    DihedralClassKey key = key_of_spectrum(n, iso.domain.classes[i].spectrum);
    keys[i] = key;
    int node = divisor_index(key.m) * 2 + (key.with_two ? 1 : 0);
    iso.class_to_node[i] = node;
    if (hit[node]++)
      fail(errc::validation, "phi_to_divisor_product: mapping is not injective");
  }

  // Join/meet preservation on every class pair, against the generic bounds
  // of both sides.
  auto domain_lattice = as_lattice(iso.domain.poset);
  if (!domain_lattice.lattice)
    fail(errc::validation, "phi_to_divisor_product: domain is not a lattice");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int dj = domain_lattice.lattice->join(i, j);
      int dm = domain_lattice.lattice->meet(i, j);
      if (iso.codomain.join(iso.class_to_node[i], iso.class_to_node[j]) !=
              iso.class_to_node[dj] ||
          iso.codomain.meet(iso.class_to_node[i], iso.class_to_node[j]) !=
              iso.class_to_node[dm])
        fail(errc::validation,
             "phi_to_divisor_product: join/meet not preserved on classes " +
                 std::to_string(i) + ", " + std::to_string(j));
    }
  return iso;
}

std::optional<std::array<DihedralClassKey, 5>> figure_n5_witness(unsigned n) {
  if (n == 0) fail(errc::invalid_argument, "figure_n5_witness: n must be >= 1");
  Factorization f = factorize(n);
  std::array<DihedralClassKey, 5> keys;
  if (f.alpha >= 2 && !f.odd_primes.empty()) {
    unsigned p = f.odd_primes.front().first;
    keys = {normalize_class_key(n, 1, true), normalize_class_key(n, p, true),
            normalize_class_key(n, 4, false),
            normalize_class_key(n, 2 * p, false),
            normalize_class_key(n, 4 * p, false)};
  } else if (f.alpha == 1 && f.odd_primes.size() >= 2) {
    unsigned p = f.odd_primes[0].first, q = f.odd_primes[1].first;
    keys = {normalize_class_key(n, 1, true), normalize_class_key(n, p, true),
            normalize_class_key(n, 2 * q, false),
            normalize_class_key(n, 2 * p, false),
            normalize_class_key(n, 2 * p * q, false)};
  } else {
    return std::nullopt;
  }

  // Re-verify the pentagon inside the actual class lattice before returning.
  SpectrumPoset poset = dihedral_spectrum_poset(n);
  auto lattice = as_lattice(poset.poset);
  if (!lattice.lattice)
    fail(errc::validation, "figure_n5_witness: class poset is not a lattice");
  auto index = [&](const DihedralClassKey& k) {
    auto i = poset.class_index(key_spectrum(k));
    if (!i) fail(errc::validation, "figure_n5_witness: witness class missing");
    return *i;
  };
  // keys order: bottom, chain-low, side, chain-high, top
  std::array<int, 5> roles{index(keys[0]), index(keys[1]), index(keys[3]),
                           index(keys[2]), index(keys[4])};
  if (!is_n5_sublattice(*lattice.lattice, roles))
    fail(errc::validation, "figure_n5_witness: candidate is not an N5 sublattice");
  return keys;
}

}  // namespace ospec
