#include "ospec/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ospec/numeric.hpp"

namespace ospec {

namespace {

std::vector<std::pair<int, int>> hasse_covers(const FinitePoset& p) {
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < p.m; ++a)
    for (int b = 0; b < p.m; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      bool cover = true;
      for (int z = 0; z < p.m && cover; ++z)
        cover = !(z != a && z != b && p.leq(a, z) && p.leq(z, b));
      if (cover) covers.emplace_back(a, b);
    }
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace

FinitePoset build_poset(std::vector<std::string> labels,
                        const std::function<bool(int, int)>& leq) {
  const int m = static_cast<int>(labels.size());
  if (m == 0) fail(errc::invalid_argument, "build_poset: no nodes");
  FinitePoset p;
  p.m = m;
  p.labels = std::move(labels);
  p.leq_flat.assign(std::size_t(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) p.leq_flat[a * m + b] = leq(a, b) ? 1 : 0;

  for (int a = 0; a < m; ++a)
    if (!p.leq(a, a))
      fail(errc::validation, "order not reflexive at '" + p.labels[a] + "'");
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (p.leq(a, b) && p.leq(b, a))
        fail(errc::validation, "order not antisymmetric on ('" + p.labels[a] +
                                   "', '" + p.labels[b] + "')");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!p.leq(a, b)) continue;
      for (int c = 0; c < m; ++c)
        if (p.leq(b, c) && !p.leq(a, c))
          fail(errc::validation, "order not transitive on ('" + p.labels[a] +
                                     "', '" + p.labels[b] + "', '" +
                                     p.labels[c] + "')");
    }
  p.covers = hasse_covers(p);
  return p;
}

Bounds bounds(const FinitePoset& p, int a, int b) {
  Bounds out;
  for (int z = 0; z < p.m; ++z) {
    if (!(p.leq(a, z) && p.leq(b, z))) continue;
    bool least = true;
    for (int w = 0; w < p.m && least; ++w)
      if (p.leq(a, w) && p.leq(b, w)) least = p.leq(z, w);
    if (least) {
      out.lub = z;
      break;
    }
  }
  for (int z = 0; z < p.m; ++z) {
    if (!(p.leq(z, a) && p.leq(z, b))) continue;
    bool greatest = true;
    for (int w = 0; w < p.m && greatest; ++w)
      if (p.leq(w, a) && p.leq(w, b)) greatest = p.leq(w, z);
    if (greatest) {
      out.glb = z;
      break;
    }
  }
  return out;
}

bool is_chain(const FinitePoset& p) {
  for (int a = 0; a < p.m; ++a)
    for (int b = a + 1; b < p.m; ++b)
      if (!p.leq(a, b) && !p.leq(b, a)) return false;
  return true;
}

LatticeCheck as_lattice(const FinitePoset& p) {
  FiniteLattice l;
  l.poset = p;
  l.join_flat.assign(std::size_t(p.m) * p.m, 0);
  l.meet_flat.assign(std::size_t(p.m) * p.m, 0);
  for (int a = 0; a < p.m; ++a)
    for (int b = 0; b < p.m; ++b) {
      Bounds bo = bounds(p, a, b);
      if (!bo.lub || !bo.glb) return LatticeCheck{std::nullopt, std::make_pair(a, b)};
      l.join_flat[a * p.m + b] = *bo.lub;
      l.meet_flat[a * p.m + b] = *bo.glb;
    }
  return LatticeCheck{std::move(l), std::nullopt};
}

LawVerdict check_laws(const FiniteLattice& l) {
  LawVerdict v;
  const int m = l.size();
  for (int a = 0; a < m && v.modular; ++a)
    for (int b = 0; b < m && v.modular; ++b)
      for (int c = 0; c < m && v.modular; ++c) {
        if (!l.poset.leq(a, c)) continue;
        if (l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c)) {
          v.modular = false;
          v.modular_witness = {a, b, c};
        }
      }
  for (int a = 0; a < m && v.distributive; ++a)
    for (int b = 0; b < m && v.distributive; ++b)
      for (int c = 0; c < m && v.distributive; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
          v.distributive = false;
          v.distributive_witness = {a, b, c};
        }
  return v;
}

bool is_n5_sublattice(const FiniteLattice& l, const std::array<int, 5>& nodes) {
  auto [bot, x, y, side, top] = nodes;
  std::array<int, 5> s = nodes;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  for (int v : nodes)
    if (v < 0 || v >= l.size()) return false;
  const FinitePoset& p = l.poset;
  if (!(p.lt(bot, x) && p.lt(x, y) && p.lt(y, top))) return false;
  if (!(p.lt(bot, side) && p.lt(side, top))) return false;
  if (p.leq(x, side) || p.leq(side, x) || p.leq(y, side) || p.leq(side, y))
    return false;
  return l.join(x, side) == top && l.join(y, side) == top &&
         l.meet(x, side) == bot && l.meet(y, side) == bot;
}

bool is_m3_sublattice(const FiniteLattice& l, const std::array<int, 5>& nodes) {
  auto [bot, a, b, c, top] = nodes;
  std::array<int, 5> s = nodes;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  for (int v : nodes)
    if (v < 0 || v >= l.size()) return false;
  const FinitePoset& p = l.poset;
  std::array<int, 3> atoms{a, b, c};
  for (int u : atoms)
    if (!(p.lt(bot, u) && p.lt(u, top))) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      int u = atoms[i], v = atoms[j];
      if (p.leq(u, v) || p.leq(v, u)) return false;
      if (l.join(u, v) != top || l.meet(u, v) != bot) return false;
    }
  return true;
}

std::optional<std::array<int, 5>> find_forbidden_sublattice(const FiniteLattice& l,
                                                            ForbiddenShape shape) {
  const int m = l.size();
  // Any N5/M3 sublattice is reproduced by this construction applied to its
  // own middle triple, so scanning all triples is a complete search.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        if (shape == ForbiddenShape::n5) {
          if (!l.poset.leq(a, c)) continue;
          int x = l.join(a, l.meet(b, c));
          int y = l.meet(l.join(a, b), c);
          if (x == y) continue;
          std::array<int, 5> cand{l.meet(b, c), x, y, b, l.join(a, b)};
          if (is_n5_sublattice(l, cand)) return cand;
        } else {
          if (l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c)))
            continue;
          int bot = l.join(l.meet(a, b), l.join(l.meet(b, c), l.meet(c, a)));
          int top = l.meet(l.join(a, b), l.meet(l.join(b, c), l.join(c, a)));
          std::array<int, 5> cand{bot, l.join(l.meet(a, top), bot),
                                  l.join(l.meet(b, top), bot),
                                  l.join(l.meet(c, top), bot), top};
          if (is_m3_sublattice(l, cand)) return cand;
        }
      }
  if (m <= 12) {
    // Belt and braces on small lattices: try every 5-subset in every role
    // assignment.
    std::vector<int> comb{0, 1, 2, 3, 4};
    auto next_comb = [&]() {
      int i = 4;
      while (i >= 0 && comb[i] == m - 5 + i) --i;
      if (i < 0) return false;
      ++comb[i];
      for (int j = i + 1; j < 5; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    };
    if (m >= 5) do {
        std::array<int, 5> perm{comb[0], comb[1], comb[2], comb[3], comb[4]};
        std::sort(perm.begin(), perm.end());
        do {
          if (shape == ForbiddenShape::n5 ? is_n5_sublattice(l, perm)
                                          : is_m3_sublattice(l, perm))
            return perm;
        } while (std::next_permutation(perm.begin(), perm.end()));
      } while (next_comb());
  }
  return std::nullopt;
}

FiniteLattice chain_lattice(int k) {
  if (k < 1) fail(errc::invalid_argument, "chain_lattice: need k >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  auto check = as_lattice(
      build_poset(std::move(labels), [](int a, int b) { return a <= b; }));
  return *check.lattice;
}

FiniteLattice divisor_lattice(unsigned n) {
  std::vector<unsigned> divs = divisors(n);
  std::vector<std::string> labels;
  for (unsigned d : divs) labels.push_back(std::to_string(d));
  auto check = as_lattice(build_poset(
      std::move(labels),
      [&divs](int a, int b) { return divs[b] % divs[a] == 0; }));
  return *check.lattice;
}

FiniteLattice boolean_lattice(int k) {
  if (k < 0 || k > 16) fail(errc::invalid_argument, "boolean_lattice: need 0 <= k <= 16");
  const int m = 1 << k;
  std::vector<std::string> labels;
  for (int mask = 0; mask < m; ++mask) {
    std::string s = "{";
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
    labels.push_back(s + "}");
  }
  auto check = as_lattice(build_poset(
      std::move(labels), [](int a, int b) { return (a & b) == a; }));
  return *check.lattice;
}

FiniteLattice m_lattice(int k) {
  if (k < 1) fail(errc::invalid_argument, "m_lattice: need k >= 1 atoms");
  std::vector<std::string> labels{"0"};
  for (int i = 1; i <= k; ++i) labels.push_back("a" + std::to_string(i));
  labels.push_back("1");
  const int top = k + 1;
  auto check = as_lattice(build_poset(
      std::move(labels), [top](int a, int b) {
        return a == b || a == 0 || b == top;
      }));
  return *check.lattice;
}

FiniteLattice n5_lattice() {
  // 0 < a < b < 1, side c
  std::vector<std::string> labels{"0", "a", "b", "c", "1"};
  auto check = as_lattice(build_poset(std::move(labels), [](int a, int b) {
    if (a == b || a == 0 || b == 4) return true;
    return a == 1 && b == 2;
  }));
  return *check.lattice;
}

FiniteLattice product_lattice(const FiniteLattice& a, const FiniteLattice& b) {
  const int ma = a.size(), mb = b.size();
  std::vector<std::string> labels;
  labels.reserve(std::size_t(ma) * mb);
  for (int i = 0; i < ma; ++i)
    for (int j = 0; j < mb; ++j)
      labels.push_back("(" + a.poset.labels[i] + "," + b.poset.labels[j] + ")");
  auto check = as_lattice(build_poset(
      std::move(labels), [&a, &b, mb](int x, int y) {
        return a.poset.leq(x / mb, y / mb) && b.poset.leq(x % mb, y % mb);
      }));
  return *check.lattice;
}

namespace {

// Iterated signature refinement: nodes start from (|down-set|, |up-set|) and
// are re-hashed against every other node's color and relative order until
// the partition stabilizes.
std::vector<std::uint64_t> refine_colors(const FinitePoset& p) {
  const int m = p.m;
  std::vector<std::uint64_t> color(m);
  for (int v = 0; v < m; ++v) {
    std::uint64_t below = 0, above = 0;
    for (int w = 0; w < m; ++w) {
      below += p.leq(w, v);
      above += p.leq(v, w);
    }
    color[v] = below * 977u + above;
  }
  for (int round = 0; round < m; ++round) {
    std::vector<std::uint64_t> next(m);
    for (int v = 0; v < m; ++v) {
      std::vector<std::uint64_t> sig;
      sig.reserve(m);
      for (int w = 0; w < m; ++w)
        sig.push_back(color[w] * 4u + (p.leq(v, w) ? 2u : 0u) + (p.leq(w, v) ? 1u : 0u));
      std::sort(sig.begin(), sig.end());
      std::uint64_t h = color[v] * 1469598103934665603ull;
      for (std::uint64_t s : sig) h = (h ^ s) * 1099511628211ull;
      next[v] = h;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

bool extend_iso(const FinitePoset& p, const FinitePoset& q,
                const std::vector<std::uint64_t>& cp,
                const std::vector<std::uint64_t>& cq, std::vector<int>& map,
                std::vector<char>& used, int v) {
  const int m = p.m;
  if (v == m) return true;
  for (int w = 0; w < m; ++w) {
    if (used[w] || cq[w] != cp[v]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      ok = p.leq(u, v) == q.leq(map[u], w) && p.leq(v, u) == q.leq(w, map[u]);
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (extend_iso(p, q, cp, cq, map, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const FinitePoset& p,
                                               const FinitePoset& q) {
  if (p.m > kIsoNodeCap || q.m > kIsoNodeCap)
    fail(errc::cap_exceeded, "are_isomorphic: poset larger than " +
                                 std::to_string(kIsoNodeCap) + " nodes");
  if (p.m != q.m) return std::nullopt;
  auto cp = refine_colors(p), cq = refine_colors(q);
  {
    auto hp = cp, hq = cq;
    std::sort(hp.begin(), hp.end());
    std::sort(hq.begin(), hq.end());
    if (hp != hq) return std::nullopt;
  }
  std::vector<int> map(p.m, -1);
  std::vector<char> used(p.m, 0);
  if (!extend_iso(p, q, cp, cq, map, used, 0)) return std::nullopt;
  for (int a = 0; a < p.m; ++a)
    for (int b = 0; b < p.m; ++b)
      if (p.leq(a, b) != q.leq(map[a], map[b]))
        fail(errc::validation, "are_isomorphic: produced mapping is not order-preserving");
  return map;
}

}  // namespace ospec
