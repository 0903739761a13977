#include "ospec/subgroups.hpp"

#include <algorithm>
#include <set>

#include "ospec/numeric.hpp"

namespace ospec {

bool Subgroup::contains(unsigned g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.members == b.members;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<unsigned>& gens) {
  for (unsigned x : gens)
    if (x >= g.order)
      fail(errc::invalid_argument, "generated_subgroup: generator id out of range");
  std::vector<char> in(g.order, 0);
  std::vector<unsigned> members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    unsigned a = members[head];
    for (unsigned x : gens) {
      unsigned b = g.op(a, x);
      if (!in[b]) {
        in[b] = 1;
        members.push_back(b);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members), std::nullopt};
}

bool is_subgroup(const FiniteGroup& g, const std::vector<unsigned>& members) {
  if (members.empty() || !std::is_sorted(members.begin(), members.end())) return false;
  std::vector<char> in(g.order, 0);
  for (unsigned x : members) {
    if (x >= g.order || in[x]) return false;
    in[x] = 1;
  }
  if (!in[g.identity()]) return false;
  for (unsigned a : members)
    for (unsigned b : members)
      if (!in[g.op(a, b)]) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, unsigned cap) {
  if (g.order > cap)
    fail(errc::cap_exceeded, "all_subgroups: order " + std::to_string(g.order) +
                                 " exceeds enumeration cap " + std::to_string(cap) +
                                 " (dihedral groups have a closed-form listing)");
  std::set<std::vector<unsigned>> seen;
  std::vector<std::vector<unsigned>> queue;
  auto add = [&](std::vector<unsigned> m) {
    if (seen.insert(m).second) queue.push_back(std::move(m));
  };
  for (unsigned x = 0; x < g.order; ++x) add(generated_subgroup(g, {x}).members);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::vector<unsigned> h = queue[i];  // copy; queue reallocates
    if (h.size() == g.order) continue;
    std::vector<char> covered(g.order, 0);
    for (unsigned x : h) covered[x] = 1;
    for (unsigned x = 0; x < g.order; ++x) {
      if (covered[x]) continue;
      std::vector<unsigned> gens = h;
      gens.push_back(x);
      add(generated_subgroup(g, gens).members);
      // <h, y> = <h, x> for every y in the coset h*x
      for (unsigned a : h) covered[g.op(a, x)] = 1;
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& m : seen) out.push_back(Subgroup{m, std::nullopt});
  return out;
}

std::vector<Subgroup> dihedral_subgroup_listing(unsigned n) {
  if (n == 0) fail(errc::invalid_argument, "dihedral_subgroup_listing: n must be >= 1");
  std::vector<Subgroup> out;
  for (unsigned d : divisors(n)) {
    std::vector<unsigned> rot;
    for (unsigned k = 0; k < n / d; ++k) rot.push_back(k * d);
    out.push_back(Subgroup{rot, DihedralCoord{DihedralKind::rotation, d, 0}});
    for (unsigned i = 0; i < d; ++i) {
      std::vector<unsigned> members = rot;
      for (unsigned k = 0; k < n / d; ++k) members.push_back(n + (i + k * d) % n);
      std::sort(members.begin(), members.end());
      out.push_back(Subgroup{std::move(members), DihedralCoord{DihedralKind::mixed, d, i}});
    }
  }
  return out;
}

OrderSpectrum order_spectrum(const FiniteGroup& g, const Subgroup& h) {
  std::set<unsigned> orders;
  for (unsigned x : h.members) orders.insert(element_order(g, x));
  return OrderSpectrum(orders.begin(), orders.end());
}

}  // namespace ospec
