#pragma once

#include <optional>
#include <vector>

#include "ospec/group.hpp"

namespace ospec {

// Sorted, duplicate-free set of element orders occurring in a subgroup.
// Always contains 1.
using OrderSpectrum = std::vector<unsigned>;

enum class DihedralKind { rotation, mixed };

// Position of a subgroup of D_n in the standard listing: <r^d> for d | n
// (rotation), or <r^d, r^i s> for d | n and 0 <= i < d (mixed).
struct DihedralCoord {
  DihedralKind kind = DihedralKind::rotation;
  unsigned d = 1;
  unsigned i = 0;  // always 0 for rotation subgroups
};

struct Subgroup {
  std::vector<unsigned> members;  // sorted element ids, always contains 0
  std::optional<DihedralCoord> coord;

  unsigned size() const { return static_cast<unsigned>(members.size()); }
  bool contains(unsigned g) const;
};

bool operator==(const Subgroup& a, const Subgroup& b);

// Smallest subgroup containing the generators: orbit of the identity under
// right-multiplication by the generating set (finiteness supplies inverses).
// Empty generator list yields the trivial subgroup.
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<unsigned>& gens);

bool is_subgroup(const FiniteGroup& g, const std::vector<unsigned>& members);

inline constexpr unsigned kDefaultSubgroupCap = 200;

// Every subgroup of g, sorted by member list.  Seeds with the cyclic
// subgroups and closes under "extend a known subgroup by one outside
// element" until fixpoint; extensions by elements of the same coset generate
// the same subgroup, so one representative per coset is enough.
// Throws errc::cap_exceeded when |g| > cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                    unsigned cap = kDefaultSubgroupCap);

// The complete subgroup list of D_n by closed form: <r^d> for each d | n and
// <r^d, r^i s> for each d | n, 0 <= i < d.  Exactly tau(n) + sigma(n)
// subgroups, each exactly once; member ids follow the FiniteGroup dihedral
// convention, so no group table is needed.
std::vector<Subgroup> dihedral_subgroup_listing(unsigned n);

OrderSpectrum order_spectrum(const FiniteGroup& g, const Subgroup& h);

}  // namespace ospec
