#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ospec/group.hpp"
#include "ospec/poset.hpp"
#include "ospec/subgroups.hpp"

namespace ospec {

// Equivalence class of subgroups sharing one order spectrum.
struct SpectrumClass {
  OrderSpectrum spectrum;
  std::vector<Subgroup> representatives;
};

// Poset of spectrum classes of a group, ordered by spectrum inclusion.
// Classes are sorted lexicographically by spectrum, which fixes the node
// numbering everywhere (poset, DOT, JSON).
struct SpectrumPoset {
  GroupSpec group;
  unsigned group_order = 1;
  std::vector<SpectrumClass> classes;
  FinitePoset poset;

  std::optional<int> class_index(const OrderSpectrum& s) const;
};

// Groups all subgroups (or, for dihedral specs, the closed-form subgroup
// listing) by spectrum.  Non-dihedral groups above the enumeration cap raise
// errc::cap_exceeded.
SpectrumPoset build_spectrum_poset(const FiniteGroup& g,
                                   unsigned cap = kDefaultSubgroupCap);

// Spectrum classes of D_n.  A class is named by a key (m, with_two) with
// m | n: its spectrum is divisors(m), plus 2 when with_two is set.
// Canonical form: an even m absorbs the flag, and the {1,2} class is always
// (m=1, with_two=true) — for even n the key (2,false) names the same
// spectrum and is folded into it.
struct DihedralClassKey {
  unsigned m = 1;
  bool with_two = false;
};

bool operator==(const DihedralClassKey& a, const DihedralClassKey& b);
bool operator<(const DihedralClassKey& a, const DihedralClassKey& b);

// Canonicalizes (m, with_two) for D_n; errc::validation unless m | n.
DihedralClassKey normalize_class_key(unsigned n, unsigned m, bool with_two);

OrderSpectrum key_spectrum(const DihedralClassKey& key);

bool key_has_two(const DihedralClassKey& key);

// All class keys of D_n, sorted.
std::vector<DihedralClassKey> dihedral_class_keys(unsigned n);

// Key of the class containing a spectrum-poset class spectrum of D_n.
DihedralClassKey key_of_spectrum(unsigned n, const OrderSpectrum& s);

// The spectrum poset of D_n computed entirely from class keys and the
// closed-form subgroup listing; no group table is materialized.  Agrees
// with build_spectrum_poset on every n where both run.
SpectrumPoset dihedral_spectrum_poset(unsigned n);

// Join and meet of two classes of D_n in closed form:
//   join = (lcm(m_a, m_b), 2 in either spectrum)
//   meet = (gcd(m_a, m_b), 2 in both spectra)
// both re-canonicalized.  Inputs must be canonical keys for n
// (errc::validation otherwise).
std::pair<DihedralClassKey, DihedralClassKey> closed_form_join_meet(
    unsigned n, const DihedralClassKey& a, const DihedralClassKey& b);

// Bound computation straight from the definition: the candidate join set is
// the intersection of all class spectra containing both inputs, the
// candidate meet set the union of all class spectra contained in both; a
// bound exists iff some class realizes the candidate set exactly.
struct LemmaJoinMeet {
  OrderSpectrum upper_intersection;  // candidate join spectrum
  OrderSpectrum lower_union;         // candidate meet spectrum
  std::optional<int> join, meet;     // realizing class indices
};

LemmaJoinMeet join_meet_via_lemma(const SpectrumPoset& p, int a, int b);

// Lattice isomorphism from the spectrum poset of D_n (n odd) onto
// divisor_lattice(n) x chain_lattice(2): the class (m, f) goes to the node
// (m, f).  Join/meet preservation is verified on every class pair before
// returning.  errc::domain for even n.
struct ProductIso {
  SpectrumPoset domain;
  FiniteLattice codomain;
  std::vector<int> class_to_node;
};

ProductIso phi_to_divisor_product(unsigned n);

// Closed-form pentagon witness in the spectrum poset of D_n, written
// n = 2^alpha * prod(p_i^t_i):
//   alpha >= 2, k >= 1:  {1,2}, {1,2,p1}, {1,2,4}, {1,2,p1,2p1}, T(4 p1)
//   alpha == 1, k >= 2:  {1,2}, {1,2,p}, {1,2,q,2q}, {1,2,p,2p}, T(2pq)
// with p1/p/q the smallest odd prime factors; nullopt for every other n.
// Order: bottom, chain-low, side, chain-high, top.  The witness is
// re-verified as an N5 sublattice before being returned.
std::optional<std::array<DihedralClassKey, 5>> figure_n5_witness(unsigned n);

}  // namespace ospec
