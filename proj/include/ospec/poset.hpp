#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ospec/error.hpp"

namespace ospec {

// Finite poset on nodes 0..m-1 with a dense order matrix and the Hasse
// diagram (transitive reduction).  Immutable once built.
struct FinitePoset {
  int m = 0;
  std::vector<std::string> labels;
  std::vector<char> leq_flat;                  // m*m, leq_flat[a*m+b] = a<=b
  std::vector<std::pair<int, int>> covers;     // (lo, hi), sorted

  bool leq(int a, int b) const { return leq_flat[a * m + b] != 0; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
};

// Validates reflexivity, antisymmetry and transitivity; a violation raises
// errc::validation naming the offending node, pair or triple.
FinitePoset build_poset(std::vector<std::string> labels,
                        const std::function<bool(int, int)>& leq);

struct Bounds {
  std::optional<int> lub;
  std::optional<int> glb;
};

// Least upper / greatest lower bound of {a, b}, when they exist.
Bounds bounds(const FinitePoset& p, int a, int b);

bool is_chain(const FinitePoset& p);

struct FiniteLattice {
  FinitePoset poset;
  std::vector<int> join_flat, meet_flat;  // m*m tables

  int size() const { return poset.m; }
  int join(int a, int b) const { return join_flat[a * poset.m + b]; }
  int meet(int a, int b) const { return meet_flat[a * poset.m + b]; }
};

struct LatticeCheck {
  std::optional<FiniteLattice> lattice;
  std::optional<std::pair<int, int>> witness;  // pair lacking a lub or glb
};

LatticeCheck as_lattice(const FinitePoset& p);

struct LawVerdict {
  bool modular = true;
  bool distributive = true;
  // First violating triple (a,b,c) in lexicographic order, iff the law fails.
  std::optional<std::array<int, 3>> modular_witness;
  std::optional<std::array<int, 3>> distributive_witness;
};

// Scans all triples: modular law  a<=c -> a v (b ^ c) = (a v b) ^ c,
// distributive law  a ^ (b v c) = (a ^ b) v (a ^ c).
LawVerdict check_laws(const FiniteLattice& l);

enum class ForbiddenShape { n5, m3 };

// Five nodes forming a sublattice isomorphic to the pentagon N5 or the
// diamond M3, if one exists.  Returned in role order:
//   N5: bottom, x, y, side, top   with bottom < x < y < top, side incomparable
//   M3: bottom, a, b, c, top      with pairwise-incomparable atoms a, b, c
// Candidates are derived from law-violating triples and re-verified against
// the shape definition before being returned (for any M3/N5 sublattice, the
// construction applied to its own middle triple reproduces it, so the scan
// is exhaustive); lattices of <= 12 nodes additionally fall back to a direct
// search over all 5-subsets.
std::optional<std::array<int, 5>> find_forbidden_sublattice(const FiniteLattice& l,
                                                            ForbiddenShape shape);

bool is_n5_sublattice(const FiniteLattice& l, const std::array<int, 5>& nodes);
bool is_m3_sublattice(const FiniteLattice& l, const std::array<int, 5>& nodes);

// Reference lattices.
FiniteLattice chain_lattice(int k);              // k >= 1 nodes
FiniteLattice divisor_lattice(unsigned n);       // divisors of n under |
FiniteLattice boolean_lattice(int k);            // subsets of {1..k}
FiniteLattice m_lattice(int k);                  // bottom, k >= 1 atoms, top
FiniteLattice n5_lattice();
FiniteLattice product_lattice(const FiniteLattice& a, const FiniteLattice& b);

inline constexpr int kIsoNodeCap = 256;

// Order isomorphism P -> Q as a node mapping, or nullopt.  Backtracking over
// signature-refined node classes; the returned mapping is re-checked to
// preserve the order relation in both directions.  When P and Q are the same
// poset the identity comes back.  Throws errc::cap_exceeded above
// kIsoNodeCap nodes.
std::optional<std::vector<int>> are_isomorphic(const FinitePoset& p,
                                               const FinitePoset& q);

}  // namespace ospec
