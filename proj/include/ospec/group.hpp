#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ospec/error.hpp"

namespace ospec {

enum class GroupKind {
  cyclic,              // Z_n
  dihedral,            // D_n, order 2n
  heisenberg,          // upper unitriangular 3x3 over Z_p, order p^3
  elementary_abelian,  // (Z_p)^k
  direct_product,
  cayley_table,        // ingested from text
};

struct GroupSpec {
  GroupKind kind = GroupKind::cyclic;
  unsigned n = 0;  // cyclic/dihedral parameter
  unsigned p = 0;  // prime for heisenberg / elementary_abelian
  unsigned k = 0;  // rank for elementary_abelian
  std::shared_ptr<GroupSpec> left, right;  // direct_product factors
  std::string source;                      // cayley_table path or tag

  std::string to_string() const;

  // Parses "cyclic:N" | "dihedral:N" | "heisenberg:P" | "elem-abelian:P:K" |
  // "cayley:PATH".  Throws errc::parse / errc::invalid_argument.
  static GroupSpec parse(const std::string& text);

  static GroupSpec cyclic(unsigned n);
  static GroupSpec dihedral(unsigned n);
  static GroupSpec heisenberg(unsigned p);
  static GroupSpec elementary_abelian(unsigned p, unsigned k);
  static GroupSpec product(GroupSpec a, GroupSpec b);
};

// Finite group as a complete multiplication table.  Element ids are
// 0..order-1 and 0 is always the identity.  Immutable once constructed.
//
// Dihedral convention: id i < n is the rotation r^i, id n+i is the
// reflection r^i s.
struct FiniteGroup {
  unsigned order = 1;
  std::vector<unsigned> mul;  // row-major order x order
  std::vector<unsigned> inv;
  GroupSpec spec;
  std::vector<std::string> element_names;

  unsigned op(unsigned a, unsigned b) const { return mul[a * order + b]; }
  unsigned identity() const { return 0; }
  const std::string& name(unsigned g) const { return element_names[g]; }
};

inline constexpr unsigned kDefaultOrderCap = 4096;

// Builds the multiplication table for a spec.  Throws errc::invalid_argument
// on bad parameters (e.g. non-prime p), errc::cap_exceeded when the order
// would exceed max_order, errc::io / errc::parse / errc::validation for
// cayley_table sources.
FiniteGroup construct_group(const GroupSpec& spec,
                            unsigned max_order = kDefaultOrderCap);

// Cayley-table text: first line N, then N lines of N whitespace-separated
// element ids; entry (row g, column h) is g*h.  The table is validated
// (identity, latin rows/columns, two-sided inverses, full associativity,
// with the offending pair/triple named on failure) and relabeled so the
// identity gets id 0.  Element names keep the original ids.
FiniteGroup group_from_cayley_text(std::istream& in, const std::string& source_name);
FiniteGroup group_from_cayley_file(const std::string& path);

unsigned element_order(const FiniteGroup& g, unsigned x);

// lcm of all element orders
unsigned group_exponent(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);

struct PGroupInfo {
  unsigned prime = 0;    // 0 for the trivial group
  bool trivial = false;  // |G| = 1: counts as a p-group for every prime
};

// Engaged iff |G| is a prime power (or 1).
std::optional<PGroupInfo> p_group_info(const FiniteGroup& g);

}  // namespace ospec
