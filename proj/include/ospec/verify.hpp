#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ospec/group.hpp"
#include "ospec/spectrum_poset.hpp"

namespace ospec {

enum class TheoremId {
  chain_iff_p_group,
  c2_classification,
  cyclic_iso,
  dihedral_lattice,
  product_iso,
  no_m3,
  n5_characterization,
  modular_classification,
  listing_vs_bruteforce,
};

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string& name);
std::vector<TheoremId> all_theorems();

// Predictions are computed from the case descriptor alone (factorizations,
// group arithmetic, subgroup scans) and never look at a computed class
// poset; verification recomputes the same facts from first principles and
// compares.

// Spectrum poset of D_n is modular iff n is a power of two, odd, or twice an
// odd prime power.
bool predict_dihedral_modular(unsigned n);

// N5 appears in the spectrum poset of D_n iff (alpha >= 2 and some odd prime
// divides n) or (alpha == 1 and n has >= 2 distinct odd prime factors).
bool predict_dihedral_n5(unsigned n);

// Chain <=> p-group (the trivial group counts as a p-group).
bool predict_chain(const FiniteGroup& g);

// Two-class poset <=> G is cyclic of prime order, elementary abelian, or of
// prime exponent p with a non-abelian subgroup of order p^3 and exponent p
// (detected by subgroup scan).
bool predict_two_classes(const FiniteGroup& g);

// Always true on odd n; errc::domain on even n.
bool predict_product_iso(unsigned n);

struct CaseRecord {
  std::string descriptor;
  std::string predicted;
  std::string computed;
  bool pass = false;
  bool skipped = false;  // enumeration cap prevented the computation
};

struct VerificationReport {
  TheoremId theorem = TheoremId::chain_iff_p_group;
  std::vector<CaseRecord> cases;
  std::string notes;

  int passed() const;
  int failed() const;
  int skipped() const;
  bool complete() const { return skipped() == 0; }
  bool all_passed() const { return failed() == 0; }
  std::string first_failure() const;
};

struct VerifyOptions {
  std::optional<unsigned> max_n;         // overrides the default range
  std::vector<std::string> atlas_paths;  // extra cayley-table groups
  unsigned subgroup_cap = kDefaultSubgroupCap;
};

// Runs one theorem check over its default range (or max_n).  A case whose
// computation exceeds an enumeration cap is recorded as skipped, leaving the
// report marked incomplete rather than failed.
VerificationReport verify_theorem(TheoremId id, const VerifyOptions& opt = {});

}  // namespace ospec
