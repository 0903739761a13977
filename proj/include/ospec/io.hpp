#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ospec/poset.hpp"
#include "ospec/spectrum_poset.hpp"
#include "ospec/verify.hpp"

namespace ospec {

// Full analysis of one group's spectrum poset: structural verdicts plus
// forbidden-sublattice witnesses (class index lists in role order).
struct AnalysisResult {
  SpectrumPoset poset;
  bool chain = false;
  bool lattice = false;
  std::optional<std::pair<int, int>> non_lattice_witness;
  bool modular = false;
  bool distributive = false;
  std::optional<std::vector<int>> n5;
  std::optional<std::vector<int>> m3;
};

AnalysisResult analyze_group(const FiniteGroup& g,
                             unsigned cap = kDefaultSubgroupCap);

std::string spectrum_to_string(const OrderSpectrum& s);  // "{1,2,3}"

// Deterministic DOT: digraph "pi_poset", nodes in class order (classes are
// sorted by spectrum), edges along Hasse covers bottom -> top, sorted.
std::string to_dot(const SpectrumPoset& p);

// JSON schema:
// { "group": spec-string,
//   "classes": [ { "spectrum": [..], "representatives": [[element ids]] } ],
//   "hasse": [[lo, hi]],
//   "properties": { "chain", "lattice", "modular", "distributive" },
//   "witnesses": { "n5": [class indices] | null, "m3": ... | null } }
// Emission is byte-deterministic (sorted keys, fixed indentation).
std::string analysis_to_json(const AnalysisResult& a);

// Parsed form of the JSON document, for round-trip checks.
struct AnalysisDoc {
  std::string group;
  std::vector<std::pair<std::vector<unsigned>, std::vector<std::vector<unsigned>>>> classes;
  std::vector<std::pair<int, int>> hasse;
  bool chain = false, lattice = false, modular = false, distributive = false;
  std::optional<std::vector<int>> n5, m3;
};

bool operator==(const AnalysisDoc& a, const AnalysisDoc& b);

AnalysisDoc doc_of_analysis(const AnalysisResult& a);
AnalysisDoc doc_from_json(const std::string& text);  // errc::parse on bad input
std::string doc_to_json(const AnalysisDoc& d);       // same bytes as analysis_to_json

std::string analysis_summary(const AnalysisResult& a);

std::string report_summary(const VerificationReport& r);
std::string report_to_json(const VerificationReport& r);

// Human-readable class-to-class mapping for an order isomorphism.
std::string iso_mapping_text(const SpectrumPoset& a, const SpectrumPoset& b,
                             const std::vector<int>& mapping);

}  // namespace ospec
