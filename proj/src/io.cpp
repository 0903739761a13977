#include "ospec/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace ospec {

using nlohmann::json;  // std::map-backed: keys come out sorted, emission is stable

std::string spectrum_to_string(const OrderSpectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

AnalysisResult analyze_group(const FiniteGroup& g, unsigned cap) {
  AnalysisResult a;
  a.poset = build_spectrum_poset(g, cap);
  a.chain = is_chain(a.poset.poset);
  LatticeCheck check = as_lattice(a.poset.poset);
  a.lattice = check.lattice.has_value();
  a.non_lattice_witness = check.witness;
  if (a.lattice) {
    LawVerdict laws = check_laws(*check.lattice);
    a.modular = laws.modular;
    a.distributive = laws.distributive;
    if (auto w = find_forbidden_sublattice(*check.lattice, ForbiddenShape::n5))
      a.n5 = std::vector<int>(w->begin(), w->end());
    if (auto w = find_forbidden_sublattice(*check.lattice, ForbiddenShape::m3))
      a.m3 = std::vector<int>(w->begin(), w->end());
  }
  return a;
}

std::string to_dot(const SpectrumPoset& p) {
  std::ostringstream out;
  out << "digraph pi_poset {\n";
  out << "  rankdir=BT;\n";
  for (int i = 0; i < p.poset.m; ++i)
    out << "  n" << i << " [label=\"" << p.poset.labels[i] << "\"];\n";
  for (const auto& [lo, hi] : p.poset.covers)
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

AnalysisDoc doc_of_analysis(const AnalysisResult& a) {
  AnalysisDoc d;
  d.group = a.poset.group.to_string();
  for (const SpectrumClass& c : a.poset.classes) {
    std::vector<std::vector<unsigned>> reps;
    for (const Subgroup& h : c.representatives) reps.push_back(h.members);
    d.classes.emplace_back(c.spectrum, std::move(reps));
  }
  d.hasse = a.poset.poset.covers;
  d.chain = a.chain;
  d.lattice = a.lattice;
  d.modular = a.modular;
  d.distributive = a.distributive;
  d.n5 = a.n5;
  d.m3 = a.m3;
  return d;
}

bool operator==(const AnalysisDoc& a, const AnalysisDoc& b) {
  return a.group == b.group && a.classes == b.classes && a.hasse == b.hasse &&
         a.chain == b.chain && a.lattice == b.lattice &&
         a.modular == b.modular && a.distributive == b.distributive &&
         a.n5 == b.n5 && a.m3 == b.m3;
}

std::string doc_to_json(const AnalysisDoc& d) {
  json root;
  root["group"] = d.group;
  json classes = json::array();
  for (const auto& [spectrum, reps] : d.classes) {
    json c;
    c["spectrum"] = spectrum;
    c["representatives"] = reps;
    classes.push_back(std::move(c));
  }
  root["classes"] = std::move(classes);
  json hasse = json::array();
  for (const auto& [lo, hi] : d.hasse) hasse.push_back(json::array({lo, hi}));
  root["hasse"] = std::move(hasse);
  root["properties"] = {{"chain", d.chain},
                        {"lattice", d.lattice},
                        {"modular", d.modular},
                        {"distributive", d.distributive}};
  root["witnesses"] = {{"n5", d.n5 ? json(*d.n5) : json(nullptr)},
                       {"m3", d.m3 ? json(*d.m3) : json(nullptr)}};
  return root.dump(2) + "\n";
}

std::string analysis_to_json(const AnalysisResult& a) {
  return doc_to_json(doc_of_analysis(a));
}

AnalysisDoc doc_from_json(const std::string& text) {
  json root = json::parse(text, nullptr, false);
  if (root.is_discarded()) fail(errc::parse, "analysis JSON: malformed document");
  AnalysisDoc d;
  try {
    d.group = root.at("group").get<std::string>();
    for (const json& c : root.at("classes")) {
      d.classes.emplace_back(c.at("spectrum").get<std::vector<unsigned>>(),
                             c.at("representatives")
                                 .get<std::vector<std::vector<unsigned>>>());
    }
    for (const json& e : root.at("hasse"))
      d.hasse.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    const json& props = root.at("properties");
    d.chain = props.at("chain").get<bool>();
    d.lattice = props.at("lattice").get<bool>();
    d.modular = props.at("modular").get<bool>();
    d.distributive = props.at("distributive").get<bool>();
    const json& w = root.at("witnesses");
    if (!w.at("n5").is_null()) d.n5 = w.at("n5").get<std::vector<int>>();
    if (!w.at("m3").is_null()) d.m3 = w.at("m3").get<std::vector<int>>();
  } catch (const json::exception& e) {
    fail(errc::parse, std::string("analysis JSON: ") + e.what());
  }
  return d;
}

namespace {

std::string witness_line(const SpectrumPoset& p, const std::optional<std::vector<int>>& w) {
  if (!w) return "none";
  std::string out;
  for (std::size_t i = 0; i < w->size(); ++i) {
    if (i) out += " ";
    out += p.poset.labels[(*w)[i]];
  }
  return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string analysis_summary(const AnalysisResult& a) {
  std::ostringstream out;
  out << "group: " << a.poset.group.to_string() << " (order "
      << a.poset.group_order << ")\n";
  out << "classes: " << a.poset.classes.size() << "\n";
  for (int i = 0; i < a.poset.poset.m; ++i)
    out << "  [" << i << "] " << a.poset.poset.labels[i] << "  ("
        << a.poset.classes[i].representatives.size() << " subgroup"
        << (a.poset.classes[i].representatives.size() == 1 ? "" : "s") << ")\n";
  out << "chain: " << yn(a.chain) << "\n";
  if (a.lattice) {
    out << "lattice: yes\n";
  } else {
    out << "lattice: no";
    if (a.non_lattice_witness)
      out << " (no bound for " << a.poset.poset.labels[a.non_lattice_witness->first]
          << ", " << a.poset.poset.labels[a.non_lattice_witness->second] << ")";
    out << "\n";
  }
  out << "modular: " << yn(a.modular) << "\n";
  out << "distributive: " << yn(a.distributive) << "\n";
  out << "N5 sublattice: " << witness_line(a.poset, a.n5) << "\n";
  out << "M3 sublattice: " << witness_line(a.poset, a.m3) << "\n";
  return out.str();
}

std::string report_summary(const VerificationReport& r) {
  std::ostringstream out;
  out << "theorem: " << to_string(r.theorem) << "\n";
  out << "cases: " << r.cases.size() << "  passed: " << r.passed()
      << "  failed: " << r.failed() << "  skipped: " << r.skipped() << "\n";
  if (!r.notes.empty()) out << "notes: " << r.notes << "\n";
  for (const CaseRecord& c : r.cases) {
    if (c.skipped)
      out << "  SKIP " << c.descriptor << " (" << c.computed << ")\n";
    else if (!c.pass)
      out << "  FAIL " << c.descriptor << ": predicted " << c.predicted
          << ", computed " << c.computed << "\n";
  }
  out << "result: "
      << (r.all_passed() ? (r.complete() ? "PASS" : "PASS (incomplete)")
                         : "FAIL")
      << "\n";
  return out.str();
}

std::string report_to_json(const VerificationReport& r) {
  json root;
  root["theorem"] = to_string(r.theorem);
  root["complete"] = r.complete();
  root["passed"] = r.passed();
  root["failed"] = r.failed();
  root["skipped"] = r.skipped();
  if (!r.notes.empty()) root["notes"] = r.notes;
  json cases = json::array();
  for (const CaseRecord& c : r.cases) {
    json e;
    e["case"] = c.descriptor;
    e["predicted"] = c.predicted;
    e["computed"] = c.computed;
    e["pass"] = c.pass;
    e["skipped"] = c.skipped;
    cases.push_back(std::move(e));
  }
  root["cases"] = std::move(cases);
  return root.dump(2) + "\n";
}

std::string iso_mapping_text(const SpectrumPoset& a, const SpectrumPoset& b,
                             const std::vector<int>& mapping) {
  std::ostringstream out;
  for (std::size_t i = 0; i < mapping.size(); ++i)
    out << a.poset.labels[i] << " -> " << b.poset.labels[mapping[i]] << "\n";
  return out.str();
}

}  // namespace ospec
