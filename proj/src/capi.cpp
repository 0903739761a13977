#define OSPEC_BUILD
#include "ospec.h"

#include <cstring>
#include <memory>
#include <string>

#include "ospec/group.hpp"
#include "ospec/io.hpp"
#include "ospec/poset.hpp"
#include "ospec/spectrum_poset.hpp"
#include "ospec/verify.hpp"

namespace {

thread_local std::string g_last_error;

int code_of(ospec::errc c) {
  switch (c) {
    case ospec::errc::invalid_argument: return OSPEC_ERR_INVALID_ARGUMENT;
    case ospec::errc::validation: return OSPEC_ERR_VALIDATION;
    case ospec::errc::cap_exceeded: return OSPEC_ERR_CAP_EXCEEDED;
    case ospec::errc::domain: return OSPEC_ERR_DOMAIN;
    case ospec::errc::parse: return OSPEC_ERR_PARSE;
    case ospec::errc::io: return OSPEC_ERR_IO;
  }
  return OSPEC_ERR_UNKNOWN;
}

// Every entry point funnels through here: exceptions become error codes and
// the thread-local message.
template <typename F>
int guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const ospec::error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OSPEC_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown error";
    return OSPEC_ERR_UNKNOWN;
  }
}

int set_invalid(const char* message) {
  g_last_error = message;
  return OSPEC_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct ospec_group_t {
  ospec::FiniteGroup group;
};

struct ospec_poset_t {
  ospec::AnalysisResult analysis;
};

struct ospec_report_t {
  ospec::VerificationReport report;
};

extern "C" {

const char* ospec_version(void) { return "1.0.0"; }

const char* ospec_last_error(void) { return g_last_error.c_str(); }

void ospec_string_free(char* s) { delete[] s; }

int ospec_group_parse(const char* spec, ospec_group_t** out) {
  if (!spec || !out) return set_invalid("ospec_group_parse: null argument");
  *out = nullptr;
  return guarded([&] {
    auto g = std::make_unique<ospec_group_t>();
    g->group = ospec::construct_group(ospec::GroupSpec::parse(spec));
    *out = g.release();
    return OSPEC_OK;
  });
}

void ospec_group_free(ospec_group_t* g) { delete g; }

int ospec_group_order(const ospec_group_t* g) {
  if (!g) return set_invalid("ospec_group_order: null group");
  return static_cast<int>(g->group.order);
}

int ospec_group_exponent(const ospec_group_t* g) {
  if (!g) return set_invalid("ospec_group_exponent: null group");
  return guarded([&] { return static_cast<int>(ospec::group_exponent(g->group)); });
}

int ospec_group_element_order(const ospec_group_t* g, int element) {
  if (!g) return set_invalid("ospec_group_element_order: null group");
  if (element < 0 || unsigned(element) >= g->group.order)
    return set_invalid("ospec_group_element_order: element id out of range");
  return guarded([&] {
    return static_cast<int>(ospec::element_order(g->group, unsigned(element)));
  });
}

int ospec_group_is_p_group(const ospec_group_t* g, int* prime_out) {
  if (!g) return set_invalid("ospec_group_is_p_group: null group");
  return guarded([&] {
    auto info = ospec::p_group_info(g->group);
    if (prime_out) *prime_out = info ? int(info->prime) : 0;
    return info ? 1 : 0;
  });
}

int ospec_group_describe(const ospec_group_t* g, char** out) {
  if (!g || !out) return set_invalid("ospec_group_describe: null argument");
  return guarded([&] {
    *out = copy_string(g->group.spec.to_string());
    return OSPEC_OK;
  });
}

int ospec_poset_build(const ospec_group_t* g, ospec_poset_t** out) {
  if (!g || !out) return set_invalid("ospec_poset_build: null argument");
  *out = nullptr;
  return guarded([&] {
    auto p = std::make_unique<ospec_poset_t>();
    p->analysis = ospec::analyze_group(g->group);
    *out = p.release();
    return OSPEC_OK;
  });
}

int ospec_poset_build_dihedral(long n, ospec_poset_t** out) {
  if (!out) return set_invalid("ospec_poset_build_dihedral: null output");
  if (n < 1) return set_invalid("ospec_poset_build_dihedral: n must be >= 1");
  *out = nullptr;
  return guarded([&] {
    auto p = std::make_unique<ospec_poset_t>();
    ospec::SpectrumPoset sp = ospec::dihedral_spectrum_poset(unsigned(n));
    // Run the same structural analysis as ospec_poset_build, reusing the
    // closed-form poset instead of a group table.
    ospec::AnalysisResult a;
    a.poset = std::move(sp);
    a.chain = ospec::is_chain(a.poset.poset);
    ospec::LatticeCheck check = ospec::as_lattice(a.poset.poset);
    a.lattice = check.lattice.has_value();
    a.non_lattice_witness = check.witness;
    if (a.lattice) {
      ospec::LawVerdict laws = ospec::check_laws(*check.lattice);
      a.modular = laws.modular;
      a.distributive = laws.distributive;
      if (auto w = ospec::find_forbidden_sublattice(*check.lattice,
                                                    ospec::ForbiddenShape::n5))
        a.n5 = std::vector<int>(w->begin(), w->end());
      if (auto w = ospec::find_forbidden_sublattice(*check.lattice,
                                                    ospec::ForbiddenShape::m3))
        a.m3 = std::vector<int>(w->begin(), w->end());
    }
    p->analysis = std::move(a);
    *out = p.release();
    return OSPEC_OK;
  });
}

void ospec_poset_free(ospec_poset_t* p) { delete p; }

int ospec_poset_class_count(const ospec_poset_t* p) {
  if (!p) return set_invalid("ospec_poset_class_count: null poset");
  return p->analysis.poset.poset.m;
}

int ospec_poset_properties(const ospec_poset_t* p, int* chain, int* lattice,
                           int* modular, int* distributive) {
  if (!p) return set_invalid("ospec_poset_properties: null poset");
  if (chain) *chain = p->analysis.chain;
  if (lattice) *lattice = p->analysis.lattice;
  if (modular) *modular = p->analysis.modular;
  if (distributive) *distributive = p->analysis.distributive;
  return OSPEC_OK;
}

int ospec_poset_class_spectrum(const ospec_poset_t* p, int index, char** out) {
  if (!p || !out) return set_invalid("ospec_poset_class_spectrum: null argument");
  if (index < 0 || index >= p->analysis.poset.poset.m)
    return set_invalid("ospec_poset_class_spectrum: index out of range");
  return guarded([&] {
    *out = copy_string(p->analysis.poset.poset.labels[index]);
    return OSPEC_OK;
  });
}

int ospec_poset_summary(const ospec_poset_t* p, char** out) {
  if (!p || !out) return set_invalid("ospec_poset_summary: null argument");
  return guarded([&] {
    *out = copy_string(ospec::analysis_summary(p->analysis));
    return OSPEC_OK;
  });
}

int ospec_poset_to_dot(const ospec_poset_t* p, char** out) {
  if (!p || !out) return set_invalid("ospec_poset_to_dot: null argument");
  return guarded([&] {
    *out = copy_string(ospec::to_dot(p->analysis.poset));
    return OSPEC_OK;
  });
}

int ospec_poset_to_json(const ospec_poset_t* p, char** out) {
  if (!p || !out) return set_invalid("ospec_poset_to_json: null argument");
  return guarded([&] {
    *out = copy_string(ospec::analysis_to_json(p->analysis));
    return OSPEC_OK;
  });
}

int ospec_poset_iso(const ospec_poset_t* a, const ospec_poset_t* b,
                    int* isomorphic, char** mapping_text) {
  if (!a || !b || !isomorphic) return set_invalid("ospec_poset_iso: null argument");
  return guarded([&] {
    auto map = ospec::are_isomorphic(a->analysis.poset.poset,
                                     b->analysis.poset.poset);
    *isomorphic = map.has_value() ? 1 : 0;
    if (map && mapping_text)
      *mapping_text = copy_string(
          ospec::iso_mapping_text(a->analysis.poset, b->analysis.poset, *map));
    return OSPEC_OK;
  });
}

int ospec_verify_run(const char* theorem_id, long max_n,
                     const char* const* atlas, size_t atlas_len,
                     ospec_report_t** out) {
  if (!theorem_id || !out) return set_invalid("ospec_verify_run: null argument");
  if (atlas_len > 0 && !atlas) return set_invalid("ospec_verify_run: null atlas");
  *out = nullptr;
  return guarded([&] {
    auto id = ospec::theorem_from_string(theorem_id);
    if (!id)
      ospec::fail(ospec::errc::invalid_argument,
                  std::string("unknown theorem id '") + theorem_id + "'");
    ospec::VerifyOptions opt;
    if (max_n > 0) opt.max_n = unsigned(max_n);
    for (size_t i = 0; i < atlas_len; ++i) {
      if (!atlas[i])
        ospec::fail(ospec::errc::invalid_argument, "null atlas path");
      opt.atlas_paths.emplace_back(atlas[i]);
    }
    auto r = std::make_unique<ospec_report_t>();
    r->report = ospec::verify_theorem(*id, opt);
    *out = r.release();
    return OSPEC_OK;
  });
}

void ospec_report_free(ospec_report_t* r) { delete r; }

int ospec_report_all_passed(const ospec_report_t* r) {
  if (!r) return set_invalid("ospec_report_all_passed: null report");
  return r->report.all_passed() ? 1 : 0;
}

int ospec_report_complete(const ospec_report_t* r) {
  if (!r) return set_invalid("ospec_report_complete: null report");
  return r->report.complete() ? 1 : 0;
}

int ospec_report_counts(const ospec_report_t* r, int* passed, int* failed,
                        int* skipped) {
  if (!r) return set_invalid("ospec_report_counts: null report");
  if (passed) *passed = r->report.passed();
  if (failed) *failed = r->report.failed();
  if (skipped) *skipped = r->report.skipped();
  return OSPEC_OK;
}

int ospec_report_summary(const ospec_report_t* r, char** out) {
  if (!r || !out) return set_invalid("ospec_report_summary: null argument");
  return guarded([&] {
    *out = copy_string(ospec::report_summary(r->report));
    return OSPEC_OK;
  });
}

int ospec_report_to_json(const ospec_report_t* r, char** out) {
  if (!r || !out) return set_invalid("ospec_report_to_json: null argument");
  return guarded([&] {
    *out = copy_string(ospec::report_to_json(r->report));
    return OSPEC_OK;
  });
}

}  // extern "C"
