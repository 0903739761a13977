// ospec command-line front end.  Talks to the library exclusively through
// the C API in ospec.h.
//
// Exit codes: 0 success / all checks passed, 1 verification failure (or
// posets not isomorphic), 2 usage or input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ospec.h"

namespace {

struct StringOut {
  char* s = nullptr;
  ~StringOut() { ospec_string_free(s); }
};

[[noreturn]] void die_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(2);
}

void check(int rc, const char* what) {
  if (rc < 0) die_usage(std::string(what) + ": " + ospec_last_error());
}

using GroupHandle = std::unique_ptr<ospec_group_t, decltype(&ospec_group_free)>;
using PosetHandle = std::unique_ptr<ospec_poset_t, decltype(&ospec_poset_free)>;
using ReportHandle = std::unique_ptr<ospec_report_t, decltype(&ospec_report_free)>;

PosetHandle build_poset(const std::string& spec) {
  ospec_group_t* g = nullptr;
  check(ospec_group_parse(spec.c_str(), &g), "group");
  GroupHandle group(g, ospec_group_free);
  ospec_poset_t* p = nullptr;
  check(ospec_poset_build(group.get(), &p), "poset");
  return PosetHandle(p, ospec_poset_free);
}

void write_file(const std::string& path, const char* content, const char* what) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content) || !out.flush())
    die_usage(std::string("cannot write ") + what + " file '" + path + "'");
}

int run_analyze(const std::string& spec, const std::string& dot_path,
                const std::string& json_path) {
  PosetHandle poset = build_poset(spec);
  StringOut summary;
  check(ospec_poset_summary(poset.get(), &summary.s), "summary");
  std::cout << summary.s;
  if (!dot_path.empty()) {
    StringOut dot;
    check(ospec_poset_to_dot(poset.get(), &dot.s), "dot");
    write_file(dot_path, dot.s, "dot");
  }
  if (!json_path.empty()) {
    StringOut json;
    check(ospec_poset_to_json(poset.get(), &json.s), "json");
    write_file(json_path, json.s, "json");
  }
  return 0;
}

int run_verify(const std::string& theorem, long max_n,
               const std::vector<std::string>& atlas) {
  std::vector<const char*> paths;
  for (const std::string& p : atlas) paths.push_back(p.c_str());
  ospec_report_t* raw = nullptr;
  check(ospec_verify_run(theorem.c_str(), max_n,
                         paths.empty() ? nullptr : paths.data(), paths.size(),
                         &raw),
        "verify");
  ReportHandle report(raw, ospec_report_free);
  StringOut summary;
  check(ospec_report_summary(report.get(), &summary.s), "report");
  std::cout << summary.s;
  return ospec_report_all_passed(report.get()) == 1 &&
                 ospec_report_complete(report.get()) == 1
             ? 0
             : 1;
}

int run_iso(const std::string& spec_a, const std::string& spec_b) {
  PosetHandle a = build_poset(spec_a);
  PosetHandle b = build_poset(spec_b);
  int isomorphic = 0;
  StringOut mapping;
  check(ospec_poset_iso(a.get(), b.get(), &isomorphic, &mapping.s), "iso");
  std::cout << "isomorphic: " << (isomorphic ? "yes" : "no") << "\n";
  if (isomorphic && mapping.s) std::cout << mapping.s;
  return isomorphic ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-spectrum poset toolkit"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  std::string spec, dot_path, json_path;
  auto* analyze = app.add_subcommand(
      "analyze", "build and analyze the spectrum poset of one group");
  analyze->add_option("spec", spec, "group spec, e.g. dihedral:12")->required();
  analyze->add_option("--dot", dot_path, "write the Hasse diagram as DOT");
  analyze->add_option("--json", json_path, "write the full analysis as JSON");

  std::string theorem;
  long max_n = 0;
  std::vector<std::string> atlas;
  auto* verify = app.add_subcommand("verify", "check one theorem over its range");
  verify->add_option("theorem", theorem,
                     "chain-iff-p-group | c2-classification | cyclic-iso | "
                     "dihedral-lattice | product-iso | no-m3 | "
                     "n5-characterization | modular-classification | "
                     "listing-vs-bruteforce")
      ->required();
  verify->add_option("--max-n", max_n, "override the default range");
  verify->add_option("--atlas", atlas, "extra cayley-table file for the group atlas");

  std::string spec_a, spec_b;
  auto* iso = app.add_subcommand("iso", "compare two spectrum posets");
  iso->add_option("specA", spec_a, "first group spec")->required();
  iso->add_option("specB", spec_b, "second group spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (analyze->parsed()) return run_analyze(spec, dot_path, json_path);
  if (verify->parsed()) return run_verify(theorem, max_n, atlas);
  return run_iso(spec_a, spec_b);
}
