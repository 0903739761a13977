// Acceptance gate.  Prints exactly one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.  argv[1]: path to the ospec CLI
// binary (used by the determinism criterion).
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ospec/group.hpp"
#include "ospec/io.hpp"
#include "ospec/poset.hpp"
#include "ospec/spectrum_poset.hpp"
#include "ospec/subgroups.hpp"
#include "ospec/verify.hpp"

namespace {

int g_failures = 0;

void criterion(int k, const std::string& what,
               const std::function<bool(std::string*)>& body) {
  bool ok = false;
  std::string detail;
  try {
    ok = body(&detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  std::cout << (ok ? "PASS" : "FAIL") << " Criterion " << k << ": " << what;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

// A theorem run counts only when every case passed and none was skipped.
bool clean_run(ospec::TheoremId id, std::optional<unsigned> max_n,
               std::string* detail) {
  ospec::VerifyOptions opt;
  opt.max_n = max_n;
  ospec::VerificationReport r = ospec::verify_theorem(id, opt);
  if (r.all_passed() && r.complete()) return true;
  *detail = r.all_passed() ? std::to_string(r.skipped()) + " case(s) skipped"
                           : r.first_failure();
  return false;
}

std::string read_file(const std::string& path, bool* ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    *ok = false;
    return "";
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& cli, const std::string& args,
            const std::string& out_path) {
  std::string cmd = "\"" + cli + "\" " + args + " >" + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-ospec-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  namespace o = ospec;

  criterion(1, "closed-form dihedral subgroup listing matches brute force, n <= 24",
            [](std::string* d) {
              if (!clean_run(o::TheoremId::listing_vs_bruteforce, 24u, d))
                return false;
              if (o::dihedral_subgroup_listing(6).size() != 16) {
                *d = "listing count for n=6 is not 16";
                return false;
              }
              return true;
            });

  criterion(2, "spectrum poset is a chain exactly for p-groups; 2-power dihedral chains have length alpha+1",
            [](std::string* d) {
              return clean_run(o::TheoremId::chain_iff_p_group, std::nullopt, d);
            });

  criterion(3, "two-class posets occur exactly for the predicted groups",
            [](std::string* d) {
              return clean_run(o::TheoremId::c2_classification, std::nullopt, d);
            });

  criterion(4, "cyclic posets: tau(n) classes, isomorphic to the subgroup lattice, n <= 200",
            [](std::string* d) {
              return clean_run(o::TheoremId::cyclic_iso, 200u, d);
            });

  criterion(5, "dihedral posets are lattices; closed-form, generic and definition-level joins/meets agree, n <= 150",
            [](std::string* d) {
              return clean_run(o::TheoremId::dihedral_lattice, 150u, d);
            });

  criterion(6, "odd dihedral posets are isomorphic to T(n) x C_2 with 2*tau(n) classes, n <= 315",
            [](std::string* d) {
              return clean_run(o::TheoremId::product_iso, 315u, d);
            });

  criterion(7, "no diamond sublattice in any dihedral poset; modular <=> distributive, n <= 150",
            [](std::string* d) {
              return clean_run(o::TheoremId::no_m3, 150u, d);
            });

  criterion(8, "pentagon present exactly when predicted and witnesses re-verify, n <= 150; n=12 witness spectra frozen",
            [](std::string* d) {
              if (!clean_run(o::TheoremId::n5_characterization, 150u, d))
                return false;
              auto w = o::figure_n5_witness(12);
              if (!w) {
                *d = "no pentagon witness for n=12";
                return false;
              }
              const char* expected[] = {"{1,2}", "{1,2,3}", "{1,2,4}",
                                        "{1,2,3,6}", "{1,2,3,4,6,12}"};
              for (int i = 0; i < 5; ++i) {
                std::string got = o::spectrum_to_string(o::key_spectrum((*w)[i]));
                if (got != expected[i]) {
                  *d = "n=12 witness slot " + std::to_string(i) + " is " + got +
                       ", expected " + expected[i];
                  return false;
                }
              }
              return true;
            });

  criterion(9, "dihedral poset modular exactly for n in {2^a} u {odd} u {2p^t}, n <= 150",
            [](std::string* d) {
              return clean_run(o::TheoremId::modular_classification, 150u, d);
            });

  criterion(10, "fixtures: D_15 ~ B_3 (8 nodes), D_p ~ M_2 for p=3,5,7, D_9 ~ T(12); M_2 = bottom + two incomparable atoms + top (4 nodes)",
            [](std::string* d) {
              o::FiniteLattice b3 = o::boolean_lattice(3);
              if (b3.poset.m != 8) {
                *d = "B_3 reference does not have 8 nodes";
                return false;
              }
              auto iso_to = [&](unsigned n, const o::FiniteLattice& ref,
                                const std::string& name) {
                if (o::are_isomorphic(o::dihedral_spectrum_poset(n).poset,
                                      ref.poset))
                  return true;
                *d = "D_" + std::to_string(n) + " is not isomorphic to " + name;
                return false;
              };
              if (!iso_to(15, b3, "B_3")) return false;
              o::FiniteLattice m2 = o::m_lattice(2);
              for (unsigned p : {3u, 5u, 7u})
                if (!iso_to(p, m2, "M_2")) return false;
              return iso_to(9, o::divisor_lattice(12), "T(12)");
            });

  criterion(11, "CLI analyze output byte-identical across runs; JSON round-trip lossless",
            [&cli](std::string* d) {
              const std::string stem1 = "accept_run1", stem2 = "accept_run2";
              auto run = [&](const std::string& stem) {
                return run_cli(cli,
                               "analyze dihedral:12 --dot " + stem + ".dot" +
                                   " --json " + stem + ".json",
                               stem + ".out");
              };
              bool ok = true;
              if (run(stem1) != 0 || run(stem2) != 0) {
                *d = "CLI exited nonzero";
                ok = false;
              }
              std::string dot1, dot2, json1, json2, out1, out2;
              if (ok) {
                dot1 = read_file(stem1 + ".dot", &ok);
                dot2 = read_file(stem2 + ".dot", &ok);
                json1 = read_file(stem1 + ".json", &ok);
                json2 = read_file(stem2 + ".json", &ok);
                out1 = read_file(stem1 + ".out", &ok);
                out2 = read_file(stem2 + ".out", &ok);
                if (!ok) *d = "missing CLI output file";
              }
              if (ok && (dot1 != dot2 || json1 != json2 || out1 != out2)) {
                *d = "two identical CLI runs produced different bytes";
                ok = false;
              }
              if (ok) {
                o::AnalysisResult fresh = o::analyze_group(
                    o::construct_group(o::GroupSpec::dihedral(12)));
                if (dot1 != o::to_dot(fresh.poset)) {
                  *d = "CLI DOT differs from library DOT";
                  ok = false;
                } else if (o::doc_to_json(o::doc_from_json(json1)) != json1) {
                  *d = "JSON re-emission changed bytes";
                  ok = false;
                } else if (!(o::doc_from_json(json1) ==
                             o::doc_of_analysis(fresh))) {
                  *d = "parsed JSON does not match the source analysis";
                  ok = false;
                }
              }
              for (const std::string& stem : {stem1, stem2})
                for (const char* ext : {".dot", ".json", ".out"})
                  std::remove((stem + ext).c_str());
              return ok;
            });

  if (g_failures == 0) {
    std::cout << "acceptance: PASS (11/11)\n";
    return 0;
  }
  std::cout << "acceptance: FAIL (" << (11 - g_failures) << "/11 passed)\n";
  return 1;
}
