// Exercises the extern-C surface end to end: handles, error codes, the
// thread-local error message, and string ownership.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "ospec.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ospec_string_free(s);
  return out;
}

struct GroupHandle {
  ospec_group_t* g = nullptr;
  ~GroupHandle() { ospec_group_free(g); }
};

struct PosetHandle {
  ospec_poset_t* p = nullptr;
  ~PosetHandle() { ospec_poset_free(p); }
};

struct ReportHandle {
  ospec_report_t* r = nullptr;
  ~ReportHandle() { ospec_report_free(r); }
};

void write_cyclic_table(const std::string& path, int n) {
  std::ofstream out(path);
  out << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? " " : "") << (i + j) % n;
    out << "\n";
  }
}

}  // namespace

TEST_CASE("version string") {
  CHECK(std::string(ospec_version()) == "1.0.0");
}

TEST_CASE("group handle basics") {
  GroupHandle g;
  REQUIRE(ospec_group_parse("dihedral:6", &g.g) == OSPEC_OK);
  REQUIRE(g.g != nullptr);
  CHECK(ospec_group_order(g.g) == 12);
  CHECK(ospec_group_exponent(g.g) == 6);

  char* desc = nullptr;
  REQUIRE(ospec_group_describe(g.g, &desc) == OSPEC_OK);
  CHECK(take(desc) == "dihedral:6");

  int prime = -1;
  CHECK(ospec_group_is_p_group(g.g, &prime) == 0);

  GroupHandle c9;
  REQUIRE(ospec_group_parse("cyclic:9", &c9.g) == OSPEC_OK);
  CHECK(ospec_group_is_p_group(c9.g, &prime) == 1);
  CHECK(prime == 3);

  GroupHandle c1;
  REQUIRE(ospec_group_parse("cyclic:1", &c1.g) == OSPEC_OK);
  CHECK(ospec_group_is_p_group(c1.g, &prime) == 1);
  CHECK(prime == 0);
}

TEST_CASE("element orders through the C API") {
  GroupHandle g;
  REQUIRE(ospec_group_parse("cyclic:12", &g.g) == OSPEC_OK);
  CHECK(ospec_group_element_order(g.g, 0) == 1);
  CHECK(ospec_group_element_order(g.g, 1) == 12);
  CHECK(ospec_group_element_order(g.g, 6) == 2);
  CHECK(ospec_group_element_order(g.g, 12) == OSPEC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ospec_last_error()).find("out of range") !=
        std::string::npos);
}

TEST_CASE("poset build and properties") {
  GroupHandle g;
  REQUIRE(ospec_group_parse("dihedral:6", &g.g) == OSPEC_OK);
  PosetHandle p;
  REQUIRE(ospec_poset_build(g.g, &p.p) == OSPEC_OK);
  CHECK(ospec_poset_class_count(p.p) == 5);

  int chain = -1, lattice = -1, modular = -1, distributive = -1;
  REQUIRE(ospec_poset_properties(p.p, &chain, &lattice, &modular,
                                 &distributive) == OSPEC_OK);
  CHECK(chain == 0);
  CHECK(lattice == 1);
  CHECK(modular == 1);
  CHECK(distributive == 1);

  char* s = nullptr;
  REQUIRE(ospec_poset_class_spectrum(p.p, 0, &s) == OSPEC_OK);
  CHECK(take(s) == "{1}");
  REQUIRE(ospec_poset_class_spectrum(p.p, 4, &s) == OSPEC_OK);
  CHECK(take(s) == "{1,3}");

  CHECK(ospec_poset_class_spectrum(p.p, 5, &s) == OSPEC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ospec_last_error()).size() > 0);

  char* summary = nullptr;
  REQUIRE(ospec_poset_summary(p.p, &summary) == OSPEC_OK);
  CHECK(take(summary).find("group: dihedral:6") != std::string::npos);
}

TEST_CASE("closed-form dihedral build matches the group-table build") {
  GroupHandle g;
  REQUIRE(ospec_group_parse("dihedral:12", &g.g) == OSPEC_OK);
  PosetHandle from_group;
  REQUIRE(ospec_poset_build(g.g, &from_group.p) == OSPEC_OK);
  PosetHandle closed;
  REQUIRE(ospec_poset_build_dihedral(12, &closed.p) == OSPEC_OK);

  CHECK(ospec_poset_class_count(closed.p) == 7);

  char* s = nullptr;
  REQUIRE(ospec_poset_to_dot(from_group.p, &s) == OSPEC_OK);
  std::string dot_a = take(s);
  REQUIRE(ospec_poset_to_dot(closed.p, &s) == OSPEC_OK);
  std::string dot_b = take(s);
  CHECK(dot_a == dot_b);

  REQUIRE(ospec_poset_to_json(closed.p, &s) == OSPEC_OK);
  std::string json_a = take(s);
  REQUIRE(ospec_poset_to_json(closed.p, &s) == OSPEC_OK);
  std::string json_b = take(s);
  CHECK(json_a == json_b);
  CHECK(json_a.find("\"group\": \"dihedral:12\"") != std::string::npos);
  CHECK(json_a.find("\"modular\": false") != std::string::npos);
}

TEST_CASE("poset isomorphism across handles") {
  PosetHandle d3, d5;
  REQUIRE(ospec_poset_build_dihedral(3, &d3.p) == OSPEC_OK);
  REQUIRE(ospec_poset_build_dihedral(5, &d5.p) == OSPEC_OK);

  int iso = -1;
  char* mapping = nullptr;
  REQUIRE(ospec_poset_iso(d3.p, d5.p, &iso, &mapping) == OSPEC_OK);
  CHECK(iso == 1);
  std::string text = take(mapping);
  CHECK(text.find("{1} -> {1}") != std::string::npos);

  GroupHandle c4;
  REQUIRE(ospec_group_parse("cyclic:4", &c4.g) == OSPEC_OK);
  PosetHandle chain;
  REQUIRE(ospec_poset_build(c4.g, &chain.p) == OSPEC_OK);
  REQUIRE(ospec_poset_iso(d3.p, chain.p, &iso, nullptr) == OSPEC_OK);
  CHECK(iso == 0);
}

TEST_CASE("error codes and last_error") {
  GroupHandle g;
  CHECK(ospec_group_parse("frobnicate:1", &g.g) == OSPEC_ERR_PARSE);
  CHECK(g.g == nullptr);
  CHECK(std::string(ospec_last_error()).find("unknown kind") !=
        std::string::npos);

  CHECK(ospec_group_parse("cyclic:5000", &g.g) == OSPEC_ERR_CAP_EXCEEDED);
  CHECK(ospec_group_parse("heisenberg:4", &g.g) ==
        OSPEC_ERR_INVALID_ARGUMENT);

  CHECK(ospec_group_parse(nullptr, &g.g) == OSPEC_ERR_INVALID_ARGUMENT);
  CHECK(ospec_group_parse("cyclic:3", nullptr) == OSPEC_ERR_INVALID_ARGUMENT);
  PosetHandle p;
  CHECK(ospec_poset_build(nullptr, &p.p) == OSPEC_ERR_INVALID_ARGUMENT);
  CHECK(ospec_poset_build_dihedral(0, &p.p) == OSPEC_ERR_INVALID_ARGUMENT);

  // A successful call clears the message.
  REQUIRE(ospec_group_parse("cyclic:3", &g.g) == OSPEC_OK);
  CHECK(std::string(ospec_last_error()).empty());
}

TEST_CASE("cayley tables load through the parser") {
  const std::string path = "capi_z5.txt";
  write_cyclic_table(path, 5);
  GroupHandle g;
  REQUIRE(ospec_group_parse(("cayley:" + path).c_str(), &g.g) == OSPEC_OK);
  CHECK(ospec_group_order(g.g) == 5);
  CHECK(ospec_group_exponent(g.g) == 5);
  std::remove(path.c_str());
}

TEST_CASE("verification runs") {
  ReportHandle r;
  REQUIRE(ospec_verify_run("no-m3", 12, nullptr, 0, &r.r) == OSPEC_OK);
  CHECK(ospec_report_all_passed(r.r) == 1);
  CHECK(ospec_report_complete(r.r) == 1);
  int passed = -1, failed = -1, skipped = -1;
  REQUIRE(ospec_report_counts(r.r, &passed, &failed, &skipped) == OSPEC_OK);
  CHECK(passed == 12);
  CHECK(failed == 0);
  CHECK(skipped == 0);

  char* s = nullptr;
  REQUIRE(ospec_report_summary(r.r, &s) == OSPEC_OK);
  CHECK(take(s).find("result: PASS") != std::string::npos);
  REQUIRE(ospec_report_to_json(r.r, &s) == OSPEC_OK);
  CHECK(take(s).find("\"theorem\": \"no-m3\"") != std::string::npos);

  ReportHandle bad;
  CHECK(ospec_verify_run("not-a-theorem", 0, nullptr, 0, &bad.r) ==
        OSPEC_ERR_INVALID_ARGUMENT);
  CHECK(bad.r == nullptr);
}

TEST_CASE("verification picks up atlas files") {
  const std::string path = "capi_z7.txt";
  write_cyclic_table(path, 7);
  const char* atlas[] = {path.c_str()};
  ReportHandle r;
  REQUIRE(ospec_verify_run("c2-classification", 0, atlas, 1, &r.r) ==
          OSPEC_OK);
  CHECK(ospec_report_all_passed(r.r) == 1);
  int passed = -1, failed = -1, skipped = -1;
  REQUIRE(ospec_report_counts(r.r, &passed, &failed, &skipped) == OSPEC_OK);
  CHECK(passed + failed + skipped == 7);
  std::remove(path.c_str());
}
