#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "ospec/group.hpp"
#include "ospec/numeric.hpp"

using namespace ospec;

namespace {

// Independent order oracle: walk powers directly.
unsigned naive_order(const FiniteGroup& g, unsigned x) {
  unsigned acc = x, k = 1;
  while (acc != 0) {
    acc = g.op(acc, x);
    ++k;
  }
  return k;
}

void check_group_axioms(const FiniteGroup& g) {
  REQUIRE(g.order <= 256);  // keep the exhaustive scan honest
  for (unsigned a = 0; a < g.order; ++a) {
    CHECK(g.op(0, a) == a);
    CHECK(g.op(a, 0) == a);
    CHECK(g.op(a, g.inv[a]) == 0);
    CHECK(g.op(g.inv[a], a) == 0);
  }
  for (unsigned a = 0; a < g.order; ++a)
    for (unsigned b = 0; b < g.order; ++b)
      for (unsigned c = 0; c < g.order; ++c)
        REQUIRE(g.op(g.op(a, b), c) == g.op(a, g.op(b, c)));
}

}  // namespace

TEST_CASE("factorization and divisor helpers") {
  Factorization f = factorize(360);  // 2^3 * 3^2 * 5
  CHECK(f.alpha == 3);
  REQUIRE(f.odd_primes.size() == 2);
  CHECK(f.odd_primes[0] == std::pair<unsigned, unsigned>{3, 2});
  CHECK(f.odd_primes[1] == std::pair<unsigned, unsigned>{5, 1});
  CHECK(f.odd_part() == 45);

  CHECK(divisors(12) == std::vector<unsigned>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<unsigned>{1});
  CHECK(divisor_count(100) == 9);
  CHECK(divisor_sum(100) == 217);
  CHECK(is_prime(2));
  CHECK(is_prime(61));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));  // 7 * 13
  CHECK_THROWS_AS(factorize(0), error);
}

TEST_CASE("spec strings parse and print") {
  CHECK(GroupSpec::parse("cyclic:12").to_string() == "cyclic:12");
  CHECK(GroupSpec::parse("dihedral:6").to_string() == "dihedral:6");
  CHECK(GroupSpec::parse("heisenberg:3").to_string() == "heisenberg:3");
  CHECK(GroupSpec::parse("elem-abelian:3:2").to_string() == "elem-abelian:3:2");
  CHECK(GroupSpec::parse("cayley:/tmp/t.txt").source == "/tmp/t.txt");
  CHECK_THROWS_AS(GroupSpec::parse("cyclic"), error);
  CHECK_THROWS_AS(GroupSpec::parse("cyclic:x"), error);
  CHECK_THROWS_AS(GroupSpec::parse("frobnicate:5"), error);
  CHECK_THROWS_AS(GroupSpec::parse("elem-abelian:3"), error);
}

TEST_CASE("construction basics") {
  FiniteGroup z1 = construct_group(GroupSpec::cyclic(1));
  CHECK(z1.order == 1);

  FiniteGroup d6 = construct_group(GroupSpec::dihedral(6));
  CHECK(d6.order == 12);
  CHECK(d6.name(0) == "e");
  CHECK(d6.name(1) == "r");
  CHECK(d6.name(6) == "s");
  CHECK(d6.name(8) == "r^2 s");

  FiniteGroup h3 = construct_group(GroupSpec::heisenberg(3));
  CHECK(h3.order == 27);
  CHECK(group_exponent(h3) == 3);

  FiniteGroup v4 = construct_group(GroupSpec::elementary_abelian(2, 2));
  CHECK(v4.order == 4);
  CHECK(group_exponent(v4) == 2);

  CHECK_THROWS_AS(construct_group(GroupSpec::cyclic(0)), error);
  CHECK_THROWS_AS(construct_group(GroupSpec::heisenberg(4)), error);
  CHECK_THROWS_AS(construct_group(GroupSpec::elementary_abelian(6, 2)), error);
  // order cap
  CHECK_THROWS_AS(construct_group(GroupSpec::cyclic(5000)), error);
  CHECK_THROWS_AS(construct_group(GroupSpec::dihedral(3000)), error);
  try {
    construct_group(GroupSpec::cyclic(5000));
  } catch (const error& e) {
    CHECK(e.code() == errc::cap_exceeded);
  }
}

TEST_CASE("group axioms hold exhaustively on a sample") {
  for (const GroupSpec& spec :
       {GroupSpec::cyclic(1), GroupSpec::cyclic(12), GroupSpec::dihedral(1),
        GroupSpec::dihedral(2), GroupSpec::dihedral(9), GroupSpec::heisenberg(3),
        GroupSpec::elementary_abelian(2, 4), GroupSpec::heisenberg(2),
        GroupSpec::product(GroupSpec::cyclic(4), GroupSpec::dihedral(3))})
    check_group_axioms(construct_group(spec));
}

TEST_CASE("dihedral composition matches the presentation") {
  // D_4: r^i s ids are 4..7
  FiniteGroup d4 = construct_group(GroupSpec::dihedral(4));
  CHECK(d4.op(1, 1) == 2);        // r * r
  CHECK(d4.op(1, 4) == 5);        // r * s = r s
  CHECK(d4.op(4, 1) == 7);        // s * r = r^-1 s
  CHECK(d4.op(5, 5) == 0);        // (r s)^2 = e
  CHECK(d4.op(4, 5) == 3);        // s * r s = r^-1
  CHECK(element_order(d4, 1) == 4);
  CHECK(element_order(d4, 2) == 2);
  for (unsigned i = 4; i < 8; ++i) CHECK(element_order(d4, i) == 2);
}

TEST_CASE("element orders agree with the naive oracle and Lagrange") {
  for (const GroupSpec& spec :
       {GroupSpec::dihedral(12), GroupSpec::cyclic(24), GroupSpec::heisenberg(3),
        GroupSpec::product(GroupSpec::cyclic(6), GroupSpec::cyclic(4))}) {
    FiniteGroup g = construct_group(spec);
    for (unsigned x = 0; x < g.order; ++x) {
      unsigned ord = element_order(g, x);
      CHECK(ord == naive_order(g, x));
      CHECK(g.order % ord == 0);
    }
  }
}

TEST_CASE("exponent") {
  CHECK(group_exponent(construct_group(GroupSpec::cyclic(12))) == 12);
  CHECK(group_exponent(construct_group(GroupSpec::heisenberg(3))) == 3);
  CHECK(group_exponent(construct_group(GroupSpec::heisenberg(2))) == 4);
  CHECK(group_exponent(construct_group(GroupSpec::elementary_abelian(5, 2))) == 5);
  // exponent of D_n is lcm(n, 2)
  for (unsigned n = 1; n <= 24; ++n)
    CHECK(group_exponent(construct_group(GroupSpec::dihedral(n))) ==
          std::lcm(n, 2u));
}

TEST_CASE("p-group detection") {
  auto info = p_group_info(construct_group(GroupSpec::cyclic(1)));
  REQUIRE(info.has_value());
  CHECK(info->trivial);

  info = p_group_info(construct_group(GroupSpec::dihedral(4)));  // order 8
  REQUIRE(info.has_value());
  CHECK(info->prime == 2);
  CHECK(!info->trivial);

  info = p_group_info(construct_group(GroupSpec::heisenberg(5)));
  REQUIRE(info.has_value());
  CHECK(info->prime == 5);

  CHECK(!p_group_info(construct_group(GroupSpec::dihedral(6))).has_value());
  CHECK(!p_group_info(construct_group(GroupSpec::cyclic(12))).has_value());
}

TEST_CASE("abelian detection") {
  CHECK(is_abelian(construct_group(GroupSpec::cyclic(9))));
  CHECK(is_abelian(construct_group(GroupSpec::dihedral(2))));  // Klein
  CHECK(!is_abelian(construct_group(GroupSpec::dihedral(3))));
  CHECK(!is_abelian(construct_group(GroupSpec::heisenberg(3))));
}

TEST_CASE("construction is deterministic") {
  FiniteGroup a = construct_group(GroupSpec::dihedral(10));
  FiniteGroup b = construct_group(GroupSpec::dihedral(10));
  CHECK(a.mul == b.mul);
  CHECK(a.element_names == b.element_names);
}

TEST_CASE("cayley table round trip") {
  FiniteGroup d3 = construct_group(GroupSpec::dihedral(3));
  std::ostringstream text;
  text << d3.order << "\n";
  for (unsigned a = 0; a < d3.order; ++a) {
    for (unsigned b = 0; b < d3.order; ++b)
      text << (b ? " " : "") << d3.op(a, b);
    text << "\n";
  }
  std::istringstream in(text.str());
  FiniteGroup back = group_from_cayley_text(in, "d3");
  CHECK(back.order == d3.order);
  CHECK(back.mul == d3.mul);  // identity already at 0: no relabeling
  CHECK(back.spec.kind == GroupKind::cayley_table);
}

TEST_CASE("cayley ingestion relabels a displaced identity") {
  // Z_3 written with the identity at position 2 (entry (a,b) = (a+b+1) mod 3).
  std::istringstream in("3\n1 2 0\n2 0 1\n0 1 2\n");
  FiniteGroup g = group_from_cayley_text(in, "shifted");
  CHECK(g.order == 3);
  for (unsigned x = 0; x < 3; ++x) {
    CHECK(g.op(0, x) == x);
    CHECK(g.op(x, 0) == x);
  }
  CHECK(element_order(g, 1) == 3);
  CHECK(g.name(0) == "2");  // original label preserved
}

TEST_CASE("cayley ingestion rejects bad tables") {
  // Latin square with no identity
  std::istringstream no_id("3\n1 0 2\n0 2 1\n2 1 0\n");
  try {
    group_from_cayley_text(no_id, "t");
    FAIL("expected validation error");
  } catch (const error& e) {
    CHECK(e.code() == errc::validation);
    CHECK(std::string(e.what()).find("no identity") != std::string::npos);
  }

  // Order-5 loop: Latin square with identity that is not associative.
  std::istringstream non_assoc(
      "5\n0 1 2 3 4\n1 0 3 4 2\n2 3 4 0 1\n3 4 1 2 0\n4 2 0 1 3\n");
  try {
    group_from_cayley_text(non_assoc, "t");
    FAIL("expected validation error");
  } catch (const error& e) {
    CHECK(e.code() == errc::validation);
    CHECK(std::string(e.what()).find("associative") != std::string::npos);
  }

  // Repeated entry in a row
  std::istringstream repeat("2\n0 1\n1 1\n");
  CHECK_THROWS_AS(group_from_cayley_text(repeat, "t"), error);

  // Truncated
  std::istringstream trunc("3\n0 1 2\n1 2\n");
  CHECK_THROWS_AS(group_from_cayley_text(trunc, "t"), error);

  // Out-of-range entry
  std::istringstream range("2\n0 1\n1 7\n");
  CHECK_THROWS_AS(group_from_cayley_text(range, "t"), error);
}

TEST_CASE("direct products") {
  FiniteGroup g = construct_group(
      GroupSpec::product(GroupSpec::cyclic(3), GroupSpec::cyclic(3)));
  CHECK(g.order == 9);
  CHECK(group_exponent(g) == 3);
  CHECK(is_abelian(g));
  FiniteGroup h = construct_group(
      GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::dihedral(3)));
  CHECK(h.order == 12);
  CHECK(!is_abelian(h));
  CHECK(group_exponent(h) == 6);
}
