#include "ospec/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ospec/numeric.hpp"

namespace ospec {

namespace {

unsigned checked_order(unsigned long long order, unsigned max_order,
                       const std::string& what) {
  if (order == 0) fail(errc::invalid_argument, what + ": empty group");
  if (order > max_order)
    fail(errc::cap_exceeded, what + ": order " + std::to_string(order) +
                                 " exceeds cap " + std::to_string(max_order));
  return static_cast<unsigned>(order);
}

// Derives inverses and checks the table is a group table apart from
// associativity (which built-in constructions guarantee; cayley ingestion
// checks it separately).
void finalize(FiniteGroup& g) {
  const unsigned n = g.order;
  for (unsigned x = 0; x < n; ++x) {
    if (g.op(0, x) != x || g.op(x, 0) != x)
      fail(errc::validation,
           "element 0 is not an identity against element " + std::to_string(x));
  }
  for (unsigned a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (unsigned b = 0; b < n; ++b) {
      unsigned r = g.op(a, b), c = g.op(b, a);
      if (r >= n || c >= n)
        fail(errc::validation, "table entry out of range at row " + std::to_string(a));
      if (row[r]++)
        fail(errc::validation, "row " + std::to_string(a) +
                                   " repeats element " + std::to_string(r));
      if (col[c]++)
        fail(errc::validation, "column " + std::to_string(a) +
                                   " repeats element " + std::to_string(c));
    }
  }
  g.inv.assign(n, 0);
  for (unsigned a = 0; a < n; ++a) {
    unsigned left = n, right = n;
    for (unsigned b = 0; b < n; ++b) {
      if (g.op(a, b) == 0) right = b;
      if (g.op(b, a) == 0) left = b;
    }
    if (left != right || left == n)
      fail(errc::validation,
           "element " + std::to_string(a) + " lacks a two-sided inverse");
    g.inv[a] = left;
  }
  if (g.element_names.empty()) {
    g.element_names.resize(n);
    for (unsigned a = 0; a < n; ++a) g.element_names[a] = std::to_string(a);
  }
}

FiniteGroup make_cyclic(unsigned n, const GroupSpec& spec) {
  FiniteGroup g;
  g.order = n;
  g.spec = spec;
  g.mul.resize(std::size_t(n) * n);
  g.element_names.resize(n);
  for (unsigned a = 0; a < n; ++a) {
    g.element_names[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
    for (unsigned b = 0; b < n; ++b) g.mul[a * n + b] = (a + b) % n;
  }
  finalize(g);
  return g;
}

// ids: i < n is r^i, n+i is r^i s.
FiniteGroup make_dihedral(unsigned n, const GroupSpec& spec) {
  FiniteGroup g;
  g.order = 2 * n;
  g.spec = spec;
  g.mul.resize(std::size_t(g.order) * g.order);
  g.element_names.resize(g.order);
  auto rot = [&](unsigned i) { return i % n; };
  for (unsigned i = 0; i < n; ++i) {
    g.element_names[i] = i == 0 ? "e" : (i == 1 ? "r" : "r^" + std::to_string(i));
    g.element_names[n + i] =
        i == 0 ? "s" : (i == 1 ? "r s" : "r^" + std::to_string(i) + " s");
  }
  for (unsigned a = 0; a < g.order; ++a) {
    for (unsigned b = 0; b < g.order; ++b) {
      bool fa = a >= n, fb = b >= n;
      unsigned i = fa ? a - n : a, j = fb ? b - n : b;
      unsigned out;
      if (!fa && !fb) out = rot(i + j);                    // r^i r^j
      else if (!fa) out = n + rot(i + j);                  // r^i (r^j s)
      else if (!fb) out = n + rot(i + n - rot(j));         // (r^i s) r^j = r^(i-j) s
      else out = rot(i + n - rot(j));                      // (r^i s)(r^j s) = r^(i-j)
      g.mul[a * g.order + b] = out;
    }
  }
  finalize(g);
  return g;
}

// Triples (a,b,c) over Z_p with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'),
// the unitriangular 3x3 model; id = a*p^2 + b*p + c.
FiniteGroup make_heisenberg(unsigned p, const GroupSpec& spec) {
  FiniteGroup g;
  g.order = p * p * p;
  g.spec = spec;
  g.mul.resize(std::size_t(g.order) * g.order);
  g.element_names.resize(g.order);
  auto enc = [&](unsigned a, unsigned b, unsigned c) { return (a * p + b) * p + c; };
  for (unsigned a = 0; a < p; ++a)
    for (unsigned b = 0; b < p; ++b)
      for (unsigned c = 0; c < p; ++c) {
        g.element_names[enc(a, b, c)] = "(" + std::to_string(a) + "," +
                                        std::to_string(b) + "," +
                                        std::to_string(c) + ")";
        for (unsigned a2 = 0; a2 < p; ++a2)
          for (unsigned b2 = 0; b2 < p; ++b2)
            for (unsigned c2 = 0; c2 < p; ++c2)
              g.mul[enc(a, b, c) * g.order + enc(a2, b2, c2)] =
                  enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
      }
  finalize(g);
  return g;
}

FiniteGroup make_elementary_abelian(unsigned p, unsigned k, unsigned order,
                                    const GroupSpec& spec) {
  FiniteGroup g;
  g.order = order;
  g.spec = spec;
  g.mul.resize(std::size_t(order) * order);
  g.element_names.resize(order);
  auto digits = [&](unsigned x) {
    std::string s = "(";
    for (unsigned d = 0; d < k; ++d) {
      if (d) s += ",";
      s += std::to_string(x % p);
      x /= p;
    }
    return s + ")";
  };
  for (unsigned a = 0; a < order; ++a) {
    g.element_names[a] = digits(a);
    for (unsigned b = 0; b < order; ++b) {
      unsigned x = a, y = b, pw = 1, out = 0;
      for (unsigned d = 0; d < k; ++d) {
        out += ((x + y) % p) * pw;
        x /= p;
        y /= p;
        pw *= p;
      }
      g.mul[a * order + b] = out;
    }
  }
  finalize(g);
  return g;
}

FiniteGroup make_product(const FiniteGroup& a, const FiniteGroup& b,
                         const GroupSpec& spec, unsigned order) {
  FiniteGroup g;
  g.order = order;
  g.spec = spec;
  g.mul.resize(std::size_t(order) * order);
  g.element_names.resize(order);
  auto enc = [&](unsigned x, unsigned y) { return x * b.order + y; };
  for (unsigned x = 0; x < a.order; ++x)
    for (unsigned y = 0; y < b.order; ++y) {
      g.element_names[enc(x, y)] = "(" + a.name(x) + "," + b.name(y) + ")";
      for (unsigned x2 = 0; x2 < a.order; ++x2)
        for (unsigned y2 = 0; y2 < b.order; ++y2)
          g.mul[enc(x, y) * order + enc(x2, y2)] = enc(a.op(x, x2), b.op(y, y2));
    }
  finalize(g);
  return g;
}

}  // namespace

std::string GroupSpec::to_string() const {
  switch (kind) {
    case GroupKind::cyclic: return "cyclic:" + std::to_string(n);
    case GroupKind::dihedral: return "dihedral:" + std::to_string(n);
    case GroupKind::heisenberg: return "heisenberg:" + std::to_string(p);
    case GroupKind::elementary_abelian:
      return "elem-abelian:" + std::to_string(p) + ":" + std::to_string(k);
    case GroupKind::direct_product:
      return "product(" + (left ? left->to_string() : "?") + "," +
             (right ? right->to_string() : "?") + ")";
    case GroupKind::cayley_table: return "cayley:" + source;
  }
  return "?";
}

GroupSpec GroupSpec::cyclic(unsigned n) {
  GroupSpec s;
  s.kind = GroupKind::cyclic;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::dihedral(unsigned n) {
  GroupSpec s;
  s.kind = GroupKind::dihedral;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::heisenberg(unsigned p) {
  GroupSpec s;
  s.kind = GroupKind::heisenberg;
  s.p = p;
  return s;
}

GroupSpec GroupSpec::elementary_abelian(unsigned p, unsigned k) {
  GroupSpec s;
  s.kind = GroupKind::elementary_abelian;
  s.p = p;
  s.k = k;
  return s;
}

GroupSpec GroupSpec::product(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.kind = GroupKind::direct_product;
  s.left = std::make_shared<GroupSpec>(std::move(a));
  s.right = std::make_shared<GroupSpec>(std::move(b));
  return s;
}

GroupSpec GroupSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    fail(errc::parse, "group spec '" + text + "': expected KIND:ARGS");
  std::string kind = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  auto parse_number = [&](const std::string& s) -> unsigned {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      fail(errc::parse, "group spec '" + text + "': '" + s + "' is not a number");
    unsigned long long v = 0;
    for (char c : s) {
      v = v * 10 + unsigned(c - '0');
      if (v > 1u << 30) fail(errc::parse, "group spec '" + text + "': number too large");
    }
    return static_cast<unsigned>(v);
  };
  if (kind == "cyclic") return cyclic(parse_number(rest));
  if (kind == "dihedral") return dihedral(parse_number(rest));
  if (kind == "heisenberg") return heisenberg(parse_number(rest));
  if (kind == "elem-abelian") {
    auto c2 = rest.find(':');
    if (c2 == std::string::npos)
      fail(errc::parse, "group spec '" + text + "': expected elem-abelian:P:K");
    return elementary_abelian(parse_number(rest.substr(0, c2)),
                              parse_number(rest.substr(c2 + 1)));
  }
  if (kind == "cayley") {
    GroupSpec s;
    s.kind = GroupKind::cayley_table;
    s.source = rest;
    return s;
  }
  fail(errc::parse, "group spec '" + text + "': unknown kind '" + kind + "'");
}

FiniteGroup construct_group(const GroupSpec& spec, unsigned max_order) {
  switch (spec.kind) {
    case GroupKind::cyclic:
      if (spec.n == 0) fail(errc::invalid_argument, "cyclic: n must be >= 1");
      return make_cyclic(checked_order(spec.n, max_order, "cyclic"), spec);
    case GroupKind::dihedral:
      if (spec.n == 0) fail(errc::invalid_argument, "dihedral: n must be >= 1");
      return make_dihedral(
          checked_order(2ull * spec.n, max_order, "dihedral") / 2, spec);
    case GroupKind::heisenberg:
      if (!is_prime(spec.p))
        fail(errc::invalid_argument,
             "heisenberg: p = " + std::to_string(spec.p) + " is not prime");
      checked_order(1ull * spec.p * spec.p * spec.p, max_order, "heisenberg");
      return make_heisenberg(spec.p, spec);
    case GroupKind::elementary_abelian: {
      if (!is_prime(spec.p))
        fail(errc::invalid_argument,
             "elem-abelian: p = " + std::to_string(spec.p) + " is not prime");
      if (spec.k == 0) fail(errc::invalid_argument, "elem-abelian: k must be >= 1");
      unsigned long long order = 1;
      for (unsigned i = 0; i < spec.k; ++i) order *= spec.p;
      return make_elementary_abelian(
          spec.p, spec.k, checked_order(order, max_order, "elem-abelian"), spec);
    }
    case GroupKind::direct_product: {
      if (!spec.left || !spec.right)
        fail(errc::invalid_argument, "product: missing factor");
      FiniteGroup a = construct_group(*spec.left, max_order);
      FiniteGroup b = construct_group(*spec.right, max_order);
      unsigned order =
          checked_order(1ull * a.order * b.order, max_order, "product");
      return make_product(a, b, spec, order);
    }
    case GroupKind::cayley_table:
      return group_from_cayley_file(spec.source);
  }
  fail(errc::invalid_argument, "construct_group: unknown kind");
}

FiniteGroup group_from_cayley_text(std::istream& in, const std::string& source_name) {
  unsigned long long n_raw;
  if (!(in >> n_raw))
    fail(errc::parse, source_name + ": expected element count on the first line");
  unsigned n = checked_order(n_raw, kDefaultOrderCap, source_name);
  std::vector<unsigned> table(std::size_t(n) * n);
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    long long v;
    if (!(in >> v))
      fail(errc::parse, source_name + ": table ends after " +
                            std::to_string(idx) + " of " +
                            std::to_string(table.size()) + " entries");
    if (v < 0 || v >= static_cast<long long>(n))
      fail(errc::parse, source_name + ": entry " + std::to_string(v) +
                            " out of range at row " + std::to_string(idx / n) +
                            ", column " + std::to_string(idx % n));
    table[idx] = static_cast<unsigned>(v);
  }

  // Locate the identity, then relabel it to 0 by swapping.
  unsigned e = n;
  for (unsigned cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (unsigned x = 0; x < n && ok; ++x)
      ok = table[cand * n + x] == x && table[x * n + cand] == x;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e == n) fail(errc::validation, source_name + ": no identity element");

  std::vector<unsigned> perm(n);  // new id -> old id (involution)
  for (unsigned x = 0; x < n; ++x) perm[x] = x;
  std::swap(perm[0], perm[e]);

  FiniteGroup g;
  g.order = n;
  g.spec.kind = GroupKind::cayley_table;
  g.spec.source = source_name;
  g.mul.resize(table.size());
  g.element_names.resize(n);
  for (unsigned a = 0; a < n; ++a) {
    g.element_names[a] = std::to_string(perm[a]);  // original labels
    for (unsigned b = 0; b < n; ++b) {
      unsigned old = table[perm[a] * n + perm[b]];
      g.mul[a * n + b] = old == 0 ? e : (old == e ? 0 : old);
    }
  }

  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          fail(errc::validation,
               source_name + ": not associative at (" + g.name(a) + ", " +
                   g.name(b) + ", " + g.name(c) + ")");

  finalize(g);
  return g;
}

FiniteGroup group_from_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io, "cannot open cayley table file '" + path + "'");
  return group_from_cayley_text(in, path);
}

unsigned element_order(const FiniteGroup& g, unsigned x) {
  if (x >= g.order) fail(errc::invalid_argument, "element_order: id out of range");
  unsigned ord = 1;
  for (unsigned acc = x; acc != 0; acc = g.op(acc, x)) ++ord;
  return ord;
}

unsigned group_exponent(const FiniteGroup& g) {
  unsigned e = 1;
  for (unsigned x = 0; x < g.order; ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

bool is_abelian(const FiniteGroup& g) {
  for (unsigned a = 0; a < g.order; ++a)
    for (unsigned b = a + 1; b < g.order; ++b)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

std::optional<PGroupInfo> p_group_info(const FiniteGroup& g) {
  if (g.order == 1) return PGroupInfo{0, true};
  Factorization f = factorize(g.order);
  unsigned distinct = (f.alpha ? 1u : 0u) + unsigned(f.odd_primes.size());
  if (distinct != 1) return std::nullopt;
  return PGroupInfo{f.alpha ? 2u : f.odd_primes.front().first, false};
}

}  // namespace ospec
