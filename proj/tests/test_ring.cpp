// Unit tests for the ring expression language and Cayley-table builder.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "rtl/finring.hpp"

using namespace rtl;

namespace {

FiniteRing ring_of(const std::string& expr) {
  return build_ring(parse_ring_expr(expr));
}

int label_index(const FiniteRing& r, const std::string& lab) {
  auto it = std::find(r.labels.begin(), r.labels.end(), lab);
  REQUIRE(it != r.labels.end());
  return static_cast<int>(it - r.labels.begin());
}

}  // namespace

TEST_CASE("parser accepts the grammar and rejects malformed input") {
  RingExpr z4 = parse_ring_expr("Z4");
  CHECK(std::holds_alternative<CyclicExpr>(z4.node));
  CHECK(std::get<CyclicExpr>(z4.node).n == 4);

  RingExpr gf8 = parse_ring_expr(" GF( 8 ) ");
  CHECK(std::holds_alternative<GaloisFieldExpr>(gf8.node));
  CHECK(std::get<GaloisFieldExpr>(gf8.node).q == 8);

  RingExpr prod = parse_ring_expr("Z2 x Z2 x Z2");
  REQUIRE(std::holds_alternative<ProductExpr>(prod.node));
  const auto& factors = std::get<ProductExpr>(prod.node).factors;
  REQUIRE(factors.size() == 3);
  for (const RingExpr& f : factors) {
    REQUIRE(std::holds_alternative<CyclicExpr>(f.node));
    CHECK(std::get<CyclicExpr>(f.node).n == 2);
  }

  RingExpr q = parse_ring_expr("Z4[x]/(2x, x^2-2)");
  REQUIRE(std::holds_alternative<QuotientExpr>(q.node));
  const auto& qe = std::get<QuotientExpr>(q.node);
  CHECK(std::get<CyclicExpr>(qe.base).n == 4);
  REQUIRE(qe.vars == std::vector<std::string>{"x"});
  REQUIRE(qe.relations.size() == 2);
  // Coefficients normalize at parse time, so x^2-2 stores as x^2+2.
  Polynomial two_x;
  two_x.terms[{1}] = 2;
  Polynomial xx_plus_2;
  xx_plus_2.terms[{2}] = 1;
  xx_plus_2.terms[{0}] = 2;
  CHECK(qe.relations[0] == two_x);
  CHECK(qe.relations[1] == xx_plus_2);

  CHECK(parse_ring_expr("Z4[x]/(x^2-2, 2x)") ==
        parse_ring_expr("Z4[x] / (x^2 + 2, 2*x)"));

  RingExpr biv = parse_ring_expr("Z2[x,y]/(x^2, xy, y^2)");
  REQUIRE(std::holds_alternative<QuotientExpr>(biv.node));
  CHECK(std::get<QuotientExpr>(biv.node).vars ==
        std::vector<std::string>{"x", "y"});

  CHECK_THROWS_AS(parse_ring_expr("Z1"), InvalidModulus);
  CHECK_THROWS_AS(parse_ring_expr("GF(6)"), NotPrimePower);
  CHECK_THROWS_AS(parse_ring_expr(""), SyntaxError);
  CHECK_THROWS_AS(parse_ring_expr("Z4 x"), SyntaxError);
  CHECK_THROWS_AS(parse_ring_expr("Z4["), SyntaxError);
  CHECK_THROWS_AS(parse_ring_expr("Z4[x]/(y)"), SyntaxError);
  CHECK_THROWS_AS(parse_ring_expr("Z4[x]/()"), SyntaxError);
  CHECK_THROWS_AS(parse_ring_expr("Z4 junk"), SyntaxError);
  CHECK_THROWS_AS(parse_ring_expr("Q8"), SyntaxError);
  try {
    parse_ring_expr("Z4[x]/(y)");
  } catch (const SyntaxError& e) {
    CHECK(e.pos == 7);
  }
}

TEST_CASE("printer emits a canonical form and round-trips") {
  const char* inputs[] = {
      "Z4",
      "GF(8)",
      "Z2 x Z2 x Z2",
      "Z4[x]/(2x, x^2-2)",
      "Z2[x,y]/(x^2, xy, y^2)",
      "Z3[x]/(x^2) x Z2",
      "GF(4)[x]/(x^2)",
  };
  for (const char* s : inputs) {
    RingExpr e = parse_ring_expr(s);
    std::string printed = ring_expr_to_string(e);
    CHECK(parse_ring_expr(printed) == e);
    // Printing is idempotent: the canonical form prints as itself.
    CHECK(ring_expr_to_string(parse_ring_expr(printed)) == printed);
  }
  CHECK(ring_expr_to_string(parse_ring_expr("Z4 [x] / (2 * x, x^2 - 2)")) ==
        "Z4[x]/(2x, x^2+2)");
  CHECK(ring_expr_to_string(parse_ring_expr("Z2xZ3")) == "Z2 x Z3");
}

TEST_CASE("cyclic rings have modular tables") {
  FiniteRing z4 = ring_of("Z4");
  CHECK(z4.order == 4);
  CHECK(z4.labels == std::vector<std::string>{"0", "1", "2", "3"});
  CHECK(z4.add_of(2, 3) == 1);
  CHECK(z4.mul_of(2, 2) == 0);
  CHECK(z4.mul_of(3, 3) == 1);
  CHECK(characteristic(z4) == 4);
  CHECK(verify_ring_axioms(z4).ok);
}

TEST_CASE("galois fields use the smallest irreducible and are fields") {
  FiniteRing f4 = ring_of("GF(4)");
  CHECK(f4.order == 4);
  CHECK(units(f4).size() == 3);
  CHECK(characteristic(f4) == 2);
  // x^2+x+1 is the only irreducible quadratic over Z_2: a^2 = a+1.
  int a = label_index(f4, "a");
  int a1 = label_index(f4, "a+1");
  CHECK(f4.mul_of(a, a) == a1);

  FiniteRing f8 = ring_of("GF(8)");
  CHECK(f8.order == 8);
  CHECK(units(f8).size() == 7);
  // Defining relation a^3 = a+1 picks x^3+x+1 over x^3+x^2+1.
  int b = label_index(f8, "a");
  CHECK(f8.mul_of(f8.mul_of(b, b), b) == label_index(f8, "a+1"));

  FiniteRing f9 = ring_of("GF(9)");
  CHECK(f9.order == 9);
  CHECK(units(f9).size() == 8);
  CHECK(characteristic(f9) == 3);
  // x^2+1 is the smallest irreducible quadratic over Z_3: a^2 = 2.
  int c = label_index(f9, "a");
  CHECK(f9.mul_of(c, c) == label_index(f9, "2"));

  // GF(p) is plain modular arithmetic with the same labels as Z_p.
  FiniteRing f5 = ring_of("GF(5)");
  CHECK(f5.labels == ring_of("Z5").labels);
  CHECK(f5.mul == ring_of("Z5").mul);

  for (const FiniteRing* f : {&f4, &f8, &f9}) {
    CHECK(verify_ring_axioms(*f).ok);
    CHECK(zero_divisors(*f).empty());
  }
}

TEST_CASE("quotient closure produces the expected small rings") {
  FiniteRing dual = ring_of("Z2[x]/(x^2)");
  CHECK(dual.order == 4);
  int x = label_index(dual, "x");
  CHECK(dual.mul_of(x, x) == dual.zero);
  CHECK(nilpotents(dual) == std::vector<int>{x});
  int x1 = label_index(dual, "x+1");
  CHECK(dual.mul_of(x1, x1) == dual.one);
  std::vector<int> u = units(dual);
  CHECK(std::find(u.begin(), u.end(), x1) != u.end());

  FiniteRing r8 = ring_of("Z4[x]/(2x, x^2-2)");
  CHECK(r8.order == 8);
  CHECK(characteristic(r8) == 4);
  // Elements are a+bx with a mod 4, b mod 2; x^2 = 2 and 2x = 0.
  int xx = label_index(r8, "x");
  CHECK(r8.mul_of(xx, xx) == label_index(r8, "2"));
  CHECK(r8.add_of(xx, xx) == r8.zero);
  LocalRingResult loc = is_local(r8);
  CHECK(loc.local);
  CHECK(loc.maximal_ideal.size() == 4);
  CHECK(verify_ring_axioms(r8).ok);

  FiniteRing biv = ring_of("Z2[x,y]/(x^2, xy, y^2)");
  CHECK(biv.order == 8);
  CHECK(nilpotents(biv).size() == 3);
  CHECK(is_local(biv).local);

  FiniteRing f4x = ring_of("GF(4)[x]/(x^2)");
  CHECK(f4x.order == 16);
  CHECK(characteristic(f4x) == 2);
  CHECK(nilpotents(f4x).size() == 3);
  CHECK(is_local(f4x).local);
  int ax = label_index(f4x, "ax");
  int a1x_a = label_index(f4x, "(a+1)x+a");
  CHECK(f4x.mul_of(ax, ax) == f4x.zero);
  CHECK(a1x_a >= 0);

  // Relations that eliminate x and make 2 = 0 collapse Z_4 to Z_2.
  FiniteRing z2 = ring_of("Z4[x]/(x, 2)");
  CHECK(z2.order == 2);
  CHECK(characteristic(z2) == 2);
}

TEST_CASE("quotients whose relations do not force finiteness are rejected") {
  // 2x vanishes over Z_2, so the ideal is trivial and Z_2[x] is infinite.
  CHECK_THROWS_AS(ring_of("Z2[x]/(2x)"), NonFiniteQuotient);
  CHECK_THROWS_AS(ring_of("Z2[x,y]/(xy)"), NonFiniteQuotient);
  // x^3 rewrites to x^2, which bounds the degree: Z_2[x]/(x^2(x+1)).
  FiniteRing ok = ring_of("Z2[x]/(x^2+x^3)");
  CHECK(ok.order == 8);
}

TEST_CASE("inconsistent rewrite systems are detected, not silently wrong") {
  // 2x+2 and x^2 interact: 2 = 2x^2 = 0 in the true quotient, but the
  // one-rule-per-relation rewrite cannot see it. The ideal-multiple check
  // must catch the discrepancy.
  CHECK_THROWS_AS(ring_of("Z4[x]/(2x+2, x^2)"), NonConfluentRelations);
}

TEST_CASE("order caps reject oversized constructions") {
  CHECK_THROWS_AS(build_ring(parse_ring_expr("Z5000")), CapExceeded);
  CHECK_THROWS_AS(build_ring(parse_ring_expr("Z100 x Z100")), CapExceeded);
  CHECK_THROWS_AS(build_ring(parse_ring_expr("Z3"), 2), CapExceeded);
}

TEST_CASE("products have componentwise tables and tuple labels") {
  FiniteRing z2z3 = ring_of("Z2 x Z3");
  CHECK(z2z3.order == 6);
  CHECK(units(z2z3).size() == 2);
  CHECK(zero_divisors(z2z3).size() == 3);
  CHECK(z2z3.labels[z2z3.one] == "(1,1)");
  CHECK(!is_local(z2z3).local);

  FiniteRing z2cube = ring_of("Z2 x Z2 x Z2");
  CHECK(z2cube.order == 8);
  CHECK(z2cube.labels[z2cube.one] == "(1,1,1)");
  CHECK(zero_divisors(z2cube).size() == 6);
  CHECK(characteristic(z2cube) == 2);

  FiniteRing a = ring_of("Z2");
  FiniteRing b = ring_of("Z3");
  FiniteRing ab = direct_product(a, b);
  CHECK(ab.order == 6);
  CHECK(ab.labels[ab.one] == "(1,1)");
  CHECK(units(ab).size() == 2);
  CHECK(ring_isomorphic(ab, z2z3));
  CHECK_THROWS_AS(direct_product(ab, ab, 30), CapExceeded);
}

TEST_CASE("axiom verification reports witnesses on injected faults") {
  FiniteRing z4 = ring_of("Z4");
  AxiomReport good = verify_ring_axioms(z4);
  CHECK(good.ok);
  CHECK(good.checks.size() == 5);
  for (const AxiomCheck& c : good.checks) CHECK(c.pass);

  FiniteRing bad = z4;
  bad.mul[1 * 4 + 2] = 3;  // 1*2 = 3 breaks identity (and commutativity)
  AxiomReport rep = verify_ring_axioms(bad);
  CHECK(!rep.ok);
  bool identity_failed = false;
  for (const AxiomCheck& c : rep.checks)
    if (c.name == "identity" && !c.pass) {
      identity_failed = true;
      CHECK(c.witness == "(2)");
    }
  CHECK(identity_failed);

  FiniteRing noncomm = z4;
  noncomm.mul[2 * 4 + 3] = 1;  // 2*3 != 3*2
  AxiomReport rep2 = verify_ring_axioms(noncomm);
  bool comm_failed = false;
  for (const AxiomCheck& c : rep2.checks)
    if (c.name == "commutativity" && !c.pass) comm_failed = true;
  CHECK(comm_failed);
}

TEST_CASE("element queries partition the ring") {
  for (const char* expr : {"Z4", "Z25", "Z2 x Z3", "Z4[x]/(2x, x^2-2)",
                           "GF(9)", "Z2[x,y]/(x^2, xy, y^2)"}) {
    FiniteRing r = ring_of(expr);
    std::vector<int> zd = zero_divisors(r);
    std::vector<int> un = units(r);
    CHECK(std::is_sorted(zd.begin(), zd.end()));
    CHECK(std::is_sorted(un.begin(), un.end()));
    CHECK(zd.size() + un.size() + 1 == static_cast<std::size_t>(r.order));
    for (int a : zd) CHECK(!std::binary_search(un.begin(), un.end(), a));
    // A nonzero element is a zero-divisor exactly when its annihilator is
    // larger than {0}.
    for (int a = 0; a < r.order; ++a) {
      std::vector<int> ann = annihilator(r, a);
      CHECK(std::binary_search(ann.begin(), ann.end(), r.zero));
      if (a == r.zero)
        CHECK(ann.size() == static_cast<std::size_t>(r.order));
      else
        CHECK((ann.size() >= 2) ==
              std::binary_search(zd.begin(), zd.end(), a));
    }
    std::vector<int> nil = nilpotents(r);
    for (int a : nil) CHECK(std::binary_search(zd.begin(), zd.end(), a));
  }

  FiniteRing z25 = ring_of("Z25");
  CHECK(zero_divisors(z25) == std::vector<int>{5, 10, 15, 20});
  CHECK(nilpotents(z25) == std::vector<int>{5, 10, 15, 20});
  CHECK(annihilator(z25, 5) == std::vector<int>{0, 5, 10, 15, 20});
  CHECK(annihilator(z25, 1) == std::vector<int>{0});
  CHECK_THROWS_AS(annihilator(z25, 99), InvalidParameter);

  FiniteRing z4 = ring_of("Z4");
  CHECK(zero_divisors(z4) == std::vector<int>{2});
  CHECK(nilpotents(z4) == std::vector<int>{2});
  CHECK(units(z4) == std::vector<int>{1, 3});
  LocalRingResult loc = is_local(z4);
  CHECK(loc.local);
  CHECK(loc.maximal_ideal == std::vector<int>{0, 2});
}

TEST_CASE("local ring detection separates prime powers from products") {
  for (const char* expr : {"Z4", "Z8", "Z9", "Z25", "Z27", "GF(8)",
                           "Z3[x]/(x^2)"})
    CHECK(is_local(ring_of(expr)).local);
  for (const char* expr : {"Z2 x Z2", "Z6", "Z2 x Z3", "Z3 x GF(4)",
                           "Z2 x Z2 x Z2"})
    CHECK(!is_local(ring_of(expr)).local);
}

TEST_CASE("isomorphism testing distinguishes and identifies correctly") {
  CHECK(ring_isomorphic(ring_of("Z4"), ring_of("Z4")));
  // Same order and characteristic profile aside, x has additive order 2
  // while every nonzero element of Z_4 generates more or equals less.
  CHECK(!ring_isomorphic(ring_of("Z4"), ring_of("Z2[x]/(x^2)")));
  CHECK(ring_isomorphic(ring_of("Z2 x Z4"), ring_of("Z4 x Z2")));
  CHECK(ring_isomorphic(ring_of("Z6"), ring_of("Z2 x Z3")));
  CHECK(!ring_isomorphic(ring_of("Z2 x Z2"), ring_of("GF(4)")));
  CHECK(!ring_isomorphic(ring_of("Z4"), ring_of("Z5")));
  // Both are local of order 8 and characteristic 4 with x^2 = 2 vs x^2 = 0;
  // the former has an element squaring to 2, the latter does not.
  CHECK(!ring_isomorphic(ring_of("Z4[x]/(2x, x^2-2)"),
                         ring_of("Z4[x]/(2x, x^2)")));
  CHECK(ring_isomorphic(ring_of("GF(4)"), ring_of("GF(4)")));
  CHECK_THROWS_AS(ring_isomorphic(ring_of("Z100"), ring_of("Z100")),
                  CapExceeded);
}
