// Finite commutative rings with identity: a small expression language
// (cyclic rings, Galois fields, quotients by polynomial relations, direct
// products), Cayley-table construction, axiom verification, and the
// element-set queries the graph layer consumes.
#ifndef RTL_FINRING_HPP
#define RTL_FINRING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rtl/errors.hpp"

namespace rtl {

inline constexpr int kRingOrderCap = 4096;
inline constexpr int kRingIsoCap = 64;

// Integer-coefficient multivariate polynomial keyed by exponent vectors
// aligned with the enclosing quotient's variable list. Parsing normalizes
// coefficients into 0..char-1 of the base ring, so equal ideals written
// differently (x^2-2 vs x^2+2 over Z_4) compare equal structurally.
struct Polynomial {
  std::map<std::vector<int>, long long> terms;
  bool operator==(const Polynomial&) const = default;
};

struct CyclicExpr {
  long long n = 0;
  bool operator==(const CyclicExpr&) const = default;
};
struct GaloisFieldExpr {
  long long q = 0;
  bool operator==(const GaloisFieldExpr&) const = default;
};
struct RingExpr;
struct QuotientExpr {
  std::variant<CyclicExpr, GaloisFieldExpr> base;
  std::vector<std::string> vars;
  std::vector<Polynomial> relations;
  bool operator==(const QuotientExpr&) const = default;
};
struct ProductExpr {
  std::vector<RingExpr> factors;
  bool operator==(const ProductExpr&) const = default;
};
struct RingExpr {
  std::variant<CyclicExpr, GaloisFieldExpr, QuotientExpr, ProductExpr> node;
  bool operator==(const RingExpr&) const = default;
};

// Grammar (whitespace-insensitive):
//   expr := term ( "x" term )*
//   term := "Z" INT | "GF" "(" INT ")" | base "[" var ("," var)* "]" "/" "(" poly ("," poly)* ")"
//   base := "Z" INT | "GF" "(" INT ")"
//   poly := integer-coefficient polynomial, "^" for powers, "*" or
//           juxtaposition for products, vars are single lowercase letters
// "x" between terms is the product separator; inside a quotient it is an
// ordinary variable. Raises SyntaxError (with position), InvalidModulus
// (Z with n < 2), NotPrimePower (GF argument).
RingExpr parse_ring_expr(const std::string& text);

// Canonical form: "Z4", "GF(8)", "Z4[x]/(2x, x^2+2)", factors joined by
// " x ". parse(to_string(parse(s))) == parse(s) for every valid s.
std::string ring_expr_to_string(const RingExpr& expr);

struct FiniteRing {
  int order = 0;
  std::vector<std::string> labels;
  std::vector<int> add;  // order x order, row-major
  std::vector<int> mul;
  int zero = 0;
  int one = 0;

  int add_of(int a, int b) const { return add[static_cast<std::size_t>(a) * order + b]; }
  int mul_of(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
};

// Realizes the expression as Cayley tables with canonical element labels.
// Quotients are built by closing {base elements, variables} under + and x
// with reduction to normal form under relation-derived rewrite rules;
// the rule set's consistency is verified after the fact (ideal membership
// spot checks plus full axiom verification), not assumed.
// Raises NonFiniteQuotient, NonConfluentRelations, CapExceeded,
// InvalidModulus, NotPrimePower.
FiniteRing build_ring(const RingExpr& expr, int order_cap = kRingOrderCap);

// Componentwise product with labels "(a,b)".
FiniteRing direct_product(const FiniteRing& r1, const FiniteRing& r2,
                          int order_cap = kRingOrderCap);

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::string witness;  // offending element triple when pass is false
};
struct AxiomReport {
  bool ok = true;
  std::vector<AxiomCheck> checks;
};
// Exhaustive O(order^3) verification of the commutative-ring-with-identity
// axioms; failures carry a witness instead of raising.
AxiomReport verify_ring_axioms(const FiniteRing& r);

// Nonzero zero-divisors Z(R)*, nonzero nilpotents Nil(R)*, units U(R),
// each as a sorted index list. These partition R \ {0} as U(R) plus Z(R)*.
std::vector<int> zero_divisors(const FiniteRing& r);
std::vector<int> nilpotents(const FiniteRing& r);
std::vector<int> units(const FiniteRing& r);

// ann(a) = {d : da = 0}; contains 0 always, equals all of R iff a = 0.
std::vector<int> annihilator(const FiniteRing& r, int a);

struct LocalRingResult {
  bool local = false;
  std::vector<int> maximal_ideal;  // the non-units, when local
};
// A finite commutative ring is local iff its non-units are closed under
// addition; they then form the unique maximal ideal.
LocalRingResult is_local(const FiniteRing& r);

// Additive order of 1.
int characteristic(const FiniteRing& r);

// Table-preserving bijection search after invariant filtering (order,
// characteristic, unit/nilpotent counts, additive order profile).
// Raises CapExceeded beyond kRingIsoCap.
bool ring_isomorphic(const FiniteRing& r1, const FiniteRing& r2);

}  // namespace rtl

#endif  // RTL_FINRING_HPP
