// Parser and canonical printer for the ring expression language. The "x"
// between terms means direct product; inside a quotient's brackets it is an
// ordinary variable, so the parser is context-sensitive by construction.
#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "rtl/finring.hpp"

namespace rtl {

namespace {

bool is_prime_power(long long q, long long* p_out = nullptr) {
  if (q < 2) return false;
  long long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (p * p > q) p = q;  // q itself is prime
  long long m = q;
  while (m % p == 0) m /= p;
  if (p_out) *p_out = p;
  return m == 1;
}

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  int peek() {
    skip_ws();
    return i < s.size() ? static_cast<unsigned char>(s[i]) : -1;
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw SyntaxError(i, std::string("expected ") + what);
  }

  long long integer() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw SyntaxError(i, "expected an integer");
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1'000'000'000) throw SyntaxError(i, "integer too large");
      ++i;
    }
    return v;
  }

  std::variant<CyclicExpr, GaloisFieldExpr> base() {
    skip_ws();
    if (eat('Z')) {
      std::size_t at = i;
      long long n = integer();
      if (n < 2)
        throw InvalidModulus("Z" + std::to_string(n) + " at position " +
                             std::to_string(at) + ": modulus must be at least 2");
      return CyclicExpr{n};
    }
    if (i + 1 < s.size() && s[i] == 'G' && s[i + 1] == 'F') {
      i += 2;
      expect('(', "'(' after GF");
      std::size_t at = i;
      long long q = integer();
      expect(')', "')' closing GF");
      if (!is_prime_power(q))
        throw NotPrimePower("GF(" + std::to_string(q) + ") at position " +
                            std::to_string(at) + ": order must be a prime power");
      return GaloisFieldExpr{q};
    }
    throw SyntaxError(i, "expected Z<n> or GF(q)");
  }

  // Characteristic used for coefficient normalization: n for Z_n, p for
  // GF(p^k).
  static long long coeff_modulus(const std::variant<CyclicExpr, GaloisFieldExpr>& b) {
    if (std::holds_alternative<CyclicExpr>(b)) return std::get<CyclicExpr>(b).n;
    long long p = 0;
    is_prime_power(std::get<GaloisFieldExpr>(b).q, &p);
    return p;
  }

  int var_index(const std::vector<std::string>& vars) {
    skip_ws();
    if (i >= s.size() || !std::islower(static_cast<unsigned char>(s[i])))
      return -1;
    std::string name(1, s[i]);
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
      throw SyntaxError(i, "unknown variable '" + name + "'");
    ++i;
    return static_cast<int>(it - vars.begin());
  }

  // One product of an optional integer and variable powers; empty products
  // are rejected by the caller.
  bool monomial_term(const std::vector<std::string>& vars, long long* coeff,
                     std::vector<int>* exps) {
    *coeff = 1;
    exps->assign(vars.size(), 0);
    bool any = false;
    skip_ws();
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      *coeff = integer();
      any = true;
    }
    for (;;) {
      std::size_t before = i;
      bool star = eat('*');
      skip_ws();
      if (i < s.size() && std::islower(static_cast<unsigned char>(s[i]))) {
        int v = var_index(vars);
        long long e = 1;
        if (eat('^')) e = integer();
        if (e < 0 || e > 64) throw SyntaxError(i, "exponent out of range");
        (*exps)[v] += static_cast<int>(e);
        any = true;
      } else if (star && i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        *coeff *= integer();
      } else {
        i = before;
        break;
      }
    }
    return any;
  }

  Polynomial poly(const std::vector<std::string>& vars, long long mod) {
    Polynomial p;
    bool first = true;
    for (;;) {
      skip_ws();
      long long sign = 1;
      if (eat('-'))
        sign = -1;
      else if (!eat('+') && !first)
        break;
      long long c;
      std::vector<int> e;
      if (!monomial_term(vars, &c, &e))
        throw SyntaxError(i, "expected a polynomial term");
      long long v = ((sign * c) % mod + mod) % mod;
      auto it = p.terms.find(e);
      long long acc = (it == p.terms.end() ? 0 : it->second) + v;
      acc %= mod;
      if (acc == 0)
        p.terms.erase(e);
      else
        p.terms[e] = acc;
      first = false;
    }
    return p;
  }

  RingExpr term() {
    auto b = base();
    skip_ws();
    if (!eat('[')) {
      RingExpr r;
      if (std::holds_alternative<CyclicExpr>(b))
        r.node = std::get<CyclicExpr>(b);
      else
        r.node = std::get<GaloisFieldExpr>(b);
      return r;
    }
    QuotientExpr q;
    q.base = b;
    for (;;) {
      skip_ws();
      if (i >= s.size() || !std::islower(static_cast<unsigned char>(s[i])))
        throw SyntaxError(i, "expected a variable name");
      std::string name(1, s[i]);
      if (std::find(q.vars.begin(), q.vars.end(), name) != q.vars.end())
        throw SyntaxError(i, "duplicate variable '" + name + "'");
      q.vars.push_back(name);
      ++i;
      if (!eat(',')) break;
    }
    expect(']', "']' closing the variable list");
    expect('/', "'/' before the relation list");
    expect('(', "'(' starting the relation list");
    long long mod = coeff_modulus(b);
    for (;;) {
      q.relations.push_back(poly(q.vars, mod));
      if (!eat(',')) break;
    }
    expect(')', "')' closing the relation list");
    RingExpr r;
    r.node = std::move(q);
    return r;
  }
};

void print_poly(const Polynomial& p, const std::vector<std::string>& vars,
                std::string* out) {
  if (p.terms.empty()) {
    *out += "0";
    return;
  }
  // Descending degree-lexicographic order reads naturally: x^2+2, 2x, xy.
  std::vector<std::pair<std::vector<int>, long long>> terms(p.terms.begin(), p.terms.end());
  auto deglex_less = [](const std::vector<int>& a, const std::vector<int>& b) {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  };
  std::sort(terms.begin(), terms.end(),
            [&](const auto& l, const auto& r) { return deglex_less(r.first, l.first); });
  bool first = true;
  for (const auto& [exps, coeff] : terms) {
    if (!first) *out += "+";
    first = false;
    bool constant = std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    if (constant || coeff != 1) *out += std::to_string(coeff);
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      *out += vars[v];
      if (exps[v] > 1) *out += "^" + std::to_string(exps[v]);
    }
  }
}

void print_expr(const RingExpr& e, std::string* out) {
  if (std::holds_alternative<CyclicExpr>(e.node)) {
    *out += "Z" + std::to_string(std::get<CyclicExpr>(e.node).n);
  } else if (std::holds_alternative<GaloisFieldExpr>(e.node)) {
    *out += "GF(" + std::to_string(std::get<GaloisFieldExpr>(e.node).q) + ")";
  } else if (std::holds_alternative<QuotientExpr>(e.node)) {
    const auto& q = std::get<QuotientExpr>(e.node);
    if (std::holds_alternative<CyclicExpr>(q.base))
      *out += "Z" + std::to_string(std::get<CyclicExpr>(q.base).n);
    else
      *out += "GF(" + std::to_string(std::get<GaloisFieldExpr>(q.base).q) + ")";
    *out += "[";
    for (std::size_t v = 0; v < q.vars.size(); ++v) {
      if (v) *out += ",";
      *out += q.vars[v];
    }
    *out += "]/(";
    for (std::size_t r = 0; r < q.relations.size(); ++r) {
      if (r) *out += ", ";
      print_poly(q.relations[r], q.vars, out);
    }
    *out += ")";
  } else {
    const auto& p = std::get<ProductExpr>(e.node);
    for (std::size_t f = 0; f < p.factors.size(); ++f) {
      if (f) *out += " x ";
      print_expr(p.factors[f], out);
    }
  }
}

}  // namespace

RingExpr parse_ring_expr(const std::string& text) {
  if (text.empty()) throw SyntaxError(0, "empty expression");
  Parser p(text);
  std::vector<RingExpr> factors;
  factors.push_back(p.term());
  while (p.eat('x')) factors.push_back(p.term());
  p.skip_ws();
  if (p.i != text.size())
    throw SyntaxError(p.i, "unexpected trailing input");
  if (factors.size() == 1) return std::move(factors[0]);
  RingExpr r;
  r.node = ProductExpr{std::move(factors)};
  return r;
}

std::string ring_expr_to_string(const RingExpr& expr) {
  std::string out;
  print_expr(expr, &out);
  return out;
}

}  // namespace rtl
