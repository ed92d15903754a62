// Cayley-table construction for the ring expression language, plus axiom
// verification and the element-set queries. Quotient rings are built by a
// terminating rewrite to normal forms; the rule set is never trusted, it is
// checked after construction (ideal products reduce to zero, axioms hold).
#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "rtl/finring.hpp"

namespace rtl {

namespace {

struct PrimePower {
  long long p = 0;
  int k = 0;
};

bool split_prime_power(long long q, PrimePower* out) {
  if (q < 2) return false;
  long long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (p * p > q) p = q;
  long long m = q;
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return false;
  out->p = p;
  out->k = k;
  return true;
}

FiniteRing build_cyclic(long long n, int order_cap) {
  if (n < 2) throw InvalidModulus("cyclic ring modulus must be at least 2");
  if (n > order_cap)
    throw CapExceeded("ring order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(order_cap));
  FiniteRing r;
  r.order = static_cast<int>(n);
  r.labels.reserve(r.order);
  for (int i = 0; i < r.order; ++i) r.labels.push_back(std::to_string(i));
  r.add.resize(static_cast<std::size_t>(r.order) * r.order);
  r.mul.resize(static_cast<std::size_t>(r.order) * r.order);
  for (int i = 0; i < r.order; ++i)
    for (int j = 0; j < r.order; ++j) {
      r.add[static_cast<std::size_t>(i) * r.order + j] = (i + j) % r.order;
      r.mul[static_cast<std::size_t>(i) * r.order + j] =
          static_cast<int>((static_cast<long long>(i) * j) % n);
    }
  r.zero = 0;
  r.one = 1;
  return r;
}

// Dense univariate polynomials over Z_p, little-endian coefficients, used
// only to find the defining irreducible for GF(p^k).
using FpPoly = std::vector<int>;

FpPoly fp_mod(FpPoly a, const FpPoly& b, long long p) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  int db = static_cast<int>(b.size()) - 1;
  // b is monic here, so long division needs no inverse.
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    int lead = a[da];
    for (int i = 0; i <= db; ++i) {
      long long v = a[da - db + i] - static_cast<long long>(lead) * b[i];
      a[da - db + i] = static_cast<int>(((v % p) + p) % p);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

bool fp_divides(const FpPoly& d, const FpPoly& f, long long p) {
  return fp_mod(f, d, p).empty();
}

// Monic polynomials of degree deg over Z_p in lexicographic order of
// (c_{deg-1}, ..., c_0); calls fn on each until it returns true.
template <typename Fn>
bool for_each_monic(long long p, int deg, Fn fn) {
  std::vector<int> c(deg, 0);
  for (;;) {
    FpPoly f(deg + 1, 0);
    f[deg] = 1;
    for (int i = 0; i < deg; ++i) f[i] = c[deg - 1 - i];
    if (fn(f)) return true;
    int i = deg - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) return false;
    ++c[i];
  }
}

bool fp_irreducible(const FpPoly& f, long long p) {
  int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    bool found = for_each_monic(p, d, [&](const FpPoly& g) {
      return fp_divides(g, f, p);
    });
    if (found) return false;
  }
  return true;
}

void print_fp_poly(const std::vector<int>& coeffs, const std::string& var,
                   std::string* out) {
  bool first = true;
  for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
    if (coeffs[d] == 0) continue;
    if (!first) *out += "+";
    first = false;
    if (d == 0 || coeffs[d] != 1) *out += std::to_string(coeffs[d]);
    if (d >= 1) {
      *out += var;
      if (d > 1) *out += "^" + std::to_string(d);
    }
  }
  if (first) *out += "0";
}

FiniteRing build_gf(long long q, int order_cap) {
  PrimePower pp;
  if (!split_prime_power(q, &pp))
    throw NotPrimePower("GF order " + std::to_string(q) +
                        " is not a prime power");
  if (q > order_cap)
    throw CapExceeded("ring order " + std::to_string(q) + " exceeds cap " +
                      std::to_string(order_cap));
  if (pp.k == 1) return build_cyclic(pp.p, order_cap);

  FpPoly irr;
  for_each_monic(pp.p, pp.k, [&](const FpPoly& f) {
    if (fp_irreducible(f, pp.p)) {
      irr = f;
      return true;
    }
    return false;
  });

  int n = static_cast<int>(q);
  // Element index is the little-endian base-p encoding of the coefficient
  // vector of a polynomial in the generator a of degree < k.
  auto decode = [&](int idx) {
    std::vector<int> c(pp.k, 0);
    for (int i = 0; i < pp.k; ++i) {
      c[i] = static_cast<int>(idx % pp.p);
      idx = static_cast<int>(idx / pp.p);
    }
    return c;
  };
  auto encode = [&](const FpPoly& c) {
    long long idx = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      idx = idx * pp.p + c[i];
    return static_cast<int>(idx);
  };

  FiniteRing r;
  r.order = n;
  r.labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::string lab;
    print_fp_poly(decode(i), "a", &lab);
    r.labels.push_back(lab);
  }
  r.add.resize(static_cast<std::size_t>(n) * n);
  r.mul.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> ci = decode(i);
    for (int j = 0; j < n; ++j) {
      std::vector<int> cj = decode(j);
      FpPoly sum(pp.k, 0);
      for (int t = 0; t < pp.k; ++t)
        sum[t] = static_cast<int>((ci[t] + cj[t]) % pp.p);
      r.add[static_cast<std::size_t>(i) * n + j] = encode(sum);
      FpPoly prod(2 * pp.k - 1, 0);
      for (int s = 0; s < pp.k; ++s)
        for (int t = 0; t < pp.k; ++t)
          prod[s + t] = static_cast<int>(
              (prod[s + t] + static_cast<long long>(ci[s]) * cj[t]) % pp.p);
      FpPoly red = fp_mod(prod, irr, pp.p);
      red.resize(pp.k, 0);
      r.mul[static_cast<std::size_t>(i) * n + j] = encode(red);
    }
  }
  r.zero = 0;
  r.one = 1;
  return r;
}

// Quotient machinery. Monomials are exponent vectors over the quotient's
// variable list; coefficients are base-ring element indices.
using Mono = std::vector<int>;

struct DeglexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  }
};

using QPoly = std::map<Mono, int, DeglexLess>;

struct RewriteRule {
  Mono mono;
  int coeff = 0;    // base element index, equals the integer representative
  QPoly rhs;        // the lead term rewrites to coeff_factor * rhs
  bool unit = false;
  int inv = 0;      // coeff inverse when unit
};

bool mono_divides(const Mono& m, const Mono& t) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > t[i]) return false;
  return true;
}

void add_term(QPoly* p, const Mono& m, int c, const FiniteRing& base) {
  if (c == base.zero) return;
  auto it = p->find(m);
  if (it == p->end()) {
    (*p)[m] = c;
    return;
  }
  int s = base.add_of(it->second, c);
  if (s == base.zero)
    p->erase(it);
  else
    it->second = s;
}

QPoly qp_add(const QPoly& a, const QPoly& b, const FiniteRing& base) {
  QPoly out = a;
  for (const auto& [m, c] : b) add_term(&out, m, c, base);
  return out;
}

QPoly qp_mul(const QPoly& a, const QPoly& b, const FiniteRing& base) {
  QPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m(ma.size());
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] = ma[i] + mb[i];
      add_term(&out, m, base.mul_of(ca, cb), base);
    }
  return out;
}

// Rewrites to normal form. Unit-lead rules eliminate their monomial
// outright; non-unit leads (composite cyclic base) shrink the coefficient
// by integer division on representatives, e.g. 3x under 2x -> 0 leaves x.
void qp_reduce(QPoly* p, const std::vector<RewriteRule>& rules,
               const FiniteRing& base) {
  for (;;) {
    const RewriteRule* hit = nullptr;
    Mono t;
    int d = 0;
    for (auto it = p->rbegin(); it != p->rend() && !hit; ++it) {
      for (const RewriteRule& rule : rules) {
        if (!mono_divides(rule.mono, it->first)) continue;
        if (!rule.unit && it->second < rule.coeff) continue;
        hit = &rule;
        t = it->first;
        d = it->second;
        break;
      }
    }
    if (!hit) return;
    p->erase(t);
    Mono u(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) u[i] = t[i] - hit->mono[i];
    int q;
    if (hit->unit) {
      q = base.mul_of(d, hit->inv);
    } else {
      q = d / hit->coeff;
      int rem = d % hit->coeff;
      if (rem != 0) add_term(p, t, rem, base);
    }
    for (const auto& [mr, cr] : hit->rhs) {
      Mono m(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) m[i] = u[i] + mr[i];
      add_term(p, m, base.mul_of(q, cr), base);
    }
  }
}

std::string qp_label(const QPoly& p, const std::vector<std::string>& vars,
                     const FiniteRing& base) {
  if (p.empty()) return base.labels[base.zero];
  std::string out;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!first) out += "+";
    first = false;
    const Mono& m = it->first;
    bool constant = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    const std::string& cl = base.labels[it->second];
    if (constant) {
      out += cl;
    } else {
      if (it->second != base.one) {
        if (cl.find('+') != std::string::npos)
          out += "(" + cl + ")";
        else
          out += cl;
      }
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        out += vars[v];
        if (m[v] > 1) out += "^" + std::to_string(m[v]);
      }
    }
  }
  return out;
}

FiniteRing build_quotient(const QuotientExpr& qe, int order_cap) {
  FiniteRing base = std::holds_alternative<CyclicExpr>(qe.base)
                        ? build_cyclic(std::get<CyclicExpr>(qe.base).n, order_cap)
                        : build_gf(std::get<GaloisFieldExpr>(qe.base).q, order_cap);
  long long cmod = std::holds_alternative<CyclicExpr>(qe.base)
                       ? std::get<CyclicExpr>(qe.base).n
                       : [&] {
                           PrimePower pp;
                           split_prime_power(std::get<GaloisFieldExpr>(qe.base).q, &pp);
                           return pp.p;
                         }();
  std::size_t nv = qe.vars.size();

  std::vector<int> neg(base.order), inv(base.order, -1);
  for (int a = 0; a < base.order; ++a)
    for (int b = 0; b < base.order; ++b) {
      if (base.add_of(a, b) == base.zero) neg[a] = b;
      if (base.mul_of(a, b) == base.one) inv[a] = b;
    }

  std::vector<QPoly> relations;
  for (const Polynomial& rel : qe.relations) {
    QPoly q;
    for (const auto& [exps, c] : rel.terms) {
      if (exps.size() != nv)
        throw InvalidParameter("relation exponent vector length mismatch");
      // Parse already normalized c into 0..cmod-1; that value is the base
      // element index for both cyclic and prime-subfield coefficients.
      add_term(&q, exps, static_cast<int>(c % cmod), base);
    }
    if (!q.empty()) relations.push_back(std::move(q));
  }

  std::vector<RewriteRule> rules;
  for (const QPoly& rel : relations) {
    RewriteRule r;
    auto lead = rel.rbegin();
    r.mono = lead->first;
    r.coeff = lead->second;
    r.unit = inv[r.coeff] >= 0;
    r.inv = r.unit ? inv[r.coeff] : 0;
    for (auto it = rel.begin(); it != rel.end(); ++it) {
      if (it->first == r.mono) continue;
      add_term(&r.rhs, it->first, neg[it->second], base);
    }
    rules.push_back(std::move(r));
  }

  std::map<QPoly, int> canon;
  std::vector<QPoly> elems;
  auto intern = [&](QPoly p) {
    qp_reduce(&p, rules, base);
    auto it = canon.find(p);
    if (it != canon.end()) return it->second;
    if (static_cast<int>(elems.size()) >= order_cap)
      throw NonFiniteQuotient(
          "rewrite closure exceeds the order cap; relations do not force "
          "finiteness");
    int idx = static_cast<int>(elems.size());
    canon.emplace(p, idx);
    elems.push_back(std::move(p));
    return idx;
  };

  intern(QPoly{});
  QPoly one_poly;
  add_term(&one_poly, Mono(nv, 0), base.one, base);
  if (intern(one_poly) != 1)
    throw InvalidParameter("relations collapse the quotient to the zero ring");
  for (int b = 0; b < base.order; ++b) {
    if (b == base.zero) continue;
    QPoly c;
    add_term(&c, Mono(nv, 0), b, base);
    intern(std::move(c));
  }
  for (std::size_t v = 0; v < nv; ++v) {
    QPoly x;
    Mono m(nv, 0);
    m[v] = 1;
    add_term(&x, m, base.one, base);
    intern(std::move(x));
  }

  std::size_t done = 0;
  while (done < elems.size()) {
    std::size_t hi = elems.size();
    for (std::size_t i = done; i < hi; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        intern(qp_add(elems[i], elems[j], base));
        intern(qp_mul(elems[i], elems[j], base));
      }
    done = hi;
  }

  FiniteRing r;
  r.order = static_cast<int>(elems.size());
  r.zero = 0;
  r.one = 1;
  r.labels.reserve(r.order);
  for (const QPoly& e : elems) r.labels.push_back(qp_label(e, qe.vars, base));
  r.add.resize(static_cast<std::size_t>(r.order) * r.order);
  r.mul.resize(static_cast<std::size_t>(r.order) * r.order);
  for (int i = 0; i < r.order; ++i)
    for (int j = 0; j < r.order; ++j) {
      QPoly s = qp_add(elems[i], elems[j], base);
      qp_reduce(&s, rules, base);
      QPoly m = qp_mul(elems[i], elems[j], base);
      qp_reduce(&m, rules, base);
      r.add[static_cast<std::size_t>(i) * r.order + j] = canon.at(s);
      r.mul[static_cast<std::size_t>(i) * r.order + j] = canon.at(m);
    }

  // The rewrite rules were derived one relation at a time, so consistency
  // is not guaranteed by construction. Check that every element times every
  // relation reduces to zero and that the tables satisfy the ring axioms.
  for (const QPoly& e : elems)
    for (const QPoly& rel : relations) {
      QPoly prod = qp_mul(e, rel, base);
      qp_reduce(&prod, rules, base);
      if (!prod.empty())
        throw NonConfluentRelations(
            "an ideal multiple does not reduce to zero; the relation set is "
            "not confluent");
    }
  AxiomReport rep = verify_ring_axioms(r);
  if (!rep.ok) {
    std::string msg = "normal-form tables violate ring axioms:";
    for (const AxiomCheck& c : rep.checks)
      if (!c.pass) msg += " " + c.name + " at " + c.witness;
    throw NonConfluentRelations(msg);
  }
  return r;
}

FiniteRing build_product(const std::vector<RingExpr>& factors, int order_cap) {
  std::vector<FiniteRing> parts;
  long long total = 1;
  for (const RingExpr& f : factors) {
    parts.push_back(build_ring(f, order_cap));
    total *= parts.back().order;
    if (total > order_cap)
      throw CapExceeded("product order exceeds cap " + std::to_string(order_cap));
  }
  int n = static_cast<int>(total);
  int k = static_cast<int>(parts.size());

  std::vector<int> tuple(k);
  auto decode = [&](int idx) {
    for (int t = k - 1; t >= 0; --t) {
      tuple[t] = idx % parts[t].order;
      idx /= parts[t].order;
    }
  };
  auto encode = [&](const std::vector<int>& tup) {
    int idx = 0;
    for (int t = 0; t < k; ++t) idx = idx * parts[t].order + tup[t];
    return idx;
  };

  FiniteRing r;
  r.order = n;
  r.labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    decode(i);
    std::string lab = "(";
    for (int t = 0; t < k; ++t) {
      if (t) lab += ",";
      lab += parts[t].labels[tuple[t]];
    }
    lab += ")";
    r.labels.push_back(lab);
  }
  r.add.resize(static_cast<std::size_t>(n) * n);
  r.mul.resize(static_cast<std::size_t>(n) * n);
  std::vector<int> ti(k), tj(k), ts(k), tm(k);
  for (int i = 0; i < n; ++i) {
    decode(i);
    ti = tuple;
    for (int j = 0; j < n; ++j) {
      decode(j);
      tj = tuple;
      for (int t = 0; t < k; ++t) {
        ts[t] = parts[t].add_of(ti[t], tj[t]);
        tm[t] = parts[t].mul_of(ti[t], tj[t]);
      }
      r.add[static_cast<std::size_t>(i) * n + j] = encode(ts);
      r.mul[static_cast<std::size_t>(i) * n + j] = encode(tm);
    }
  }
  decode(0);
  r.zero = 0;
  std::vector<int> ones(k);
  for (int t = 0; t < k; ++t) ones[t] = parts[t].one;
  r.one = encode(ones);
  return r;
}

int additive_order(const FiniteRing& r, int a) {
  int t = a, k = 1;
  while (t != r.zero) {
    t = r.add_of(t, a);
    ++k;
  }
  return k;
}

int nilpotency_index(const FiniteRing& r, int a) {
  if (a == r.zero) return 1;
  int t = a;
  for (int k = 1; k <= r.order; ++k) {
    if (t == r.zero) return k;
    t = r.mul_of(t, a);
  }
  return 0;
}

}  // namespace

FiniteRing build_ring(const RingExpr& expr, int order_cap) {
  if (std::holds_alternative<CyclicExpr>(expr.node))
    return build_cyclic(std::get<CyclicExpr>(expr.node).n, order_cap);
  if (std::holds_alternative<GaloisFieldExpr>(expr.node))
    return build_gf(std::get<GaloisFieldExpr>(expr.node).q, order_cap);
  if (std::holds_alternative<QuotientExpr>(expr.node))
    return build_quotient(std::get<QuotientExpr>(expr.node), order_cap);
  return build_product(std::get<ProductExpr>(expr.node).factors, order_cap);
}

FiniteRing direct_product(const FiniteRing& r1, const FiniteRing& r2,
                          int order_cap) {
  long long total = static_cast<long long>(r1.order) * r2.order;
  if (total > order_cap)
    throw CapExceeded("product order exceeds cap " + std::to_string(order_cap));
  int n = static_cast<int>(total);
  FiniteRing r;
  r.order = n;
  r.labels.reserve(n);
  for (int i = 0; i < r1.order; ++i)
    for (int j = 0; j < r2.order; ++j)
      r.labels.push_back("(" + r1.labels[i] + "," + r2.labels[j] + ")");
  r.add.resize(static_cast<std::size_t>(n) * n);
  r.mul.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    int a1 = i / r2.order, a2 = i % r2.order;
    for (int j = 0; j < n; ++j) {
      int b1 = j / r2.order, b2 = j % r2.order;
      r.add[static_cast<std::size_t>(i) * n + j] =
          r1.add_of(a1, b1) * r2.order + r2.add_of(a2, b2);
      r.mul[static_cast<std::size_t>(i) * n + j] =
          r1.mul_of(a1, b1) * r2.order + r2.mul_of(a2, b2);
    }
  }
  r.zero = r1.zero * r2.order + r2.zero;
  r.one = r1.one * r2.order + r2.one;
  return r;
}

AxiomReport verify_ring_axioms(const FiniteRing& r) {
  AxiomReport rep;
  auto fail = [&](AxiomCheck* c, std::initializer_list<int> elems) {
    c->pass = false;
    c->witness = "(";
    bool first = true;
    for (int e : elems) {
      if (!first) c->witness += ", ";
      first = false;
      c->witness += r.labels[e];
    }
    c->witness += ")";
  };
  int n = r.order;

  AxiomCheck grp{"abelian group", true, ""};
  for (int a = 0; a < n && grp.pass; ++a) {
    if (r.add_of(r.zero, a) != a) fail(&grp, {a});
    bool has_inv = false;
    for (int b = 0; b < n && grp.pass; ++b) {
      if (r.add_of(a, b) == r.zero) has_inv = true;
      if (r.add_of(a, b) != r.add_of(b, a)) fail(&grp, {a, b});
      for (int c = 0; c < n && grp.pass; ++c)
        if (r.add_of(r.add_of(a, b), c) != r.add_of(a, r.add_of(b, c)))
          fail(&grp, {a, b, c});
    }
    if (grp.pass && !has_inv) fail(&grp, {a});
  }
  rep.checks.push_back(grp);

  AxiomCheck assoc{"associativity", true, ""};
  for (int a = 0; a < n && assoc.pass; ++a)
    for (int b = 0; b < n && assoc.pass; ++b)
      for (int c = 0; c < n && assoc.pass; ++c)
        if (r.mul_of(r.mul_of(a, b), c) != r.mul_of(a, r.mul_of(b, c)))
          fail(&assoc, {a, b, c});
  rep.checks.push_back(assoc);

  AxiomCheck comm{"commutativity", true, ""};
  for (int a = 0; a < n && comm.pass; ++a)
    for (int b = 0; b < n && comm.pass; ++b)
      if (r.mul_of(a, b) != r.mul_of(b, a)) fail(&comm, {a, b});
  rep.checks.push_back(comm);

  AxiomCheck ident{"identity", true, ""};
  if (r.one == r.zero) fail(&ident, {r.one});
  for (int a = 0; a < n && ident.pass; ++a)
    if (r.mul_of(r.one, a) != a) fail(&ident, {a});
  rep.checks.push_back(ident);

  AxiomCheck dist{"distributivity", true, ""};
  for (int a = 0; a < n && dist.pass; ++a)
    for (int b = 0; b < n && dist.pass; ++b)
      for (int c = 0; c < n && dist.pass; ++c)
        if (r.mul_of(a, r.add_of(b, c)) !=
            r.add_of(r.mul_of(a, b), r.mul_of(a, c)))
          fail(&dist, {a, b, c});
  rep.checks.push_back(dist);

  for (const AxiomCheck& c : rep.checks)
    if (!c.pass) rep.ok = false;
  return rep;
}

std::vector<int> zero_divisors(const FiniteRing& r) {
  std::vector<int> out;
  for (int a = 0; a < r.order; ++a) {
    if (a == r.zero) continue;
    for (int b = 0; b < r.order; ++b) {
      if (b == r.zero) continue;
      if (r.mul_of(a, b) == r.zero) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

std::vector<int> nilpotents(const FiniteRing& r) {
  std::vector<int> out;
  for (int a = 0; a < r.order; ++a)
    if (a != r.zero && nilpotency_index(r, a) > 0) out.push_back(a);
  return out;
}

std::vector<int> units(const FiniteRing& r) {
  std::vector<int> out;
  for (int a = 0; a < r.order; ++a)
    for (int b = 0; b < r.order; ++b)
      if (r.mul_of(a, b) == r.one) {
        out.push_back(a);
        break;
      }
  return out;
}

std::vector<int> annihilator(const FiniteRing& r, int a) {
  if (a < 0 || a >= r.order)
    throw InvalidParameter("element index out of range");
  std::vector<int> out;
  for (int d = 0; d < r.order; ++d)
    if (r.mul_of(d, a) == r.zero) out.push_back(d);
  return out;
}

LocalRingResult is_local(const FiniteRing& r) {
  std::vector<bool> is_unit(r.order, false);
  for (int u : units(r)) is_unit[u] = true;
  std::vector<int> nonunits;
  for (int a = 0; a < r.order; ++a)
    if (!is_unit[a]) nonunits.push_back(a);
  for (int a : nonunits)
    for (int b : nonunits)
      if (is_unit[r.add_of(a, b)]) return {false, {}};
  return {true, nonunits};
}

int characteristic(const FiniteRing& r) {
  return additive_order(r, r.one);
}

bool ring_isomorphic(const FiniteRing& r1, const FiniteRing& r2) {
  if (r1.order > kRingIsoCap || r2.order > kRingIsoCap)
    throw CapExceeded("isomorphism search capped at order " +
                      std::to_string(kRingIsoCap));
  if (r1.order != r2.order) return false;
  int n = r1.order;

  auto profile = [](const FiniteRing& r) {
    std::vector<int> orders;
    for (int a = 0; a < r.order; ++a) orders.push_back(additive_order(r, a));
    std::sort(orders.begin(), orders.end());
    return orders;
  };
  if (characteristic(r1) != characteristic(r2)) return false;
  if (units(r1).size() != units(r2).size()) return false;
  if (nilpotents(r1).size() != nilpotents(r2).size()) return false;
  if (profile(r1) != profile(r2)) return false;

  // Per-element invariants cut the candidate lists before backtracking.
  auto invariants = [](const FiniteRing& r) {
    std::vector<bool> is_unit(r.order, false);
    for (int u : units(r)) is_unit[u] = true;
    std::vector<std::array<int, 4>> inv(r.order);
    for (int a = 0; a < r.order; ++a)
      inv[a] = {additive_order(r, a), nilpotency_index(r, a),
                is_unit[a] ? 1 : 0,
                static_cast<int>(annihilator(r, a).size())};
    return inv;
  };
  auto inv1 = invariants(r1), inv2 = invariants(r2);

  std::vector<int> map(n, -1), used(n, 0);
  auto consistent = [&](int x, int y) {
    for (int u = 0; u < n; ++u) {
      if (map[u] < 0) continue;
      int s = r1.add_of(x, u);
      if (map[s] >= 0 && map[s] != r2.add_of(y, map[u])) return false;
      int m = r1.mul_of(x, u);
      if (map[m] >= 0 && map[m] != r2.mul_of(y, map[u])) return false;
    }
    return true;
  };

  // Assign most-constrained elements first (smallest candidate class).
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> class_size(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (inv2[b] == inv1[a]) ++class_size[a];
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (class_size[a] != class_size[b]) return class_size[a] < class_size[b];
    return a < b;
  });

  auto full_check = [&]() {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (map[r1.add_of(a, b)] != r2.add_of(map[a], map[b])) return false;
        if (map[r1.mul_of(a, b)] != r2.mul_of(map[a], map[b])) return false;
      }
    return true;
  };

  auto assign = [&](int x, int y) {
    map[x] = y;
    used[y] = 1;
  };
  auto unassign = [&](int x) {
    used[map[x]] = 0;
    map[x] = -1;
  };

  if (inv1[r1.zero] != inv2[r2.zero] || inv1[r1.one] != inv2[r2.one])
    return false;
  assign(r1.zero, r2.zero);
  if (r1.one != r1.zero) assign(r1.one, r2.one);

  std::vector<int> todo;
  for (int x : order)
    if (map[x] < 0) todo.push_back(x);

  std::function<bool(std::size_t)> dfs = [&](std::size_t pos) {
    if (pos == todo.size()) return full_check();
    int x = todo[pos];
    for (int y = 0; y < n; ++y) {
      if (used[y] || inv2[y] != inv1[x]) continue;
      if (!consistent(x, y)) continue;
      assign(x, y);
      if (dfs(pos + 1)) return true;
      unassign(x);
    }
    return false;
  };
  return dfs(0);
}

}  // namespace rtl
