#include "meropencil/elimination.hpp"

#include <algorithm>
#include <stdexcept>

namespace mero {

namespace {

UPoly<MPoly> as_univariate_in(const MPoly& f, size_t var) {
  std::vector<MPoly> cs(static_cast<size_t>(std::max(f.degree_in(var), 0)) + 1, MPoly(f.vars()));
  for (const auto& [e, c] : f.terms()) {
    MPoly::Exponent g = e;
    int k = g[var];
    g[var] = 0;
    cs[static_cast<size_t>(k)].add_term(g, c);
  }
  return UPoly<MPoly>(std::move(cs));
}

std::vector<size_t> occurring_vars(const MPoly& f) {
  std::vector<size_t> out;
  for (size_t i = 0; i < f.nvars(); ++i)
    if (f.degree_in(i) > 0) out.push_back(i);
  return out;
}

}  // namespace

MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var) {
  if (f.vars() != g.vars()) throw std::invalid_argument("resultant: variable lists differ");
  int iv = f.var_index(var);
  if (iv < 0) throw std::invalid_argument("resultant: unknown variable " + var);
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero input");
  MPoly r = resultant_prs(as_univariate_in(f, static_cast<size_t>(iv)), as_univariate_in(g, static_cast<size_t>(iv)));
  if (r.vars().empty()) return MPoly::constant(f.vars(), r.constant_term());
  return r;
}

UPoly<Rational> to_univariate(const MPoly& f) {
  auto occ = occurring_vars(f);
  if (occ.size() > 1) throw std::invalid_argument("to_univariate: more than one variable");
  size_t v = occ.empty() ? 0 : occ[0];
  std::vector<Rational> cs(static_cast<size_t>(std::max(f.total_degree(), 0)) + 1, Rational(0));
  for (const auto& [e, c] : f.terms()) cs[static_cast<size_t>(e.empty() ? 0 : e[v])] += c;
  return UPoly<Rational>(std::move(cs));
}

MPoly from_univariate(const UPoly<Rational>& f, const std::string& var) {
  MPoly out(std::vector<std::string>{var});
  for (size_t i = 0; i < f.size(); ++i) out.add_term({static_cast<int>(i)}, f[i]);
  return out;
}

MPoly squarefree_part(const MPoly& f, const std::string& var) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero input");
  int iv = f.var_index(var);
  if (iv < 0) throw std::invalid_argument("squarefree_part: unknown variable " + var);
  auto occ = occurring_vars(f);
  occ.erase(std::remove(occ.begin(), occ.end(), static_cast<size_t>(iv)), occ.end());
  if (occ.size() > 1) throw std::invalid_argument("squarefree_part: more than two variables");
  if (occ.empty()) {
    UPoly<Rational> u = to_univariate(f);
    UPoly<Rational> s = squarefree_part(u);
    MPoly out(f.vars());
    for (size_t i = 0; i < s.size(); ++i) {
      MPoly::Exponent e(f.nvars(), 0);
      e[static_cast<size_t>(iv)] = static_cast<int>(i);
      out.add_term(e, s[i]);
    }
    return out;
  }
  size_t iu = occ[0];
  BiPoly<Rational> b = bipoly_from<Rational>(f, iu, static_cast<size_t>(iv));
  BiPoly<Rational> g = bi_gcd(b, bi_dv(b));
  BiPoly<Rational> q = bi_normalize(bi_divexact(b, g));
  MPoly out(f.vars());
  for (size_t j = 0; j < q.size(); ++j)
    for (size_t i = 0; i < q[j].size(); ++i) {
      MPoly::Exponent e(f.nvars(), 0);
      e[iu] = static_cast<int>(i);
      e[static_cast<size_t>(iv)] = static_cast<int>(j);
      out.add_term(e, q[j][i]);
    }
  return out.monic();
}

UPoly<Rational> primitive_integer(const UPoly<Rational>& f) {
  if (f.is_zero()) return f;
  Integer l = 1;
  for (const auto& c : f.coeffs()) l = lcm(l, c.den());
  Integer g = 0;
  for (const auto& c : f.coeffs()) g = gcd(g, Integer(c.num() * (l / c.den())));
  Rational s(l, g);
  if (f.lc().sign() < 0) s = -s;
  return f.scaled(s);
}

namespace {

using QPoly = UPoly<Rational>;

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
  return r;
}

int sign_at(const QPoly& g, const Rational& x) { return g.eval(x).sign(); }

/// Sign variations of (1+x)^n g((a + b x)/(1 + x)), bounding the number of
/// roots in (a, b).
int descartes(const QPoly& g, const Rational& a, const Rational& b) {
  QPoly g1 = compose(g, QPoly(std::vector<Rational>{a, b - a}));
  std::vector<Rational> rev(g1.coeffs().rbegin(), g1.coeffs().rend());
  QPoly g3 = compose(QPoly(std::move(rev)), QPoly(std::vector<Rational>{Rational(1), Rational(1)}));
  int var = 0, last = 0;
  for (const auto& c : g3.coeffs()) {
    int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

/// Smallest-denominator rational strictly inside (a, b).
Rational simplest_between(const Rational& a, const Rational& b) {
  Integer fl = floor_q(a);
  Rational n1(Integer(fl + 1));
  if (n1 < b) return n1;
  Rational base(fl);
  Rational lo = b - base;
  Rational hi = a - base;
  Rational y;
  if (hi.is_zero()) {
    y = Rational(Integer(floor_q(Rational(1) / lo) + 1));
  } else {
    y = simplest_between(Rational(1) / lo, Rational(1) / hi);
  }
  return base + Rational(1) / y;
}

std::vector<Rational> rational_roots_squarefree(const QPoly& g0) {
  std::vector<Rational> out;
  QPoly g = primitive_integer(g0);
  if (g.degree() <= 0) return out;
  if (g.coeff(0).is_zero()) {
    out.emplace_back(0);
    g = exact_div(g, QPoly::variable());
  }
  if (g.degree() <= 0) return out;
  for (;;) {
    // restarts after deflating a root met as a bisection point
    if (g.degree() <= 0) break;
    Integer L = abs(g.lc().num());
    Rational bound(1);
    for (const auto& c : g.coeffs()) bound = std::max(bound, (c / g.lc()).abs());
    bound = Rational(Integer(floor_q(bound) + 2));
    Rational tol = Rational(Integer(1), Integer(L * L * 2));

    std::vector<Rational> found;
    bool restart = false;
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty() && !restart) {
      auto [a, b] = stack.back();
      stack.pop_back();
      int v = descartes(g, a, b);
      if (v == 0) continue;
      if (v == 1) {
        int sa = sign_at(g, a);
        bool hit = false;
        while (b - a >= tol) {
          Rational m = (a + b) / Rational(2);
          int sm = sign_at(g, m);
          if (sm == 0) {
            found.push_back(m);
            hit = true;
            break;
          }
          if (sm == sa)
            a = m;
          else
            b = m;
        }
        if (hit) continue;
        Rational s = simplest_between(a, b);
        if (s.den() <= L && g.eval(s).is_zero()) found.push_back(s);
        continue;
      }
      Rational m = (a + b) / Rational(2);
      if (g.eval(m).is_zero()) {
        out.push_back(m);
        g = primitive_integer(exact_div(g, QPoly(std::vector<Rational>{-m, Rational(1)})));
        restart = true;
        break;
      }
      stack.push_back({m, b});
      stack.push_back({a, m});
    }
    if (restart) continue;
    out.insert(out.end(), found.begin(), found.end());
    break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RationalRoots rational_roots(const UPoly<Rational>& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  RationalRoots res;
  auto parts = squarefree_decomposition(f);
  QPoly residual = monic(f);
  for (size_t k = 1; k < parts.size(); ++k) {
    for (const auto& r : rational_roots_squarefree(parts[k])) {
      res.roots.emplace_back(r, static_cast<int>(k));
      QPoly lin(std::vector<Rational>{-r, Rational(1)});
      residual = exact_div(residual, lin.pow(static_cast<unsigned>(k)));
    }
  }
  std::sort(res.roots.begin(), res.roots.end());
  res.residual = monic(residual);
  return res;
}

}  // namespace mero
