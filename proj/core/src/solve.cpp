#include "meropencil/solve.hpp"

#include <stdexcept>

#include "meropencil/shear.hpp"

namespace mero {

std::array<Rational, 3> PointClass::rational_point() const {
  if (!is_rational()) throw std::logic_error("rational_point: class is not rational");
  Rational r = root();
  std::array<Rational, 3> p;
  int k = 0;
  for (int i = 0; i < 3; ++i) p[static_cast<size_t>(i)] = i == chart ? Rational(1) : coords[static_cast<size_t>(k++)].eval(r);
  return p;
}

std::string PointClass::to_string() const {
  std::array<std::string, 3> c;
  int k = 0;
  if (is_rational()) {
    auto p = rational_point();
    for (size_t i = 0; i < 3; ++i) c[i] = p[i].to_string();
  } else {
    for (int i = 0; i < 3; ++i) c[static_cast<size_t>(i)] = i == chart ? "1" : coords[static_cast<size_t>(k++)].to_string("t");
  }
  std::string s = "[" + c[0] + " : " + c[1] + " : " + c[2] + "]";
  if (!is_rational()) s += " where " + modulus.to_string("t") + " = 0";
  return s;
}

std::vector<UPoly<Rational>> root_classes(const UPoly<Rational>& f) {
  std::vector<UPoly<Rational>> out;
  if (f.degree() <= 0) return out;
  RationalRoots rr = rational_roots(squarefree_part(f));
  for (const auto& [r, m] : rr.roots) out.emplace_back(std::vector<Rational>{-r, Rational(1)});
  if (rr.residual.degree() > 0) out.push_back(rr.residual);
  return out;
}

BiPoly<Rational> shear_u(const BiPoly<Rational>& f, const Rational& c) {
  if (c.is_zero()) return f;
  // powers of (u + c v)
  BiPoly<Rational> L = bi_u<Rational>() + bi_scale(bi_v<Rational>(), c);
  int du = bi_degree_u(f);
  std::vector<BiPoly<Rational>> pw{bi_constant(Rational(1))};
  for (int i = 1; i <= du; ++i) pw.push_back(pw.back() * L);
  BiPoly<Rational> out;
  for (size_t j = 0; j < f.size(); ++j)
    for (size_t i = 0; i < f[j].size(); ++i) {
      if (f[j][i].is_zero()) continue;
      out += bi_scale(pw[i], f[j][i]) * BiPoly<Rational>::monomial(UPoly<Rational>(Rational(1)), static_cast<int>(j));
    }
  return out;
}

namespace {

enum class Fibre { empty, single, multiple };

/// Solutions above u = x: the common roots in v of f1(x, v), f2(x, v).
template <class K>
Fibre fibre_solution(const BiPoly<Rational>& f1, const BiPoly<Rational>& f2, const K& x, K& y0) {
  UPoly<K> a = bi_eval_u(f1, x), b = bi_eval_u(f2, x);
  if (a.is_zero() && b.is_zero()) throw std::runtime_error("solve_affine: positive-dimensional solution set");
  UPoly<K> g = gcd(a, b);
  if (g.degree() <= 0) return Fibre::empty;
  UPoly<K> s = squarefree_part(g);
  if (s.degree() > 1) return Fibre::multiple;
  y0 = -s.coeff(0) / s.coeff(1);
  return Fibre::single;
}

/// Element of degree 1 in v of the subresultant PRS of (a, b), or zero when
/// the sequence skips degree 1.  It lies in the ideal (a, b).
BiPoly<Rational> linear_subresultant(BiPoly<Rational> a, BiPoly<Rational> b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 1) return b;
  UPoly<Rational> g(Rational(1)), h(Rational(1));
  while (b.degree() > 1) {
    int delta = a.degree() - b.degree();
    BiPoly<Rational> r = prem(a, b);
    if (r.is_zero()) return r;
    a = std::move(b);
    b = divexact_coeffs(r, g * ring_pow(h, static_cast<unsigned>(delta)));
    g = a.lc();
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = exact_quotient(ring_pow(g, static_cast<unsigned>(delta)), ring_pow(h, static_cast<unsigned>(delta - 1)));
  }
  return b.degree() == 1 ? b : BiPoly<Rational>();
}

template <class K>
K horner(const UPoly<Rational>& f, const K& x) {
  K acc(0);
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + lift<K>(f[i]);
  return acc;
}

/// Fibre above u = x read off the linear subresultant when its leading
/// coefficient is a unit there; the general gcd otherwise.
template <class K>
Fibre fibre_fast(const BiPoly<Rational>& f1, const BiPoly<Rational>& f2, const BiPoly<Rational>& lin, const K& x,
                 K& y0) {
  if (!lin.is_zero()) {
    K b1 = horner(lin[1], x);
    if (!is_zero(b1)) {
      y0 = -horner(lin[0], x) / b1;
      return is_zero(bi_eval_u(f1, x).eval(y0)) && is_zero(bi_eval_u(f2, x).eval(y0)) ? Fibre::single
                                                                                       : Fibre::empty;
    }
  }
  return fibre_solution(f1, f2, x, y0);
}

}  // namespace

std::vector<PointClass> solve_affine(const BiPoly<Rational>& f1, const BiPoly<Rational>& f2, int chart,
                                     std::uint64_t seed) {
  if (f1.is_zero() || f2.is_zero()) throw std::runtime_error("solve_affine: zero equation");
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    Rational c = attempt == 0 ? Rational(0) : Rational(shear_constants(seed + attempt, 1)[0]);
    BiPoly<Rational> g1 = shear_u(f1, c), g2 = shear_u(f2, c);
    UPoly<Rational> R = resultant_v(g1, g2);
    if (R.is_zero()) throw std::runtime_error("solve_affine: equations share a common component");
    BiPoly<Rational> lin = linear_subresultant(g1, g2);
    std::vector<PointClass> out;
    bool good = true;
    for (const auto& m : root_classes(R)) {
      if (m.degree() == 1) {
        Rational x = -m.coeff(0);
        Rational y;
        Fibre f = fibre_fast(g1, g2, lin, x, y);
        if (f == Fibre::multiple) {
          good = false;
          break;
        }
        if (f == Fibre::empty) continue;
        PointClass p;
        p.modulus = m;
        p.chart = chart;
        p.coords = {UPoly<Rational>(x + c * y), UPoly<Rational>(y)};
        out.push_back(std::move(p));
        continue;
      }
      using E = Ext<Rational>;
      struct Part {
        Fibre kind;
        UPoly<Rational> x, y;
      };
      auto parts = split_run<Rational>(m, [&](const ExtContextPtr<Rational>& ctx) {
        E t = E::gen(ctx), y;
        Fibre f = fibre_fast(g1, g2, lin, t, y);
        if (f != Fibre::single) return Part{f, {}, {}};
        return Part{f, (t + E(c) * y).rep(), y.rep()};
      });
      for (auto& [mod, part] : parts) {
        if (part.kind == Fibre::multiple) good = false;
        if (part.kind != Fibre::single) continue;
        PointClass p;
        p.modulus = mod;
        p.chart = chart;
        p.coords = {part.x, part.y};
        out.push_back(std::move(p));
      }
      if (!good) break;
    }
    if (good) return out;
  }
  throw std::runtime_error("solve_affine: no separating shear within the retry budget");
}

}  // namespace mero
