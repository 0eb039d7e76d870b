#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "meropencil/bipoly.hpp"
#include "meropencil/elimination.hpp"
#include "meropencil/ext.hpp"

namespace mero {

/// A packet of conjugate projective points: one point per root t of
/// `modulus`.  The coordinate with index `chart` is 1; the two others, in
/// increasing index order, are coords[0](t) and coords[1](t).
struct PointClass {
  UPoly<Rational> modulus;
  int chart = 2;
  std::array<UPoly<Rational>, 2> coords;

  int count() const { return modulus.degree(); }
  bool is_rational() const { return modulus.degree() == 1; }
  Rational root() const { return -modulus.coeff(0) / modulus.coeff(1); }
  /// Homogeneous coordinates of a rational class.
  std::array<Rational, 3> rational_point() const;
  std::string to_string() const;
};

/// Monic squarefree classes of the roots of f: one linear factor per
/// rational root (ascending) followed by the residual factor, if any.
std::vector<UPoly<Rational>> root_classes(const UPoly<Rational>& f);

/// Points of V(f1, f2) in the affine chart `chart` (u, v are the chart
/// coordinates).  The system must be zero-dimensional; projection to u is
/// made injective by a shear u -> u + c v (c = 0 first, then seeded values,
/// at most 8 attempts).
std::vector<PointClass> solve_affine(const BiPoly<Rational>& f1, const BiPoly<Rational>& f2, int chart,
                                     std::uint64_t seed);

namespace detail {

template <class K>
UPoly<K> lift_poly(const UPoly<Rational>& p) {
  return up_map<K>(p, [](const Rational& c) { return lift<K>(c); });
}

}  // namespace detail

/// Runs fn(c0, c1) at the points of a class, with coordinates in K (rational
/// classes) or in a dynamic extension of K.  Returns (number of points,
/// result) per split component, in a deterministic order.
template <class K, class Fn>
auto over_points(const PointClass& pc, Fn&& fn) -> std::vector<std::pair<int, decltype(fn(K(0), K(0)))>> {
  using R = decltype(fn(K(0), K(0)));
  std::vector<std::pair<int, R>> out;
  if (pc.is_rational()) {
    Rational r = pc.root();
    out.emplace_back(1, fn(lift<K>(pc.coords[0].eval(r)), lift<K>(pc.coords[1].eval(r))));
    return out;
  }
  auto parts = split_run<K>(detail::lift_poly<K>(pc.modulus), [&](const ExtContextPtr<K>& ctx) {
    Ext<K> c0(ctx, detail::lift_poly<K>(pc.coords[0]));
    Ext<K> c1(ctx, detail::lift_poly<K>(pc.coords[1]));
    return fn(c0, c1);
  });
  for (auto& [m, r] : parts) out.emplace_back(m.degree(), std::move(r));
  return out;
}

/// Runs fn(c0, c1) over Q or over the dynamic extension of a class and
/// returns the sub-classes on which each result was obtained.
template <class Fn>
auto refine_class(const PointClass& pc, Fn&& fn)
    -> std::vector<std::pair<PointClass, decltype(fn(Rational(0), Rational(0)))>> {
  std::vector<std::pair<PointClass, decltype(fn(Rational(0), Rational(0)))>> out;
  if (pc.is_rational()) {
    Rational r = pc.root();
    out.emplace_back(pc, fn(pc.coords[0].eval(r), pc.coords[1].eval(r)));
    return out;
  }
  auto parts = split_run<Rational>(pc.modulus, [&](const ExtContextPtr<Rational>& ctx) {
    return fn(Ext<Rational>(ctx, pc.coords[0]), Ext<Rational>(ctx, pc.coords[1]));
  });
  for (auto& [m, r] : parts) {
    PointClass q;
    q.modulus = m;
    q.chart = pc.chart;
    q.coords = {pc.coords[0] % m, pc.coords[1] % m};
    out.emplace_back(std::move(q), std::move(r));
  }
  return out;
}

/// Components of a class where the predicate holds.
template <class Pred>
std::vector<PointClass> filter_class(const PointClass& pc, Pred&& pred) {
  std::vector<PointClass> out;
  for (auto& [q, ok] : refine_class(pc, [&](const auto& c0, const auto& c1) { return static_cast<bool>(pred(c0, c1)); }))
    if (ok) out.push_back(std::move(q));
  return out;
}

/// f(u + c v, v).
BiPoly<Rational> shear_u(const BiPoly<Rational>& f, const Rational& c);

/// Translate of f(u, v) to the point (c0, c1): f(c0 + u, c1 + v).
template <class K>
BiPoly<K> bi_translate(const BiPoly<Rational>& f, const K& c0, const K& c1) {
  UPoly<K> lu(std::vector<K>{c0, K(1)});
  UPoly<UPoly<K>> lv(std::vector<UPoly<K>>{UPoly<K>(c1), UPoly<K>(K(1))});
  BiPoly<K> out;
  for (size_t j = f.size(); j-- > 0;) {
    UPoly<K> row;
    for (size_t i = f[j].size(); i-- > 0;) row = row * lu + UPoly<K>(lift<K>(f[j][i]));
    out = out * lv + BiPoly<K>(row);
  }
  return out;
}

/// Univariate polynomial in v obtained by substituting u = x.
template <class K>
UPoly<K> bi_eval_u(const BiPoly<Rational>& f, const K& x) {
  std::vector<K> out;
  out.reserve(f.size());
  for (const auto& c : f.coeffs()) {
    K acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + lift<K>(c[i]);
    out.push_back(acc);
  }
  UPoly<K> r(std::move(out));
  r.semantic_trim();
  return r;
}

}  // namespace mero
