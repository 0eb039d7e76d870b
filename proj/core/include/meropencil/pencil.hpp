#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "meropencil/bipoly.hpp"
#include "meropencil/localalg.hpp"
#include "meropencil/mpoly.hpp"
#include "meropencil/solve.hpp"

namespace mero {

/// Which part of the plane is removed: V = {Q = 0}, V = axis, or nothing.
enum class VChoice { Q, Axis, None };

std::string to_string(VChoice v);
/// "Q", "axis" or "none".
VChoice parse_vchoice(const std::string& s);

/// Malformed or unusable input (exit code 1 at the command line).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A hypothesis of the analysis fails; `flag` names it.
struct HypothesisError : std::runtime_error {
  HypothesisError(std::string f, const std::string& msg) : std::runtime_error(msg), flag(std::move(f)) {}
  std::string flag;
};

/// {"x", "y", "z"}.
const std::vector<std::string>& projective_vars();

struct Pencil {
  MPoly P, Q;  // homogeneous in (x, y, z), coprime, same degree
  int degree = 0;
  VChoice V = VChoice::Q;
  bool common_factor_removed = false;
  std::optional<MPoly> affine;  // the polynomial in (x, y) for affine input
};

Pencil make_pencil(const MPoly& P, const MPoly& Q, VChoice V = VChoice::Q);
Pencil make_pencil(const std::string& P, const std::string& Q, VChoice V = VChoice::Q);
Pencil from_affine(const std::string& P);
/// (Q, P): the value infinity of the original becomes the value 0.
Pencil swap_roles(const Pencil& pen);

/// gcd of two homogeneous ternary forms, normalized.
MPoly homogeneous_gcd(const MPoly& A, const MPoly& B);
/// Product of the distinct irreducible factors of a homogeneous form.
MPoly reduced_form(const MPoly& F);

/// Dehomogenization in the chart where coordinate `chart` is 1.
BiPoly<Rational> chart_poly(const MPoly& F, int chart);
/// Homogenization of a chart polynomial to degree `degree`.
MPoly homogenize(const BiPoly<Rational>& f, int chart, int degree);

/// Translate of P - a Q to the chart origin at (c0, c1).
template <class K>
BiPoly<K> chart_germ(const Pencil& pen, int chart, const K& c0, const K& c1, const K& a) {
  BiPoly<K> p = chart_translate<K>(pen.P, chart, c0, c1);
  BiPoly<K> q = chart_translate<K>(pen.Q, chart, c0, c1);
  return p - bi_scale(q, a);
}

template <class K>
K bi_eval(const BiPoly<Rational>& f, const K& c0, const K& c1) {
  return bi_eval_u(f, c0).eval(c1);
}

template <class K2, class K1>
K2 embed(const K1& a) {
  if constexpr (std::is_same_v<K1, K2>)
    return a;
  else
    return K2(a);
}

struct AxisPoint {
  PointClass point;
  long multiplicity = 0;  // I(P, Q) at each point of the class
};

struct AxisReport {
  std::vector<AxisPoint> points;
  long bezout_expected = 0;
  long bezout_accounted = 0;
  std::vector<std::string> residual;
  long count() const;
};

AxisReport axis_points(const Pencil& pen, std::uint64_t seed);

/// Critical point of F on X off the axis; `value` is F there as a
/// polynomial in the class generator, unless the value is infinite.
struct CriticalClass {
  PointClass point;
  bool infinite_value = false;
  UPoly<Rational> value;
};

/// Throws HypothesisError when the critical locus is positive-dimensional.
std::vector<CriticalClass> critical_points(const Pencil& pen, std::uint64_t seed);

struct SingularPoint {
  PointClass point;
  Multiplicity mu;
};

/// Singular points of the projective curve G = 0 (G reduced).
std::vector<SingularPoint> curve_singularities(const MPoly& G, std::uint64_t seed);
/// Euler characteristic of the reduced curve G = 0: e(3 - e) + sum of mu.
long curve_euler(const MPoly& G, std::uint64_t seed);

/// Jacobian curve of (p, q) in the given chart after removing the
/// components in {q = 0} and in the critical set of p/q.
BiPoly<Rational> polar_curve(const Pencil& pen, int chart);

struct ValueClass {
  enum class Kind { rational, algebraic, infinity };
  Kind kind = Kind::rational;
  Rational value;
  UPoly<Rational> modulus;  // monic squarefree, s - value for rational classes
  std::vector<std::string> witnesses;

  static ValueClass rational_value(const Rational& r);
  static ValueClass from_modulus(const UPoly<Rational>& m);
  static ValueClass infinity();
  int count() const { return kind == Kind::algebraic ? modulus.degree() : 1; }
  bool is_infinity() const { return kind == Kind::infinity; }
  std::string to_string() const;
};

/// Runs fn(a) for the values of a finite class, over Q or over a dynamic
/// extension.  Returns the sub-classes on which each result was obtained.
template <class Fn>
auto over_value(const ValueClass& vc, Fn&& fn) -> std::vector<std::pair<ValueClass, decltype(fn(Rational(0)))>> {
  std::vector<std::pair<ValueClass, decltype(fn(Rational(0)))>> out;
  if (vc.is_infinity()) throw std::logic_error("over_value: infinity is handled by swapping P and Q");
  if (vc.kind == ValueClass::Kind::rational) {
    out.emplace_back(vc, fn(vc.value));
    return out;
  }
  auto parts = split_run<Rational>(
      vc.modulus, [&](const ExtContextPtr<Rational>& ctx) { return fn(Ext<Rational>::gen(ctx)); }, "s");
  for (auto& [m, r] : parts) {
    ValueClass sub = ValueClass::from_modulus(m);
    sub.witnesses = vc.witnesses;
    out.emplace_back(std::move(sub), std::move(r));
  }
  return out;
}

/// Axis point class together with its generic family data.
struct AxisFamily {
  PointClass point;
  long multiplicity = 0;
  Multiplicity mu_generic;
  std::vector<UPoly<Rational>> certificates;  // in s
  /// Generic I(polar curve, p - s q) at the point, for (P, Q) and for (Q, P);
  /// empty when the polar germ is empty there.
  std::optional<long> polar_generic, polar_generic_swapped;
};

/// Everything global that the per-value analysis needs.
struct PencilContext {
  Pencil pencil;
  Pencil swapped;
  std::uint64_t seed = 0;
  AxisReport axis;
  std::vector<AxisFamily> families;
  std::vector<CriticalClass> critical;
  std::array<BiPoly<Rational>, 3> polar, polar_swapped;
  std::vector<ValueClass> candidates;
  Rational generic;
  std::vector<std::string> flags;

  long axis_count() const { return axis.count(); }
};

PencilContext prepare(const Pencil& pen, std::uint64_t seed);

/// Finite superset of the atypical values: critical values and confirmed
/// Milnor-number jumps at the axis (infinity included when V != Q).
std::vector<ValueClass> candidate_atypical_values(const Pencil& pen, std::uint64_t seed);

}  // namespace mero
