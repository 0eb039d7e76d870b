#include <algorithm>
#include <set>

#include "doctest.h"
#include "meropencil/pencil.hpp"

using namespace mero;

namespace {

std::string example_P(int a, int b) {
  return "x*(z^" + std::to_string(a + b) + " + x^" + std::to_string(a) + "*y^" + std::to_string(b) + ")";
}
std::string example_Q(int p, int q) { return "y^" + std::to_string(p) + "*z^" + std::to_string(q); }

std::set<std::string> rational_points(const AxisReport& r) {
  std::set<std::string> out;
  for (const auto& ap : r.points)
    if (ap.point.is_rational()) {
      auto p = ap.point.rational_point();
      // scale so that the last nonzero coordinate is 1
      Rational s;
      for (const auto& c : p)
        if (!c.is_zero()) s = c;
      out.insert("[" + (p[0] / s).to_string() + ":" + (p[1] / s).to_string() + ":" + (p[2] / s).to_string() + "]");
    }
  return out;
}

std::vector<std::string> values(const std::vector<ValueClass>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

}  // namespace

TEST_CASE("make_pencil validation") {
  Pencil ex = make_pencil(example_P(1, 1), example_Q(2, 1));
  CHECK(ex.degree == 3);
  CHECK_FALSE(ex.common_factor_removed);

  Pencil r = make_pencil("x^2", "x*y");
  CHECK(r.common_factor_removed);
  CHECK(r.degree == 1);
  CHECK(r.P.to_string() == "x");
  CHECK(r.Q.to_string() == "y");

  CHECK_THROWS_AS(make_pencil("x^2", "y^3"), InputError);
  CHECK_THROWS_AS(make_pencil("x^2 + y", "z^2"), InputError);
  CHECK_THROWS_AS(make_pencil("x", "0"), InputError);
  CHECK_THROWS_AS(make_pencil("x +", "y"), InputError);
  CHECK_THROWS_AS(parse_vchoice("V"), InputError);
}

TEST_CASE("from_affine homogenizes by z") {
  Pencil p = from_affine("x + x^2*y");
  CHECK(p.P == parse_polynomial("x*z^2 + x^2*y", projective_vars()));
  CHECK(p.Q == parse_polynomial("z^3", projective_vars()));
  CHECK(p.V == VChoice::Q);
  CHECK(p.affine.has_value());
  CHECK(from_affine("x*y").Q == parse_polynomial("z^2", projective_vars()));
  CHECK_THROWS_AS(from_affine("7"), InputError);
}

TEST_CASE("axis points of the fixtures") {
  Pencil ex = make_pencil(example_P(1, 1), example_Q(2, 1));
  AxisReport r = axis_points(ex, 1);
  CHECK(rational_points(r) == std::set<std::string>{"[1:0:0]", "[0:1:0]", "[0:0:1]"});
  CHECK(r.bezout_accounted == 9);
  CHECK(r.residual.empty());

  AxisReport r2 = axis_points(make_pencil("x*y", "z^2"), 1);
  CHECK(rational_points(r2) == std::set<std::string>{"[1:0:0]", "[0:1:0]"});
  CHECK(r2.bezout_accounted == 4);

  AxisReport r3 = axis_points(make_pencil("x^2 + y^2", "z^2"), 1);
  REQUIRE(r3.points.size() == 1);
  CHECK(r3.points[0].point.modulus.to_string("t") == "t^2 + 1");
  CHECK(r3.points[0].multiplicity == 2);
  CHECK(r3.bezout_accounted == 4);
}

TEST_CASE("axis points lie on every fibre") {
  Pencil ex = make_pencil(example_P(2, 1), example_Q(3, 1));
  for (const auto& ap : axis_points(ex, 3).points) {
    auto z = over_points<Rational>(ap.point, [&](const auto& c0, const auto& c1) {
      using K = std::decay_t<decltype(c0)>;
      return is_zero(bi_at_origin(chart_germ<K>(ex, ap.point.chart, c0, c1, K(5)))) &&
             is_zero(bi_at_origin(chart_germ<K>(ex, ap.point.chart, c0, c1, K(-2))));
    });
    for (auto& [n, ok] : z) CHECK(ok);
  }
}

TEST_CASE("chart germ at the example point") {
  Pencil ex = make_pencil(example_P(1, 1), example_Q(2, 1));
  auto g = chart_germ<Rational>(ex, 1, Rational(0), Rational(0), Rational(0));
  CHECK(g == bipoly_from<Rational>(parse_polynomial("u*v^2 + u^2", {"u", "v"}), 0, 1));
  auto g3 = chart_germ<Rational>(ex, 1, Rational(0), Rational(0), Rational(3));
  CHECK(g3 == bipoly_from<Rational>(parse_polynomial("u*v^2 + u^2 - 3*v", {"u", "v"}), 0, 1));
}

TEST_CASE("candidate atypical values") {
  CHECK(values(candidate_atypical_values(make_pencil(example_P(1, 1), example_Q(2, 1)), 1)) ==
        std::vector<std::string>{"0"});
  CHECK(values(candidate_atypical_values(from_affine("x + x^2*y"), 1)) == std::vector<std::string>{"0"});
  CHECK(values(candidate_atypical_values(from_affine("x^2 + y^2"), 1)) == std::vector<std::string>{"0"});
  auto c = candidate_atypical_values(from_affine("x^3 - 3*x + y^2"), 1);
  CHECK(values(c) == std::vector<std::string>{"-2", "2"});
  auto alg = candidate_atypical_values(from_affine("x^3 - 6*x + y^2"), 1);
  REQUIRE(alg.size() == 1);
  CHECK(alg[0].kind == ValueClass::Kind::algebraic);
  CHECK(alg[0].modulus.to_string("s") == "s^2 - 32");
}

TEST_CASE("candidate values are seed stable") {
  for (auto text : {"x + x^2*y", "x^3 - 6*x + y^2", "x*y^2 - y + x^2"}) {
    Pencil p = from_affine(text);
    CHECK(values(candidate_atypical_values(p, 1)) == values(candidate_atypical_values(p, 77)));
  }
}

TEST_CASE("infinity is a candidate when V is not Q") {
  // Q = z(x + y) is singular at [1:-1:0], off the axis
  Pencil p = make_pencil("x*y", "z*(x + y)", VChoice::None);
  auto c = candidate_atypical_values(p, 1);
  REQUIRE_FALSE(c.empty());
  CHECK(c.back().is_infinity());
  // a double fibre at infinity makes the critical locus a curve
  CHECK_THROWS_AS(prepare(make_pencil("x*y", "z^2", VChoice::None), 1), HypothesisError);
}

TEST_CASE("positive-dimensional critical locus aborts") {
  CHECK_THROWS_AS(prepare(from_affine("x^2"), 1), HypothesisError);
  CHECK_THROWS_AS(prepare(from_affine("(x*y - 1)^2*(x + 1)"), 1), HypothesisError);
}

TEST_CASE("curve Euler characteristics") {
  auto V = projective_vars();
  CHECK(curve_euler(parse_polynomial("x*y", V), 1) == 3);
  CHECK(curve_euler(parse_polynomial("x*y*z", V), 1) == 3);
  CHECK(curve_euler(parse_polynomial("y^2*z - x^3", V), 1) == 2);
  CHECK(curve_euler(parse_polynomial("x^3 + y^3 + z^3", V), 1) == 0);
  CHECK(curve_euler(parse_polynomial("x^2 + y^2 - z^2", V), 1) == 2);
  CHECK(curve_euler(parse_polynomial("(x^2+y^2)*z", V), 1) == 3);
}

TEST_CASE("polar curve of the example") {
  Pencil ex = make_pencil(example_P(1, 1), example_Q(2, 1));
  auto G = polar_curve(ex, 1);
  CHECK(G == bi_normalize(bipoly_from<Rational>(parse_polynomial("v^2 + 2*u", {"u", "v"}), 0, 1)));
}

TEST_CASE("generic value avoids candidates") {
  PencilContext ctx = prepare(make_pencil(example_P(1, 1), example_Q(2, 1)), 5);
  CHECK_FALSE(ctx.generic.is_zero());
  for (const auto& f : ctx.families)
    for (const auto& c : f.certificates) CHECK_FALSE(c.eval(ctx.generic).is_zero());
}
