#include "doctest.h"
#include "meropencil/invariants.hpp"

using namespace mero;

namespace {

Pencil example(int a, int b, int p, int q, VChoice V = VChoice::Q) {
  std::string P = "x*(z^" + std::to_string(a + b) + " + x^" + std::to_string(a) + "*y^" + std::to_string(b) + ")";
  std::string Q = "y^" + std::to_string(p) + "*z^" + std::to_string(q);
  return make_pencil(P, Q, V);
}

const AxisTerm* term_at(const std::vector<AxisTerm>& ts, int chart) {
  for (const auto& t : ts)
    if (t.point.chart == chart && t.point.is_rational()) {
      auto pt = t.point.rational_point();
      bool origin = true;
      for (int i = 0; i < 3; ++i)
        if (i != chart && !pt[static_cast<size_t>(i)].is_zero()) origin = false;
      if (origin) return &t;
    }
  return nullptr;
}

const ValueRecord* record(const PencilReport& r, const std::string& v) {
  for (const auto& x : r.values)
    if (x.a.to_string() == v) return &x;
  return nullptr;
}

}  // namespace

TEST_CASE("lambda at the example point") {
  auto ctx = prepare(example(1, 1, 2, 1), 1);
  auto ts = lambda_at_axis(ctx, ValueClass::rational_value(0));
  const AxisTerm* t = term_at(ts, 1);  // [0:1:0]
  REQUIRE(t);
  CHECK(t->mu_value == 3);
  CHECK(t->mu_generic == 0);
  CHECK(t->lambda.value == 3);
  REQUIRE(t->lambda.route_polar);
  CHECK(*t->lambda.route_polar == 3);
  const AxisTerm* x = term_at(ts, 0);  // [1:0:0]
  REQUIRE(x);
  CHECK(x->lambda.value == 0);

  auto ctx2 = prepare(example(1, 1, 1, 2), 1);
  const AxisTerm* t2 = term_at(lambda_at_axis(ctx2, ValueClass::rational_value(0)), 1);
  REQUIRE(t2);
  CHECK(t2->mu_value == 3);
  CHECK(t2->mu_generic == 1);
  CHECK(t2->lambda.value == 2);
  CHECK(t2->lambda.route_polar == 2);
}

TEST_CASE("[1:0:0] has no jumps at other values") {
  auto ctx = prepare(example(1, 1, 2, 1), 1);
  for (long v : {1, -3, 7}) {
    const AxisTerm* x = term_at(lambda_at_axis(ctx, ValueClass::rational_value(v)), 0);
    REQUIRE(x);
    CHECK(x->lambda.value == 0);
  }
}

TEST_CASE("Euler characteristics of the example") {
  auto ctx = prepare(example(1, 1, 2, 1), 1);
  CHECK(euler_space(ctx) == 0);
  CHECK(euler_generic(ctx) == -3);
  CHECK(euler_fibre(ctx, ValueClass::rational_value(0)) == 0);
  CHECK(vanishing_betti(ctx, ValueClass::rational_value(0)) == 3);
  CHECK(vanishing_betti(ctx, ValueClass::rational_value(5)) == 0);
  for (long v : {-2, 1, 3}) CHECK(affine_mu_sum(ctx, ValueClass::rational_value(v)) == 0);
}

TEST_CASE("example report") {
  PencilReport r = build_report(example(1, 1, 2, 1), 1);
  REQUIRE(r.atypical_values().size() == 1);
  CHECK(r.atypical_values()[0].to_string() == "0");
  const ValueRecord* v = record(r, "0");
  REQUIRE(v);
  CHECK(v->lambda_total == 3);
  CHECK(v->mu_affine == 0);
  CHECK(r.balance_ok);
  CHECK(r.violations().empty());
}

TEST_CASE("affine x + x^2 y") {
  PencilReport r = build_report(from_affine("x + x^2*y"), 1);
  const ValueRecord* v = record(r, "0");
  REQUIRE(v);
  CHECK(v->atypical);
  CHECK(v->mu_affine == 0);
  CHECK(v->lambda_total == 1);
  CHECK(v->betti_vanishing == 1);
  CHECK(v->chi_fibre == 1);
  CHECK(r.chi_generic_fibre == 0);
  CHECK(r.balance_ok);
  REQUIRE(r.gamma);
  CHECK(r.gamma->gamma0 == 3);
  CHECK(r.gamma->gamma1_generic == 3);
  REQUIRE(r.gamma->values.size() == 1);
  CHECK(r.gamma->values[0].second.gamma1_value == 2);
  CHECK(r.gamma->values[0].second.lambda1 == 1);
  CHECK(r.gamma->values[0].second.chi_ok);
  CHECK(r.violations().empty());
}

TEST_CASE("affine x^2 + y^2") {
  PencilReport r = build_report(from_affine("x^2 + y^2"), 1);
  const ValueRecord* v = record(r, "0");
  REQUIRE(v);
  CHECK(v->mu_affine == 1);
  CHECK(v->lambda_total == 0);
  CHECK(v->chi_fibre == 1);
  REQUIRE(r.gamma);
  CHECK(r.gamma->gamma0 == 2);
  CHECK(r.gamma->gamma1_generic == 2);
  CHECK(r.gamma->values[0].second.gamma1_value == 2);
  CHECK(r.gamma->values[0].second.chi_ok);
  CHECK(r.balance_ok);
}

TEST_CASE("zeta fixtures") {
  auto ctx = prepare(from_affine("x*y"), 1);
  CHECK(zeta_around_value(ctx, ValueClass::rational_value(0)).is_one());
  CHECK(zeta_around_value(ctx, ValueClass::rational_value(3)) == ZetaFunction::factor(1, -euler_generic(ctx)));
  // cusp at the origin of an affine curve, nothing at the axis
  auto cusp = prepare(from_affine("x^2 + y^3"), 1);
  auto sing = affine_singularities(cusp, ValueClass::rational_value(0));
  REQUIRE(sing.size() == 1);
  REQUIRE(sing[0].zeta_relative);
  auto [num, den] = sing[0].zeta_relative->as_fraction();
  // (1 - t + t^2)^-1 = (1 - t) / ((1 - t^2)(1 - t^3)) * (1 - t^2)
  CHECK(num * UPoly<Rational>(std::vector<Rational>{1, -1, 1}) == den);
}

TEST_CASE("algebraic critical values") {
  PencilReport r = build_report(from_affine("x^3 - 6*x + y^2"), 1);
  REQUIRE(r.values.size() == 1);
  CHECK(r.values[0].a.kind == ValueClass::Kind::algebraic);
  CHECK(r.values[0].mu_affine == 1);
  CHECK(r.values[0].atypical);
  CHECK(r.balance_ok);
  CHECK(r.violations().empty());
}

TEST_CASE("V = axis and V = none balances") {
  for (auto V : {VChoice::Axis, VChoice::None}) {
    PencilReport r = build_report(make_pencil("x*y", "z*(x + y)", V), 3);
    CHECK(r.balance_ok);
    CHECK(r.violations().empty());
    REQUIRE_FALSE(r.values.empty());
    CHECK(r.values.back().a.is_infinity());
  }
}
