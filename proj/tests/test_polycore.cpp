#include "doctest.h"

#include "meropencil/ext.hpp"
#include "meropencil/ratfunc.hpp"
#include "meropencil/upoly.hpp"

using namespace mero;
using P = UPoly<Rational>;

static P poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return P(v);
}

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("-6/4").to_string() == "-3/2");
  CHECK(Rational::parse(" 7 ").to_string() == "7");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("univariate division and gcd") {
  P a = poly({-1, 0, 1});  // x^2-1
  P b = poly({1, 1});
  auto [q, r] = divmod(a, b);
  CHECK(q == poly({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(a, poly({-1, 1}).pow(2)) == poly({-1, 1}));
  auto x = xgcd(poly({1, 0, 1}), poly({0, 1}));
  CHECK(x.s * poly({1, 0, 1}) + x.t * poly({0, 1}) == x.g);
  CHECK(x.g == poly({1}));
}

TEST_CASE("yun decomposition") {
  P f = poly({1, 1}) * poly({-2, 1}).pow(2) * poly({3, 0, 1}).pow(3);
  auto d = squarefree_decomposition(f);
  REQUIRE(d.size() == 4);
  CHECK(d[1] == poly({1, 1}));
  CHECK(d[2] == poly({-2, 1}));
  CHECK(d[3] == poly({3, 0, 1}));
}

TEST_CASE("resultant sign convention") {
  // res(x^2+1, x-2): prod over roots of first of second = (i-2)(-i-2) = 5
  CHECK(resultant_prs(poly({1, 0, 1}), poly({-2, 1})) == Rational(5));
  CHECK(resultant_prs(poly({-2, 1}), poly({1, 0, 1})) == Rational(5));
  // odd*odd degrees swap sign
  CHECK(resultant_prs(poly({0, 1}), poly({-3, 1})) == Rational(-3));
  CHECK(resultant_prs(poly({-3, 1}), poly({0, 1})) == Rational(3));
  CHECK(resultant_prs(poly({-1, 0, 1}), poly({1, 1})) == Rational(0));
}

TEST_CASE("extension splits on zero divisors") {
  P m = poly({-1, 0, 1});  // t^2-1
  auto res = split_run<Rational>(m, [](const ExtContextPtr<Rational>& ctx) {
    Ext<Rational> t = Ext<Rational>::gen(ctx);
    Ext<Rational> e = t - Ext<Rational>(1);
    return is_zero(e) ? 1 : 0;
  });
  REQUIRE(res.size() == 2);
  int zeros = 0;
  for (auto& [mod, val] : res) {
    CHECK(mod.degree() == 1);
    zeros += val;
  }
  CHECK(zeros == 1);
  // sqrt(2) inverse
  auto ctx = make_ext_context(poly({-2, 0, 1}));
  Ext<Rational> t = Ext<Rational>::gen(ctx);
  CHECK(is_zero(t * (Ext<Rational>(1) / t) - Ext<Rational>(1)));
  CHECK_FALSE(is_zero(t));
}

TEST_CASE("rational functions record certificates") {
  using F = RatFunc<Rational>;
  CertificateLog<Rational> log;
  {
    CertificateScope<Rational> scope(log);
    F s = F::param();
    F a = (s * s - F(1)) / (s - F(1));
    CHECK(a == s + F(1));
    CHECK_FALSE(is_zero(a));
  }
  REQUIRE(log.polys.size() >= 1);
  CHECK(log.polys.back() == poly({1, 1}));
}

// ---------------------------------------------------------------------------
#include <random>

#include "meropencil/elimination.hpp"
#include "meropencil/mpoly.hpp"
#include "meropencil/shear.hpp"
#include "oracles.hpp"

namespace {
const std::vector<std::string> XYZ{"x", "y", "z"};
const std::vector<std::string> XY{"x", "y"};

MPoly random_poly(std::mt19937_64& gen, const std::vector<std::string>& vars, int maxdeg, int terms) {
  MPoly p(vars);
  for (int t = 0; t < terms; ++t) {
    MPoly::Exponent e(vars.size(), 0);
    int budget = static_cast<int>(gen() % static_cast<unsigned>(maxdeg + 1));
    for (int k = 0; k < budget; ++k) e[gen() % vars.size()] += 1;
    long c = static_cast<long>(gen() % 9) - 4;
    p.add_term(e, Rational(c));
  }
  return p;
}
}  // namespace

TEST_CASE("parse examples") {
  MPoly p = parse_polynomial("x*(z^2 + x*y)", XYZ);
  CHECK(p.nterms() == 2);
  CHECK(p.coeff({1, 0, 2}) == Rational(1));
  CHECK(p.coeff({2, 1, 0}) == Rational(1));
  CHECK(parse_polynomial("0", XYZ).is_zero());
  CHECK(parse_polynomial("(y-1)^2", XYZ) == parse_polynomial("y^2 - 2*y + 1", XYZ));
  CHECK(parse_polynomial("x/2 + 1/3", XY).coeff({1, 0}) == Rational(Integer(1), Integer(2)));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_polynomial("x y", XY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2x", XY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x/y", XY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^y", XY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("w + 1", XY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x + 1", XY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x/0", XY), ParseError);
  try {
    parse_polynomial("x + * y", XY);
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("parse print round trip") {
  std::mt19937_64 gen(11);
  for (int it = 0; it < 200; ++it) {
    MPoly p = random_poly(gen, XYZ, 4, 5);
    p = p.scaled(Rational(Integer(static_cast<long>(gen() % 5) + 1), Integer(static_cast<long>(gen() % 4) + 1)));
    CHECK(parse_polynomial(p.to_string(), XYZ) == p);
  }
}

TEST_CASE("ring axioms") {
  std::mt19937_64 gen(5);
  for (int it = 0; it < 100; ++it) {
    MPoly f = random_poly(gen, XY, 3, 4), g = random_poly(gen, XY, 3, 4), h = random_poly(gen, XY, 3, 4);
    CHECK((f + g) * h == f * h + g * h);
    if (!f.is_zero() && !g.is_zero()) CHECK((f * g).total_degree() == f.total_degree() + g.total_degree());
    if (!g.is_zero()) CHECK(divexact(f * g, g) == f);
  }
}

TEST_CASE("resultant examples") {
  MPoly x = MPoly::variable(XY, 0), y = MPoly::variable(XY, 1);
  CHECK(resultant(x * x + y * y, y - x, "y") == (x * x).scaled(Rational(2)));
  CHECK(resultant(y, y * y - x, "y") == -x);
  MPoly common = y - x - MPoly(1);
  CHECK(resultant(common * (y + x), common * (y * y - x), "y").is_zero());
}

TEST_CASE("resultant against Sylvester determinant") {
  std::mt19937_64 gen(7);
  for (int it = 0; it < 100; ++it) {
    std::vector<Rational> a, b;
    int da = 1 + static_cast<int>(gen() % 5), db = 1 + static_cast<int>(gen() % 5);
    for (int i = 0; i <= da; ++i) a.emplace_back(static_cast<long>(gen() % 11) - 5);
    for (int i = 0; i <= db; ++i) b.emplace_back(static_cast<long>(gen() % 11) - 5);
    if (a.back().is_zero()) a.back() = Rational(1);
    if (b.back().is_zero()) b.back() = Rational(-2);
    P f(a), g(b);
    CHECK(resultant_prs(f, g) == oracle::sylvester_resultant(f, g));
  }
}

TEST_CASE("resultant multiplicativity") {
  std::mt19937_64 gen(9);
  for (int it = 0; it < 30; ++it) {
    MPoly f = random_poly(gen, XY, 3, 4) + MPoly::variable(XY, 1).pow(2);
    MPoly g = random_poly(gen, XY, 2, 3) + MPoly::variable(XY, 1);
    MPoly h = random_poly(gen, XY, 3, 4) + MPoly::variable(XY, 1).pow(3);
    CHECK(resultant(f * g, h, "y") == resultant(f, h, "y") * resultant(g, h, "y"));
  }
}

TEST_CASE("gcd and squarefree part") {
  MPoly y = MPoly::variable(XY, 1);
  MPoly f = (y - MPoly(1)).pow(2) * (y + MPoly(2));
  CHECK(squarefree_part(f, "y") == (y - MPoly(1)) * (y + MPoly(2)));
  CHECK(squarefree_part(y.pow(4), "y") == y);
  std::mt19937_64 gen(3);
  for (int it = 0; it < 30; ++it) {
    MPoly a = random_poly(gen, XY, 2, 3), b = random_poly(gen, XY, 2, 3), c = random_poly(gen, XY, 2, 3);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    auto A = bipoly_from<Rational>(a * c, 0, 1), B = bipoly_from<Rational>(b * c, 0, 1);
    auto G = bi_gcd(A, B);
    CHECK_NOTHROW(bi_divexact(A, G));
    CHECK_NOTHROW(bi_divexact(B, G));
    CHECK_NOTHROW(bi_divexact(G, bi_normalize(bipoly_from<Rational>(c, 0, 1))));
    MPoly s = squarefree_part(a * a * b, "y");
    auto S = bipoly_from<Rational>(s, 0, 1);
    CHECK(bi_total_degree(bi_gcd(S, bi_dv(S))) <= std::max(0, bi_total_degree(S)));
    if (S.degree() > 0) CHECK(bi_gcd(bi_primitive(S), bi_dv(bi_primitive(S))).degree() == 0);
  }
}

TEST_CASE("rational roots") {
  P f = poly({1, -5, 6});
  auto r = rational_roots(f);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0].first == Rational(Integer(1), Integer(3)));
  CHECK(r.roots[1].first == Rational(Integer(1), Integer(2)));
  CHECK(r.residual.degree() == 0);
  auto r2 = rational_roots(poly({1, 0, 1}));
  CHECK(r2.roots.empty());
  CHECK(r2.residual == poly({1, 0, 1}));
  auto r3 = rational_roots(poly({0, -1, 0, 1}));
  REQUIRE(r3.roots.size() == 3);
  CHECK(r3.roots[0].first == Rational(-1));
  CHECK(r3.roots[1].first == Rational(0));
  CHECK(r3.roots[2].first == Rational(1));
  // multiplicities and big coefficients
  P g = poly({-7, 3}).pow(3) * poly({2, 0, 1}) * poly({1000003, 17}) * poly({0, 1}).pow(2);
  auto r4 = rational_roots(g);
  REQUIRE(r4.roots.size() == 3);
  CHECK(r4.roots[0] == std::make_pair(Rational(Integer(-1000003), Integer(17)), 1));
  CHECK(r4.roots[1] == std::make_pair(Rational(0), 2));
  CHECK(r4.roots[2] == std::make_pair(Rational(Integer(7), Integer(3)), 3));
  CHECK(r4.residual == poly({2, 0, 1}));
}

TEST_CASE("shear") {
  MPoly xy = parse_polynomial("x*y", XY);
  auto [s1, rec1] = apply_shear(xy, 1);
  auto [s1b, rec1b] = apply_shear(xy, 1);
  CHECK(s1 == s1b);
  CHECK(s1.total_degree() == 2);
  CHECK(substitute_linear(s1, rec1.inverse) == xy);
  auto [s2, rec2] = apply_shear(xy, 2);
  CHECK(rec1.matrix != rec2.matrix);
  MPoly f = parse_polynomial("x^3 + 2*x*y*z - z^2 + 1", XYZ);
  auto [sf, recf] = apply_shear(f, 42);
  CHECK(substitute_linear(sf, recf.inverse) == f);
}
