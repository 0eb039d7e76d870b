#include "meropencil/invariants.hpp"

#include <algorithm>

#include "meropencil/elimination.hpp"
#include "meropencil/shear.hpp"

namespace mero {

using QPoly = UPoly<Rational>;
using QBi = BiPoly<Rational>;

namespace {

const std::vector<std::string> kViolations{"detector_disagreement", "euler_mismatch",      "route_disagreement",
                                           "negative_lambda",       "zeta_degree_mismatch", "balance_failed",
                                           "unaccounted_base_points", "gamma_mismatch"};

void add_flag(std::vector<std::string>& flags, const std::string& f) {
  if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.push_back(f);
}

struct AxisEval {
  Multiplicity mu;
  std::optional<long> polar;
  std::optional<ZetaFunction> zeta;
  std::string zeta_error;
};

struct PointEval {
  bool on_fibre = false;
  long mu = 0;
  std::optional<ZetaFunction> zeta;
  std::string zeta_error;
};

struct ValueEval {
  std::vector<AxisTerm> axis;
  std::vector<SingularTerm> singular;
  std::optional<long> gamma1;
};

template <class K>
long gamma1_impl(const MPoly& f, const K& a, std::uint64_t seed) {
  QBi P = bipoly_from<Rational>(f, 0, 1);
  int d = f.total_degree();
  std::optional<long> prev;
  for (std::uint64_t k = 0; k < 8; ++k) {
    auto ce = shear_constants(seed + 101 * k, 2);
    Rational c(ce[0]), e(ce[1]);
    if ((Rational(1) - c * e).is_zero()) continue;
    // neither (c, 1) nor (1, e) may be an asymptotic direction
    Rational top_v, top_u;
    for (const auto& [ex, co] : f.terms())
      if (ex[0] + ex[1] == d) {
        top_v += co * c.pow(static_cast<unsigned>(ex[0]));
        top_u += co * e.pow(static_cast<unsigned>(ex[1]));
      }
    if (top_v.is_zero() || top_u.is_zero()) continue;
    // P(u + c v, e u + v)
    QBi X = bi_u<Rational>() + bi_scale(bi_v<Rational>(), c);
    QBi Y = bi_scale(bi_u<Rational>(), e) + bi_v<Rational>();
    std::vector<QBi> xp{bi_constant(Rational(1))}, yp{bi_constant(Rational(1))};
    for (int i = 1; i <= d; ++i) {
      xp.push_back(xp.back() * X);
      yp.push_back(yp.back() * Y);
    }
    QBi S;
    for (size_t j = 0; j < P.size(); ++j)
      for (size_t i = 0; i < P[j].size(); ++i)
        if (!P[j][i].is_zero()) S += bi_scale(xp[i] * yp[j], P[j][i]);
    auto lf = [](const Rational& r) { return lift<K>(r); };
    BiPoly<K> F = bi_map<K>(S, lf) - bi_constant(a);
    BiPoly<K> G = bi_map<K>(bi_du(S), lf);
    if (G.is_zero()) continue;
    UPoly<K> R = resultant_v(F, G);
    R.semantic_trim();
    if (R.is_zero()) continue;
    long g = R.degree();
    if (prev && *prev == g) return g;
    prev = g;
  }
  throw HypothesisError("gamma_mismatch", "no two generic shears agree on gamma^1");
}

template <class K1>
ValueEval eval_value(const PencilContext& ctx, const Pencil& pen, const std::array<QBi, 3>& polar, const K1& a,
                     bool infinity) {
  ValueEval out;
  for (const auto& fam : ctx.families) {
    int chart = fam.point.chart;
    long mg = fam.mu_generic.value;
    auto parts = over_points<K1>(fam.point, [&](const auto& c0, const auto& c1) {
      using K2 = std::decay_t<decltype(c0)>;
      AxisEval ev;
      BiPoly<K2> g = chart_germ<K2>(pen, chart, c0, c1, embed<K2>(a));
      ev.mu = milnor_number(g);
      if (ev.mu.infinite)
        throw HypothesisError("non_isolated_germ", "fibre germ at " + fam.point.to_string() + " is not isolated");
      const QBi& gamma = polar[static_cast<size_t>(chart)];
      BiPoly<K2> G = gamma.is_zero() ? BiPoly<K2>() : bi_translate<K2>(gamma, c0, c1);
      const std::optional<long>& generic = infinity ? fam.polar_generic_swapped : fam.polar_generic;
      if (G.is_zero() || !is_zero(bi_at_origin(G)) || !generic) {
        ev.polar = 0;
      } else {
        Multiplicity i1 = intersection_multiplicity(G, g);
        if (!i1.infinite) ev.polar = i1.value - *generic;
      }
      try {
        ev.zeta = relative_zeta_axis(g, chart_translate<K2>(pen.Q, chart, c0, c1), ev.mu.value - mg);
      } catch (const ZetaUnsupported& e) {
        ev.zeta_error = e.what();
      }
      return ev;
    });
    for (auto& [n, ev] : parts) {
      AxisTerm t;
      t.point = fam.point;
      t.count = n;
      t.mu_value = ev.mu.value;
      t.mu_generic = mg;
      t.lambda.route_deformation = ev.mu.value - mg;
      t.lambda.value = t.lambda.route_deformation;
      t.lambda.route_polar = ev.polar;
      t.lambda.consistent = !ev.polar || *ev.polar == t.lambda.route_deformation;
      t.zeta_relative = std::move(ev.zeta);
      t.zeta_error = std::move(ev.zeta_error);
      out.axis.push_back(std::move(t));
    }
  }
  for (const auto& cc : ctx.critical) {
    if (cc.infinite_value != infinity) continue;
    int chart = cc.point.chart;
    auto parts = over_points<K1>(cc.point, [&](const auto& c0, const auto& c1) {
      using K2 = std::decay_t<decltype(c0)>;
      PointEval ev;
      BiPoly<K2> g = chart_germ<K2>(pen, chart, c0, c1, embed<K2>(a));
      if (!is_zero(bi_at_origin(g))) return ev;
      ev.on_fibre = true;
      Multiplicity mu = milnor_number(g);
      if (mu.infinite)
        throw HypothesisError("non_isolated_germ", "fibre singularity at " + cc.point.to_string() + " is not isolated");
      ev.mu = mu.value;
      try {
        ev.zeta = relative_zeta_interior(g);
      } catch (const ZetaUnsupported& e) {
        ev.zeta_error = e.what();
      }
      return ev;
    });
    for (auto& [n, ev] : parts) {
      if (!ev.on_fibre) continue;
      SingularTerm t;
      t.point = cc.point;
      t.count = n;
      t.mu = ev.mu;
      t.zeta_relative = std::move(ev.zeta);
      t.zeta_error = std::move(ev.zeta_error);
      out.singular.push_back(std::move(t));
    }
  }
  if (!infinity && pen.affine && pen.V == VChoice::Q) out.gamma1 = gamma1_impl(*pen.affine, a, ctx.seed);
  return out;
}

long generic_curve_chi(const PencilContext& ctx) {
  long d = ctx.pencil.degree;
  long chi = d * (3 - d);
  for (const auto& fam : ctx.families) chi += fam.point.count() * fam.mu_generic.value;
  return chi;
}

long fibre_from_curve(const PencilContext& ctx, long chi_curve) {
  switch (ctx.pencil.V) {
    case VChoice::Q:
    case VChoice::Axis:
      return chi_curve - ctx.axis_count();
    case VChoice::None:
      return chi_curve;
  }
  return chi_curve;
}

ValueRecord assemble(const PencilContext& ctx, const ValueClass& vc, ValueEval ev) {
  ValueRecord r;
  r.a = vc;
  r.axis = std::move(ev.axis);
  r.singular = std::move(ev.singular);
  long d = ctx.pencil.degree;
  long mu_axis = 0;
  for (const auto& t : r.singular) r.mu_affine += t.count * t.mu;
  for (const auto& t : r.axis) {
    r.lambda_total += t.count * t.lambda.value;
    mu_axis += t.count * t.mu_value;
    if (t.lambda.value < 0) add_flag(r.flags, "negative_lambda at " + t.point.to_string());
    if (!t.lambda.consistent) add_flag(r.flags, "route_disagreement at " + t.point.to_string());
  }
  r.chi_curve = d * (3 - d) + r.mu_affine + mu_axis;
  if (vc.kind != ValueClass::Kind::algebraic) {
    MPoly C = vc.is_infinity() ? ctx.pencil.Q : ctx.pencil.P - ctx.pencil.Q.scaled(vc.value);
    try {
      r.chi_curve_independent = curve_euler(C, ctx.seed);
    } catch (const HypothesisError& e) {
      add_flag(r.flags, e.flag);
    }
    if (r.chi_curve_independent && *r.chi_curve_independent != r.chi_curve) {
      add_flag(r.flags, "euler_mismatch");
      r.chi_curve = *r.chi_curve_independent;
    }
  }
  r.chi_fibre = fibre_from_curve(ctx, r.chi_curve);
  r.chi_generic = fibre_from_curve(ctx, generic_curve_chi(ctx));
  r.betti_vanishing = r.mu_affine + r.lambda_total;
  r.detector_mu = r.betti_vanishing > 0;
  r.detector_chi = r.chi_fibre != r.chi_generic;
  r.atypical = r.detector_mu || r.detector_chi;
  if (r.detector_mu != r.detector_chi) add_flag(r.flags, "detector_disagreement");
  bool zeta_ok = true;
  ZetaFunction rel;
  for (const auto& t : r.singular) {
    if (!t.zeta_relative) {
      zeta_ok = false;
      add_flag(r.flags, "zeta_unsupported: " + t.zeta_error + " at " + t.point.to_string());
    } else {
      rel *= t.zeta_relative->pow(t.count);
    }
  }
  for (const auto& t : r.axis) {
    if (!t.zeta_relative) {
      zeta_ok = false;
      add_flag(r.flags, "zeta_unsupported: " + t.zeta_error + " at " + t.point.to_string());
    } else {
      rel *= t.zeta_relative->pow(t.count);
    }
  }
  if (zeta_ok) {
    r.zeta_relative = rel;
    r.zeta = ZetaFunction::factor(1, -r.chi_fibre) * rel.inverse();
    if (r.zeta->net_degree() != -r.chi_generic) add_flag(r.flags, "zeta_degree_mismatch");
  }
  r.gamma1 = ev.gamma1;
  return r;
}

}  // namespace

bool is_violation(const std::string& flag) {
  for (const auto& v : kViolations)
    if (flag.rfind(v, 0) == 0) return true;
  return false;
}

std::vector<ValueClass> PencilReport::atypical_values() const {
  std::vector<ValueClass> out;
  for (const auto& r : values)
    if (r.atypical) out.push_back(r.a);
  return out;
}

std::vector<std::string> PencilReport::violations() const {
  std::vector<std::string> out;
  for (const auto& f : flags)
    if (is_violation(f)) out.push_back(f);
  for (const auto& r : values)
    for (const auto& f : r.flags)
      if (is_violation(f)) out.push_back(r.a.to_string() + ": " + f);
  return out;
}

std::vector<ValueRecord> analyze_value(const PencilContext& ctx, const ValueClass& a) {
  std::vector<ValueRecord> out;
  if (a.is_infinity()) {
    if (ctx.pencil.V == VChoice::Q)
      throw InputError("the value infinity is not taken on X when V = {Q = 0}");
    out.push_back(assemble(ctx, a, eval_value<Rational>(ctx, ctx.swapped, ctx.polar_swapped, Rational(0), true)));
    return out;
  }
  auto parts = over_value(a, [&](const auto& v) {
    using K1 = std::decay_t<decltype(v)>;
    return eval_value<K1>(ctx, ctx.pencil, ctx.polar, v, false);
  });
  for (auto& [vc, ev] : parts) out.push_back(assemble(ctx, vc, std::move(ev)));
  return out;
}

std::vector<AxisTerm> lambda_at_axis(const PencilContext& ctx, const ValueClass& a) {
  std::vector<AxisTerm> out;
  for (auto& r : analyze_value(ctx, a)) out.insert(out.end(), r.axis.begin(), r.axis.end());
  return out;
}

std::vector<SingularTerm> affine_singularities(const PencilContext& ctx, const ValueClass& a) {
  std::vector<SingularTerm> out;
  for (auto& r : analyze_value(ctx, a)) out.insert(out.end(), r.singular.begin(), r.singular.end());
  return out;
}

long affine_mu_sum(const PencilContext& ctx, const ValueClass& a) { return analyze_value(ctx, a).front().mu_affine; }

long euler_space(const PencilContext& ctx) {
  switch (ctx.pencil.V) {
    case VChoice::Q:
      return 3 - curve_euler(reduced_form(ctx.pencil.Q), ctx.seed);
    case VChoice::Axis:
      return 3 - ctx.axis_count();
    case VChoice::None:
      return 3 + ctx.axis_count();
  }
  return 0;
}

long euler_generic(const PencilContext& ctx) { return fibre_from_curve(ctx, generic_curve_chi(ctx)); }

long euler_fibre(const PencilContext& ctx, const ValueClass& a) { return analyze_value(ctx, a).front().chi_fibre; }

long vanishing_betti(const PencilContext& ctx, const ValueClass& a) {
  return analyze_value(ctx, a).front().betti_vanishing;
}

ZetaFunction zeta_around_value(const PencilContext& ctx, const ValueClass& a) {
  ValueRecord r = analyze_value(ctx, a).front();
  if (!r.zeta) {
    std::string why = "zeta unsupported";
    for (const auto& f : r.flags)
      if (f.rfind("zeta_unsupported", 0) == 0) why = f;
    throw ZetaUnsupported(why);
  }
  return *r.zeta;
}

long gamma1(const MPoly& affine, const Rational& a, std::uint64_t seed) { return gamma1_impl(affine, a, seed); }

GammaBlock gamma_sequence(const PencilContext& ctx, const std::vector<ValueRecord>& values) {
  if (!ctx.pencil.affine) throw InputError("the gamma sequence needs an affine polynomial");
  const MPoly& f = *ctx.pencil.affine;
  GammaBlock b;
  b.gamma0 = f.total_degree();
  b.gamma1_generic = gamma1(f, ctx.generic, ctx.seed);
  for (const auto& r : values) {
    if (r.a.is_infinity() || !r.gamma1) continue;
    GammaResult g;
    g.gamma0 = b.gamma0;
    g.gamma1_generic = b.gamma1_generic;
    g.gamma1_value = *r.gamma1;
    g.lambda1 = g.gamma1_generic - g.gamma1_value;
    g.chi_predicted = r.mu_affine + g.gamma0 - g.gamma1_value;
    g.chi_ok = g.chi_predicted == r.chi_fibre;
    g.lambda1_ok = g.lambda1 == r.lambda_total;
    b.values.emplace_back(r.a, g);
  }
  return b;
}

PencilReport build_report(const Pencil& pen, std::uint64_t seed) {
  PencilReport rep;
  rep.ctx = prepare(pen, seed);
  const PencilContext& ctx = rep.ctx;
  rep.flags = ctx.flags;
  if (!ctx.axis.residual.empty()) add_flag(rep.flags, "unaccounted_base_points");
  rep.chi_space = euler_space(ctx);
  rep.chi_generic_curve = generic_curve_chi(ctx);
  rep.chi_generic_fibre = fibre_from_curve(ctx, rep.chi_generic_curve);
  try {
    rep.chi_generic_curve_independent = curve_euler(pen.P - pen.Q.scaled(ctx.generic), seed);
  } catch (const HypothesisError& e) {
    add_flag(rep.flags, e.flag);
  }
  if (rep.chi_generic_curve_independent && *rep.chi_generic_curve_independent != rep.chi_generic_curve)
    add_flag(rep.flags, "euler_mismatch for the generic fibre");
  for (const auto& vc : ctx.candidates)
    for (auto& r : analyze_value(ctx, vc)) rep.values.push_back(std::move(r));
  long sum = 0;
  for (const auto& r : rep.values) sum += r.a.count() * r.betti_vanishing;
  rep.balance_rhs = sum;
  rep.balance_lhs =
      pen.V == VChoice::Q ? rep.chi_space - rep.chi_generic_fibre : rep.chi_space - 2 * rep.chi_generic_fibre;
  rep.balance_ok = rep.balance_lhs == rep.balance_rhs;
  if (!rep.balance_ok) add_flag(rep.flags, "balance_failed");
  if (pen.affine && pen.V == VChoice::Q) {
    rep.gamma = gamma_sequence(ctx, rep.values);
    for (const auto& [vc, g] : rep.gamma->values)
      if (!g.chi_ok || !g.lambda1_ok) add_flag(rep.flags, "gamma_mismatch at " + vc.to_string());
  }
  return rep;
}

}  // namespace mero
