#include "meropencil_cli/report_json.hpp"

#include <sstream>

namespace mero::cli {

Json rational_json(const Rational& r) { return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

Json poly_json(const UPoly<Rational>& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_json(c));
  return a;
}

Json value_json(const ValueClass& v) {
  switch (v.kind) {
    case ValueClass::Kind::rational:
      return rational_json(v.value);
    case ValueClass::Kind::algebraic:
      return Json{{"modulus", poly_json(v.modulus)}};
    case ValueClass::Kind::infinity:
      return Json{{"infinity", true}};
  }
  return nullptr;
}

Json point_json(const PointClass& p) {
  Json j;
  j["text"] = p.to_string();
  j["chart"] = p.chart;
  j["count"] = p.count();
  if (p.is_rational()) {
    Json c = Json::array();
    for (const auto& x : p.rational_point()) c.push_back(rational_json(x));
    j["coordinates"] = c;
  } else {
    j["modulus"] = poly_json(p.modulus);
    j["coordinates_in_t"] = Json::array({poly_json(p.coords[0]), poly_json(p.coords[1])});
  }
  return j;
}

Json zeta_json(const std::optional<ZetaFunction>& z) {
  if (!z) return nullptr;
  Json a = Json::array();
  for (const auto& [k, e] : z->factors()) a.push_back(Json{{"k", k}, {"exp", e}});
  return a;
}

namespace {

Json opt(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

}  // namespace

Json record_json(const ValueRecord& r) {
  Json j;
  j["a"] = value_json(r.a);
  j["a_text"] = r.a.to_string();
  j["conjugates"] = r.a.count();
  j["witnesses"] = strings(r.a.witnesses);
  j["atypical"] = r.atypical;
  j["mu_affine"] = r.mu_affine;
  j["lambda_total"] = r.lambda_total;
  j["betti_vanishing"] = r.betti_vanishing;
  j["chi_fibre"] = r.chi_fibre;
  j["chi_generic_fibre"] = r.chi_generic;
  j["chi_curve"] = r.chi_curve;
  j["chi_curve_independent"] = opt(r.chi_curve_independent);
  j["detectors"] = Json{{"mu_lambda", r.detector_mu}, {"euler", r.detector_chi}};
  Json axis = Json::array();
  for (const auto& t : r.axis) {
    Json a;
    a["point"] = point_json(t.point);
    a["count"] = t.count;
    a["mu_value"] = t.mu_value;
    a["mu_generic"] = t.mu_generic;
    a["lambda"] = Json{{"value", t.lambda.value},
                       {"route_deformation", t.lambda.route_deformation},
                       {"route_polar", opt(t.lambda.route_polar)},
                       {"consistent", t.lambda.consistent}};
    a["zeta_relative"] = zeta_json(t.zeta_relative);
    axis.push_back(a);
  }
  j["axis"] = axis;
  Json sing = Json::array();
  for (const auto& t : r.singular) {
    Json s;
    s["point"] = point_json(t.point);
    s["count"] = t.count;
    s["mu"] = t.mu;
    s["zeta_relative"] = zeta_json(t.zeta_relative);
    sing.push_back(s);
  }
  j["singular_points"] = sing;
  j["zeta"] = zeta_json(r.zeta);
  j["zeta_relative"] = zeta_json(r.zeta_relative);
  j["gamma1"] = opt(r.gamma1);
  j["flags"] = strings(r.flags);
  return j;
}

Json gamma_json(const GammaBlock& g) {
  Json j;
  j["gamma0"] = g.gamma0;
  j["gamma1_generic"] = g.gamma1_generic;
  Json vals = Json::array();
  for (const auto& [vc, r] : g.values)
    vals.push_back(Json{{"a", value_json(vc)},
                        {"a_text", vc.to_string()},
                        {"gamma1", r.gamma1_value},
                        {"lambda1", r.lambda1},
                        {"chi_predicted", r.chi_predicted},
                        {"chi_ok", r.chi_ok},
                        {"lambda1_ok", r.lambda1_ok}});
  j["values"] = vals;
  return j;
}

Json pencil_json(const Pencil& p) {
  Json j;
  j["P"] = p.P.to_string();
  j["Q"] = p.Q.to_string();
  j["V"] = to_string(p.V);
  j["degree"] = p.degree;
  j["affine"] = p.affine ? Json(p.affine->to_string()) : Json(nullptr);
  j["common_factor_removed"] = p.common_factor_removed;
  return j;
}

Json report_json(const PencilReport& r, std::uint64_t seed) {
  const PencilContext& ctx = r.ctx;
  Json j;
  j["pencil"] = pencil_json(ctx.pencil);
  j["seed"] = seed;
  j["generic_value"] = rational_json(ctx.generic);
  Json axis = Json::array();
  for (const auto& ap : ctx.axis.points) axis.push_back(Json{{"point", point_json(ap.point)}, {"multiplicity", ap.multiplicity}});
  j["axis"] = Json{{"points", axis},
                   {"bezout_expected", ctx.axis.bezout_expected},
                   {"bezout_accounted", ctx.axis.bezout_accounted},
                   {"residual", strings(ctx.axis.residual)}};
  Json crit = Json::array();
  for (const auto& c : ctx.critical) {
    Json v = c.infinite_value ? Json{{"infinity", true}} : Json{{"in_t", poly_json(c.value)}};
    crit.push_back(Json{{"point", point_json(c.point)}, {"value", v}});
  }
  j["critical_points"] = crit;
  Json cands = Json::array();
  for (const auto& c : ctx.candidates) cands.push_back(Json{{"a", value_json(c)}, {"a_text", c.to_string()}});
  j["candidates"] = cands;
  Json atyp = Json::array();
  for (const auto& a : r.atypical_values()) atyp.push_back(Json{{"a", value_json(a)}, {"a_text", a.to_string()}});
  j["atypical_values"] = atyp;
  j["chi_space"] = r.chi_space;
  j["chi_generic_fibre"] = r.chi_generic_fibre;
  j["chi_generic_curve"] = r.chi_generic_curve;
  j["chi_generic_curve_independent"] = opt(r.chi_generic_curve_independent);
  Json vals = Json::array();
  for (const auto& v : r.values) vals.push_back(record_json(v));
  j["values"] = vals;
  j["balance"] = Json{{"lhs", r.balance_lhs}, {"rhs", r.balance_rhs}, {"ok", r.balance_ok}};
  j["gamma"] = r.gamma ? gamma_json(*r.gamma) : Json(nullptr);
  j["flags"] = strings(r.flags);
  j["violations"] = strings(r.violations());
  return j;
}

std::string report_text(const PencilReport& r, std::uint64_t seed) {
  const PencilContext& ctx = r.ctx;
  std::ostringstream o;
  o << "F = (" << ctx.pencil.P.to_string() << ") / (" << ctx.pencil.Q.to_string() << "), d = " << ctx.pencil.degree
    << ", V = " << to_string(ctx.pencil.V) << ", seed " << seed << "\n";
  o << "axis (" << ctx.axis.bezout_accounted << " of " << ctx.axis.bezout_expected << "):\n";
  for (const auto& ap : ctx.axis.points) o << "  " << ap.point.to_string() << "  I = " << ap.multiplicity << "\n";
  o << "generic value s = " << ctx.generic.to_string() << "\n";
  o << "chi(X) = " << r.chi_space << ", chi(X_s) = " << r.chi_generic_fibre << "\n";
  for (const auto& v : r.values) {
    o << "a = " << v.a.to_string() << (v.atypical ? "  atypical" : "  typical") << "\n";
    o << "  mu_affine = " << v.mu_affine << ", lambda = " << v.lambda_total << ", chi(X_a) = " << v.chi_fibre
      << ", betti = " << v.betti_vanishing << "\n";
    for (const auto& t : v.axis)
      if (t.lambda.value != 0)
        o << "  lambda " << t.lambda.value << " at " << t.point.to_string() << " (mu " << t.mu_value << " - "
          << t.mu_generic << ")\n";
    for (const auto& s : v.singular) o << "  mu " << s.mu << " at " << s.point.to_string() << "\n";
    if (v.zeta) o << "  zeta = " << v.zeta->to_string() << "\n";
    for (const auto& f : v.flags) o << "  flag: " << f << "\n";
  }
  o << "balance " << r.balance_lhs << " = " << r.balance_rhs << (r.balance_ok ? "  ok" : "  FAILED") << "\n";
  if (r.gamma) {
    o << "gamma0 = " << r.gamma->gamma0 << ", gamma1(s) = " << r.gamma->gamma1_generic << "\n";
    for (const auto& [vc, g] : r.gamma->values)
      o << "  a = " << vc.to_string() << ": gamma1 = " << g.gamma1_value << ", lambda1 = " << g.lambda1
        << (g.chi_ok ? "" : "  chi check FAILED") << "\n";
  }
  for (const auto& f : r.flags) o << "flag: " << f << "\n";
  return o.str();
}

}  // namespace mero::cli
