#include "meropencil_cli/commands.hpp"

#include <functional>
#include <iomanip>
#include <random>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "meropencil_cli/descriptor.hpp"
#include "meropencil_cli/report_json.hpp"

namespace mero::cli {

namespace {

struct Options {
  std::string input, pencil, affine, v = "Q", format = "json";
  std::string value, point;
  std::uint64_t seed = 0;
};

struct Output {
  Json json;
  std::string text;
  bool violation = false;
};

Pencil load(const Options& o) {
  int given = !o.input.empty() + !o.pencil.empty() + !o.affine.empty();
  if (given != 1) throw InputError("exactly one of --input, --pencil, --affine is required");
  if (!o.input.empty()) return to_pencil(read_descriptor_file(o.input));
  if (!o.affine.empty()) {
    Descriptor d;
    d.affine = o.affine;
    return to_pencil(d);
  }
  return to_pencil(descriptor_from_pair(o.pencil, parse_vchoice(o.v)));
}

bool any_violation(const std::vector<std::string>& flags) {
  for (const auto& f : flags)
    if (is_violation(f)) return true;
  return false;
}

/// Records for --value, or for every candidate.
std::vector<ValueRecord> records(const PencilContext& ctx, const Options& o) {
  std::vector<ValueRecord> out;
  if (!o.value.empty()) return analyze_value(ctx, parse_value(o.value));
  for (const auto& vc : ctx.candidates)
    for (auto& r : analyze_value(ctx, vc)) out.push_back(std::move(r));
  return out;
}

Json header(const PencilContext& ctx) {
  Json j;
  j["pencil"] = pencil_json(ctx.pencil);
  j["seed"] = ctx.seed;
  j["generic_value"] = rational_json(ctx.generic);
  return j;
}

Json value_head(const ValueRecord& r) {
  Json j;
  j["a"] = value_json(r.a);
  j["a_text"] = r.a.to_string();
  j["conjugates"] = r.a.count();
  return j;
}

Output cmd_report(const Pencil& pen, const Options& o) {
  PencilReport rep = build_report(pen, o.seed);
  return {report_json(rep, o.seed), report_text(rep, o.seed), !rep.violations().empty()};
}

Output cmd_atypical(const Pencil& pen, const Options& o) {
  PencilReport rep = build_report(pen, o.seed);
  Json j = header(rep.ctx);
  Json cands = Json::array();
  std::ostringstream t;
  for (const auto& r : rep.values) {
    Json c = value_head(r);
    c["witnesses"] = r.a.witnesses;
    c["atypical"] = r.atypical;
    cands.push_back(c);
    t << r.a.to_string() << (r.atypical ? "  atypical" : "  typical") << "\n";
  }
  j["candidates"] = cands;
  Json atyp = Json::array();
  for (const auto& a : rep.atypical_values()) atyp.push_back(value_json(a));
  j["atypical_values"] = atyp;
  j["violations"] = rep.violations();
  return {j, t.str(), !rep.violations().empty()};
}

Output cmd_lambda(const Pencil& pen, const Options& o) {
  PencilContext ctx = prepare(pen, o.seed);
  Json j = header(ctx);
  Json vals = Json::array();
  std::ostringstream t;
  bool bad = false;
  for (const auto& r : records(ctx, o)) {
    Json v = value_head(r);
    v["lambda_total"] = r.lambda_total;
    Json axis = Json::array();
    t << "a = " << r.a.to_string() << ": lambda = " << r.lambda_total << "\n";
    for (const auto& a : r.axis) {
      axis.push_back(Json{{"point", point_json(a.point)},
                          {"mu_value", a.mu_value},
                          {"mu_generic", a.mu_generic},
                          {"lambda", a.lambda.value},
                          {"route_deformation", a.lambda.route_deformation},
                          {"route_polar", a.lambda.route_polar ? Json(*a.lambda.route_polar) : Json(nullptr)},
                          {"consistent", a.lambda.consistent}});
      t << "  " << a.point.to_string() << ": " << a.lambda.value << " (mu " << a.mu_value << " - " << a.mu_generic
        << ")\n";
    }
    v["axis"] = axis;
    v["flags"] = r.flags;
    bad = bad || any_violation(r.flags);
    vals.push_back(v);
  }
  j["values"] = vals;
  return {j, t.str(), bad};
}

Output cmd_euler(const Pencil& pen, const Options& o) {
  PencilContext ctx = prepare(pen, o.seed);
  Json j = header(ctx);
  long chi_x = euler_space(ctx);
  long chi_s = euler_generic(ctx);
  j["chi_space"] = chi_x;
  j["chi_generic_fibre"] = chi_s;
  std::ostringstream t;
  t << "chi(X) = " << chi_x << "\nchi(X_s) = " << chi_s << "\n";
  Json vals = Json::array();
  bool bad = false;
  for (const auto& r : records(ctx, o)) {
    Json v = value_head(r);
    v["chi_fibre"] = r.chi_fibre;
    v["mu_affine"] = r.mu_affine;
    v["lambda_total"] = r.lambda_total;
    v["betti_vanishing"] = r.betti_vanishing;
    v["flags"] = r.flags;
    bad = bad || any_violation(r.flags);
    vals.push_back(v);
    t << "a = " << r.a.to_string() << ": chi(X_a) = " << r.chi_fibre << ", betti = " << r.betti_vanishing << "\n";
  }
  j["values"] = vals;
  return {j, t.str(), bad};
}

Output cmd_zeta(const Pencil& pen, const Options& o) {
  PencilContext ctx = prepare(pen, o.seed);
  Json j = header(ctx);
  Json vals = Json::array();
  std::ostringstream t;
  bool bad = false;
  for (const auto& r : records(ctx, o)) {
    Json v = value_head(r);
    v["zeta"] = zeta_json(r.zeta);
    v["zeta_text"] = r.zeta ? Json(r.zeta->to_string()) : Json(nullptr);
    v["net_degree"] = r.zeta ? Json(r.zeta->net_degree()) : Json(nullptr);
    v["chi_generic_fibre"] = r.chi_generic;
    v["zeta_relative"] = zeta_json(r.zeta_relative);
    v["flags"] = r.flags;
    bad = bad || any_violation(r.flags);
    vals.push_back(v);
    t << "a = " << r.a.to_string() << ": " << (r.zeta ? r.zeta->to_string() : std::string("unsupported")) << "\n";
  }
  j["values"] = vals;
  return {j, t.str(), bad};
}

Output cmd_gamma(const Pencil& pen, const Options& o) {
  if (!pen.affine) throw InputError("gamma needs an affine polynomial (--affine or {\"affine\"})");
  if (o.value.empty()) {
    PencilReport rep = build_report(pen, o.seed);
    Json j = header(rep.ctx);
    j["gamma"] = rep.gamma ? gamma_json(*rep.gamma) : Json(nullptr);
    std::ostringstream t;
    bool bad = false;
    if (rep.gamma) {
      t << "gamma0 = " << rep.gamma->gamma0 << "\ngamma1(s) = " << rep.gamma->gamma1_generic << "\n";
      for (const auto& [vc, g] : rep.gamma->values) {
        t << "a = " << vc.to_string() << ": gamma1 = " << g.gamma1_value << ", lambda1 = " << g.lambda1 << "\n";
        bad = bad || !g.chi_ok || !g.lambda1_ok;
      }
    }
    for (const auto& f : rep.flags) bad = bad || (is_violation(f) && f.rfind("gamma", 0) == 0);
    return {j, t.str(), bad};
  }
  ValueClass a = parse_value(o.value);
  if (a.kind != ValueClass::Kind::rational) throw InputError("gamma --value takes a rational value");
  PencilContext ctx = prepare(pen, o.seed);
  Json j = header(ctx);
  long g0 = pen.degree;
  long gs = gamma1(*pen.affine, ctx.generic, o.seed);
  long ga = gamma1(*pen.affine, a.value, o.seed);
  j["gamma0"] = g0;
  j["gamma1_generic"] = gs;
  j["a"] = value_json(a);
  j["gamma1"] = ga;
  j["lambda1"] = gs - ga;
  std::ostringstream t;
  t << "gamma0 = " << g0 << "\ngamma1(s) = " << gs << "\ngamma1(" << a.to_string() << ") = " << ga << "\n";
  return {j, t.str(), false};
}

int chart_of(const std::array<Rational, 3>& p) { return !p[2].is_zero() ? 2 : !p[1].is_zero() ? 1 : 0; }

bool same_point(const std::array<Rational, 3>& p, const std::array<Rational, 3>& q) {
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k)
      if (p[i] * q[k] != p[k] * q[i]) return false;
  return true;
}

Output cmd_local(const Pencil& pen, const Options& o) {
  if (o.point.empty()) throw InputError("local needs --point x:y:z");
  std::array<Rational, 3> p = parse_point(o.point);
  int chart = chart_of(p);
  Rational s = p[chart];
  for (auto& c : p) c = c / s;
  Rational c0 = p[chart == 0 ? 1 : 0];
  Rational c1 = p[chart == 2 ? 1 : 2];
  std::vector<Rational> pv(p.begin(), p.end());
  Rational Pv = pen.P.eval(pv), Qv = pen.Q.eval(pv);
  bool on_axis = Pv.is_zero() && Qv.is_zero();

  ValueClass a;
  if (!o.value.empty())
    a = parse_value(o.value);
  else if (on_axis)
    throw InputError("--value is required at a point of the axis");
  else if (!Qv.is_zero())
    a = ValueClass::rational_value(Pv / Qv);
  else
    a = ValueClass::infinity();
  if (a.kind == ValueClass::Kind::algebraic) throw InputError("local takes a rational value or inf");

  BiPoly<Rational> germ = a.is_infinity() ? chart_germ<Rational>(swap_roles(pen), chart, c0, c1, Rational(0))
                                          : chart_germ<Rational>(pen, chart, c0, c1, a.value);
  bool on_fibre = bi_eval<Rational>(germ, Rational(0), Rational(0)).is_zero();
  Multiplicity mu = on_fibre ? milnor_number(germ) : Multiplicity{};

  Json j;
  j["pencil"] = pencil_json(pen);
  j["seed"] = o.seed;
  Json pj = Json::array();
  for (const auto& c : p) pj.push_back(rational_json(c));
  j["point"] = pj;
  j["chart"] = chart;
  j["a"] = value_json(a);
  j["on_axis"] = on_axis;
  j["on_fibre"] = on_fibre;
  j["mu"] = mu.infinite ? Json{{"infinity", true}} : Json(mu.value);
  std::ostringstream t;
  t << "point [" << p[0].to_string() << ":" << p[1].to_string() << ":" << p[2].to_string() << "], a = "
    << a.to_string() << "\n";
  t << "mu = " << (mu.infinite ? std::string("inf") : std::to_string(mu.value)) << "\n";
  bool bad = false;
  j["mu_generic"] = nullptr;
  j["lambda"] = nullptr;
  if (on_axis) {
    PencilContext ctx = prepare(pen, o.seed);
    for (const auto& r : analyze_value(ctx, a))
      for (const auto& term : r.axis) {
        if (!term.point.is_rational() || !same_point(term.point.rational_point(), p)) continue;
        j["mu_generic"] = term.mu_generic;
        j["lambda"] = Json{{"value", term.lambda.value},
                           {"route_deformation", term.lambda.route_deformation},
                           {"route_polar", term.lambda.route_polar ? Json(*term.lambda.route_polar) : Json(nullptr)},
                           {"consistent", term.lambda.consistent}};
        j["zeta_relative"] = zeta_json(term.zeta_relative);
        t << "mu_generic = " << term.mu_generic << "\nlambda = " << term.lambda.value << "\n";
        bad = bad || !term.lambda.consistent || term.lambda.value < 0;
      }
  }
  return {j, t.str(), bad};
}

MPoly random_form(std::mt19937_64& gen, int d, int terms) {
  MPoly f(projective_vars());
  for (int t = 0; t < terms; ++t) {
    int i = static_cast<int>(gen() % static_cast<unsigned>(d + 1));
    int j = static_cast<int>(gen() % static_cast<unsigned>(d - i + 1));
    long c = static_cast<long>(gen() % 7) - 3;
    f.add_term({i, j, d - i - j}, Rational(c == 0 ? 1 : c));
  }
  return f;
}

bool routes_agree(const PencilReport& rep) {
  for (const auto& r : rep.values)
    for (const auto& t : r.axis)
      if (!t.lambda.consistent) return false;
  return true;
}

Output cmd_selftest(std::uint64_t seed) {
  Json rows = Json::array();
  std::ostringstream t;
  t << "  a  b  p  q  expected  computed  mu0  mu_s  chi_s  routes  balance\n";
  bool bad = false;
  const std::array<Rational, 3> y_point{Rational(0), Rational(1), Rational(0)};
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int p = 1; p <= a + b; ++p) {
        int q = a + b + 1 - p;
        std::string P = "x*(z^" + std::to_string(a + b) + " + x^" + std::to_string(a) + "*y^" + std::to_string(b) + ")";
        std::string Q = "y^" + std::to_string(p) + "*z^" + std::to_string(q);
        PencilReport rep = build_report(make_pencil(P, Q), seed);
        long got = -1, mu0 = -1, mus = -1;
        for (const auto& r : rep.values)
          if (r.a.kind == ValueClass::Kind::rational && r.a.value.is_zero())
            for (const auto& term : r.axis)
              if (term.point.is_rational() && same_point(term.point.rational_point(), y_point)) {
                got = term.lambda.value;
                mu0 = term.mu_value;
                mus = term.mu_generic;
              }
        long expected = b + a * p;
        bool routes = routes_agree(rep);
        bool ok = got == expected && mu0 == a * a + a * b + b && mus == a * (q - 1) &&
                  rep.chi_generic_fibre == -expected && routes && rep.balance_ok && rep.violations().empty();
        bad = bad || !ok;
        rows.push_back(Json{{"a", a},
                            {"b", b},
                            {"p", p},
                            {"q", q},
                            {"expected", expected},
                            {"computed", got},
                            {"mu0", mu0},
                            {"mu_generic", mus},
                            {"chi_generic_fibre", rep.chi_generic_fibre},
                            {"routes_agree", routes},
                            {"balance_ok", rep.balance_ok},
                            {"ok", ok}});
        t << std::setw(3) << a << std::setw(3) << b << std::setw(3) << p << std::setw(3) << q << std::setw(10)
          << expected << std::setw(10) << got << std::setw(5) << mu0 << std::setw(6) << mus << std::setw(7)
          << rep.chi_generic_fibre << std::setw(8) << (routes ? "ok" : "FAIL") << std::setw(9)
          << (rep.balance_ok ? "ok" : "FAIL") << (ok ? "" : "  MISMATCH") << "\n";
      }

  Json brieskorn = Json::array();
  for (int p = 2; p <= 6; ++p)
    for (int q = 2; q <= 6; ++q) {
      BiPoly<Rational> f =
          chart_poly(parse_polynomial("x^" + std::to_string(p) + " + y^" + std::to_string(q), projective_vars()), 2);
      Multiplicity mu = milnor_number(f);
      bool ok = !mu.infinite && mu.value == (p - 1) * (q - 1);
      bad = bad || !ok;
      if (!ok) t << "Brieskorn " << p << "," << q << ": mu = " << mu.value << "  MISMATCH\n";
      brieskorn.push_back(Json{{"p", p}, {"q", q}, {"mu", mu.value}, {"ok", ok}});
    }
  t << "Brieskorn law on 2 <= p, q <= 6: " << (bad ? "see above" : "ok") << "\n";

  Json randoms = Json::array();
  std::mt19937_64 gen(seed + 1);
  static const VChoice Vs[] = {VChoice::Q, VChoice::Axis, VChoice::None};
  int done = 0;
  for (int attempt = 0; attempt < 60 && done < 8; ++attempt) {
    int d = 1 + static_cast<int>(gen() % 3);
    MPoly P = random_form(gen, d, 2 + static_cast<int>(gen() % 3));
    MPoly Q = random_form(gen, d, 1 + static_cast<int>(gen() % 2));
    VChoice V = Vs[gen() % 3];
    std::string desc = P.to_string() + " ; " + Q.to_string() + " ; " + to_string(V);
    try {
      Pencil pen = make_pencil(P, Q, V);
      if (pen.common_factor_removed) continue;
      PencilReport rep = build_report(pen, seed);
      bool ok = rep.balance_ok && routes_agree(rep) && rep.violations().empty();
      bad = bad || !ok;
      ++done;
      randoms.push_back(Json{{"pencil", desc}, {"balance_ok", rep.balance_ok}, {"ok", ok}});
      t << "random " << desc << ": " << (ok ? "ok" : "FAIL") << "\n";
    } catch (const InputError&) {
    } catch (const HypothesisError&) {
    }
  }
  t << (bad ? "selftest FAILED\n" : "selftest passed\n");
  return {Json{{"seed", seed}, {"grid", rows}, {"brieskorn", brieskorn}, {"random", randoms}, {"ok", !bad}}, t.str(),
          bad};
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of meromorphic pencils P/Q on the projective plane", "meropencil"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool needs_pencil) {
    if (needs_pencil) {
      sub->add_option("--input", o.input, "descriptor file: JSON {\"P\",\"Q\",\"V\"} or {\"affine\"}");
      sub->add_option("--pencil", o.pencil, "\"P;Q\", homogeneous in x, y, z");
      sub->add_option("--affine", o.affine, "polynomial in x, y");
      sub->add_option("--v", o.v, "removed set: Q, axis or none")->check(CLI::IsMember({"Q", "q", "axis", "none"}));
    }
    sub->add_option("--seed", o.seed, "seed for shears and the generic value");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  std::function<Output(const Pencil&)> action;
  bool selftest = false;
  auto bind = [&](const char* name, const char* help, Output (*fn)(const Pencil&, const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, true);
    sub->callback([&, fn] { action = [&, fn](const Pencil& pen) { return fn(pen, o); }; });
    return sub;
  };
  bind("report", "full report", cmd_report);
  bind("atypical", "candidate and atypical values", cmd_atypical);
  CLI::App* local = bind("local", "Milnor number and lambda at a point", cmd_local);
  local->add_option("--point", o.point, "x:y:z")->required();
  local->add_option("--value", o.value, "value a (rational or inf)");
  for (auto [name, help, fn] :
       {std::tuple{"lambda", "lambda at the axis", cmd_lambda}, std::tuple{"euler", "Euler characteristics", cmd_euler},
        std::tuple{"gamma", "polar invariants of an affine polynomial", cmd_gamma},
        std::tuple{"zeta", "monodromy zeta functions", cmd_zeta}}) {
    CLI::App* sub = bind(name, help, fn);
    sub->add_option("--value", o.value, "value a (rational or inf); default: every candidate");
  }
  CLI::App* st = app.add_subcommand("selftest", "lambda on the example grid");
  add_common(st, false);
  st->callback([&] { selftest = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Output res;
  try {
    if (selftest)
      res = cmd_selftest(o.seed);
    else
      res = action(load(o));
  } catch (const HypothesisError& e) {
    Json j{{"error", e.what()}, {"flags", Json::array({e.flag})}};
    if (o.format == "json")
      out << j.dump(2) << "\n";
    else
      out << "hypothesis violated (" << e.flag << "): " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ZetaUnsupported& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (o.format == "json")
    out << res.json.dump(2) << "\n";
  else
    out << res.text;
  return res.violation ? 2 : 0;
}

}  // namespace mero::cli
