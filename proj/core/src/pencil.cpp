#include "meropencil/pencil.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "meropencil/shear.hpp"

namespace mero {

using QPoly = UPoly<Rational>;
using QBi = BiPoly<Rational>;

std::string to_string(VChoice v) {
  switch (v) {
    case VChoice::Q:
      return "Q";
    case VChoice::Axis:
      return "axis";
    case VChoice::None:
      return "none";
  }
  return "Q";
}

VChoice parse_vchoice(const std::string& s) {
  if (s == "Q" || s == "q") return VChoice::Q;
  if (s == "axis") return VChoice::Axis;
  if (s == "none") return VChoice::None;
  throw InputError("unknown V choice '" + s + "' (expected Q, axis or none)");
}

const std::vector<std::string>& projective_vars() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

long AxisReport::count() const {
  long n = 0;
  for (const auto& p : points) n += p.point.count();
  return n;
}

QBi chart_poly(const MPoly& F, int chart) { return chart_translate<Rational>(F, chart, Rational(0), Rational(0)); }

MPoly homogenize(const QBi& f, int chart, int degree) {
  size_t iu = chart == 0 ? 1 : 0;
  size_t iv = chart == 2 ? 1 : 2;
  MPoly out(projective_vars());
  for (size_t j = 0; j < f.size(); ++j)
    for (size_t i = 0; i < f[j].size(); ++i) {
      if (f[j][i].is_zero()) continue;
      MPoly::Exponent e(3, 0);
      e[iu] = static_cast<int>(i);
      e[iv] = static_cast<int>(j);
      e[static_cast<size_t>(chart)] = degree - static_cast<int>(i + j);
      if (e[static_cast<size_t>(chart)] < 0) throw std::logic_error("homogenize: degree too small");
      out.add_term(e, f[j][i]);
    }
  return out;
}

namespace {

bool nonconstant(const QBi& f) { return bi_total_degree(f) > 0; }

MPoly z_power(int k) {
  MPoly::Exponent e{0, 0, k};
  MPoly m(projective_vars());
  m.add_term(e, Rational(1));
  return m;
}

}  // namespace

MPoly homogeneous_gcd(const MPoly& A, const MPoly& B) {
  int k = std::min(A.min_degree_in(2), B.min_degree_in(2));
  QBi g = bi_gcd(chart_poly(A, 2), chart_poly(B, 2));
  return homogenize(g, 2, bi_total_degree(g)) * z_power(k);
}

MPoly reduced_form(const MPoly& F) {
  if (F.is_zero()) return F;
  int k = F.min_degree_in(2);
  QBi f = chart_poly(F, 2);
  QBi g = bi_gcd(f, bi_du(f));
  g = bi_gcd(g, bi_dv(f));
  QBi r = bi_normalize(bi_divexact(f, g));
  return homogenize(r, 2, bi_total_degree(r)) * z_power(k > 0 ? 1 : 0);
}

Pencil make_pencil(const MPoly& P0, const MPoly& Q0, VChoice V) {
  if (P0.vars() != projective_vars() || Q0.vars() != projective_vars())
    throw InputError("pencil forms must be polynomials in x, y, z");
  if (Q0.is_zero()) throw InputError("Q is zero");
  if (P0.is_zero()) throw InputError("P is zero");
  if (!P0.is_homogeneous()) throw InputError("P is not homogeneous");
  if (!Q0.is_homogeneous()) throw InputError("Q is not homogeneous");
  int dp = P0.total_degree(), dq = Q0.total_degree();
  if (dp != dq) throw InputError("degree mismatch: deg P = " + std::to_string(dp) + ", deg Q = " + std::to_string(dq));
  Pencil pen;
  pen.V = V;
  pen.P = P0;
  pen.Q = Q0;
  MPoly G = homogeneous_gcd(P0, Q0);
  if (G.total_degree() > 0) {
    pen.P = divexact(P0, G);
    pen.Q = divexact(Q0, G);
    pen.common_factor_removed = true;
  }
  pen.degree = pen.P.total_degree();
  if (pen.degree <= 0) throw InputError("the pencil is constant");
  return pen;
}

Pencil make_pencil(const std::string& P, const std::string& Q, VChoice V) {
  MPoly p, q;
  try {
    p = parse_polynomial(P, projective_vars());
  } catch (const ParseError& e) {
    throw InputError(std::string("P: ") + e.what());
  }
  try {
    q = parse_polynomial(Q, projective_vars());
  } catch (const ParseError& e) {
    throw InputError(std::string("Q: ") + e.what());
  }
  return make_pencil(p, q, V);
}

Pencil from_affine(const std::string& text) {
  static const std::vector<std::string> xy{"x", "y"};
  MPoly f;
  try {
    f = parse_polynomial(text, xy);
  } catch (const ParseError& e) {
    throw InputError(std::string("affine polynomial: ") + e.what());
  }
  int d = f.total_degree();
  if (d <= 0) throw InputError("affine polynomial is constant");
  QBi b = bipoly_from<Rational>(f, 0, 1);
  Pencil pen = make_pencil(homogenize(b, 2, d), z_power(d), VChoice::Q);
  pen.affine = f;
  return pen;
}

Pencil swap_roles(const Pencil& pen) {
  Pencil s = pen;
  std::swap(s.P, s.Q);
  return s;
}

// ---------------------------------------------------------------- axis

namespace {

/// Points [t : 1 : 0] for the roots of f(t), chart y.
std::vector<PointClass> line_classes(const QPoly& f) {
  std::vector<PointClass> out;
  for (auto& m : root_classes(f)) {
    PointClass p;
    p.chart = 1;
    p.modulus = m;
    if (m.degree() == 1)
      p.coords = {QPoly(-m.coeff(0)), QPoly()};
    else
      p.coords = {QPoly::variable(), QPoly()};
    out.push_back(std::move(p));
  }
  return out;
}

PointClass x_point() {
  PointClass p;
  p.chart = 0;
  p.modulus = QPoly::variable();
  return p;
}

/// The three base-locus pieces: chart z = 1, the line z = 0 minus [1:0:0],
/// and [1:0:0].
std::vector<PointClass> base_locus(const Pencil& pen, std::uint64_t seed) {
  std::vector<PointClass> out;
  QBi p = chart_poly(pen.P, 2), q = chart_poly(pen.Q, 2);
  if (nonconstant(p) && nonconstant(q)) {
    auto s = solve_affine(p, q, 2, seed);
    out.insert(out.end(), s.begin(), s.end());
  }
  QPoly pl = bi_at_v0(chart_poly(pen.P, 1)), ql = bi_at_v0(chart_poly(pen.Q, 1));
  QPoly g = gcd(pl, ql);
  if (g.degree() > 0) {
    auto s = line_classes(g);
    out.insert(out.end(), s.begin(), s.end());
  }
  MPoly::Exponent e{pen.degree, 0, 0};
  if (pen.P.coeff(e).is_zero() && pen.Q.coeff(e).is_zero()) out.push_back(x_point());
  return out;
}

}  // namespace

AxisReport axis_points(const Pencil& pen, std::uint64_t seed) {
  AxisReport rep;
  rep.bezout_expected = static_cast<long>(pen.degree) * pen.degree;
  for (const auto& pc : base_locus(pen, seed)) {
    auto parts = refine_class(pc, [&](const auto& c0, const auto& c1) {
      using K = std::decay_t<decltype(c0)>;
      return intersection_multiplicity(chart_translate<K>(pen.P, pc.chart, c0, c1),
                                       chart_translate<K>(pen.Q, pc.chart, c0, c1));
    });
    for (auto& [sub, m] : parts) {
      if (m.infinite) throw std::logic_error("axis_points: P and Q share a component");
      rep.bezout_accounted += m.value * sub.count();
      rep.points.push_back({std::move(sub), m.value});
    }
  }
  if (rep.bezout_accounted != rep.bezout_expected)
    rep.residual.push_back("unaccounted intersection multiplicity " +
                           std::to_string(rep.bezout_expected - rep.bezout_accounted));
  return rep;
}

// ---------------------------------------------------------------- critical points

namespace {

enum class PointKind { axis, removed, finite, infinite };

struct Classified {
  PointKind kind;
  QPoly value;
};

template <class K>
QPoly as_class_poly(const K& v) {
  if constexpr (std::is_same_v<K, Rational>)
    return QPoly(v);
  else
    return v.rep();
}

Classified classify_point(const Pencil& pen, const QBi& p, const QBi& q, const auto& c0, const auto& c1) {
  using K = std::decay_t<decltype(c0)>;
  K pv = bi_eval<K>(p, c0, c1), qv = bi_eval<K>(q, c0, c1);
  if (is_zero(qv)) {
    if (is_zero(pv)) return {PointKind::axis, {}};
    return {pen.V == VChoice::Q ? PointKind::removed : PointKind::infinite, {}};
  }
  return {PointKind::finite, as_class_poly(pv / qv)};
}

void collect_critical(const Pencil& pen, const std::vector<PointClass>& cands, const QBi& p, const QBi& q,
                      std::vector<CriticalClass>& out) {
  for (const auto& pc : cands) {
    auto parts =
        refine_class(pc, [&](const auto& c0, const auto& c1) { return classify_point(pen, p, q, c0, c1); });
    for (auto& [sub, c] : parts) {
      if (c.kind == PointKind::axis || c.kind == PointKind::removed) continue;
      CriticalClass cc;
      cc.point = std::move(sub);
      cc.infinite_value = c.kind == PointKind::infinite;
      cc.value = c.value;
      out.push_back(std::move(cc));
    }
  }
}

QBi strip_common(QBi J, const QBi& H) {
  if (H.is_zero() || !nonconstant(H)) return J;
  for (;;) {
    QBi g = bi_gcd(J, H);
    if (!nonconstant(g)) return J;
    J = bi_divexact(J, g);
  }
}

}  // namespace

std::vector<CriticalClass> critical_points(const Pencil& pen, std::uint64_t seed) {
  std::vector<CriticalClass> out;
  const std::string msg = "the critical locus of F is positive-dimensional (a fibre is non-reduced)";
  // chart z = 1
  {
    QBi p = chart_poly(pen.P, 2), q = chart_poly(pen.Q, 2);
    QBi h1 = q * bi_du(p) - p * bi_du(q);
    QBi h2 = q * bi_dv(p) - p * bi_dv(q);
    if (h1.is_zero() && h2.is_zero()) throw HypothesisError("positive_dimensional_critical_locus", msg);
    QBi G = bi_gcd(h1, h2);
    if (nonconstant(G)) {
      QBi rest = G;
      if (pen.V == VChoice::Q) {
        for (;;) {
          QBi g = bi_gcd(rest, q);
          if (!nonconstant(g)) break;
          rest = bi_divexact(rest, g);
        }
      }
      if (nonconstant(rest)) throw HypothesisError("positive_dimensional_critical_locus", msg);
    }
    QBi a = h1.is_zero() ? h1 : bi_divexact(h1, G);
    QBi b = h2.is_zero() ? h2 : bi_divexact(h2, G);
    if (nonconstant(a) && nonconstant(b)) collect_critical(pen, solve_affine(a, b, 2, seed), p, q, out);
  }
  // line z = 0
  MPoly Px = pen.P.derivative(0), Py = pen.P.derivative(1), Pz = pen.P.derivative(2);
  MPoly Qx = pen.Q.derivative(0), Qy = pen.Q.derivative(1), Qz = pen.Q.derivative(2);
  std::array<MPoly, 3> minors{Px * Qy - Py * Qx, Px * Qz - Pz * Qx, Py * Qz - Pz * Qy};
  bool line_removed = pen.V == VChoice::Q && pen.Q.min_degree_in(2) > 0;
  if (!line_removed) {
    QPoly g;
    for (const auto& M : minors) g = gcd(g, bi_at_v0(chart_poly(M, 1)));
    if (g.is_zero()) throw HypothesisError("positive_dimensional_critical_locus", msg);
    if (g.degree() > 0)
      collect_critical(pen, line_classes(g), chart_poly(pen.P, 1), chart_poly(pen.Q, 1), out);
  }
  // [1:0:0]
  {
    std::vector<Rational> pt{Rational(1), Rational(0), Rational(0)};
    bool crit = true;
    for (const auto& M : minors) crit = crit && M.eval(pt).is_zero();
    if (crit) collect_critical(pen, {x_point()}, chart_poly(pen.P, 0), chart_poly(pen.Q, 0), out);
  }
  return out;
}

// ---------------------------------------------------------------- curve singularities

namespace {

void singular_at(const MPoly& G, const std::vector<PointClass>& cands, std::vector<SingularPoint>& out) {
  for (const auto& pc : cands) {
    auto parts = refine_class(pc, [&](const auto& c0, const auto& c1) {
      using K = std::decay_t<decltype(c0)>;
      return milnor_number(chart_translate<K>(G, pc.chart, c0, c1));
    });
    for (auto& [sub, mu] : parts) out.push_back({std::move(sub), mu});
  }
}

}  // namespace

std::vector<SingularPoint> curve_singularities(const MPoly& G, std::uint64_t seed) {
  std::vector<SingularPoint> out;
  QBi g = chart_poly(G, 2);
  if (nonconstant(g)) {
    QBi gu = bi_du(g), gv = bi_dv(g);
    bool done = false;
    for (std::uint64_t k = 0; k < 8 && !done; ++k) {
      Rational c = k == 0 ? Rational(0) : Rational(shear_constants(seed + 31 * k, 1)[0]);
      QBi D = gu + bi_scale(gv, c);
      if (D.is_zero() || nonconstant(bi_gcd(g, D))) continue;
      std::vector<PointClass> sing;
      for (const auto& pc : solve_affine(g, D, 2, seed)) {
        auto kept = filter_class(pc, [&](const auto& c0, const auto& c1) {
          using K = std::decay_t<decltype(c0)>;
          return is_zero(bi_eval<K>(gv, c0, c1));
        });
        sing.insert(sing.end(), kept.begin(), kept.end());
      }
      singular_at(G, sing, out);
      done = true;
    }
    if (!done) throw HypothesisError("non_reduced_fibre", "curve is not reduced or no generic direction was found");
  }
  std::array<MPoly, 3> partials{G.derivative(0), G.derivative(1), G.derivative(2)};
  QPoly h;
  for (const auto& M : partials) h = gcd(h, bi_at_v0(chart_poly(M, 1)));
  if (h.is_zero()) throw HypothesisError("non_reduced_fibre", "the line z = 0 is a multiple component");
  if (h.degree() > 0) singular_at(G, line_classes(h), out);
  std::vector<Rational> pt{Rational(1), Rational(0), Rational(0)};
  bool sing = true;
  for (const auto& M : partials) sing = sing && M.eval(pt).is_zero();
  if (sing) singular_at(G, {x_point()}, out);
  return out;
}

long curve_euler(const MPoly& G, std::uint64_t seed) {
  long e = G.total_degree();
  long chi = e * (3 - e);
  for (const auto& s : curve_singularities(G, seed)) {
    if (s.mu.infinite) throw HypothesisError("non_reduced_fibre", "curve has a non-isolated singularity");
    chi += s.mu.value * s.point.count();
  }
  return chi;
}

// ---------------------------------------------------------------- polar curve

QBi polar_curve(const Pencil& pen, int chart) {
  QBi p = chart_poly(pen.P, chart), q = chart_poly(pen.Q, chart);
  QBi J = bi_du(p) * bi_dv(q) - bi_dv(p) * bi_du(q);
  if (J.is_zero()) return J;
  J = strip_common(J, q);
  QBi h1 = q * bi_du(p) - p * bi_du(q);
  QBi h2 = q * bi_dv(p) - p * bi_dv(q);
  J = strip_common(J, bi_gcd(h1, h2));
  return bi_normalize(J);
}

// ---------------------------------------------------------------- values

ValueClass ValueClass::rational_value(const Rational& r) {
  ValueClass v;
  v.kind = Kind::rational;
  v.value = r;
  v.modulus = QPoly(std::vector<Rational>{-r, Rational(1)});
  return v;
}

ValueClass ValueClass::from_modulus(const QPoly& m) {
  if (m.degree() == 1) return rational_value(-m.coeff(0) / m.coeff(1));
  ValueClass v;
  v.kind = Kind::algebraic;
  v.modulus = monic(m);
  return v;
}

ValueClass ValueClass::infinity() {
  ValueClass v;
  v.kind = Kind::infinity;
  return v;
}

std::string ValueClass::to_string() const {
  switch (kind) {
    case Kind::rational:
      return value.to_string();
    case Kind::algebraic:
      return "root of " + modulus.to_string("s");
    case Kind::infinity:
      return "inf";
  }
  return "";
}

namespace {

/// Down to Q[s]: identity over Q, the norm over an extension.
template <class K>
QPoly norm_to_q(const UPoly<K>& c, const K& witness) {
  if constexpr (std::is_same_v<K, Rational>) {
    (void)witness;
    return c;
  } else {
    return norm_poly(witness.ctx()->modulus, c);
  }
}

struct FamilyData {
  Multiplicity mu_generic;
  std::vector<QPoly> certificates;
  std::optional<long> polar_generic, polar_generic_swapped;
};

/// Small nonzero rationals ordered by height.
const std::vector<Rational>& height_sequence() {
  static const std::vector<Rational> seq = [] {
    std::vector<Rational> out;
    for (long h = 1; h <= 40; ++h)
      for (long d = 1; d <= h; ++d) {
        long n = h;
        if (std::gcd(n, d) != 1) continue;
        out.emplace_back(n, d);
        out.emplace_back(-n, d);
        if (d != n) {
          out.emplace_back(d, n);
          out.emplace_back(-d, n);
        }
      }
    return out;
  }();
  return seq;
}

template <class K>
int order_at_origin(const BiPoly<K>& f) {
  int best = -1;
  for (size_t j = 0; j < f.size(); ++j)
    for (size_t i = 0; i < f[j].size(); ++i)
      if (!is_zero(f[j][i]) && (best < 0 || static_cast<int>(i + j) < best)) best = static_cast<int>(i + j);
  return best;
}

/// Along each branch of the polar germ, I(branch, p - s q) exceeds its
/// generic value only when s is the limit of p/q on that branch.  There are
/// at most mult(polar) branches, so the minimum over mult + 1 distinct values
/// is the generic one.
template <class K>
std::optional<long> polar_generic(const QBi& gamma, const BiPoly<K>& p, const BiPoly<K>& q, const K& c0, const K& c1) {
  if (gamma.is_zero()) return std::nullopt;
  BiPoly<K> G = bi_translate<K>(gamma, c0, c1);
  if (!is_zero(bi_at_origin(G))) return std::nullopt;
  int m = order_at_origin(G);
  std::optional<long> best;
  int found = 0;
  for (const Rational& s : height_sequence()) {
    Multiplicity I = intersection_multiplicity(G, p - bi_scale(q, lift<K>(s)));
    if (I.infinite) continue;
    if (!best || I.value < *best) best = I.value;
    if (++found > m) return best;
  }
  throw std::runtime_error("polar_generic: too many special values");
}

bool value_less(const ValueClass& a, const ValueClass& b) {
  auto rank = [](const ValueClass& v) { return static_cast<int>(v.kind); };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  if (a.kind == ValueClass::Kind::rational) return a.value < b.value;
  if (a.kind == ValueClass::Kind::algebraic) {
    if (a.modulus.degree() != b.modulus.degree()) return a.modulus.degree() < b.modulus.degree();
    return a.modulus.to_string("s") < b.modulus.to_string("s");
  }
  return false;
}

}  // namespace

PencilContext prepare(const Pencil& pen, std::uint64_t seed) {
  PencilContext ctx;
  ctx.pencil = pen;
  ctx.swapped = swap_roles(pen);
  ctx.seed = seed;
  if (pen.common_factor_removed) ctx.flags.push_back("common_factor_removed");
  ctx.axis = axis_points(pen, seed);
  ctx.critical = critical_points(pen, seed);
  std::set<int> charts;
  for (const auto& ap : ctx.axis.points) charts.insert(ap.point.chart);
  for (int c : charts) {
    ctx.polar[static_cast<size_t>(c)] = polar_curve(pen, c);
    ctx.polar_swapped[static_cast<size_t>(c)] = polar_curve(ctx.swapped, c);
  }

  // generic family data at the axis points
  for (const auto& ap : ctx.axis.points) {
    int chart = ap.point.chart;
    auto parts = refine_class(ap.point, [&](const auto& c0, const auto& c1) {
      using K = std::decay_t<decltype(c0)>;
      BiPoly<K> p = chart_translate<K>(pen.P, chart, c0, c1);
      BiPoly<K> q = chart_translate<K>(pen.Q, chart, c0, c1);
      FamilyData fd;
      FamilyMu<K> fm = family_mu(p, q);
      fd.mu_generic = fm.mu_generic;
      for (const auto& c : fm.certificates) fd.certificates.push_back(norm_to_q(c, c0));
      fd.polar_generic = polar_generic(ctx.polar[static_cast<size_t>(chart)], p, q, c0, c1);
      fd.polar_generic_swapped = polar_generic(ctx.polar_swapped[static_cast<size_t>(chart)], q, p, c0, c1);
      return fd;
    });
    for (auto& [sub, fd] : parts) {
      if (fd.mu_generic.infinite)
        throw HypothesisError("non_isolated_germ", "generic fibre germ at " + sub.to_string() + " is not isolated");
      AxisFamily fam;
      fam.point = std::move(sub);
      fam.multiplicity = ap.multiplicity;
      fam.mu_generic = fd.mu_generic;
      fam.certificates = std::move(fd.certificates);
      fam.polar_generic = fd.polar_generic;
      fam.polar_generic_swapped = fd.polar_generic_swapped;
      ctx.families.push_back(std::move(fam));
    }
  }

  // candidate values with witnesses
  std::vector<std::pair<QPoly, std::string>> sources;
  bool infinity_candidate = false;
  std::vector<std::string> infinity_witnesses;
  for (const auto& cc : ctx.critical) {
    std::string w = "critical point " + cc.point.to_string();
    if (cc.infinite_value) {
      infinity_candidate = true;
      infinity_witnesses.push_back(w);
      continue;
    }
    QPoly charpoly;
    if (cc.point.is_rational()) {
      charpoly = QPoly(std::vector<Rational>{-cc.value.coeff(0), Rational(1)});
    } else {
      auto ectx = make_ext_context(cc.point.modulus);
      using E = Ext<Rational>;
      charpoly = norm_poly(cc.point.modulus, UPoly<E>(std::vector<E>{-E(ectx, cc.value), E(1)}));
    }
    sources.emplace_back(squarefree_part(charpoly), w);
  }
  for (const auto& fam : ctx.families) {
    std::vector<QPoly> certs;
    for (const auto& c : fam.certificates)
      if (c.degree() > 0) certs.push_back(c);
    for (const auto& b : gcd_free_basis(certs)) {
      for (const auto& m : root_classes(b)) {
        ValueClass vc = ValueClass::from_modulus(m);
        int chart = fam.point.chart;
        auto jumps = over_value(vc, [&](const auto& a) {
          using K1 = std::decay_t<decltype(a)>;
          bool jump = false;
          for (const auto& [n, mu] : over_points<K1>(fam.point, [&](const auto& c0, const auto& c1) {
                 using K2 = std::decay_t<decltype(c0)>;
                 return milnor_number(chart_germ<K2>(pen, chart, c0, c1, embed<K2>(a)));
               })) {
            (void)n;
            if (mu.infinite || mu.value > fam.mu_generic.value) jump = true;
          }
          return jump;
        });
        for (auto& [sub, jump] : jumps)
          if (jump) sources.emplace_back(sub.modulus, "Milnor number jump at " + fam.point.to_string());
      }
    }
    if (pen.V != VChoice::Q) {
      int chart = fam.point.chart;
      for (const auto& [n, mu] : over_points<Rational>(fam.point, [&](const auto& c0, const auto& c1) {
             using K = std::decay_t<decltype(c0)>;
             return milnor_number(chart_translate<K>(pen.Q, chart, c0, c1));
           })) {
        (void)n;
        if (mu.infinite || mu.value > fam.mu_generic.value) {
          infinity_candidate = true;
          infinity_witnesses.push_back("Milnor number jump at " + fam.point.to_string());
        }
      }
    }
  }
  std::vector<QPoly> polys;
  for (const auto& [p, w] : sources) polys.push_back(p);
  for (const auto& b : gcd_free_basis(polys)) {
    for (const auto& m : root_classes(b)) {
      ValueClass vc = ValueClass::from_modulus(m);
      for (const auto& [p, w] : sources)
        if (gcd(m, p).degree() > 0 &&
            std::find(vc.witnesses.begin(), vc.witnesses.end(), w) == vc.witnesses.end())
          vc.witnesses.push_back(w);
      ctx.candidates.push_back(std::move(vc));
    }
  }
  std::sort(ctx.candidates.begin(), ctx.candidates.end(), value_less);
  if (infinity_candidate && pen.V != VChoice::Q) {
    ValueClass inf = ValueClass::infinity();
    std::sort(infinity_witnesses.begin(), infinity_witnesses.end());
    infinity_witnesses.erase(std::unique(infinity_witnesses.begin(), infinity_witnesses.end()),
                             infinity_witnesses.end());
    inf.witnesses = std::move(infinity_witnesses);
    ctx.candidates.push_back(std::move(inf));
  }

  // generic value, certified away from every recorded polynomial
  std::vector<QPoly> avoid = polys;
  for (const auto& fam : ctx.families) {
    avoid.insert(avoid.end(), fam.certificates.begin(), fam.certificates.end());
  }
  const auto& seq = height_sequence();
  size_t start = static_cast<size_t>(seed % 23) + 2;
  bool found = false;
  for (size_t k = 0; k < seq.size() && !found; ++k) {
    const Rational& s = seq[(start + k) % seq.size()];
    bool ok = true;
    for (const auto& p : avoid)
      if (p.degree() > 0 && p.eval(s).is_zero()) {
        ok = false;
        break;
      }
    if (ok) {
      ctx.generic = s;
      found = true;
    }
  }
  if (!found) throw std::runtime_error("no generic value found among small rationals");
  return ctx;
}

std::vector<ValueClass> candidate_atypical_values(const Pencil& pen, std::uint64_t seed) {
  return prepare(pen, seed).candidates;
}

}  // namespace mero
