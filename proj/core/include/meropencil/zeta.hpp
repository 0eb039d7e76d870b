#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "meropencil/localalg.hpp"

namespace mero {

/// Product of (1 - t^k)^e over k >= 1, each k stored once with e != 0.
class ZetaFunction {
 public:
  ZetaFunction() = default;
  static ZetaFunction factor(int k, long e);

  const std::map<int, long>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }

  ZetaFunction& operator*=(const ZetaFunction& o);
  friend ZetaFunction operator*(ZetaFunction a, const ZetaFunction& b) { return a *= b; }
  ZetaFunction inverse() const;
  ZetaFunction pow(long e) const;
  bool operator==(const ZetaFunction& o) const { return f_ == o.f_; }

  /// Sum of k*e: degree of numerator minus degree of denominator.
  long net_degree() const;

  /// Numerator and denominator as dense integer polynomials in t.
  std::pair<UPoly<Rational>, UPoly<Rational>> as_fraction() const;

  /// "(1 - t^2)^-1 * (1 - t^3)^-1 * (1 - t^6)", "1" for the trivial zeta.
  std::string to_string() const;

  /// Zeta of a finite-order map from its Lefschetz numbers L[k-1] = L(h^k),
  /// k = 1..N with h^N = id.
  static ZetaFunction from_lefschetz(const std::vector<long>& L);

 private:
  std::map<int, long> f_;
};

struct ZetaUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline long lcm_l(long a, long b) { return a / gcd_l(a, b) * b; }

/// Order of the diagonal action (e^{2 pi i wu/D}, e^{2 pi i wv/D}).
inline long action_period(long wu, long wv, long D) {
  return lcm_l(D / gcd_l(D, wu), D / gcd_l(D, wv));
}

/// Exponent n when f(u, 0) = c u^n, -1 when f(u, 0) = 0; throws when f(u,0)
/// has several terms.
template <class K>
int pure_u_exponent(const BiPoly<K>& f) {
  UPoly<K> a = bi_at_v0(f);
  int n = -1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    if (n >= 0) throw ZetaUnsupported("not quasi-homogeneous");
    n = static_cast<int>(i);
  }
  return n;
}

}  // namespace detail

/// Zeta of the local Milnor fibration of a quasi-homogeneous germ with
/// isolated singularity, from the fixed points of the periodic monodromy.
template <class K>
ZetaFunction local_zeta_quasihomogeneous(const BiPoly<K>& f) {
  if (!is_zero(bi_at_origin(f))) throw ZetaUnsupported("germ does not vanish at the origin");
  Multiplicity mu = milnor_number(f);
  if (mu.infinite) throw ZetaUnsupported("non-isolated singularity");
  auto w = quasi_homogeneous_weights(f);
  if (!w || w->d <= 0) throw ZetaUnsupported("no positive weight vector in the given coordinates");
  int nu = detail::pure_u_exponent(f);
  int nv = detail::pure_u_exponent(bi_swap(f));
  long N = detail::action_period(w->wu, w->wv, w->d);
  std::vector<long> L;
  for (long k = 1; k <= N; ++k) {
    bool ufree = (k * w->wu) % w->d == 0;
    bool vfree = (k * w->wv) % w->d == 0;
    if (ufree && vfree)
      L.push_back(1 - mu.value);
    else if (ufree)
      L.push_back(nu > 0 ? nu : 0);
    else if (vfree)
      L.push_back(nv > 0 ? nv : 0);
    else
      L.push_back(0);
  }
  return ZetaFunction::from_lefschetz(L);
}

/// det(1 - tT | H_1) as a zeta-style product, from a zeta whose H_0 is
/// trivial.
inline ZetaFunction h1_factor(const ZetaFunction& z) { return z * ZetaFunction::factor(1, 1); }

/// Relative zeta of a vanishing pair at an isolated quasi-homogeneous fibre
/// singularity: the reciprocal of the H_1 factor.
template <class K>
ZetaFunction relative_zeta_interior(const BiPoly<K>& g) {
  return h1_factor(local_zeta_quasihomogeneous(g)).inverse();
}

/// Relative zeta at an axis point for the fibre germ g = p - a q, where g and
/// q are quasi-homogeneous for one weight vector with deg g > deg q.  The
/// nearby fibres {g = eps q} are rescaled copies of {g = q}; lambda is the
/// vanishing rank at the point.
template <class K>
ZetaFunction relative_zeta_axis(const BiPoly<K>& g, const BiPoly<K>& q, long lambda) {
  if (lambda == 0) return ZetaFunction();
  auto sg = detail::support(g);
  auto sq = detail::support(q);
  if (sg.empty() || sq.empty()) throw ZetaUnsupported("axis germ without quasi-homogeneous pair structure");
  auto w = detail::common_weights({sg, sq}, true);
  if (!w) throw ZetaUnsupported("axis germ pair is not quasi-homogeneous in the given coordinates");
  long dg = w->first * sg[0].first + w->second * sg[0].second;
  long dq = w->first * sq[0].first + w->second * sq[0].second;
  long D = dg - dq;
  int ng = detail::pure_u_exponent(g), nq = detail::pure_u_exponent(q);
  int mg = detail::pure_u_exponent(bi_swap(g)), mq = detail::pure_u_exponent(bi_swap(q));
  long N = detail::action_period(w->first, w->second, D);
  std::vector<long> L;
  for (long k = 1; k <= N; ++k) {
    bool ufree = (k * w->first) % D == 0;
    bool vfree = (k * w->second) % D == 0;
    if (ufree && vfree)
      L.push_back(1 - lambda);
    else if (ufree)
      L.push_back(1 + ((ng > 0 && nq > 0) ? ng - nq : 0));
    else if (vfree)
      L.push_back(1 + ((mg > 0 && mq > 0) ? mg - mq : 0));
    else
      L.push_back(1);
  }
  return h1_factor(ZetaFunction::from_lefschetz(L)).inverse();
}

}  // namespace mero
