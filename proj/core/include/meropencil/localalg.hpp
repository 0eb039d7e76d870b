#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "meropencil/bipoly.hpp"
#include "meropencil/ratfunc.hpp"

namespace mero {

/// Nonnegative integer or infinity.
struct Multiplicity {
  long value = 0;
  bool infinite = false;

  static Multiplicity inf() { return {0, true}; }
  bool operator==(const Multiplicity& o) const { return infinite == o.infinite && (infinite || value == o.value); }
  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

/// Largest k with u^k dividing f (f nonzero).
template <class K>
int bi_u_order(const BiPoly<K>& f) {
  int k = -1;
  for (const auto& c : f.coeffs()) {
    int o = c.is_zero() ? -1 : c.order();
    if (o < 0) continue;
    if (k < 0 || o < k) k = o;
    if (k == 0) break;
  }
  return std::max(k, 0);
}

/// Order in v of f(0, v); -1 when f(0, v) vanishes identically.
template <class K>
int bi_u0_order(const BiPoly<K>& f) {
  for (size_t j = 0; j < f.size(); ++j)
    if (!f[j].is_zero() && !is_zero(f[j][0])) return static_cast<int>(j);
  return -1;
}

template <class K>
BiPoly<K> bi_shift_u_down(const BiPoly<K>& f, int k) {
  std::vector<UPoly<K>> rows;
  for (const auto& c : f.coeffs())
    rows.push_back(c.size() <= static_cast<size_t>(k) ? UPoly<K>()
                                                       : UPoly<K>(std::vector<K>(c.coeffs().begin() + k, c.coeffs().end())));
  return BiPoly<K>(std::move(rows));
}

/// Local intersection number at the origin by the axiomatic reduction:
/// evaluate at v = 0, cancel the lowest terms in u up to units, split off
/// factors of v.
/// Over dynamic extensions a zero divisor raises ExtSplit; over K(s) every
/// nonzero decision is recorded in the active certificate log.
template <class K>
Multiplicity intersection_multiplicity(BiPoly<K> f, BiPoly<K> g) {
  f = bi_semantic_trim(f);
  g = bi_semantic_trim(g);
  f.semantic_trim();
  g.semantic_trim();
  long cap = static_cast<long>(std::max(bi_total_degree(f), 0)) * std::max(bi_total_degree(g), 0);
  long acc = 0;
  const BiPoly<K> f_in = f, g_in = g;
  long steps = 0;
  for (;;) {
    if constexpr (std::is_same_v<K, Rational>) {
      // a long reduction usually means a common component; settle it once
      if (++steps == 6) {
        BiPoly<K> G = bi_gcd(f_in, g_in);
        if (bi_total_degree(G) > 0) {
          if (is_zero(bi_at_origin(G))) return Multiplicity::inf();
          return intersection_multiplicity(bi_divexact(f_in, G), bi_divexact(g_in, G));
        }
      }
    }
    if (f.is_zero() || g.is_zero()) {
      if (!f.is_zero() && !is_zero(bi_at_origin(f))) return {acc, false};
      if (!g.is_zero() && !is_zero(bi_at_origin(g))) return {acc, false};
      return Multiplicity::inf();
    }
    if (!is_zero(bi_at_origin(f)) || !is_zero(bi_at_origin(g))) return {acc, false};
    if (acc > cap) return Multiplicity::inf();
    // f = u^k h:  I(f, g) = k ord_v g(0, v) + I(h, g)
    for (int side = 0; side < 2; ++side, std::swap(f, g)) {
      int k = bi_u_order(f);
      if (k == 0) continue;
      int o = bi_u0_order(g);
      if (o < 0) return Multiplicity::inf();
      acc += static_cast<long>(k) * o;
      f = bi_shift_u_down(f, k);
    }
    if (f.is_zero() || g.is_zero()) continue;
    if (!is_zero(bi_at_origin(f)) || !is_zero(bi_at_origin(g))) return {acc, false};
    UPoly<K> f0 = bi_at_v0(f);
    UPoly<K> g0 = bi_at_v0(g);
    f0.semantic_trim();
    g0.semantic_trim();
    if (f0.is_zero() && g0.is_zero()) return Multiplicity::inf();
    if (g0.is_zero()) {
      std::swap(f, g);
      std::swap(f0, g0);
    }
    if (f0.is_zero()) {
      // f = v * h:  I(f, g) = ord_u g(u, 0) + I(h, g)
      acc += g0.order();
      std::vector<UPoly<K>> rest(f.coeffs().begin() + 1, f.coeffs().end());
      f = BiPoly<K>(std::move(rest));
      f = bi_semantic_trim(f);
      f.semantic_trim();
      continue;
    }
    // f0 = u^r a, g0 = u^s b with a(0), b(0) units: a g - u^(s-r) b f vanishes on v = 0
    int r = f0.order(), s = g0.order();
    if (r > s) {
      std::swap(f, g);
      std::swap(f0, g0);
      std::swap(r, s);
    }
    UPoly<K> a(std::vector<K>(f0.coeffs().begin() + r, f0.coeffs().end()));
    UPoly<K> b(std::vector<K>(g0.coeffs().begin() + s, g0.coeffs().end()));
    BiPoly<K> ng = BiPoly<K>(a) * g - bi_shift_u(BiPoly<K>(b) * f, s - r);
    ng = bi_semantic_trim(ng);
    ng.semantic_trim();
    if constexpr (std::is_same_v<K, Rational>) {
      // factors of the content that are units at the origin do not count
      UPoly<K> c = bi_content(ng);
      int k = c.order();
      if (c.degree() > k) ng = divexact_coeffs(ng, UPoly<K>(std::vector<K>(c.coeffs().begin() + k, c.coeffs().end())));
      if (!ng.is_zero()) ng = bi_normalize(ng);
    }
    g = std::move(ng);
  }
}

template <class K>
Multiplicity milnor_number(const BiPoly<K>& f) {
  return intersection_multiplicity(bi_du(f), bi_dv(f));
}

/// Weights (w_u, w_v) > 0 and degree d with w_u*i + w_v*j = d on the support.
struct QHWeights {
  long wu = 1, wv = 1, d = 0;
};

struct GermInvariants {
  Multiplicity mu;
  bool isolated = true;
  std::optional<QHWeights> qh;
};

namespace detail {

template <class K>
std::vector<std::pair<int, int>> support(const BiPoly<K>& f) {
  std::vector<std::pair<int, int>> s;
  for (size_t j = 0; j < f.size(); ++j)
    for (size_t i = 0; i < f[j].size(); ++i)
      if (!is_zero(f[j][i])) s.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return s;
}

inline long gcd_l(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Common weight vector for several supports, each lying on its own weighted
/// line.  `min_gap` (when given) demands degree(first) - degree(second) > 0.
inline std::optional<std::pair<long, long>> common_weights(const std::vector<std::vector<std::pair<int, int>>>& supports,
                                                           bool need_gap) {
  long du = 0, dv = 0;  // direction of differences
  for (const auto& s : supports) {
    for (size_t k = 1; k < s.size(); ++k) {
      long a = s[k].first - s[0].first, b = s[k].second - s[0].second;
      if (a == 0 && b == 0) continue;
      if (du == 0 && dv == 0) {
        du = a;
        dv = b;
      } else if (du * b - dv * a != 0) {
        return std::nullopt;
      }
    }
  }
  auto gap_ok = [&](long wu, long wv) {
    if (!need_gap) return true;
    const auto& a = supports[0];
    const auto& b = supports[1];
    if (a.empty() || b.empty()) return true;
    long da = wu * a[0].first + wv * a[0].second;
    long db = wu * b[0].first + wv * b[0].second;
    return da > db;
  };
  if (du != 0 || dv != 0) {
    long wu = dv, wv = -du;
    if (wu < 0 || (wu == 0 && wv < 0)) {
      wu = -wu;
      wv = -wv;
    }
    if (wu <= 0 || wv <= 0) return std::nullopt;
    long g = gcd_l(wu, wv);
    wu /= g;
    wv /= g;
    if (!gap_ok(wu, wv)) return std::nullopt;
    return std::make_pair(wu, wv);
  }
  for (long s = 2; s <= 16; ++s)
    for (long wu = 1; wu < s; ++wu) {
      long wv = s - wu;
      if (gcd_l(wu, wv) != 1) continue;
      if (gap_ok(wu, wv)) return std::make_pair(wu, wv);
    }
  return std::nullopt;
}

}  // namespace detail

/// Quasi-homogeneous weights in the given coordinates, if any.
template <class K>
std::optional<QHWeights> quasi_homogeneous_weights(const BiPoly<K>& f) {
  auto s = detail::support(f);
  if (s.empty()) return std::nullopt;
  auto w = detail::common_weights({s}, false);
  if (!w) return std::nullopt;
  return QHWeights{w->first, w->second, w->first * s[0].first + w->second * s[0].second};
}

template <class K>
GermInvariants germ_invariants(const BiPoly<K>& f) {
  GermInvariants g;
  g.mu = milnor_number(f);
  g.isolated = !g.mu.infinite;
  g.qh = quasi_homogeneous_weights(f);
  return g;
}

/// Generic total Milnor number near the origin of the family p - s*q, with
/// the certificate polynomials in s outside whose roots the computation
/// specializes.  Near an axis point the singular points of the nearby fibres
/// all sit at the origin itself, so the generic value is the Milnor number
/// over K(s).
template <class K>
struct FamilyMu {
  Multiplicity mu_generic;
  std::vector<UPoly<K>> certificates;
};

template <class K>
FamilyMu<K> family_mu(const BiPoly<K>& p, const BiPoly<K>& q) {
  using F = RatFunc<K>;
  auto lift_f = [](const K& c) { return F(c); };
  BiPoly<F> pf = bi_map<F>(p, lift_f);
  BiPoly<F> qf = bi_map<F>(q, lift_f);
  BiPoly<F> fam = pf - bi_scale(qf, F::param());
  CertificateLog<K> log;
  FamilyMu<K> out;
  {
    CertificateScope<K> scope(log);
    out.mu_generic = milnor_number(fam);
  }
  out.certificates = std::move(log.polys);
  return out;
}

}  // namespace mero
