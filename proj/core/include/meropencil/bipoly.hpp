#pragma once

#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "meropencil/mpoly.hpp"
#include "meropencil/rational.hpp"
#include "meropencil/upoly.hpp"

namespace mero {

/// Bivariate polynomial K[u][v]: outer variable v, inner variable u.
template <class K>
using BiPoly = UPoly<UPoly<K>>;

/// Embeds a rational into a field built over the rationals.
template <class K>
K lift(const Rational& r) {
  if constexpr (std::is_same_v<K, Rational>)
    return r;
  else
    return K(lift<typename K::base_field>(r));
}

template <class K>
BiPoly<K> bi_constant(const K& c) {
  return BiPoly<K>(UPoly<K>(c));
}
template <class K>
BiPoly<K> bi_u() {
  return BiPoly<K>(UPoly<K>::variable());
}
template <class K>
BiPoly<K> bi_v() {
  return BiPoly<K>::variable();
}

template <class K>
K bi_coeff(const BiPoly<K>& f, int i, int j) {
  return f.coeff(j).coeff(i);
}

/// Total degree, -1 for zero.
template <class K>
int bi_total_degree(const BiPoly<K>& f) {
  int d = -1;
  for (size_t j = 0; j < f.size(); ++j)
    if (!f[j].is_zero()) d = std::max(d, static_cast<int>(j) + f[j].degree());
  return d;
}

template <class K>
int bi_degree_u(const BiPoly<K>& f) {
  int d = -1;
  for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
  return d;
}

/// f(u, 0) as a polynomial in u.
template <class K>
UPoly<K> bi_at_v0(const BiPoly<K>& f) {
  return f.coeff(0);
}

/// f(0, v) as a polynomial in v.
template <class K>
UPoly<K> bi_at_u0(const BiPoly<K>& f) {
  std::vector<K> out;
  out.reserve(f.size());
  for (const auto& c : f.coeffs()) out.push_back(c.coeff(0));
  return UPoly<K>(std::move(out));
}

template <class K>
K bi_at_origin(const BiPoly<K>& f) {
  return f.coeff(0).coeff(0);
}

template <class K>
BiPoly<K> bi_swap(const BiPoly<K>& f) {
  int du = bi_degree_u(f);
  if (du < 0) return BiPoly<K>();
  std::vector<std::vector<K>> rows(static_cast<size_t>(du) + 1, std::vector<K>(f.size(), K(0)));
  for (size_t j = 0; j < f.size(); ++j)
    for (size_t i = 0; i < f[j].size(); ++i) rows[i][j] = f[j][i];
  std::vector<UPoly<K>> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return BiPoly<K>(std::move(out));
}

template <class K>
BiPoly<K> bi_du(const BiPoly<K>& f) {
  std::vector<UPoly<K>> out;
  out.reserve(f.size());
  for (const auto& c : f.coeffs()) out.push_back(c.derivative());
  return BiPoly<K>(std::move(out));
}

template <class K>
BiPoly<K> bi_dv(const BiPoly<K>& f) {
  return f.derivative();
}

template <class K>
BiPoly<K> bi_scale(const BiPoly<K>& f, const K& c) {
  std::vector<UPoly<K>> out;
  out.reserve(f.size());
  for (const auto& a : f.coeffs()) out.push_back(a.scaled(c));
  return BiPoly<K>(std::move(out));
}

/// Multiplication by u^k.
template <class K>
BiPoly<K> bi_shift_u(const BiPoly<K>& f, int k) {
  std::vector<UPoly<K>> out;
  out.reserve(f.size());
  for (const auto& a : f.coeffs()) out.push_back(a.shifted(k));
  return BiPoly<K>(std::move(out));
}

/// Applies a coefficient map K -> L.
template <class L, class K, class Fn>
BiPoly<L> bi_map(const BiPoly<K>& f, Fn&& fn) {
  std::vector<UPoly<L>> out;
  out.reserve(f.size());
  for (const auto& a : f.coeffs()) {
    std::vector<L> cs;
    cs.reserve(a.size());
    for (const auto& c : a.coeffs()) cs.push_back(fn(c));
    out.emplace_back(std::move(cs));
  }
  return BiPoly<L>(std::move(out));
}

template <class L, class K, class Fn>
UPoly<L> up_map(const UPoly<K>& a, Fn&& fn) {
  std::vector<L> cs;
  cs.reserve(a.size());
  for (const auto& c : a.coeffs()) cs.push_back(fn(c));
  return UPoly<L>(std::move(cs));
}

template <class K>
BiPoly<K> bi_semantic_trim(BiPoly<K> f) {
  std::vector<UPoly<K>> out;
  out.reserve(f.size());
  for (auto c : f.coeffs()) {
    c.semantic_trim();
    out.push_back(std::move(c));
  }
  return BiPoly<K>(std::move(out));
}

/// Content with respect to v: monic gcd of the coefficients in K[u].
template <class K>
UPoly<K> bi_content(const BiPoly<K>& f) {
  UPoly<K> g;
  for (const auto& c : f.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

template <class K>
BiPoly<K> bi_primitive(const BiPoly<K>& f) {
  if (f.is_zero()) return f;
  UPoly<K> c = bi_content(f);
  if (c.degree() == 0 && c.lc() == K(1)) return f;
  return divexact_coeffs(f, c);
}

/// Scales so that the leading coefficient (in v, then u) is 1.
template <class K>
BiPoly<K> bi_normalize(const BiPoly<K>& f) {
  if (f.is_zero()) return f;
  return bi_scale(f, K(1) / f.lc().lc());
}

template <class K>
BiPoly<K> bi_divexact(const BiPoly<K>& a, const BiPoly<K>& b) {
  return ring_divexact(a, b);
}

/// gcd in K[u, v] by content splitting and a primitive remainder sequence.
/// Normalized by bi_normalize; zero only when both inputs are zero.
template <class K>
BiPoly<K> bi_gcd(const BiPoly<K>& a0, const BiPoly<K>& b0) {
  if (a0.is_zero()) return bi_normalize(b0);
  if (b0.is_zero()) return bi_normalize(a0);
  UPoly<K> c = gcd(bi_content(a0), bi_content(b0));
  BiPoly<K> a = bi_primitive(a0), b = bi_primitive(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (b.degree() > 0) {
    BiPoly<K> r = prem(a, b);
    a = std::move(b);
    if (r.is_zero()) {
      b = BiPoly<K>();
      break;
    }
    b = bi_primitive(r);
  }
  BiPoly<K> g = (b.is_zero() ? a : BiPoly<K>(UPoly<K>(K(1))));
  if (g.degree() == 0) g = BiPoly<K>(UPoly<K>(K(1)));
  return bi_normalize(BiPoly<K>(c) * g);
}

/// Converts a polynomial in which only variables iu, iv occur.
template <class K>
BiPoly<K> bipoly_from(const MPoly& f, size_t iu, size_t iv) {
  std::map<int, std::map<int, Rational>> grid;
  for (const auto& [e, c] : f.terms()) {
    for (size_t k = 0; k < e.size(); ++k)
      if (k != iu && k != iv && e[k] != 0) throw std::logic_error("bipoly_from: extra variable present");
    grid[e.empty() ? 0 : e[iv]][e.empty() ? 0 : e[iu]] += c;
  }
  BiPoly<K> out;
  for (const auto& [j, row] : grid) {
    UPoly<K> a;
    for (const auto& [i, c] : row) a += UPoly<K>::monomial(lift<K>(c), i);
    out += BiPoly<K>::monomial(a, j);
  }
  return out;
}

/// Back to a sparse polynomial over (names[0] = u, names[1] = v).
inline MPoly bipoly_to_mpoly(const BiPoly<Rational>& f, const std::vector<std::string>& names) {
  MPoly out(names);
  for (size_t j = 0; j < f.size(); ++j)
    for (size_t i = 0; i < f[j].size(); ++i) out.add_term({static_cast<int>(i), static_cast<int>(j)}, f[j][i]);
  return out;
}

template <class K>
std::string bipoly_to_string(const BiPoly<K>& f, const std::string& un = "u", const std::string& vn = "v") {
  if (f.is_zero()) return "0";
  std::string out;
  for (size_t j = f.size(); j-- > 0;) {
    for (size_t i = f[j].size(); i-- > 0;) {
      const K& c = f[j][i];
      if (quick_zero(c)) continue;
      std::string mono;
      if (i > 0) mono = un + (i > 1 ? "^" + std::to_string(i) : "");
      if (j > 0) mono += (mono.empty() ? "" : "*") + vn + (j > 1 ? "^" + std::to_string(j) : "");
      std::string cs = detail::str(c);
      bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      if (compound) cs = "(" + cs + ")";
      bool neg = cs[0] == '-';
      if (neg) cs.erase(0, 1);
      std::string term = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
      if (out.empty())
        out = (neg ? "-" : "") + term;
      else
        out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

/// Translate of the homogeneous ternary F to the affine chart where the
/// coordinate `chart` equals 1, centered at the point whose remaining
/// coordinates (in increasing index order) are c0, c1.  Local variables are
/// u = remaining coordinate with lower index, v = the other.
template <class K>
BiPoly<K> chart_translate(const MPoly& F, int chart, const K& c0, const K& c1) {
  if (F.nvars() != 3) throw std::logic_error("chart_translate: ternary form expected");
  size_t iu = chart == 0 ? 1 : 0;
  size_t iv = chart == 2 ? 1 : 2;
  std::map<int, UPoly<K>> upow;
  std::map<int, UPoly<K>> vpow;
  UPoly<K> lu(std::vector<K>{c0, K(1)});
  UPoly<K> lv(std::vector<K>{c1, K(1)});
  auto get = [](std::map<int, UPoly<K>>& cache, const UPoly<K>& base, int k) -> const UPoly<K>& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, base.pow(static_cast<unsigned>(k))).first;
    return it->second;
  };
  BiPoly<K> out;
  for (const auto& [e, c] : F.terms()) {
    const UPoly<K>& a = get(upow, lu, e[iu]);
    const UPoly<K>& b = get(vpow, lv, e[iv]);
    K cc = lift<K>(c);
    std::vector<UPoly<K>> rows;
    rows.reserve(b.size());
    for (size_t j = 0; j < b.size(); ++j) rows.push_back(a.scaled(cc * b[j]));
    out += BiPoly<K>(std::move(rows));
  }
  return out;
}

}  // namespace mero
