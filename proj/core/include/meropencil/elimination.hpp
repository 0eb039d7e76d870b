#pragma once

#include <string>
#include <utility>
#include <vector>

#include "meropencil/bipoly.hpp"
#include "meropencil/ext.hpp"
#include "meropencil/mpoly.hpp"
#include "meropencil/upoly.hpp"

namespace mero {

/// Res_v(f, g) for bivariate polynomials, a polynomial in u.  Same sign
/// convention as resultant_prs.
template <class K>
UPoly<K> resultant_v(const BiPoly<K>& f, const BiPoly<K>& g) {
  return resultant_prs(f, g);
}

/// Resultant of sparse polynomials with respect to `var` (subresultant PRS
/// with coefficients in the remaining variables).  Sylvester-determinant
/// sign convention with the rows of f first.
MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var);

/// f / gcd(f, df/dvar), normalized to leading coefficient 1.  Supports
/// polynomials in at most two variables.
MPoly squarefree_part(const MPoly& f, const std::string& var);

/// View of a polynomial in one variable as a dense univariate polynomial.
UPoly<Rational> to_univariate(const MPoly& f);
MPoly from_univariate(const UPoly<Rational>& f, const std::string& var);

struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity), ascending
  UPoly<Rational> residual;                     // monic, no rational roots
};

/// Exact rational roots with multiplicity.
RationalRoots rational_roots(const UPoly<Rational>& f);

/// Clears denominators and content: the primitive integer multiple of f with
/// positive leading coefficient.
UPoly<Rational> primitive_integer(const UPoly<Rational>& f);

/// Pairwise coprime monic squarefree polynomials whose products generate the
/// same multiplicative structure as the (squarefree) inputs: every input is
/// a product of a subset of the output.
template <class K>
std::vector<UPoly<K>> gcd_free_basis(const std::vector<UPoly<K>>& in) {
  std::vector<UPoly<K>> basis;
  for (const auto& p0 : in) {
    if (p0.degree() <= 0) continue;
    UPoly<K> p = squarefree_part(p0);
    std::vector<UPoly<K>> next;
    for (auto& b : basis) {
      if (p.degree() <= 0) {
        next.push_back(b);
        continue;
      }
      UPoly<K> g = gcd(b, p);
      if (g.degree() <= 0) {
        next.push_back(b);
        continue;
      }
      UPoly<K> b1 = monic(exact_div(b, g));
      p = monic(exact_div(p, g));
      next.push_back(g);
      if (b1.degree() > 0) next.push_back(b1);
      // p may still share factors with g; keep splitting
      for (;;) {
        UPoly<K> h = gcd(p, g);
        if (h.degree() <= 0) break;
        p = monic(exact_div(p, h));
      }
    }
    if (p.degree() > 0) next.push_back(monic(p));
    basis = std::move(next);
  }
  return basis;
}

/// Res_t(m(t), c(t, s)) for c given as a polynomial in s with coefficients
/// in K[t]/(m): the norm of c down to K[s].
template <class K>
UPoly<K> norm_poly(const UPoly<K>& m, const UPoly<Ext<K>>& c) {
  // outer variable t, inner s
  std::vector<UPoly<K>> rows;
  for (size_t j = 0; j < c.size(); ++j) {
    const UPoly<K>& cj = c[j].rep();
    if (rows.size() < cj.size()) rows.resize(cj.size());
    for (size_t i = 0; i < cj.size(); ++i) rows[i] += UPoly<K>::monomial(cj[i], static_cast<int>(j));
  }
  BiPoly<K> C(std::move(rows));
  std::vector<UPoly<K>> mrows;
  for (const auto& a : m.coeffs()) mrows.emplace_back(a);
  BiPoly<K> M(std::move(mrows));
  return resultant_prs(M, C);
}

}  // namespace mero
