#pragma once
// Independent reference computations used only by the tests.

#include <complex>
#include <cmath>
#include <optional>
#include <vector>

#include "meropencil/bipoly.hpp"
#include "meropencil/rational.hpp"
#include "meropencil/upoly.hpp"

namespace oracle {

using mero::BiPoly;
using mero::Rational;
using mero::UPoly;

/// Rank of a dense rational matrix by Gaussian elimination.
inline size_t rank(std::vector<std::vector<Rational>> m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Determinant by elimination.
inline Rational det(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  Rational d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Rational f = m[i][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

/// Sylvester determinant with the rows of f first.
inline Rational sylvester_resultant(const UPoly<Rational>& f, const UPoly<Rational>& g) {
  int m = f.degree(), n = g.degree();
  size_t N = static_cast<size_t>(m + n);
  if (N == 0) return Rational(1);
  std::vector<std::vector<Rational>> s(N, std::vector<Rational>(N, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[static_cast<size_t>(i)][static_cast<size_t>(i + m - k)] = f[static_cast<size_t>(k)];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k)
      s[static_cast<size_t>(n + i)][static_cast<size_t>(i + n - k)] = g[static_cast<size_t>(k)];
  return det(s);
}

/// dim of Q[u,v] / ((f, g) + m^N).
inline size_t truncated_colength(const BiPoly<Rational>& f, const BiPoly<Rational>& g, int N) {
  // monomials u^i v^j with i + j < N
  std::vector<std::pair<int, int>> mons;
  for (int d = 0; d < N; ++d)
    for (int i = 0; i <= d; ++i) mons.emplace_back(i, d - i);
  auto index = [&](int i, int j) -> long {
    if (i + j >= N) return -1;
    int d = i + j;
    return static_cast<long>(d * (d + 1) / 2 + (d - j));
  };
  std::vector<std::vector<Rational>> rows;
  for (const auto* h : {&f, &g}) {
    for (auto [a, b] : mons) {
      std::vector<Rational> row(mons.size(), Rational(0));
      bool any = false;
      for (size_t j = 0; j < h->size(); ++j)
        for (size_t i = 0; i < (*h)[j].size(); ++i) {
          const Rational& c = (*h)[j][i];
          if (c.is_zero()) continue;
          long k = index(a + static_cast<int>(i), b + static_cast<int>(j));
          if (k < 0) continue;
          row[static_cast<size_t>(k)] += c;
          any = true;
        }
      if (any) rows.push_back(std::move(row));
    }
  }
  return mons.size() - rank(rows);
}

/// Local intersection number as the length of the local algebra; nullopt
/// when it has not stabilized by `max_n` (treated as infinite).
inline std::optional<size_t> local_length(const BiPoly<Rational>& f, const BiPoly<Rational>& g, int max_n = 16) {
  size_t prev = truncated_colength(f, g, 1);
  for (int N = 2; N <= max_n; ++N) {
    size_t cur = truncated_colength(f, g, N);
    if (cur == prev) return cur;
    prev = cur;
  }
  return std::nullopt;
}

/// Coefficients of prod over eigenvalues e of (1 - e t), rounded to integers.
inline std::vector<long> char_factor(const std::vector<std::complex<double>>& eig) {
  std::vector<std::complex<double>> c{1.0};
  for (const auto& e : eig) {
    std::vector<std::complex<double>> n(c.size() + 1, 0.0);
    for (size_t i = 0; i < c.size(); ++i) {
      n[i] += c[i];
      n[i + 1] -= e * c[i];
    }
    c = std::move(n);
  }
  std::vector<long> out;
  for (const auto& x : c) out.push_back(std::lround(x.real()));
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

/// H_1 eigenvalues of the Brieskorn germ u^p + v^q.
inline std::vector<std::complex<double>> brieskorn_eigenvalues(int p, int q) {
  std::vector<std::complex<double>> out;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (int j = 1; j < p; ++j)
    for (int k = 1; k < q; ++k) out.push_back(std::polar(1.0, two_pi * (double(j) / p + double(k) / q)));
  return out;
}

}  // namespace oracle
