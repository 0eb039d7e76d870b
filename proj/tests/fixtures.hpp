#pragma once

#include <random>
#include <string>
#include <vector>

#include "meropencil/pencil.hpp"

namespace fixtures {

struct GridCell {
  int a, b, p, q;
  long lambda() const { return b + a * p; }
  long mu0() const { return a * a + a * b + b; }
  long mu_generic() const { return a * (q - 1); }
  std::string name() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(p) + "," + std::to_string(q) + ")";
  }
};

inline std::vector<GridCell> grid() {
  std::vector<GridCell> out;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int p = 1; p <= a + b; ++p) out.push_back({a, b, p, a + b + 1 - p});
  return out;
}

inline mero::Pencil example(const GridCell& c, mero::VChoice V = mero::VChoice::Q) {
  std::string P = "x*(z^" + std::to_string(c.a + c.b) + " + x^" + std::to_string(c.a) + "*y^" + std::to_string(c.b) + ")";
  std::string Q = "y^" + std::to_string(c.p) + "*z^" + std::to_string(c.q);
  return mero::make_pencil(P, Q, V);
}

/// Sparse random form of degree d with small integer coefficients.
inline mero::MPoly random_form(std::mt19937_64& gen, int d, int terms) {
  mero::MPoly f(mero::projective_vars());
  for (int t = 0; t < terms; ++t) {
    int i = static_cast<int>(gen() % static_cast<unsigned>(d + 1));
    int j = static_cast<int>(gen() % static_cast<unsigned>(d - i + 1));
    long c = static_cast<long>(gen() % 7) - 3;
    if (c == 0) c = 1;
    f.add_term({i, j, d - i - j}, mero::Rational(c));
  }
  return f;
}

struct RandomPencil {
  mero::Pencil pencil;
  std::string description;
};

/// Pencils of degree 1..4; an affine polynomial every third draw.
inline RandomPencil random_pencil(std::mt19937_64& gen) {
  static const mero::VChoice Vs[] = {mero::VChoice::Q, mero::VChoice::Axis, mero::VChoice::None};
  for (;;) {
    int d = 1 + static_cast<int>(gen() % 4);
    int kind = static_cast<int>(gen() % 3);
    try {
      if (kind == 0) {
        mero::MPoly f = random_form(gen, d, 2 + static_cast<int>(gen() % 3));
        for (int k = 1; k < d; ++k) f += random_form(gen, k, 1);
        mero::MPoly aff = f;
        aff = aff.eval_var(2, mero::Rational(1));
        std::string text = aff.to_string();
        if (aff.total_degree() <= 0) continue;
        // the affine text is over (x, y, z) with z absent; reparse over (x, y)
        return {mero::from_affine(text), "affine " + text};
      }
      mero::MPoly P = random_form(gen, d, 2 + static_cast<int>(gen() % 3));
      mero::MPoly Q = random_form(gen, d, 1 + static_cast<int>(gen() % 3));
      if (P.is_zero() || Q.is_zero()) continue;
      mero::VChoice V = Vs[gen() % 3];
      auto pen = mero::make_pencil(P, Q, V);
      if (pen.common_factor_removed) continue;
      return {pen, "P = " + P.to_string() + ", Q = " + Q.to_string() + ", V = " + mero::to_string(V)};
    } catch (const mero::InputError&) {
    }
  }
}

}  // namespace fixtures
