#include "meropencil/shear.hpp"

#include <random>
#include <stdexcept>

namespace mero {

namespace {
std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}
}  // namespace

std::vector<long> shear_constants(std::uint64_t seed, size_t k) {
  std::mt19937_64 gen(splitmix(seed));
  std::vector<long> out;
  while (out.size() < k) {
    long c = static_cast<long>(gen() % 7) - 3;
    if (c != 0) out.push_back(c);
  }
  return out;
}

ShearRecord make_shear(size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("shear needs at least two variables");
  std::mt19937_64 gen(splitmix(seed ^ 0x5EA5ULL));
  auto draw = [&]() { return static_cast<long>(gen() % 7) - 3; };
  std::vector<std::vector<long>> L(n, std::vector<long>(n, 0)), U = L;
  for (size_t i = 0; i < n; ++i) {
    L[i][i] = U[i][i] = 1;
    for (size_t j = 0; j < i; ++j) L[i][j] = draw();
    for (size_t j = i + 1; j < n; ++j) U[i][j] = draw();
  }
  // guarantee a nontrivial shear of the first variable
  if (U[0][1] == 0) U[0][1] = 1;
  auto mul = [n](const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b) {
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  // inverses of unit triangular matrices by forward substitution
  auto inv_lower = [n](const std::vector<std::vector<long>>& a) {
    std::vector<std::vector<long>> r(n, std::vector<long>(n, 0));
    for (size_t c = 0; c < n; ++c) {
      for (size_t i = 0; i < n; ++i) {
        long s = (i == c) ? 1 : 0;
        for (size_t k = 0; k < i; ++k) s -= a[i][k] * r[k][c];
        r[i][c] = s;
      }
    }
    return r;
  };
  auto transpose = [n](const std::vector<std::vector<long>>& a) {
    std::vector<std::vector<long>> r(n, std::vector<long>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) r[i][j] = a[j][i];
    return r;
  };
  ShearRecord rec;
  rec.seed = seed;
  rec.matrix = mul(L, U);
  auto Li = inv_lower(L);
  auto Ui = transpose(inv_lower(transpose(U)));
  rec.inverse = mul(Ui, Li);
  return rec;
}

MPoly substitute_linear(const MPoly& f, const std::vector<std::vector<long>>& m) {
  size_t n = f.nvars();
  if (m.size() != n) throw std::invalid_argument("shear matrix size mismatch");
  std::vector<MPoly> images;
  for (size_t i = 0; i < n; ++i) {
    MPoly li(f.vars());
    for (size_t j = 0; j < n; ++j) {
      if (m[i][j] == 0) continue;
      MPoly::Exponent e(n, 0);
      e[j] = 1;
      li.add_term(e, Rational(m[i][j]));
    }
    images.push_back(li);
  }
  MPoly out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    MPoly t = MPoly::constant(f.vars(), c);
    for (size_t i = 0; i < n; ++i)
      if (e[i]) t *= images[i].pow(static_cast<unsigned>(e[i]));
    out += t;
  }
  return out;
}

std::pair<MPoly, ShearRecord> apply_shear(const MPoly& f, std::uint64_t seed) {
  ShearRecord rec = make_shear(f.nvars(), seed);
  return {substitute_linear(f, rec.matrix), rec};
}

}  // namespace mero
