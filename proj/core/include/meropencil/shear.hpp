#pragma once

#include <cstdint>
#include <vector>

#include "meropencil/mpoly.hpp"

namespace mero {

/// Invertible integer substitution x_i -> sum_j matrix[i][j] x_j with
/// determinant 1, and its inverse.
struct ShearRecord {
  std::vector<std::vector<long>> matrix;
  std::vector<std::vector<long>> inverse;
  std::uint64_t seed = 0;
};

/// Deterministic unimodular matrix with small entries drawn from `seed`.
ShearRecord make_shear(size_t n, std::uint64_t seed);

/// Applies the substitution recorded in `matrix`.
MPoly substitute_linear(const MPoly& f, const std::vector<std::vector<long>>& matrix);

std::pair<MPoly, ShearRecord> apply_shear(const MPoly& f, std::uint64_t seed);

/// k small nonzero integers derived from `seed` (used for one-parameter
/// shears such as x -> x + c*y).
std::vector<long> shear_constants(std::uint64_t seed, size_t k);

}  // namespace mero
