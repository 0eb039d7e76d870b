#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "meropencil/pencil.hpp"
#include "meropencil/zeta.hpp"

namespace mero {

/// True for flags that mean a hypothesis of the analysis failed.
bool is_violation(const std::string& flag);

struct LambdaResult {
  long value = 0;
  long route_deformation = 0;
  std::optional<long> route_polar;
  bool consistent = true;
};

/// One component of an axis class over a given value.
struct AxisTerm {
  PointClass point;  // the axis class
  int count = 0;     // points of the class covered by this term, per value
  long mu_value = 0;
  long mu_generic = 0;
  LambdaResult lambda;
  std::optional<ZetaFunction> zeta_relative;
  std::string zeta_error;
};

/// Singular point of the fibre on X off the axis.
struct SingularTerm {
  PointClass point;
  int count = 0;
  long mu = 0;
  std::optional<ZetaFunction> zeta_relative;
  std::string zeta_error;
};

struct ValueRecord {
  ValueClass a;
  std::vector<AxisTerm> axis;
  std::vector<SingularTerm> singular;
  long mu_affine = 0;
  long lambda_total = 0;
  long chi_curve = 0;  // closure of the fibre in the plane
  std::optional<long> chi_curve_independent;
  long chi_fibre = 0;
  long chi_generic = 0;
  long betti_vanishing = 0;
  bool detector_mu = false;
  bool detector_chi = false;
  bool atypical = false;
  std::optional<ZetaFunction> zeta;           // generic fibre around a
  std::optional<ZetaFunction> zeta_relative;  // product of the local factors
  std::optional<long> gamma1;                 // affine inputs only
  std::vector<std::string> flags;
};

struct GammaResult {
  long gamma0 = 0;
  long gamma1_value = 0;
  long gamma1_generic = 0;
  long lambda1 = 0;
  long chi_predicted = 0;  // mu_affine + gamma0 - gamma1
  bool chi_ok = false;
  bool lambda1_ok = false;
};

struct GammaBlock {
  long gamma0 = 0;
  long gamma1_generic = 0;
  std::vector<std::pair<ValueClass, GammaResult>> values;
};

struct PencilReport {
  PencilContext ctx;
  long chi_space = 0;
  long chi_generic_curve = 0;
  long chi_generic_fibre = 0;
  std::optional<long> chi_generic_curve_independent;
  std::vector<ValueRecord> values;  // every candidate, typical ones included
  long balance_lhs = 0;
  long balance_rhs = 0;
  bool balance_ok = false;
  std::optional<GammaBlock> gamma;
  std::vector<std::string> flags;

  /// The atypical values.
  std::vector<ValueClass> atypical_values() const;
  /// Flags that mean a hypothesis of the analysis failed.
  std::vector<std::string> violations() const;
};

/// Full analysis of a candidate or arbitrary value.  An algebraic class may
/// split into several records.
std::vector<ValueRecord> analyze_value(const PencilContext& ctx, const ValueClass& a);

/// Lambda at every axis point for the value a (deformation and polar routes).
std::vector<AxisTerm> lambda_at_axis(const PencilContext& ctx, const ValueClass& a);
/// Singular points of the fibre on X off the axis.
std::vector<SingularTerm> affine_singularities(const PencilContext& ctx, const ValueClass& a);
long affine_mu_sum(const PencilContext& ctx, const ValueClass& a);

/// chi of X, of the generic fibre X_s, and of the fibre X_a.
long euler_space(const PencilContext& ctx);
long euler_generic(const PencilContext& ctx);
long euler_fibre(const PencilContext& ctx, const ValueClass& a);

/// mu_affine + lambda_total at a.
long vanishing_betti(const PencilContext& ctx, const ValueClass& a);

/// Zeta of the generic fibre around a; throws ZetaUnsupported.
ZetaFunction zeta_around_value(const PencilContext& ctx, const ValueClass& a);

/// gamma^1 of an affine polynomial at the value a (rational).
long gamma1(const MPoly& affine, const Rational& a, std::uint64_t seed);
GammaBlock gamma_sequence(const PencilContext& ctx, const std::vector<ValueRecord>& values);

PencilReport build_report(const Pencil& pen, std::uint64_t seed);

}  // namespace mero
