#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "meropencil/rational.hpp"

namespace mero {

/// Sparse multivariate polynomial with rational coefficients over an ordered
/// list of named variables.  Terms are kept in lex-descending order of their
/// exponent vectors; zero coefficients are never stored.
///
/// A polynomial with an empty variable list is a constant and combines with
/// any other polynomial.
class MPoly {
 public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, Rational, std::greater<Exponent>>;

  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MPoly constant(std::vector<std::string> vars, const Rational& c);
  static MPoly variable(std::vector<std::string> vars, size_t i);

  const std::vector<std::string>& vars() const { return vars_; }
  size_t nvars() const { return vars_.size(); }
  /// -1 when absent.
  int var_index(std::string_view name) const;
  const TermMap& terms() const { return terms_; }
  size_t nterms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  /// Total degree, -1 for zero.
  int total_degree() const;
  int degree_in(size_t var) const;
  /// Smallest exponent of var over all terms (0 for zero).
  int min_degree_in(size_t var) const;
  bool is_homogeneous() const;
  /// Leading term in lex order.
  std::pair<Exponent, Rational> leading_term() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly scaled(const Rational& s) const;
  MPoly pow(unsigned e) const;
  MPoly derivative(size_t var) const;
  Rational eval(const std::vector<Rational>& point) const;
  /// Replaces variable `var` by `value` (same variable list).
  MPoly substitute(size_t var, const MPoly& value) const;
  MPoly eval_var(size_t var, const Rational& c) const;
  /// Same polynomial over a renamed or re-indexed variable list.  `map[i]`
  /// gives the new index of old variable i.
  MPoly reindexed(std::vector<std::string> new_vars, const std::vector<size_t>& map) const;
  /// Product of x_i^k.
  MPoly times_monomial(const Exponent& e) const;
  /// Makes the leading coefficient 1 (zero stays zero).
  MPoly monic() const;

  std::string to_string() const;

 private:
  void adopt_vars(const MPoly& o);
  std::vector<std::string> vars_;
  TermMap terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }
inline bool is_structural_zero(const MPoly& p) { return p.is_zero(); }
inline bool quick_zero(const MPoly& p) { return p.is_zero(); }
inline std::string to_string(const MPoly& p) { return p.to_string(); }

/// Exact quotient a / b; throws std::logic_error if b does not divide a.
MPoly divexact(const MPoly& a, const MPoly& b);
inline MPoly exact_quotient(const MPoly& a, const MPoly& b) { return divexact(a, b); }

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  size_t position;
};

/// Grammar: sums and products of integers, variables from `vars`,
/// parenthesized expressions; '^' takes a nonnegative integer literal and
/// '/' only an integer literal.  Juxtaposition is rejected.
MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

}  // namespace mero
