#pragma once

#include <cassert>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meropencil/rational.hpp"

namespace mero {

namespace detail {
// Unqualified calls so that overloads declared after UPoly are found by ADL
// (inside the class the member functions would hide them).
template <class T>
bool sem_zero(const T& x) {
  return is_zero(x);
}
template <class T>
std::string str(const T& x) {
  return to_string(x);
}
}  // namespace detail

/// Dense univariate polynomial over a commutative ring R, coefficients stored
/// from the constant term upward.  The representation is trimmed
/// structurally; over rings with zero divisors (dynamic extensions) use
/// semantic_trim() before relying on the degree.
///
/// R must be constructible from `long` and provide the free functions
/// is_zero / is_structural_zero / quick_zero / to_string found by ADL.
/// quick_zero is a side-effect free test used only where skipping a zero
/// term cannot change the result.
template <class R>
class UPoly {
 public:
  using coeff_type = R;

  UPoly() = default;
  explicit UPoly(long v) : UPoly(R(v)) {}
  explicit UPoly(R c) {
    c_.push_back(std::move(c));
    trim();
  }
  explicit UPoly(std::vector<R> c) : c_(std::move(c)) { trim(); }

  static UPoly monomial(R c, int k) {
    std::vector<R> v(static_cast<size_t>(k) + 1, R(0));
    v[static_cast<size_t>(k)] = std::move(c);
    return UPoly(std::move(v));
  }
  static UPoly variable() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  size_t size() const { return c_.size(); }
  const R& operator[](size_t i) const { return c_[i]; }
  R coeff(int i) const {
    return (i >= 0 && static_cast<size_t>(i) < c_.size()) ? c_[static_cast<size_t>(i)] : R(0);
  }
  const R& lc() const {
    assert(!c_.empty());
    return c_.back();
  }
  const std::vector<R>& coeffs() const { return c_; }

  void set_coeff(int i, R v) {
    if (static_cast<size_t>(i) >= c_.size()) c_.resize(static_cast<size_t>(i) + 1, R(0));
    c_[static_cast<size_t>(i)] = std::move(v);
    trim();
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UPoly();
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (quick_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  UPoly scaled(const R& s) const {
    std::vector<R> out = c_;
    for (auto& c : out) c *= s;
    return UPoly(std::move(out));
  }
  /// Multiplication by x^k.
  UPoly shifted(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<R> out(static_cast<size_t>(k), R(0));
    out.insert(out.end(), c_.begin(), c_.end());
    return UPoly(std::move(out));
  }
  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<R> out;
    out.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out.push_back(R(static_cast<long>(i)) * c_[i]);
    return UPoly(std::move(out));
  }
  R eval(const R& x) const {
    R acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  /// Horner evaluation in an algebra T over R (T must accept T*T and T+R).
  template <class T>
  T eval_in(const T& x, const T& zero) const {
    T acc = zero;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
    return acc;
  }
  UPoly pow(unsigned e) const {
    UPoly result(R(1)), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  /// Drops leading coefficients that are zero in every component.  Over
  /// dynamic extensions this may raise a split.
  void semantic_trim() {
    while (!c_.empty() && detail::sem_zero(c_.back())) c_.pop_back();
  }

  /// Lowest index with a semantically nonzero coefficient, -1 for zero.
  int order() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!detail::sem_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

  std::string to_string(std::string_view var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (quick_zero(c_[i])) continue;
      std::string cs = detail::str(c_[i]);
      bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      if (compound) cs = "(" + cs + ")";
      if (!out.empty()) {
        if (cs[0] == '-') {
          out += " - ";
          cs.erase(0, 1);
        } else {
          out += " + ";
        }
      }
      if (i == 0) {
        out += cs;
        continue;
      }
      if (cs == "1") cs.clear();
      else if (cs == "-1") cs = "-";
      else cs += "*";
      out += cs;
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && is_structural_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
bool quick_zero(const UPoly<R>& p) {
  return p.is_zero();
}

template <class R>
bool is_structural_zero(const UPoly<R>& p) {
  return p.is_zero();
}

/// Zero in every component of the coefficient ring.  May raise a split when
/// a coefficient is a zero divisor.
template <class R>
bool is_zero(const UPoly<R>& p) {
  for (const auto& c : p.coeffs())
    if (!is_zero(c)) return false;
  return true;
}

template <class R>
std::string to_string(const UPoly<R>& p) {
  return p.to_string("x");
}

// ---------------------------------------------------------------------------
// Field algorithms.  R is a field (possibly with dynamic zero-divisor splits).

template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  int db = b.degree();
  if (a.degree() < db) return {UPoly<K>(), a};
  K inv = K(1) / b.lc();
  std::vector<K> r = a.coeffs();
  std::vector<K> q(static_cast<size_t>(a.degree() - db + 1), K(0));
  for (int i = a.degree(); i >= db; --i) {
    const K& top = r[static_cast<size_t>(i)];
    if (quick_zero(top)) continue;
    K f = top * inv;
    for (int j = 0; j < db; ++j) r[static_cast<size_t>(i - db + j)] -= f * b[static_cast<size_t>(j)];
    r[static_cast<size_t>(i)] = K(0);
    q[static_cast<size_t>(i - db)] = std::move(f);
  }
  r.resize(static_cast<size_t>(db));
  return {UPoly<K>(std::move(q)), UPoly<K>(std::move(r))};
}

template <class K>
UPoly<K> operator%(const UPoly<K>& a, const UPoly<K>& b) {
  return divmod(a, b).second;
}

template <class K>
UPoly<K> monic(const UPoly<K>& a) {
  if (a.is_zero()) return a;
  return a.scaled(K(1) / a.lc());
}

/// Quotient of an exact division; throws std::logic_error when b does not
/// divide a.
template <class K>
UPoly<K> exact_div(const UPoly<K>& a, const UPoly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

/// Monic gcd (zero when both inputs are zero).
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class K>
struct XgcdResult {
  UPoly<K> g, s, t;  // s*a + t*b = g, g monic
};

template <class K>
XgcdResult<K> xgcd(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r0 = a, r1 = b;
  UPoly<K> s0(K(1)), s1, t0, t1(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<K> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly<K> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = K(1) / r0.lc();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// f / gcd(f, f'), monic.
template <class K>
UPoly<K> squarefree_part(const UPoly<K>& f) {
  if (f.degree() <= 0) return f.is_zero() ? f : UPoly<K>(K(1));
  return monic(exact_div(f, gcd(f, f.derivative())));
}

/// Yun's algorithm: returns factors a_1, a_2, ... with f = c * prod a_i^i,
/// each a_i squarefree and pairwise coprime.  Index 0 is unused (constant).
template <class K>
std::vector<UPoly<K>> squarefree_decomposition(const UPoly<K>& f) {
  std::vector<UPoly<K>> out(1, UPoly<K>(K(1)));
  if (f.degree() <= 0) return out;
  UPoly<K> fp = f.derivative();
  UPoly<K> a0 = gcd(f, fp);
  UPoly<K> b = exact_div(f, a0);
  UPoly<K> c = exact_div(fp, a0);
  UPoly<K> d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly<K> a = gcd(b, d);
    out.push_back(monic(a));
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  return out;
}

/// a(b(x)).
template <class K>
UPoly<K> compose(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> acc;
  for (size_t i = a.size(); i-- > 0;) acc = acc * b + UPoly<K>(a[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Ring algorithms (R an integral domain with exact division).

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
template <class R>
UPoly<R> prem(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.is_zero()) throw std::domain_error("prem by zero");
  int db = b.degree();
  if (a.degree() < db) return a;
  const R& l = b.lc();
  std::vector<R> r = a.coeffs();
  int steps = a.degree() - db + 1;
  int top = a.degree();
  for (; top >= db; --top) {
    R t = r[static_cast<size_t>(top)];
    for (auto& c : r) c *= l;
    if (!quick_zero(t)) {
      for (int j = 0; j < db; ++j) r[static_cast<size_t>(top - db + j)] -= t * b[static_cast<size_t>(j)];
    }
    r[static_cast<size_t>(top)] = R(0);
    --steps;
  }
  (void)steps;
  r.resize(static_cast<size_t>(db));
  return UPoly<R>(std::move(r));
}

/// Coefficient-wise exact division by a ring element.
template <class R>
UPoly<R> divexact_coeffs(const UPoly<R>& a, const R& d) {
  std::vector<R> out;
  out.reserve(a.size());
  for (const auto& c : a.coeffs()) out.push_back(exact_quotient(c, d));
  return UPoly<R>(std::move(out));
}

template <class K>
UPoly<K> exact_quotient(const UPoly<K>& a, const UPoly<K>& b) {
  return exact_div(a, b);
}

/// Exact division over a ring whose coefficients support exact_quotient.
/// Throws std::logic_error when b does not divide a.
template <class R>
UPoly<R> ring_divexact(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.is_zero()) throw std::domain_error("ring_divexact by zero");
  if (a.is_zero()) return a;
  int db = b.degree();
  if (a.degree() < db) throw std::logic_error("ring_divexact: not divisible");
  std::vector<R> r = a.coeffs();
  std::vector<R> q(static_cast<size_t>(a.degree() - db + 1), R(0));
  for (int i = a.degree(); i >= db; --i) {
    if (quick_zero(r[static_cast<size_t>(i)])) continue;
    R f = exact_quotient(r[static_cast<size_t>(i)], b.lc());
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= f * b[static_cast<size_t>(j)];
    q[static_cast<size_t>(i - db)] = std::move(f);
  }
  for (const auto& c : r)
    if (!quick_zero(c)) throw std::logic_error("ring_divexact: not divisible");
  return UPoly<R>(std::move(q));
}

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

template <class R>
R ring_pow(const R& base, unsigned e) {
  R result(1), b = base;
  while (e) {
    if (e & 1u) result = result * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return result;
}

/// Resultant by the subresultant PRS.  Sign convention: the determinant of
/// the Sylvester matrix with the rows of `a` first, so that for monic a,
/// res(a, b) = prod over roots r of a of b(r).
template <class R>
R resultant_prs(UPoly<R> a, UPoly<R> b) {
  if (a.is_zero() || b.is_zero()) return R(0);
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -1;
  }
  if (b.degree() == 0) {
    R r = ring_pow(b.lc(), static_cast<unsigned>(a.degree()));
    return s < 0 ? -r : r;
  }
  R g(1), h(1);
  while (b.degree() > 0) {
    int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    UPoly<R> r = prem(a, b);
    if (r.is_zero()) return R(0);
    a = std::move(b);
    b = divexact_coeffs(r, g * ring_pow(h, static_cast<unsigned>(delta)));
    g = a.lc();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_quotient(ring_pow(g, static_cast<unsigned>(delta)), ring_pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  int da = a.degree();
  R out = da == 0 ? R(1)
                  : (da == 1 ? b.lc()
                             : exact_quotient(ring_pow(b.lc(), static_cast<unsigned>(da)),
                                              ring_pow(h, static_cast<unsigned>(da - 1))));
  return s < 0 ? -out : out;
}

}  // namespace mero
