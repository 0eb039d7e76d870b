#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "meropencil/upoly.hpp"

namespace mero {

/// Collects the numerators of every element of K(s) that a computation
/// decided to be nonzero.  Outside the roots of these polynomials the
/// computation specializes verbatim to s = a.
template <class K>
struct CertificateLog {
  std::vector<UPoly<K>> polys;

  void add(const UPoly<K>& p) {
    if (p.degree() <= 0) return;
    UPoly<K> m = monic(p);
    for (const auto& q : polys)
      if (q == m) return;
    polys.push_back(std::move(m));
  }
};

namespace detail {
template <class K>
CertificateLog<K>*& active_log() {
  thread_local CertificateLog<K>* log = nullptr;
  return log;
}
}  // namespace detail

/// RAII activation of a certificate log for the current thread.
template <class K>
class CertificateScope {
 public:
  explicit CertificateScope(CertificateLog<K>& log) : prev_(detail::active_log<K>()) {
    detail::active_log<K>() = &log;
  }
  ~CertificateScope() { detail::active_log<K>() = prev_; }
  CertificateScope(const CertificateScope&) = delete;
  CertificateScope& operator=(const CertificateScope&) = delete;

 private:
  CertificateLog<K>* prev_;
};

/// Element of K(s): num/den with den monic and gcd(num, den) = 1.
template <class K>
class RatFunc {
 public:
  using base_field = K;

  RatFunc() : den_(K(1)) {}
  RatFunc(long v) : num_(K(v)), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(int v) : num_(K(static_cast<long>(v))), den_(K(1)) {}  // NOLINT
  RatFunc(const K& c) : num_(c), den_(K(1)) {}  // NOLINT
  explicit RatFunc(UPoly<K> p) : num_(std::move(p)), den_(K(1)) {}
  RatFunc(UPoly<K> n, UPoly<K> d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  static RatFunc param() { return RatFunc(UPoly<K>::variable()); }

  const UPoly<K>& num() const { return num_; }
  const UPoly<K>& den() const { return den_; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

  RatFunc operator-() const { return RatFunc(-num_, den_, 0); }
  RatFunc& operator+=(const RatFunc& o) {
    if (den_ == o.den_) return *this = RatFunc(num_ + o.num_, den_);
    return *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
  RatFunc& operator*=(const RatFunc& o) {
    if (den_.degree() == 0 && o.den_.degree() == 0) return *this = RatFunc(num_ * o.num_, den_, 0);
    return *this = RatFunc(num_ * o.num_, den_ * o.den_);
  }
  RatFunc& operator/=(const RatFunc& o) {
    if (o.num_.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return *this = RatFunc(num_ * o.den_, den_ * o.num_);
  }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Zero test that records a certificate when the answer is "nonzero".
  bool decide_zero() const {
    if (num_.is_zero()) return true;
    if (auto* log = detail::active_log<K>()) log->add(num_);
    return false;
  }

  /// Value at s = a; throws std::domain_error at a pole.
  K eval(const K& a) const {
    K d = den_.eval(a);
    if (is_zero(d)) throw std::domain_error("RatFunc: pole");
    return num_.eval(a) / d;
  }

  std::string to_string() const {
    if (den_.degree() == 0) return num_.to_string("s");
    return "(" + num_.to_string("s") + ")/(" + den_.to_string("s") + ")";
  }

 private:
  RatFunc(UPoly<K> n, UPoly<K> d, int) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = UPoly<K>(K(1));
      return;
    }
    if (den_.degree() > 0) {
      UPoly<K> g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
      }
    }
    K l = den_.lc();
    if (!(l == K(1))) {
      K inv = K(1) / l;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }
  UPoly<K> num_;
  UPoly<K> den_;
};

template <class K>
bool is_zero(const RatFunc<K>& a) {
  return a.decide_zero();
}
template <class K>
bool is_structural_zero(const RatFunc<K>& a) {
  return a.decide_zero();
}
template <class K>
bool quick_zero(const RatFunc<K>& a) {
  return a.num().is_zero();
}
template <class K>
std::string to_string(const RatFunc<K>& a) {
  return a.to_string();
}
template <class K>
RatFunc<K> exact_quotient(const RatFunc<K>& a, const RatFunc<K>& b) {
  return a / b;
}

}  // namespace mero
