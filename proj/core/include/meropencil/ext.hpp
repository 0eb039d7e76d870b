#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "meropencil/rational.hpp"
#include "meropencil/upoly.hpp"

namespace mero {

/// K[t]/(m) with m monic and squarefree.  Behaves as a product of fields;
/// a zero divisor discovered during a computation raises ExtSplit.
template <class K>
struct ExtContext {
  UPoly<K> modulus;
  std::string var = "t";
};

template <class K>
using ExtContextPtr = std::shared_ptr<const ExtContext<K>>;

/// Thrown when a zero divisor is met.  `factor` is a monic proper divisor of
/// the modulus of `ctx`.
template <class K>
struct ExtSplit {
  const ExtContext<K>* ctx;
  UPoly<K> factor;
};

namespace detail {

constexpr std::uint64_t kModPrime = 2305843009213693951ULL;  // 2^61 - 1

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kModPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
  std::uint64_t s = lo + hi;
  return s >= kModPrime ? s - kModPrime : s;
}
inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}
inline bool reduce_mod(const Rational& q, std::uint64_t& out) {
  mpz_class n = q.num() % static_cast<unsigned long>(kModPrime);
  mpz_class d = q.den() % static_cast<unsigned long>(kModPrime);
  if (n < 0) n += static_cast<unsigned long>(kModPrime);
  std::uint64_t dn = d.get_ui();
  if (dn == 0) return false;
  out = mulmod(n.get_ui(), powmod(dn, kModPrime - 2));
  return true;
}

/// True only when gcd(a, m) = 1 can be certified modulo a prime.
inline bool coprime_mod_p(const UPoly<Rational>& a, const UPoly<Rational>& m) {
  auto to_mod = [](const UPoly<Rational>& p, std::vector<std::uint64_t>& v) {
    v.clear();
    for (const auto& c : p.coeffs()) {
      std::uint64_t x;
      if (!reduce_mod(c, x)) return false;
      v.push_back(x);
    }
    while (!v.empty() && v.back() == 0) v.pop_back();
    return true;
  };
  std::vector<std::uint64_t> x, y;
  if (!to_mod(a, x) || !to_mod(m, y)) return false;
  if (y.size() != m.size()) return false;
  while (!y.empty()) {
    // x <- x mod y
    std::uint64_t inv = powmod(y.back(), kModPrime - 2);
    while (x.size() >= y.size()) {
      std::uint64_t f = mulmod(x.back(), inv);
      size_t off = x.size() - y.size();
      for (size_t j = 0; j < y.size(); ++j) {
        std::uint64_t t = mulmod(f, y[j]);
        x[off + j] = x[off + j] >= t ? x[off + j] - t : x[off + j] + kModPrime - t;
      }
      while (!x.empty() && x.back() == 0) x.pop_back();
    }
    std::swap(x, y);
  }
  return x.size() == 1;
}

}  // namespace detail

template <class K>
class Ext {
 public:
  using base_field = K;

  Ext() = default;
  Ext(long v) : r_(K(v)) {}  // NOLINT(google-explicit-constructor)
  Ext(int v) : r_(K(static_cast<long>(v))) {}  // NOLINT
  Ext(const K& c) : r_(c) {}  // NOLINT
  Ext(ExtContextPtr<K> ctx, UPoly<K> r) : ctx_(std::move(ctx)), r_(std::move(r)) { reduce(); }

  static Ext gen(const ExtContextPtr<K>& ctx) { return Ext(ctx, UPoly<K>::variable()); }

  const ExtContextPtr<K>& ctx() const { return ctx_; }
  const UPoly<K>& rep() const { return r_; }
  bool is_constant() const { return r_.degree() <= 0; }
  K constant_value() const { return r_.coeff(0); }

  Ext operator-() const { return Ext(ctx_, -r_, 0); }
  Ext& operator+=(const Ext& o) {
    adopt(o);
    r_ += o.r_;
    return *this;
  }
  Ext& operator-=(const Ext& o) {
    adopt(o);
    r_ -= o.r_;
    return *this;
  }
  Ext& operator*=(const Ext& o) {
    adopt(o);
    if (r_.degree() <= 0 || o.r_.degree() <= 0) {
      if (o.r_.degree() <= 0)
        r_ = r_.scaled(o.r_.coeff(0));
      else
        r_ = o.r_.scaled(r_.coeff(0));
      return *this;
    }
    r_ = r_ * o.r_;
    reduce();
    return *this;
  }
  Ext& operator/=(const Ext& o) {
    adopt(o);
    return *this *= o.inverse_in(ctx_);
  }
  friend Ext operator+(Ext a, const Ext& b) { return a += b; }
  friend Ext operator-(Ext a, const Ext& b) { return a -= b; }
  friend Ext operator*(Ext a, const Ext& b) { return a *= b; }
  friend Ext operator/(Ext a, const Ext& b) { return a /= b; }

  /// Semantic comparison; may raise a split.
  friend bool operator==(const Ext& a, const Ext& b) { return (a - b).is_zero_semantic(); }

  Ext inverse() const { return inverse_in(ctx_); }

  bool is_zero_semantic() const {
    if (r_.is_zero()) return true;
    if (r_.degree() == 0 || !ctx_) {
      if (r_.degree() > 0) throw std::logic_error("Ext: non-constant element without context");
      return is_zero(r_.coeff(0));
    }
    if constexpr (std::is_same_v<K, Rational>) {
      if (detail::coprime_mod_p(r_, ctx_->modulus)) return false;
    }
    UPoly<K> g = gcd(r_, ctx_->modulus);
    if (g.degree() == 0) return false;
    throw ExtSplit<K>{ctx_.get(), g};
  }

  std::string to_string() const {
    if (r_.degree() <= 0) return detail::str(r_.coeff(0));
    return r_.to_string(ctx_ ? ctx_->var : "t");
  }

 private:
  Ext(ExtContextPtr<K> ctx, UPoly<K> r, int) : ctx_(std::move(ctx)), r_(std::move(r)) {}

  void adopt(const Ext& o) {
    if (!o.ctx_) return;
    if (!ctx_) {
      ctx_ = o.ctx_;
      return;
    }
    if (ctx_ != o.ctx_) throw std::logic_error("Ext: mixing different extension contexts");
  }
  void reduce() {
    if (ctx_ && r_.degree() >= ctx_->modulus.degree()) r_ = divmod(r_, ctx_->modulus).second;
  }
  Ext inverse_in(const ExtContextPtr<K>& ctx) const {
    if (r_.is_zero()) throw std::domain_error("Ext: division by zero");
    if (r_.degree() == 0) return Ext(ctx, UPoly<K>(K(1) / r_.coeff(0)), 0);
    if (!ctx) throw std::logic_error("Ext: non-constant element without context");
    auto x = xgcd(r_, ctx->modulus);
    if (x.g.degree() > 0) throw ExtSplit<K>{ctx.get(), x.g};
    return Ext(ctx, x.s, 0);
  }

  ExtContextPtr<K> ctx_;
  UPoly<K> r_;
};

template <class K>
bool is_zero(const Ext<K>& a) {
  return a.is_zero_semantic();
}
template <class K>
bool is_structural_zero(const Ext<K>& a) {
  return a.rep().is_zero();
}
template <class K>
bool quick_zero(const Ext<K>& a) {
  return a.rep().is_zero();
}
template <class K>
std::string to_string(const Ext<K>& a) {
  return a.to_string();
}
template <class K>
Ext<K> exact_quotient(const Ext<K>& a, const Ext<K>& b) {
  return a / b;
}

template <class K>
ExtContextPtr<K> make_ext_context(UPoly<K> modulus, std::string var = "t") {
  auto c = std::make_shared<ExtContext<K>>();
  c->modulus = monic(modulus);
  c->var = std::move(var);
  return c;
}

/// Runs fn(ctx) over K[t]/(m), splitting m whenever fn hits a zero divisor of
/// this very context, until every component completes.  Returns
/// (component modulus, result) pairs in a deterministic order.
template <class K, class Fn>
auto split_run(const UPoly<K>& m, Fn&& fn, const std::string& var = "t")
    -> std::vector<std::pair<UPoly<K>, decltype(fn(std::declval<ExtContextPtr<K>>()))>> {
  using Result = decltype(fn(std::declval<ExtContextPtr<K>>()));
  std::vector<std::pair<UPoly<K>, Result>> out;
  std::deque<UPoly<K>> work{monic(m)};
  while (!work.empty()) {
    UPoly<K> cur = std::move(work.front());
    work.pop_front();
    auto ctx = make_ext_context(cur, var);
    try {
      out.emplace_back(cur, fn(ctx));
    } catch (const ExtSplit<K>& s) {
      if (s.ctx != ctx.get()) throw;
      UPoly<K> g = monic(s.factor);
      UPoly<K> h = monic(exact_div(cur, g));
      work.push_front(std::move(h));
      work.push_front(std::move(g));
    }
  }
  return out;
}

}  // namespace mero
