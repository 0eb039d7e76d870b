#include "meropencil/zeta.hpp"

namespace mero {

ZetaFunction ZetaFunction::factor(int k, long e) {
  if (k < 1) throw std::invalid_argument("zeta factor index must be positive");
  ZetaFunction z;
  if (e != 0) z.f_[k] = e;
  return z;
}

ZetaFunction& ZetaFunction::operator*=(const ZetaFunction& o) {
  for (const auto& [k, e] : o.f_) {
    long& x = f_[k];
    x += e;
    if (x == 0) f_.erase(k);
  }
  return *this;
}

ZetaFunction ZetaFunction::inverse() const { return pow(-1); }

ZetaFunction ZetaFunction::pow(long e) const {
  ZetaFunction z;
  if (e == 0) return z;
  for (const auto& [k, x] : f_) z.f_[k] = x * e;
  return z;
}

long ZetaFunction::net_degree() const {
  long d = 0;
  for (const auto& [k, e] : f_) d += static_cast<long>(k) * e;
  return d;
}

std::pair<UPoly<Rational>, UPoly<Rational>> ZetaFunction::as_fraction() const {
  UPoly<Rational> num(1L), den(1L);
  for (const auto& [k, e] : f_) {
    UPoly<Rational> b = UPoly<Rational>(1L) - UPoly<Rational>::monomial(Rational(1), k);
    if (e > 0)
      num *= b.pow(static_cast<unsigned>(e));
    else
      den *= b.pow(static_cast<unsigned>(-e));
  }
  return {num, den};
}

std::string ZetaFunction::to_string() const {
  if (f_.empty()) return "1";
  std::string out;
  for (const auto& [k, e] : f_) {
    if (!out.empty()) out += " * ";
    out += k == 1 ? "(1 - t)" : "(1 - t^" + std::to_string(k) + ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

int moebius(long n) {
  int m = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

}  // namespace

ZetaFunction ZetaFunction::from_lefschetz(const std::vector<long>& L) {
  // L(h^k) = sum_{j | k} s_j and zeta = prod (1 - t^j)^(-s_j / j)
  long N = static_cast<long>(L.size());
  ZetaFunction z;
  for (long j = 1; j <= N; ++j) {
    long s = 0;
    for (long i = 1; i <= j; ++i)
      if (j % i == 0) s += moebius(j / i) * L[static_cast<size_t>(i - 1)];
    if (s == 0) continue;
    if (N % j != 0 || s % j != 0) throw std::logic_error("inconsistent Lefschetz numbers for a periodic map");
    z *= factor(static_cast<int>(j), -s / j);
  }
  return z;
}

}  // namespace mero
