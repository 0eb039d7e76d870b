#include "meropencil/mpoly.hpp"

#include <algorithm>
#include <cctype>

namespace mero {

MPoly::MPoly(long c) {
  if (c != 0) terms_.emplace(Exponent{}, Rational(c));
}

MPoly MPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MPoly p(std::move(vars));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, size_t i) {
  MPoly p(std::move(vars));
  Exponent e(p.nvars(), 0);
  e.at(i) = 1;
  p.add_term(e, Rational(1));
  return p;
}

int MPoly::var_index(std::string_view name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational MPoly::constant_term() const { return coeff(Exponent(vars_.size(), 0)); }

Rational MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  if (e.size() != vars_.size()) throw std::logic_error("MPoly: exponent length mismatch");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

int MPoly::degree_in(size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int MPoly::min_degree_in(size_t var) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

std::pair<MPoly::Exponent, Rational> MPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
  return *terms_.begin();
}

void MPoly::adopt_vars(const MPoly& o) {
  if (vars_ == o.vars_) return;
  if (o.vars_.empty()) {
    if (!o.is_constant()) throw std::logic_error("MPoly: variable list mismatch");
    return;
  }
  if (vars_.empty()) {
    if (!is_constant()) throw std::logic_error("MPoly: variable list mismatch");
    Rational c = terms_.empty() ? Rational(0) : terms_.begin()->second;
    vars_ = o.vars_;
    terms_.clear();
    add_term(Exponent(vars_.size(), 0), c);
    return;
  }
  throw std::logic_error("MPoly: variable list mismatch");
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  adopt_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e.empty() ? Exponent(vars_.size(), 0) : e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  adopt_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e.empty() ? Exponent(vars_.size(), 0) : e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  adopt_vars(o);
  MPoly out(vars_);
  size_t n = vars_.size();
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e(n, 0);
      for (size_t i = 0; i < n; ++i) e[i] = (e1.empty() ? 0 : e1[i]) + (e2.empty() ? 0 : e2[i]);
      out.add_term(e, c1 * c2);
    }
  }
  *this = std::move(out);
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (a.vars_ != b.vars_) {
    if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
    return false;
  }
  return a.terms_ == b.terms_;
}

MPoly MPoly::scaled(const Rational& s) const {
  if (s.is_zero()) return MPoly(vars_);
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(vars_, Rational(1)), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

MPoly MPoly::derivative(size_t var) const {
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    out.add_term(f, c * Rational(static_cast<long>(e[var])));
  }
  return out;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("MPoly::eval: wrong point size");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= point[i].pow(static_cast<unsigned>(e[i]));
    acc += t;
  }
  return acc;
}

MPoly MPoly::substitute(size_t var, const MPoly& value) const {
  std::map<int, MPoly> powers;
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    int k = f[var];
    f[var] = 0;
    MPoly mono(vars_);
    mono.add_term(f, c);
    if (k > 0) {
      auto it = powers.find(k);
      if (it == powers.end()) it = powers.emplace(k, value.pow(static_cast<unsigned>(k))).first;
      mono *= it->second;
    }
    out += mono;
  }
  return out;
}

MPoly MPoly::eval_var(size_t var, const Rational& c) const {
  MPoly out(vars_);
  for (const auto& [e, k] : terms_) {
    Exponent f = e;
    f[var] = 0;
    out.add_term(f, k * c.pow(static_cast<unsigned>(e[var])));
  }
  return out;
}

MPoly MPoly::reindexed(std::vector<std::string> new_vars, const std::vector<size_t>& map) const {
  MPoly out(std::move(new_vars));
  for (const auto& [e, c] : terms_) {
    Exponent f(out.nvars(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map.at(i) >= f.size()) throw std::logic_error("MPoly::reindexed: variable dropped");
      f[map[i]] += e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

MPoly MPoly::times_monomial(const Exponent& m) const {
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (size_t i = 0; i < f.size(); ++i) f[i] += m[i];
    out.add_term(f, c);
  }
  return out;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(Rational(1) / terms_.begin()->second);
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational a = c.abs();
    std::string term;
    if (mono.empty())
      term = a.to_string();
    else if (a.is_one())
      term = mono;
    else
      term = a.to_string() + "*" + mono;
    if (out.empty())
      out = (c.sign() < 0 ? "-" : "") + term;
    else
      out += (c.sign() < 0 ? " - " : " + ") + term;
  }
  return out;
}

MPoly divexact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("divexact by zero");
  MPoly r = a;
  MPoly bb = b;
  if (r.vars().empty() && !bb.vars().empty()) r = MPoly::constant(bb.vars(), r.constant_term());
  if (bb.vars().empty() && !r.vars().empty()) bb = MPoly::constant(r.vars(), bb.constant_term());
  MPoly q(r.vars());
  auto [be, bc] = bb.leading_term();
  while (!r.is_zero()) {
    auto [re, rc] = r.leading_term();
    MPoly::Exponent d(re.size(), 0);
    for (size_t i = 0; i < re.size(); ++i) {
      d[i] = re[i] - be[i];
      if (d[i] < 0) throw std::logic_error("divexact: not divisible");
    }
    Rational f = rc / bc;
    MPoly t(r.vars());
    t.add_term(d, f);
    q += t;
    r -= bb.times_monomial(d).scaled(f);
  }
  return q;
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  MPoly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    MPoly r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_operand() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (peek('/')) {
        ++pos_;
        skip();
        size_t at = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          throw ParseError("division only by an integer literal", at);
        Integer d = integer();
        if (peek('^')) throw ParseError("division only by an integer literal", at);
        if (d == 0) throw ParseError("division by zero", at);
        acc = acc.scaled(Rational(Integer(1), d));
      } else {
        if (starts_operand()) throw ParseError("juxtaposition is not multiplication", pos_);
        return acc;
      }
    }
  }

  MPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    MPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("exponent must be a nonnegative integer literal", pos_);
      size_t at = pos_;
      Integer e = integer();
      if (e > 10000) throw ParseError("exponent too large", at);
      if (peek('^')) throw ParseError("chained exponent", pos_);
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  MPoly primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly r = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MPoly::constant(vars_, Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return MPoly::variable(vars_, i);
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Integer integer() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      throw ParseError("juxtaposition is not multiplication", pos_);
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;
};

}  // namespace

MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).run();
}

}  // namespace mero
