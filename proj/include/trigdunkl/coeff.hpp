#pragma once

// Exact coefficient field Q(k, kp): rational functions in the two coupling
// variables with canonical (reduced, monic-denominator) representation.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace trigdunkl {

using Rational = mpq_class;

/// a/b in lowest terms.
inline Rational ratio(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

/// Exponents of k and kp.
struct Monomial {
  int k = 0;
  int kp = 0;

  int degree() const { return k + kp; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with k > kp.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a.k > b.k;
}

/// Polynomial in k, kp over Q. Terms are kept in strictly decreasing grlex
/// order with no zero coefficients, so structural equality is value equality.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly() = default;
  Poly(long c) : Poly(Rational(c)) {}
  Poly(const Rational& c) {
    if (c != 0) terms_.push_back({{0, 0}, c});
  }

  static Poly monomial(Monomial m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  static Poly var_k() { return monomial({1, 0}, 1); }
  static Poly var_kp() { return monomial({0, 1}, 1); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.degree() == 0 && terms_[0].coeff == 1; }
  Rational constant_value() const {
    if (terms_.empty() || terms_.back().mono.degree() != 0) return 0;
    return terms_.back().coeff;
  }
  const Term& leading() const { return terms_.front(); }

  int degree_k() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.k);
    return d;
  }
  int degree_kp() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.kp);
    return d;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Poly scaled(const Rational& c) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_)
        prod.push_back({{s.mono.k + t.mono.k, s.mono.kp + t.mono.kp}, s.coeff * t.coeff});
    std::sort(prod.begin(), prod.end(),
              [](const Term& x, const Term& y) { return grlex_greater(x.mono, y.mono); });
    Poly r;
    for (auto& t : prod) {
      if (!r.terms_.empty() && r.terms_.back().mono == t.mono)
        r.terms_.back().coeff += t.coeff;
      else
        r.terms_.push_back(std::move(t));
    }
    std::erase_if(r.terms_, [](const Term& t) { return t.coeff == 0; });
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly&, const Poly&) = default;

  Rational eval(const Rational& k, const Rational& kp) const {
    Rational acc = 0;
    for (const auto& t : terms_) {
      Rational v = t.coeff;
      for (int i = 0; i < t.mono.k; ++i) v *= k;
      for (int i = 0; i < t.mono.kp; ++i) v *= kp;
      acc += v;
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      std::string mono;
      auto append = [&](const char* var, int e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += var;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      append("k", t.mono.k);
      append("kp", t.mono.kp);
      Rational mag = abs(t.coeff);
      std::string body;
      if (mono.empty())
        body = mag.get_str();
      else if (mag == 1)
        body = mono;
      else
        body = mag.get_str() + "*" + mono;
      if (first)
        out += (t.coeff < 0 ? "-" : "") + body;
      else
        out += (t.coeff < 0 ? " - " : " + ") + body;
      first = false;
    }
    return out;
  }

 private:
  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && grlex_greater(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grlex_greater(b.terms_[j].mono, a.terms_[i].mono)) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? Rational(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        Rational c = subtract ? Rational(a.terms_[i].coeff - b.terms_[j].coeff)
                              : Rational(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].mono, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

namespace detail {

// Dense univariate polynomials in kp, and polynomials in k over Q[kp], used
// only for the gcd computation.
using UPoly = std::vector<Rational>;
using BPoly = std::vector<UPoly>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline void trim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

inline UPoly u_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Returns {quotient, remainder}; b must be nonzero.
inline std::pair<UPoly, UPoly> u_divmod(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lb;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline UPoly u_monic(UPoly p) {
  if (p.empty()) return p;
  Rational l = p.back();
  for (auto& c : p) c /= l;
  return p;
}

inline UPoly u_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    auto r = u_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return u_monic(a);
}

inline UPoly content(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    g = u_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

inline BPoly divide_content(BPoly p, const UPoly& c) {
  for (auto& coeff : p)
    if (!coeff.empty()) coeff = u_divmod(coeff, c).first;
  return p;
}

inline BPoly primitive_part(const BPoly& p) { return divide_content(p, content(p)); }

// Pseudo-remainder of a by b as polynomials in k.
inline BPoly pseudo_rem(BPoly a, const BPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    UPoly la = a.back();
    for (auto& c : a) c = u_mul(c, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = u_sub(a[i + shift], u_mul(la, b[i]));
    trim(a);
  }
  return a;
}

inline BPoly to_dense(const Poly& p) {
  BPoly r(p.degree_k() + 1, UPoly{});
  for (const auto& t : p.terms()) {
    auto& c = r[t.mono.k];
    if (c.size() <= static_cast<std::size_t>(t.mono.kp)) c.resize(t.mono.kp + 1, Rational(0));
    c[t.mono.kp] = t.coeff;
  }
  trim(r);
  return r;
}

inline Poly from_dense(const BPoly& p) {
  Poly r;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (p[i][j] != 0) r += Poly::monomial({static_cast<int>(i), static_cast<int>(j)}, p[i][j]);
  return r;
}

}  // namespace detail

/// Exact quotient; throws DivisibilityError when b does not divide a.
inline Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Poly q, r = a;
  const auto& lb = b.leading();
  while (!r.is_zero()) {
    const auto& lr = r.leading();
    if (lr.mono.k < lb.mono.k || lr.mono.kp < lb.mono.kp)
      throw DivisibilityError("polynomial " + b.to_string() + " does not divide " + a.to_string());
    Poly t = Poly::monomial({lr.mono.k - lb.mono.k, lr.mono.kp - lb.mono.kp}, lr.coeff / lb.coeff);
    q += t;
    r -= t * b;
  }
  return q;
}

/// Monic (grlex leading coefficient 1) gcd; gcd(0, 0) = 0.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto monic = [](const Poly& p) { return p.scaled(Rational(1) / p.leading().coeff); };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  using namespace detail;
  BPoly x = to_dense(a), y = to_dense(b);
  UPoly cx = content(x), cy = content(y);
  UPoly c = u_gcd(cx, cy);
  x = divide_content(x, cx);
  y = divide_content(y, cy);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    BPoly r = pseudo_rem(x, y);
    x = std::move(y);
    y = r.empty() ? BPoly{} : primitive_part(r);
  }
  x = primitive_part(x);
  for (auto& coeff : x) coeff = u_mul(coeff, c);
  trim(x);
  return monic(from_dense(x));
}

/// Element of Q(k, kp). Invariant: gcd(num, den) = 1 and den has grlex
/// leading coefficient 1, so equal values have identical representations.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
  }

  static RatFunc k() { return RatFunc(Poly::var_k()); }
  static RatFunc kp() { return RatFunc(Poly::var_kp()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  Rational constant_value() const { return num_.constant_value(); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    RatFunc r;
    r.num_ = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
    r.den_ = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
    r.fix_leading();
    return r;
  }

  RatFunc inverse() const {
    if (is_zero()) throw DomainError("inverse of zero rational function");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.fix_leading();
    return r;
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// Exact evaluation at (k, kp); throws EvaluationError at a pole.
  Rational substitute(const Rational& k_val, const Rational& kp_val = 0) const {
    Rational d = den_.eval(k_val, kp_val);
    if (d == 0)
      throw EvaluationError("pole of " + to_string() + " at k=" + k_val.get_str() + ", kp=" + kp_val.get_str());
    return num_.eval(k_val, kp_val) / d;
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }

 private:
  static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract) {
    if (a.den_ == b.den_) {
      RatFunc r;
      r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      r.den_ = a.den_;
      if (!r.den_.is_one()) r.normalize();
      return r;
    }
    RatFunc r;
    if (a.is_polynomial() || b.is_polynomial()) {
      // gcd(p*d + n, d) = gcd(n, d) = 1 already
      r.num_ = subtract ? a.num_ * b.den_ - b.num_ * a.den_ : a.num_ * b.den_ + b.num_ * a.den_;
      r.den_ = a.den_ * b.den_;
      return r;
    }
    r.num_ = subtract ? a.num_ * b.den_ - b.num_ * a.den_ : a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (!den_.is_constant()) {
      Poly g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
      }
    }
    fix_leading();
  }

  void fix_leading() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    Rational l = den_.leading().coeff;
    if (l != 1) {
      Rational inv = Rational(1) / l;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly num_;
  Poly den_;
};

inline std::string to_string(const RatFunc& f) { return f.to_string(); }

/// W-invariant coupling vector. `k` is the value on the orbit of alpha_1 and
/// `kp` on the orbit of alpha_n (types B, C, F, G, and the e_i roots of BC_n);
/// for A_n, `kp` is the extra parameter of the special exponents and never a
/// root coupling. `k2` is the coupling of the divisible roots 2e_i of BC_n and
/// is zero for reduced systems.
struct CouplingVector {
  RatFunc k;
  RatFunc kp;
  RatFunc k2;

  static CouplingVector symbolic() { return {RatFunc::k(), RatFunc::kp(), RatFunc()}; }
  static CouplingVector single(RatFunc c) { return {c, c, RatFunc()}; }

  const RatFunc& for_class(int length_class) const {
    switch (length_class) {
      case 0: return k;
      case 1: return kp;
      default: return k2;
    }
  }
};

namespace detail {

class RatFuncParser {
 public:
  explicit RatFuncParser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    while (true) {
      if (eat('*'))
        acc *= unary();
      else if (eat('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else
        return acc;
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    RatFunc r(1);
    for (int i = 0; i < e; ++i) r *= base;
    if (neg) {
      if (r.is_zero()) fail("negative power of zero");
      r = r.inverse();
    }
    return r;
  }

  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(Rational(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto name = s_.substr(start, pos_ - start);
      if (name == "k") return RatFunc::k();
      if (name == "kp") return RatFunc::kp();
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses expressions in k, kp with integer literals and + - * / ^ ( ).
/// Accepts everything RatFunc::to_string produces.
inline RatFunc parse_ratfunc(std::string_view s) { return detail::RatFuncParser(s).parse(); }

/// Parses an exact rational such as "1/6" or "-2"; decimals are rejected.
inline Rational parse_rational(std::string_view s) {
  RatFunc f = parse_ratfunc(s);
  if (!f.is_constant()) throw ParseError("expected a rational constant, got '" + std::string(s) + "'");
  return f.constant_value();
}

}  // namespace trigdunkl
