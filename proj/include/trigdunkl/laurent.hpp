#pragma once

// The group algebra C[P] = C[H] with its Weyl action and bar involution, the
// localization C[H°] at the factors (1 - e^{-alpha}), and the constant-term
// inner product attached to integral couplings.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "errors.hpp"
#include "rootsys.hpp"

namespace trigdunkl {

/// Finitely supported map P -> Q(k, kp); no zero coefficients are stored.
class LaurentElement {
 public:
  using Terms = std::map<Weight, RatFunc>;

  LaurentElement() = default;

  static LaurentElement monomial(const Weight& mu, const RatFunc& c = RatFunc(1)) {
    LaurentElement f;
    if (!c.is_zero()) f.terms_.emplace(mu, c);
    return f;
  }
  static LaurentElement constant(int rank, const RatFunc& c) { return monomial(Weight::zero(rank), c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  RatFunc coeff(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? RatFunc() : it->second;
  }

  /// Adds c e^mu in place.
  void add_term(const Weight& mu, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentElement& operator+=(const LaurentElement& o) {
    for (const auto& [mu, c] : o.terms_) add_term(mu, c);
    return *this;
  }
  LaurentElement& operator-=(const LaurentElement& o) {
    for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
    return *this;
  }
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
  LaurentElement operator-() const {
    LaurentElement r = *this;
    for (auto& [mu, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentElement operator*(const RatFunc& s, const LaurentElement& f) {
    LaurentElement r;
    if (s.is_zero()) return r;
    for (const auto& [mu, c] : f.terms_) r.terms_.emplace_hint(r.terms_.end(), mu, s * c);
    return r;
  }

  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
    LaurentElement r;
    for (const auto& [mu, c] : a.terms_)
      for (const auto& [nu, d] : b.terms_) r.add_term(mu + nu, c * d);
    return r;
  }

  /// Multiplication by e^mu.
  LaurentElement shifted(const Weight& mu) const {
    LaurentElement r;
    for (const auto& [nu, c] : terms_) r.terms_.emplace(nu + mu, c);
    return r;
  }

  bool operator==(const LaurentElement&) const = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mu, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")*e^[";
      for (std::size_t i = 0; i < mu.size(); ++i) out += (i ? "," : "") + std::to_string(mu[i]);
      out += "]";
    }
    return out;
  }

 private:
  Terms terms_;
};

inline LaurentElement power(const LaurentElement& f, long e, int rank) {
  LaurentElement r = LaurentElement::constant(rank, RatFunc(1));
  for (long i = 0; i < e; ++i) r = r * f;
  return r;
}

/// Bar involution e^mu -> e^{-mu}; coefficients are treated as real.
inline LaurentElement bar(const LaurentElement& f) {
  LaurentElement r;
  for (const auto& [mu, c] : f.terms()) r.add_term(-mu, c);
  return r;
}

inline RatFunc constant_term(const LaurentElement& f, int rank) { return f.coeff(Weight::zero(rank)); }

/// Action of a single reflection e^mu -> e^{s_alpha mu}.
inline LaurentElement reflect(const RootSystem& rs, const Root& a, const LaurentElement& f) {
  LaurentElement r;
  for (const auto& [mu, c] : f.terms()) r.add_term(rs.reflect(a, mu), c);
  return r;
}

inline LaurentElement reflect(const RootSystem& rs, int node, const LaurentElement& f) {
  return reflect(rs, rs.simple_root(node), f);
}

/// w = s_{word[0]} ... s_{word[last]} acting by e^mu -> e^{w mu}.
inline LaurentElement weyl_act(const RootSystem& rs, const std::vector<int>& word, const LaurentElement& f) {
  for (int node : word) rs.check_node(node);
  LaurentElement r;
  for (const auto& [mu, c] : f.terms()) r.add_term(rs.apply_word(word, mu), c);
  return r;
}

inline bool is_w_invariant(const RootSystem& rs, const LaurentElement& f) {
  for (int i = 1; i <= rs.rank(); ++i)
    if (reflect(rs, i, f) != f) return false;
  return true;
}

/// Sum of e^nu over the Weyl orbit of mu.
inline LaurentElement orbit_sum(const RootSystem& rs, const Weight& mu) {
  LaurentElement f;
  for (const auto& nu : rs.orbit(mu)) f.add_term(nu, RatFunc(1));
  return f;
}

/// The factor 1 - e^{-alpha}.
inline LaurentElement one_minus_exp_neg(const RootSystem& rs, const Root& a) {
  LaurentElement f = LaurentElement::constant(rs.rank(), RatFunc(1));
  f.add_term(-a.weight, RatFunc(-1));
  return f;
}

/// g with g (1 - e^{-alpha}) = f, or nullopt when f is not divisible.
inline std::optional<LaurentElement> try_exact_divide(const RootSystem& rs, const LaurentElement& f, const Root& a) {
  // Split the support into alpha-strings rep + t*alpha with <rep, alpha^vee> in {0, 1}.
  struct Entry {
    long t;
    const RatFunc* c;
  };
  std::map<Weight, std::vector<Entry>> strings;
  for (const auto& [nu, c] : f.terms()) {
    long m = rs.coroot_pairing(nu, a);
    long t = m >= 0 ? m / 2 : -((-m + 1) / 2);
    strings[nu - t * a.weight].push_back({t, &c});
  }
  LaurentElement g;
  for (auto& [rep, entries] : strings) {
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.t > y.t; });
    // g_t = sum_{s >= t} f_s on (t_min, t_max]; the total must vanish.
    RatFunc running;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      running += *entries[i].c;
      long lo = i + 1 < entries.size() ? entries[i + 1].t : entries[i].t;
      if (i + 1 == entries.size()) {
        if (!running.is_zero()) return std::nullopt;
        break;
      }
      for (long t = entries[i].t; t > lo; --t) g.add_term(rep + t * a.weight, running);
    }
  }
  return g;
}

inline LaurentElement exact_divide(const RootSystem& rs, const LaurentElement& f, const Root& a) {
  auto g = try_exact_divide(rs, f, a);
  if (!g) throw DivisibilityError("element is not divisible by (1 - e^{-alpha})");
  return *g;
}

inline LaurentElement exact_divide(const RootSystem& rs, const LaurentElement& f, std::size_t root_index) {
  return exact_divide(rs, f, rs.root(root_index));
}

/// ∂(xi) e^mu = mu(xi) e^mu.
inline LaurentElement partial(const LaurentElement& f, const HElement& xi) {
  LaurentElement r;
  for (const auto& [mu, c] : f.terms()) r.add_term(mu, pair(mu, xi) * c);
  return r;
}

/// ∂(C) e^mu = (mu, mu) e^mu.
inline LaurentElement laplacian(const RootSystem& rs, const LaurentElement& f) {
  LaurentElement r;
  for (const auto& [mu, c] : f.terms()) r.add_term(mu, RatFunc(rs.inner(mu, mu)) * c);
  return r;
}

/// Fraction num / prod_{alpha>0} (1 - e^{-alpha})^{denom[alpha]}, kept normalized:
/// no factor (1 - e^{-alpha}) with positive exponent divides the numerator.
class LocalizedElement {
 public:
  LocalizedElement() = default;
  LocalizedElement(const RootSystem& rs, LaurentElement num)
      : num_(std::move(num)), denom_(rs.positive_roots().size(), 0) {}
  LocalizedElement(const RootSystem& rs, LaurentElement num, std::vector<int> denom)
      : num_(std::move(num)), denom_(std::move(denom)) {
    if (denom_.size() != rs.positive_roots().size()) throw DomainError("denominator exponent vector has wrong length");
    normalize(rs);
  }

  const LaurentElement& numerator() const { return num_; }
  const std::vector<int>& denom_exponents() const { return denom_; }
  bool is_laurent() const {
    return std::all_of(denom_.begin(), denom_.end(), [](int m) { return m == 0; });
  }
  bool is_zero() const { return num_.is_zero(); }

  void normalize(const RootSystem& rs) {
    if (num_.is_zero()) {
      std::fill(denom_.begin(), denom_.end(), 0);
      return;
    }
    for (std::size_t i = 0; i < denom_.size(); ++i) {
      while (denom_[i] > 0) {
        auto q = try_exact_divide(rs, num_, rs.root(i));
        if (!q) break;
        num_ = std::move(*q);
        --denom_[i];
      }
    }
  }

  bool operator==(const LocalizedElement&) const = default;

 private:
  LaurentElement num_;
  std::vector<int> denom_;
};

inline LocalizedElement add(const RootSystem& rs, const LocalizedElement& a, const LocalizedElement& b,
                            bool subtract = false) {
  const auto& ma = a.denom_exponents();
  const auto& mb = b.denom_exponents();
  std::vector<int> m(ma.size());
  LaurentElement na = a.numerator(), nb = b.numerator();
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i] = std::max(ma[i], mb[i]);
    LaurentElement factor = one_minus_exp_neg(rs, rs.root(i));
    for (int e = ma[i]; e < m[i]; ++e) na = na * factor;
    for (int e = mb[i]; e < m[i]; ++e) nb = nb * factor;
  }
  return LocalizedElement(rs, subtract ? na - nb : na + nb, m);
}

inline LocalizedElement subtract(const RootSystem& rs, const LocalizedElement& a, const LocalizedElement& b) {
  return add(rs, a, b, true);
}

inline LocalizedElement multiply(const RootSystem& rs, const LocalizedElement& a, const LocalizedElement& b) {
  std::vector<int> m(a.denom_exponents().size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = a.denom_exponents()[i] + b.denom_exponents()[i];
  return LocalizedElement(rs, a.numerator() * b.numerator(), m);
}

inline LocalizedElement multiply(const RootSystem& rs, const LaurentElement& a, const LocalizedElement& b) {
  return LocalizedElement(rs, a * b.numerator(), b.denom_exponents());
}

inline LocalizedElement scale(const RootSystem& rs, const RatFunc& s, const LocalizedElement& f) {
  return LocalizedElement(rs, s * f.numerator(), f.denom_exponents());
}

/// Division of a localized element by (1 - e^{-alpha})^e.
inline LocalizedElement divide_by_factor(const RootSystem& rs, const LocalizedElement& f, std::size_t root_index,
                                         int e = 1) {
  std::vector<int> m = f.denom_exponents();
  m.at(root_index) += e;
  return LocalizedElement(rs, f.numerator(), m);
}

/// ∂(xi) on C[H°] by the quotient rule:
/// ∂(N/D) = ∂N/D - (N/D) sum_alpha m_alpha alpha(xi) e^{-alpha} / (1 - e^{-alpha}).
inline LocalizedElement partial(const RootSystem& rs, const LocalizedElement& f, const HElement& xi) {
  LocalizedElement r(rs, partial(f.numerator(), xi), f.denom_exponents());
  const auto& m = f.denom_exponents();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    const Root& a = rs.root(i);
    RatFunc s = RatFunc(m[i]) * pair(a.weight, xi);
    if (s.is_zero()) continue;
    LocalizedElement t = divide_by_factor(rs, LocalizedElement(rs, s * f.numerator().shifted(-a.weight), m), i);
    r = subtract(rs, r, t);
  }
  return r;
}

/// ∂(C) on C[H°], with C = sum_ij (varpi_i, varpi_j) b_i b_j.
inline LocalizedElement laplacian(const RootSystem& rs, const LocalizedElement& f) {
  if (f.is_laurent()) return LocalizedElement(rs, laplacian(rs, f.numerator()));
  const int n = rs.rank();
  LocalizedElement r(rs, LaurentElement{});
  for (int i = 0; i < n; ++i) {
    std::vector<RatFunc> eta(n);
    for (int j = 0; j < n; ++j) eta[j] = RatFunc(rs.weight_gram()[i][j]);
    LocalizedElement inner = partial(rs, f, HElement(eta));
    r = add(rs, r, partial(rs, inner, HElement::basis(n, i)));
  }
  return r;
}

/// Value of the coupling vector on a root.
inline const RatFunc& coupling(const CouplingVector& kvec, const Root& a) { return kvec.for_class(a.length_class); }

/// Coupling of 2*alpha (zero unless 2*alpha is a root).
inline RatFunc coupling_of_double(const RootSystem& rs, const CouplingVector& kvec, const Root& a) {
  std::vector<long> twice = a.simple;
  for (auto& x : twice) x *= 2;
  auto idx = rs.find_root(twice);
  return idx ? coupling(kvec, rs.root(*idx)) : RatFunc();
}

namespace detail {

inline long nonnegative_integer_coupling(const RatFunc& c) {
  if (!c.is_constant() || c.constant_value() < 0 || c.constant_value().get_den() != 1)
    throw DomainError("coupling must be a nonnegative integer, got " + c.to_string());
  return c.constant_value().get_num().get_si();
}

}  // namespace detail

/// delta^{1/2} bar(delta)^{1/2} = prod_{alpha>0} (2 - e^alpha - e^{-alpha})^{k_alpha}.
inline LaurentElement weight_function(const RootSystem& rs, const CouplingVector& kvec) {
  const int n = rs.rank();
  LaurentElement w = LaurentElement::constant(n, RatFunc(1));
  for (const auto& a : rs.positive_roots()) {
    long e = detail::nonnegative_integer_coupling(coupling(kvec, a));
    if (e == 0) continue;
    LaurentElement factor = LaurentElement::constant(n, RatFunc(2));
    factor.add_term(a.weight, RatFunc(-1));
    factor.add_term(-a.weight, RatFunc(-1));
    w = w * power(factor, e, n);
  }
  return w;
}

/// (f, g)_k = constant term of f bar(g) w_k / |W|.
inline RatFunc inner_product(const RootSystem& rs, const LaurentElement& f, const LaurentElement& g,
                             const CouplingVector& kvec) {
  LaurentElement h = bar(g) * weight_function(rs, kvec);
  RatFunc ct;
  for (const auto& [mu, c] : f.terms()) {
    RatFunc d = h.coeff(-mu);
    if (!d.is_zero()) ct += c * d;
  }
  return ct / RatFunc(Rational(static_cast<unsigned long>(rs.weyl_order())));
}

}  // namespace trigdunkl
