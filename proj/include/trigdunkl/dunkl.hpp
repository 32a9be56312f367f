#pragma once

// Trigonometric Dunkl operators on C[H] and the operators built from them:
// the nonsymmetric Jacobi polynomials E_k(mu), D_k(q) on invariants, L_k,
// and the Calogero-Moser Hamiltonian H_k on the localized ring.

#include <algorithm>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "rootsys.hpp"

namespace trigdunkl {

/// rho_k = 1/2 sum_{alpha>0} k_alpha alpha.
inline HStarElement rho(const RootSystem& rs, const CouplingVector& kvec) {
  HStarElement r = HStarElement::zero(rs.rank());
  const RatFunc half(ratio(1, 2));
  for (const auto& a : rs.positive_roots()) {
    const RatFunc& k = coupling(kvec, a);
    if (!k.is_zero()) r = r + (half * k) * HStarElement(a.weight);
  }
  return r;
}

/// Sign convention for the eigenvalue shift: +1 for x > 0 and -1 for x <= 0.
inline int epsilon(long x) { return x > 0 ? 1 : -1; }

/// mu~ = mu + 1/2 sum_{alpha>0} k_alpha eps(mu(alpha^vee)) alpha.
inline HStarElement mu_tilde(const RootSystem& rs, const Weight& mu, const CouplingVector& kvec) {
  HStarElement r(mu);
  const RatFunc half(ratio(1, 2));
  for (const auto& a : rs.positive_roots()) {
    const RatFunc& k = coupling(kvec, a);
    if (k.is_zero()) continue;
    r = r + (half * k * RatFunc(epsilon(rs.coroot_pairing(mu, a)))) * HStarElement(a.weight);
  }
  return r;
}

/// alpha^vee as an element of h.
inline HElement coroot_vector(const Root& a) {
  std::vector<RatFunc> c;
  for (long x : a.coroot) c.emplace_back(x);
  return HElement(c);
}

/// (1 - e^{-alpha})^{-1} (1 - s_alpha) f, computed by exact division.
inline LaurentElement divided_difference(const RootSystem& rs, const Root& a, const LaurentElement& f) {
  return exact_divide(rs, f - reflect(rs, a, f), a);
}

/// T_k(xi) f = (∂(xi) - rho_k(xi)) f + sum_{alpha>0} k_alpha alpha(xi) (1 - e^{-alpha})^{-1} (1 - s_alpha) f.
inline LaurentElement dunkl_apply(const RootSystem& rs, const HElement& xi, const LaurentElement& f,
                                  const CouplingVector& kvec) {
  RatFunc shift = pair(rho(rs, kvec), xi);
  LaurentElement r;
  for (const auto& [mu, c] : f.terms()) r.add_term(mu, (pair(mu, xi) - shift) * c);
  for (const auto& a : rs.positive_roots()) {
    RatFunc s = coupling(kvec, a) * pair(a.weight, xi);
    if (s.is_zero()) continue;
    r += s * divided_difference(rs, a, f);
  }
  return r;
}

/// Element of Sym(h) of degree at most two, in the b-basis of h:
/// p(lambda) = constant + sum_i linear_i lambda_i + sum_ij quadratic_ij lambda_i lambda_j
/// for lambda in fundamental-weight coordinates.
struct SymH {
  RatFunc constant;
  std::vector<RatFunc> linear;
  std::vector<std::vector<RatFunc>> quadratic;

  static SymH zero(int n) { return {RatFunc(), std::vector<RatFunc>(n), std::vector<std::vector<RatFunc>>(n, std::vector<RatFunc>(n))}; }

  /// The monomial xi * eta, symmetrized.
  static SymH product(const HElement& xi, const HElement& eta) {
    const int n = static_cast<int>(xi.size());
    SymH p = zero(n);
    const RatFunc half(ratio(1, 2));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p.quadratic[i][j] = half * (xi[i] * eta[j] + xi[j] * eta[i]);
    return p;
  }

  int dim() const { return static_cast<int>(linear.size()); }

  RatFunc evaluate(const HStarElement& lambda) const {
    RatFunc s = constant;
    for (int i = 0; i < dim(); ++i) {
      if (!linear[i].is_zero()) s += linear[i] * lambda[i];
      for (int j = 0; j < dim(); ++j)
        if (!quadratic[i][j].is_zero()) s += quadratic[i][j] * lambda[i] * lambda[j];
    }
    return s;
  }

  bool operator==(const SymH&) const = default;
};

/// The Casimir element C with C(mu) = (mu, mu).
inline SymH casimir(const RootSystem& rs) {
  SymH c = SymH::zero(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) c.quadratic[i][j] = RatFunc(rs.weight_gram()[i][j]);
  return c;
}

/// Checks q(s_i lambda) = q(lambda) for all simple reflections.
inline bool is_w_invariant(const RootSystem& rs, const SymH& q) {
  const int n = rs.rank();
  for (int node = 1; node <= n; ++node) {
    const Root& a = rs.simple_root(node);
    // s_i on fundamental-weight coordinates: S = I - a c^T
    std::vector<std::vector<RatFunc>> s(n, std::vector<RatFunc>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) s[r][c] = RatFunc((r == c ? 1 : 0) - a.weight[r] * a.coroot[c]);
    for (int c = 0; c < n; ++c) {
      RatFunc v;
      for (int r = 0; r < n; ++r) v += q.linear[r] * s[r][c];
      if (v != q.linear[c]) return false;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        RatFunc v;
        for (int r = 0; r < n; ++r)
          for (int t = 0; t < n; ++t)
            if (!q.quadratic[r][t].is_zero()) v += s[r][i] * q.quadratic[r][t] * s[t][j];
        if (v != q.quadratic[i][j]) return false;
      }
  }
  return true;
}

/// T_k(q) f for q of degree <= 2, by composing Dunkl operators.
inline LaurentElement dunkl_apply(const RootSystem& rs, const SymH& q, const LaurentElement& f,
                                  const CouplingVector& kvec) {
  const int n = rs.rank();
  LaurentElement r = q.constant * f;
  std::vector<LaurentElement> first(n);
  for (int j = 0; j < n; ++j) first[j] = dunkl_apply(rs, HElement::basis(n, j), f, kvec);
  for (int i = 0; i < n; ++i) {
    r += q.linear[i] * first[i];
    LaurentElement inner;
    for (int j = 0; j < n; ++j)
      if (!q.quadratic[i][j].is_zero()) inner += q.quadratic[i][j] * first[j];
    if (!inner.is_zero()) r += dunkl_apply(rs, HElement::basis(n, i), inner, kvec);
  }
  return r;
}

/// D_k(q) f for W-invariant q and f; on invariants D_k(q) agrees with T_k(q).
inline LaurentElement invariant_apply(const RootSystem& rs, const SymH& q, const LaurentElement& f,
                                      const CouplingVector& kvec) {
  if (!is_w_invariant(rs, q)) throw PreconditionError("invariant_apply: q is not W-invariant");
  if (!is_w_invariant(rs, f)) throw PreconditionError("invariant_apply: f is not W-invariant");
  return dunkl_apply(rs, q, f, kvec);
}

/// L_k f computed in the localized ring, without any invariance assumption:
/// ∂(C) f + 1/2 sum_{alpha>0} k_alpha (alpha, alpha) (1 + e^{-alpha}) / (1 - e^{-alpha}) ∂(alpha^vee) f.
inline LocalizedElement lk_localized(const RootSystem& rs, const LocalizedElement& f, const CouplingVector& kvec) {
  const int n = rs.rank();
  LocalizedElement r = laplacian(rs, f);
  for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) {
    const Root& a = rs.root(i);
    RatFunc c = RatFunc(ratio(1, 2)) * coupling(kvec, a) * RatFunc(a.norm2);
    if (c.is_zero()) continue;
    LocalizedElement d = partial(rs, f, coroot_vector(a));
    if (d.is_zero()) continue;
    LaurentElement plus = LaurentElement::constant(n, RatFunc(1));
    plus.add_term(-a.weight, RatFunc(1));
    r = add(rs, r, divide_by_factor(rs, multiply(rs, c * plus, d), i));
  }
  return r;
}

/// L_k on W-invariant Laurent polynomials; the result is again Laurent.
inline LaurentElement lk_apply(const RootSystem& rs, const LaurentElement& f, const CouplingVector& kvec) {
  if (!is_w_invariant(rs, f)) throw PreconditionError("lk_apply: f is not W-invariant");
  LocalizedElement r = lk_localized(rs, LocalizedElement(rs, f), kvec);
  if (!r.is_laurent()) throw DivisibilityError("lk_apply: result did not normalize to a Laurent polynomial");
  return r.numerator();
}

/// H_k = ∂(C) + 1/2 sum_{alpha in R} k_alpha (1 - k_alpha - 2 k_{2 alpha}) (alpha, alpha) / (e^{alpha/2} - e^{-alpha/2})^2.
/// The terms for alpha and -alpha coincide, and 1/(e^{alpha/2} - e^{-alpha/2})^2 = e^{-alpha}/(1 - e^{-alpha})^2.
inline LocalizedElement hamiltonian_apply(const RootSystem& rs, const LocalizedElement& f,
                                          const CouplingVector& kvec) {
  LocalizedElement r = laplacian(rs, f);
  for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) {
    const Root& a = rs.root(i);
    const RatFunc& k = coupling(kvec, a);
    RatFunc c = k * (RatFunc(1) - k - RatFunc(2) * coupling_of_double(rs, kvec, a)) * RatFunc(a.norm2);
    if (c.is_zero()) continue;
    LocalizedElement pot(rs, c * f.numerator().shifted(-a.weight), f.denom_exponents());
    r = add(rs, r, divide_by_factor(rs, pot, i, 2));
  }
  return r;
}

struct ConjugationVerdict {
  bool verified = false;
  LocalizedElement lhs;  ///< H_k (delta^{1/2} f)
  LocalizedElement rhs;  ///< delta^{1/2} (L_k f + (rho_k, rho_k) f)
};

/// delta^{1/2} = e^{rho_k} prod_{alpha>0} (1 - e^{-alpha})^{k_alpha}; needs even integer couplings.
inline LaurentElement delta_half(const RootSystem& rs, const CouplingVector& kvec) {
  const int n = rs.rank();
  Weight shift = Weight::zero(n);
  LaurentElement d = LaurentElement::constant(n, RatFunc(1));
  for (const auto& a : rs.positive_roots()) {
    long e = detail::nonnegative_integer_coupling(coupling(kvec, a));
    if (e % 2 != 0) throw DomainError("conjugation_check needs even couplings, got " + std::to_string(e));
    shift = shift + (e / 2) * a.weight;
    d = d * power(one_minus_exp_neg(rs, a), e, n);
  }
  return d.shifted(shift);
}

/// Verifies delta^{-1/2} H_k delta^{1/2} = L_k + (rho_k, rho_k) on f.
inline ConjugationVerdict conjugation_check(const RootSystem& rs, const LocalizedElement& f,
                                            const CouplingVector& kvec) {
  LaurentElement d = delta_half(rs, kvec);
  HStarElement r = rho(rs, kvec);
  RatFunc rr = rs.inner(r, r);
  ConjugationVerdict v;
  v.lhs = hamiltonian_apply(rs, multiply(rs, d, f), kvec);
  LocalizedElement inner = add(rs, lk_localized(rs, f, kvec), scale(rs, rr, f));
  v.rhs = multiply(rs, d, inner);
  v.verified = v.lhs == v.rhs;
  return v;
}

struct JacobiResult {
  LaurentElement polynomial;
  HElement direction;  ///< the generic xi used for the triangular solve
};

/// E_k(mu) = e^mu + lower terms (relative to <=_+), the common eigenfunction of
/// all T_k(xi) with eigenvalue mu~(xi). Solved as an eigenvector of a single
/// T_k(xi) for a generic xi, which is triangular on span{e^nu : nu <=_+ mu}.
inline JacobiResult jacobi_with_direction(const RootSystem& rs, const Weight& mu, const CouplingVector& kvec,
                                          int max_attempts = 32) {
  const int n = rs.rank();
  std::vector<Weight> basis;
  for (const auto& nu : rs.saturated_set(mu)) {
    Ordering o = rs.le_plus(nu, mu);
    if (o == Ordering::Less || o == Ordering::Equal) basis.push_back(nu);
  }
  // linear extension of <=_+, largest first
  struct Key {
    Rational dom_height;
    Rational height;
  };
  std::map<Weight, Key> keys;
  for (const auto& nu : basis) keys[nu] = {rs.height(rs.dominant(nu)), rs.height(nu)};
  std::sort(basis.begin(), basis.end(), [&](const Weight& x, const Weight& y) {
    const Key& a = keys[x];
    const Key& b = keys[y];
    if (a.dom_height != b.dom_height) return a.dom_height > b.dom_height;
    if (a.height != b.height) return a.height < b.height;
    return x < y;
  });
  std::map<Weight, HStarElement> tilde;
  for (const auto& nu : basis) tilde.emplace(nu, mu_tilde(rs, nu, kvec));

  // directions sum (t+i) alpha_i^vee first; if all of those are resonant
  // (numeric couplings), xi = (1, s, s^2, ...) with s = 2^t + 1, which separates
  // two eigenvalues once s exceeds the root bound of their difference
  for (int attempt = 1; attempt <= 2 * max_attempts; ++attempt) {
    std::vector<RatFunc> xc;
    if (attempt <= max_attempts) {
      for (int i = 1; i <= n; ++i) xc.emplace_back(attempt + i);
    } else {
      const Rational s = Rational(mpz_class(1) << (attempt - max_attempts)) + 1;
      Rational p = 1;
      for (int i = 0; i < n; ++i, p *= s) xc.emplace_back(p);
    }
    HElement xi(xc);
    RatFunc target = pair(tilde.at(mu), xi);
    bool resonant = false;
    for (const auto& nu : basis)
      if (nu != mu && pair(tilde.at(nu), xi) == target) resonant = true;
    if (resonant) continue;

    LaurentElement residual;
    LaurentElement result;
    for (const auto& nu : basis) {
      RatFunc c(1);
      if (nu != mu) {
        RatFunc rhs = residual.coeff(nu);
        if (rhs.is_zero()) continue;
        c = rhs / (target - pair(tilde.at(nu), xi));
      }
      result.add_term(nu, c);
      LaurentElement column = dunkl_apply(rs, xi, LaurentElement::monomial(nu), kvec);
      for (const auto& [w, d] : column.terms()) {
        if (!keys.contains(w)) throw std::logic_error("Dunkl operator left the span of lower weights");
        if (w == nu && d != pair(tilde.at(nu), xi)) throw std::logic_error("unexpected diagonal entry");
      }
      residual += c * column;
    }
    return {result, xi};
  }
  throw ResonanceError("no non-resonant direction found for E_k(mu)");
}

inline LaurentElement jacobi(const RootSystem& rs, const Weight& mu, const CouplingVector& kvec) {
  return jacobi_with_direction(rs, mu, kvec).polynomial;
}

}  // namespace trigdunkl
