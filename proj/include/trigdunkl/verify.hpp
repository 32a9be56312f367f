#pragma once

// Verification harness: each suite sweeps one identity over a family of
// inputs and stops at the first failing case, keeping both sides.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dunkl.hpp"
#include "io.hpp"
#include "special.hpp"

namespace trigdunkl::verify {

using io::json;

struct Failure {
  std::string identity;
  json lhs;
  json rhs;
};

struct SuiteResult {
  std::string suite;
  std::string type;
  std::size_t cases = 0;
  std::optional<Failure> failure;
  bool passed() const { return !failure.has_value(); }
};

inline json to_json(const SuiteResult& r) {
  json j{{"suite", r.suite}, {"type", r.type}, {"cases", r.cases}, {"passed", r.passed()}};
  if (r.failure) j["failure"] = {{"identity", r.failure->identity}, {"lhs", r.failure->lhs}, {"rhs", r.failure->rhs}};
  return j;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"commute", "triangular", "eigen",  "cross",    "hermitian", "thm23",
                                              "conjugation", "prop32", "relations", "compat", "schwarz"};
  return names;
}

// --- input families -----------------------------------------------------------

/// Dominant weights whose height (sum of simple-root coordinates) is at most `max_height`.
inline std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, const Rational& max_height) {
  const int n = rs.rank();
  std::vector<Rational> h(n);
  for (int i = 0; i < n; ++i) {
    Weight w = Weight::zero(n);
    w.c[i] = 1;
    h[i] = rs.height(w);
  }
  std::vector<Weight> out;
  std::vector<long> c(n, 0);
  std::function<void(int, Rational)> rec = [&](int i, Rational used) {
    if (i == n) {
      out.emplace_back(c);
      return;
    }
    for (long m = 0; used + h[i] * m <= max_height; ++m) {
      c[i] = m;
      rec(i + 1, used + h[i] * m);
    }
    c[i] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Union of the saturated sets of the given dominant weights.
inline std::vector<Weight> saturated_union(const RootSystem& rs, const std::vector<Weight>& dominants) {
  std::set<Weight> s;
  for (const auto& d : dominants) {
    auto sat = rs.saturated_set(d);
    s.insert(sat.begin(), sat.end());
  }
  return {s.begin(), s.end()};
}

/// All weights with every coordinate in [-bound, bound].
inline std::vector<Weight> weights_in_box(int n, long bound) {
  std::vector<Weight> out;
  std::vector<long> c(n, -bound);
  while (true) {
    out.emplace_back(c);
    int i = n - 1;
    while (i >= 0 && c[i] == bound) c[i--] = -bound;
    if (i < 0) break;
    ++c[i];
  }
  return out;
}

inline std::vector<HElement> coroot_basis(int n) {
  std::vector<HElement> b;
  for (int i = 0; i < n; ++i) b.push_back(HElement::basis(n, i));
  return b;
}

inline std::string weight_string(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w.c[i]);
  return s + "]";
}

// --- suites -------------------------------------------------------------------

inline SuiteResult commute(const RootSystem& rs, const CouplingVector& kvec, const Rational& max_height = 3) {
  SuiteResult r{"commute", rs.spec().name()};
  const int n = rs.rank();
  auto weights = saturated_union(rs, dominant_weights_up_to(rs, max_height));
  auto basis = coroot_basis(n);
  for (const auto& mu : weights) {
    auto f = LaurentElement::monomial(mu);
    std::vector<LaurentElement> first;
    for (const auto& xi : basis) first.push_back(dunkl_apply(rs, xi, f, kvec));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        ++r.cases;
        auto lhs = dunkl_apply(rs, basis[i], first[j], kvec);
        auto rhs = dunkl_apply(rs, basis[j], first[i], kvec);
        if (lhs != rhs) {
          r.failure = Failure{"T(b_" + std::to_string(i + 1) + ") T(b_" + std::to_string(j + 1) + ") e^" +
                                  weight_string(mu) + " = T(b_" + std::to_string(j + 1) + ") T(b_" +
                                  std::to_string(i + 1) + ") e^" + weight_string(mu),
                              io::to_json(lhs), io::to_json(rhs)};
          return r;
        }
      }
  }
  return r;
}

inline SuiteResult triangular(const RootSystem& rs, const CouplingVector& kvec, long bound = 2) {
  SuiteResult r{"triangular", rs.spec().name()};
  const int n = rs.rank();
  for (const auto& mu : weights_in_box(n, bound))
    for (const auto& xi : coroot_basis(n)) {
      ++r.cases;
      auto img = dunkl_apply(rs, xi, LaurentElement::monomial(mu), kvec);
      for (const auto& [nu, c] : img.terms()) {
        Ordering o = rs.le_plus(nu, mu);
        if (o != Ordering::Less && o != Ordering::Equal) {
          r.failure = Failure{"support of T(xi) e^" + weight_string(mu) + " lies below " + weight_string(mu),
                              weight_string(nu) + " is " + to_string(o), weight_string(mu)};
          return r;
        }
      }
    }
  return r;
}

inline SuiteResult eigen(const RootSystem& rs, const CouplingVector& kvec, long bound = 2) {
  SuiteResult r{"eigen", rs.spec().name()};
  const int n = rs.rank();
  for (const auto& mu : weights_in_box(n, bound)) {
    auto e = jacobi(rs, mu, kvec);
    HStarElement mt = mu_tilde(rs, mu, kvec);
    for (const auto& xi : coroot_basis(n)) {
      ++r.cases;
      auto lhs = dunkl_apply(rs, xi, e, kvec);
      auto rhs = pair(mt, xi) * e;
      if (lhs != rhs) {
        r.failure = Failure{"T(xi) E(" + weight_string(mu) + ") = mu~(xi) E(" + weight_string(mu) + ")",
                            io::to_json(lhs), io::to_json(rhs)};
        return r;
      }
    }
  }
  return r;
}

/// s_i T(xi) - T(s_i xi) s_i + (k_i + 2 k_{2 alpha_i}) alpha_i(xi) = 0 on monomials.
inline SuiteResult cross(const RootSystem& rs, const CouplingVector& kvec, long bound = 2) {
  SuiteResult r{"cross", rs.spec().name()};
  const int n = rs.rank();
  for (int node = 1; node <= n; ++node) {
    const Root& a = rs.simple_root(node);
    RatFunc c = coupling(kvec, a);
    if (!rs.reduced()) c += RatFunc(2) * coupling_of_double(rs, kvec, a);
    for (const auto& xi : coroot_basis(n))
      for (const auto& mu : weights_in_box(n, bound)) {
        ++r.cases;
        auto f = LaurentElement::monomial(mu);
        auto lhs = reflect(rs, node, dunkl_apply(rs, xi, f, kvec)) -
                   dunkl_apply(rs, rs.reflect(node, xi), reflect(rs, node, f), kvec);
        auto rhs = -(c * pair(a.weight, xi) * f);
        if (lhs != rhs) {
          r.failure = Failure{"s_" + std::to_string(node) + " T(xi) e^" + weight_string(mu) + " - T(s xi) s e^" +
                                  weight_string(mu) + " = -(k + 2k2) alpha(xi) e^" + weight_string(mu),
                              io::to_json(lhs), io::to_json(rhs)};
          return r;
        }
      }
  }
  return r;
}

/// (T(xi) e^mu, e^nu)_k = (e^mu, T(xi) e^nu)_k for integer couplings.
inline SuiteResult hermitian(const RootSystem& rs, const CouplingVector& kvec, long bound = 2) {
  SuiteResult r{"hermitian", rs.spec().name()};
  const int n = rs.rank();
  auto weights = weights_in_box(n, bound);
  LaurentElement w = weight_function(rs, kvec);
  const RatFunc order(static_cast<long>(rs.weyl_order()));
  auto form = [&](const LaurentElement& f, const LaurentElement& g) {
    RatFunc s;
    for (const auto& [lam, a] : f.terms())
      for (const auto& [nu, b] : g.terms()) {
        RatFunc c = w.coeff(nu - lam);
        if (!c.is_zero()) s += a * b * c;
      }
    return s / order;
  };
  for (const auto& xi : coroot_basis(n)) {
    std::vector<LaurentElement> images;
    for (const auto& mu : weights) images.push_back(dunkl_apply(rs, xi, LaurentElement::monomial(mu), kvec));
    for (std::size_t i = 0; i < weights.size(); ++i)
      for (std::size_t j = 0; j < weights.size(); ++j) {
        ++r.cases;
        RatFunc lhs = form(images[i], LaurentElement::monomial(weights[j]));
        RatFunc rhs = form(LaurentElement::monomial(weights[i]), images[j]);
        if (lhs != rhs) {
          r.failure = Failure{"(T(xi) e^" + weight_string(weights[i]) + ", e^" + weight_string(weights[j]) +
                                  ") = (e^" + weight_string(weights[i]) + ", T(xi) e^" + weight_string(weights[j]) + ")",
                              lhs.to_string(), rhs.to_string()};
          return r;
        }
      }
  }
  return r;
}

/// invariant_apply(C, m_mu) = lk_apply(m_mu) + (rho_k, rho_k) m_mu on orbit sums.
inline SuiteResult thm23(const RootSystem& rs, const CouplingVector& kvec, const Rational& max_height = 2) {
  SuiteResult r{"thm23", rs.spec().name()};
  SymH c = casimir(rs);
  HStarElement rh = rho(rs, kvec);
  RatFunc rr = rs.inner(rh, rh);
  for (const auto& mu : dominant_weights_up_to(rs, max_height)) {
    ++r.cases;
    auto f = orbit_sum(rs, mu);
    auto lhs = invariant_apply(rs, c, f, kvec);
    auto rhs = lk_apply(rs, f, kvec) + rr * f;
    if (lhs != rhs) {
      r.failure = Failure{"D(C) m_" + weight_string(mu) + " = (L_k + (rho,rho)) m_" + weight_string(mu),
                          io::to_json(lhs), io::to_json(rhs)};
      return r;
    }
  }
  return r;
}

inline SuiteResult conjugation(const RootSystem& rs, const CouplingVector& kvec, long bound = 1) {
  SuiteResult r{"conjugation", rs.spec().name()};
  for (const auto& mu : weights_in_box(rs.rank(), bound)) {
    ++r.cases;
    auto v = conjugation_check(rs, LocalizedElement(rs, LaurentElement::monomial(mu)), kvec);
    if (!v.verified) {
      r.failure = Failure{"H_k(delta^1/2 e^" + weight_string(mu) + ") = delta^1/2 (L_k + (rho,rho)) e^" +
                              weight_string(mu),
                          io::to_json(v.lhs), io::to_json(v.rhs)};
      return r;
    }
  }
  return r;
}

inline SuiteResult prop32(const RootSystem& rs, const CouplingVector& kvec) {
  SuiteResult r{"prop32", rs.spec().name()};
  auto rep = special_exponents(rs, kvec);
  auto v = verify_quadratic(rs, rep, kvec);
  r.cases = v.per_exponent.size() + 2;
  for (std::size_t i = 0; i < v.per_exponent.size(); ++i)
    if (!v.per_exponent[i]) {
      r.failure = Failure{"quadratic residual of mu_" + std::to_string(i + 1) + " vanishes",
                          io::to_json(v.residuals[i]), io::to_json(SymTwoDual::zero(rs.rank()))};
      return r;
    }
  if (!v.a_value_cross_check) {
    RatFunc expected = detail::simply_laced_de(rs) ? rep.a_value : rs.inner(rep.exponents.front(), rep.exponents.back());
    r.failure = Failure{"a = (mu_1, mu_{n+1})", rep.a_value.to_string(), expected.to_string()};
    return r;
  }
  if (!v.exactness) {
    r.failure = Failure{"generic weights leave a nonzero residual", "zero residual", "nonzero residual"};
    return r;
  }
  return r;
}

inline SuiteResult relations(const RootSystem& rs, const CouplingVector& kvec) {
  SuiteResult r{"relations", rs.spec().name()};
  auto rep = special_exponents(rs, kvec);
  auto v = consecutive_relations(rs, rep, kvec);
  r.cases = v.checks.size();
  if (const auto* f = v.first_failure()) {
    json ex = json::array();
    for (const auto& mu : rep.exponents) ex.push_back(io::to_json(mu));
    r.failure = Failure{f->name, ex, "relation does not hold"};
  }
  return r;
}

/// dk2_apply(C) = invariant_apply(C) on invariants, and C(lambda_i) = C(rho_k) - a n.
inline SuiteResult compat(const RootSystem& rs, const CouplingVector& kvec, const Rational& max_height = 2,
                          bool operator_part = true) {
  SuiteResult r{"compat", rs.spec().name()};
  SymH c = casimir(rs);
  if (operator_part)
    for (const auto& mu : dominant_weights_up_to(rs, max_height)) {
      ++r.cases;
      auto f = orbit_sum(rs, mu);
      auto lhs = dk2_apply(rs, c, LocalizedElement(rs, f), kvec);
      auto rhs = LocalizedElement(rs, invariant_apply(rs, c, f, kvec));
      if (lhs != rhs) {
        r.failure = Failure{"dk2(C) m_" + weight_string(mu) + " = D_k(C) m_" + weight_string(mu), io::to_json(lhs),
                            io::to_json(rhs)};
        return r;
      }
    }
  auto rep = special_exponents(rs, kvec);
  auto checks = casimir_eigenvalue_check(rs, rep, kvec);
  RatFunc rhs = special_system_rhs(rs, c, kvec, rep.a_value);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    ++r.cases;
    if (!checks[i]) {
      r.failure = Failure{"C(lambda_" + std::to_string(i + 1) + ") = C(rho_k) - a n",
                          c.evaluate(rep.spectral[i]).to_string(), rhs.to_string()};
      return r;
    }
  }
  return r;
}

inline std::vector<SchwarzEntry> expected_schwarz_table() {
  return {{1, ratio(1, 2), std::nullopt}, {2, ratio(2, 5), 10}, {3, ratio(1, 3), 6},
          {5, ratio(1, 4), 4},           {9, ratio(1, 6), 3}};
}

inline json to_json(const std::vector<SchwarzEntry>& table) {
  json a = json::array();
  for (const auto& e : table)
    a.push_back({{"n", e.n}, {"k", io::rational_string(e.k)}, {"q", e.q ? json(*e.q) : json("infinity")}});
  return a;
}

inline SuiteResult schwarz() {
  SuiteResult r{"schwarz", "A"};
  auto table = schwarz_table(100);
  auto expected = expected_schwarz_table();
  ++r.cases;
  bool same = table.size() == expected.size();
  for (std::size_t i = 0; same && i < table.size(); ++i)
    same = table[i].n == expected[i].n && table[i].k == expected[i].k && table[i].q == expected[i].q;
  if (!same) {
    r.failure = Failure{"Schwarz table", to_json(table), to_json(expected)};
    return r;
  }
  ++r.cases;
  auto [d, half] = e8_exponent_difference(ratio(1, 6));
  if (d != -4 || half != -2) {
    r.failure = Failure{"1 - 30k at k = 1/6", json::array({d.get_str(), half.get_str()}), json::array({"-4", "-2"})};
    return r;
  }
  ++r.cases;
  if (!kplus_membership(build_root_system({Family::E, 8}), ratio(1, 6)).inside) {
    r.failure = Failure{"k = 1/6 lies in K+ for E8", false, true};
    return r;
  }
  return r;
}

/// Coupling vector used by a suite when none is given: symbolic, or k = 2 where
/// the identity needs integer couplings.
inline CouplingVector default_couplings(const std::string& suite, const RootSystem& rs) {
  CouplingVector kv = CouplingVector::symbolic();
  if (!rs.reduced()) kv.k2 = RatFunc::kp();
  if (suite == "hermitian" || suite == "conjugation") {
    kv = CouplingVector::single(RatFunc(2));
    if (!rs.reduced()) kv.k2 = RatFunc(2);
  }
  return kv;
}

/// Types swept by a suite when none is given.
inline std::vector<RootSystemSpec> default_types(const std::string& suite) {
  using F = Family;
  if (suite == "commute") return {{F::A, 1}, {F::A, 2}, {F::A, 3}, {F::B, 2}, {F::G, 2}, {F::BC, 1}};
  if (suite == "triangular" || suite == "cross") return {{F::A, 1}, {F::A, 2}, {F::B, 2}, {F::G, 2}, {F::BC, 1}};
  if (suite == "eigen" || suite == "hermitian") return {{F::A, 1}, {F::A, 2}, {F::B, 2}};
  if (suite == "thm23") return {{F::A, 1}, {F::A, 2}, {F::A, 3}, {F::B, 2}};
  if (suite == "conjugation") return {{F::A, 1}, {F::A, 2}};
  if (suite == "compat") return {{F::A, 1}, {F::A, 2}, {F::B, 2}};
  if (suite == "schwarz") return {};
  std::vector<RootSystemSpec> all;
  for (int n = 1; n <= 8; ++n) all.push_back({F::A, n});
  for (int n = 2; n <= 8; ++n) all.push_back({F::B, n});
  for (int n = 2; n <= 8; ++n) all.push_back({F::C, n});
  for (int n = 4; n <= 8; ++n) all.push_back({F::D, n});
  for (int n = 6; n <= 8; ++n) all.push_back({F::E, n});
  all.push_back({F::F, 4});
  all.push_back({F::G, 2});
  return all;
}

inline SuiteResult run(const std::string& suite, const RootSystem& rs, const CouplingVector& kvec) {
  if (suite == "commute") return commute(rs, kvec);
  if (suite == "triangular") return triangular(rs, kvec);
  if (suite == "eigen") return eigen(rs, kvec);
  if (suite == "cross") return cross(rs, kvec);
  if (suite == "hermitian") return hermitian(rs, kvec);
  if (suite == "thm23") return thm23(rs, kvec);
  if (suite == "conjugation") return conjugation(rs, kvec);
  if (suite == "prop32") return prop32(rs, kvec);
  if (suite == "relations") return relations(rs, kvec);
  if (suite == "compat") return compat(rs, kvec);
  if (suite == "schwarz") return schwarz();
  throw DomainError("unknown suite: " + suite);
}

}  // namespace trigdunkl::verify
