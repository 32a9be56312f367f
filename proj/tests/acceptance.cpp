// Acceptance run: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "trigdunkl/trigdunkl.hpp"

using namespace trigdunkl;
namespace v = trigdunkl::verify;

namespace {

using Clock = std::chrono::steady_clock;

const RatFunc K = RatFunc::k();
const RatFunc KP = RatFunc::kp();

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const v::SuiteResult& r) {
    if (!r.passed() && ok) {
      ok = false;
      detail = v::to_json(r).dump();
    }
  }
};

RootSystem make(Family f, int n) { return build_root_system({f, n}); }

CouplingVector with_k2(const RootSystem& rs, CouplingVector kv, RatFunc k2) {
  if (!rs.reduced()) kv.k2 = std::move(k2);
  return kv;
}

Outcome commutativity(double& seconds) {
  Outcome o;
  auto t0 = Clock::now();
  const std::vector<RootSystemSpec> types{{Family::A, 1}, {Family::A, 2}, {Family::A, 3},
                                          {Family::B, 2}, {Family::G, 2}, {Family::BC, 1}};
  for (const auto& s : types) {
    RootSystem rs = build_root_system(s);
    o.require(v::commute(rs, with_k2(rs, CouplingVector::symbolic(), KP), 3));
  }
  seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(seconds < 60, "runtime " + std::to_string(seconds) + " s exceeds 60 s");
  return o;
}

Outcome eigenvalues() {
  Outcome o;
  for (const auto& s : {RootSystemSpec{Family::A, 1}, RootSystemSpec{Family::A, 2}, RootSystemSpec{Family::B, 2}})
    o.require(v::eigen(build_root_system(s), CouplingVector::symbolic(), 2));
  RootSystem a1 = make(Family::A, 1);
  auto sym = CouplingVector::symbolic();
  o.require(jacobi(a1, Weight({0}), sym) == LaurentElement::monomial(Weight({0})), "E_k(0) = 1");
  auto expected = LaurentElement::monomial(Weight({-1})) + LaurentElement::monomial(Weight({1}), K / (RatFunc(1) + K));
  o.require(jacobi(a1, Weight({-1}), sym) == expected, "E_k(-varpi) closed form");
  return o;
}

Outcome hermiticity() {
  Outcome o;
  for (long k : {1L, 2L})
    for (const auto& s : {RootSystemSpec{Family::A, 1}, RootSystemSpec{Family::A, 2}, RootSystemSpec{Family::B, 2}})
      o.require(v::hermitian(build_root_system(s), CouplingVector::single(RatFunc(k)), 2));
  return o;
}

Outcome laplacian_identities() {
  Outcome o;
  for (const auto& s : {RootSystemSpec{Family::A, 1}, RootSystemSpec{Family::A, 2}, RootSystemSpec{Family::A, 3},
                        RootSystemSpec{Family::B, 2}})
    o.require(v::thm23(build_root_system(s), CouplingVector::symbolic(), 2));
  for (const auto& s : {RootSystemSpec{Family::A, 1}, RootSystemSpec{Family::A, 2}})
    o.require(v::conjugation(build_root_system(s), CouplingVector::single(RatFunc(2)), 1));
  return o;
}

RatFunc expected_a(const RootSystemSpec& s) {
  const RatFunc k2 = K * K;
  if (s.family == Family::E) return RatFunc(s.rank == 6 ? 6 : s.rank == 7 ? 12 : 30) * k2;
  return RatFunc(static_cast<long>(s.rank - 2)) * k2;
}

Outcome quadratic(double& seconds) {
  Outcome o;
  auto t0 = Clock::now();
  for (const auto& s : v::default_types("prop32")) {
    RootSystem rs = build_root_system(s);
    auto sym = CouplingVector::symbolic();
    o.require(v::prop32(rs, sym));
    auto rep = special_exponents(rs, sym);
    auto q = verify_quadratic(rs, rep, sym);
    o.require(q.exactness, "generic weight has zero residual in " + s.name());
    if (s.family == Family::D || s.family == Family::E)
      o.require(rep.a_value == expected_a(s), "a-value of " + s.name() + " is " + rep.a_value.to_string());
  }
  seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(seconds < 120, "runtime " + std::to_string(seconds) + " s exceeds 120 s");
  return o;
}

Outcome relations() {
  Outcome o;
  auto sym = CouplingVector::symbolic();
  for (int n = 1; n <= 8; ++n) {
    RootSystem rs = make(Family::A, n);
    auto rep = special_exponents(rs, sym);
    for (int i = 1; i <= n; ++i)
      o.require(rs.reflect(i, rep.spectral[i - 1]) == rep.spectral[i],
                "A" + std::to_string(n) + ": lambda_" + std::to_string(i + 1) + " = s_" + std::to_string(i) +
                    " lambda_" + std::to_string(i));
  }
  for (const auto& s : v::default_types("relations")) o.require(v::relations(build_root_system(s), sym));
  return o;
}

Outcome compatibility() {
  Outcome o;
  auto sym = CouplingVector::symbolic();
  for (const auto& s : {RootSystemSpec{Family::A, 1}, RootSystemSpec{Family::A, 2}, RootSystemSpec{Family::B, 2}})
    o.require(v::compat(build_root_system(s), sym, 2, true));
  for (const auto& s : v::default_types("prop32")) o.require(v::compat(build_root_system(s), sym, 0, false));
  return o;
}

Outcome arithmetic() {
  Outcome o;
  auto table = schwarz_table(100);
  const std::vector<std::pair<int, std::optional<long>>> expected{
      {1, std::nullopt}, {2, 10}, {3, 6}, {5, 4}, {9, 3}};
  bool same = table.size() == expected.size();
  for (std::size_t i = 0; same && i < table.size(); ++i)
    same = table[i].n == expected[i].first && table[i].q == expected[i].second &&
           table[i].k * (table[i].n + 3) == 2;
  o.require(same, "Schwarz table " + v::to_json(table).dump());
  auto [d, half] = e8_exponent_difference(ratio(1, 6));
  o.require(d == -4 && half == -2, "E8 exponent difference at 1/6 is (" + d.get_str() + ", " + half.get_str() + ")");
  o.require(kplus_membership(make(Family::E, 8), ratio(1, 6)).inside, "1/6 not in K+ for E8");
  return o;
}

Outcome degenerate() {
  Outcome o;
  const CouplingVector zero{RatFunc(0), RatFunc(0), RatFunc(0)};
  std::vector<RootSystemSpec> types{{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
                                    {Family::C, 3}, {Family::G, 2}, {Family::BC, 1}, {Family::BC, 2}};
  for (const auto& s : types) {
    RootSystem rs = build_root_system(s);
    for (const auto& mu : v::weights_in_box(s.rank, 2)) {
      auto f = LaurentElement::monomial(mu);
      for (const auto& xi : v::coroot_basis(s.rank))
        o.require(dunkl_apply(rs, xi, f, zero) == LaurentElement::monomial(mu, pair(mu, xi)),
                  s.name() + ": T_0(xi) e^" + v::weight_string(mu));
      if (rs.is_dominant(mu))
        o.require(jacobi(rs, mu, zero) == f, s.name() + ": E_0(" + v::weight_string(mu) + ") = e^mu");
    }
  }
  for (const auto& s : v::default_types("prop32")) {
    RootSystem rs = build_root_system(s);
    for (const auto& g : monodromy_spec(rs, zero))
      o.require(g.ones == s.rank && g.rotation == 0,
                s.name() + ": generator " + std::to_string(g.node) + " spectrum is not {1 x n, -1}");
  }
  return o;
}

}  // namespace

int main() {
  double t_commute = 0, t_prop32 = 0;
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"commutativity of Dunkl operators (exact, < 60 s)", [&] { return commutativity(t_commute); }},
      {"eigenvalue equation and closed forms (exact)", eigenvalues},
      {"hermiticity at k = 1, 2 (exact)", hermiticity},
      {"Casimir vs Laplacian and conjugation at k = 2 (exact)", laplacian_identities},
      {"quadratic residuals and a-values (exact, < 120 s)", [&] { return quadratic(t_prop32); }},
      {"relations between special exponents (exact)", relations},
      {"dk2 compatibility and Casimir eigenvalues (exact)", compatibility},
      {"Schwarz table, E8 difference, K+ membership (exact)", arithmetic},
      {"degenerate coupling k = k' = 0 (exact)", degenerate},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("[%s] %zu. %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(), dt,
                o.ok ? "" : ": ", o.detail.c_str());
    if (!o.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
