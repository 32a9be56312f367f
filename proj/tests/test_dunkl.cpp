#include <gtest/gtest.h>

#include "trigdunkl/dunkl.hpp"

using namespace trigdunkl;

namespace {

const RatFunc K = RatFunc::k();
const RatFunc KP = RatFunc::kp();
const CouplingVector SYM = CouplingVector::symbolic();

LaurentElement e(std::vector<long> w, RatFunc c = RatFunc(1)) { return LaurentElement::monomial(Weight(std::move(w)), c); }

// Eigenfunction of every T(b_i) with leading term e^mu, found by plain
// Gaussian elimination on the unknown coefficients over the saturated set.
LaurentElement eigenfunction_by_elimination(const RootSystem& rs, const Weight& mu, const CouplingVector& kv) {
  const int n = rs.rank();
  std::vector<Weight> support;
  for (const auto& nu : rs.saturated_set(rs.dominant(mu)))
    if (nu != mu) support.push_back(nu);
  const std::size_t m = support.size();
  HStarElement mt = mu_tilde(rs, mu, kv);
  // rows: coefficient of e^lambda in (T(b_i) - mu~(b_i)) E for every lambda and i
  std::vector<std::vector<RatFunc>> rows;
  std::vector<Weight> all = support;
  all.push_back(mu);
  std::set<Weight> lambdas(all.begin(), all.end());
  for (int i = 0; i < n; ++i) {
    HElement xi = HElement::basis(n, i);
    RatFunc ev = pair(mt, xi);
    std::vector<LaurentElement> images;
    for (const auto& nu : all) images.push_back(dunkl_apply(rs, xi, e(nu.c), kv) - ev * e(nu.c));
    for (const auto& lam : lambdas) {
      std::vector<RatFunc> row(m + 1);
      for (std::size_t j = 0; j < m; ++j) row[j] = images[j].coeff(lam);
      row[m] = -images[m].coeff(lam);
      rows.push_back(row);
    }
  }
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    RatFunc inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q)
      if (q != r && !rows[q][c].is_zero()) {
        RatFunc f = rows[q][c];
        for (std::size_t t = 0; t <= m; ++t) rows[q][t] -= f * rows[r][t];
      }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t q = r; q < rows.size(); ++q)
    if (!rows[q][m].is_zero()) throw std::runtime_error("inconsistent eigen system");
  if (r != m) throw std::runtime_error("eigen system not uniquely solvable");
  LaurentElement out = e(mu.c);
  for (std::size_t q = 0; q < r; ++q) out.add_term(support[pivot_col[q]], rows[q][m]);
  return out;
}

}  // namespace

TEST(Rho, RankOneAndBC) {
  EXPECT_EQ(rho(build_root_system({Family::A, 1}), SYM), HStarElement(std::vector<RatFunc>{K}));
  RootSystem bc1 = build_root_system({Family::BC, 1});
  CouplingVector kv{K, KP, RatFunc(3)};
  // varpi_1 = e_1: e_1 contributes k/2 and 2e_1 contributes 3
  EXPECT_EQ(rho(bc1, kv), HStarElement(std::vector<RatFunc>{RatFunc(ratio(1, 2)) * K + RatFunc(3)}));
}

TEST(MuTilde, DominantAntidominantAndZero) {
  RootSystem a1 = build_root_system({Family::A, 1});
  EXPECT_EQ(mu_tilde(a1, Weight({1}), SYM), HStarElement(std::vector<RatFunc>{RatFunc(1) + K}));
  EXPECT_EQ(mu_tilde(a1, Weight({-1}), SYM), HStarElement(std::vector<RatFunc>{-(RatFunc(1) + K)}));
  RootSystem b2 = build_root_system({Family::B, 2});
  EXPECT_EQ(mu_tilde(b2, Weight({0, 0}), SYM), -rho(b2, SYM));
  EXPECT_EQ(mu_tilde(b2, Weight({1, 2}), SYM), HStarElement(Weight({1, 2})) + rho(b2, SYM));
}

TEST(Dunkl, RankOneHandComputations) {
  RootSystem a1 = build_root_system({Family::A, 1});
  HElement xi = HElement::basis(1, 0);
  EXPECT_EQ(dunkl_apply(a1, xi, e({1}), SYM), e({1}, RatFunc(1) + K));
  EXPECT_EQ(dunkl_apply(a1, xi, e({-1}), SYM), e({-1}, -(RatFunc(1) + K)) + e({1}, RatFunc(-2) * K));
}

TEST(Dunkl, ConstantsPickUpMinusRho) {
  for (auto spec : {RootSystemSpec{Family::A, 3}, RootSystemSpec{Family::G, 2}, RootSystemSpec{Family::BC, 2}}) {
    RootSystem rs = build_root_system(spec);
    CouplingVector kv{K, KP, KP};
    for (int i = 0; i < rs.rank(); ++i) {
      HElement xi = HElement::basis(rs.rank(), i);
      EXPECT_EQ(dunkl_apply(rs, xi, LaurentElement::constant(rs.rank(), RatFunc(1)), kv),
                LaurentElement::constant(rs.rank(), -pair(rho(rs, kv), xi)));
    }
  }
}

TEST(Dunkl, ZeroCouplingIsTheDerivative) {
  RootSystem rs = build_root_system({Family::C, 3});
  CouplingVector zero = CouplingVector::single(RatFunc(0));
  HElement xi({RatFunc(1), RatFunc(-2), RatFunc(5)});
  Weight mu({2, -1, 1});
  EXPECT_EQ(dunkl_apply(rs, xi, e(mu.c), zero), e(mu.c, pair(mu, xi)));
}

TEST(Jacobi, ClosedFormsInRankOne) {
  RootSystem a1 = build_root_system({Family::A, 1});
  EXPECT_EQ(jacobi(a1, Weight({0}), SYM), e({0}));
  EXPECT_EQ(jacobi(a1, Weight({1}), SYM), e({1}));
  EXPECT_EQ(jacobi(a1, Weight({-1}), SYM), e({-1}) + e({1}, K / (RatFunc(1) + K)));
}

TEST(Jacobi, AgreesWithEliminationOracle) {
  for (auto spec : {RootSystemSpec{Family::A, 1}, RootSystemSpec{Family::A, 2}, RootSystemSpec{Family::B, 2}}) {
    RootSystem rs = build_root_system(spec);
    std::vector<Weight> mus;
    if (spec.rank == 1)
      mus = {Weight({-2}), Weight({2}), Weight({-3})};
    else
      mus = {Weight({-1, 0}), Weight({1, -1}), Weight({0, -1}), Weight({-1, 1}), Weight({1, 0})};
    for (const auto& mu : mus)
      EXPECT_EQ(jacobi(rs, mu, SYM), eigenfunction_by_elimination(rs, mu, SYM)) << spec.name() << " " << mu.c[0];
  }
}

TEST(Jacobi, ZeroCouplingGivesMonomials) {
  RootSystem rs = build_root_system({Family::A, 2});
  CouplingVector zero = CouplingVector::single(RatFunc(0));
  for (const auto& mu : {Weight({2, 1}), Weight({-1, 2}), Weight({0, -2})}) EXPECT_EQ(jacobi(rs, mu, zero), e(mu.c));
}

TEST(Jacobi, ZeroCouplingWithCoincidentEigenvalues) {
  // large saturated sets, where eigenvalues at zero coupling are just the weights
  RootSystem g2 = build_root_system({Family::G, 2});
  CouplingVector zero = CouplingVector::single(RatFunc(0));
  for (const auto& mu : {Weight({2, 2}), Weight({2, 1})}) EXPECT_EQ(jacobi(g2, mu, zero), e(mu.c));
}

TEST(Jacobi, ResonanceIsReported) {
  RootSystem a1 = build_root_system({Family::A, 1});
  EXPECT_THROW(jacobi(a1, Weight({-1}), CouplingVector::single(RatFunc(-1))), ResonanceError);
}

TEST(InvariantApply, ConstantFunction) {
  RootSystem rs = build_root_system({Family::B, 2});
  SymH c = casimir(rs);
  EXPECT_EQ(invariant_apply(rs, c, LaurentElement::constant(2, RatFunc(1)), SYM),
            LaurentElement::constant(2, c.evaluate(rho(rs, SYM))));
}

TEST(InvariantApply, RankOneOrbitSum) {
  RootSystem a1 = build_root_system({Family::A, 1});
  HElement b = HElement::basis(1, 0);
  auto f = e({1}) + e({-1});
  EXPECT_EQ(invariant_apply(a1, SymH::product(b, b), f, SYM), (RatFunc(1) + K) * (RatFunc(1) + K) * f);
  // C = (varpi, varpi) b^2 = b^2 / 2
  EXPECT_EQ(invariant_apply(a1, casimir(a1), f, SYM), RatFunc(ratio(1, 2)) * (RatFunc(1) + K) * (RatFunc(1) + K) * f);
}

TEST(InvariantApply, A2OrbitSumEigenvalue) {
  RootSystem rs = build_root_system({Family::A, 2});
  auto f = orbit_sum(rs, Weight({1, 0}));
  SymH c = casimir(rs);
  HStarElement lam = HStarElement(Weight({1, 0})) + rho(rs, SYM);
  EXPECT_EQ(invariant_apply(rs, c, f, SYM), c.evaluate(lam) * f);
  HStarElement r = rho(rs, SYM);
  EXPECT_EQ(lk_apply(rs, f, SYM) + rs.inner(r, r) * f, c.evaluate(lam) * f);
}

TEST(InvariantApply, PreconditionsAreChecked) {
  RootSystem rs = build_root_system({Family::A, 2});
  EXPECT_THROW(invariant_apply(rs, casimir(rs), e({1, 0}), SYM), PreconditionError);
  HElement b = HElement::basis(2, 0);
  EXPECT_THROW(invariant_apply(rs, SymH::product(b, b), orbit_sum(rs, Weight({1, 0})), SYM), PreconditionError);
}

TEST(InvariantApply, CommutesWithWeylGroup) {
  RootSystem rs = build_root_system({Family::B, 2});
  auto out = invariant_apply(rs, casimir(rs), orbit_sum(rs, Weight({1, 1})), SYM);
  for (int node = 1; node <= 2; ++node) EXPECT_EQ(reflect(rs, node, out), out);
}

TEST(LkApply, RankOne) {
  RootSystem a1 = build_root_system({Family::A, 1});
  auto f = e({1}) + e({-1});
  EXPECT_EQ(lk_apply(a1, f, SYM), (RatFunc(ratio(1, 2)) + K) * f);
  EXPECT_TRUE(lk_apply(a1, LaurentElement::constant(1, RatFunc(1)), SYM).is_zero());
  EXPECT_THROW(lk_apply(a1, e({1}), SYM), PreconditionError);
}

TEST(Hamiltonian, FreeLaplacianAtZeroCoupling) {
  RootSystem rs = build_root_system({Family::G, 2});
  LocalizedElement f(rs, e({1, -1}));
  auto h = hamiltonian_apply(rs, f, CouplingVector::single(RatFunc(0)));
  EXPECT_EQ(h, LocalizedElement(rs, e({1, -1}, RatFunc(rs.inner(Weight({1, -1}), Weight({1, -1}))))));
}

TEST(Hamiltonian, RankOnePotential) {
  RootSystem a1 = build_root_system({Family::A, 1});
  auto h = hamiltonian_apply(a1, LocalizedElement(a1, e({0})), SYM);
  LocalizedElement expected(a1, e({-2}, RatFunc(2) * K * (RatFunc(1) - K)), {2});
  EXPECT_EQ(h, expected);
}

TEST(Hamiltonian, BCOneUsesDoubledCoupling) {
  RootSystem bc1 = build_root_system({Family::BC, 1});
  const RatFunc K2 = KP;
  CouplingVector kv{K, KP, K2};
  auto h = hamiltonian_apply(bc1, LocalizedElement(bc1, e({0})), kv);
  // e_1 has (a,a) = 1, 2e_1 has (a,a) = 4
  std::size_t i1 = *bc1.find_root({1}), i2 = *bc1.find_root({2});
  std::vector<int> d1(2, 0), d2(2, 0);
  d1[i1] = 2;
  d2[i2] = 2;
  LocalizedElement t1(bc1, e({-1}, K * (RatFunc(1) - K - RatFunc(2) * K2)), d1);
  LocalizedElement t2(bc1, e({-2}, RatFunc(4) * K2 * (RatFunc(1) - K2)), d2);
  EXPECT_EQ(h, add(bc1, t1, t2));
}

TEST(Conjugation, EvenCouplings) {
  RootSystem a1 = build_root_system({Family::A, 1});
  CouplingVector two = CouplingVector::single(RatFunc(2));
  EXPECT_TRUE(conjugation_check(a1, LocalizedElement(a1, e({0})), two).verified);
  EXPECT_TRUE(conjugation_check(a1, LocalizedElement(a1, e({1})), CouplingVector::single(RatFunc(0))).verified);
  RootSystem a2 = build_root_system({Family::A, 2});
  EXPECT_TRUE(conjugation_check(a2, LocalizedElement(a2, e({1, 0})), two).verified);
  EXPECT_THROW(conjugation_check(a1, LocalizedElement(a1, e({0})), CouplingVector::single(RatFunc(1))), DomainError);
  EXPECT_THROW(conjugation_check(a1, LocalizedElement(a1, e({0})), SYM), DomainError);
}

TEST(SymH, CasimirIsInvariantAndEvaluatesTheForm) {
  for (auto spec : {RootSystemSpec{Family::A, 3}, RootSystemSpec{Family::F, 4}, RootSystemSpec{Family::BC, 2}}) {
    RootSystem rs = build_root_system(spec);
    SymH c = casimir(rs);
    EXPECT_TRUE(is_w_invariant(rs, c));
    Weight w = Weight::zero(rs.rank());
    w.c[0] = 2;
    w.c[rs.rank() - 1] -= 1;
    EXPECT_EQ(c.evaluate(HStarElement(w)), RatFunc(rs.inner(w, w)));
  }
}
