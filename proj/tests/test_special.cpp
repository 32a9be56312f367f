#include <gtest/gtest.h>

#include "trigdunkl/special.hpp"

using namespace trigdunkl;

namespace {

const RatFunc K = RatFunc::k();
const RatFunc KP = RatFunc::kp();
const CouplingVector SYM = CouplingVector::symbolic();
const RatFunc HALF(ratio(1, 2));

HStarElement w(std::vector<RatFunc> c) { return HStarElement(std::move(c)); }

std::vector<RootSystemSpec> small_types() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 4}, {Family::B, 2}, {Family::B, 4}, {Family::C, 3},
          {Family::D, 4}, {Family::D, 5}, {Family::E, 6}, {Family::F, 4}, {Family::G, 2}};
}

}  // namespace

TEST(SpecialExponents, CountAndEndpoints) {
  for (const auto& spec : small_types()) {
    RootSystem rs = build_root_system(spec);
    auto rep = special_exponents(rs, SYM);
    ASSERT_EQ(rep.exponents.size(), static_cast<std::size_t>(spec.rank + 1)) << spec.name();
    if (spec.family == Family::D || spec.family == Family::E) continue;
    HStarElement first = HStarElement::zero(spec.rank), last = HStarElement::zero(spec.rank);
    first.c[0] = -*rep.x;
    last.c[spec.rank - 1] = -*rep.y;
    EXPECT_EQ(rep.exponents.front(), first) << spec.name();
    EXPECT_EQ(rep.exponents.back(), last) << spec.name();
  }
}

TEST(SpecialExponents, XYParameters) {
  auto xy = [](RootSystemSpec s) { return *xy_parameters(build_root_system(s), SYM); };
  EXPECT_EQ(xy({Family::A, 3}), std::pair(RatFunc(2) * (K + KP), RatFunc(2) * (K - KP)));
  EXPECT_EQ(xy({Family::B, 4}), std::pair(RatFunc(2) * K + KP, RatFunc(2) * K));
  EXPECT_EQ(xy({Family::C, 4}), std::pair(RatFunc(2) * K + RatFunc(2) * KP, K));
  EXPECT_EQ(xy({Family::D, 6}), std::pair(RatFunc(4) * K, RatFunc(2) * K));
  EXPECT_EQ(xy({Family::F, 4}), std::pair(K + KP, RatFunc(2) * K + KP));
  EXPECT_EQ(xy({Family::G, 2}), std::pair(HALF * (K + RatFunc(3) * KP), HALF * (K + KP)));
  EXPECT_FALSE(xy_parameters(build_root_system({Family::E, 7}), SYM).has_value());
}

TEST(SpecialExponents, ExplicitF4AndE8Entries) {
  auto f4 = special_exponents(build_root_system({Family::F, 4}), SYM);
  EXPECT_EQ(f4.exponents[2], w({RatFunc(0), KP - RatFunc(2) * K, RatFunc(2) * K - RatFunc(2) * KP, RatFunc(0)}));
  auto e8 = special_exponents(build_root_system({Family::E, 8}), SYM);
  std::vector<RatFunc> mu7(8);
  mu7[6] = RatFunc(-4) * K;
  mu7[7] = RatFunc(3) * K;
  EXPECT_EQ(e8.exponents[6], w(mu7));
  EXPECT_EQ(e8.exponents[8], e8.exponents[3]);
  auto e6 = special_exponents(build_root_system({Family::E, 6}), SYM);
  std::vector<RatFunc> mu6(6);
  mu6[5] = RatFunc(-3) * K;
  EXPECT_EQ(e6.exponents[5], w(mu6));
}

TEST(SpecialExponents, AValues) {
  EXPECT_EQ(special_exponents(build_root_system({Family::E, 6}), SYM).a_value, RatFunc(6) * K * K);
  EXPECT_EQ(special_exponents(build_root_system({Family::E, 7}), SYM).a_value, RatFunc(12) * K * K);
  EXPECT_EQ(special_exponents(build_root_system({Family::E, 8}), SYM).a_value, RatFunc(30) * K * K);
  EXPECT_EQ(special_exponents(build_root_system({Family::D, 7}), SYM).a_value, RatFunc(5) * K * K);
  // chain types: a = x y (varpi_1, varpi_n) = (mu_1, mu_{n+1})
  for (auto spec : {RootSystemSpec{Family::A, 3}, RootSystemSpec{Family::B, 3}, RootSystemSpec{Family::G, 2}}) {
    RootSystem rs = build_root_system(spec);
    auto rep = special_exponents(rs, SYM);
    EXPECT_EQ(rep.a_value, rs.inner(rep.exponents.front(), rep.exponents.back())) << spec.name();
  }
}

TEST(SpecialExponents, NonReducedRejected) {
  EXPECT_THROW(special_exponents(build_root_system({Family::BC, 2}), SYM), DomainError);
}

TEST(Quadratic, HoldsForSmallTypesAndFailsGenerically) {
  for (const auto& spec : small_types()) {
    RootSystem rs = build_root_system(spec);
    auto rep = special_exponents(rs, SYM);
    auto v = verify_quadratic(rs, rep, SYM);
    EXPECT_TRUE(v.all()) << spec.name();
    EXPECT_FALSE(quadratic_residual(rs, generic_test_weight(spec.rank), SYM, rep.a_value).is_zero());
  }
}

TEST(Quadratic, WrongAValueBreaksIt) {
  RootSystem rs = build_root_system({Family::D, 5});
  auto rep = special_exponents(rs, SYM);
  rep.a_value = RatFunc(2) * K * K;
  auto v = verify_quadratic(rs, rep, SYM);
  EXPECT_FALSE(v.all());
  EXPECT_FALSE(v.per_exponent[0]);
}

TEST(Quadratic, ADropsThePrimeTermWithoutIt) {
  // with kp = 0 the A_n equation has no alpha' contribution and still holds
  RootSystem rs = build_root_system({Family::A, 3});
  CouplingVector kv{K, RatFunc(0), RatFunc()};
  auto rep = special_exponents(rs, kv);
  EXPECT_TRUE(verify_quadratic(rs, rep, kv).all());
}

TEST(Relations, HoldForSmallTypes) {
  for (const auto& spec : small_types()) {
    RootSystem rs = build_root_system(spec);
    auto rel = consecutive_relations(rs, special_exponents(rs, SYM), SYM);
    EXPECT_TRUE(rel.all()) << spec.name() << ": " << (rel.first_failure() ? rel.first_failure()->name : "");
  }
}

TEST(Relations, G2FirstStepIsAlongAlphaOne) {
  RootSystem rs = build_root_system({Family::G, 2});
  auto rep = special_exponents(rs, SYM);
  HStarElement a1(rs.simple_root(1).weight), a2(rs.simple_root(2).weight);
  HStarElement step = rep.exponents[1] - rep.exponents[0];
  EXPECT_EQ(step, HALF * (RatFunc(3) * KP - K) * a1);
  EXPECT_NE(step, HALF * (KP - K) * a2);
  EXPECT_EQ(rep.exponents[2] - rep.exponents[1], HALF * (KP - K) * a2);
}

TEST(Relations, TypeAWithoutSecondCouplingIsSelfDual) {
  for (int n = 1; n <= 6; ++n) {
    RootSystem rs = build_root_system({Family::A, n});
    CouplingVector kv{K, RatFunc(0), RatFunc()};
    auto rep = special_exponents(rs, kv);
    // -w0 permutes fundamental weights
    HStarElement image = HStarElement::zero(n);
    for (int i = 0; i < n; ++i) image.c[rs.w0_permutation()[i]] = -rep.exponents.front()[i];
    EXPECT_EQ(-image, rep.exponents.back()) << n;
  }
}

TEST(Relations, DynkinDistances) {
  RootSystem e8 = build_root_system({Family::E, 8});
  ASSERT_EQ(triple_node(e8), 3);
  EXPECT_EQ(dynkin_distances(e8, 3), (std::vector<int>{2, 1, 1, 0, 1, 2, 3, 4}));
  RootSystem d5 = build_root_system({Family::D, 5});
  EXPECT_EQ(triple_node(d5), 2);
  EXPECT_FALSE(triple_node(build_root_system({Family::A, 5})).has_value());
}

TEST(Compat, DegreeTwoMapMatchesInvariantOperator) {
  for (auto spec : {RootSystemSpec{Family::A, 1}, RootSystemSpec{Family::A, 2}, RootSystemSpec{Family::B, 2}}) {
    RootSystem rs = build_root_system(spec);
    SymH c = casimir(rs);
    for (const auto& mu : {Weight(std::vector<long>(spec.rank, 0)), Weight(std::vector<long>(spec.rank, 1))}) {
      auto f = orbit_sum(rs, mu);
      EXPECT_EQ(dk2_apply(rs, c, LocalizedElement(rs, f), SYM), LocalizedElement(rs, invariant_apply(rs, c, f, SYM)))
          << spec.name();
    }
  }
}

TEST(Compat, DegreeTwoMapNeedsHomogeneousInput) {
  RootSystem rs = build_root_system({Family::A, 1});
  SymH p = casimir(rs);
  p.constant = RatFunc(1);
  EXPECT_THROW(dk2_apply(rs, p, LocalizedElement(rs, LaurentElement::constant(1, RatFunc(1))), SYM), DomainError);
}

TEST(Compat, DualCasimirPairsToRank) {
  for (const auto& spec : small_types()) {
    RootSystem rs = build_root_system(spec);
    EXPECT_EQ(dual_casimir(rs).pairing(casimir(rs)), RatFunc(spec.rank)) << spec.name();
  }
}

TEST(Compat, CasimirEigenvalueOfSpectralParameters) {
  for (const auto& spec : small_types()) {
    RootSystem rs = build_root_system(spec);
    auto rep = special_exponents(rs, SYM);
    HStarElement r = rho(rs, SYM);
    RatFunc expected = rs.inner(r, r) - rep.a_value * RatFunc(spec.rank);
    for (const auto& lam : rep.spectral) EXPECT_EQ(rs.inner(lam, lam), expected) << spec.name();
    for (bool ok : casimir_eigenvalue_check(rs, rep, SYM)) EXPECT_TRUE(ok);
  }
}

TEST(Spectral, ReducibilityWitnesses) {
  RootSystem a1 = build_root_system({Family::A, 1});
  CouplingVector kv = CouplingVector::single(RatFunc(ratio(1, 3)));
  auto wit = reducibility_check(a1, {ratio(2, 3)}, kv);
  ASSERT_EQ(wit.size(), 1u);
  EXPECT_EQ(wit[0].sign, 1);
  EXPECT_TRUE(reducibility_check(a1, {ratio(1, 2)}, kv).empty());
  EXPECT_EQ(reducibility_check(a1, {Rational(0)}, CouplingVector::single(RatFunc(0))).size(), 2u);
}

TEST(Spectral, SpecialExponentsSatisfyIndicialEquation) {
  RootSystem rs = build_root_system({Family::B, 3});
  const Rational k = ratio(1, 7), kp = ratio(2, 9);
  CouplingVector kv{RatFunc(k), RatFunc(kp), RatFunc()};
  auto rep = special_exponents(rs, kv);
  for (std::size_t i = 0; i < rep.exponents.size(); ++i) {
    auto mu = evaluate(rep.exponents[i], 0);
    auto lam = evaluate(rep.spectral[i], 0);
    EXPECT_TRUE(satisfies_indicial(rs, mu, lam, kv));
    mu[0] += ratio(1, 5);
    EXPECT_FALSE(satisfies_indicial(rs, mu, lam, kv));
  }
}

TEST(Spectral, MonodromyEigenvalues) {
  RootSystem e8 = build_root_system({Family::E, 8});
  for (const auto& g : monodromy_spec(e8, CouplingVector::single(RatFunc(0)))) {
    EXPECT_EQ(g.ones, 8);
    EXPECT_EQ(g.rotation, 0);
  }
  for (const auto& g : monodromy_spec(e8, CouplingVector::single(RatFunc(ratio(1, 6))))) {
    EXPECT_EQ(g.rotation, ratio(1, 6));
    EXPECT_FALSE(g.root_of_stated);
    EXPECT_TRUE(g.root_of_conjugate);
  }
  RootSystem b2 = build_root_system({Family::B, 2});
  auto gs = monodromy_spec(b2, CouplingVector{RatFunc(ratio(-1, 4)), RatFunc(ratio(1, 2)), RatFunc()});
  EXPECT_EQ(gs[0].rotation, ratio(3, 4));
  EXPECT_FALSE(gs[0].root_of_stated);
  EXPECT_EQ(gs[1].rotation, ratio(1, 2));
  EXPECT_TRUE(gs[1].root_of_stated);
}

TEST(Spectral, HyperbolicParameterRange) {
  RootSystem e8 = build_root_system({Family::E, 8});
  EXPECT_TRUE(kplus_membership(e8, ratio(1, 6)).inside);
  EXPECT_FALSE(kplus_membership(e8, ratio(1, 5)).inside);
  EXPECT_FALSE(kplus_membership(e8, 0).inside);
  RootSystem d4 = build_root_system({Family::D, 4});
  EXPECT_TRUE(kplus_membership(d4, ratio(1, 4)).inside);
  EXPECT_FALSE(kplus_membership(d4, ratio(1, 2)).inside);
  RootSystem a2 = build_root_system({Family::A, 2});
  auto v = kplus_membership(a2, ratio(1, 4), 0);
  EXPECT_TRUE(v.inside);
  EXPECT_EQ(*v.x, ratio(3, 8));
  EXPECT_FALSE(kplus_membership(a2, ratio(1, 2), 0).inside);
  EXPECT_FALSE(kplus_membership(a2, ratio(1, 4), ratio(1, 4)).inside);  // y = 0
}

TEST(Arithmetic, SchwarzTable) {
  auto table = schwarz_table(100);
  ASSERT_EQ(table.size(), 5u);
  std::vector<int> ns;
  for (const auto& e : table) ns.push_back(e.n);
  EXPECT_EQ(ns, (std::vector<int>{1, 2, 3, 5, 9}));
  EXPECT_FALSE(table[0].q.has_value());
  EXPECT_EQ(table[1].q, 10);
  EXPECT_EQ(table[2].q, 6);
  EXPECT_EQ(table[3].q, 4);
  EXPECT_EQ(table[4].q, 3);
  EXPECT_EQ(table[4].k, ratio(1, 6));
  EXPECT_EQ(schwarz_table(9).size(), 5u);
  EXPECT_EQ(schwarz_table(8).size(), 4u);
}

TEST(Arithmetic, E8ExponentDifference) {
  EXPECT_EQ(e8_exponent_difference(ratio(1, 6)), std::pair(Rational(-4), Rational(-2)));
  EXPECT_EQ(e8_exponent_difference(0), std::pair(Rational(1), ratio(1, 2)));
}
