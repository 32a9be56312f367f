#include <gtest/gtest.h>

#include "trigdunkl/io.hpp"
#include "trigdunkl/verify.hpp"

using namespace trigdunkl;
using io::json;

namespace {
const CouplingVector SYM = CouplingVector::symbolic();
}

TEST(Json, LaurentRoundTrip) {
  for (auto spec : {RootSystemSpec{Family::A, 2}, RootSystemSpec{Family::B, 2}, RootSystemSpec{Family::G, 2}}) {
    RootSystem rs = build_root_system(spec);
    for (const auto& mu : {Weight({-1, 0}), Weight({1, -1}), Weight({0, -2})}) {
      auto e = jacobi(rs, mu, SYM);
      json j = io::to_json(e);
      EXPECT_EQ(io::laurent_from_json(json::parse(j.dump())), e);
    }
  }
}

TEST(Json, LaurentShape) {
  RootSystem a1 = build_root_system({Family::A, 1});
  json j = io::to_json(jacobi(a1, Weight({-1}), SYM));
  EXPECT_EQ(j.dump(), R"j([{"weight":[-1],"coeff":"1"},{"weight":[1],"coeff":"(k) / (k + 1)"}])j");
}

TEST(Json, LocalizedRoundTrip) {
  RootSystem rs = build_root_system({Family::B, 2});
  auto h = hamiltonian_apply(rs, LocalizedElement(rs, LaurentElement::monomial(Weight({1, -1}))), SYM);
  json j = io::to_json(h);
  EXPECT_FALSE(j["denom"].empty());
  EXPECT_EQ(io::localized_from_json(rs, json::parse(j.dump())), h);
}

TEST(Json, RootSystemShape) {
  RootSystem g2 = build_root_system({Family::G, 2});
  json j = io::to_json(g2);
  EXPECT_EQ(j["family"], "G");
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["positive_roots"].size(), 6u);
  EXPECT_EQ(j["cartan"], json::parse("[[2,-3],[-1,2]]"));
  EXPECT_EQ(j["fundamental_weights"].size(), 2u);
}

TEST(Json, ReportRoundTripAndDeterminism) {
  for (auto spec : {RootSystemSpec{Family::E, 8}, RootSystemSpec{Family::A, 3}, RootSystemSpec{Family::C, 4}}) {
    RootSystem rs = build_root_system(spec);
    auto rep = special_exponents(rs, SYM);
    auto quad = verify_quadratic(rs, rep, SYM);
    auto rel = consecutive_relations(rs, rep, SYM);
    std::string a = io::to_json(rep, &quad, &rel).dump();
    std::string b = io::to_json(special_exponents(rs, SYM), &quad, &rel).dump();
    EXPECT_EQ(a, b);
    auto back = io::report_from_json(json::parse(a), SYM);
    EXPECT_TRUE(io::same_report(back, rep)) << spec.name();
    json j = json::parse(a);
    EXPECT_EQ(j["verdicts"]["quadratic"].size(), static_cast<std::size_t>(spec.rank + 1));
    EXPECT_TRUE(j["verdicts"]["relations"].get<bool>());
    EXPECT_TRUE(j["verdicts"]["exactness"].get<bool>());
  }
  auto e8 = io::to_json(special_exponents(build_root_system({Family::E, 8}), SYM));
  EXPECT_EQ(e8["a"], "30*k^2");
  EXPECT_TRUE(e8["x"].is_null());
}

TEST(Json, MalformedInputRaisesParseError) {
  EXPECT_THROW(io::laurent_from_json(json::parse(R"({"weight":[1]})")), ParseError);
  EXPECT_THROW(io::laurent_from_json(json::parse(R"([{"weight":[1]}])")), ParseError);
  EXPECT_THROW(io::laurent_from_json(json::parse(R"([{"weight":[1],"coeff":"1"},{"weight":[1,2],"coeff":"1"}])")),
               ParseError);
  EXPECT_THROW(io::laurent_from_json(json::parse(R"([{"weight":[1],"coeff":"k +"}])")), ParseError);
  RootSystem a1 = build_root_system({Family::A, 1});
  EXPECT_THROW(io::localized_from_json(a1, json::parse(R"({"numerator":[],"denom":[{"root_index":4,"exponent":1}]})")),
               ParseError);
}

TEST(Harness, FailureCarriesBothSides) {
  RootSystem rs = build_root_system({Family::A, 2});
  auto rep = special_exponents(rs, SYM);
  rep.exponents[1].c[0] += RatFunc(1);
  auto rel = consecutive_relations(rs, rep, SYM);
  ASSERT_FALSE(rel.all());
  EXPECT_EQ(rel.first_failure()->name.rfind("mu_2 - mu_1", 0), 0u);

  verify::SuiteResult r{"relations", "A2", 1, verify::Failure{"x = y", "1", "2"}};
  json j = verify::to_json(r);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["failure"]["lhs"], "1");
  EXPECT_EQ(j["failure"]["rhs"], "2");
  EXPECT_FALSE(verify::to_json(verify::schwarz()).contains("failure"));
}

TEST(Harness, DefaultSweepsPass) {
  for (const std::string suite : {"triangular", "cross", "thm23", "conjugation", "relations"}) {
    for (const auto& spec : verify::default_types(suite)) {
      if (spec.rank > 4) continue;
      RootSystem rs = build_root_system(spec);
      auto r = verify::run(suite, rs, verify::default_couplings(suite, rs));
      EXPECT_TRUE(r.passed()) << suite << " " << spec.name() << " " << verify::to_json(r).dump();
      EXPECT_GT(r.cases, 0u);
    }
  }
}
