#include <gtest/gtest.h>

#include "cuntz/endomorphism.hpp"
#include "cuntz/error.hpp"
#include "cuntz/rfs.hpp"
#include "cuntz/text.hpp"
#include "oracle.hpp"

using namespace cuntz;

namespace {

Element E(const char* text, unsigned d = 2) { return parse_element(text, d); }

bool has_check(const Report& r, const std::string& name, Outcome o) {
  for (const auto& c : r.checks())
    if (c.check == name && c.outcome == o) return true;
  return false;
}

std::vector<int> diagonal_signs(const RecursiveMap& z) {
  std::vector<int> out;
  for (const auto& t : z.terms()) {
    EXPECT_EQ(t.left, t.right);
    out.push_back(t.sign);
  }
  return out;
}

}  // namespace

TEST(StandardO2, Parts) {
  const RfsSystem sys = standard_rfs_o2();
  ASSERT_EQ(sys.seed_count(), 1u);
  EXPECT_EQ(sys.seeds()[0], E("s1 s2*"));
  EXPECT_EQ(diagonal_signs(sys.zeta()), (std::vector<int>{1, -1}));
  EXPECT_EQ(sys.embed_generator(1), E("s1 s2*"));
  EXPECT_TRUE(verify_rfs(sys).passed());
}

TEST(StandardO2, ZetaOfSeed) {
  const RfsSystem sys = standard_rfs_o2();
  Element expected(2);
  expected.add_term(Monomial{{1, 1}, {1, 2}}, 1);
  expected.add_term(Monomial{{2, 1}, {2, 2}}, -1);
  EXPECT_EQ(apply_zeta(sys.zeta(), sys.seeds()[0]), expected);
  EXPECT_EQ(sys.embed_generator(2), expected);
  EXPECT_EQ(zeta_power(sys.zeta(), 0, sys.seeds()[0]), sys.seeds()[0]);
}

TEST(StandardO2, TermGrowth) {
  const RfsSystem sys = standard_rfs_o2();
  for (std::size_t n = 1; n <= 10; ++n)
    EXPECT_EQ(sys.embed_generator(n).size(), std::size_t{1} << (n - 1));
}

TEST(StandardO2, GeneratorsActLikeFermionsInTheOracle) {
  const RfsSystem sys = standard_rfs_o2();
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 5; ++n) {
      const Element am = sys.embed_generator(m), an = sys.embed_generator(n);
      EXPECT_TRUE(oracle::vanishes(anticommutator(am, an), 128));
      Element rhs = m == n ? Element::identity(2) : Element(2);
      EXPECT_EQ(oracle::compare(anticommutator(am, adjoint(an)), rhs, 128), "");
    }
}

TEST(StandardO2, NormalizationSpecialCase) {
  const RfsSystem sys = standard_rfs_o2();
  const Element x = E("s1"), y = E("s1*");
  EXPECT_TRUE(equals(sys.zeta().apply(x) * sys.zeta().apply(y),
                     canonical_endomorphism(x * y)));
}

TEST(StandardO2, GeneratorsAreGaugeInvariant) {
  const RfsSystem sys = standard_rfs_o2();
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(is_u1_invariant(sys.embed_generator(n)));
}

TEST(Generalized, TwoPairSplit) {
  const RfsSystem sys = generalized_rfs_o2d({1, 3}, {2, 4}, {1, 1}, {1, 1});
  EXPECT_EQ(sys.seeds()[0], E("s1 s2* + s3 s4*", 4));
}

TEST(Generalized, SinglePairIsTheStandardSystem) {
  const RfsSystem sys = generalized_rfs_o2d({1}, {2}, {1}, {1});
  EXPECT_EQ(sys.seeds()[0], standard_rfs_o2().seeds()[0]);
  EXPECT_EQ(sys.zeta(), standard_rfs_o2().zeta());
}

TEST(Generalized, SignedSplitValidates) {
  const RfsSystem sys = generalized_rfs_o2d({1, 2}, {3, 4}, {1, -1}, {1, 1});
  EXPECT_EQ(sys.seeds()[0], E("s1 s3* - s2 s4*", 4));
  EXPECT_TRUE(verify_rfs(sys).passed());
}

TEST(Generalized, RejectsMalformedSplits) {
  EXPECT_THROW(generalized_rfs_o2d({2}, {1}, {1}, {1}), std::invalid_argument);
  EXPECT_THROW(generalized_rfs_o2d({1, 2}, {2, 4}, {1, 1}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(generalized_rfs_o2d({1, 3}, {2, 4}, {-1, 1}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(generalized_rfs_o2d({1, 3}, {2, 4}, {1, 1}, {-1, 1}), std::invalid_argument);
}

TEST(StandardRfsP, OneIsTheO2System) {
  const RfsSystem sys = standard_rfs_p(1);
  EXPECT_EQ(sys.seeds()[0], standard_rfs_o2().seeds()[0]);
  EXPECT_EQ(sys.zeta(), standard_rfs_o2().zeta());
}

TEST(StandardRfsP, TwoMatchesTheWrittenOutSeeds) {
  const RfsSystem sys = standard_rfs_p(2);
  ASSERT_EQ(sys.seed_count(), 2u);
  EXPECT_EQ(sys.seeds()[0], E("s1 s2* + s3 s4*", 4));
  EXPECT_EQ(sys.seeds()[1], E("s1 s3* - s2 s4*", 4));
  EXPECT_EQ(diagonal_signs(sys.zeta()), (std::vector<int>{1, -1, -1, 1}));
  EXPECT_EQ(sys.embed_generator(2), E("s1 s3* - s2 s4*", 4));
  EXPECT_EQ(sys.embed_generator(3), apply_zeta(sys.zeta(), sys.seeds()[0]));
}

TEST(StandardRfsP, ThreeValidatesAtDepthTwo) {
  const RfsSystem sys = standard_rfs_p(3);
  EXPECT_EQ(sys.alphabet(), 8u);
  EXPECT_EQ(sys.seed_count(), 3u);
  EXPECT_TRUE(verify_rfs(sys, {2, 1}).passed());
  EXPECT_TRUE(verify_car(sys, 9).passed());
}

TEST(StandardRfsP, RangeIsChecked) {
  EXPECT_THROW(standard_rfs_p(0), std::out_of_range);
  EXPECT_THROW(standard_rfs_p(7), std::out_of_range);
  EXPECT_THROW(standard_rfs_p(5, 4), std::out_of_range);
}

TEST(StandardRfsP, GrowthLaw) {
  // Recorded growth: |zeta^{q}(a_i)| = 2^{pq} |a_i| for the diagonal map.
  for (unsigned p = 1; p <= 3; ++p) {
    const RfsSystem sys = standard_rfs_p(p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t q = 0; q < 3; ++q)
        EXPECT_EQ(sys.seed_power(i, q).size(),
                  (std::size_t{1} << (p * q)) * sys.seeds()[i].size());
  }
}

TEST(FloorSign, SmallValues) {
  EXPECT_EQ(floor_sign(0, 0), 1);
  EXPECT_EQ(floor_sign(1, 1), -1);
  // floor(3/1) + floor(3/2) = 4.
  EXPECT_EQ(floor_sign(3, 2), 1);
  EXPECT_EQ(floor_sign(2, 2), -1);
}

TEST(StandardRfsP, SeedSignMutationsBreakTheSeedCondition) {
  for (unsigned p = 2; p <= 4; ++p) {
    const RfsSystem sys = standard_rfs_p(p);
    ASSERT_TRUE(verify_seed_condition(sys).passed());
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t k = 0; k < sys.seeds()[i].size(); ++k) {
        auto seeds = sys.seeds();
        Element flipped(sys.alphabet());
        std::size_t j = 0;
        for (const auto& [m, c] : seeds[i].terms()) flipped.add_term(m, j++ == k ? -c : c);
        seeds[i] = flipped;
        EXPECT_FALSE(verify_seed_condition(RfsSystem(seeds, sys.zeta(), sys.phi())).passed())
            << "p=" << p << " seed " << i + 1 << " term " << k + 1;
      }
  }
}

TEST(SeedCondition, ProjectionIsNotASeed) {
  const RfsSystem sys({E("s1 s1*")}, standard_rfs_o2().zeta(), Endomorphism::canonical(2));
  const Report r = verify_seed_condition(sys);
  EXPECT_TRUE(has_check(r, "seed.adjoint_anticommutator", Outcome::fail));
}

TEST(SeedCondition, UnsignedSecondSeedFails) {
  const RfsSystem sys({E("s1 s2* + s3 s4*", 4), E("s1 s3* + s2 s4*", 4)},
                      RecursiveMap::diagonal({1, -1, -1, 1}), Endomorphism::canonical(4));
  const Report r = verify_seed_condition(sys);
  EXPECT_TRUE(has_check(r, "seed.anticommutator", Outcome::fail));
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_TRUE(r.first_failure()->witness.has_value());
}

TEST(RecursiveCondition, RhoDoesNotAnticommute) {
  const RfsSystem sys({E("s1 s2*")}, RecursiveMap::diagonal({1, 1}), Endomorphism::canonical(2));
  const Report r = verify_recursive_condition(sys, 1);
  EXPECT_TRUE(has_check(r, "recursive.anticommutator", Outcome::fail));
  EXPECT_TRUE(has_check(r, "recursive.certificate", Outcome::fail));
}

TEST(RecursiveCondition, EveryZetaSignFlipIsCaughtForRfs2) {
  const RfsSystem sys = standard_rfs_p(2);
  EXPECT_TRUE(verify_recursive_condition(sys, 2).passed());
  for (std::size_t t = 0; t < 4; ++t) {
    const RfsSystem m(sys.seeds(), sys.zeta().with_flipped_sign(t), sys.phi());
    EXPECT_FALSE(verify_recursive_condition(m, 2).passed()) << "sign " << t + 1;
  }
}

TEST(Normalization, BlindToDiagonalSigns) {
  // zeta(X) zeta(Y) = sum_i eps_i^2 s_i XY s_i*, so a sign flip of a
  // diagonal map survives normalization; the recursive suite catches it.
  const RfsSystem sys = standard_rfs_p(2);
  const RfsSystem m(sys.seeds(), sys.zeta().with_flipped_sign(0), sys.phi());
  EXPECT_TRUE(verify_normalization(m, 2).passed());
  EXPECT_FALSE(verify_recursive_condition(m, 2).passed());
}

TEST(Normalization, WrongEndomorphismFails) {
  const RfsSystem sys = standard_rfs_o2();
  const RfsSystem m(sys.seeds(), sys.zeta(), Endomorphism::identity(2));
  const Report r = verify_normalization(m, 1);
  ASSERT_FALSE(r.passed());
  EXPECT_TRUE(r.first_failure()->witness.has_value());
}

TEST(Certificate, SoundOnKnownCases) {
  const RfsSystem sys = standard_rfs_o2();
  EXPECT_FALSE(sandwich_certificate(sys.seeds()[0], sys.zeta(), 1).has_value());
  EXPECT_TRUE(sandwich_certificate(sys.seeds()[0], RecursiveMap::diagonal({1, 1}), 1)
                  .has_value());
  // The seed commutes with rho(X) for all X.
  EXPECT_FALSE(
      sandwich_certificate(sys.seeds()[0], RecursiveMap::diagonal({1, 1}), -1).has_value());
}

TEST(Car, StandardSystems) {
  EXPECT_TRUE(verify_car(standard_rfs_o2(), 8).passed());
  EXPECT_TRUE(verify_car(standard_rfs_p(2), 6).passed());
}

TEST(Car, SignMutatedSystemBreaksCar) {
  const RfsSystem sys = standard_rfs_o2();
  const RfsSystem m(sys.seeds(), RecursiveMap::diagonal({1, 1}), sys.phi());
  const Report r = verify_car(m, 3);
  EXPECT_FALSE(r.passed());
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_NE(r.first_failure()->witness->find("A1"), std::string::npos);
}

TEST(Car, JobsDoNotChangeTheReport) {
  const RfsSystem sys = standard_rfs_o2();
  const RfsSystem m(sys.seeds(), RecursiveMap::diagonal({1, 1}), sys.phi());
  const Report one = verify_car(m, 5, 1), four = verify_car(m, 5, 4);
  ASSERT_EQ(one.checks().size(), four.checks().size());
  for (std::size_t k = 0; k < one.checks().size(); ++k) {
    EXPECT_EQ(one.checks()[k].outcome, four.checks()[k].outcome);
    EXPECT_EQ(one.checks()[k].witness, four.checks()[k].witness);
  }
}

TEST(Compose, EndomorphismImages) {
  const RfsSystem sys = standard_rfs_o2();
  const auto rho = compose_with_endomorphism(sys, Endomorphism::canonical(2));
  const auto phi1 = compose_with_endomorphism(sys, Endomorphism::phi1());
  const auto id = compose_with_endomorphism(sys, Endomorphism::identity(2));
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_TRUE(is_u1_invariant(rho(n)));
    EXPECT_TRUE(equals(id(n), sys.embed_generator(n)));
  }
  EXPECT_FALSE(is_u1_invariant(phi1(1)));
  EXPECT_TRUE(verify_car(phi1, 4).passed());
}

TEST(Compose, Functoriality) {
  const RfsSystem sys = standard_rfs_o2();
  const Endomorphism& e = Endomorphism::phi2();
  const auto f = compose_with_endomorphism(sys, e);
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n)
      EXPECT_TRUE(equals(anticommutator(f(m), adjoint(f(n))),
                         e.apply(anticommutator(sys.embed_generator(m),
                                                adjoint(sys.embed_generator(n))))));
}

TEST(SpanDimension, StandardO2) {
  const RfsSystem sys = standard_rfs_o2();
  const auto k1 = span_dimension_check(sys, 1);
  EXPECT_EQ(k1.rank, 4u);
  EXPECT_TRUE(k1.spans());
  const auto k2 = span_dimension_check(sys, 2);
  EXPECT_EQ(k2.rank, 16u);
  EXPECT_EQ(k2.full, 16u);
}

TEST(SpanDimension, StandardRfs2AtDepthOne) {
  const auto r = span_dimension_check(standard_rfs_p(2), 1);
  EXPECT_EQ(r.rank, 16u);
}

TEST(SpanDimension, CapIsEnforced) {
  EXPECT_THROW(span_dimension_check(standard_rfs_o2(), 3, 32), ResourceLimitError);
}

TEST(SpanDimension, ProjectionsAloneDoNotSpan) {
  // s1 s1* generates only itself and I.
  const auto r = span_dimension({E("s1 s1*")}, 1, 4);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_FALSE(r.spans());
}
