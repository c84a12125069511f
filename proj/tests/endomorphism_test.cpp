#include <gtest/gtest.h>

#include <random>

#include "cuntz/endomorphism.hpp"
#include "cuntz/error.hpp"
#include "cuntz/text.hpp"
#include "oracle.hpp"
#include "random_elements.hpp"

using namespace cuntz;

namespace {

Element E(const char* text, unsigned d = 2) { return parse_element(text, d); }

}  // namespace

TEST(Endomorphism, BuiltinsValidate) {
  for (unsigned d = 2; d <= 4; ++d) {
    EXPECT_TRUE(validate_endomorphism(Endomorphism::canonical(d).images()).ok());
    EXPECT_TRUE(validate_endomorphism(Endomorphism::identity(d).images()).ok());
  }
  EXPECT_TRUE(validate_endomorphism(Endomorphism::phi1().images()).ok());
  EXPECT_TRUE(validate_endomorphism(Endomorphism::phi2().images()).ok());
}

TEST(Endomorphism, DuplicateImagesAreRejected) {
  const auto v = validate_endomorphism({E("s1"), E("s1")});
  ASSERT_FALSE(v.ok());
  bool names_pair = false;
  for (const auto& f : v.failures())
    if (f.find("1") != std::string::npos && f.find("2") != std::string::npos)
      names_pair = true;
  EXPECT_TRUE(names_pair);
  EXPECT_THROW(make_endomorphism({E("s1"), E("s1")}), ValidationError);
}

TEST(Endomorphism, CanonicalExample) {
  const Element x = E("s1 s2*");
  const Element expected = E("s1 s1 s2* s1* + s2 s1 s2* s2*");
  EXPECT_TRUE(equals(apply_endomorphism(Endomorphism::canonical(2), x), expected));
  EXPECT_TRUE(equals(canonical_endomorphism(x), expected));
}

TEST(Endomorphism, IdentityAndUnitality) {
  const Element x = E("s1 s2* - 3 s2 s2 s1*");
  EXPECT_TRUE(equals(Endomorphism::identity(2).apply(x), x));
  EXPECT_TRUE(equals(Endomorphism::phi1().apply(Element::identity(2)),
                     Element::identity(2)));
}

TEST(Endomorphism, Phi1ImagesAreTheDefiningFormulas) {
  const auto& e = Endomorphism::phi1();
  EXPECT_TRUE(equals(e.image(1), E("s1 s1* + s2 s1 s2*")));
  EXPECT_TRUE(equals(e.image(2), E("s2 s2")));
  const auto& f = Endomorphism::phi2();
  EXPECT_TRUE(equals(f.image(1), E("s2 s1* + s1 s2 s2*")));
  EXPECT_TRUE(equals(f.image(2), E("s1 s1")));
}

TEST(Endomorphism, Phi1BreaksGaugeInvariance) {
  const auto grades = grade_decompose(Endomorphism::phi1().apply(E("s1 s2*")));
  std::vector<long> keys;
  for (const auto& [g, part] : grades) keys.push_back(g);
  EXPECT_EQ(keys, (std::vector<long>{-2, -1}));
  EXPECT_FALSE(is_u1_invariant(Endomorphism::phi1().apply(E("s1 s2*"))));
}

TEST(Endomorphism, HomomorphismLawsOnRandomElements) {
  std::mt19937_64 rng(17);
  const std::vector<Endomorphism> es{Endomorphism::canonical(2),
                                     Endomorphism::phi1(), Endomorphism::phi2()};
  for (int k = 0; k < 60; ++k) {
    const Element x = sample::random_element(rng, 2, 3);
    const Element y = sample::random_element(rng, 2, 3);
    for (const auto& e : es) {
      EXPECT_TRUE(equals(e.apply(x * y), e.apply(x) * e.apply(y)));
      EXPECT_TRUE(equals(e.apply(adjoint(x)), adjoint(e.apply(x))));
    }
    EXPECT_TRUE(equals(canonical_endomorphism(x), es[0].apply(x)));
  }
}

TEST(Endomorphism, AgreesWithOracleAfterApplication) {
  // rho(x) acts on e_{2(n-1)+i} as x acts on e_n, placed back by s_i.
  const Element x = E("s1 s2* + s2 s1 s1*");
  const Element rx = canonical_endomorphism(x);
  for (std::uint64_t n = 1; n <= 16; ++n)
    for (std::uint64_t i = 1; i <= 2; ++i) {
      oracle::Vector expected;
      for (const auto& [k, c] : oracle::act(x, n)) expected[2 * (k - 1) + i] = c;
      EXPECT_EQ(oracle::act(rx, 2 * (n - 1) + i), expected);
    }
}

TEST(Endomorphism, AlphabetMismatch) {
  EXPECT_THROW(Endomorphism::phi1().apply(E("s1", 3)), AlphabetMismatch);
}
