#include <gtest/gtest.h>

#include "codecalc/bernstein.hpp"
#include "codecalc/errors.hpp"
#include "codecalc/oracle.hpp"
#include "test_support.hpp"

namespace codecalc {
namespace {

TEST(Staircase, Values) {
  EXPECT_EQ(staircase(4), (std::vector<int>{3, 2, 1, 0}));
  EXPECT_TRUE(staircase(0).empty());
}

TEST(ExponentStraighten, KnownValues) {
  EXPECT_EQ(exponent_straighten({1, 3, 1, 6, 2}), SignedIndex(1, {3, 3, 3, 2, 2}));
  EXPECT_EQ(exponent_straighten({1, 3}), SignedIndex(-1, {2, 2}));
  EXPECT_TRUE(exponent_straighten({2, 3}).is_zero());
  EXPECT_EQ(exponent_straighten({-1, 2}), SignedIndex(-1, {1, 0}));
}

TEST(Bialternant, DeltaIsVandermonde) {
  for (std::size_t l = 1; l <= 5; ++l) {
    IntPolynomial product = IntPolynomial::constant(l, 1);
    for (std::size_t a = 1; a <= l; ++a) {
      for (std::size_t b = a + 1; b <= l; ++b) {
        product = product * (IntPolynomial::variable(l, a) - IntPolynomial::variable(l, b));
      }
    }
    EXPECT_EQ(bialternant(Composition(staircase(l)), l), product) << "l=" << l;
  }
}

TEST(Bialternant, RepeatedExponentVanishes) {
  EXPECT_TRUE(bialternant({2, 2, 0}, 3).is_zero());
}

TEST(Bialternant, Errors) {
  EXPECT_THROW(bialternant({1, 0}, 3), DomainError);
  EXPECT_THROW(bialternant({1, -1}, 2), DomainError);
}

TEST(SchurPoly, SmallExamples) {
  EXPECT_EQ(schur_poly({2, 1}, 2).render(), "1*x1^2*x2 + 1*x1*x2^2");
  EXPECT_EQ(schur_poly({1, 1}, 2).render(), "1*x1*x2");
  EXPECT_EQ(schur_poly({1, 0, 0}, 3).render(), "1*x1 + 1*x2 + 1*x3");
  EXPECT_TRUE(schur_poly({0, 1}, 2).is_zero());
}

// s_mu for a composition equals the straightened Schur polynomial.
TEST(SchurPoly, MatchesOperatorStraightening) {
  testing::for_each_composition(0, 3, 3, [](const Composition& mu) {
    if (mu.empty()) return;
    const std::size_t l = mu.length();
    const SignedIndex r = straighten_B(mu);
    const IntPolynomial lhs = schur_poly(mu, l);
    if (r.is_zero()) {
      EXPECT_TRUE(lhs.is_zero()) << render(mu);
    } else {
      EXPECT_EQ(lhs, mpz_class(r.sign()) * schur_poly(r.index(), l)) << render(mu);
    }
  });
}

// Swapping two adjacent columns of the alternant flips its sign.
TEST(Bialternant, ColumnExchange) {
  testing::for_each_composition(0, 3, 3, [](const Composition& e) {
    const std::size_t l = e.length();
    for (std::size_t p = 0; p + 1 < l; ++p) {
      std::vector<int> swapped = e.vec();
      std::swap(swapped[p], swapped[p + 1]);
      EXPECT_EQ(bialternant(Composition(swapped), l), -bialternant(e, l)) << render(e);
    }
  });
}

TEST(Bialternant, SmallDeterminants) {
  EXPECT_EQ(bialternant({2, 0}, 2).render(), "1*x1^2 - 1*x2^2");
  EXPECT_EQ(bialternant({1, 0}, 2).render(), "1*x1 - 1*x2");
  EXPECT_EQ(schur_poly({1, 0}, 2).render(), "1*x1 + 1*x2");
  EXPECT_TRUE(schur_poly({2, 3}, 2).is_zero());
}

}  // namespace
}  // namespace codecalc
