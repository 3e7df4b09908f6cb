#include <gtest/gtest.h>

#include "codecalc/errors.hpp"
#include "codecalc/qvertex.hpp"
#include "test_support.hpp"

namespace codecalc {
namespace {

TEST(StraightenY, KnownValues) {
  for (auto* straighten : {&straighten_Y_perm, &straighten_Y_code}) {
    EXPECT_EQ(straighten({2, 3}), SignedIndex(-1, {3, 2}));
    EXPECT_EQ(straighten({1, 3, 2}), SignedIndex(1, {3, 2, 1}));
    EXPECT_EQ(straighten({0, 1}), SignedIndex(-1, {1, 0}));
    EXPECT_EQ(straighten({0, 2}), SignedIndex(-1, {2, 0}));
    EXPECT_TRUE(straighten({1, 2, 2}).is_zero());
    EXPECT_TRUE(straighten({0, 0}).is_zero());
    EXPECT_EQ(straighten({}), SignedIndex(1, {}));
  }
}

TEST(StraightenY, CodeRouteTraceExponents) {
  const auto t = straighten_Y_code_traced({1, 3, 2});
  EXPECT_EQ(t.result, SignedIndex(1, {3, 2, 1}));
  EXPECT_EQ(t.sign_exponent % 2, 0);
  EXPECT_LE(t.steps, us_right_of_leftmost_l(encode_code({1, 3, 2}).letters()));
}

TEST(YnAction, InsertsWithSign) {
  EXPECT_EQ(yn_action(3, {4, 2, 1}), SignedIndex(-1, {4, 3, 2, 1}));
  EXPECT_EQ(yn_action(5, {4, 2, 1}), SignedIndex(1, {5, 4, 2, 1}));
  EXPECT_EQ(yn_action(0, {4, 2, 1}), SignedIndex(-1, {4, 2, 1, 0}));
  EXPECT_TRUE(yn_action(2, {4, 2, 1}).is_zero());
  EXPECT_EQ(yn_action(2, {}), SignedIndex(1, {2}));
}

TEST(YnAction, DomainErrors) {
  EXPECT_THROW(yn_action(-1, {2}), DomainError);
  EXPECT_THROW(yn_action(1, {2, 0}), DomainError);
}

TEST(LambdaBracket, KnownValues) {
  EXPECT_EQ(lambda_bracket({4, 2, 1}, 1), (StrictPartition{4, 3, 2, 1}));
  EXPECT_EQ(lambda_bracket({4, 2, 1}, 2), (StrictPartition{5, 4, 2, 1}));
  EXPECT_EQ(lambda_bracket({4, 2, 1}, 3), (StrictPartition{6, 4, 2, 1}));
  EXPECT_EQ(lambda_bracket({4, 2, 1}, 0), (StrictPartition{4, 2, 1, 0}));
  EXPECT_EQ(lambda_bracket({}, 2), (StrictPartition{2}));
}

TEST(LambdaBracket, Errors) {
  EXPECT_THROW(lambda_bracket({2}, -1), DomainError);
  EXPECT_THROW(lambda_bracket({2, 0}, 0), DomainError);
}

TEST(LambdaBracket, CodeAndInsertionAgree) {
  for (const StrictPartition& lambda : testing::strict_partitions_up_to(7)) {
    for (int i = 0; i <= 9; ++i) {
      EXPECT_EQ(lambda_bracket(lambda, i), lambda_bracket_insertion(lambda, i));
    }
  }
}

TEST(QSeries, JFormOfSingleRow) {
  const auto terms = q_series_j_form({2}, 3);
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[0].n, 0);
  EXPECT_EQ(terms[0].i, 0);
  EXPECT_EQ(terms[0].sign(), -1);
  EXPECT_EQ(terms[0].index, (Composition{2, 0}));
  EXPECT_EQ(terms[1].n, 1);
  EXPECT_EQ(terms[1].i, 1);
  EXPECT_EQ(terms[1].sign(), -1);
  EXPECT_EQ(terms[1].index, (Composition{2, 1}));
  EXPECT_EQ(terms[2].n, 3);
  EXPECT_EQ(terms[2].i, 2);
  EXPECT_EQ(terms[2].sign(), 1);
  EXPECT_EQ(terms[2].index, (Composition{3, 2}));
}

TEST(QSeries, RequirePositiveParts) {
  EXPECT_THROW(q_series_j_form({2, 0}, 3), DomainError);
  EXPECT_THROW(q_series_i_form({2, 0}, 3), DomainError);
  EXPECT_THROW(q_series_j_form({2}, -1), DomainError);
}

TEST(QSeries, FormsAgree) {
  for (const StrictPartition& lambda : testing::strict_partitions_up_to(6)) {
    const int n_max = 9;
    const auto j_form = q_series_j_form(lambda, n_max);
    // lambda^[i] adds i + (parts below the inserted value) boxes; the n_max
    // cut keeps every term with n <= n_max, which needs i <= n_max + 1.
    std::vector<QSeriesTerm> i_form;
    for (const auto& term : q_series_i_form(lambda, n_max + 1)) {
      if (term.n <= n_max) i_form.push_back(term);
    }
    EXPECT_EQ(j_form, i_form) << render(lambda.composition());
  }
}

TEST(QSeries, CoefficientsAreTheModeActions) {
  for (const StrictPartition& lambda : testing::strict_partitions_up_to(6)) {
    const auto terms = q_series_j_form(lambda, 8);
    for (int n = 0; n <= 8; ++n) {
      const SignedIndex action = yn_action(n, lambda);
      const auto it = std::find_if(terms.begin(), terms.end(),
                                   [n](const QSeriesTerm& t) { return t.n == n; });
      if (it == terms.end()) {
        EXPECT_TRUE(action.is_zero());
      } else {
        EXPECT_EQ(action, SignedIndex(it->sign(), it->index));
      }
    }
  }
}

TEST(YnAction, SmallCases) {
  EXPECT_EQ(yn_action(2, {3}), SignedIndex(-1, {3, 2}));
  EXPECT_EQ(yn_action(0, {2, 1}), SignedIndex(1, {2, 1, 0}));
  EXPECT_TRUE(yn_action(3, {3}).is_zero());
  EXPECT_EQ(yn_action(5, {3, 1}), SignedIndex(1, {5, 3, 1}));
}

TEST(LambdaBracket, SmallCases) {
  EXPECT_EQ(lambda_bracket({3, 1}, 1), (StrictPartition{3, 2, 1}));
  EXPECT_EQ(lambda_bracket({3, 1}, 2), (StrictPartition{4, 3, 1}));
  EXPECT_EQ(lambda_bracket({}, 1), (StrictPartition{1}));
}

TEST(QSeries, EmptyPartition) {
  const auto j_form = q_series_j_form({}, 3);
  ASSERT_EQ(j_form.size(), 4u);
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(j_form[static_cast<std::size_t>(n)].n, n);
    EXPECT_EQ(j_form[static_cast<std::size_t>(n)].sign(), 1);
    EXPECT_EQ(j_form[static_cast<std::size_t>(n)].index, (Composition{n}));
  }
  const auto i_form = q_series_i_form({}, 2);
  ASSERT_EQ(i_form.size(), 3u);
  EXPECT_EQ(i_form[2].index, (Composition{2}));
  EXPECT_EQ(i_form[2].sign(), 1);
}

TEST(QSeries, IFormOfSingleRow) {
  const auto terms = q_series_i_form({2}, 1);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].index, (Composition{2, 0}));
  EXPECT_EQ(terms[0].n, 0);
  EXPECT_EQ(terms[0].sign(), -1);
  EXPECT_EQ(terms[1].index, (Composition{2, 1}));
  EXPECT_EQ(terms[1].n, 1);
  EXPECT_EQ(terms[1].sign_exp, 1);
}

}  // namespace
}  // namespace codecalc
