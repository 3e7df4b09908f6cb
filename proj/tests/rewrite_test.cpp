#include <gtest/gtest.h>

#include "codecalc/errors.hpp"
#include "codecalc/rewrite.hpp"

namespace codecalc {
namespace {

TEST(ReduceWord, CancelsAdjacentPairs) {
  EXPECT_EQ(reduce_word("RRLU"), "RU");
  EXPECT_EQ(reduce_word("LRLR"), "");
  EXPECT_EQ(reduce_word("RURRLU"), "RURU");
  EXPECT_EQ(reduce_word("RRRLLLU"), "U");
}

TEST(ReduceWord, RejectsOtherLetters) { EXPECT_THROW(reduce_word("RUX"), ParseError); }

TEST(CanonicalTail, DropsSuffixLetters) {
  EXPECT_EQ(canonical_tail("RURR"), "RU");
  EXPECT_EQ(canonical_tail("RRUULL"), "RRUU");
  EXPECT_EQ(canonical_tail("RLR"), "");
}

TEST(StraighteningStep, NormalFormWithoutL) {
  const auto out = straightening_step("RURUURRU", LeftBoundary::u_prefix);
  EXPECT_EQ(out.status, RewriteOutcome::Status::normal_form);
}

TEST(StraighteningStep, FirstStepOfLongExample) {
  std::vector<RelationStep> trace;
  // code of (1,3,1,6,2)
  const auto out =
      straightening_step("RRURRRRULLLLLURRULLU", LeftBoundary::u_prefix, &trace);
  ASSERT_EQ(out.status, RewriteOutcome::Status::rewritten);
  EXPECT_EQ(out.word, "RRUURRRULLULLU");
  EXPECT_EQ(out.sign_exponent, 1);
  // four permutations (past U, R, R, R), then RLU -> U at position 3
  ASSERT_EQ(trace.size(), 5u);
  EXPECT_EQ(trace[0], (RelationStep{RelationKind::permute_past_u, 7, true}));
  EXPECT_EQ(trace[1], (RelationStep{RelationKind::permute_past_r, 6, false}));
  EXPECT_EQ(trace[4], (RelationStep{RelationKind::cancel, 3, false}));
}

TEST(StraighteningStep, UBeforeRunIsZero) {
  std::vector<RelationStep> trace;
  const auto out = straightening_step("RRRULU", LeftBoundary::u_prefix, &trace);
  EXPECT_EQ(out.status, RewriteOutcome::Status::zero);
  EXPECT_EQ(trace.back().kind, RelationKind::zero);
}

TEST(StraighteningStep, ClosedBoundaryRejectsRunningOffTheStart) {
  EXPECT_EQ(straightening_step("ULLU", LeftBoundary::u_prefix).status,
            RewriteOutcome::Status::zero);
  EXPECT_THROW(straightening_step("ULLU", LeftBoundary::closed), InvalidCodeError);
}

TEST(RelationKindNames, MatchWireNames) {
  EXPECT_EQ(to_string(RelationKind::permute_past_u), "permute-past-U");
  EXPECT_EQ(to_string(RelationKind::cancel), "cancel");
}

}  // namespace
}  // namespace codecalc
