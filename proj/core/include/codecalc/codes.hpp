#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "codecalc/index.hpp"
#include "codecalc/rewrite.hpp"

namespace codecalc {

/// Finite stored segment of a composition's code. The full code is
/// U^inf . letters . R^inf; the segment starts with the first step of the
/// bottom row and ends with the U that reaches the x-axis. Leading U's are
/// zero-length bottom rows, so the row count is the number of U's.
///
/// Invariants: reduced (no LR/RL), empty or ending in U, never starting with L,
/// and decodable to nonnegative parts.
class CodeWord {
 public:
  CodeWord() = default;

  /// Accepts any word over {R,L,U}: reduces it, folds trailing R/L into the
  /// suffix and validates. Throws ParseError or InvalidCodeError.
  static CodeWord parse(std::string_view text);

  const std::string& letters() const { return letters_; }
  std::size_t rows() const { return count_letter(letters_, 'U'); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const CodeWord&, const CodeWord&) = default;

 private:
  explicit CodeWord(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// Throws DomainError on a negative part.
CodeWord encode_code(const Composition& mu);
Composition decode_code(const CodeWord& w);

/// Decodes any word over {R,L,U} (reduced or not). Part i is the x coordinate
/// at the i-th U from the right. Throws InvalidCodeError on a negative part.
Composition decode_letters(std::string_view word);

struct StraightenTrace {
  SignedIndex result = SignedIndex::zero();
  int sign_exponent = 0;
  std::size_t steps = 0;                 // applications of the step rule
  std::vector<int> step_exponents;       // sign exponent added by each step
  std::vector<RelationStep> relations;   // individual relation applications
};

/// Iterated single-run straightening of a plain code. Returns Zero or
/// (sign, partition) with the same length and sum as decode_code(w).
SignedIndex straighten_code(const CodeWord& w);
StraightenTrace straighten_code_traced(const CodeWord& w);

/// Two-pointer read-and-delete straightening. `word` need not be reduced.
SignedIndex reading_straighten(std::string_view word);
SignedIndex reading_straighten(const CodeWord& w);
StraightenTrace reading_straighten_traced(std::string_view word);

/// Number of U's right of the leftmost L (0 when there is no L): an upper
/// bound on the number of straightening steps.
std::size_t us_right_of_leftmost_l(std::string_view word);

}  // namespace codecalc
