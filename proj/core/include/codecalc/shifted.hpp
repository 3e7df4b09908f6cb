#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "codecalc/codes.hpp"
#include "codecalc/index.hpp"

namespace codecalc {

/// Stored part of a shifted code. The full code is letters . R^inf, traced
/// along the shifted diagram from x = l (bottom-right corner of the leftmost
/// box of the bottom row). At the i-th U from the right, x = mu_i + i - 1.
class ShiftedCodeWord {
 public:
  ShiftedCodeWord() = default;

  /// Reduces, folds trailing R/L into the suffix and validates.
  static ShiftedCodeWord parse(std::string_view text);

  const std::string& letters() const { return letters_; }
  std::size_t rows() const { return count_letter(letters_, 'U'); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const ShiftedCodeWord&, const ShiftedCodeWord&) = default;

 private:
  explicit ShiftedCodeWord(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// A code after U -> UL substitution, with the conceptual prefix ...ULULU
/// held implicitly. `letters` is what remains once that prefix is removed.
struct PreshiftedWord {
  std::string letters;

  /// "...ULULU" followed by the letters.
  std::string render() const;
  ShiftedCodeWord strip_prefix() const;
};

/// Throws DomainError unless every part is >= 1.
ShiftedCodeWord encode_shifted(const Composition& mu);
/// Throws InvalidCodeError if a part comes out <= 0.
Composition decode_shifted(const ShiftedCodeWord& w);

/// Requires the composition of `w` to have positive parts (DomainError).
PreshiftedWord preshift(const CodeWord& w);

/// Same step rule as straighten_code, on the finite shifted word. Returns Zero
/// or (sign, strict partition).
SignedIndex shifted_straighten(const ShiftedCodeWord& w);
StraightenTrace shifted_straighten_traced(const ShiftedCodeWord& w);

/// lambda^[i] via the shifted code: replace the i-th R from the left (counting
/// into the R suffix) by U. Checked against the insertion definition.
StrictPartition lambda_bracket_shifted(const StrictPartition& lambda, int i);

}  // namespace codecalc
