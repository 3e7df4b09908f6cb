#include "codecalc/rewrite.hpp"

#include <algorithm>

#include "codecalc/errors.hpp"

namespace codecalc {

void check_alphabet(std::string_view word) {
  for (char ch : word) {
    if (ch != 'R' && ch != 'L' && ch != 'U') {
      throw ParseError("letter '" + std::string(1, ch) +
                       "' is not one of R, L, U in \"" + std::string(word) + "\"");
    }
  }
}

std::string reduce_word(std::string_view raw) {
  check_alphabet(raw);
  // Stack reduction; the LR/RL system is confluent so one pass suffices.
  std::string out;
  out.reserve(raw.size());
  for (char ch : raw) {
    if (!out.empty() && ((out.back() == 'L' && ch == 'R') ||
                         (out.back() == 'R' && ch == 'L'))) {
      out.pop_back();
    } else {
      out.push_back(ch);
    }
  }
  return out;
}

std::string canonical_tail(std::string_view raw) {
  std::string out = reduce_word(raw);
  while (!out.empty() && out.back() != 'U') out.pop_back();
  return out;
}

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::permute_past_r:
      return "permute-past-R";
    case RelationKind::permute_past_u:
      return "permute-past-U";
    case RelationKind::cancel:
      return "cancel";
    case RelationKind::zero:
      return "zero";
  }
  return "zero";
}

char letter_at(std::string_view word, std::ptrdiff_t pos) {
  if (pos < 0) return 'U';
  return word[static_cast<std::size_t>(pos)];
}

std::size_t count_letter(std::string_view word, char letter) {
  return static_cast<std::size_t>(std::count(word.begin(), word.end(), letter));
}

RewriteOutcome straightening_step(std::string_view word, LeftBoundary boundary,
                                  std::vector<RelationStep>* trace) {
  RewriteOutcome out;
  const std::size_t run_start = word.find('L');
  if (run_start == std::string_view::npos) return out;

  std::size_t run_end = run_start;
  while (run_end < word.size() && word[run_end] == 'L') ++run_end;
  if (run_end == word.size()) {
    // A trailing run cancels against the R suffix.
    out.status = RewriteOutcome::Status::rewritten;
    out.word = canonical_tail(word);
    return out;
  }
  if (word[run_end] != 'U') {
    throw InvalidCodeError("word is not reduced: \"" + std::string(word) + "\"");
  }
  const auto k = static_cast<std::ptrdiff_t>(run_end - run_start);
  const auto start = static_cast<std::ptrdiff_t>(run_start);

  // The block L^k U R^(k-1) moves left past beta_1 .. beta_(k-1), losing one L
  // per letter and flipping the sign on each U.
  int j = 0;
  for (std::ptrdiff_t m = 1; m < k; ++m) {
    const std::ptrdiff_t pos = start - m;
    if (pos < 0 && boundary == LeftBoundary::closed) {
      throw InvalidCodeError("straightening ran past the start of \"" +
                             std::string(word) + "\"");
    }
    const bool is_u = letter_at(word, pos) == 'U';
    if (is_u) ++j;
    if (trace) {
      trace->push_back({is_u ? RelationKind::permute_past_u : RelationKind::permute_past_r,
                        pos, is_u});
    }
  }

  const std::ptrdiff_t target = start - k;
  if (target < 0 && boundary == LeftBoundary::closed) {
    throw InvalidCodeError("straightening ran past the start of \"" +
                           std::string(word) + "\"");
  }
  if (letter_at(word, target) == 'U') {
    if (trace) trace->push_back({RelationKind::zero, target, false});
    out.status = RewriteOutcome::Status::zero;
    return out;
  }
  if (trace) trace->push_back({RelationKind::cancel, target, false});

  std::string next(word.substr(0, run_start));
  next[static_cast<std::size_t>(target)] = 'U';
  next.append(static_cast<std::size_t>(k - 1), 'L');
  next.append(word.substr(run_end + 1));

  out.status = RewriteOutcome::Status::rewritten;
  out.word = canonical_tail(next);
  out.sign_exponent = j;
  return out;
}

}  // namespace codecalc
