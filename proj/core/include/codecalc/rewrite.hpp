#pragma once

// Word-level machinery shared by plain codes and shifted codes. Words are
// std::string over the letters 'R', 'L', 'U'; the conceptual suffix is R^inf,
// and the conceptual prefix depends on the code family (see LeftBoundary).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace codecalc {

enum class Letter : char { R = 'R', L = 'L', U = 'U' };

constexpr char to_char(Letter l) { return static_cast<char>(l); }

/// Throws ParseError if `word` has a character outside {R,L,U}.
void check_alphabet(std::string_view word);

/// Deletes adjacent LR / RL pairs until none remain.
std::string reduce_word(std::string_view raw);

/// Reduces, then drops the trailing R or L letters that merge into (or cancel
/// against) the infinite R suffix.
std::string canonical_tail(std::string_view raw);

/// What lies left of the stored word.
enum class LeftBoundary {
  u_prefix,  // plain codes: U^inf
  closed,    // shifted codes: nothing; reaching past the start is invalid
};

enum class RelationKind { permute_past_r, permute_past_u, cancel, zero };

std::string_view to_string(RelationKind kind);

/// One application of a code relation while moving a block leftward.
/// `position` indexes the word the step was applied to; negative values lie in
/// the virtual prefix.
struct RelationStep {
  RelationKind kind;
  std::ptrdiff_t position;
  bool sign_flip;

  friend bool operator==(const RelationStep&, const RelationStep&) = default;
};

struct RewriteOutcome {
  enum class Status { normal_form, zero, rewritten };
  Status status = Status::normal_form;
  std::string word;       // rewritten word, canonical tail; empty otherwise
  int sign_exponent = 0;  // U letters passed by the block
};

/// One straightening step on a reduced word: take the leftmost run L^k
/// (followed by U), look at the letter k places left of the run. U there gives
/// zero; R there becomes U, L^k U becomes L^(k-1), and the sign exponent is the
/// number of U's in the k-1 letters directly left of the run.
///
/// Plain codes and shifted codes use this same routine; only the boundary
/// differs. `trace`, if given, receives the individual relation applications.
RewriteOutcome straightening_step(std::string_view word, LeftBoundary boundary,
                                  std::vector<RelationStep>* trace = nullptr);

/// Letter at `pos`, reading virtual positions (< 0) as U.
char letter_at(std::string_view word, std::ptrdiff_t pos);

std::size_t count_letter(std::string_view word, char letter);

}  // namespace codecalc
