#include "codecalc/shifted.hpp"

#include <algorithm>

#include "codecalc/errors.hpp"
#include "codecalc/qvertex.hpp"

namespace codecalc {

namespace {

// Parts from the left anchor x = l, cross-checked against the right anchor
// (x after the last U is mu_1).
Composition decode_shifted_letters(std::string_view word) {
  check_alphabet(word);
  const auto l = static_cast<long>(count_letter(word, 'U'));
  std::vector<int> rows_bottom_up;
  long x = l;
  long row = l;  // row number of the next U, counted from the top
  for (char ch : word) {
    if (ch == 'R') {
      ++x;
    } else if (ch == 'L') {
      --x;
    } else {
      const long part = x - (row - 1);
      if (part <= 0) {
        throw InvalidCodeError("shifted word \"" + std::string(word) +
                               "\" decodes to a nonpositive part");
      }
      rows_bottom_up.push_back(static_cast<int>(part));
      --row;
    }
  }
  std::reverse(rows_bottom_up.begin(), rows_bottom_up.end());
  Composition mu(std::move(rows_bottom_up));
  if (!mu.empty()) {
    const std::size_t last_u = word.rfind('U');
    long right = 0;
    for (std::size_t p = last_u + 1; p-- > 0;) {
      if (word[p] == 'R') ++right;
      if (word[p] == 'L') --right;
    }
    if (l + right != mu[0]) {
      throw InvariantError("shifted decode anchors disagree on \"" + std::string(word) +
                           "\"");
    }
  }
  return mu;
}

}  // namespace

ShiftedCodeWord ShiftedCodeWord::parse(std::string_view text) {
  std::string w = canonical_tail(text);
  (void)decode_shifted_letters(w);
  return ShiftedCodeWord(std::move(w));
}

ShiftedCodeWord encode_shifted(const Composition& mu) {
  if (!mu.all_positive()) {
    throw DomainError("shifted codes need parts >= 1: " + render(mu));
  }
  const std::size_t l = mu.length();
  std::string w;
  if (l == 0) return ShiftedCodeWord();
  w.append(static_cast<std::size_t>(mu[l - 1] - 1), 'R');
  w.push_back('U');
  for (std::size_t i = l - 1; i-- > 0;) {
    // right end of row i sits at x = i + mu_i (0-based i), one step left of
    // the unshifted offset
    const int move = mu[i] - mu[i + 1] - 1;
    w.append(static_cast<std::size_t>(move >= 0 ? move : -move), move >= 0 ? 'R' : 'L');
    w.push_back('U');
  }
  return ShiftedCodeWord::parse(w);
}

Composition decode_shifted(const ShiftedCodeWord& w) {
  return decode_shifted_letters(w.letters());
}

std::string PreshiftedWord::render() const { return "...ULULU" + letters; }

ShiftedCodeWord PreshiftedWord::strip_prefix() const {
  return ShiftedCodeWord::parse(letters);
}

PreshiftedWord preshift(const CodeWord& w) {
  const Composition mu = decode_code(w);
  if (!mu.all_positive()) {
    throw DomainError("preshifted codes need parts >= 1: " + render(mu));
  }
  // Substituting U -> UL in U^inf leaves ...ULUL; keep that final L with the
  // word so it can cancel, and what survives after ...ULU is the shifted part.
  std::string raw = "L";
  for (char ch : w.letters()) {
    raw.push_back(ch);
    if (ch == 'U') raw.push_back('L');
  }
  std::string reduced = canonical_tail(raw);
  if (!reduced.empty() && reduced.front() == 'L') {
    throw InvariantError("preshift of \"" + w.letters() +
                         "\" left an uncancelled prefix L");
  }
  return PreshiftedWord{std::move(reduced)};
}

StraightenTrace shifted_straighten_traced(const ShiftedCodeWord& w) {
  StraightenTrace trace;
  const Composition start = decode_shifted(w);
  std::string word = w.letters();
  while (true) {
    const RewriteOutcome step =
        straightening_step(word, LeftBoundary::closed, &trace.relations);
    if (step.status == RewriteOutcome::Status::normal_form) break;
    if (step.status == RewriteOutcome::Status::zero) {
      trace.result = SignedIndex::zero();
      return trace;
    }
    word = step.word;
    ++trace.steps;
    trace.step_exponents.push_back(step.sign_exponent);
    trace.sign_exponent += step.sign_exponent;

    Composition now;
    try {
      now = decode_shifted_letters(word);
    } catch (const InvalidCodeError& e) {
      throw InvariantError(std::string("shifted straightening left the domain: ") +
                           e.what());
    }
    if (now.length() != start.length() || now.sum() != start.sum()) {
      throw InvariantError("shifted straightening changed length or sum: " +
                           render(start) + " -> " + render(now));
    }
  }
  const Composition end = decode_shifted_letters(word);
  if (classify(end) != IndexShape::strict_partition) {
    throw InvariantError("shifted straightening ended on " + render(end));
  }
  trace.result = SignedIndex(trace.sign_exponent % 2 == 0 ? 1 : -1, end);
  return trace;
}

SignedIndex shifted_straighten(const ShiftedCodeWord& w) {
  return shifted_straighten_traced(w).result;
}

StrictPartition lambda_bracket_shifted(const StrictPartition& lambda, int i) {
  if (i < 1) throw DomainError("shifted lambda^[i] needs i >= 1");
  if (!lambda.composition().all_positive()) {
    throw DomainError("shifted lambda^[i] needs positive parts: " +
                      render(lambda.composition()));
  }
  std::string code = encode_shifted(lambda.composition()).letters();
  const auto have = static_cast<int>(count_letter(code, 'R'));
  if (i > have) code.append(static_cast<std::size_t>(i - have), 'R');
  int seen = 0;
  for (char& ch : code) {
    if (ch == 'R' && ++seen == i) {
      ch = 'U';
      break;
    }
  }
  const StrictPartition by_code(decode_shifted_letters(canonical_tail(code)));
  const StrictPartition by_insertion = lambda_bracket_insertion(lambda, i);
  if (!(by_code == by_insertion)) {
    throw InvariantError("shifted lambda^[" + std::to_string(i) + "] of " +
                         render(lambda.composition()) + ": code gives " +
                         render(by_code.composition()) + ", insertion gives " +
                         render(by_insertion.composition()));
  }
  return by_code;
}

}  // namespace codecalc
