#include "codecalc/codes.hpp"

#include <algorithm>

#include "codecalc/errors.hpp"

namespace codecalc {

namespace {

void check_canonical(const std::string& w) {
  if (!w.empty() && w.back() != 'U') {
    throw InvalidCodeError("code word must end in U: \"" + w + "\"");
  }
  if (!w.empty() && w.front() == 'L') {
    throw InvalidCodeError("code word cannot start with L: \"" + w + "\"");
  }
  (void)decode_letters(w);
}

Partition as_partition(const Composition& c, const std::string& word) {
  if (classify(c) == IndexShape::general) {
    throw InvariantError("straightening of \"" + word +
                         "\" ended on a non-partition " + render(c));
  }
  return Partition(c);
}

}  // namespace

CodeWord CodeWord::parse(std::string_view text) {
  std::string w = canonical_tail(text);
  check_canonical(w);
  return CodeWord(std::move(w));
}

CodeWord encode_code(const Composition& mu) {
  if (!mu.all_nonnegative()) {
    throw DomainError("codes need nonnegative parts: " + render(mu));
  }
  std::string w;
  const std::size_t l = mu.length();
  if (l == 0) return CodeWord();
  w.append(static_cast<std::size_t>(mu[l - 1]), 'R');
  w.push_back('U');
  for (std::size_t i = l - 1; i-- > 0;) {
    const int move = mu[i] - mu[i + 1];
    w.append(static_cast<std::size_t>(move >= 0 ? move : -move), move >= 0 ? 'R' : 'L');
    w.push_back('U');
  }
  return CodeWord::parse(w);
}

Composition decode_letters(std::string_view word) {
  check_alphabet(word);
  std::vector<int> rows_bottom_up;
  long x = 0;
  for (char ch : word) {
    if (ch == 'R') {
      ++x;
    } else if (ch == 'L') {
      --x;
    } else {
      if (x < 0) {
        throw InvalidCodeError("word \"" + std::string(word) +
                               "\" decodes to a negative part");
      }
      rows_bottom_up.push_back(static_cast<int>(x));
    }
  }
  std::reverse(rows_bottom_up.begin(), rows_bottom_up.end());
  return Composition(std::move(rows_bottom_up));
}

Composition decode_code(const CodeWord& w) { return decode_letters(w.letters()); }

std::size_t us_right_of_leftmost_l(std::string_view word) {
  const auto pos = word.find('L');
  if (pos == std::string_view::npos) return 0;
  return count_letter(word.substr(pos), 'U');
}

StraightenTrace straighten_code_traced(const CodeWord& w) {
  StraightenTrace trace;
  const Composition start = decode_code(w);
  std::string word = w.letters();
  while (true) {
    const RewriteOutcome step =
        straightening_step(word, LeftBoundary::u_prefix, &trace.relations);
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
      now = decode_letters(word);
    } catch (const InvalidCodeError& e) {
      throw InvariantError(std::string("straightening left the composition domain: ") +
                           e.what());
    }
    if (now.length() != start.length() || now.sum() != start.sum()) {
      throw InvariantError("straightening changed length or sum: " + render(start) +
                           " -> " + render(now));
    }
  }
  const Partition lambda = as_partition(decode_letters(word), w.letters());
  trace.result = SignedIndex(trace.sign_exponent % 2 == 0 ? 1 : -1, lambda.composition());
  return trace;
}

SignedIndex straighten_code(const CodeWord& w) { return straighten_code_traced(w).result; }

StraightenTrace reading_straighten_traced(std::string_view input) {
  check_alphabet(input);
  StraightenTrace trace;
  std::string w(input);
  const Composition start = decode_letters(w);

  for (std::size_t first_l = w.find('L'); first_l != std::string::npos;
       first_l = w.find('L')) {
    // `read` is the index of the next unread letter (read letters are erased);
    // `cur` is the current position, which may sit in the virtual U prefix.
    const std::size_t read = first_l;
    std::ptrdiff_t cur = static_cast<std::ptrdiff_t>(first_l);
    int pass_exponent = 0;
    bool started = false;
    while (!started || cur != static_cast<std::ptrdiff_t>(read)) {
      started = true;
      if (read == w.size()) break;  // the R suffix carries cur up to read
      const char ch = w[read];
      w.erase(read, 1);
      if (ch == 'L') {
        --cur;
      } else if (ch == 'R') {
        ++cur;
      } else {
        const char here = letter_at(w, cur);
        if (here == 'U') {
          trace.result = SignedIndex::zero();
          trace.sign_exponent += pass_exponent;
          return trace;
        }
        if (here != 'R') {
          throw InvariantError("reading pointer met an L left of the read position");
        }
        const auto from = static_cast<std::size_t>(cur + 1);
        const int between = static_cast<int>(
            std::count(w.begin() + static_cast<std::ptrdiff_t>(from),
                       w.begin() + static_cast<std::ptrdiff_t>(read), 'U'));
        pass_exponent += between;
        trace.step_exponents.push_back(between);
        ++trace.steps;
        w[static_cast<std::size_t>(cur)] = 'U';
        ++cur;
      }
    }
    trace.sign_exponent += pass_exponent;
  }

  w = canonical_tail(w);
  const Composition end = decode_letters(w);
  if (end.length() != start.length() || end.sum() != start.sum()) {
    throw InvariantError("reading straightening changed length or sum: " +
                         render(start) + " -> " + render(end));
  }
  const Partition lambda = as_partition(end, std::string(input));
  trace.result = SignedIndex(trace.sign_exponent % 2 == 0 ? 1 : -1, lambda.composition());
  return trace;
}

SignedIndex reading_straighten(std::string_view word) {
  return reading_straighten_traced(word).result;
}

SignedIndex reading_straighten(const CodeWord& w) { return reading_straighten(w.letters()); }

}  // namespace codecalc
