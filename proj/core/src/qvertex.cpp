#include "codecalc/qvertex.hpp"

#include <algorithm>
#include <string>

#include "codecalc/errors.hpp"

namespace codecalc {

SignedIndex straighten_Y_perm(const Composition& mu) {
  std::vector<int> parts = mu.vec();
  // insertion sort into strictly decreasing order, counting transpositions
  int swaps = 0;
  for (std::size_t a = 1; a < parts.size(); ++a) {
    for (std::size_t b = a; b > 0 && parts[b - 1] <= parts[b]; --b) {
      if (parts[b - 1] == parts[b]) return SignedIndex::zero();
      std::swap(parts[b - 1], parts[b]);
      ++swaps;
    }
  }
  return SignedIndex(swaps % 2 == 0 ? 1 : -1, Composition(std::move(parts)));
}

namespace {

bool has_adjacent_us(const std::string& w) { return w.find("UU") != std::string::npos; }

}  // namespace

StraightenTrace straighten_Y_code_traced(const Composition& mu) {
  StraightenTrace trace;
  std::string word = encode_code(mu).letters();
  const std::size_t bound = us_right_of_leftmost_l(word);

  while (true) {
    if (has_adjacent_us(word)) {
      trace.relations.push_back(
          {RelationKind::zero, static_cast<std::ptrdiff_t>(word.find("UU")), false});
      trace.result = SignedIndex::zero();
      return trace;
    }
    const std::size_t run_start = word.find('L');
    if (run_start == std::string::npos) break;
    std::size_t run_end = run_start;
    while (run_end < word.size() && word[run_end] == 'L') ++run_end;
    if (run_end == word.size() || word[run_end] != 'U') {
      throw InvariantError("Y straightening met a non-canonical word \"" + word + "\"");
    }
    const auto k = static_cast<std::ptrdiff_t>(run_end - run_start);

    // Walk left until k R's have been passed; the block passes R's without
    // sign change and U's with one.
    std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(run_start);
    std::ptrdiff_t rs = 0;
    int j = 0;
    while (rs < k) {
      --pos;
      if (pos < 0) {
        throw InvariantError("Y straightening found fewer than k R's left of the run in \"" +
                             word + "\"");
      }
      const bool is_u = word[static_cast<std::size_t>(pos)] == 'U';
      if (is_u) {
        ++j;
      } else {
        ++rs;
      }
      trace.relations.push_back(
          {is_u ? RelationKind::permute_past_u : RelationKind::permute_past_r, pos, is_u});
    }
    // pos is beta_{k+j}; the letter left of it decides. The start of the word
    // is the x = 0 boundary, where a zero-length row can be inserted.
    const std::ptrdiff_t beyond = pos - 1;
    if (beyond >= 0 && word[static_cast<std::size_t>(beyond)] == 'U') {
      trace.relations.push_back({RelationKind::zero, beyond, false});
      trace.result = SignedIndex::zero();
      return trace;
    }
    trace.relations.push_back({RelationKind::cancel, beyond, false});

    std::string next = word.substr(0, static_cast<std::size_t>(pos));
    next.push_back('U');
    next.append(word, static_cast<std::size_t>(pos), run_end - static_cast<std::size_t>(pos));
    next.append(word, run_end + 1, std::string::npos);
    word = canonical_tail(next);

    ++trace.steps;
    trace.step_exponents.push_back(j);
    trace.sign_exponent += j;

    const Composition now = decode_letters(word);
    if (now.length() != mu.length() || now.sum() != mu.sum()) {
      throw InvariantError("Y straightening changed length or sum: " + render(mu) +
                           " -> " + render(now));
    }
  }
  if (trace.steps > bound) {
    throw InvariantError("Y straightening of " + render(mu) + " took " +
                         std::to_string(trace.steps) + " steps, bound is " +
                         std::to_string(bound));
  }
  const Composition end = decode_letters(word);
  if (classify(end) != IndexShape::strict_partition) {
    throw InvariantError("Y straightening ended on " + render(end));
  }
  trace.result = SignedIndex(trace.sign_exponent % 2 == 0 ? 1 : -1, end);
  return trace;
}

SignedIndex straighten_Y_code(const Composition& mu) {
  return straighten_Y_code_traced(mu).result;
}

SignedIndex yn_action(int n, const StrictPartition& lambda) {
  if (n < 0) {
    throw DomainError("Y_{-n} acts on Q_lambda only for n >= 0, got n = " +
                      std::to_string(n));
  }
  if (lambda.has_zero_part()) {
    throw DomainError("yn_action needs lambda with positive parts: " +
                      render(lambda.composition()));
  }
  std::size_t j = 0;
  while (j < lambda.length() && lambda[j] > n) ++j;
  if (j < lambda.length() && lambda[j] == n) return SignedIndex::zero();
  std::vector<int> parts = lambda.composition().vec();
  parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(j), n);
  return SignedIndex(j % 2 == 0 ? 1 : -1, Composition(std::move(parts)));
}

StrictPartition lambda_bracket_insertion(const StrictPartition& lambda, int i) {
  if (i < 0) throw DomainError("lambda^[i] needs i >= 0");
  std::vector<int> parts = lambda.composition().vec();
  if (i == 0) {
    if (lambda.has_zero_part()) {
      throw DomainError("lambda^[0] of " + render(lambda.composition()) +
                        " would repeat the zero part");
    }
    parts.push_back(0);
    return StrictPartition(Composition(std::move(parts)));
  }
  int value = 0;
  for (int found = 0; found < i;) {
    ++value;
    if (std::find(parts.begin(), parts.end(), value) == parts.end()) ++found;
  }
  parts.insert(std::upper_bound(parts.begin(), parts.end(), value, std::greater<>()),
               value);
  return StrictPartition(Composition(std::move(parts)));
}

StrictPartition lambda_bracket(const StrictPartition& lambda, int i) {
  const StrictPartition by_insertion = lambda_bracket_insertion(lambda, i);
  if (i == 0) return by_insertion;

  std::string code = encode_code(lambda.composition()).letters();
  // Enough suffix R's that the i-th adjacent RR pair exists.
  code.append(static_cast<std::size_t>(i) + 1, 'R');
  int seen = 0;
  std::size_t at = std::string::npos;
  for (std::size_t p = 1; p < code.size(); ++p) {
    if (code[p - 1] == 'R' && code[p] == 'R' && ++seen == i) {
      at = p;
      break;
    }
  }
  if (at == std::string::npos) {
    throw InvariantError("no RR pair number " + std::to_string(i));
  }
  code.insert(at, 1, 'U');
  const StrictPartition by_code(decode_letters(canonical_tail(code)));
  if (!(by_code == by_insertion)) {
    throw InvariantError("lambda^[" + std::to_string(i) + "] of " +
                         render(lambda.composition()) + ": code gives " +
                         render(by_code.composition()) + ", insertion gives " +
                         render(by_insertion.composition()));
  }
  return by_code;
}

namespace {

void require_positive(const StrictPartition& lambda) {
  if (lambda.has_zero_part()) {
    throw DomainError("Q series need lambda with positive parts: " +
                      render(lambda.composition()));
  }
}

}  // namespace

std::vector<QSeriesTerm> q_series_j_form(const StrictPartition& lambda, int n_max) {
  require_positive(lambda);
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  const auto l = static_cast<int>(lambda.length());
  std::vector<QSeriesTerm> terms;
  for (int j = 0; j <= l; ++j) {
    const int lo = (j < l ? lambda[static_cast<std::size_t>(j)] : -1) + 1;
    const int hi = j == 0 ? n_max : std::min(lambda[static_cast<std::size_t>(j - 1)] - 1, n_max);
    for (int n = lo; n <= hi; ++n) {
      QSeriesTerm term;
      term.n = n;
      term.j = j;
      term.i = n - l + j;
      term.sign_exp = j;
      std::vector<int> parts = lambda.composition().vec();
      parts.insert(parts.begin() + j, n);
      term.index = Composition(std::move(parts));
      terms.push_back(std::move(term));
    }
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

std::vector<QSeriesTerm> q_series_i_form(const StrictPartition& lambda, int i_max) {
  require_positive(lambda);
  if (i_max < 0) throw DomainError("i_max must be >= 0");
  const auto l = static_cast<int>(lambda.length());
  std::vector<QSeriesTerm> terms;
  for (int i = 0; i <= i_max; ++i) {
    const StrictPartition bracket = lambda_bracket(lambda, i);
    QSeriesTerm term;
    term.i = i;
    term.n = static_cast<int>(bracket.sum() - lambda.sum());
    term.sign_exp = l + static_cast<int>(lambda.sum() - bracket.sum()) + i;
    term.j = 0;
    while (static_cast<std::size_t>(term.j) < lambda.length() &&
           lambda[static_cast<std::size_t>(term.j)] > term.n) {
      ++term.j;
    }
    if (term.sign_exp != term.j) {
      throw InvariantError("Q series sign exponent " + std::to_string(term.sign_exp) +
                           " differs from insertion position " + std::to_string(term.j));
    }
    term.index = bracket.composition();
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace codecalc
