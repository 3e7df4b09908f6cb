#include "codecalc/bernstein.hpp"

#include <string>

#include "codecalc/codes.hpp"
#include "codecalc/errors.hpp"

namespace codecalc {

std::string_view to_string(SeriesFamily family) {
  return family == SeriesFamily::schur ? "schur" : "schurQ";
}

SignedIndex straighten_B(const Composition& mu) {
  return straighten_code(encode_code(mu));
}

namespace {

Composition prepend(int n, const Composition& c) {
  std::vector<int> parts;
  parts.reserve(c.length() + 1);
  parts.push_back(n);
  parts.insert(parts.end(), c.vec().begin(), c.vec().end());
  return Composition(std::move(parts));
}

}  // namespace

SignedIndex bn_action(int n, const Partition& lambda) {
  if (n >= lambda.first()) {
    return SignedIndex(1, prepend(n, lambda.composition()));
  }

  const std::string code = encode_code(lambda.composition()).letters();
  const auto rightmost_u = static_cast<std::ptrdiff_t>(code.size()) - 1;  // -1: prefix
  const long long k = static_cast<long long>(lambda.first()) - n;
  const auto zeta = static_cast<std::ptrdiff_t>(rightmost_u - (k - 1));

  SignedIndex result = SignedIndex::zero();
  if (letter_at(code, zeta) == 'R') {
    int j = 0;
    for (std::ptrdiff_t p = zeta + 1; p < rightmost_u; ++p) {
      if (code[static_cast<std::size_t>(p)] == 'U') ++j;
    }
    std::string nu = code;
    nu[static_cast<std::size_t>(zeta)] = 'U';
    result = SignedIndex((j + 1) % 2 == 0 ? 1 : -1, decode_letters(nu));
  }

  // Operator straightening of (n, lambda) counts the U adjacent to the run, so
  // its exponent is the j+1 above; both routes must land on the same answer.
  if (n >= 0) {
    const SignedIndex via_operator = straighten_B(prepend(n, lambda.composition()));
    if (!(via_operator == result)) {
      throw InvariantError("bn_action(" + std::to_string(n) + ", " +
                           render(lambda.composition()) + ") = " + render(result, "s") +
                           " but operator straightening gives " +
                           render(via_operator, "s"));
    }
  }
  return result;
}

Partition lambda_sup_closed_form(const Partition& lambda, int i) {
  if (i < 1) throw DomainError("lambda^(i) needs i >= 1, got " + std::to_string(i));
  // j = number of parts >= i
  std::size_t j = 0;
  while (j < lambda.length() && lambda[j] >= i) ++j;
  std::vector<int> parts;
  parts.reserve(lambda.length() + 1);
  for (std::size_t m = 0; m < j; ++m) parts.push_back(lambda[m] - 1);
  parts.push_back(i - 1);
  for (std::size_t m = j; m < lambda.length(); ++m) parts.push_back(lambda[m]);
  return Partition(Composition(std::move(parts)));
}

Partition lambda_sup(const Partition& lambda, int i) {
  if (i < 1) throw DomainError("lambda^(i) needs i >= 1, got " + std::to_string(i));
  std::string code = encode_code(lambda.composition()).letters();
  const auto have = static_cast<int>(count_letter(code, 'R'));
  if (i > have) code.append(static_cast<std::size_t>(i - have), 'R');

  int seen = 0;
  for (char& ch : code) {
    if (ch == 'R' && ++seen == i) {
      ch = 'U';
      break;
    }
  }
  const Partition by_code(decode_letters(canonical_tail(code)));
  const Partition closed = lambda_sup_closed_form(lambda, i);
  if (!(by_code == closed)) {
    throw InvariantError("lambda^(" + std::to_string(i) + ") of " +
                         render(lambda.composition()) + ": code gives " +
                         render(by_code.composition()) + ", closed form gives " +
                         render(closed.composition()));
  }
  return by_code;
}

int r_index(const Partition& lambda, int i) {
  if (i < 1) throw DomainError("r_i needs i >= 1, got " + std::to_string(i));
  const std::string code = encode_code(lambda.composition()).letters();
  int us = 0;
  int count = 0;  // stays 0 when the i-th U from the right is in the prefix
  for (auto it = code.rbegin(); it != code.rend(); ++it) {
    if (*it == 'U' && ++us == i) {
      count = static_cast<int>(
          count_letter(std::string_view(code).substr(0, static_cast<std::size_t>(
                                                            code.rend() - it - 1)),
                       'R'));
      break;
    }
  }
  const int expected = static_cast<std::size_t>(i) <= lambda.length()
                           ? lambda[static_cast<std::size_t>(i - 1)]
                           : 0;
  if (count != expected) {
    throw InvariantError("r_" + std::to_string(i) + " of " +
                         render(lambda.composition()) + " counted " +
                         std::to_string(count) + " R's, expected " +
                         std::to_string(expected));
  }
  return count;
}

namespace {

SeriesTerm make_term(const Partition& lambda, int i) {
  const Partition sup = lambda_sup(lambda, i);
  SeriesTerm term;
  term.i = i;
  term.t_exp = static_cast<int>(sup.sum() - lambda.sum());
  term.sign_exp = static_cast<int>(lambda.sum() - sup.sum()) + i - 1;
  term.index = sup.composition();
  term.family = SeriesFamily::schur;
  if (term.sign_exp < 0) {
    throw InvariantError("negative sign exponent in series term");
  }
  return term;
}

}  // namespace

std::vector<SeriesTerm> bernstein_series(const Partition& lambda, int i_max) {
  if (i_max < 1) throw DomainError("i_max must be >= 1");
  std::vector<SeriesTerm> terms;
  terms.reserve(static_cast<std::size_t>(i_max));
  for (int i = 1; i <= i_max; ++i) terms.push_back(make_term(lambda, i));
  return terms;
}

std::vector<SeriesTerm> bernstein_series_window(const Partition& lambda, int t_min,
                                                int t_max) {
  // t_exp = i - 1 - j with 0 <= j <= l, so i <= t_max + 1 + l covers the window.
  std::vector<SeriesTerm> terms;
  const long long last = static_cast<long long>(t_max) + 1 +
                         static_cast<long long>(lambda.length());
  for (int i = 1; i <= last; ++i) {
    SeriesTerm term = make_term(lambda, i);
    if (term.t_exp >= t_min && term.t_exp <= t_max) terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace codecalc
