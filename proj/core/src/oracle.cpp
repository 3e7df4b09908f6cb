#include "codecalc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "codecalc/errors.hpp"

namespace codecalc {

std::vector<int> staircase(std::size_t l) {
  std::vector<int> delta(l);
  for (std::size_t i = 0; i < l; ++i) delta[i] = static_cast<int>(l - 1 - i);
  return delta;
}

SignedIndex exponent_straighten(const Composition& mu) {
  const std::size_t l = mu.length();
  const std::vector<int> delta = staircase(l);
  std::vector<int> e(l);
  for (std::size_t i = 0; i < l; ++i) e[i] = mu[i] + delta[i];

  // inversion count = parity of the sorting permutation
  int inversions = 0;
  for (std::size_t a = 0; a < l; ++a) {
    for (std::size_t b = a + 1; b < l; ++b) {
      if (e[a] == e[b]) return SignedIndex::zero();
      if (e[a] < e[b]) ++inversions;
    }
  }
  std::sort(e.begin(), e.end(), std::greater<>());
  for (std::size_t i = 0; i < l; ++i) e[i] -= delta[i];
  return SignedIndex(inversions % 2 == 0 ? 1 : -1, Composition(std::move(e)));
}

IntPolynomial bialternant(const Composition& mu, std::size_t l) {
  if (mu.length() != l) {
    throw DomainError("bialternant needs " + std::to_string(l) + " parts, got " +
                      render(mu));
  }
  if (!mu.all_nonnegative()) {
    throw DomainError("bialternant needs nonnegative exponents: " + render(mu));
  }
  // Every entry is a monomial, so the Leibniz expansion is one monomial per
  // permutation: sgn(sigma) * prod_i x_i^{mu_sigma(i)}.
  IntPolynomial det(l);
  std::vector<std::size_t> sigma(l);
  std::iota(sigma.begin(), sigma.end(), 0);
  Monomial e(l);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < l; ++a) {
      for (std::size_t b = a + 1; b < l; ++b) {
        if (sigma[a] > sigma[b]) ++inversions;
      }
    }
    for (std::size_t i = 0; i < l; ++i) e[i] = mu[sigma[i]];
    det.add_term(e, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return det;
}

IntPolynomial schur_poly(const Composition& mu, std::size_t l) {
  if (mu.length() != l) {
    throw DomainError("schur_poly needs " + std::to_string(l) + " parts, got " +
                      render(mu));
  }
  if (!mu.all_nonnegative()) {
    throw DomainError("schur_poly needs nonnegative parts: " + render(mu));
  }
  const std::vector<int> delta = staircase(l);
  std::vector<int> shifted(l);
  for (std::size_t i = 0; i < l; ++i) shifted[i] = mu[i] + delta[i];
  const IntPolynomial numerator = bialternant(Composition(std::move(shifted)), l);
  if (numerator.is_zero()) return IntPolynomial(l);
  return numerator.divide_exact(bialternant(Composition(delta), l));
}

}  // namespace codecalc
