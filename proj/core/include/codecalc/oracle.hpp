#pragma once

#include <cstddef>
#include <vector>

#include "codecalc/index.hpp"
#include "codecalc/polynomial.hpp"

namespace codecalc {

/// delta = (l-1, l-2, ..., 1, 0).
std::vector<int> staircase(std::size_t l);

/// Operator straightening through exponent vectors: e = mu + delta; a repeated
/// entry gives Zero, otherwise sort e strictly decreasing and return
/// (sign of the sort, sorted(e) - delta). Accepts negative parts.
SignedIndex exponent_straighten(const Composition& mu);

/// det(x_i^{mu_j}) for 1 <= i, j <= l, expanded exactly. Requires
/// mu.length() == l and nonnegative parts.
IntPolynomial bialternant(const Composition& mu, std::size_t l);

/// a_{mu+delta} / a_delta in l variables, by exact division (zero when the
/// numerator vanishes).
IntPolynomial schur_poly(const Composition& mu, std::size_t l);

}  // namespace codecalc
