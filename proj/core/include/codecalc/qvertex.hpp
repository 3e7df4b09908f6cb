#pragma once

#include <tuple>
#include <vector>

#include "codecalc/codes.hpp"
#include "codecalc/index.hpp"

namespace codecalc {

/// One summand (-1)^sign_exp t^n Q_index of Y(t) Q_lambda.
struct QSeriesTerm {
  int n = 0;         // t exponent, |index| - |lambda|
  int j = 0;         // insertion position: index = (lambda_1..lambda_j, n, ...)
  int i = 0;         // index == lambda^[i]
  int sign_exp = 0;  // l + |lambda| - |lambda^[i]| + i, equal to j
  Composition index;

  int sign() const { return sign_exp % 2 == 0 ? 1 : -1; }
  friend bool operator==(const QSeriesTerm&, const QSeriesTerm&) = default;
  friend auto operator<=>(const QSeriesTerm& a, const QSeriesTerm& b) {
    return std::tie(a.n, a.j, a.i, a.sign_exp, a.index) <=>
           std::tie(b.n, b.j, b.i, b.sign_exp, b.index);
  }
};

/// Y_{-mu} by anticommutation: Zero on a repeated part, otherwise the sign of
/// the permutation sorting mu strictly decreasing.
SignedIndex straighten_Y_perm(const Composition& mu);

/// Y_{-mu} on the plain code of mu. Each step takes the leftmost run L^k
/// (followed by U) and the smallest j with k R's among the k+j letters to its
/// left; a U just beyond those letters gives zero, otherwise a U is inserted
/// there, L^k U becomes L^k and the sign flips by (-1)^j. Two adjacent U's in
/// the stored word (equal adjacent parts) give zero.
///
/// The virtual U prefix is not a row, so an insertion at the very start of
/// the word is allowed: that is the zero part moving to the bottom row.
SignedIndex straighten_Y_code(const Composition& mu);
StraightenTrace straighten_Y_code_traced(const Composition& mu);

/// Y_{-n} Q_lambda for n >= 0 and lambda with positive parts (or empty).
/// Throws DomainError for n < 0.
SignedIndex yn_action(int n, const StrictPartition& lambda);

/// lambda^[i]. For i >= 1 the i-th smallest positive integer missing from
/// lambda is inserted; the plain-code construction (a U between the i-th pair
/// of adjacent R's) runs too and must agree. i = 0 appends a 0 part.
StrictPartition lambda_bracket(const StrictPartition& lambda, int i);

/// Insertion definition alone.
StrictPartition lambda_bracket_insertion(const StrictPartition& lambda, int i);

/// Form A: for j = 0..l, n from lambda_{j+1}+1 to lambda_j-1, with
/// lambda_0 = inf (cut at n_max) and lambda_{l+1} = -1. Sorted by n.
std::vector<QSeriesTerm> q_series_j_form(const StrictPartition& lambda, int n_max);

/// Form B: terms for i = 0..i_max via lambda^[i]. Sorted by i (equivalently n).
std::vector<QSeriesTerm> q_series_i_form(const StrictPartition& lambda, int i_max);

}  // namespace codecalc
