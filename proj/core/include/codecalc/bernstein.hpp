#pragma once

#include <string_view>
#include <vector>

#include "codecalc/index.hpp"

namespace codecalc {

enum class SeriesFamily { schur, schur_q };

std::string_view to_string(SeriesFamily family);

/// One summand (-1)^sign_exp t^t_exp s_index of the vertex-operator series.
struct SeriesTerm {
  int i = 0;          // index of lambda^(i)
  int t_exp = 0;      // |lambda^(i)| - |lambda|
  int sign_exp = 0;   // |lambda| - |lambda^(i)| + i - 1, always >= 0
  Composition index;  // lambda^(i)
  SeriesFamily family = SeriesFamily::schur;

  int sign() const { return sign_exp % 2 == 0 ? 1 : -1; }
  friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

/// B_mu = sign * B_lambda, or 0. Same as straighten_code(encode_code(mu)).
SignedIndex straighten_B(const Composition& mu);

/// B_n s_lambda, i.e. B_n B_lambda . 1, read off the code of lambda.
///
/// n >= lambda_1 prepends n. Otherwise, with k = lambda_1 - n, the letter zeta
/// k-1 places left of the rightmost U decides: U gives 0, R gives
/// (-1)^(j+1) times the partition whose code has zeta replaced by U, where j
/// counts the U's strictly between zeta and the rightmost U. Positions left of
/// the stored code read as U, so every n < -l gives 0 (the action on 1 is
/// part of the contract, which is why this case needs no separate rule).
SignedIndex bn_action(int n, const Partition& lambda);

/// lambda^(i): replace the i-th R from the left in the code of lambda by U.
/// Computed on the code and checked against the closed form
/// (lambda_1-1, ..., lambda_j-1, i-1, lambda_{j+1}, ..., lambda_l) with
/// lambda_j >= i > lambda_{j+1}. Throws DomainError for i < 1.
Partition lambda_sup(const Partition& lambda, int i);

/// Closed form of lambda^(i) only.
Partition lambda_sup_closed_form(const Partition& lambda, int i);

/// R's left of the i-th U from the right in the code; equals lambda_i
/// (0 past the length). Throws DomainError for i < 1.
int r_index(const Partition& lambda, int i);

/// Terms i = 1 .. i_max of B(t) s_lambda.
std::vector<SeriesTerm> bernstein_series(const Partition& lambda, int i_max);

/// All terms with t_min <= t_exp <= t_max, ordered by i. t_exp >= -l always.
std::vector<SeriesTerm> bernstein_series_window(const Partition& lambda, int t_min,
                                                int t_max);

}  // namespace codecalc
