#include "codecalc_cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>

#include "codecalc/codecalc.hpp"
#include "codecalc_cli/cli.hpp"

namespace codecalc::cli {

namespace {

class Sweep {
 public:
  Sweep(std::string suite, VerifyReport& report)
      : suite_(std::move(suite)), report_(report) {}

  // One case: both sides are evaluated, library errors become {"error":kind}.
  void check(const char* op, Json args, const std::function<Json()>& expected,
             const std::function<Json()>& got) {
    ++report_.cases;
    Json want = guarded(expected);
    Json have = guarded(got);
    if (want != have) {
      report_.failures.push_back(
          {suite_, Json{{"op", op}, {"args", std::move(args)}}, std::move(want),
           std::move(have)});
    }
  }

 private:
  static Json guarded(const std::function<Json()>& fn) {
    try {
      return fn();
    } catch (const std::exception& e) {
      return error_json(e);
    }
  }

  std::string suite_;
  VerifyReport& report_;
};

void for_each_composition(int lo, int hi, int max_len,
                          const std::function<void(const Composition&)>& fn) {
  for (int len = 0; len <= max_len; ++len) {
    std::vector<int> parts(static_cast<std::size_t>(len), lo);
    while (true) {
      fn(Composition(parts));
      std::size_t pos = parts.size();
      while (pos > 0 && parts[pos - 1] == hi) parts[--pos] = lo;
      if (pos == 0) break;
      ++parts[pos - 1];
    }
  }
}

// Partitions with positive parts <= max_part and at most max_len parts.
void for_each_partition(int max_part, int max_len,
                        const std::function<void(const Partition&)>& fn) {
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int cap) {
    fn(Partition(Composition(parts)));
    if (static_cast<int>(parts.size()) == max_len) return;
    for (int p = 1; p <= cap; ++p) {
      parts.push_back(p);
      rec(p);
      parts.pop_back();
    }
  };
  rec(max_part);
}

void for_each_strict_partition(int max_part, int max_len,
                               const std::function<void(const StrictPartition&)>& fn) {
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int cap) {
    fn(StrictPartition(Composition(parts)));
    if (static_cast<int>(parts.size()) == max_len) return;
    for (int p = 1; p <= cap; ++p) {
      parts.push_back(p);
      rec(p - 1);
      parts.pop_back();
    }
  };
  rec(max_part);
}

Composition prepend(int n, const Composition& c) {
  std::vector<int> parts{n};
  parts.insert(parts.end(), c.vec().begin(), c.vec().end());
  return Composition(std::move(parts));
}

// B_n s_lambda by the exponent oracle: a negative part in the sorted result
// means a vanishing determinant column.
SignedIndex bn_by_exponents(int n, const Partition& lambda) {
  const SignedIndex r = exponent_straighten(prepend(n, lambda.composition()));
  if (r.is_zero() || !r.index().all_nonnegative()) return SignedIndex::zero();
  return r;
}

void sweep_codes(Sweep& s, const SweepBounds& b) {
  for_each_composition(0, b.max_part, b.max_len, [&](const Composition& mu) {
    const Json args{{"index", to_json(mu)}};
    const CodeWord w = encode_code(mu);
    s.check("code_round_trip", args, [&] { return to_json(mu); },
            [&] { return to_json(decode_code(w)); });
    s.check("reduce_idempotent", args, [&] { return Json(w.letters()); },
            [&] { return Json(reduce_word(w.letters())); });
    const auto by_code = [&] { return to_json(straighten_code(w)); };
    s.check("reading_straighten", args, by_code,
            [&] { return to_json(reading_straighten(w)); });
    s.check("exponent_straighten", args, by_code,
            [&] { return to_json(exponent_straighten(mu)); });
    s.check("step_bound", args, [] { return Json(true); }, [&] {
      return Json(straighten_code_traced(w).steps <= us_right_of_leftmost_l(w.letters()));
    });
  });
}

void sweep_bernstein(Sweep& s, const SweepBounds& b) {
  for_each_partition(b.max_part, b.max_len, [&](const Partition& lambda) {
    const int l = static_cast<int>(lambda.length());
    const int lo = -l - 2;
    const int hi = lambda.first() + 2;
    const auto series = bernstein_series_window(lambda, lo, hi);
    for (int n = lo; n <= hi; ++n) {
      const Json args{{"n", n}, {"lambda", to_json(lambda.composition())}};
      const SignedIndex action = bn_action(n, lambda);
      s.check("bn_action", args, [&] { return to_json(bn_by_exponents(n, lambda)); },
              [&] { return to_json(action); });
      s.check("bn_action_vanishing", args,
              [&] {
                bool rule = n < -l;
                for (int j = 1; j <= l; ++j) {
                  rule = rule || n == lambda[static_cast<std::size_t>(j - 1)] - j;
                }
                return Json(rule);
              },
              [&] { return Json(action.is_zero()); });
      s.check("series_term", args, [&] { return to_json(action); }, [&] {
        SignedIndex from_series = SignedIndex::zero();
        for (const auto& term : series) {
          if (term.t_exp == n) from_series = SignedIndex(term.sign(), term.index);
        }
        return to_json(from_series);
      });
    }
    const int i_max = hi + l + 1;
    s.check("series_indices", Json{{"lambda", to_json(lambda.composition())}, {"i_max", i_max}},
            [&] {
              Json is = Json::array();
              for (int i = 1; i <= i_max; ++i) is.push_back(i);
              return is;
            },
            [&] {
              Json is = Json::array();
              for (const auto& term : bernstein_series(lambda, i_max)) is.push_back(term.i);
              return is;
            });
    for (int i = 1; i <= 20; ++i) {
      s.check("lambda_sup", Json{{"lambda", to_json(lambda.composition())}, {"i", i}},
              [&] { return to_json(lambda_sup_closed_form(lambda, i).composition()); },
              [&] { return to_json(lambda_sup(lambda, i).composition()); });
    }
    for (int i = 1; i <= l + 1; ++i) {
      s.check("r_index", Json{{"lambda", to_json(lambda.composition())}, {"i", i}},
              [&] { return Json(i <= l ? lambda[static_cast<std::size_t>(i - 1)] : 0); },
              [&] { return Json(r_index(lambda, i)); });
    }
  });
}

void sweep_qvertex(Sweep& s, const SweepBounds& b) {
  for_each_composition(0, b.max_part, b.max_len, [&](const Composition& mu) {
    s.check("straighten_Y_code", Json{{"index", to_json(mu)}},
            [&] { return to_json(straighten_Y_perm(mu)); },
            [&] { return to_json(straighten_Y_code(mu)); });
  });
  for_each_strict_partition(b.max_part, b.max_len, [&](const StrictPartition& lambda) {
    const int n_max = lambda.empty() ? 5 : lambda[0] + 5;
    const Json lam = to_json(lambda.composition());
    const auto j_form = q_series_j_form(lambda, n_max);
    s.check("q_series_forms", Json{{"lambda", lam}, {"n_max", n_max}},
            [&] {
              Json terms = Json::array();
              for (const auto& t : j_form) terms.push_back(to_json(t));
              return terms;
            },
            [&] {
              Json terms = Json::array();
              for (const auto& t : q_series_i_form(lambda, n_max)) {
                if (t.n <= n_max) terms.push_back(to_json(t));
              }
              return terms;
            });
    for (int n = 0; n <= n_max; ++n) {
      s.check("yn_action", Json{{"n", n}, {"lambda", lam}},
              [&] {
                for (const auto& t : j_form) {
                  if (t.n == n) return to_json(SignedIndex(t.sign(), t.index));
                }
                return to_json(SignedIndex::zero());
              },
              [&] { return to_json(yn_action(n, lambda)); });
    }
    for (int i = 0; i <= 10; ++i) {
      s.check("lambda_bracket", Json{{"lambda", lam}, {"i", i}},
              [&] { return to_json(lambda_bracket_insertion(lambda, i).composition()); },
              [&] { return to_json(lambda_bracket(lambda, i).composition()); });
    }
  });
}

void sweep_shifted(Sweep& s, const SweepBounds& b) {
  for_each_composition(1, std::max(b.max_part, 1), b.max_len, [&](const Composition& mu) {
    const Json args{{"index", to_json(mu)}};
    const ShiftedCodeWord w = encode_shifted(mu);
    s.check("shifted_round_trip", args, [&] { return to_json(mu); },
            [&] { return to_json(decode_shifted(w)); });
    s.check("shifted_straighten", args, [&] { return to_json(straighten_Y_perm(mu)); },
            [&] { return to_json(shifted_straighten(w)); });
    s.check("preshift", args, [&] { return Json(w.letters()); },
            [&] { return Json(preshift(encode_code(mu)).letters); });
  });
  for_each_strict_partition(b.max_part, b.max_len, [&](const StrictPartition& lambda) {
    for (int i = 1; i <= 10; ++i) {
      s.check("lambda_bracket_shifted",
              Json{{"lambda", to_json(lambda.composition())}, {"i", i}},
              [&] { return to_json(lambda_bracket_insertion(lambda, i).composition()); },
              [&] { return to_json(lambda_bracket_shifted(lambda, i).composition()); });
    }
  });
}

void sweep_oracle(Sweep& s, const SweepBounds& b) {
  for_each_composition(0, b.max_part, b.max_len, [&](const Composition& mu) {
    if (mu.empty()) return;
    const std::size_t l = mu.length();
    s.check("schur_poly", Json{{"index", to_json(mu)}, {"l", l}},
            [&] {
              const SignedIndex r = straighten_B(mu);
              if (r.is_zero()) return Json(IntPolynomial(l).render());
              return Json((mpz_class(r.sign()) * schur_poly(r.index(), l)).render());
            },
            [&] { return Json(schur_poly(mu, l).render()); });
  });
}

using SweepFn = void (*)(Sweep&, const SweepBounds&);

SweepFn find_sweep(std::string_view suite) {
  if (suite == "codes") return sweep_codes;
  if (suite == "bernstein") return sweep_bernstein;
  if (suite == "qvertex") return sweep_qvertex;
  if (suite == "shifted") return sweep_shifted;
  if (suite == "oracle") return sweep_oracle;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& sweep_suites() {
  static const std::vector<std::string> names{"codes", "bernstein", "qvertex", "shifted",
                                              "oracle"};
  return names;
}

VerifyReport run_sweep(std::string_view suite, const SweepBounds& bounds) {
  if (bounds.max_part < 0 || bounds.max_len < 0) {
    throw UsageError("sweep bounds must be nonnegative");
  }
  std::vector<std::string> names;
  if (suite == "all") {
    names = sweep_suites();
  } else if (find_sweep(suite)) {
    names.emplace_back(suite);
  } else {
    throw UsageError("unknown suite \"" + std::string(suite) + "\"");
  }

  VerifyReport report;
  report.suite = std::string(suite);
  const auto start = std::chrono::steady_clock::now();
  for (const auto& name : names) {
    Sweep sweep(name, report);
    find_sweep(name)(sweep, bounds);
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const VerifyFailure& a, const VerifyFailure& b) {
                     return a.input.dump() < b.input.dump();
                   });
  return report;
}

Json failure_line(const VerifyFailure& f) {
  return Json{{"suite", f.suite}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}};
}

}  // namespace codecalc::cli
