#include "codecalc_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "codecalc/codecalc.hpp"
#include "codecalc_cli/corpus.hpp"
#include "codecalc_cli/json_io.hpp"
#include "codecalc_cli/verify.hpp"

namespace codecalc::cli {

namespace {

enum class Format { text, json };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  throw UsageError("format must be text or json, got \"" + name + "\"");
}

struct Options {
  std::string format;
  std::string index_positional;
  std::string index_flag;
  std::string algebra = "b";
  std::string method;
  std::string word;
  std::optional<int> n;
  std::optional<int> i_max;
  std::optional<int> t_min;
  std::optional<int> t_max;
  std::optional<int> n_max;
  std::string form = "j";
  bool shifted = false;
  bool decode = false;
  bool preshifted = false;
  bool trace = false;
  std::string suite;
  int max_part = 6;
  int max_len = 5;
  std::string output;
  std::string file;
  bool record = false;
};

std::string index_text(const Options& o) {
  if (!o.index_positional.empty() && !o.index_flag.empty()) {
    throw UsageError("give the index either positionally or with --index, not both");
  }
  return o.index_positional.empty() ? o.index_flag : o.index_positional;
}

Composition index_arg(const Options& o) { return parse_index(index_text(o)); }

void emit(std::ostream& out, Format f, const std::string& text, const Json& json) {
  if (f == Format::json) {
    out << json.dump() << '\n';
  } else {
    out << text << '\n';
  }
}

// "-1 * t^-1 * s[0,0]"
std::string render_term(int sign, int t_exp, const Composition& index, const char* symbol) {
  std::string s = sign > 0 ? "+1 * t^" : "-1 * t^";
  s += std::to_string(t_exp);
  s += " * ";
  s += symbol;
  s += '[' + render(index) + ']';
  return s;
}

Json trace_to_json(const StraightenTrace& t) {
  Json relations = Json::array();
  for (const auto& r : t.relations) {
    relations.push_back(Json{{"kind", std::string(to_string(r.kind))},
                             {"position", r.position},
                             {"sign_flip", r.sign_flip}});
  }
  return Json{{"result", to_json(t.result)},
              {"steps", t.steps},
              {"step_exponents", t.step_exponents},
              {"sign_exponent", t.sign_exponent},
              {"relations", relations}};
}

std::string trace_to_text(const StraightenTrace& t, const char* symbol) {
  std::ostringstream s;
  s << "steps: " << t.steps << '\n';
  s << "step exponents:";
  for (int e : t.step_exponents) s << ' ' << e;
  s << '\n';
  s << "sign exponent: " << t.sign_exponent << '\n';
  for (const auto& r : t.relations) {
    s << "  " << to_string(r.kind) << " at " << r.position
      << (r.sign_flip ? " (sign flip)" : "") << '\n';
  }
  s << render(t.result, symbol);
  return s.str();
}

void check_algebra(const Options& o) {
  if (o.algebra != "b" && o.algebra != "q") {
    throw UsageError("algebra must be b or q, got \"" + o.algebra + "\"");
  }
}

int cmd_code(const Options& o, Format f, std::ostream& out) {
  if (o.decode && o.preshifted) throw UsageError("--decode and --preshifted exclude each other");
  if (o.decode) {
    const std::string w = index_text(o);
    const Composition mu = o.shifted ? decode_shifted(ShiftedCodeWord::parse(w))
                                     : decode_code(CodeWord::parse(w));
    emit(out, f, render(mu), Json{{"code", w}, {"index", to_json(mu)}});
    return kOk;
  }
  const Composition mu = index_arg(o);
  if (o.preshifted) {
    if (o.shifted) throw UsageError("--preshifted already produces the shifted code");
    const PreshiftedWord p = preshift(encode_code(mu));
    emit(out, f, p.render(),
         Json{{"index", to_json(mu)}, {"preshifted", p.render()}, {"shifted", p.letters}});
    return kOk;
  }
  const std::string letters =
      o.shifted ? encode_shifted(mu).letters() : encode_code(mu).letters();
  emit(out, f, letters, Json{{"index", to_json(mu)}, {"code", letters}});
  return kOk;
}

StraightenTrace straighten_b(const Options& o, const std::string& method) {
  if (!o.word.empty()) {
    if (method == "code") return straighten_code_traced(CodeWord::parse(o.word));
    if (method == "reading") return reading_straighten_traced(o.word);
    throw UsageError("--word works with methods code and reading");
  }
  const Composition mu = index_arg(o);
  if (method == "code") return straighten_code_traced(encode_code(mu));
  if (method == "reading") return reading_straighten_traced(encode_code(mu).letters());
  StraightenTrace t;
  t.result = exponent_straighten(mu);
  return t;
}

StraightenTrace straighten_q(const Options& o, const std::string& method) {
  if (!o.word.empty()) throw UsageError("--word is only for algebra b");
  const Composition mu = index_arg(o);
  if (method == "code") return straighten_Y_code_traced(mu);
  if (method == "shifted") return shifted_straighten_traced(encode_shifted(mu));
  StraightenTrace t;
  t.result = straighten_Y_perm(mu);
  return t;
}

int cmd_straighten(const Options& o, Format f, std::ostream& out) {
  check_algebra(o);
  const bool b = o.algebra == "b";
  const std::string method = o.method.empty() ? (b ? "code" : "perm") : o.method;
  const std::vector<std::string> allowed =
      b ? std::vector<std::string>{"code", "reading", "oracle", "all"}
        : std::vector<std::string>{"code", "perm", "shifted", "all"};
  if (std::find(allowed.begin(), allowed.end(), method) == allowed.end()) {
    throw UsageError("method \"" + method + "\" is not available for algebra " + o.algebra);
  }
  if (o.trace && (method == "oracle" || method == "perm" || method == "all")) {
    throw UsageError("--trace needs a code-based method");
  }
  const char* symbol = b ? "B" : "Y";
  auto run_method = [&](const std::string& m) {
    return b ? straighten_b(o, m) : straighten_q(o, m);
  };

  if (method == "all") {
    std::vector<std::string> methods(allowed.begin(), allowed.end() - 1);
    if (!b && !index_arg(o).all_positive()) {
      // shifted codes exist only for positive parts
      methods.erase(std::find(methods.begin(), methods.end(), "shifted"));
    }
    if (b && !o.word.empty()) methods = {"code", "reading"};
    const SignedIndex first = run_method(methods.front()).result;
    for (std::size_t m = 1; m < methods.size(); ++m) {
      const SignedIndex other = run_method(methods[m]).result;
      if (!(other == first)) {
        throw InvariantError("method " + methods.front() + " gives " + render(first, symbol) +
                             " but " + methods[m] + " gives " + render(other, symbol));
      }
    }
    emit(out, f, render(first, symbol), to_json(first));
    return kOk;
  }

  const StraightenTrace t = run_method(method);
  if (o.trace) {
    emit(out, f, trace_to_text(t, symbol), trace_to_json(t));
  } else {
    emit(out, f, render(t.result, symbol), to_json(t.result));
  }
  return kOk;
}

int cmd_act(const Options& o, Format f, std::ostream& out) {
  check_algebra(o);
  if (!o.n) throw UsageError("act needs -n");
  const Composition lambda = index_arg(o);
  if (o.algebra == "b") {
    const SignedIndex r = bn_action(*o.n, Partition(lambda));
    emit(out, f, render(r, "s"), to_json(r));
  } else {
    const SignedIndex r = yn_action(*o.n, StrictPartition(lambda));
    emit(out, f, render(r, "Q"), to_json(r));
  }
  return kOk;
}

int cmd_series(const Options& o, Format f, std::ostream& out) {
  check_algebra(o);
  const Composition lambda = index_arg(o);
  std::vector<std::string> lines;
  Json terms = Json::array();
  if (o.algebra == "b") {
    if (o.n_max) throw UsageError("--n-max is for algebra q");
    if (o.i_max && o.t_max) throw UsageError("give --i-max or --t-max, not both");
    const Partition p(lambda);
    std::vector<SeriesTerm> series;
    if (o.t_max) {
      const int t_min = o.t_min.value_or(-static_cast<int>(p.length()));
      series = bernstein_series_window(p, t_min, *o.t_max);
    } else {
      if (o.t_min) throw UsageError("--t-min needs --t-max");
      series = bernstein_series(p, o.i_max.value_or(5));
    }
    for (const auto& t : series) {
      lines.push_back(render_term(t.sign(), t.t_exp, t.index, "s"));
      terms.push_back(to_json(t));
    }
  } else {
    if (o.t_max || o.t_min) throw UsageError("--t-min/--t-max are for algebra b");
    const StrictPartition p(lambda);
    std::vector<QSeriesTerm> series;
    if (o.form == "j") {
      if (o.i_max) throw UsageError("--i-max goes with --form i");
      series = q_series_j_form(p, o.n_max.value_or(5));
    } else if (o.form == "i") {
      if (o.n_max) throw UsageError("--n-max goes with --form j");
      series = q_series_i_form(p, o.i_max.value_or(5));
    } else {
      throw UsageError("form must be j or i, got \"" + o.form + "\"");
    }
    for (const auto& t : series) {
      lines.push_back(render_term(t.sign(), t.n, t.index, "Q"));
      terms.push_back(to_json(t));
    }
  }
  if (f == Format::json) {
    out << terms.dump() << '\n';
  } else {
    for (const auto& line : lines) out << line << '\n';
  }
  return kOk;
}

void write_lines(const std::string& path, const std::vector<Json>& lines) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write \"" + path + "\"");
  for (const auto& line : lines) file << line.dump() << '\n';
}

int cmd_verify(const Options& o, Format f, std::ostream& out, std::ostream& err) {
  if (o.suite.empty()) throw UsageError("verify needs --suite");
  VerifyReport report;
  if (o.suite == "corpus") {
    if (o.file.empty()) throw UsageError("--suite corpus needs --file");
    const auto entries = load_corpus(o.file);
    if (o.record) {
      if (o.output.empty()) throw UsageError("--record needs --output");
      std::vector<Json> lines;
      for (const auto& e : record_corpus(entries)) lines.push_back(to_json(e));
      write_lines(o.output, lines);
      emit(out, f, "recorded " + std::to_string(lines.size()) + " entries to " + o.output,
           Json{{"recorded", lines.size()}, {"output", o.output}});
      return kOk;
    }
    report = replay_corpus(entries);
  } else {
    if (o.record || !o.file.empty()) throw UsageError("--file and --record are for --suite corpus");
    report = run_sweep(o.suite, SweepBounds{o.max_part, o.max_len});
  }

  std::vector<Json> lines;
  for (const auto& failure : report.failures) lines.push_back(failure_line(failure));
  if (!o.output.empty()) write_lines(o.output, lines);
  constexpr std::size_t kShown = 10;
  for (std::size_t k = 0; k < lines.size() && k < kShown; ++k) err << lines[k].dump() << '\n';
  if (lines.size() > kShown) err << "... " << lines.size() - kShown << " more failures\n";

  std::ostringstream seconds;
  seconds.precision(3);
  seconds << std::fixed << report.seconds;
  emit(out, f,
       "suite " + report.suite + ": " + std::to_string(report.cases) + " cases, " +
           std::to_string(report.failures.size()) + " failures, " + seconds.str() + " s",
       Json{{"suite", report.suite},
            {"cases", report.cases},
            {"failures", report.failures.size()},
            {"seconds", report.seconds}});
  return report.ok() ? kOk : kInvariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Straightening calculator for Bernstein and Schur Q vertex operators",
               "codecalc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format: text or json (default $CODECALC_FORMAT or text)");

  auto add_index = [&](CLI::App* sub, const char* what) {
    sub->add_option("INDEX", o.index_positional, what);
    sub->add_option("--index", o.index_flag, what);
  };
  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", o.algebra, "b (Bernstein / Schur) or q (Schur Q)");
  };

  CLI::App* code = app.add_subcommand("code", "Encode an index as a code word, or decode one");
  add_index(code, "Composition, or a code word with --decode");
  code->add_flag("--shifted", o.shifted, "Shifted code (positive parts)");
  code->add_flag("--decode", o.decode, "Read a code word and print its composition");
  code->add_flag("--preshifted", o.preshifted, "Preshifted code of the plain code");

  CLI::App* straighten = app.add_subcommand("straighten", "Straighten an operator product");
  add_index(straighten, "Composition indexing the product");
  add_algebra(straighten);
  straighten->add_option("--method", o.method, "code, reading, perm, shifted, oracle or all");
  straighten->add_option("--word", o.word, "Code word to straighten instead of an index");
  straighten->add_flag("--trace", o.trace, "Show the steps and relation applications");

  CLI::App* act = app.add_subcommand("act", "Apply one mode operator to a basis element");
  add_index(act, "Partition (b) or strict partition (q)");
  add_algebra(act);
  act->add_option("-n", o.n, "Mode index");

  CLI::App* series = app.add_subcommand("series", "Expand the generating series applied to a basis element");
  add_index(series, "Partition (b) or strict partition (q)");
  add_algebra(series);
  series->add_option("--i-max", o.i_max, "Last i (b; q with --form i)");
  series->add_option("--t-min", o.t_min, "Lowest t exponent (b, with --t-max)");
  series->add_option("--t-max", o.t_max, "Highest t exponent (b)");
  series->add_option("--n-max", o.n_max, "Highest t exponent (q, --form j)");
  series->add_option("--form", o.form, "j or i (q)");

  CLI::App* verify = app.add_subcommand("verify", "Run verification sweeps or replay a corpus");
  verify->add_option("--suite", o.suite, "codes, bernstein, qvertex, shifted, oracle, all or corpus");
  verify->add_option("--max-part", o.max_part, "Largest part in sweeps");
  verify->add_option("--max-len", o.max_len, "Longest index in sweeps");
  verify->add_option("--output", o.output, "Failure lines (or recorded corpus) go here");
  verify->add_option("--file", o.file, "Corpus file for --suite corpus");
  verify->add_flag("--record", o.record, "Recompute the corpus expectations into --output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kUsageOrDomain;
  }

  try {
    std::string format_name = o.format;
    if (format_name.empty()) {
      const char* env = std::getenv("CODECALC_FORMAT");
      format_name = env && *env ? env : "text";
    }
    const Format f = parse_format(format_name);
    if (code->parsed()) return cmd_code(o, f, out);
    if (straighten->parsed()) return cmd_straighten(o, f, out);
    if (act->parsed()) return cmd_act(o, f, out);
    if (series->parsed()) return cmd_series(o, f, out);
    return cmd_verify(o, f, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageOrDomain;
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageOrDomain;
  } catch (const InvalidCodeError& e) {
    err << "invalid code: " << e.what() << '\n';
    return kUsageOrDomain;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsageOrDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
}

}  // namespace codecalc::cli
