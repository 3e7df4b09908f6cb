#include "codecalc_cli/corpus.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "codecalc/codecalc.hpp"
#include "codecalc_cli/cli.hpp"

namespace codecalc::cli {

namespace {

const Json& arg(const Json& args, const char* key) {
  if (!args.is_object() || !args.contains(key)) {
    throw ParseError(std::string("corpus args need \"") + key + "\": " + args.dump());
  }
  return args.at(key);
}

Composition index_arg(const Json& args, const char* key = "index") {
  return composition_from_json(arg(args, key));
}

int int_arg(const Json& args, const char* key) {
  const Json& v = arg(args, key);
  if (!v.is_number_integer()) throw ParseError(std::string(key) + " must be an integer");
  return v.get<int>();
}

std::string string_arg(const Json& args, const char* key) {
  const Json& v = arg(args, key);
  if (!v.is_string()) throw ParseError(std::string(key) + " must be a string");
  return v.get<std::string>();
}

Json trace_json(const StraightenTrace& t) {
  return Json{{"result", to_json(t.result)},
              {"sign_exponent", t.sign_exponent},
              {"step_exponents", t.step_exponents}};
}

Json run_json(const Json& args) {
  const Json& argv = arg(args, "argv");
  if (!argv.is_array()) throw ParseError("argv must be an array of strings");
  std::vector<std::string> words;
  for (const Json& w : argv) {
    if (!w.is_string()) throw ParseError("argv must be an array of strings");
    words.push_back(w.get<std::string>());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(words, out, err);
  return Json{{"status", status}, {"stdout", out.str()}};
}

using Handler = std::function<Json(const Json&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"parse_index", [](const Json& a) { return to_json(parse_index(string_arg(a, "text"))); }},
      {"classify",
       [](const Json& a) { return Json(std::string(to_string(classify(index_arg(a))))); }},
      {"negate",
       [](const Json& a) { return to_json(negate(signed_index_from_json(arg(a, "result")))); }},
      {"encode_code", [](const Json& a) { return Json(encode_code(index_arg(a)).letters()); }},
      {"decode_code",
       [](const Json& a) { return to_json(decode_code(CodeWord::parse(string_arg(a, "code")))); }},
      {"reduce_word", [](const Json& a) { return Json(reduce_word(string_arg(a, "word"))); }},
      {"straighten_code",
       [](const Json& a) { return to_json(straighten_code(encode_code(index_arg(a)))); }},
      {"straighten_code_trace",
       [](const Json& a) { return trace_json(straighten_code_traced(encode_code(index_arg(a)))); }},
      {"reading_straighten",
       [](const Json& a) { return to_json(reading_straighten(encode_code(index_arg(a)))); }},
      {"reading_straighten_trace",
       [](const Json& a) {
         return trace_json(reading_straighten_traced(encode_code(index_arg(a)).letters()));
       }},
      {"straighten_B", [](const Json& a) { return to_json(straighten_B(index_arg(a))); }},
      {"bn_action",
       [](const Json& a) {
         return to_json(bn_action(int_arg(a, "n"), Partition(index_arg(a, "lambda"))));
       }},
      {"lambda_sup",
       [](const Json& a) {
         return to_json(lambda_sup(Partition(index_arg(a, "lambda")), int_arg(a, "i")).composition());
       }},
      {"r_index",
       [](const Json& a) {
         return Json(r_index(Partition(index_arg(a, "lambda")), int_arg(a, "i")));
       }},
      {"bernstein_series",
       [](const Json& a) {
         Json terms = Json::array();
         for (const auto& t :
              bernstein_series(Partition(index_arg(a, "lambda")), int_arg(a, "i_max"))) {
           terms.push_back(to_json(t));
         }
         return terms;
       }},
      {"straighten_Y_perm", [](const Json& a) { return to_json(straighten_Y_perm(index_arg(a))); }},
      {"straighten_Y_code", [](const Json& a) { return to_json(straighten_Y_code(index_arg(a))); }},
      {"yn_action",
       [](const Json& a) {
         return to_json(yn_action(int_arg(a, "n"), StrictPartition(index_arg(a, "lambda"))));
       }},
      {"lambda_bracket",
       [](const Json& a) {
         return to_json(
             lambda_bracket(StrictPartition(index_arg(a, "lambda")), int_arg(a, "i")).composition());
       }},
      {"q_series_j_form",
       [](const Json& a) {
         Json terms = Json::array();
         for (const auto& t :
              q_series_j_form(StrictPartition(index_arg(a, "lambda")), int_arg(a, "n_max"))) {
           terms.push_back(to_json(t));
         }
         return terms;
       }},
      {"q_series_i_form",
       [](const Json& a) {
         Json terms = Json::array();
         for (const auto& t :
              q_series_i_form(StrictPartition(index_arg(a, "lambda")), int_arg(a, "i_max"))) {
           terms.push_back(to_json(t));
         }
         return terms;
       }},
      {"encode_shifted", [](const Json& a) { return Json(encode_shifted(index_arg(a)).letters()); }},
      {"decode_shifted",
       [](const Json& a) {
         return to_json(decode_shifted(ShiftedCodeWord::parse(string_arg(a, "code"))));
       }},
      {"preshift",
       [](const Json& a) { return Json(preshift(encode_code(index_arg(a))).letters); }},
      {"shifted_straighten",
       [](const Json& a) { return to_json(shifted_straighten(encode_shifted(index_arg(a)))); }},
      {"lambda_bracket_shifted",
       [](const Json& a) {
         return to_json(lambda_bracket_shifted(StrictPartition(index_arg(a, "lambda")),
                                               int_arg(a, "i"))
                            .composition());
       }},
      {"exponent_straighten",
       [](const Json& a) { return to_json(exponent_straighten(index_arg(a))); }},
      {"bialternant",
       [](const Json& a) {
         return Json(bialternant(index_arg(a), static_cast<std::size_t>(int_arg(a, "l"))).render());
       }},
      {"schur_poly",
       [](const Json& a) {
         return Json(schur_poly(index_arg(a), static_cast<std::size_t>(int_arg(a, "l"))).render());
       }},
      {"run", run_json},
  };
  return table;
}

}  // namespace

Json evaluate(const std::string& op, const Json& args) {
  const auto& table = handlers();
  const auto it = table.find(op);
  if (it == table.end()) throw ParseError("unknown corpus op \"" + op + "\"");
  return it->second(args);
}

Json evaluate_guarded(const std::string& op, const Json& args) {
  try {
    return evaluate(op, args);
  } catch (const std::exception& e) {
    return error_json(e);
  }
}

const std::vector<std::string>& corpus_ops() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open corpus file \"" + path + "\"");
  std::vector<CorpusEntry> entries;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = path + ":" + std::to_string(number);
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(where + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("op") || !j.at("op").is_string() ||
        !j.contains("args") || !j.contains("expected")) {
      throw ParseError(where + ": corpus lines need \"op\", \"args\" and \"expected\"");
    }
    entries.push_back({j.at("op").get<std::string>(), j.at("args"), j.at("expected")});
  }
  return entries;
}

VerifyReport replay_corpus(const std::vector<CorpusEntry>& entries) {
  VerifyReport report;
  report.suite = "corpus";
  const auto start = std::chrono::steady_clock::now();
  for (const auto& e : entries) {
    ++report.cases;
    Json got = evaluate_guarded(e.op, e.args);
    if (got != e.expected) {
      report.failures.push_back(
          {"corpus", Json{{"op", e.op}, {"args", e.args}}, e.expected, std::move(got)});
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<CorpusEntry> record_corpus(const std::vector<CorpusEntry>& entries) {
  std::vector<CorpusEntry> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back({e.op, e.args, evaluate_guarded(e.op, e.args)});
  return out;
}

Json to_json(const CorpusEntry& e) {
  return Json{{"op", e.op}, {"args", e.args}, {"expected", e.expected}};
}

}  // namespace codecalc::cli
