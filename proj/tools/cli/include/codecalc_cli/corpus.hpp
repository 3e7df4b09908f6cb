#pragma once

#include <string>
#include <vector>

#include "codecalc_cli/json_io.hpp"
#include "codecalc_cli/verify.hpp"

namespace codecalc::cli {

/// Evaluates one corpus operation. `op` names a library operation (args keyed
/// by parameter name) or "run" (args {"argv":[...]}, result
/// {"status":n,"stdout":"..."}). Library errors propagate.
Json evaluate(const std::string& op, const Json& args);

/// Evaluates and catches: library errors become {"error":"<kind>"} with kind
/// one of parse, domain, invalid-code, invariant.
Json evaluate_guarded(const std::string& op, const Json& args);

/// Operation names accepted by evaluate.
const std::vector<std::string>& corpus_ops();

struct CorpusEntry {
  std::string op;
  Json args;
  Json expected;
};

/// One JSON object per line; blank lines are skipped. Throws ParseError with
/// the line number on a malformed line.
std::vector<CorpusEntry> load_corpus(const std::string& path);

VerifyReport replay_corpus(const std::vector<CorpusEntry>& entries);

/// Entries with "expected" recomputed, for writing a fresh golden file.
std::vector<CorpusEntry> record_corpus(const std::vector<CorpusEntry>& entries);

Json to_json(const CorpusEntry& e);

}  // namespace codecalc::cli
