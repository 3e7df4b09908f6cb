#include "codecalc_cli/json_io.hpp"

#include <string>

#include "codecalc/errors.hpp"

namespace codecalc::cli {

Json to_json(const Composition& c) {
  Json arr = Json::array();
  for (int p : c.parts()) arr.push_back(p);
  return arr;
}

Json to_json(const SignedIndex& r) {
  if (r.is_zero()) return Json{{"zero", true}};
  Json j;
  j["sign"] = r.sign();
  j["index"] = to_json(r.index());
  return j;
}

Json to_json(const SeriesTerm& term) {
  Json j;
  j["family"] = std::string(to_string(term.family));
  j["i"] = term.i;
  j["t_exp"] = term.t_exp;
  j["sign_exp"] = term.sign_exp;
  j["index"] = to_json(term.index);
  return j;
}

Json to_json(const QSeriesTerm& term) {
  Json j;
  j["family"] = std::string(to_string(SeriesFamily::schur_q));
  j["i"] = term.i;
  j["t_exp"] = term.n;
  j["sign_exp"] = term.sign_exp;
  j["index"] = to_json(term.index);
  return j;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const InvalidCodeError*>(&e)) return "invalid-code";
  if (dynamic_cast<const InvariantError*>(&e)) return "invariant";
  return "other";
}

Json error_json(const std::exception& e) { return Json{{"error", error_kind(e)}}; }

Composition composition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("index must be a JSON array, got " + j.dump());
  std::vector<int> parts;
  parts.reserve(j.size());
  for (const Json& p : j) {
    if (!p.is_number_integer()) {
      throw ParseError("index parts must be integers, got " + j.dump());
    }
    parts.push_back(p.get<int>());
  }
  return Composition(std::move(parts));
}

SignedIndex signed_index_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("signed result must be an object: " + j.dump());
  if (j.contains("zero")) {
    if (j.size() != 1 || j.at("zero") != true) {
      throw ParseError("malformed zero result: " + j.dump());
    }
    return SignedIndex::zero();
  }
  if (j.size() != 2 || !j.contains("sign") || !j.contains("index") ||
      !j.at("sign").is_number_integer()) {
    throw ParseError("malformed signed result: " + j.dump());
  }
  const int sign = j.at("sign").get<int>();
  if (sign != 1 && sign != -1) throw ParseError("sign must be 1 or -1: " + j.dump());
  return SignedIndex(sign, composition_from_json(j.at("index")));
}

}  // namespace codecalc::cli
