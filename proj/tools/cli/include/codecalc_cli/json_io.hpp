#pragma once

#include <exception>
#include <string>

#include <json.hpp>

#include "codecalc/bernstein.hpp"
#include "codecalc/index.hpp"
#include "codecalc/qvertex.hpp"

namespace codecalc::cli {

/// Key order is kept as written so emitted JSON is stable byte for byte.
using Json = nlohmann::ordered_json;

Json to_json(const Composition& c);
/// {"zero":true} or {"sign":1,"index":[...]}.
Json to_json(const SignedIndex& r);
/// {"family":"schur","i":2,"t_exp":1,"sign_exp":0,"index":[1,1]}.
Json to_json(const SeriesTerm& term);
/// Same keys with family "schurQ"; t_exp is n.
Json to_json(const QSeriesTerm& term);

/// "parse", "domain", "invalid-code", "invariant" or "other".
std::string error_kind(const std::exception& e);
/// {"error":"<kind>"}.
Json error_json(const std::exception& e);

/// Throws ParseError on a malformed value. Negative parts are kept.
Composition composition_from_json(const Json& j);
SignedIndex signed_index_from_json(const Json& j);

}  // namespace codecalc::cli
