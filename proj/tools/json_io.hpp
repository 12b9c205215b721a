#pragma once

#include "bsroots/aomoto.hpp"
#include "bsroots/arrangement.hpp"
#include "bsroots/frac_poly.hpp"
#include "bsroots/newton.hpp"
#include "bsroots/roots.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace bsroots::io {

using Json = nlohmann::ordered_json;

/// Parses text as JSON; syntax errors become InvalidInput.
Json parse_json(const std::string& text);

/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);
Json to_json(const RootSet& s);
/// Array of [root, multiplicity] pairs, sorted by root.
Json to_json(const RootMultiset& m);
/// Array of [exponent, coefficient] pairs, sorted by exponent.
Json to_json(const FractionalPolynomial& p);

/// {"n": int, "generators": [[int, ...], ...]}
MonomialIdeal ideal_from_json(const Json& j);
Json to_json(const MonomialIdeal& ideal);

/// {"affine_lines": [[a, b, c], ...]} for lines a x + b y = c.
std::vector<AffineLine> affine_lines_from_json(const Json& j);

/// Either {"n", "forms", "infinity_index"?} or an affine line document,
/// which is coned. `infinity` overrides the index from the document.
Arrangement arrangement_from_json(const Json& j, std::optional<std::size_t> infinity = {});
Json to_json(const Arrangement& a);

Json to_json(const ArrangementReport& r, const Arrangement& a);
/// Index sets are written 1-based, matching the --I flag.
Json to_json(const Certification& c);

}  // namespace bsroots::io
