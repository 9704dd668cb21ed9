#pragma once

#include <string>

#include "json.hpp"
#include "mcg3/skeleton.hpp"
#include "mcg3/snail.hpp"

namespace mcg3 {

using Json = nlohmann::json;

// Integers inside the 53-bit safe range serialize as JSON numbers, larger
// ones as decimal strings, so consumers never see silent rounding.
Json int_json(const Int& v);

Json matrix_json(const ProjectiveMatrix& m);

// Exact rational as "num/den" (denominator always written).
std::string rat_str(const Rat& r);
// Accepts "num/den", a bare integer string, or a JSON integer.
Rat rat_from_json(const Json& j);

Json snail_json(const Snail& s);

Json crossing_json(const CrossingSequence& cs);
CrossingSequence crossing_from_json(const Json& j);
// Parses JSON text and converts; SyntaxError on malformed text or shape.
CrossingSequence crossing_from_text(const std::string& text);

}  // namespace mcg3
