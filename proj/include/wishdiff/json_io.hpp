#pragma once

// JSON form of exact exp-polynomials:
//   {"neg": [{"c": "p/q", "p": int, "r": "p/q"}, ...], "pos": [...], "zero": "p/q"}

#include "json.hpp"
#include "wishdiff/exppoly.hpp"

namespace wishdiff::json_io {

nlohmann::json to_json(const exppoly::PiecewiseExpPoly& f);
// DomainError on malformed input or non-decaying rates.
exppoly::PiecewiseExpPoly piecewise_from_json(const nlohmann::json& j);

}  // namespace wishdiff::json_io
