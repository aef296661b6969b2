#include "wishdiff/json_io.hpp"

#include "wishdiff/errors.hpp"

namespace wishdiff::json_io {

namespace {

nlohmann::json side_to_json(const exppoly::Side& s) {
  auto arr = nlohmann::json::array();
  for (const auto& t : s.terms())
    arr.push_back({{"c", format_rational(t.coeff)}, {"p", t.power}, {"r", format_rational(t.rate)}});
  return arr;
}

exppoly::Side side_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw DomainError("exp-poly JSON: side must be an array");
  exppoly::Side s;
  for (const auto& t : arr) {
    if (!t.is_object() || !t.contains("c") || !t.contains("p") || !t.contains("r") || !t["c"].is_string() ||
        !t["r"].is_string() || !t["p"].is_number_unsigned())
      throw DomainError("exp-poly JSON: term needs string c, r and unsigned p");
    s.add(parse_rational(t["c"].get<std::string>()), t["p"].get<unsigned>(),
          parse_rational(t["r"].get<std::string>()));
  }
  return s;
}

}  // namespace

nlohmann::json to_json(const exppoly::PiecewiseExpPoly& f) {
  return {{"neg", side_to_json(f.neg)}, {"pos", side_to_json(f.pos)}, {"zero", format_rational(f.at_zero)}};
}

exppoly::PiecewiseExpPoly piecewise_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("neg") || !j.contains("pos") || !j.contains("zero") || !j["zero"].is_string())
    throw DomainError("exp-poly JSON: expected object with neg, pos, zero");
  exppoly::PiecewiseExpPoly f{side_from_json(j["neg"]), side_from_json(j["pos"]),
                              parse_rational(j["zero"].get<std::string>())};
  f.validate();
  return f;
}

}  // namespace wishdiff::json_io
