#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "luroth/config7.hpp"
#include "luroth/roberts.hpp"

namespace luroth::io {

using Json = nlohmann::ordered_json;

/// Malformed input text or schema violation.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Rational& r);
/// Accepts integers or "p/q" strings; rejects floats.
Rational rational_from_json(const Json& j);

/// [{"exp": [e0, e1, ...], "coeff": "p/q"}, ...] in descending monomial order.
Json to_json(const Form& f);
Form form_from_json(const Json& j, std::size_t nvars);

template <std::size_t N>
Json to_json(const ProjPoint<N>& p) {
  Json out = Json::array();
  for (const auto& c : p.coords()) out.push_back(to_json(c));
  return out;
}
HomPoint point_from_json(const Json& j);
LineCoeffs line_from_json(const Json& j);
Json to_json(const LineCoeffs& l);

/// {"points": [[x0, x1, x2], ... seven entries]}
Config7 config7_from_json(const Json& j);
Json to_json(const Config7& z);

/// {"lines": [[c0, c1, c2] x 4], "a": [4], "b": [4]}
RobertsData roberts_from_json(const Json& j);
Json to_json(const RobertsData& r);

Json to_json(const QMatrix& m);
Json to_json(const MorleyData& d);

/// Parses text, mapping syntax errors to InputError.
Json parse(const std::string& text);

}  // namespace luroth::io
