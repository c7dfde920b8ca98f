#include "luroth/serialize.hpp"

#include <algorithm>

namespace luroth::io {

Json to_json(const Rational& r) { return luroth::to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json to_json(const Form& f) {
  Json out = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    Json exp = Json::array();
    for (std::size_t i = 0; i < f.nvars(); ++i) exp.push_back(it->first[i]);
    out.push_back(Json{{"exp", exp}, {"coeff", to_json(it->second)}});
  }
  return out;
}

Form form_from_json(const Json& j, std::size_t nvars) {
  if (!j.is_array()) throw InputError("form: expected an array of terms");
  Form f(nvars);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("exp") || !term.contains("coeff") || !term["exp"].is_array() ||
        term["exp"].size() != nvars) {
      throw InputError("form: malformed term " + term.dump());
    }
    Exponent e{};
    for (std::size_t i = 0; i < nvars; ++i) {
      const auto& v = term["exp"][i];
      if (!v.is_number_unsigned() || v.get<unsigned>() > 255) throw InputError("form: bad exponent");
      e[i] = static_cast<std::uint8_t>(v.get<unsigned>());
    }
    f.add_term(e, rational_from_json(term["coeff"]));
  }
  return f;
}

namespace {

std::array<Rational, 3> triple(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) throw InputError(std::string(what) + ": expected three entries");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

template <std::size_t N>
std::array<Rational, N> scalars(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != N) {
    throw InputError(std::string("expected \"") + key + "\" with " + std::to_string(N) + " entries");
  }
  std::array<Rational, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = rational_from_json(j[key][i]);
  return out;
}

}  // namespace

HomPoint point_from_json(const Json& j) {
  const auto c = triple(j, "point");
  try {
    return HomPoint(c);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

LineCoeffs line_from_json(const Json& j) { return triple(j, "line"); }

Json to_json(const LineCoeffs& l) {
  Json out = Json::array();
  for (const auto& c : l) out.push_back(to_json(c));
  return out;
}

Config7 config7_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array() || j["points"].size() != 7) {
    throw InputError("configuration: expected {\"points\": [seven points]}");
  }
  std::vector<HomPoint> pts;
  for (const auto& p : j["points"]) pts.push_back(point_from_json(p));
  return Config7::from_span(pts);
}

Json to_json(const Config7& z) {
  Json pts = Json::array();
  for (const auto& p : z.points()) pts.push_back(to_json(p));
  return Json{{"points", pts}};
}

RobertsData roberts_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array() || j["lines"].size() != 4) {
    throw InputError("roberts data: expected \"lines\" with four lines");
  }
  RobertsData r;
  for (std::size_t k = 0; k < 4; ++k) r.lines[k] = line_from_json(j["lines"][k]);
  r.a = scalars<4>(j, "a");
  r.b = scalars<4>(j, "b");
  return r;
}

Json to_json(const RobertsData& r) {
  Json lines = Json::array(), a = Json::array(), b = Json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    lines.push_back(to_json(r.lines[k]));
    a.push_back(to_json(r.a[k]));
    b.push_back(to_json(r.b[k]));
  }
  return Json{{"lines", lines}, {"a", a}, {"b", b}};
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const MorleyData& d) {
  Json q = Json::array();
  for (const auto& v : d.q_values) q.push_back(to_json(v));
  return Json{{"S", to_json(d.s)},
              {"N", to_json(d.n.matrix())},
              {"F", to_json(d.f)},
              {"Q_values", q},
              {"psi", d.psi ? to_json(*d.psi) : Json(nullptr)}};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace luroth::io
