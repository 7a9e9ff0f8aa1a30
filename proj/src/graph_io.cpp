#include "dimers/graph_io.hpp"

#include "dimers/error.hpp"

namespace dimers {

using nlohmann::json;

namespace {

Rational parse_number(const json& j) {
  try {
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    if (j.is_string()) {
      Rational r(j.get<std::string>(), 10);
      r.canonicalize();
      return r;
    }
  } catch (const std::invalid_argument&) {
  }
  throw Error(ErrorCode::ParseError, "expected an integer or decimal string, got " + j.dump());
}

Weight parse_weight(const json& j) {
  if (j.is_number_integer() || j.is_string()) return Weight{parse_number(j)};
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "bad weight " + j.dump());
  if (j.contains("poly")) {
    const auto& coeffs = j.at("poly");
    if (!coeffs.is_array()) throw Error(ErrorCode::ParseError, "poly must be an array");
    Weight w{Rational(0), 0};
    bool seen = false;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      Rational c = parse_number(coeffs[k]);
      if (c == 0) continue;
      if (seen) throw Error(ErrorCode::NonMonomialWeight, "polynomial weight " + coeffs.dump() + " is not a monomial");
      seen = true;
      w = Weight{c, static_cast<unsigned>(k)};
    }
    return w;
  }
  Rational num = parse_number(j.at("num"));
  Rational den = j.contains("den") ? parse_number(j.at("den")) : Rational(1);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  return Weight{num / den};
}

json weight_json(const Weight& w) {
  if (w.is_numeric()) return json{{"num", w.coeff.get_num().get_str()}, {"den", w.coeff.get_den().get_str()}};
  json coeffs = json::array();
  for (unsigned k = 0; k < w.x_power; ++k) coeffs.push_back("0");
  coeffs.push_back(w.coeff.get_str());
  return json{{"poly", coeffs}};
}

std::size_t parse_index(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw Error(ErrorCode::ParseError, "expected a vertex index, got " + j.dump());
  return j.get<std::size_t>();
}

}  // namespace

json to_json(const RatPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

json to_json(const WeightedMultigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(json::array({e.u, e.v, weight_json(e.weight)}));
  json out{{"vertices", g.vertex_count()}, {"edges", edges}, {"kind", g.kind}, {"meta", g.meta}};
  if (!g.columns().empty()) out["columns"] = g.columns();
  return out;
}

WeightedMultigraph graph_from_json(const json& j) {
  try {
    WeightedMultigraph g(parse_index(j.at("vertices")));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) throw Error(ErrorCode::ParseError, "bad edge " + e.dump());
      g.add_edge(parse_index(e[0]), parse_index(e[1]), e.size() == 3 ? parse_weight(e[2]) : Weight{});
    }
    if (j.contains("kind")) g.kind = j.at("kind").get<std::string>();
    if (j.contains("meta"))
      for (const auto& [k, v] : j.at("meta").items()) g.meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
    if (j.contains("columns")) {
      std::vector<std::vector<std::size_t>> columns;
      for (const auto& col : j.at("columns")) {
        columns.emplace_back();
        for (const auto& v : col) columns.back().push_back(parse_index(v));
      }
      g.set_columns(std::move(columns));
    }
    return g;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

json to_json(const SymmetricGraph& sg) {
  json sides = json::array();
  for (auto s : sg.side) sides.push_back(s == Side::Above ? "above" : s == Side::Below ? "below" : "axis");
  return json{{"graph", to_json(sg.graph)}, {"involution", sg.involution}, {"axis", sg.axis}, {"side", sides}};
}

SymmetricGraph symmetric_graph_from_json(const json& j) {
  try {
    SymmetricGraph sg;
    sg.graph = graph_from_json(j.at("graph"));
    for (const auto& v : j.at("involution")) sg.involution.push_back(parse_index(v));
    for (const auto& v : j.at("axis")) sg.axis.push_back(parse_index(v));
    for (const auto& s : j.at("side")) {
      const auto name = s.get<std::string>();
      if (name == "above")
        sg.side.push_back(Side::Above);
      else if (name == "below")
        sg.side.push_back(Side::Below);
      else if (name == "axis")
        sg.side.push_back(Side::Axis);
      else
        throw Error(ErrorCode::ParseError, "unknown side " + name);
    }
    validate(sg);
    return sg;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

}  // namespace dimers
