#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goodsets/core.hpp"
#include "goodsets/errors.hpp"
#include "goodsets/rational.hpp"

namespace goodsets {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, col);
  }
}

inline Point point_from_json(const Json& j, std::size_t dimension, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": point must be an array of symbol strings");
  if (j.size() != dimension)
    throw ParseError(where + ": point has " + std::to_string(j.size()) + " coordinates, expected " +
                     std::to_string(dimension));
  std::vector<Symbol> coords;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw ParseError(where + "/" + std::to_string(i) + ": symbol must be a string");
    try {
      coords.emplace_back(j[i].get<std::string>());
    } catch (const InputError& e) {
      throw ParseError(where + "/" + std::to_string(i) + ": " + e.what());
    }
  }
  return Point(std::move(coords));
}

}  // namespace detail

inline Json to_json(const Point& p) {
  Json arr = Json::array();
  for (const auto& s : p.coords()) arr.push_back(s.name());
  return arr;
}

inline Json to_json(const PointSet& s) {
  Json pts = Json::array();
  for (const auto& p : s) pts.push_back(to_json(p));
  Json j;
  j["dimension"] = s.dimension();
  j["points"] = std::move(pts);
  return j;
}

/// {"dimension": n, "points": [[s,...],...]}
inline PointSet point_set_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("top level must be an object");
  if (!j.contains("dimension") || !j["dimension"].is_number_unsigned())
    throw ParseError("missing or invalid \"dimension\"");
  if (!j.contains("points") || !j["points"].is_array()) throw ParseError("missing or invalid \"points\"");
  for (const auto& [key, _] : j.items())
    if (key != "dimension" && key != "points") throw ParseError("unexpected key \"" + key + "\"");
  auto dim = j["dimension"].get<std::size_t>();
  if (dim < 2) throw ParseError("dimension must be at least 2");
  std::vector<Point> pts;
  const auto& arr = j["points"];
  for (std::size_t k = 0; k < arr.size(); ++k)
    pts.push_back(detail::point_from_json(arr[k], dim, "/points/" + std::to_string(k)));
  try {
    return PointSet(dim, std::move(pts));
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

inline PointSet parse_point_set(std::string_view text) {
  return point_set_from_json(detail::parse_json(text));
}

/// Keys in order dimension, points; newline-terminated.
inline std::string serialize_point_set(const PointSet& s) { return to_json(s).dump() + "\n"; }

inline Json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("rational must be an integer or a \"p/q\" string");
}

}  // namespace goodsets
