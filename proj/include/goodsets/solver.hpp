#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "goodsets/analysis.hpp"
#include "goodsets/core.hpp"
#include "goodsets/errors.hpp"
#include "goodsets/io.hpp"
#include "goodsets/linalg.hpp"
#include "goodsets/rational.hpp"

namespace goodsets {

/// A function f on a point set, stored in the set's point order.
class FunctionTable {
 public:
  FunctionTable(const PointSet& s, std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.size() != s.size()) throw ShapeError("function table size differs from the point set");
  }

  /// Domain must be exactly the point set.
  static FunctionTable from_pairs(const PointSet& s, const std::vector<std::pair<Point, Rational>>& pairs) {
    std::vector<Rational> values(s.size());
    std::vector<bool> seen(s.size(), false);
    for (const auto& [p, v] : pairs) {
      auto i = s.index_of(p);
      if (!i) throw ShapeError("function table has a point outside the set");
      if (seen[*i]) throw ShapeError("function table lists a point twice");
      seen[*i] = true;
      values[*i] = v;
    }
    for (bool b : seen)
      if (!b) throw ShapeError("function table does not cover every point");
    return FunctionTable(s, std::move(values));
  }

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const noexcept { return values_; }

 private:
  std::vector<Rational> values_;
};

/// u_1..u_n: one table per coordinate, each defined on that coordinate's projection.
struct AdditiveSolution {
  std::vector<std::map<Symbol, Rational>> tables;

  const Rational& value(std::size_t coordinate, const Symbol& s) const { return tables.at(coordinate).at(s); }

  friend bool operator==(const AdditiveSolution&, const AdditiveSolution&) = default;
};

/// Boundary columns plus the values U prescribed on them (zero unless given).
struct BoundaryAssignment {
  BoundarySet boundary;
  std::map<Column, Rational> values;

  explicit BoundaryAssignment(BoundarySet b) : boundary(std::move(b)) {
    for (const auto& c : boundary.elements) values.emplace(c, Rational(0));
  }

  BoundaryAssignment(BoundarySet b, std::map<Column, Rational> u) : boundary(std::move(b)), values(std::move(u)) {
    if (values.size() != boundary.size()) throw ShapeError("boundary values must cover exactly the boundary");
    for (const auto& c : boundary.elements)
      if (!values.count(c)) throw ShapeError("no value for boundary element '" + c.symbol.name() + "'");
  }
};

namespace detail {

inline RationalMatrix reduced_system(const PointSet& s, const BoundarySet& b, const IncidenceMatrix& m,
                                     std::vector<std::size_t>& keep) {
  keep = interior_columns(m, b);
  if (!is_boundary(s, b)) throw NotABoundary();
  return m.entries.select_cols(keep);
}

}  // namespace detail

/// The unique u with f(p) = sum_i u_i(p_i) on S and u = U on the boundary.
inline AdditiveSolution solve_decomposition(const PointSet& s, const FunctionTable& f, const BoundaryAssignment& ba) {
  detail::require_separated(s);
  if (f.size() != s.size()) throw ShapeError("function table size differs from the point set");
  if (!is_good(s)) throw NotGoodError();
  auto m = incidence_matrix(s);
  std::vector<std::size_t> keep;
  auto reduced = detail::reduced_system(s, ba.boundary, m, keep);

  std::vector<Rational> rhs = f.values();
  for (const auto& [col, u] : ba.values) {
    auto j = *m.column_index(col);
    for (std::size_t r = 0; r < s.size(); ++r)
      if (m.entries(r, j) != 0) rhs[r] -= m.entries(r, j) * u;
  }
  auto x = solve(reduced, rhs);
  if (!x) throw std::logic_error("boundary-reduced system is inconsistent");

  AdditiveSolution out{std::vector<std::map<Symbol, Rational>>(s.dimension())};
  for (const auto& [col, u] : ba.values) out.tables[col.coordinate][col.symbol] = u;
  for (std::size_t j = 0; j < keep.size(); ++j) {
    const auto& col = m.columns[keep[j]];
    out.tables[col.coordinate][col.symbol] = (*x)[j];
  }
  return out;
}

/// Exact check of f(p) = u_1(p_1) + ... + u_n(p_n) at every point.
inline bool verify_decomposition(const PointSet& s, const FunctionTable& f, const AdditiveSolution& u) {
  if (f.size() != s.size()) throw ShapeError("function table size differs from the point set");
  if (u.tables.size() != s.dimension()) throw ShapeError("solution has the wrong number of coordinate tables");
  auto proj = projections(s);
  for (std::size_t i = 0; i < proj.size(); ++i) {
    if (u.tables[i].size() != proj[i].size()) throw ShapeError("solution table domain differs from the projection");
    for (const auto& sym : proj[i])
      if (!u.tables[i].count(sym)) throw ShapeError("solution table domain differs from the projection");
  }
  for (std::size_t r = 0; r < s.size(); ++r) {
    Rational sum = 0;
    for (std::size_t i = 0; i < s.dimension(); ++i) sum += u.tables[i].at(s[r][i]);
    if (sum != f[r]) return false;
  }
  return true;
}

/// Row-sum norm of the inverse boundary-reduced matrix: with U = 0, every interior
/// |u_i(s)| <= bound * max |f|.
inline Rational solution_bound_report(const PointSet& s, const BoundarySet& b) {
  detail::require_separated(s);
  if (!is_good(s)) throw NotGoodError();
  auto m = incidence_matrix(s);
  std::vector<std::size_t> keep;
  return max_row_abs_sum(invert(detail::reduced_system(s, b, m, keep)));
}

inline Json to_json(const PointSet& s, const FunctionTable& f) {
  Json values = Json::array();
  for (std::size_t r = 0; r < s.size(); ++r) {
    Json entry;
    entry["point"] = to_json(s[r]);
    entry["value"] = rational_to_json(f[r]);
    values.push_back(std::move(entry));
  }
  Json j;
  j["values"] = std::move(values);
  return j;
}

/// {"values": [{"point": [s,...], "value": "p/q"}, ...]}
inline FunctionTable function_table_from_json(const PointSet& s, const Json& j) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
    throw ParseError("function table must be an object with a \"values\" array");
  std::vector<std::pair<Point, Rational>> pairs;
  const auto& arr = j["values"];
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& e = arr[k];
    std::string where = "/values/" + std::to_string(k);
    if (!e.is_object() || !e.contains("point") || !e.contains("value"))
      throw ParseError(where + ": entry needs \"point\" and \"value\"");
    pairs.emplace_back(detail::point_from_json(e["point"], s.dimension(), where + "/point"), rational_from_json(e["value"]));
  }
  return FunctionTable::from_pairs(s, pairs);
}

inline FunctionTable parse_function_table(const PointSet& s, std::string_view text) {
  return function_table_from_json(s, detail::parse_json(text));
}

}  // namespace goodsets
