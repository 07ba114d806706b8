#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "goodsets/errors.hpp"
#include "goodsets/matrix.hpp"

namespace goodsets {

/// An atomic coordinate value. Compared and ordered by name.
class Symbol {
 public:
  explicit Symbol(std::string name) : name_(std::move(name)) {
    if (name_.empty()) throw InputError("symbol name is empty");
    for (unsigned char c : name_)
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v')
        throw InputError("symbol name '" + name_ + "' contains whitespace");
  }

  const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  std::string name_;
};

class Point {
 public:
  explicit Point(std::vector<Symbol> coords) : coords_(std::move(coords)) {}

  Point(std::initializer_list<const char*> names) {
    coords_.reserve(names.size());
    for (const char* n : names) coords_.emplace_back(n);
  }

  std::size_t dimension() const noexcept { return coords_.size(); }
  const Symbol& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Symbol>& coords() const noexcept { return coords_; }

  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<Symbol> coords_;
};

/// One unknown u_i(s) of the additive system: coordinate index i (0-based) and symbol s.
struct Column {
  std::size_t coordinate;
  Symbol symbol;

  friend auto operator<=>(const Column&, const Column&) = default;
};

// Point subsets are sorted vectors of indices into the owning PointSet.
using Subset = std::vector<std::size_t>;

/// Finite, duplicate-free, insertion-ordered set of points of a common dimension n >= 2.
class PointSet {
 public:
  PointSet(std::size_t dimension, std::vector<Point> points)
      : dimension_(dimension), points_(std::move(points)) {
    if (dimension_ < 2) throw ShapeError("dimension must be at least 2");
    std::set<Point> seen;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i].dimension() != dimension_)
        throw ShapeError("point " + std::to_string(i + 1) + " has " +
                         std::to_string(points_[i].dimension()) + " coordinates, expected " +
                         std::to_string(dimension_));
      if (!seen.insert(points_[i]).second)
        throw InputError("duplicate point at position " + std::to_string(i + 1));
    }
  }

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  std::optional<std::size_t> index_of(const Point& p) const {
    auto it = std::find(points_.begin(), points_.end(), p);
    if (it == points_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
  }

  PointSet subset(std::span<const std::size_t> indices) const {
    std::vector<Point> pts;
    pts.reserve(indices.size());
    for (auto i : indices) pts.push_back(points_.at(i));
    return PointSet(dimension_, std::move(pts));
  }

  PointSet with_point(Point p) const {
    auto pts = points_;
    pts.push_back(std::move(p));
    return PointSet(dimension_, std::move(pts));
  }

  /// True iff no symbol occurs in two different coordinate positions.
  bool separated() const {
    std::map<Symbol, std::size_t> where;
    for (const auto& p : points_)
      for (std::size_t i = 0; i < dimension_; ++i) {
        auto [it, fresh] = where.emplace(p[i], i);
        if (!fresh && it->second != i) return false;
      }
    return true;
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dimension_;
  std::vector<Point> points_;
};

inline std::vector<std::set<Symbol>> projections(const PointSet& s) {
  if (s.empty()) throw EmptyInput();
  std::vector<std::set<Symbol>> out(s.dimension());
  for (const auto& p : s)
    for (std::size_t i = 0; i < s.dimension(); ++i) out[i].insert(p[i]);
  return out;
}

/// Rows follow point order; columns are (coordinate, symbol) pairs in (coordinate, name) order.
struct IncidenceMatrix {
  std::vector<Column> columns;
  RationalMatrix entries;

  std::optional<std::size_t> column_index(const Column& c) const {
    auto it = std::lower_bound(columns.begin(), columns.end(), c);
    if (it == columns.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - columns.begin());
  }
};

inline std::vector<Column> columns_of(const PointSet& s) {
  std::vector<Column> cols;
  auto proj = projections(s);
  for (std::size_t i = 0; i < proj.size(); ++i)
    for (const auto& sym : proj[i]) cols.push_back(Column{i, sym});
  return cols;
}

inline IncidenceMatrix incidence_matrix(const PointSet& s) {
  auto cols = columns_of(s);
  IncidenceMatrix m{cols, RationalMatrix(s.size(), cols.size())};
  for (std::size_t r = 0; r < s.size(); ++r)
    for (std::size_t i = 0; i < s.dimension(); ++i) m.entries(r, *m.column_index(Column{i, s[r][i]})) = 1;
  return m;
}

/// Renames every symbol that occurs at more than one coordinate position to "name@k"
/// (k = 1-based coordinate). Already separated sets come back unchanged.
inline PointSet tag_coordinates(const PointSet& s) {
  std::map<Symbol, std::set<std::size_t>> where;
  std::set<std::string> names;
  for (const auto& p : s)
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      where[p[i]].insert(i);
      names.insert(p[i].name());
    }
  std::map<Column, Symbol> renamed;
  for (const auto& [sym, coords] : where) {
    if (coords.size() < 2) continue;
    for (auto i : coords) {
      std::string tagged = sym.name() + "@" + std::to_string(i + 1);
      if (names.count(tagged))
        throw InputError("cannot tag symbol '" + sym.name() + "': '" + tagged + "' already in use");
      renamed.emplace(Column{i, sym}, Symbol(tagged));
    }
  }
  if (renamed.empty()) return s;
  std::vector<Point> pts;
  for (const auto& p : s) {
    std::vector<Symbol> coords;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      auto it = renamed.find(Column{i, p[i]});
      coords.push_back(it == renamed.end() ? p[i] : it->second);
    }
    pts.emplace_back(std::move(coords));
  }
  return PointSet(s.dimension(), std::move(pts));
}

}  // namespace goodsets
