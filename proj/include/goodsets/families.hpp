#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "goodsets/analysis.hpp"
#include "goodsets/core.hpp"
#include "goodsets/errors.hpp"
#include "goodsets/io.hpp"
#include "goodsets/linalg.hpp"

namespace goodsets {

// The 4-dimensional counterexample family. Symbols are x1..x4 followed by a1, a2, ...;
// every symbol stays at a single coordinate, so all generated sets are separated.

inline Symbol x_symbol(std::size_t i) { return Symbol("x" + std::to_string(i)); }
inline Symbol a_symbol(std::size_t j) { return Symbol("a" + std::to_string(j)); }

/// The k-th point (1-based) of the infinite family.
inline Point family_point(std::size_t k) {
  if (k == 0) throw OutOfRange("family points are numbered from 1");
  auto x = x_symbol;
  auto a = a_symbol;
  switch (k) {
    case 1: return Point({x(1), x(2), x(3), x(4)});
    case 2: return Point({x(1), x(2), a(1), a(2)});
    case 3: return Point({a(3), a(4), x(3), a(2)});
    case 4: return Point({a(3), a(4), a(1), x(4)});
    default: break;
  }
  // block n >= 2 holds points 4n-3 .. 4n
  const std::size_t n = (k + 3) / 4;
  const std::size_t b = 4 * n;
  switch (k - (b - 4)) {
    case 1: return Point({x(1), a(b - 4), a(b - 3), a(b - 2)});
    case 2: return Point({a(b - 5), x(2), a(b - 3), a(b - 2)});
    case 3: return Point({a(b - 1), a(b), x(3), a(b - 2)});
    default: return Point({a(b - 1), a(b), a(b - 3), x(4)});
  }
}

/// First `count` points of the family.
inline PointSet family_S(std::size_t count) {
  if (count == 0) throw OutOfRange("family prefix needs at least one point");
  std::vector<Point> pts;
  for (std::size_t k = 1; k <= count; ++k) pts.push_back(family_point(k));
  return PointSet(4, std::move(pts));
}

/// The extra point closing the prefix of 4n points into a full set.
inline Point family_z(std::size_t n) {
  if (n == 0) throw OutOfRange("z is defined for n >= 1");
  return Point({a_symbol(4 * n - 1), x_symbol(2), a_symbol(4 * n - 3), x_symbol(4)});
}

inline PointSet family_S4n_plus_z(std::size_t n) { return family_S(4 * n).with_point(family_z(n)); }

namespace detail {

inline bool has_symbol(const Point& p, const Symbol& s) {
  for (const auto& c : p.coords())
    if (c == s) return true;
  return false;
}

inline RationalMatrix symbol_matrix(const std::vector<Point>& rows, const std::vector<Symbol>& cols) {
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (has_symbol(rows[r], cols[c])) m(r, c) = 1;
  return m;
}

}  // namespace detail

/// Square boundary-reduced matrix of a family prefix S_k. Columns x4, a1, a2, ... with
/// x1, x2, x3 and the newest alphas dropped (a_{2m} for k = 2m; a_{2m-1}, a_{2m} for k = 2m-1).
inline RationalMatrix matrix_N(const PointSet& prefix) {
  const std::size_t k = prefix.size();
  if (k == 0 || prefix.dimension() != 4 || prefix != family_S(k))
    throw UnsupportedInput("matrix_N expects a prefix of the counterexample family");
  // both parities keep a_1 .. a_{k-1}
  const std::size_t last_alpha = k - 1;
  std::vector<Symbol> cols{x_symbol(4)};
  for (std::size_t j = 1; j <= last_alpha; ++j) cols.push_back(a_symbol(j));
  return detail::symbol_matrix(prefix.points(), cols);
}

/// 4n x 4n matrix: rows y_2..y_{4n}, z; columns a_1..a_{4n}.
inline RationalMatrix matrix_A(std::size_t n) {
  if (n == 0) throw OutOfRange("matrix_A is defined for n >= 1");
  std::vector<Point> rows;
  for (std::size_t k = 2; k <= 4 * n; ++k) rows.push_back(family_point(k));
  rows.push_back(family_z(n));
  std::vector<Symbol> cols;
  for (std::size_t j = 1; j <= 4 * n; ++j) cols.push_back(a_symbol(j));
  return detail::symbol_matrix(rows, cols);
}

inline BoundarySet family_boundary(std::vector<std::size_t> alphas) {
  std::vector<Column> cols{{0, x_symbol(1)}, {1, x_symbol(2)}, {2, x_symbol(3)}};
  // a_j sits at coordinate 1, 2, 3, 4 for j = 3, 0, 1, 2 (mod 4)
  for (auto j : alphas) cols.push_back(Column{(j + 1) % 4, a_symbol(j)});
  return BoundarySet(std::move(cols));
}

struct Claim {
  std::string id;
  Json params;
  bool pass = false;
  Json witness;
};

struct PaperReport {
  std::vector<Claim> claims;

  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

inline Json to_json(const PaperReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json j;
    j["id"] = c.id;
    j["params"] = c.params;
    j["pass"] = c.pass;
    j["witness"] = c.witness;
    claims.push_back(std::move(j));
  }
  Json out;
  out["claims"] = std::move(claims);
  return out;
}

struct ClaimOptions {
  Budget budget;
  // geodesic search on S_{4k} u {z} examines up to 2^(4k-1) subsets; larger k are skipped
  std::uint64_t geodesic_subsets = std::uint64_t{1} << 16;
  std::size_t components_m_max = 3;
};

/// Regression checks of the family's structural facts for parameters up to n_max.
/// A check that runs out of budget marks its claim failed with the reason as witness.
inline PaperReport verify_paper_claims(std::size_t n_max, const ClaimOptions& opts = {}) {
  if (n_max == 0) throw OutOfRange("n_max must be at least 1");
  PaperReport report;
  auto run = [&](std::string id, Json params, const std::function<bool(Json&)>& body) {
    Claim c{std::move(id), std::move(params), false, Json::array()};
    try {
      c.pass = body(c.witness);
    } catch (const BudgetExceeded& e) {
      c.pass = false;
      c.witness = Json{{"budget_exceeded", e.what()}};
    }
    report.claims.push_back(std::move(c));
  };

  run("even_prefix_good_with_two_boundaries", Json{{"m_max", n_max}}, [&](Json& w) {
    bool ok = true;
    for (std::size_t m = 1; m <= n_max; ++m) {
      auto s = family_S(2 * m);
      bool good = is_good(s);
      bool b_even = good && is_boundary(s, family_boundary({2 * m}));
      bool b_odd = good && is_boundary(s, family_boundary({2 * m - 1}));
      w.push_back(Json{{"m", m}, {"good", good}, {"boundary_a_2m", b_even}, {"boundary_a_2m_minus_1", b_odd}});
      ok = ok && good && b_even && b_odd;
    }
    return ok;
  });

  run("stale_boundaries_rejected", Json{{"n_max", n_max}}, [&](Json& w) {
    bool ok = true;
    for (std::size_t n = 2; n <= n_max; ++n) {
      auto s = family_S(2 * n);
      for (std::size_t m = 1; m < n; ++m) {
        bool even = is_boundary(s, family_boundary({2 * m}));
        bool odd = is_boundary(s, family_boundary({2 * m - 1}));
        if (even || odd) {
          ok = false;
          w.push_back(Json{{"n", n}, {"m", m}, {"boundary_a_2m", even}, {"boundary_a_2m_minus_1", odd}});
        }
      }
    }
    return ok;
  });

  run("extended_set_full_with_three_point_boundary", Json{{"k_max", n_max}}, [&](Json& w) {
    bool ok = true;
    for (std::size_t k = 1; k <= n_max; ++k) {
      auto s = family_S4n_plus_z(k);
      bool full = is_full(s);
      bool bnd = is_good(s) && is_boundary(s, family_boundary({}));
      w.push_back(Json{{"k", k}, {"full", full}, {"boundary_x1_x2_x3", bnd}});
      ok = ok && full && bnd;
    }
    return ok;
  });

  run("inverse_row_sum_at_most_3", Json{{"k_max", n_max}}, [&](Json& w) {
    bool ok = true;
    for (std::size_t k = 1; k <= n_max; ++k) {
      auto bound = max_row_abs_sum(invert(matrix_A(k)));
      w.push_back(Json{{"k", k}, {"max_row_abs_sum", to_string(bound)}});
      ok = ok && bound <= 3;
    }
    return ok;
  });

  run("geodesic_is_whole_set", Json{{"k_max", n_max}, {"geodesic_subsets", opts.geodesic_subsets}}, [&](Json& w) {
    bool ok = true, any = false;
    for (std::size_t k = 1; k <= n_max; ++k) {
      if (4 * k - 1 >= 64 || (std::uint64_t{1} << (4 * k - 1)) > opts.geodesic_subsets) {
        w.push_back(Json{{"k", k}, {"skipped", "geodesic budget"}});
        continue;
      }
      auto s = family_S4n_plus_z(k);
      auto g = geodesic(s, 0, 4 * k - 1, opts.budget);
      bool whole = g.points.size() == s.size();
      w.push_back(Json{{"k", k}, {"size", g.points.size()}, {"set_size", s.size()}, {"minima", g.minima}});
      ok = ok && whole;
      any = true;
    }
    return ok && any;
  });

  run("prefix_components_singletons", Json{{"m_max", std::min(n_max, opts.components_m_max)}}, [&](Json& w) {
    bool ok = true;
    for (std::size_t m = 1; m <= std::min(n_max, opts.components_m_max); ++m) {
      auto s = family_S(2 * m);
      auto full = full_components(s, opts.budget);
      auto related = related_components(s, opts.budget);
      bool singletons = full.blocks.size() == s.size() && related.blocks.size() == s.size();
      w.push_back(Json{{"m", m}, {"full_blocks", full.blocks.size()}, {"related_blocks", related.blocks.size()}});
      ok = ok && singletons;
    }
    return ok;
  });

  return report;
}

}  // namespace goodsets
