#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "goodsets/core.hpp"
#include "goodsets/errors.hpp"
#include "goodsets/linalg.hpp"
#include "goodsets/union_find.hpp"

namespace goodsets {

/// Search limits. Exceeding either raises BudgetExceeded; results are never approximated.
struct Budget {
  std::uint64_t subsets = std::uint64_t{1} << 20;  // candidate point/column subsets examined
  std::uint64_t product = 1'000'000;              // tuples of the ambient product
};

/// Columns (coordinate, symbol) of the incidence matrix whose values are prescribed.
struct BoundarySet {
  std::vector<Column> elements;  // sorted, unique

  BoundarySet() = default;
  explicit BoundarySet(std::vector<Column> cols) : elements(std::move(cols)) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  }

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(const Column& c) const { return std::binary_search(elements.begin(), elements.end(), c); }

  friend bool operator==(const BoundarySet&, const BoundarySet&) = default;
};

/// Disjoint blocks covering a point set, ordered by least member.
struct Partition {
  std::vector<Subset> blocks;

  friend bool operator==(const Partition&, const Partition&) = default;
};

struct Boundaries {
  std::vector<BoundarySet> sets;
  bool truncated = false;
};

struct FullSubsets {
  std::vector<Subset> subsets;
  bool truncated = false;
};

struct Geodesic {
  Subset points;
  std::size_t minima = 1;  // how many minimum-size full subsets contain both endpoints
};

namespace detail {

inline void require_nonempty(const PointSet& s) {
  if (s.empty()) throw EmptyInput();
}

inline void require_separated(const PointSet& s) {
  require_nonempty(s);
  if (!s.separated())
    throw UnsupportedInput("point set is not separated (a symbol occurs at two coordinates); tag coordinates first");
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral; saturate instead of overflowing
    auto next = saturating_mul(r, n - k + i);
    if (next == std::numeric_limits<std::uint64_t>::max()) return next;
    r = next / i;
  }
  return r;
}

// Precomputed incidence data shared by the subset searches.
class SubsetOracle {
 public:
  explicit SubsetOracle(const PointSet& s) : set_(s), matrix_(incidence_matrix(s)), support_(s.size()) {
    for (std::size_t r = 0; r < s.size(); ++r)
      for (std::size_t i = 0; i < s.dimension(); ++i) support_[r].push_back(*matrix_.column_index(Column{i, s[r][i]}));
  }

  std::size_t column_count(const Subset& k) const {
    std::vector<std::size_t> cols;
    for (auto p : k) cols.insert(cols.end(), support_[p].begin(), support_[p].end());
    std::sort(cols.begin(), cols.end());
    return static_cast<std::size_t>(std::unique(cols.begin(), cols.end()) - cols.begin());
  }

  // The n-1 shifts u_i += c_i (sum c_i = 0) always lie in the kernel, so a good subset has
  // at least |K| + n - 1 columns; the count rules out most bad candidates before any rank.
  bool good(const Subset& k) const {
    if (k.empty()) return true;
    if (column_count(k) < k.size() + set_.dimension() - 1) return false;
    return rank(matrix_.entries.select_rows(k)) == k.size();
  }

  // Only meaningful for good subsets.
  bool full_given_good(const Subset& k) const {
    return !k.empty() && column_count(k) == k.size() + set_.dimension() - 1;
  }

  const IncidenceMatrix& matrix() const noexcept { return matrix_; }

 private:
  const PointSet& set_;
  IncidenceMatrix matrix_;
  std::vector<std::vector<std::size_t>> support_;
};

// Level-wise search over good supersets of `required`, smallest first. Supersets of bad sets
// are never generated: removing the largest optional element of a good set leaves a good
// set, so extending good sets by larger elements reaches every good superset exactly once.
// on_level(size, full subsets at that size in lexicographic order) returns false to stop.
template <class OnLevel>
void search_full_supersets(const SubsetOracle& oracle, std::size_t universe, Subset required, const Budget& budget,
                           OnLevel&& on_level) {
  std::sort(required.begin(), required.end());
  required.erase(std::unique(required.begin(), required.end()), required.end());
  std::vector<bool> is_required(universe, false);
  for (auto r : required) is_required[r] = true;

  std::uint64_t examined = 1;
  if (!oracle.good(required)) return;
  std::vector<std::pair<Subset, std::size_t>> level;  // (subset, next optional element allowed)
  level.emplace_back(required, 0);

  for (std::size_t size = required.size(); !level.empty(); ++size) {
    std::vector<Subset> full;
    for (const auto& [k, _] : level)
      if (oracle.full_given_good(k)) full.push_back(k);
    if (!full.empty() && !on_level(size, full)) return;
    if (size == universe) return;

    std::vector<std::pair<Subset, std::size_t>> next;
    for (const auto& [k, from] : level) {
      for (std::size_t e = from; e < universe; ++e) {
        if (is_required[e]) continue;
        if (++examined > budget.subsets)
          throw BudgetExceeded("subset search examined more than " + std::to_string(budget.subsets) +
                               " candidate subsets");
        Subset cand = k;
        cand.insert(std::upper_bound(cand.begin(), cand.end(), e), e);
        if (oracle.good(cand)) next.emplace_back(std::move(cand), e + 1);
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
}

inline Subset indices_of(const PointSet& s, const std::vector<Point>& pts) {
  Subset out;
  for (const auto& p : pts) {
    auto i = s.index_of(p);
    if (!i) throw InputError("point is not a member of the set");
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Subset> all_full_subsets(const PointSet& s, const Budget& budget) {
  SubsetOracle oracle(s);
  std::vector<Subset> out;
  search_full_supersets(oracle, s.size(), {}, budget, [&](std::size_t, const std::vector<Subset>& full) {
    out.insert(out.end(), full.begin(), full.end());
    return true;
  });
  return out;
}

}  // namespace detail

inline bool is_good(const PointSet& s) {
  detail::require_nonempty(s);
  return rank(incidence_matrix(s).entries) == s.size();
}

/// Definitional check: every function on S (each point indicator in turn) is a sum of
/// one-coordinate functions, i.e. each system M u = e_p is solvable.
inline bool goodness_oracle(const PointSet& s) {
  detail::require_nonempty(s);
  auto m = incidence_matrix(s).entries;
  for (std::size_t p = 0; p < s.size(); ++p) {
    std::vector<Rational> f(s.size());
    f[p] = 1;
    if (!solve(m, f)) return false;
  }
  return true;
}

/// Resolves symbol names to boundary columns; names must be unambiguous (separated sets).
inline BoundarySet boundary_from_symbols(const PointSet& s, const std::vector<std::string>& names) {
  auto proj = projections(s);
  std::vector<Column> cols;
  for (const auto& name : names) {
    Symbol sym(name);
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < proj.size(); ++i)
      if (proj[i].count(sym)) hits.push_back(i);
    if (hits.empty()) throw InputError("symbol '" + name + "' does not occur in the point set");
    if (hits.size() > 1) throw UnsupportedInput("symbol '" + name + "' occurs at several coordinates");
    cols.push_back(Column{hits.front(), sym});
  }
  return BoundarySet(std::move(cols));
}

/// Column indices of the incidence matrix outside the boundary.
inline std::vector<std::size_t> interior_columns(const IncidenceMatrix& m, const BoundarySet& b) {
  for (const auto& c : b.elements)
    if (!m.column_index(c)) throw ShapeError("boundary element '" + c.symbol.name() + "' is not a column of the set");
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.columns.size(); ++j)
    if (!b.contains(m.columns[j])) keep.push_back(j);
  return keep;
}

/// True iff dropping B's columns leaves a square invertible matrix, i.e. prescribing u on B
/// makes the additive system uniquely solvable for every f.
inline bool is_boundary(const PointSet& s, const BoundarySet& b) {
  detail::require_separated(s);
  auto m = incidence_matrix(s);
  if (rank(m.entries) != s.size()) throw NotGoodError();
  auto keep = interior_columns(m, b);
  if (keep.size() != s.size()) return false;
  return rank(m.entries.select_cols(keep)) == s.size();
}

/// All boundaries in lexicographic column order, at most `cap` of them.
inline Boundaries enumerate_boundaries(const PointSet& s, std::size_t cap, const Budget& budget = {}) {
  detail::require_separated(s);
  auto m = incidence_matrix(s);
  if (rank(m.entries) != s.size()) throw NotGoodError();
  const std::size_t ncols = m.columns.size();
  const std::size_t k = ncols - s.size();
  if (detail::binomial(ncols, k) > budget.subsets)
    throw BudgetExceeded("boundary enumeration needs C(" + std::to_string(ncols) + "," + std::to_string(k) +
                         ") candidates, over the budget of " + std::to_string(budget.subsets));

  Boundaries out;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0, p = 0; j < ncols; ++j) {
      if (p < k && pick[p] == j)
        ++p;
      else
        keep.push_back(j);
    }
    if (rank(m.entries.select_cols(keep)) == s.size()) {
      if (out.sets.size() == cap) {
        out.truncated = true;
        break;
      }
      std::vector<Column> cols;
      for (auto j : pick) cols.push_back(m.columns[j]);
      out.sets.emplace_back(std::move(cols));
    }
    // next k-combination of [0, ncols)
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == ncols - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

/// Good, with every boundary of exactly n-1 elements.
inline bool is_full(const PointSet& s) {
  detail::require_separated(s);
  auto m = incidence_matrix(s);
  return m.columns.size() == s.size() + s.dimension() - 1 && rank(m.entries) == s.size();
}

/// Definitional check: S is good and no tuple of the product of its projections can be
/// added while keeping it good.
inline bool maximality_oracle(const PointSet& s, const Budget& budget = {}) {
  detail::require_nonempty(s);
  auto proj = projections(s);
  std::uint64_t total = 1;
  for (const auto& p : proj) total = detail::saturating_mul(total, p.size());
  if (total > budget.product)
    throw BudgetExceeded("product of projections has " + std::to_string(total) + " tuples, over the budget of " +
                         std::to_string(budget.product));
  if (!is_good(s)) return false;

  std::vector<std::vector<Symbol>> axes;
  for (const auto& p : proj) axes.emplace_back(p.begin(), p.end());
  std::vector<std::size_t> odometer(axes.size(), 0);
  while (true) {
    std::vector<Symbol> coords;
    for (std::size_t i = 0; i < axes.size(); ++i) coords.push_back(axes[i][odometer[i]]);
    Point p(std::move(coords));
    if (!s.index_of(p) && is_good(s.with_point(p))) return false;
    std::size_t i = axes.size();
    while (i > 0 && ++odometer[i - 1] == axes[i - 1].size()) odometer[--i] = 0;
    if (i == 0) break;
  }
  return true;
}

/// Full subsets containing `required`, by increasing size then lexicographically.
inline FullSubsets full_subsets(const PointSet& s, const Subset& required, std::size_t cap, const Budget& budget = {}) {
  detail::require_separated(s);
  for (auto r : required)
    if (r >= s.size()) throw InputError("required point index out of range");
  detail::SubsetOracle oracle(s);
  FullSubsets out;
  detail::search_full_supersets(oracle, s.size(), required, budget, [&](std::size_t, const std::vector<Subset>& full) {
    for (const auto& k : full) {
      if (out.subsets.size() == cap) {
        out.truncated = true;
        return false;
      }
      out.subsets.push_back(k);
    }
    return true;
  });
  return out;
}

inline FullSubsets full_subsets(const PointSet& s, const std::vector<Point>& required, std::size_t cap,
                                const Budget& budget = {}) {
  return full_subsets(s, detail::indices_of(s, required), cap, budget);
}

/// Classes of the transitive closure of "some full subset contains both points".
inline Partition related_components(const PointSet& s, const Budget& budget = {}) {
  detail::require_separated(s);
  if (!is_good(s)) throw NotGoodError();
  DisjointSets uf(s.size());
  for (const auto& k : detail::all_full_subsets(s, budget))
    for (std::size_t i = 1; i < k.size(); ++i) uf.unite(k.front(), k[i]);
  Partition out{uf.classes()};
  for (const auto& block : out.blocks)
    if (!is_full(s.subset(block))) throw std::logic_error("related component is not full");
  return out;
}

/// Maximal full subsets; checked to partition S.
inline Partition full_components(const PointSet& s, const Budget& budget = {}) {
  detail::require_separated(s);
  if (!is_good(s)) throw NotGoodError();
  auto full = detail::all_full_subsets(s, budget);
  std::stable_sort(full.begin(), full.end(), [](const Subset& a, const Subset& b) { return a.size() > b.size(); });
  std::vector<Subset> maximal;
  for (const auto& k : full) {
    bool covered = std::any_of(maximal.begin(), maximal.end(), [&](const Subset& big) {
      return std::includes(big.begin(), big.end(), k.begin(), k.end());
    });
    if (!covered) maximal.push_back(k);
  }
  std::sort(maximal.begin(), maximal.end());
  std::vector<int> seen(s.size(), 0);
  for (const auto& block : maximal)
    for (auto p : block) ++seen[p];
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    throw std::logic_error("maximal full subsets do not partition the set");
  return Partition{std::move(maximal)};
}

/// Smallest full subset containing both points; ties broken lexicographically and counted.
inline Geodesic geodesic(const PointSet& s, std::size_t from, std::size_t to, const Budget& budget = {}) {
  detail::require_separated(s);
  if (from >= s.size() || to >= s.size()) throw InputError("geodesic endpoint index out of range");
  if (!is_good(s)) throw NotGoodError();
  if (from == to) return Geodesic{{from}, 1};
  detail::SubsetOracle oracle(s);
  std::optional<Geodesic> best;
  detail::search_full_supersets(oracle, s.size(), {from, to}, budget, [&](std::size_t, const std::vector<Subset>& full) {
    best = Geodesic{full.front(), full.size()};
    return false;
  });
  if (!best) throw NotRelatedError();
  return *best;
}

inline Geodesic geodesic(const PointSet& s, const Point& from, const Point& to, const Budget& budget = {}) {
  auto a = s.index_of(from), b = s.index_of(to);
  if (!a || !b) throw InputError("geodesic endpoint is not a member of the set");
  return geodesic(s, *a, *b, budget);
}

}  // namespace goodsets
