#include <gtest/gtest.h>

#include <random>

#include "goodsets/goodsets.hpp"
#include "oracles.hpp"

using namespace goodsets;

namespace {

BoundarySet bnd(const PointSet& s, std::vector<std::string> names) { return boundary_from_symbols(s, names); }

FunctionTable random_f(std::mt19937& rng, const PointSet& s) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < s.size(); ++i) v.push_back(oracle::random_rational(rng));
  return FunctionTable(s, v);
}

Rational max_abs(const std::vector<Rational>& v) {
  Rational m = 0;
  for (const auto& x : v) m = std::max(m, abs_value(x));
  return m;
}

}  // namespace

TEST(SolveDecomposition, SinglePoint) {
  PointSet s(4, {Point{"x1", "x2", "x3", "x4"}});
  auto u = solve_decomposition(s, FunctionTable(s, {7}), BoundaryAssignment(bnd(s, {"x1", "x2", "x3"})));
  EXPECT_EQ(u.value(3, Symbol("x4")), 7);
  EXPECT_EQ(u.value(0, Symbol("x1")), 0);
  EXPECT_EQ(u.value(1, Symbol("x2")), 0);
  EXPECT_EQ(u.value(2, Symbol("x3")), 0);
}

TEST(SolveDecomposition, ZeroFunctionHasZeroSolution) {
  auto s = family_S4n_plus_z(1);
  auto u = solve_decomposition(s, FunctionTable(s, std::vector<Rational>(s.size())),
                               BoundaryAssignment(family_boundary({})));
  for (const auto& table : u.tables)
    for (const auto& [sym, v] : table) EXPECT_EQ(v, 0) << sym.name();
}

TEST(SolveDecomposition, PrefixOfTwo) {
  auto s = family_S(2);
  auto f = parse_function_table(s, R"({"values":[{"point":["x1","x2","x3","x4"],"value":1},
                                                 {"point":["x1","x2","a1","a2"],"value":"2"}]})");
  auto u = solve_decomposition(s, f, BoundaryAssignment(bnd(s, {"x1", "x2", "x3", "a2"})));
  EXPECT_EQ(u.value(3, Symbol("x4")), 1);
  EXPECT_EQ(u.value(2, Symbol("a1")), 2);
  EXPECT_EQ(u.value(0, Symbol("x1")), 0);
  EXPECT_EQ(u.value(1, Symbol("x2")), 0);
  EXPECT_EQ(u.value(2, Symbol("x3")), 0);
  EXPECT_EQ(u.value(3, Symbol("a2")), 0);
  EXPECT_TRUE(verify_decomposition(s, f, u));
}

TEST(SolveDecomposition, PrescribedBoundaryValues) {
  auto s = family_S(2);
  auto b = bnd(s, {"x1", "x2", "x3", "a2"});
  std::map<Column, Rational> values;
  for (const auto& c : b.elements) values[c] = make_rational(1, 3);
  FunctionTable f(s, {1, 2});
  auto u = solve_decomposition(s, f, BoundaryAssignment(b, values));
  EXPECT_TRUE(verify_decomposition(s, f, u));
  EXPECT_EQ(u.value(3, Symbol("a2")), make_rational(1, 3));
  EXPECT_EQ(u.value(3, Symbol("x4")), 0);  // 1 - 3 * 1/3
}

TEST(SolveDecomposition, Errors) {
  PointSet cycle(2, {Point{"a", "p"}, Point{"a", "q"}, Point{"b", "p"}, Point{"b", "q"}});
  EXPECT_THROW(solve_decomposition(cycle, FunctionTable(cycle, {1, 2, 3, 4}),
                                   BoundaryAssignment(BoundarySet({Column{0, Symbol("a")}}))),
               NotGoodError);
  auto s4 = family_S(4);
  EXPECT_THROW(solve_decomposition(s4, FunctionTable(s4, {1, 2, 3, 4}),
                                   BoundaryAssignment(bnd(s4, {"x1", "x2", "x3", "a2"}))),
               NotABoundary);
  EXPECT_THROW(FunctionTable(s4, {1, 2}), ShapeError);
  auto b = bnd(s4, {"x1", "x2", "x3", "a4"});
  EXPECT_THROW(BoundaryAssignment(b, {{b.elements.front(), Rational(1)}}), ShapeError);
  EXPECT_THROW(parse_function_table(s4, R"({"values":[{"point":["x1","x2","x3","x4"],"value":1}]})"), ShapeError);
  EXPECT_THROW(parse_function_table(s4, R"({"values":[{"point":["x1","x2","x3","x4"],"value":"1/0"}]})"),
               InputError);
}

TEST(SolveDecomposition, StaleBoundaryIsRejected) {
  for (std::size_t m = 1; m <= 4; ++m) {
    auto s = family_S(2 * m + 2);
    FunctionTable f(s, std::vector<Rational>(s.size(), Rational(1)));
    EXPECT_THROW(solve_decomposition(s, f, BoundaryAssignment(family_boundary({2 * m}))), NotABoundary) << m;
    EXPECT_THROW(solve_decomposition(s, f, BoundaryAssignment(family_boundary({2 * m - 1}))), NotABoundary) << m;
  }
}

TEST(VerifyDecomposition, DetectsPerturbation) {
  std::mt19937 rng(5);
  auto s = family_S(6);
  auto f = random_f(rng, s);
  auto u = solve_decomposition(s, f, BoundaryAssignment(family_boundary({6})));
  EXPECT_TRUE(verify_decomposition(s, f, u));
  auto bad = u;
  bad.tables[2][Symbol("a5")] += 1;
  EXPECT_FALSE(verify_decomposition(s, f, bad));
  bad = u;
  bad.tables[0].erase(Symbol("x1"));
  EXPECT_THROW(verify_decomposition(s, f, bad), ShapeError);
}

TEST(VerifyDecomposition, SolutionBuiltFromInverseOfA) {
  // With U = 0 on x1, x2, x3 the first point forces u4(x4) = f(y1); the alphas then solve
  // A u = f(y2..y4, z) - f(y1) * [row contains x4].
  std::mt19937 rng(6);
  auto s = family_S4n_plus_z(1);
  auto inv = invert(matrix_A(1));
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<long> v(-9, 9);
    std::vector<Rational> fv;
    for (std::size_t i = 0; i < s.size(); ++i) fv.push_back(v(rng));
    FunctionTable f(s, fv);
    std::vector<Rational> rhs;
    for (std::size_t r = 1; r < s.size(); ++r) rhs.push_back(fv[r] - (s[r][3] == Symbol("x4") ? fv[0] : Rational(0)));
    auto alphas = inv * std::span<const Rational>(rhs);

    AdditiveSolution u{std::vector<std::map<Symbol, Rational>>(4)};
    u.tables[0][Symbol("x1")] = 0;
    u.tables[1][Symbol("x2")] = 0;
    u.tables[2][Symbol("x3")] = 0;
    u.tables[3][Symbol("x4")] = fv[0];
    for (std::size_t j = 1; j <= 4; ++j) {
      auto col = family_boundary({j}).elements;
      auto it = std::find_if(col.begin(), col.end(), [&](const Column& c) { return c.symbol == a_symbol(j); });
      u.tables[it->coordinate][it->symbol] = alphas[j - 1];
    }
    EXPECT_TRUE(verify_decomposition(s, f, u));
    EXPECT_EQ(u, solve_decomposition(s, f, BoundaryAssignment(family_boundary({}))));
  }
}

TEST(SolutionBound, Examples) {
  PointSet single(4, {Point{"x1", "x2", "x3", "x4"}});
  EXPECT_EQ(solution_bound_report(single, bnd(single, {"x1", "x2", "x3"})), 1);
  EXPECT_EQ(solution_bound_report(family_S4n_plus_z(1), family_boundary({})), 3);
  EXPECT_THROW(solution_bound_report(family_S(4), family_boundary({2})), NotABoundary);
}

TEST(SolutionBound, BoundedIndependentlyOfN) {
  // Frozen from an independent sympy computation; closed form 11/3 - (2/3) 4^{1-n}.
  const std::vector<Rational> expected{3,
                                       make_rational(7, 2),
                                       make_rational(29, 8),
                                       make_rational(117, 32),
                                       make_rational(469, 128),
                                       make_rational(1877, 512)};
  for (std::size_t n = 1; n <= 6; ++n) {
    auto bound = solution_bound_report(family_S4n_plus_z(n), family_boundary({}));
    EXPECT_EQ(bound, expected[n - 1]) << "n=" << n;
    EXPECT_LT(bound, make_rational(11, 3));
  }
}

TEST(SolverProperties, DeterministicAndLinear) {
  std::mt19937 rng(21);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto s = family_S4n_plus_z(n);
    BoundaryAssignment ba(family_boundary({}));
    for (int trial = 0; trial < 10; ++trial) {
      auto f = random_f(rng, s), g = random_f(rng, s);
      std::vector<Rational> sum;
      for (std::size_t i = 0; i < s.size(); ++i) sum.push_back(f[i] + g[i]);
      auto uf = solve_decomposition(s, f, ba);
      EXPECT_EQ(uf, solve_decomposition(s, f, ba));
      auto ug = solve_decomposition(s, g, ba);
      auto us = solve_decomposition(s, FunctionTable(s, sum), ba);
      for (std::size_t i = 0; i < 4; ++i)
        for (const auto& [sym, v] : us.tables[i]) EXPECT_EQ(v, uf.tables[i].at(sym) + ug.tables[i].at(sym));
    }
  }
}

TEST(SolverProperties, BoundLaw) {
  std::mt19937 rng(22);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto s = family_S4n_plus_z(n);
    auto b = family_boundary({});
    auto bound = solution_bound_report(s, b);
    BoundaryAssignment ba(b);
    for (int trial = 0; trial < 100; ++trial) {
      auto f = random_f(rng, s);
      auto u = solve_decomposition(s, f, ba);
      ASSERT_TRUE(verify_decomposition(s, f, u));
      auto limit = bound * max_abs(f.values());
      for (std::size_t i = 0; i < 4; ++i)
        for (const auto& [sym, v] : u.tables[i])
          if (!b.contains(Column{i, sym})) EXPECT_LE(abs_value(v), limit);
    }
  }
}
