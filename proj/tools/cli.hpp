#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "goodsets/goodsets.hpp"

namespace goodsets::cli {

enum ExitCode : int { kTrue = 0, kFalse = 1, kInputError = 2, kBudgetExceeded = 3 };

struct Options {
  std::string input;
  std::string format = "json";
  bool tag_coordinates = true;
  Budget budget;
};

struct Outcome {
  Json report;
  int code = kTrue;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline PointSet load_set(const Options& o) {
  if (o.input.empty()) throw InputError("--input is required");
  auto s = parse_point_set(read_file(o.input));
  return o.tag_coordinates ? tag_coordinates(s) : s;
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

// "y3" or "3" is the third point (1-based); otherwise a comma-separated symbol tuple.
inline std::size_t resolve_point(const PointSet& s, const std::string& ref) {
  std::string digits = (!ref.empty() && ref[0] == 'y') ? ref.substr(1) : ref;
  if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
    auto k = std::stoull(digits);
    if (k == 0 || k > s.size()) throw InputError("point reference '" + ref + "' is out of range");
    return k - 1;
  }
  std::vector<Symbol> coords;
  for (const auto& name : split_list(ref)) coords.emplace_back(name);
  auto i = s.index_of(Point(std::move(coords)));
  if (!i) throw InputError("point '" + ref + "' is not in the set");
  return *i;
}

inline Json column_json(const Column& c) { return c.symbol.name(); }

inline Json boundary_json(const BoundarySet& b) {
  Json arr = Json::array();
  for (const auto& c : b.elements) arr.push_back(column_json(c));
  return arr;
}

inline Json indices_json(const Subset& k) {
  Json arr = Json::array();
  for (auto i : k) arr.push_back(i + 1);
  return arr;
}

inline Json partition_json(const Partition& p) {
  Json arr = Json::array();
  for (const auto& b : p.blocks) arr.push_back(indices_json(b));
  return arr;
}

inline Outcome cmd_check(const Options& o) {
  auto s = load_set(o);
  auto m = incidence_matrix(s);
  auto r = rank(m.entries);
  Outcome out;
  out.report["good"] = r == s.size();
  out.report["rank"] = r;
  out.report["points"] = s.size();
  out.report["columns"] = m.columns.size();
  if (r == s.size()) {
    out.report["boundary_size"] = m.columns.size() - s.size();
    if (s.separated()) out.report["full"] = is_full(s);
  } else {
    out.code = kFalse;
  }
  return out;
}

inline Outcome cmd_boundary(const Options& o, const std::string& boundary, std::size_t cap) {
  auto s = load_set(o);
  Outcome out;
  if (!boundary.empty()) {
    auto b = boundary_from_symbols(s, split_list(boundary));
    bool ok = is_boundary(s, b);
    out.report["boundary"] = boundary_json(b);
    out.report["is_boundary"] = ok;
    if (ok) out.report["solution_bound"] = to_string(solution_bound_report(s, b));
    out.code = ok ? kTrue : kFalse;
    return out;
  }
  auto all = enumerate_boundaries(s, cap, o.budget);
  Json sets = Json::array();
  for (const auto& b : all.sets) sets.push_back(boundary_json(b));
  out.report["boundary_size"] = incidence_matrix(s).columns.size() - s.size();
  out.report["count"] = all.sets.size();
  out.report["truncated"] = all.truncated;
  out.report["boundaries"] = std::move(sets);
  return out;
}

inline Outcome cmd_components(const Options& o, const std::string& kind) {
  auto s = load_set(o);
  Outcome out;
  if (kind == "full" || kind == "both") out.report["full_components"] = partition_json(full_components(s, o.budget));
  if (kind == "related" || kind == "both")
    out.report["related_components"] = partition_json(related_components(s, o.budget));
  return out;
}

inline Outcome cmd_geodesic(const Options& o, const std::string& from, const std::string& to) {
  auto s = load_set(o);
  auto a = resolve_point(s, from), b = resolve_point(s, to);
  auto g = geodesic(s, a, b, o.budget);
  Json pts = Json::array();
  for (auto i : g.points) pts.push_back(to_json(s[i]));
  Outcome out;
  out.report["from"] = a + 1;
  out.report["to"] = b + 1;
  out.report["size"] = g.points.size();
  out.report["minima"] = g.minima;
  out.report["indices"] = indices_json(g.points);
  out.report["points"] = std::move(pts);
  return out;
}

inline Outcome cmd_solve(const Options& o, const std::string& function, const std::string& boundary,
                         const std::string& values) {
  auto s = load_set(o);
  auto f = parse_function_table(s, read_file(function));
  auto b = boundary_from_symbols(s, split_list(boundary));
  std::map<Column, Rational> u;
  for (const auto& c : b.elements) u.emplace(c, Rational(0));
  for (const auto& item : split_list(values)) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("boundary value '" + item + "' is not of the form symbol=value");
    auto cols = boundary_from_symbols(s, {item.substr(0, eq)}).elements;
    if (!b.contains(cols.front())) throw InputError("'" + item.substr(0, eq) + "' is not a boundary element");
    u[cols.front()] = parse_rational(item.substr(eq + 1));
  }
  BoundaryAssignment ba(b, u);
  auto sol = solve_decomposition(s, f, ba);
  Json tables = Json::array();
  for (std::size_t i = 0; i < sol.tables.size(); ++i)
    for (const auto& [sym, v] : sol.tables[i])
      tables.push_back(Json{{"coordinate", i + 1}, {"symbol", sym.name()}, {"value", to_string(v)}});
  Outcome out;
  out.report["boundary"] = boundary_json(b);
  out.report["verified"] = verify_decomposition(s, f, sol);
  out.report["solution_bound"] = to_string(solution_bound_report(s, b));
  out.report["solution"] = std::move(tables);
  return out;
}

inline Outcome cmd_family(const std::string& name, std::size_t param, const std::string& output) {
  PointSet s = name == "S" ? family_S(param) : family_S4n_plus_z(param);
  auto text = serialize_point_set(s);
  Outcome out;
  out.report["family"] = name;
  out.report["param"] = param;
  out.report["points"] = s.size();
  if (output.empty()) {
    out.report["set"] = to_json(s);
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f || !(f << text)) throw InputError("cannot write '" + output + "'");
    out.report["output"] = output;
  }
  return out;
}

inline Outcome cmd_verify(std::size_t n_max, const ClaimOptions& opts) {
  auto r = verify_paper_claims(n_max, opts);
  Outcome out{to_json(r), r.all_pass() ? kTrue : kFalse};
  bool budget_only = !r.all_pass();
  for (const auto& c : r.claims)
    if (!c.pass && !(c.witness.is_object() && c.witness.contains("budget_exceeded"))) budget_only = false;
  if (budget_only) out.code = kBudgetExceeded;
  return out;
}

inline void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path + "/" + k, os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "/" + std::to_string(i), os);
  } else {
    os << path << ',' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

inline std::string render(const Json& report, const std::string& format) {
  if (format == "csv") {
    std::ostringstream os;
    os << "path,value\n";
    flatten(report, "", os);
    return os.str();
  }
  return report.dump(2) + "\n";
}

/// Runs one invocation. The report goes to `out` only once complete; diagnostics go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decision procedures for good sets in cartesian products"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t budget_subsets = o.budget.subsets, budget_product = o.budget.product;

  auto common = [&](CLI::App* sub, bool needs_input = true) {
    if (needs_input) sub->add_option("--input,-i", o.input, "point set JSON file")->required();
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--tag-coordinates,!--no-tag-coordinates", o.tag_coordinates,
                  "rename symbols shared across coordinates to name@k (default on)");
    sub->add_option("--budget-subsets", budget_subsets, "max candidate subsets per search");
    sub->add_option("--budget-product", budget_product, "max product tuples for maximality checks");
  };

  auto* check = app.add_subcommand("check", "rank-based goodness and fullness");
  common(check);

  std::string boundary, values;
  std::size_t cap = 1000;
  auto* bnd = app.add_subcommand("boundary", "test one boundary or enumerate all");
  common(bnd);
  bnd->add_option("--boundary,-b", boundary, "comma-separated symbols to test");
  bnd->add_option("--cap", cap, "max boundaries listed");

  std::string kind = "both";
  auto* comp = app.add_subcommand("components", "full and related components");
  common(comp);
  comp->add_option("--kind", kind)->check(CLI::IsMember({"full", "related", "both"}));

  std::string from, to;
  auto* geo = app.add_subcommand("geodesic", "smallest full subset containing two points");
  common(geo);
  geo->add_option("--from", from, "point: y<k>, <k>, or s1,s2,...")->required();
  geo->add_option("--to", to, "point: y<k>, <k>, or s1,s2,...")->required();

  std::string function;
  auto* sol = app.add_subcommand("solve", "solve f = u_1 + ... + u_n with prescribed boundary values");
  common(sol);
  sol->add_option("--function,-f", function, "function table JSON file")->required();
  sol->add_option("--boundary,-b", boundary, "comma-separated boundary symbols")->required();
  sol->add_option("--boundary-values", values, "symbol=p/q,... (unspecified values are 0)");

  std::string family_name, output;
  std::size_t param = 1;
  auto* fam = app.add_subcommand("family", "write a counterexample family member");
  common(fam, false);
  fam->add_option("--name", family_name, "S (first k points) or S4n_plus_z")
      ->required()
      ->check(CLI::IsMember({"S", "S4n_plus_z"}));
  fam->add_option("--param,-k", param, "k for S, n for S4n_plus_z")->required();
  fam->add_option("--output,-o", output, "destination file");

  std::size_t n_max = 2;
  ClaimOptions claim_opts;
  auto* ver = app.add_subcommand("verify-paper", "regression checks on the counterexample families");
  common(ver, false);
  ver->add_option("--n-max", n_max);
  ver->add_option("--geodesic-budget", claim_opts.geodesic_subsets, "max subsets for a geodesic check");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  o.budget = Budget{budget_subsets, budget_product};
  claim_opts.budget = o.budget;

  Outcome result;
  try {
    if (check->parsed()) result = cmd_check(o);
    else if (bnd->parsed()) result = cmd_boundary(o, boundary, cap);
    else if (comp->parsed()) result = cmd_components(o, kind);
    else if (geo->parsed()) result = cmd_geodesic(o, from, to);
    else if (sol->parsed()) result = cmd_solve(o, function, boundary, values);
    else if (fam->parsed()) result = cmd_family(family_name, param, output);
    else result = cmd_verify(n_max, claim_opts);
  } catch (const NotGoodError& e) {
    err << e.what() << "\n";
    result = {Json{{"good", false}}, kFalse};
  } catch (const NotABoundary& e) {
    err << e.what() << "\n";
    result = {Json{{"is_boundary", false}}, kFalse};
  } catch (const NotRelatedError& e) {
    err << e.what() << "\n";
    result = {Json{{"related", false}}, kFalse};
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  out << render(result.report, o.format);
  return result.code;
}

}  // namespace goodsets::cli
