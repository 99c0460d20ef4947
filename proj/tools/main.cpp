// Copyright 2026 The findim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// findim command line: dimension, cover, clique-cover, props, gen, product,
// construct-dim, intrinsic-check and sweep over files or stdin. JSON is the
// machine format (doubles rounded to 12 significant digits, byte-stable
// between runs); the table format is for humans.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "findim/findim.hpp"

namespace {

using findim::CliqueCoverParams;
using findim::CoverParams;
using findim::DimensionResult;
using findim::DimKind;
using findim::FiniteMetricSpace;
using findim::Graph;
using json = nlohmann::ordered_json;

struct GlobalOptions {
  double epsilon = findim::kDefaultEpsilon;
  double tol = 1e-9;
  int exact_cap = 0;  // 0: per-module defaults (cover 24, clique cover 40)
  std::string output = "json";
  std::uint64_t seed = 20260809;

  CoverParams cover_params() const {
    CoverParams p;
    if (exact_cap > 0) p.exact_cap = exact_cap;
    return p;
  }
  CliqueCoverParams clique_params() const {
    CliqueCoverParams p;
    if (exact_cap > 0) p.cap = exact_cap;
    return p;
  }
};

double round_sig(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::atof(buf);
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw findim::ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Loads either input kind; `graph_path`/`matrix_path` force the reading,
// otherwise the payload is sniffed (stdin pipelines).
struct LoadedInput {
  std::optional<Graph> graph;
  std::optional<FiniteMetricSpace> space;
};

LoadedInput load_input(const std::string& graph_path,
                       const std::string& matrix_path,
                       const GlobalOptions& opts) {
  LoadedInput input;
  auto parse_graph = [&](const std::string& text) {
    auto kind = findim::sniff_payload(text);
    if (kind == findim::PayloadKind::GraphJson)
      return findim::graph_from_json(nlohmann::json::parse(text));
    if (kind == findim::PayloadKind::GraphEdgeList) {
      std::istringstream ss(text);
      return findim::read_graph_edgelist(ss);
    }
    throw findim::ParseError("expected a graph, found a distance matrix");
  };
  auto parse_matrix = [&](const std::string& text) {
    auto kind = findim::sniff_payload(text);
    if (kind == findim::PayloadKind::MatrixJson)
      return findim::matrix_from_json(nlohmann::json::parse(text),
                                      opts.epsilon);
    if (kind == findim::PayloadKind::MatrixCsv) {
      std::istringstream ss(text);
      return findim::read_matrix_csv(ss, opts.epsilon);
    }
    throw findim::ParseError("expected a distance matrix, found a graph");
  };
  if (!graph_path.empty()) {
    input.graph = parse_graph(slurp(graph_path));
    return input;
  }
  if (!matrix_path.empty()) {
    input.space = parse_matrix(slurp(matrix_path));
    return input;
  }
  const std::string text = slurp("-");
  switch (findim::sniff_payload(text)) {
    case findim::PayloadKind::GraphJson:
    case findim::PayloadKind::GraphEdgeList:
      input.graph = parse_graph(text);
      return input;
    default:
      input.space = parse_matrix(text);
      return input;
  }
}

json covering_json(const findim::Covering& covering,
                   const std::vector<std::string>& names) {
  auto parts = json::array();
  for (const auto& part : covering.parts) {
    auto one = json::array();
    for (int v : part) one.push_back(names[v]);
    parts.push_back(std::move(one));
  }
  return parts;
}

void render_table(const json& j, std::ostream& out, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    std::string label = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      render_table(value, out, label);
    } else {
      out << label << ": " << value.dump() << "\n";
    }
  }
}

void emit(const json& j, const GlobalOptions& opts) {
  if (opts.output == "table")
    render_table(j, std::cout, "");
  else
    std::cout << j.dump(2) << "\n";
}

findim::Rational parse_rational(const std::string& text) {
  findim::Rational r;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    r.num = std::stoll(text.substr(0, slash));
    r.den = std::stoll(text.substr(slash + 1));
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string frac = text.substr(dot + 1);
    if (frac.size() > 9) throw findim::ParseError("too many decimals: " + text);
    long long scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    r.num = std::stoll(text.substr(0, dot)) * scale + std::stoll(frac);
    r.den = scale;
  } else {
    r.num = std::stoll(text);
    r.den = 1;
  }
  if (r.den <= 0) throw findim::ParseError("bad rational: " + text);
  return r;
}

json dimension_json(const DimensionResult& r,
                    const std::vector<std::string>& names,
                    const std::string& method) {
  json j;
  j["kind"] = findim::to_string(r.kind);
  if (r.value) j["value"] = round_sig(*r.value);
  if (method == "clique-cover" && r.kind == DimKind::Finite)
    j["symbolic"] = "ln(" + std::to_string(*r.covering_count) + ")/ln(" +
                    std::to_string(static_cast<long long>(
                        std::llround(r.profile->big_delta))) +
                    ")";
  j["method"] = method;
  if (r.profile) {
    j["delta"] = round_sig(r.profile->delta);
    j["nabla"] = round_sig(r.profile->nabla);
    j["diameter"] = round_sig(r.profile->big_delta);
  }
  if (r.covering_count) j["N"] = *r.covering_count;
  if (r.achieved_hs) j["h_at_value"] = round_sig(*r.achieved_hs);
  if (r.witness) j["covering"] = covering_json(*r.witness, names);
  return j;
}

int run_dim(const LoadedInput& input, const std::string& method,
            const GlobalOptions& opts) {
  std::string chosen = method;
  if (chosen == "auto")
    chosen = (input.graph && input.graph->unit_lengths()) ? "clique-cover"
                                                          : "root";
  if (chosen == "clique-cover" && (!input.graph || !input.graph->unit_lengths()))
    throw findim::NonUnitLengths("dim --method clique-cover");

  if (chosen == "clique-cover") {
    DimensionResult r = findim::dim_f_graph(*input.graph, opts.clique_params());
    emit(dimension_json(r, input.graph->vertices(), chosen), opts);
    return 0;
  }
  FiniteMetricSpace space =
      input.graph ? findim::metric_space_of(*input.graph, opts.epsilon)
                  : *input.space;
  DimensionResult r = chosen == "box"
                          ? findim::dim_fb(space, opts.cover_params())
                          : findim::dim_fh(space, opts.tol, opts.cover_params());
  emit(dimension_json(r, space.points(), chosen), opts);
  return 0;
}

int run_cover(const LoadedInput& input, double s, double eta_flag,
              const std::string& mode, const GlobalOptions& opts) {
  FiniteMetricSpace space =
      input.graph ? findim::metric_space_of(*input.graph, opts.epsilon)
                  : *input.space;
  double eta = eta_flag >= 0 ? eta_flag : findim::profile(space).nabla;
  auto solution = findim::h_s_eta(space, s, eta,
                                  mode == "greedy" ? findim::CoverMode::Greedy
                                                   : findim::CoverMode::Exact,
                                  opts.cover_params());
  json j;
  j["s"] = round_sig(s);
  j["eta"] = round_sig(eta);
  j["mode"] = mode;
  j["weight"] = round_sig(solution.weight);
  j["optimal"] = solution.optimal;
  j["covering"] = covering_json(solution.covering, space.points());
  auto diams = json::array();
  for (double d : solution.covering.part_diameters)
    diams.push_back(round_sig(d));
  j["part_diameters"] = std::move(diams);
  emit(j, opts);
  return 0;
}

int run_clique_cover(const LoadedInput& input, const GlobalOptions& opts) {
  if (!input.graph)
    throw findim::ParseError("clique-cover needs a graph input");
  auto cover = findim::clique_cover_number(*input.graph, opts.clique_params());
  json j;
  j["theta"] = cover.size();
  auto cliques = json::array();
  for (const auto& clique : cover.cliques) {
    auto one = json::array();
    for (int v : clique) one.push_back(input.graph->vertex(v));
    cliques.push_back(std::move(one));
  }
  j["cliques"] = std::move(cliques);
  emit(j, opts);
  return 0;
}

int run_props(const LoadedInput& input, const GlobalOptions& opts) {
  FiniteMetricSpace space =
      input.graph ? findim::metric_space_of(*input.graph, opts.epsilon)
                  : *input.space;
  json j;
  j["n"] = space.size();
  if (space.size() >= 2) {
    auto prof = findim::profile(space);
    j["delta"] = round_sig(prof.delta);
    j["nabla"] = round_sig(prof.nabla);
    j["diameter"] = round_sig(prof.big_delta);
    j["locally_uniform"] = findim::is_locally_uniform(space);
    j["N"] = findim::n_nabla(space, opts.cover_params());
  }
  emit(j, opts);
  return 0;
}

int run_gen(const std::string& family, int n, int p, int q, int m, int k,
            double x, const std::string& bridges, const GlobalOptions& opts) {
  findim::FamilySpec spec;
  if (family == "kn") spec.kind = findim::FamilyKind::Kn;
  else if (family == "pn") spec.kind = findim::FamilyKind::Pn;
  else if (family == "stn") spec.kind = findim::FamilyKind::STn;
  else if (family == "cn") spec.kind = findim::FamilyKind::Cn;
  else if (family == "lpq") spec.kind = findim::FamilyKind::Lpq;
  else if (family == "double-star") spec.kind = findim::FamilyKind::DoubleStar;
  else if (family == "path-plus-star")
    spec.kind = findim::FamilyKind::PathPlusStar;
  else throw findim::ParseError("unknown family: " + family);
  spec.n = n;
  spec.p = p;
  spec.q = q;
  spec.m = m;
  spec.k = k;
  spec.x = x;
  if (!bridges.empty()) {
    std::stringstream ss(bridges);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos)
        throw findim::ParseError("bridge must look like i:j, got " + item);
      spec.bridges.emplace_back(std::stoi(item.substr(0, colon)),
                                std::stoi(item.substr(colon + 1)));
    }
  }
  Graph g = findim::generate(spec);
  if (opts.output == "json")
    std::cout << findim::graph_to_json(g).dump(2) << "\n";
  else
    findim::write_graph_edgelist(std::cout, g);
  return 0;
}

int run_product(const std::string& left, const std::string& right,
                const std::string& op, bool profile_check,
                const GlobalOptions& opts) {
  auto parse = [&](const std::string& path) {
    auto text = slurp(path);
    auto kind = findim::sniff_payload(text);
    if (kind == findim::PayloadKind::GraphJson)
      return findim::graph_from_json(nlohmann::json::parse(text));
    std::istringstream ss(text);
    return findim::read_graph_edgelist(ss);
  };
  Graph g = parse(left), f = parse(right);
  const bool strong = op == "strong";
  if (profile_check) {
    auto report = findim::product_profile_check(
        g, f, strong ? findim::ProductMetric::DInf : findim::ProductMetric::D1);
    json j;
    j["product"] = op;
    j["metric"] = strong ? "d_inf" : "d_1";
    j["pass"] = report.pass;
    auto checks = json::array();
    for (const auto& c : report.checks) {
      json one;
      one["name"] = c.name;
      one["expected"] = round_sig(c.expected);
      one["actual"] = round_sig(c.actual);
      one["pass"] = c.pass;
      checks.push_back(std::move(one));
    }
    j["checks"] = std::move(checks);
    emit(j, opts);
    return report.pass ? 0 : 1;
  }
  Graph prod = strong ? findim::strong_product(g, f)
                      : findim::cartesian_product(g, f);
  if (opts.output == "json")
    std::cout << findim::graph_to_json(prod).dump(2) << "\n";
  else
    findim::write_graph_edgelist(std::cout, prod);
  return 0;
}

int run_construct(const std::string& target, std::vector<std::string> interval,
                  const GlobalOptions& opts) {
  json j;
  if (!target.empty()) {
    double t = std::stod(target);
    auto built = findim::construct_dimension_exact(t);
    auto recheck =
        findim::dim_fh(findim::metric_space_of(built.graph, opts.epsilon),
                       opts.tol, opts.cover_params());
    j["family"] = "double-star";
    j["target"] = round_sig(t);
    j["n"] = built.n;
    j["m"] = built.m;
    j["x"] = round_sig(built.x);
    j["dimension"] = recheck.value ? json(round_sig(*recheck.value)) : json();
    j["graph"] = findim::graph_to_json(built.graph);
    emit(j, opts);
    return 0;
  }
  auto lo = parse_rational(interval.at(0));
  auto hi = parse_rational(interval.at(1));
  auto built = findim::construct_dimension_in_interval(lo, hi);
  CliqueCoverParams params;
  params.cap = built.graph.size();
  auto recheck = findim::dim_f_graph(built.graph, params);
  j["family"] = "path-plus-star";
  j["lo"] = interval.at(0);
  j["hi"] = interval.at(1);
  j["m"] = built.m;
  j["k"] = built.k;
  j["dimension"] = recheck.value ? json(round_sig(*recheck.value)) : json();
  j["graph"] = findim::graph_to_json(built.graph);
  emit(j, opts);
  return 0;
}

int run_intrinsic_check(const LoadedInput& input, const GlobalOptions& opts) {
  FiniteMetricSpace space =
      input.graph ? findim::metric_space_of(*input.graph, opts.epsilon)
                  : *input.space;
  auto verdict = findim::is_intrinsic(space);
  json j;
  j["intrinsic"] = verdict.intrinsic;
  if (verdict.segment_graph)
    j["segment_graph"] = findim::graph_to_json(*verdict.segment_graph);
  auto family = json::array();
  for (const auto& [pair, arc] : verdict.family.geodesics) {
    json one;
    one["pair"] =
        json::array({space.point(pair.first), space.point(pair.second)});
    auto pts = json::array();
    for (int v : arc.points) pts.push_back(space.point(v));
    one["points"] = std::move(pts);
    one["count"] = arc.count();
    one["length"] = round_sig(arc.length);
    family.push_back(std::move(one));
  }
  j["family"] = std::move(family);
  emit(j, opts);
  return 0;
}

int run_sweep(const std::string& theorem, int n, const GlobalOptions& opts) {
  json j;
  if (theorem == "oracles") {
    // Seeded random-metric agreement between the exact solver and brute
    // force; --seed controls the instance stream.
    std::mt19937_64 gen(opts.seed);
    long count = 0;
    std::vector<std::string> violations;
    for (int rep = 0; rep < n; ++rep) {
      int pts = 4 + static_cast<int>(gen() % 3);  // 4..6 points
      std::vector<std::vector<double>> m(pts, std::vector<double>(pts, 0.0));
      for (int a = 0; a < pts; ++a)
        for (int b = a + 1; b < pts; ++b)
          m[a][b] = m[b][a] = 1.0 + double(gen() % 256) / 256.0;
      auto x = findim::validate_metric(std::move(m), opts.epsilon);
      auto prof = findim::profile(x);
      for (double s : {0.0, 0.5, 1.0, 2.0}) {
        ++count;
        auto exact = findim::h_s_eta(x, s, prof.nabla);
        auto brute = findim::brute_force_min_cover(x, s, prof.nabla);
        if (std::fabs(exact.weight - brute.weight) > 1e-9)
          violations.push_back("disagreement at rep " + std::to_string(rep) +
                               ", s = " + std::to_string(s));
      }
    }
    j["theorem"] = theorem;
    j["seed"] = opts.seed;
    j["count"] = count;
    j["pass"] = violations.empty();
    j["violations"] = violations;
    emit(j, opts);
    return violations.empty() ? 0 : 1;
  }

  findim::SweepReport report;
  if (theorem == "extremal")
    report = findim::sweep_extremal(n, opts.clique_params());
  else if (theorem == "trees")
    report = findim::sweep_trees(n, opts.clique_params());
  else if (theorem == "product")
    report = findim::sweep_strong_products(n, opts.clique_params());
  else
    throw findim::ParseError("unknown theorem: " + theorem);
  j["theorem"] = report.theorem;
  j["n"] = report.n;
  j["count"] = report.count;
  j["pass"] = report.pass();
  j["min_dimension"] = round_sig(report.min_dim);
  j["max_dimension"] = round_sig(report.max_dim);
  j["violations"] = report.violations;
  emit(j, opts);
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Hausdorff and box-counting dimensions of finite "
               "metric spaces and metric graphs"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--epsilon", opts.epsilon,
                 "comparison tolerance for metric checks")
      ->capture_default_str();
  app.add_option("--tol", opts.tol, "root-finder tolerance")
      ->capture_default_str();
  app.add_option("--exact-cap", opts.exact_cap,
                 "size cap for the exact solvers (0: per-module defaults)");
  app.add_option("--output", opts.output, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for randomized sweeps")
      ->capture_default_str();

  std::string graph_path, matrix_path, method = "auto";
  auto* dim = app.add_subcommand("dim", "compute the dimension of a space");
  dim->fallthrough();
  dim->add_option("--graph", graph_path, "graph file (edge list or JSON)");
  dim->add_option("--matrix", matrix_path, "distance matrix file (CSV or JSON)");
  dim->add_option("--method", method, "auto | clique-cover | root | box")
      ->check(CLI::IsMember({"auto", "clique-cover", "root", "box"}));

  double cover_s = 0.0, cover_eta = -1.0;
  std::string cover_mode = "exact";
  auto* cover = app.add_subcommand("cover", "minimum weighted 2-cover");
  cover->fallthrough();
  cover->add_option("--graph", graph_path, "graph file");
  cover->add_option("--matrix", matrix_path, "distance matrix file");
  cover->add_option("--s", cover_s, "exponent s >= 0")->capture_default_str();
  cover->add_option("--eta", cover_eta, "diameter bound (default: nabla)");
  cover->add_option("--mode", cover_mode, "exact | greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));

  auto* clique = app.add_subcommand("clique-cover", "minimum clique cover");
  clique->fallthrough();
  clique->add_option("--graph", graph_path, "graph file");

  auto* props = app.add_subcommand("props", "scale invariants of a space");
  props->fallthrough();
  props->add_option("--graph", graph_path, "graph file");
  props->add_option("--matrix", matrix_path, "distance matrix file");

  std::string family, bridges;
  int gen_n = 0, gen_p = 0, gen_q = 0, gen_m = 0, gen_k = 0;
  double gen_x = 0.0;
  auto* gen = app.add_subcommand("gen", "generate a named family member");
  gen->fallthrough();
  gen->add_option("--family", family,
                  "kn | pn | stn | cn | lpq | double-star | path-plus-star")
      ->required();
  gen->add_option("--n", gen_n, "vertex count (kn/pn/stn/cn, double-star n)");
  gen->add_option("--p", gen_p, "lpq: size of the first clique");
  gen->add_option("--q", gen_q, "lpq: size of the second clique");
  gen->add_option("--m", gen_m, "double-star m / path-plus-star m");
  gen->add_option("--k", gen_k, "path-plus-star k");
  gen->add_option("--x", gen_x, "double-star bridge length");
  gen->add_option("--bridges", bridges, "lpq bridges, e.g. 0:0,1:2");

  std::string prod_left, prod_right, prod_op = "strong";
  bool prod_check = false;
  auto* product = app.add_subcommand("product", "strong or Cartesian product");
  product->fallthrough();
  product->add_option("--left", prod_left, "left factor graph file")->required();
  product->add_option("--right", prod_right, "right factor graph file")
      ->required();
  product->add_option("--op", prod_op, "strong | cartesian")
      ->check(CLI::IsMember({"strong", "cartesian"}));
  product->add_flag("--profile-check", prod_check,
                    "report the product metric identities instead");

  std::string target;
  std::vector<std::string> interval;
  auto* construct =
      app.add_subcommand("construct-dim", "build a graph of prescribed dimension");
  construct->fallthrough();
  auto* target_opt =
      construct->add_option("--target", target, "exact dimension t > 0");
  construct->add_option("--interval", interval,
                        "rational interval lo hi (e.g. 3/2 5/2)")
      ->expected(2)
      ->excludes(target_opt);

  auto* intrinsic =
      app.add_subcommand("intrinsic-check", "test whether a space is intrinsic");
  intrinsic->fallthrough();
  intrinsic->add_option("--graph", graph_path, "graph file");
  intrinsic->add_option("--matrix", matrix_path, "distance matrix file");

  std::string theorem;
  int sweep_n = 5;
  auto* sweep = app.add_subcommand("sweep", "exhaustive theorem verification");
  sweep->fallthrough();
  sweep->add_option("--theorem", theorem,
                    "extremal | trees | product | oracles")
      ->required()
      ->check(CLI::IsMember({"extremal", "trees", "product", "oracles"}));
  sweep->add_option("--n", sweep_n,
                    "vertex count (extremal/trees), max factor size (product), "
                    "repetitions (oracles)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // FINDIM_EXACT_CAP overrides the cap from the environment.
  if (const char* env = std::getenv("FINDIM_EXACT_CAP"))
    opts.exact_cap = std::atoi(env);

  try {
    if (dim->parsed())
      return run_dim(load_input(graph_path, matrix_path, opts), method, opts);
    if (cover->parsed())
      return run_cover(load_input(graph_path, matrix_path, opts), cover_s,
                       cover_eta, cover_mode, opts);
    if (clique->parsed()) {
      if (graph_path.empty()) graph_path = "-";
      return run_clique_cover(load_input(graph_path, "", opts), opts);
    }
    if (props->parsed())
      return run_props(load_input(graph_path, matrix_path, opts), opts);
    if (gen->parsed())
      return run_gen(family, gen_n, gen_p, gen_q, gen_m, gen_k, gen_x, bridges,
                     opts);
    if (product->parsed())
      return run_product(prod_left, prod_right, prod_op, prod_check, opts);
    if (construct->parsed()) {
      if (target.empty() && interval.size() != 2)
        throw findim::ParseError(
            "construct-dim needs --target or --interval lo hi");
      return run_construct(target, interval, opts);
    }
    if (intrinsic->parsed())
      return run_intrinsic_check(load_input(graph_path, matrix_path, opts),
                                 opts);
    if (sweep->parsed()) return run_sweep(theorem, sweep_n, opts);
  } catch (const findim::Error& e) {
    json err;
    err["error"]["code"] = e.code();
    err["error"]["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
