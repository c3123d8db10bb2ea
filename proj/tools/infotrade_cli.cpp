// Command line front end: evaluate, sweep, fit, fuzz, and build protocols.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "infotrade/constructions.hpp"
#include "infotrade/errors.hpp"
#include "infotrade/harness.hpp"
#include "infotrade/infocost.hpp"
#include "infotrade/json_io.hpp"
#include "infotrade/triviality.hpp"

using namespace infotrade;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  std::string out;
  std::string format = "json";
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(g.out, text.back() == '\n' ? text : text + '\n');
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json pair_json(InputPair p) { return json::array({p.x, p.y}); }

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::istringstream in(s);
  std::string cell;
  while (std::getline(in, cell, ',')) v.push_back(std::stod(cell));
  return v;
}

int cmd_eval(const Globals& g, const std::string& protocol, const std::string& measure, const std::string& function) {
  const auto pi = protocol_from_json(read_json_file(protocol));
  const auto mu = measure_from_json(read_json_file(measure));
  const auto td = transcript_distribution(pi, mu.rows(), mu.cols());
  const auto ic = internal_cost(td, mu);
  json j{{"internal_bits", ic.total()},
         {"alice_reveals", ic.alice_reveals},
         {"bob_reveals", ic.bob_reveals},
         {"external_bits", external_ic(td, mu)},
         {"leaves", td.num_leaves()},
         {"depth", pi.depth()},
         {"protocol", digest(pi)},
         {"mu", digest(mu)}};
  if (!function.empty()) {
    const auto f = function_from_json(read_json_file(function));
    require_same_space(f, mu);
    j["worst_case_error"] = worst_case_error(td, f);
    j["distributional_error"] = distributional_error(td, f, mu);
  }
  if (g.format == "csv") {
    std::ostringstream os;
    os.precision(17);
    std::string header, row;
    for (auto& [k, v] : j.items()) {
      if (!v.is_number()) continue;
      header += (header.empty() ? "" : ",") + k;
      row += (row.empty() ? "" : ",") + v.dump();
    }
    emit(g, header + "\n" + row + "\n");
  } else {
    emit(g, j.dump(2));
  }
  return 0;
}

int cmd_sweep(const Globals& g, const std::string& family, const std::string& measure, const std::string& function,
              const std::string& eps_list) {
  std::optional<FunctionTable> f;
  if (!function.empty()) f = function_from_json(read_json_file(function));
  const auto fam = family_by_name(family, f);
  const auto mu = measure_from_json(read_json_file(measure));
  const auto grid = parse_list(eps_list);
  const auto table = sweep(fam, mu, grid);
  if (g.format == "json") {
    json rows = json::array();
    for (const auto& r : table.rows)
      rows.push_back({{"epsilon", r.epsilon},
                      {"internal_bits", r.internal_bits},
                      {"external_bits", r.external_bits},
                      {"worst_case_error", r.worst_case_error},
                      {"distributional_error", r.distributional_error}});
    emit(g, json{{"family", family}, {"mu", digest(mu)}, {"rows", rows}}.dump(2));
  } else {
    emit(g, to_csv(table));
  }
  return 0;
}

int cmd_fit(const Globals& g, const std::string& input, const std::vector<std::string>& columns) {
  const auto table = sweep_from_csv(slurp(input));
  json j = json::object();
  for (const auto& name : columns) {
    const auto col = parse_column(name);
    const auto fit = fit_quadratic(table, col);
    j[to_string(col)] = {{"c2", fit.c2}, {"c4", fit.c4}, {"residual", fit.residual}};
  }
  emit(g, j.dump(2));
  return 0;
}

int cmd_fuzz(const Globals& g, const std::string& config_path, std::optional<std::size_t> instances, bool seed_given,
             bool tol_given) {
  FuzzConfig cfg = config_path.empty() ? FuzzConfig{} : FuzzConfig::from_json(read_json_file(config_path));
  if (seed_given) cfg.seed = g.seed;
  if (tol_given) cfg.tolerance = g.tolerance;
  if (instances) cfg.instances = *instances;
  cfg.check();
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = fuzz_bounds(cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::string text;
  for (const auto& r : result.reports) text += r.to_json().dump() + '\n';
  json summary = result.summary.to_json();
  summary["config"] = cfg.to_json();
  text += json{{"summary", summary}}.dump() + '\n';
  emit(g, text);
  std::fprintf(stderr, "fuzz: %zu instances, %zu reports, %zu violations (%.2fs)\n", result.summary.instances,
               result.summary.reports, result.summary.violations, secs);
  return result.summary.violations == 0 ? 0 : 1;
}

int cmd_trivial(const Globals& g, const std::string& function, const std::string& measure) {
  const auto f = function_from_json(read_json_file(function));
  const auto mu = measure_from_json(read_json_file(measure));
  require_same_space(f, mu);
  const auto graph = support_graph(mu);
  json comps = json::array();
  for (std::size_t c = 0; c < graph.components.size(); ++c) {
    const auto& comp = graph.components[c];
    json members = json::array();
    for (auto p : comp.members) members.push_back(pair_json(p));
    json entry{{"members", members}, {"rows", comp.rows}, {"cols", comp.cols}};
    if (const auto block = find_and_block(f, mu, graph, c))
      entry["and_block"] = {{"rows", {block->x, block->x2}}, {"cols", {block->y, block->y2}},
                            {"z0", block->z0}, {"z1", block->z1}};
    comps.push_back(std::move(entry));
  }
  const auto it = is_internal_trivial(f, mu);
  const auto dt = is_distributional_trivial(f, mu);
  const auto pre = half_error_precondition(f, mu);
  json internal{{"trivial", it.trivial}};
  if (it.violating_component) internal["violating_component"] = *it.violating_component;
  if (it.trivial) internal["component_labels"] = it.component_labels;
  json pre_j{{"case", to_string(pre.status)}};
  if (pre.component) pre_j["component"] = *pre.component;
  if (pre.a) pre_j["a"] = pair_json(*pre.a);
  if (pre.b) pre_j["b"] = pair_json(*pre.b);
  json j{{"components", comps},
         {"internal", internal},
         {"distributional",
          {{"trivial", dt.trivial},
           {"row_classes", dt.row_classes},
           {"col_classes", dt.col_classes},
           {"row_overlap", dt.row_overlap},
           {"col_overlap", dt.col_overlap}}},
         {"half_error_case", pre_j}};
  if (dt.trivial) j["zero_ic_protocol"] = to_json(zero_ic_protocol(f, mu));
  emit(g, j.dump(2));
  return 0;
}

struct BuildArgs {
  std::string name, protocol, function, measure;
  double eps = 0.1;
  int alphabet = 2;
};

int cmd_build(const Globals& g, const BuildArgs& a) {
  auto need = [](const std::string& v, const char* what) {
    if (v.empty()) throw Error(std::string("build needs --") + what);
    return v;
  };
  ProtocolTree pi;
  if (a.name == "half-guess") {
    pi = half_guess_protocol(function_from_json(read_json_file(need(a.function, "function"))), a.eps);
  } else if (a.name == "and-figure1") {
    pi = and_half_error_protocol(a.eps);
  } else if (a.name == "mix") {
    pi = mix_with_random_guess(protocol_from_json(read_json_file(need(a.protocol, "protocol"))), a.eps, a.alphabet);
  } else if (a.name == "complete") {
    pi = zero_error_completion(protocol_from_json(read_json_file(need(a.protocol, "protocol"))),
                               function_from_json(read_json_file(need(a.function, "function"))),
                               measure_from_json(read_json_file(need(a.measure, "measure"))));
  } else if (a.name == "noise-inject") {
    pi = noise_injection(protocol_from_json(read_json_file(need(a.protocol, "protocol"))),
                         function_from_json(read_json_file(need(a.function, "function"))),
                         measure_from_json(read_json_file(need(a.measure, "measure"))), a.eps);
  } else {
    throw Error("unknown construction '" + a.name + "'");
  }
  emit(g, canonical_text(pi));
  return 0;
}

int cmd_closed_form(const Globals& g, const std::string& measure, double eps) {
  const auto mu = measure.empty() ? Measure::uniform(2, 2) : measure_from_json(read_json_file(measure));
  const auto cf = and_closed_forms(mu, eps);
  json j{{"coefficient_ext", cf.ext_coefficient},
         {"coefficient_int", cf.int_coefficient ? json(*cf.int_coefficient) : json(nullptr)},
         {"epsilon", eps},
         {"mu", to_json(mu)["mass"]},
         {"p_plus", cf.p_plus},
         {"p_minus", cf.p_minus},
         {"q", cf.q},
         {"error_matrix", cf.error_matrix},
         {"noisy_copy_distribution", cf.noisy_copy_distribution}};
  emit(g, j.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information cost of two-party protocols near error 1/2 and 0"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  auto* seed_opt = app.add_option("--seed", g.seed, "RNG seed for fuzzing");
  auto* tol_opt = app.add_option("--tolerance", g.tolerance, "slack tolerance for inequality checks");
  app.add_option("--out", g.out, "write output here instead of stdout");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));

  std::string protocol, measure, function, family, eps_list, input, config, what;
  std::vector<std::string> columns{"internal_bits", "external_bits"};
  std::optional<std::size_t> instances;
  BuildArgs build;
  double eps = 0.1;

  auto* eval = app.add_subcommand("eval", "transcript costs of a protocol under a prior");
  eval->add_option("--protocol,-p", protocol)->required();
  eval->add_option("--measure,-m", measure)->required();
  eval->add_option("--function,-f", function, "also report errors for f");

  auto* sw = app.add_subcommand("sweep", "evaluate a protocol family over an eps grid (CSV)");
  sw->add_option("--family", family, "and-figure1 | half-guess")->required();
  sw->add_option("--measure,-m", measure)->required();
  sw->add_option("--function,-f", function);
  sw->add_option("--eps", eps_list, "comma separated grid")->required();

  auto* fit = app.add_subcommand("fit", "fit c2 eps^2 + c4 eps^4 to sweep columns");
  fit->add_option("--input,-i", input, "sweep CSV")->required();
  fit->add_option("--column", columns, "columns to fit");

  auto* fz = app.add_subcommand("fuzz", "randomized bound checks; JSON lines plus a summary line");
  fz->add_option("--config,-c", config, "FuzzConfig JSON");
  fz->add_option("--instances,-n", instances);

  auto* tr = app.add_subcommand("trivial", "support graph and triviality witnesses");
  tr->add_option("--function,-f", function)->required();
  tr->add_option("--measure,-m", measure)->required();

  auto* bd = app.add_subcommand("build", "emit a constructed protocol as JSON");
  bd->add_option("name", build.name, "half-guess | and-figure1 | mix | complete | noise-inject")->required();
  bd->add_option("--protocol,-p", build.protocol);
  bd->add_option("--function,-f", build.function);
  bd->add_option("--measure,-m", build.measure);
  bd->add_option("--eps", build.eps);
  bd->add_option("--alphabet", build.alphabet);

  auto* cf = app.add_subcommand("closed-form", "closed-form AND coefficients for a 2x2 prior");
  cf->add_option("--measure,-m", measure, "defaults to uniform");
  cf->add_option("--eps", eps);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*eval) return cmd_eval(g, protocol, measure, function);
    if (*sw) return cmd_sweep(g, family, measure, function, eps_list);
    if (*fit) return cmd_fit(g, input, columns);
    if (*fz) return cmd_fuzz(g, config, instances, seed_opt->count() > 0, tol_opt->count() > 0);
    if (*tr) return cmd_trivial(g, function, measure);
    if (*bd) return cmd_build(g, build);
    if (*cf) return cmd_closed_form(g, measure, eps);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
