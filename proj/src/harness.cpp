#include "infotrade/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "infotrade/constructions.hpp"
#include "infotrade/errors.hpp"
#include "infotrade/infocost.hpp"
#include "infotrade/infotheory.hpp"
#include "infotrade/json_io.hpp"
#include "infotrade/triviality.hpp"

namespace infotrade {

ProtocolFamily family_by_name(const std::string& name, const std::optional<FunctionTable>& f) {
  if (name == "and-figure1") return {name, and_function(), [](double eps) { return and_half_error_protocol(eps); }};
  if (name == "half-guess") {
    if (!f) throw DomainError("family 'half-guess' needs a function table");
    const FunctionTable g = *f;
    return {name, g, [g](double eps) { return half_guess_protocol(g, eps); }};
  }
  throw DomainError("unknown protocol family '" + name + "'");
}

SweepTable sweep(const ProtocolFamily& family, const Measure& mu, std::span<const double> grid) {
  if (grid.empty()) throw DomainError("sweep needs a nonempty grid");
  if (family.target) require_same_space(*family.target, mu);
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  SweepTable table;
  table.rows.resize(grid.size());
  std::vector<std::exception_ptr> failures(grid.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double eps = grid[static_cast<std::size_t>(i)];
    try {
      ProtocolTree pi;
      try {
        pi = family.build(eps);
      } catch (const std::exception& e) {
        throw Error(family.name + " at eps = " + std::to_string(eps) + ": " + e.what());
      }
      const auto td = transcript_distribution(pi, mu.rows(), mu.cols());
      SweepRow& row = table.rows[static_cast<std::size_t>(i)];
      row.epsilon = eps;
      row.internal_bits = internal_ic(td, mu);
      row.external_bits = external_ic(td, mu);
      row.worst_case_error = family.target ? worst_case_error(td, *family.target) : nan;
      row.distributional_error = family.target ? distributional_error(td, *family.target, mu) : nan;
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  return table;
}

namespace {
constexpr const char* kCsvHeader = "epsilon,internal_bits,external_bits,worst_case_error,distributional_error";
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream os;
  os.precision(std::numeric_limits<double>::max_digits10);
  os << kCsvHeader << '\n';
  for (const auto& r : table.rows)
    os << r.epsilon << ',' << r.internal_bits << ',' << r.external_bits << ',' << r.worst_case_error << ','
       << r.distributional_error << '\n';
  return os.str();
}

SweepTable sweep_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw Error("sweep CSV must start with the header: " + std::string(kCsvHeader));
  SweepTable table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> v;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) v.push_back(std::stod(cell));  // stod accepts "nan"
    if (v.size() != 5) throw Error("sweep CSV row has " + std::to_string(v.size()) + " fields: " + line);
    table.rows.push_back({v[0], v[1], v[2], v[3], v[4]});
  }
  return table;
}

SweepColumn parse_column(const std::string& name) {
  if (name == "internal_bits" || name == "internal") return SweepColumn::Internal;
  if (name == "external_bits" || name == "external") return SweepColumn::External;
  if (name == "worst_case_error") return SweepColumn::WorstCaseError;
  if (name == "distributional_error") return SweepColumn::DistributionalError;
  throw DomainError("unknown sweep column '" + name + "'");
}

const char* to_string(SweepColumn c) {
  switch (c) {
    case SweepColumn::Internal: return "internal_bits";
    case SweepColumn::External: return "external_bits";
    case SweepColumn::WorstCaseError: return "worst_case_error";
    case SweepColumn::DistributionalError: return "distributional_error";
  }
  return "?";
}

QuadraticFit fit_quadratic(std::span<const double> eps, std::span<const double> values) {
  if (eps.size() != values.size()) throw DimensionError("fit needs one value per eps");
  if (eps.size() < 3) throw DomainError("fit needs at least three grid points");
  std::vector<double> sorted(eps.begin(), eps.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DomainError("fit grid has duplicate eps");

  const auto n = static_cast<Eigen::Index>(eps.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double e2 = eps[static_cast<std::size_t>(i)] * eps[static_cast<std::size_t>(i)];
    design(i, 0) = e2;
    design(i, 1) = e2 * e2;
    rhs(i) = values[static_cast<std::size_t>(i)];
  }
  // eps^4 columns are tiny next to eps^2; scale columns before solving.
  const Eigen::Vector2d scale = design.colwise().lpNorm<Eigen::Infinity>().cwiseMax(1e-300).transpose();
  const Eigen::MatrixXd scaled = design * scale.cwiseInverse().asDiagonal();
  const Eigen::Vector2d coef = scaled.colPivHouseholderQr().solve(rhs).cwiseQuotient(scale);

  QuadraticFit fit{coef(0), coef(1), 0.0};
  const Eigen::VectorXd resid = design * coef - rhs;
  fit.residual = resid.lpNorm<Eigen::Infinity>();
  return fit;
}

QuadraticFit fit_quadratic(const SweepTable& table, SweepColumn column) {
  std::vector<double> eps, v;
  for (const auto& r : table.rows) {
    eps.push_back(r.epsilon);
    switch (column) {
      case SweepColumn::Internal: v.push_back(r.internal_bits); break;
      case SweepColumn::External: v.push_back(r.external_bits); break;
      case SweepColumn::WorstCaseError: v.push_back(r.worst_case_error); break;
      case SweepColumn::DistributionalError: v.push_back(r.distributional_error); break;
    }
  }
  return fit_quadratic(eps, v);
}

// ---- fuzz configuration ----

FuzzConfig FuzzConfig::from_json(const nlohmann::json& j) {
  FuzzConfig c;
  c.seed = j.value("seed", c.seed);
  c.instances = j.value("instances", c.instances);
  c.min_rows = j.value("min_rows", c.min_rows);
  c.max_rows = j.value("max_rows", c.max_rows);
  c.min_cols = j.value("min_cols", c.min_cols);
  c.max_cols = j.value("max_cols", c.max_cols);
  c.max_alphabet = j.value("max_alphabet", c.max_alphabet);
  c.max_depth = j.value("max_depth", c.max_depth);
  c.tolerance = j.value("tolerance", c.tolerance);
  c.exact_tolerance = j.value("exact_tolerance", c.exact_tolerance);
  if (j.contains("tolerances")) c.overrides = j.at("tolerances").get<std::map<std::string, double>>();
  if (j.contains("checks")) c.only = j.at("checks").get<std::vector<std::string>>();
  c.check();
  return c;
}

nlohmann::json FuzzConfig::to_json() const {
  return {{"seed", seed},         {"instances", instances},   {"min_rows", min_rows},
          {"max_rows", max_rows}, {"min_cols", min_cols},     {"max_cols", max_cols},
          {"max_alphabet", max_alphabet}, {"max_depth", max_depth}, {"tolerance", tolerance},
          {"exact_tolerance", exact_tolerance}, {"tolerances", overrides}, {"checks", only}};
}

void FuzzConfig::check() const {
  if (instances < 1) throw DomainError("fuzz needs at least one instance");
  if (instances > kMaxFuzzInstances) throw ResourceError("instance count above guard");
  if (min_rows < 1 || min_rows > max_rows || min_cols < 1 || min_cols > max_cols)
    throw DomainError("fuzz size ranges must satisfy 1 <= min <= max");
  if (max_rows > kMaxFuzzSide || max_cols > kMaxFuzzSide) throw ResourceError("fuzz side length above guard");
  if (max_depth > kMaxFuzzDepth) throw ResourceError("fuzz tree depth above guard");
  if (max_alphabet < 2 || max_alphabet > 8) throw DomainError("max_alphabet must be in [2, 8]");
  if (!(tolerance >= 0.0) || !(exact_tolerance >= 0.0)) throw DomainError("tolerances must be nonnegative");
  for (const auto& [name, tol] : overrides)
    if (!(tol >= 0.0)) throw DomainError("tolerance override for " + name + " is negative");
  for (const auto& name : only) (void)fuzz_check(name);
}

double FuzzConfig::tolerance_for(const std::string& name, double fallback) const {
  const auto it = overrides.find(name);
  return it == overrides.end() ? fallback : it->second;
}

// ---- checks ----

namespace {

void tag(BoundReport& r, const Measure& mu) { r.context["mu"] = digest(mu); }
void tag(BoundReport& r, const Measure& mu, const ProtocolTree& pi) {
  tag(r, mu);
  r.context["protocol"] = digest(pi);
}

// Equality a == b recorded as |a - b| <= 0.
BoundReport equality(const std::string& name, double a, double b, double tol, nlohmann::json ctx = nlohmann::json::object()) {
  ctx["value"] = a;
  ctx["expected"] = b;
  return BoundReport::at_most(name, std::abs(a - b), 0.0, tol, std::move(ctx));
}

double open_eps(Rng& rng, double hi) { return hi * (1.0 - uniform_real(rng, 0.0, 1.0)); }  // (0, hi]

std::size_t rows_of(Rng& rng, const FuzzConfig& c, std::size_t cap = kMaxFuzzSide) {
  return uniform_size(rng, std::min(c.min_rows, cap), std::min(c.max_rows, cap));
}
std::size_t cols_of(Rng& rng, const FuzzConfig& c, std::size_t cap = kMaxFuzzSide) {
  return uniform_size(rng, std::min(c.min_cols, cap), std::min(c.max_cols, cap));
}
int alphabet_of(Rng& rng, const FuzzConfig& c) {
  return static_cast<int>(uniform_size(rng, 2, static_cast<std::size_t>(c.max_alphabet)));
}

std::vector<BoundReport> check_analytic(Rng& rng, const FuzzConfig& c) {
  std::vector<BoundReport> out;
  const std::size_t n = uniform_size(rng, 2, 6);
  auto mu = random_distribution(rng, n);
  auto nu = random_distribution(rng, n);
  out.push_back(pinsker_check(mu, nu, c.tolerance_for("pinsker", c.tolerance)));

  const double x1 = uniform_real(rng, 0.0, 1.0), x2 = uniform_real(rng, 0.0, 1.0);
  out.push_back(clamped_subadditivity_check(x1, x2, c.tolerance_for("hc_subadditive", c.tolerance)));
  out.push_back(clamped_majorant_check(uniform_real(rng, 0.0, 1.0), c.tolerance_for("hc_majorant", c.tolerance)));

  const double m = uniform_real(rng, 0.0, 2.0), r = uniform_real(rng, 0.0, 2.0), s = uniform_real(rng, 0.0, 2.0);
  const double nn = m > 0.0 ? r * s / m : 0.0;
  if (m > 0.0) out.push_back(elementary_inequality_check(m, nn, r, s, c.tolerance_for("elementary", c.tolerance)));

  // Corrupted divergence: mu supported inside supp nu, sometimes strictly.
  std::vector<double> w(mu.probs().begin(), mu.probs().end());
  const std::size_t drop = uniform_size(rng, 0, n - 1);
  if (uniform_real(rng, 0.0, 1.0) < 0.5) w[drop] = 0.0;
  const auto mu_sub = Distribution::normalized(std::move(w));
  const double eps = uniform_real(rng, 0.0, 1.0);
  out.push_back(corrupted_divergence_bound_check(mu_sub, nu, eps, c.tolerance_for("corrupted_divergence", c.tolerance)));
  return out;
}

std::vector<BoundReport> check_lower_bound(Rng& rng, const FuzzConfig& c) {
  const std::size_t n = rows_of(rng, c), m = cols_of(rng, c);
  const auto mu = random_measure(rng, n, m, 0.3);
  const auto pi = random_protocol(rng, n, m, alphabet_of(rng, c), c.max_depth);
  const auto supp = mu.support();
  const InputPair a = supp[uniform_size(rng, 0, supp.size() - 1)];
  const auto graph = support_graph(mu);
  const auto& members = graph.components[static_cast<std::size_t>(graph.component(a))].members;
  const InputPair b = members[uniform_size(rng, 0, members.size() - 1)];

  const auto td = transcript_distribution(pi, n, m);
  std::vector<BoundReport> out;
  out.push_back(general_lower_bound(td, mu, a, b, c.tolerance_for("general_lower_bound", c.tolerance)));
  out.push_back(BoundReport::at_most("internal_le_external", internal_ic(td, mu), external_ic(td, mu),
                                     c.tolerance_for("internal_le_external", c.tolerance)));
  for (auto& r : out) tag(r, mu, pi);
  return out;
}

std::vector<BoundReport> check_half_guess(Rng& rng, const FuzzConfig& c) {
  const std::size_t n = rows_of(rng, c), m = cols_of(rng, c);
  const auto f = random_function(rng, n, m, 2);
  const auto mu = random_measure(rng, n, m, 0.2);
  const double eps = open_eps(rng, 0.5);
  const auto pi = half_guess_protocol(f, eps);
  const auto td = transcript_distribution(pi, n, m);
  const double ext = external_ic(td, mu);
  const double cells = static_cast<double>(n * m);
  const auto uniform = Measure::uniform(n, m);

  std::vector<BoundReport> out;
  out.push_back(BoundReport::at_most("half_guess_error", worst_case_error(td, f), 0.5 - eps,
                                     c.tolerance_for("half_guess_error", c.exact_tolerance), {{"eps", eps}}));
  out.push_back(BoundReport::at_most("half_guess_external", ext, 2.0 * eps * std::log2(cells),
                                     c.tolerance_for("half_guess_external", c.tolerance), {{"eps", eps}}));
  out.push_back(equality("half_guess_uniform_equality", external_ic(td, uniform), 2.0 * eps * entropy(uniform.mass()),
                         c.tolerance_for("half_guess_uniform_equality", c.exact_tolerance), {{"eps", eps}}));
  for (auto& r : out) tag(r, mu, pi);
  return out;
}

std::vector<BoundReport> check_half_error_lower(Rng& rng, const FuzzConfig& c) {
  const std::size_t n = rows_of(rng, c), m = cols_of(rng, c);
  const auto mu = Measure::uniform(n, m);
  const auto f = random_function(rng, n, m, 2);
  const auto pre = half_error_precondition(f, mu);
  if (pre.status != HalfErrorCase::NonConstantOnComponent) return {};
  const double eps = open_eps(rng, 0.5);
  const auto pi = random_half_error_protocol(rng, f, eps, c.max_depth);
  const double ic = internal_ic(pi, mu);
  const double side = static_cast<double>(n + m);
  const double delta = support_delta(mu);
  const double bound = delta * eps * eps / (side * 2.0 * std::numbers::ln2);
  const double explicit_constant = eps * eps / (2.0 * std::numbers::ln2 * side * static_cast<double>(n * m) *
                                                static_cast<double>(std::max(n, m)));
  const nlohmann::json ctx{{"eps", eps}, {"delta", delta}, {"error", worst_case_error(pi, f)}};
  std::vector<BoundReport> out;
  out.push_back(BoundReport::at_most("half_error_internal", bound, ic, c.tolerance_for("half_error_internal", c.tolerance), ctx));
  out.push_back(BoundReport::at_most("uniform_explicit_constant", explicit_constant, ic,
                                     c.tolerance_for("uniform_explicit_constant", c.tolerance), ctx));
  for (auto& r : out) tag(r, mu, pi);
  return out;
}

std::vector<BoundReport> check_mixing(Rng& rng, const FuzzConfig& c) {
  const std::size_t n = rows_of(rng, c), m = cols_of(rng, c);
  const int k = alphabet_of(rng, c);
  const auto mu = random_measure(rng, n, m, 0.2);
  const auto pi = random_protocol(rng, n, m, k, c.max_depth);
  const double eps = uniform_real(rng, 0.0, 1.0);
  const double base = external_ic(pi, mu);
  const double mixed = external_ic(mix_with_random_guess(pi, eps, k), mu);
  auto r = equality("mix_equality", mixed, (1.0 - eps) * base, c.tolerance_for("mix_equality", c.exact_tolerance),
                    {{"eps", eps}});
  tag(r, mu, pi);
  return {r};
}

std::vector<BoundReport> check_completion(Rng& rng, const FuzzConfig& c) {
  // The verification chain grows with |X||Y|; keep the completed tree under the depth guard.
  const std::size_t n = rows_of(rng, c, 4), m = cols_of(rng, c, 4);
  const int k = alphabet_of(rng, c);
  const auto f = random_function(rng, n, m, k);
  const auto mu = random_measure(rng, n, m, 0.0);
  std::optional<ProtocolTree> pi;
  if (uniform_real(rng, 0.0, 1.0) < 0.5) {
    for (int attempt = 0; attempt < 8 && !pi; ++attempt) {
      auto cand = random_protocol(rng, n, m, k, std::min<std::size_t>(c.max_depth, 6));
      if (worst_case_error(cand, f) <= 0.25) pi = std::move(cand);
    }
  }
  if (!pi) {
    // error of the mixture is eps (1 - 1/k) <= 0.25
    const double eps = uniform_real(rng, 0.0, 0.25 / (1.0 - 1.0 / k));
    pi = mix_with_random_guess(random_zero_error_protocol(rng, f), eps, k);
  }
  std::vector<BoundReport> out;
  const auto done = zero_error_completion(*pi, f, mu);
  out.push_back(BoundReport::at_most("completion_zero_error", worst_case_error(done, f), 0.0,
                                     c.tolerance_for("completion_zero_error", c.exact_tolerance)));
  out.push_back(completion_gap_bound(*pi, f, mu, c.tolerance_for("completion_gap", c.tolerance)));
  for (auto& r : out) tag(r, mu, *pi);
  return out;
}

std::vector<BoundReport> check_noise_injection(Rng& rng, const FuzzConfig& c) {
  const std::size_t n = rows_of(rng, c), m = cols_of(rng, c);
  const auto f = random_function(rng, n, m, 2);
  const auto mu1 = random_distribution(rng, n), mu2 = random_distribution(rng, m);
  const auto pi = random_zero_error_protocol(rng, f);
  const double eps = open_eps(rng, 0.5);
  const auto noisy = noise_injection(pi, f, mu1, mu2, eps);
  std::vector<BoundReport> out;
  out.push_back(BoundReport::at_most("noise_injection_error", worst_case_error(noisy, f), eps,
                                     c.tolerance_for("noise_injection_error", c.exact_tolerance), {{"eps", eps}}));
  out.push_back(noise_injection_bound(pi, f, mu1, mu2, eps, c.tolerance_for("noise_injection", c.tolerance)));
  const auto mu = product(mu1.probs(), mu2.probs());
  for (auto& r : out) tag(r, mu, pi);
  return out;
}

std::vector<BoundReport> check_figure1(Rng& rng, const FuzzConfig& c) {
  const double eps = open_eps(rng, 0.125);
  const auto td = transcript_distribution(and_half_error_protocol(eps), 2, 2);
  const auto zero = output_probability(td, 0);
  const auto expected = and_closed_form::error_matrix(eps);
  double dev = 0.0;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) dev = std::max(dev, std::abs(zero[x * 2 + y] - expected[x][y]));
  const double tol = c.tolerance_for("figure1_error_matrix", c.exact_tolerance);
  return {BoundReport::at_most("figure1_error_matrix", dev, 0.0, tol, {{"eps", eps}}),
          equality("figure1_worst_error", worst_case_error(td, and_function()), 0.5 - eps,
                   c.tolerance_for("figure1_worst_error", c.exact_tolerance), {{"eps", eps}})};
}

std::vector<BoundReport> check_planted(Rng& rng, const FuzzConfig& c) {
  const std::size_t n = rows_of(rng, c), m = cols_of(rng, c);
  const auto k = static_cast<int>(uniform_size(rng, 1, std::min({n, m, static_cast<std::size_t>(c.max_alphabet)})));
  const auto inst = random_planted_partition(rng, n, m, k);
  const auto pi = zero_ic_protocol(inst.f, inst.mu);
  const auto td = transcript_distribution(pi, n, m);
  std::vector<BoundReport> out;
  out.push_back(BoundReport::at_most("zero_ic_internal", internal_ic(td, inst.mu), 0.0,
                                     c.tolerance_for("zero_ic_internal", c.exact_tolerance), {{"classes", k}}));
  out.push_back(BoundReport::at_most("zero_ic_error", distributional_error(td, inst.f, inst.mu), 0.0,
                                     c.tolerance_for("zero_ic_error", c.exact_tolerance), {{"classes", k}}));
  for (auto& r : out) tag(r, inst.mu, pi);
  return out;
}

std::vector<BoundReport> check_and_silent(Rng& rng, const FuzzConfig& c) {
  // Always outputting 0 already solves the distributional AND task at error 1/4.
  const double eps = open_eps(rng, 0.25);
  const auto mu = Measure::uniform(2, 2);
  const auto pi = ProtocolTree::leaf(0);
  const auto td = transcript_distribution(pi, 2, 2);
  return {BoundReport::at_most("silent_and_internal", internal_ic(td, mu), 0.0,
                               c.tolerance_for("silent_and_internal", c.exact_tolerance)),
          BoundReport::at_most("silent_and_error", distributional_error(td, and_function(), mu), 0.5 - eps,
                               c.tolerance_for("silent_and_error", c.exact_tolerance), {{"eps", eps}})};
}

}  // namespace

const std::vector<FuzzCheck>& fuzz_checks() {
  static const std::vector<FuzzCheck> checks{
      {"analytic", check_analytic},
      {"lower_bound", check_lower_bound},
      {"half_guess", check_half_guess},
      {"half_error_lower", check_half_error_lower},
      {"mixing", check_mixing},
      {"completion", check_completion},
      {"noise_injection", check_noise_injection},
      {"figure1", check_figure1},
      {"planted", check_planted},
      {"and_silent", check_and_silent},
  };
  return checks;
}

const FuzzCheck& fuzz_check(const std::string& name) {
  for (const auto& c : fuzz_checks())
    if (c.name == name) return c;
  throw DomainError("unknown fuzz check '" + name + "'");
}

std::vector<BoundReport> run_check(const FuzzCheck& c, std::uint64_t seed, std::uint64_t index, const FuzzConfig& cfg) {
  Rng rng = instance_rng(seed ^ fnv1a(c.name), index);
  std::vector<BoundReport> out;
  try {
    out = c.run(rng, cfg);
  } catch (const std::exception& e) {
    // A throwing check is itself a failure worth reporting, not a crash.
    BoundReport r;
    r.name = c.name + "_exception";
    r.lhs = 1.0;
    r.rhs = 0.0;
    r.slack = -1.0;
    r.holds = false;
    r.context = {{"error", e.what()}};
    out.push_back(std::move(r));
  }
  for (auto& r : out) {
    r.context["check"] = c.name;
    r.context["instance"] = index;
  }
  return out;
}

FuzzSummary summarize(std::span<const BoundReport> reports, std::size_t instances) {
  FuzzSummary s;
  s.instances = instances;
  s.reports = reports.size();
  for (const auto& r : reports) {
    ++s.reports_by_name[r.name];
    if (!r.holds) {
      ++s.violations;
      ++s.violations_by_name[r.name];
    }
    auto [it, fresh] = s.min_slack_by_name.try_emplace(r.name, r.slack);
    if (!fresh) it->second = std::min(it->second, r.slack);
  }
  return s;
}

nlohmann::json FuzzSummary::to_json() const {
  nlohmann::json by = nlohmann::json::object();
  for (const auto& [name, count] : reports_by_name) {
    const auto v = violations_by_name.find(name);
    by[name] = {{"reports", count},
                {"violations", v == violations_by_name.end() ? 0 : v->second},
                {"min_slack", min_slack_by_name.at(name)}};
  }
  return {{"instances", instances}, {"reports", reports}, {"violations", violations}, {"by_name", by}};
}

FuzzResult fuzz_bounds(const FuzzConfig& config) {
  config.check();
  std::vector<const FuzzCheck*> active;
  for (const auto& c : fuzz_checks())
    if (config.only.empty() || std::find(config.only.begin(), config.only.end(), c.name) != config.only.end())
      active.push_back(&c);

  std::vector<std::vector<BoundReport>> slots(config.instances);
  const auto n = static_cast<std::ptrdiff_t>(config.instances);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto& slot = slots[static_cast<std::size_t>(i)];
    for (const FuzzCheck* c : active) {
      auto part = run_check(*c, config.seed, static_cast<std::uint64_t>(i), config);
      slot.insert(slot.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  FuzzResult result;
  for (auto& s : slots) result.reports.insert(result.reports.end(), s.begin(), s.end());
  result.summary = summarize(result.reports, config.instances);
  return result;
}

}  // namespace infotrade
