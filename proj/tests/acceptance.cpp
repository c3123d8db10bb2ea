// Acceptance criteria AC1..AC10: one PASS/FAIL line each, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "infotrade/constructions.hpp"
#include "infotrade/harness.hpp"
#include "infotrade/infocost.hpp"
#include "infotrade/triviality.hpp"

using namespace infotrade;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string what;
  double budget_s;  // runtime limit; <= 0 for none
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Runs a fuzz check `count` times; returns (worst slack per report name, instance count seen).
struct Sweep {
  std::map<std::string, double> worst;  // min over reports of (rhs - lhs)
  std::map<std::string, std::size_t> count;
  std::size_t errors = 0;
};

Sweep repeat(const std::string& check, std::size_t count, const FuzzConfig& cfg = {}) {
  Sweep s;
  const auto& c = fuzz_check(check);
  for (std::size_t i = 0; i < count; ++i)
    for (const auto& r : run_check(c, 20261014, i, cfg)) {
      if (r.name.ends_with("_exception")) ++s.errors;
      auto [it, fresh] = s.worst.try_emplace(r.name, r.rhs - r.lhs);
      if (!fresh) it->second = std::min(it->second, r.rhs - r.lhs);
      ++s.count[r.name];
    }
  return s;
}

Outcome gate(const Sweep& s, const std::vector<std::pair<std::string, double>>& names, std::size_t need) {
  Outcome o;
  if (s.errors) {
    o.pass = false;
    o.detail += std::to_string(s.errors) + " instances threw; ";
  }
  for (const auto& [name, tol] : names) {
    const auto it = s.worst.find(name);
    const std::size_t n = it == s.worst.end() ? 0 : s.count.at(name);
    const double worst = it == s.worst.end() ? NAN : it->second;
    const bool ok = n >= need && worst >= -tol;
    o.pass = o.pass && ok;
    o.detail += name + ": n=" + std::to_string(n) + fmt(" min slack %.3g (tol %.0e); ", worst, tol);
  }
  return o;
}

Outcome ac1() {
  Outcome o;
  for (double eps : {0.01, 0.05, 0.1, 0.25}) {
    try {
      auto td = transcript_distribution(and_half_error_protocol(eps), 2, 2);
      const auto zero = output_probability(td, 0);
      const auto m = and_closed_form::error_matrix(eps);
      double dev = 0;
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) dev = std::max(dev, std::abs(zero[2 * x + y] - m[x][y]));
      const double werr = std::abs(worst_case_error(td, and_function()) - (0.5 - eps));
      const bool ok = dev <= 1e-12 && werr <= 1e-12;
      o.pass = o.pass && ok;
      o.detail += fmt("eps=%g: matrix dev %.2g, |err-(1/2-eps)| %.2g; ", eps, dev, werr);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail += fmt("eps=%g: not realizable (", eps) + e.what() + fmt("; closed-form Pr[0|00] = %g); ", and_closed_form::error_matrix(eps)[0][0]);
    }
  }
  return o;
}

Outcome ac2() {
  const std::vector<double> grid{1.0 / 128, 1.0 / 256, 1.0 / 512, 1.0 / 1024};
  struct Target {
    Measure mu;
    double ext, in;
  };
  const std::vector<Target> targets{{Measure::uniform(2, 2), 92.3324, 92.3324},
                                    {Measure::from_matrix({{0.4, 0.3}, {0.2, 0.1}}), 83.0967, 82.4376}};
  Outcome o;
  for (const auto& t : targets) {
    auto table = sweep(family_by_name("and-figure1"), t.mu, grid);
    const double ce = fit_quadratic(table, SweepColumn::External).c2;
    const double ci = fit_quadratic(table, SweepColumn::Internal).c2;
    const double re = std::abs(ce - t.ext) / t.ext, ri = std::abs(ci - t.in) / t.in;
    o.pass = o.pass && re <= 0.01 && ri <= 0.01;
    o.detail += fmt("ext c2 %.4f vs %.4f", ce, t.ext) + fmt(" (%.3f%%), ", 100 * re) + fmt("int c2 %.4f vs %.4f", ci, t.in) +
                fmt(" (%.3f%%); ", 100 * ri);
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  const bool xor_diag = is_internal_trivial(xor_function(), Measure::from_matrix({{0.5, 0.0}, {0.0, 0.5}})).trivial;
  const auto d = is_distributional_trivial(and_function(), Measure::uniform(2, 2));
  const bool and_witness = !d.trivial && d.row_overlap == std::vector<std::size_t>{1};
  auto planted = gate(repeat("planted", 1000), {{"zero_ic_internal", 1e-12}, {"zero_ic_error", 0.0}}, 1000);
  o.pass = xor_diag && and_witness && planted.pass;
  o.detail = std::string("XOR/diag internal-trivial ") + (xor_diag ? "yes" : "no") + "; AND/uniform overlap {1} " +
             (and_witness ? "yes" : "no") + "; " + planted.detail;
  return o;
}

}  // namespace

int main() {
  std::map<std::string, bool> passed;
  FuzzConfig analytic;
  analytic.tolerance = 1e-10;
  const std::vector<Criterion> criteria{
      {"AC1", "AND protocol error matrix and worst-case error 1/2-eps", 1.0, ac1},
      {"AC2", "AND eps^2 coefficients by quadratic fit within 1%", 5.0, ac2},
      {"AC3", "half-guess: error <= 1/2-eps, ext <= 2eps log|X||Y|, uniform equality", 0,
       [] {
         return gate(repeat("half_guess", 1000),
                     {{"half_guess_error", 1e-12}, {"half_guess_external", 1e-9}, {"half_guess_uniform_equality", 1e-10}}, 1000);
       }},
      {"AC4", "general lower bound <= internal cost on connected (a,b)", 0,
       [] { return gate(repeat("lower_bound", 1000), {{"general_lower_bound", 1e-9}}, 1000); }},
      {"AC5", "mixing: ext(pi') = (1-eps) ext(pi)", 0,
       [] { return gate(repeat("mixing", 1000), {{"mix_equality", 1e-12}}, 1000); }},
      {"AC6", "completion: zero error, gap <= 4|X||Y| hc(sqrt(eps_hat))", 0,
       [] { return gate(repeat("completion", 200), {{"completion_zero_error", 0.0}, {"completion_gap", 1e-9}}, 200); }},
      {"AC7", "noise injection: error <= eps and the product-prior inequality", 0,
       [] { return gate(repeat("noise_injection", 200), {{"noise_injection_error", 1e-12}, {"noise_injection", 1e-9}}, 200); }},
      {"AC8", "triviality characterizations and planted zero-information protocols", 0, ac8},
      {"AC9", "Pinsker, hc subadditivity, elementary, corrupted divergence", 0,
       [&analytic] {
         return gate(repeat("analytic", 10000, analytic),
                     {{"pinsker", 1e-10}, {"hc_subadditive", 1e-10}, {"elementary", 1e-10}, {"corrupted_divergence", 1e-10}},
                     9990);  // the elementary sample is skipped when m draws exactly 0
       }},
      {"AC10", "asymptotic statements witnessed by AC1-AC4, AC6, AC7", 0,
       [&passed] {
         Outcome o;
         for (const char* id : {"AC1", "AC2", "AC3", "AC4", "AC6", "AC7"}) {
           o.pass = o.pass && passed[id];
           o.detail += std::string(id) + (passed[id] ? " ok; " : " failed; ");
         }
         return o;
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.pass = false;
      o.detail += fmt("over time budget %.1fs; ", c.budget_s);
    }
    passed[c.id] = o.pass;
    failures += o.pass ? 0 : 1;
    std::printf("%-4s %s  %s (%.3fs)\n     %s\n", c.id.c_str(), o.pass ? "PASS" : "FAIL", c.what.c_str(), secs,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
