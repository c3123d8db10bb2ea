#include <doctest.h>

#include <cmath>
#include <numbers>

#include "infotrade/constructions.hpp"
#include "infotrade/errors.hpp"
#include "infotrade/harness.hpp"
#include "infotrade/infotheory.hpp"
#include "infotrade/json_io.hpp"

using namespace infotrade;
using doctest::Approx;

namespace {
const std::vector<double> kGrid{1.0 / 128, 1.0 / 256, 1.0 / 512, 1.0 / 1024};
}

TEST_CASE("sweep of the near-half-error AND family") {
  auto fam = family_by_name("and-figure1");
  auto t = sweep(fam, Measure::uniform(2, 2), kGrid);
  REQUIRE(t.rows.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(t.rows[i].epsilon == kGrid[i]);
    CHECK(t.rows[i].internal_bits >= 0.0);
    CHECK(t.rows[i].worst_case_error == Approx(0.5 - kGrid[i]).epsilon(1e-12));
    if (i > 0) {
      CHECK(t.rows[i].external_bits < t.rows[i - 1].external_bits);
      CHECK(t.rows[i].internal_bits < t.rows[i - 1].internal_bits);
    }
  }
  auto edge = sweep(fam, Measure::uniform(2, 2), std::vector<double>{0.125});
  CHECK(edge.rows[0].worst_case_error == Approx(0.375).epsilon(1e-12));
  try {
    sweep(fam, Measure::uniform(2, 2), std::vector<double>{0.25});
    FAIL("expected the constructor to reject eps = 0.25");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("eps = 0.25") != std::string::npos);
  }
  CHECK_THROWS_AS(sweep(fam, Measure::uniform(2, 2), std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(family_by_name("half-guess"), DomainError);
  CHECK_THROWS_AS(family_by_name("nope"), DomainError);
}

TEST_CASE("sweep is deterministic and round-trips through CSV") {
  auto fam = family_by_name("half-guess", xor_function());
  const std::vector<double> grid{0.5, 0.25, 0.1, 0.01};
  auto a = sweep(fam, Measure::uniform(2, 2), grid);
  auto b = sweep(fam, Measure::uniform(2, 2), grid);
  CHECK(to_csv(a) == to_csv(b));
  auto back = sweep_from_csv(to_csv(a));
  REQUIRE(back.rows.size() == a.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(back.rows[i].epsilon == a.rows[i].epsilon);
    CHECK(back.rows[i].external_bits == a.rows[i].external_bits);
    CHECK(back.rows[i].distributional_error == a.rows[i].distributional_error);
  }
  CHECK(to_csv(a).rfind("epsilon,internal_bits,external_bits,worst_case_error,distributional_error\n", 0) == 0);
  CHECK_THROWS(sweep_from_csv("eps,x\n1,2\n"));
}

TEST_CASE("quadratic fit") {
  std::vector<double> v;
  for (double e : kGrid) v.push_back(5 * e * e);
  auto exact = fit_quadratic(kGrid, v);
  CHECK(exact.c2 == Approx(5.0).epsilon(1e-12));
  CHECK(std::abs(exact.c4) <= 1e-6);
  CHECK(exact.residual <= 1e-12);

  std::vector<double> h;
  const std::vector<double> wide{0.01, 0.02, 0.03, 0.04, 0.05};
  for (double e : wide) h.push_back(binary_entropy(0.5) - binary_entropy(0.5 - e));
  CHECK(fit_quadratic(wide, h).c2 == Approx(2 / std::numbers::ln2).epsilon(5e-3));

  auto t = sweep(family_by_name("and-figure1"), Measure::uniform(2, 2), kGrid);
  CHECK(fit_quadratic(t, SweepColumn::External).c2 == Approx(64 / std::numbers::ln2).epsilon(1e-2));
  CHECK(fit_quadratic(t, SweepColumn::Internal).c2 == Approx(64 / std::numbers::ln2).epsilon(1e-2));

  CHECK_THROWS_AS(fit_quadratic(std::vector<double>{0.1, 0.2}, std::vector<double>{1, 2}), DomainError);
  CHECK_THROWS_AS(fit_quadratic(std::vector<double>{0.1, 0.1, 0.2}, std::vector<double>{1, 1, 2}), DomainError);
  CHECK(parse_column("external") == SweepColumn::External);
  CHECK_THROWS(parse_column("bogus"));
}

TEST_CASE("fuzz configuration") {
  auto c = FuzzConfig::from_json(json::parse(R"({"seed": 7, "instances": 3, "max_rows": 3, "tolerances": {"pinsker": 1e-8}})"));
  CHECK(c.seed == 7);
  CHECK(c.instances == 3);
  CHECK(c.tolerance_for("pinsker", 0.0) == 1e-8);
  CHECK(c.tolerance_for("elementary", 0.5) == 0.5);
  CHECK_THROWS_AS(FuzzConfig::from_json(json::parse(R"({"instances": 0})")), DomainError);
  CHECK_THROWS_AS(FuzzConfig::from_json(json::parse(R"({"max_rows": 40})")), ResourceError);
  CHECK_THROWS_AS(FuzzConfig::from_json(json::parse(R"({"max_depth": 40})")), ResourceError);
  CHECK_THROWS_AS(FuzzConfig::from_json(json::parse(R"({"checks": ["nope"]})")), DomainError);
}

TEST_CASE("fuzz run: seed 1, 100 instances, no violations, reproducible") {
  FuzzConfig c;
  c.seed = 1;
  c.instances = 100;
  auto r = fuzz_bounds(c);
  CHECK(r.summary.violations == 0);
  for (const auto& rep : r.reports)
    if (!rep.holds) MESSAGE(rep.to_json().dump());
  for (const auto& check : fuzz_checks())
    if (check.name != "half_error_lower") {
      bool any = false;
      for (const auto& rep : r.reports) any = any || rep.context.at("check") == check.name;
      CHECK_MESSAGE(any, check.name);
    }
  auto again = fuzz_bounds(c);
  REQUIRE(again.reports.size() == r.reports.size());
  for (std::size_t i = 0; i < r.reports.size(); ++i) CHECK(again.reports[i].to_json() == r.reports[i].to_json());

  // A single check reruns identically in isolation.
  FuzzConfig only = c;
  only.only = {"mixing"};
  auto iso = fuzz_bounds(only);
  std::vector<BoundReport> mixing;
  for (const auto& rep : r.reports)
    if (rep.context.at("check") == "mixing") mixing.push_back(rep);
  REQUIRE(iso.reports.size() == mixing.size());
  for (std::size_t i = 0; i < mixing.size(); ++i) CHECK(iso.reports[i].to_json() == mixing[i].to_json());
}

TEST_CASE("tolerance overrides are recorded in reports") {
  FuzzConfig c;
  c.instances = 5;
  c.only = {"half_guess"};
  c.overrides["half_guess_error"] = 0.0;
  auto r = fuzz_bounds(c);
  for (const auto& rep : r.reports)
    if (rep.name == "half_guess_error") CHECK(rep.tolerance == 0.0);
}

TEST_CASE("bound report verdicts") {
  auto ok = BoundReport::at_most("x", 1.0, 1.0 - 1e-10, 1e-9);
  CHECK(ok.holds);
  CHECK(ok.to_json().at("verdict") == "holds");
  CHECK(ok.to_json().at("context").at("tolerance") == 1e-9);
  auto bad = BoundReport::at_most("x", 1.0, 0.5, 1e-9);
  CHECK_FALSE(bad.holds);
  CHECK(bad.to_json().at("verdict") == "violated");
  CHECK(bad.to_json().at("slack") == -0.5);
}
