#include <doctest.h>

#include <cmath>
#include <numbers>

#include "infotrade/errors.hpp"
#include "infotrade/generators.hpp"
#include "infotrade/infotheory.hpp"

using namespace infotrade;
using doctest::Approx;

TEST_CASE("binary and clamped entropy") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == 1.0);
  const double gap = binary_entropy(0.5) - binary_entropy(0.5 - 1e-3);
  CHECK(gap == Approx(2.0 / std::numbers::ln2 * 1e-6).epsilon(1e-2));
  CHECK_THROWS_AS(binary_entropy(1.1), DomainError);
  CHECK_THROWS_AS(binary_entropy(-0.1), DomainError);

  CHECK(clamped_entropy(0.7) == 1.0);
  CHECK(clamped_entropy(0.25) == Approx(0.811278).epsilon(1e-6));
  CHECK(clamped_entropy(0.3) + clamped_entropy(0.4) >= clamped_entropy(0.7));
  CHECK(clamped_entropy(5.0) == 1.0);
  CHECK_THROWS_AS(clamped_entropy(-1e-3), DomainError);
}

TEST_CASE("entropy properties on samples") {
  auto rng = instance_rng(11, 0);
  double prev = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0 * 1.5;
    CHECK(clamped_entropy(x) >= prev);  // monotone
    prev = clamped_entropy(x);
    const double p = uniform_real(rng, 0, 1), q = uniform_real(rng, 0, 1);
    CHECK(binary_entropy((p + q) / 2) >= (binary_entropy(p) + binary_entropy(q)) / 2 - 1e-15);
    if (x <= 1.0) CHECK(clamped_majorant_check(x).holds);
  }
}

TEST_CASE("kl divergence") {
  auto mu = Distribution::bernoulli(0.5);
  CHECK(kl_divergence(mu, mu).bits() == Approx(0.0));
  CHECK(kl_divergence(Distribution::bernoulli(0.5), Distribution::bernoulli(0.25)).bits() ==
        Approx(1.0 - std::log2(3.0) / 2).epsilon(1e-12));
  auto point = Distribution({1.0, 0.0});
  CHECK_FALSE(kl_divergence(mu, point).is_finite());
  CHECK(kl_divergence(point, mu).bits() == Approx(1.0));
  CHECK(kl_divergence(mu, point) > kl_divergence(point, mu));
  CHECK_THROWS(kl_divergence(mu, point).bits());
  CHECK_THROWS_AS(kl_divergence(mu, Distribution({1.0 / 3, 1.0 / 3, 1.0 / 3})), DimensionError);

  // Finite exactly when supp mu is inside supp nu.
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = instance_rng(12, i);
    std::vector<double> a(4), b(4);
    for (auto& v : a) v = uniform_real(rng, 0, 1) < 0.3 ? 0.0 : uniform_real(rng, 0.1, 1);
    for (auto& v : b) v = uniform_real(rng, 0, 1) < 0.3 ? 0.0 : uniform_real(rng, 0.1, 1);
    a[0] += 0.1;
    b[1] += 0.1;
    auto da = Distribution::normalized(a), db = Distribution::normalized(b);
    bool inside = true;
    for (int k = 0; k < 4; ++k) inside = inside && !(da[k] > 0 && db[k] == 0);
    CHECK(kl_divergence(da, db).is_finite() == inside);
    if (inside) CHECK(kl_divergence(da, db).bits() >= 0.0);
  }
}

TEST_CASE("mutual information") {
  CHECK(mutual_information(Measure::uniform(3, 2)) <= 1e-15);
  CHECK(mutual_information(Measure::from_matrix({{0.5, 0.0}, {0.0, 0.5}})) == Approx(1.0).epsilon(1e-14));
  for (std::uint64_t i = 0; i < 2000; ++i) {
    auto rng = instance_rng(13, i);
    const auto n = uniform_size(rng, 1, 5), m = uniform_size(rng, 1, 5);
    auto mu = random_measure(rng, n, m, 0.3);
    const auto px = mu.row_marginal(), py = mu.col_marginal();
    const double mi = mutual_information(mu);
    CHECK(std::abs(mi - (entropy(px) + entropy(py) - entropy(mu.mass()))) <= 1e-10);
    CHECK(mi <= std::min(std::log2(double(n)), std::log2(double(m))) + 1e-10);
  }
}

TEST_CASE("analytic inequality checks") {
  SUBCASE("corrupted divergence endpoints") {
    auto mu = Distribution({0.7, 0.3, 0.0});
    auto nu = Distribution({0.2, 0.3, 0.5});
    auto at0 = corrupted_divergence_bound_check(mu, nu, 0.0);
    CHECK(at0.lhs == Approx(at0.rhs).epsilon(1e-12));
    auto at1 = corrupted_divergence_bound_check(mu, nu, 1.0);
    CHECK(std::abs(at1.lhs) <= 1e-15);
    CHECK(std::abs(at1.rhs) <= 1e-15);
    CHECK_THROWS_AS(corrupted_divergence_bound_check(nu, mu, 0.5), DomainError);
    CHECK_THROWS_AS(corrupted_divergence_bound_check(mu, nu, 1.5), DomainError);
  }
  SUBCASE("elementary inequality") {
    auto ones = elementary_inequality_check(1, 1, 1, 1);
    CHECK(ones.lhs == 0.0);
    CHECK(ones.rhs == 0.0);
    auto r = elementary_inequality_check(4, 1, 2, 2);
    CHECK(r.lhs == 3.0);
    CHECK(r.rhs == 4.0);
    CHECK(r.holds);
    CHECK_THROWS_AS(elementary_inequality_check(4, 1, 2, 3), DomainError);
  }
  SUBCASE("random samples") {
    for (std::uint64_t i = 0; i < 2000; ++i) {
      auto rng = instance_rng(14, i);
      auto a = random_distribution(rng, 4), b = random_distribution(rng, 4);
      CHECK(pinsker_check(a, b).holds);
      CHECK(corrupted_divergence_bound_check(a, b, uniform_real(rng, 0, 1)).holds);
      CHECK(clamped_subadditivity_check(uniform_real(rng, 0, 1), uniform_real(rng, 0, 1)).holds);
      const double m = uniform_real(rng, 0.01, 3), n = uniform_real(rng, 0, 3), rr = uniform_real(rng, 0.01, 3);
      CHECK(elementary_inequality_check(m, n, rr, m * n / rr).holds);
    }
  }
}

TEST_CASE("divergence_term keeps the correction at p = 0") {
  CHECK(divergence_term(0.0, 0.25) == Approx(0.25 / std::numbers::ln2));
  CHECK(divergence_term(0.3, 0.3) == 0.0);
  CHECK(divergence_term(0.3, 0.2) > 0.0);
  CHECK(divergence_term(0.1, 0.2) > 0.0);
}
