#include "infotrade/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "infotrade/errors.hpp"

namespace infotrade {

namespace {

constexpr double kLn2 = std::numbers::ln2;


}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw DimensionError("empty distribution");
  double total = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) throw DomainError("distribution entries must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > kConservationTolerance) throw DomainError("distribution does not sum to 1");
}

Distribution Distribution::normalized(std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw DomainError("weights must be nonnegative");
    total += w;
  }
  if (!(total > 0.0)) throw DomainError("weights have zero total mass");
  for (double& w : weights) w /= total;
  return Distribution(std::move(weights));
}

double Distribution::mass_on_support_of(const Distribution& other) const {
  if (other.size() != size()) throw DimensionError("distribution sizes differ");
  double m = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    if (other[i] > 0.0) m += probs_[i];
  return m;
}

double Divergence::bits() const {
  if (infinite_) throw DomainError("divergence is infinite");
  return bits_;
}

double Divergence::as_double() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : bits_;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary entropy argument outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double clamped_entropy(double x) {
  if (!(x >= 0.0)) throw DomainError("clamped entropy needs x >= 0");
  return binary_entropy(std::min(x, 0.5));
}

double entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionError("l1 distance of vectors with different lengths");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

Divergence kl_divergence(const Distribution& mu, const Distribution& nu) {
  if (mu.size() != nu.size()) throw DimensionError("divergence of distributions on different spaces");
  double d = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (nu[i] == 0.0) {
      if (mu[i] > 0.0) return Divergence::infinite();
      continue;
    }
    // Zero-mass terms of mu still carry the (q - p) correction.
    d += divergence_term(mu[i], nu[i]);
  }
  return Divergence(std::max(d, 0.0));
}

double divergence_term(double p, double q) {
  if (p == 0.0) return q / kLn2;
  const double d = (p - q) / q;
  // q * ((1+d) ln(1+d) - d), accurate when p and q are close.
  return q * ((1.0 + d) * std::log1p(d) - d) / kLn2;
}

double mutual_information(const Measure& joint) {
  const auto px = joint.row_marginal();
  const auto py = joint.col_marginal();
  double mi = 0.0;
  for (std::size_t x = 0; x < joint.rows(); ++x) {
    if (px[x] == 0.0) continue;
    for (std::size_t y = 0; y < joint.cols(); ++y) {
      if (py[y] == 0.0) continue;
      mi += divergence_term(joint(x, y), px[x] * py[y]);
    }
  }
  return std::max(mi, 0.0);
}

BoundReport pinsker_check(const Distribution& mu, const Distribution& nu, double tolerance) {
  const double l1 = l1_distance(mu.probs(), nu.probs());
  const double lower = l1 * l1 / (2.0 * kLn2);
  const Divergence d = kl_divergence(mu, nu);
  return BoundReport::at_most("pinsker", lower, d.as_double(), tolerance, {{"l1", l1}});
}

BoundReport clamped_subadditivity_check(double x1, double x2, double tolerance) {
  return BoundReport::at_most("hc_subadditive", clamped_entropy(x1 + x2),
                              clamped_entropy(x1) + clamped_entropy(x2), tolerance,
                              {{"x1", x1}, {"x2", x2}});
}

BoundReport clamped_majorant_check(double x, double tolerance) {
  const double c = std::min(x, 1.0);
  return BoundReport::at_most("hc_majorant", std::max(binary_entropy(c), c), clamped_entropy(x), tolerance,
                              {{"x", x}});
}

BoundReport corrupted_divergence_bound_check(const Distribution& mu, const Distribution& nu, double eps,
                                             double tolerance) {
  if (mu.size() != nu.size()) throw DimensionError("distributions on different spaces");
  if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("eps outside [0,1]");
  const Divergence base = kl_divergence(mu, nu);
  if (!base.is_finite()) throw DomainError("supp mu is not contained in supp nu");

  std::vector<double> mixed(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) mixed[i] = (1.0 - eps) * mu[i] + eps * nu[i];
  double total = 0.0;
  for (double v : mixed) total += v;
  for (double& v : mixed) v /= total;
  const double lhs = kl_divergence(Distribution(std::move(mixed)), nu).bits();

  const double nu_on_mu = nu.mass_on_support_of(mu);
  const double eps_log = eps > 0.0 ? eps * std::log2(1.0 / eps) : 0.0;
  const double rhs = (1.0 - eps) * base.bits() - (1.0 - nu_on_mu) * eps_log;
  return BoundReport::at_most("corrupted_divergence", lhs, rhs, tolerance,
                              {{"eps", eps}, {"nu_mass_on_supp_mu", nu_on_mu}});
}

BoundReport elementary_inequality_check(double m, double n, double r, double s, double tolerance) {
  if (m < 0.0 || n < 0.0 || r < 0.0 || s < 0.0) throw DomainError("elementary inequality needs m,n,r,s >= 0");
  if (std::abs(m * n - r * s) > 1e-12 * std::max(1.0, m * n)) {
    throw DomainError("elementary inequality needs mn = rs");
  }
  return BoundReport::at_most("elementary", m - n, std::abs(m - r) + std::abs(m - s), tolerance,
                              {{"m", m}, {"n", n}, {"r", r}, {"s", s}});
}

}  // namespace infotrade
