#pragma once

#include <compare>
#include <span>
#include <vector>

#include "infotrade/bound_report.hpp"
#include "infotrade/measures.hpp"

namespace infotrade {

// All information quantities are in bits; zero-mass terms are skipped (0 log 0 = 0).

class Distribution {
 public:
  explicit Distribution(std::vector<double> probs);
  static Distribution normalized(std::vector<double> weights);
  static Distribution bernoulli(double p) { return Distribution({1.0 - p, p}); }

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const noexcept { return probs_; }
  // Mass this distribution puts on the support of `other`.
  double mass_on_support_of(const Distribution& other) const;

 private:
  std::vector<double> probs_;
};

/// KL divergence value; +infinity is a distinguished state, not a float overflow.
class Divergence {
 public:
  explicit Divergence(double bits) : bits_(bits) {}
  static Divergence infinite() {
    Divergence d(0.0);
    d.infinite_ = true;
    return d;
  }

  bool is_finite() const noexcept { return !infinite_; }
  // Throws DomainError when infinite.
  double bits() const;
  // +inf as an IEEE double, for arithmetic at the caller's own risk.
  double as_double() const noexcept;

  friend bool operator==(const Divergence& a, const Divergence& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.bits_ == b.bits_);
  }
  friend std::partial_ordering operator<=>(const Divergence& a, const Divergence& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.bits_ <=> b.bits_;
  }
  friend std::partial_ordering operator<=>(const Divergence& a, double b) {
    if (a.infinite_) return std::partial_ordering::greater;
    return a.bits_ <=> b;
  }

 private:
  double bits_;
  bool infinite_ = false;
};

double binary_entropy(double p);
// h(min(x, 1/2)); defined for every x >= 0.
double clamped_entropy(double x);
double entropy(std::span<const double> probs);
double l1_distance(std::span<const double> a, std::span<const double> b);

Divergence kl_divergence(const Distribution& mu, const Distribution& nu);

// I(X;Y) = D(p(xy) || p(x)p(y)) for the joint measure.
double mutual_information(const Measure& joint);

// Nonnegative summand p*log2(p/q) + (q - p)/ln 2 of a divergence whose two
// arguments have equal total mass; summing these keeps every partial sum >= 0.
double divergence_term(double p, double q);

BoundReport pinsker_check(const Distribution& mu, const Distribution& nu, double tolerance = 1e-10);
BoundReport clamped_subadditivity_check(double x1, double x2, double tolerance = 1e-10);
// hc(x) >= max(h(min(x,1)), min(x,1)).
BoundReport clamped_majorant_check(double x, double tolerance = 1e-10);

/// D((1-eps)mu + eps nu || nu) <= (1-eps) D(mu||nu) - (1 - nu(supp mu)) eps log(1/eps).
/// Throws DomainError unless supp mu is inside supp nu and eps is in [0,1].
BoundReport corrupted_divergence_bound_check(const Distribution& mu, const Distribution& nu, double eps,
                                             double tolerance = 1e-10);

/// |m-r| + |m-s| >= m - n for nonnegative m,n,r,s with mn = rs.
/// Throws DomainError when |mn - rs| > 1e-12 * max(1, mn).
BoundReport elementary_inequality_check(double m, double n, double r, double s, double tolerance = 1e-10);

}  // namespace infotrade
