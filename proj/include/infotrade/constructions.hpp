#pragma once

#include <array>
#include <optional>

#include "infotrade/bound_report.hpp"
#include "infotrade/infotheory.hpp"
#include "infotrade/measures.hpp"
#include "infotrade/protocol.hpp"

namespace infotrade {

/// With probability 1-2eps output a public unbiased bit; with probability 2eps
/// Alice and Bob both announce their inputs and the leaf outputs f(x,y).
/// Requires 0 < eps <= 1/2 and an alphabet of at least two symbols.
ProtocolTree half_guess_protocol(const FunctionTable& f, double eps);

/// The error-(1/2 - eps) AND protocol built from noisy copies of both bits.
///
/// Public coin: with probability 2eps output 0. Otherwise Alice sends X~ and
/// Bob sends Y~, each equal to the true bit with probability 1/2 + 4eps; equal
/// bits are output, unequal ones are replaced by a public unbiased bit.
/// Requires 0 < eps <= 1/8, where 1/2 + 4eps is still a probability.
ProtocolTree and_half_error_protocol(double eps);

namespace and_closed_form {

double p_plus(double eps);
double p_minus(double eps);
double q(double eps);

// Pr[output 0 | xy] of and_half_error_protocol.
std::array<std::array<double, 2>, 2> error_matrix(double eps);

// Distribution of (X~, Y~) for the prior mu; mu must be 2x2.
std::array<std::array<double, 2>, 2> noisy_copy_distribution(const Measure& mu, double eps);

// Leading eps^2 coefficients (bits) of the external and internal cost.
double ext_coefficient(const Measure& mu);
// Throws DomainError when a marginal vanishes.
double int_coefficient(const Measure& mu);

}  // namespace and_closed_form

struct AndClosedForms {
  double epsilon = 0.0;
  double p_plus = 0.0;
  double p_minus = 0.0;
  double q = 0.0;
  std::array<std::array<double, 2>, 2> error_matrix{};
  std::array<std::array<double, 2>, 2> noisy_copy_distribution{};
  double ext_coefficient = 0.0;
  std::optional<double> int_coefficient;  // absent when mu lacks full marginals
};

AndClosedForms and_closed_forms(const Measure& mu, double eps);

/// Uniformly random public symbol of {0..alphabet-1}, realized with public coins.
ProtocolTree uniform_symbol_protocol(int alphabet);

/// Runs pi with probability 1-eps and outputs a uniform public symbol otherwise.
ProtocolTree mix_with_random_guess(const ProtocolTree& pi, double eps, int alphabet);

/// Public coin B; on B=0 Alice runs pi on X' (X kept w.p. 1-eps, else resampled
/// from mu1), on B=1 Bob does the same with mu2. Alice's transmission
/// probabilities are rewritten path by path so the leaf law is exact on the
/// original tree shape. Throws DomainError unless pi is zero-error for f.
ProtocolTree noise_injection(const ProtocolTree& pi, const FunctionTable& f, const Distribution& mu1,
                             const Distribution& mu2, double eps);
/// Same, with the factors read off mu; throws DomainError unless mu is a product.
ProtocolTree noise_injection(const ProtocolTree& pi, const FunctionTable& f, const Measure& mu, double eps);

/// IC_ext(pi') <= (1 - eps/2) IC_ext(pi) - (eps/2) log(1/eps) (1 - sqrt(1 - delta)),
/// delta = min(mu(f^-1(0)), mu(f^-1(1))), for mu = mu1 x mu2 and boolean f.
BoundReport noise_injection_bound(const ProtocolTree& pi, const FunctionTable& f, const Distribution& mu1,
                                  const Distribution& mu2, double eps, double tolerance = 1e-9);

/// Completes pi into a zero-error protocol: after each leaf l, every
/// (x,y) with f(x,y) != z_l is verified in row-major order, the player with the
/// smaller marginal under mu_l asking first. Bits already determined by the
/// transcript so far are not sent. Requires full-support mu.
ProtocolTree zero_error_completion(const ProtocolTree& pi, const FunctionTable& f, const Measure& mu);

/// IC_ext(completion) - IC_ext(pi) <= 4|X||Y| h(sqrt(eps_hat)), eps_hat = worst_case_error(pi, f).
BoundReport completion_gap_bound(const ProtocolTree& pi, const FunctionTable& f, const Measure& mu,
                                 double tolerance = 1e-9);

}  // namespace infotrade
