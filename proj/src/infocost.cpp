#include "infotrade/infocost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "infotrade/errors.hpp"
#include "infotrade/infotheory.hpp"
#include "infotrade/triviality.hpp"

namespace infotrade {

namespace {

void require_same_space(const TranscriptDistribution& td, const Measure& mu) {
  if (td.rows() != mu.rows() || td.cols() != mu.cols()) {
    throw DimensionError("protocol input space " + std::to_string(td.rows()) + "x" + std::to_string(td.cols()) +
                         " does not match measure " + std::to_string(mu.rows()) + "x" + std::to_string(mu.cols()));
  }
}

double ordered_sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

InternalCost internal_cost(const TranscriptDistribution& td, const Measure& mu) {
  require_same_space(td, mu);
  const std::size_t rows = mu.rows(), cols = mu.cols();
  const auto px = mu.row_marginal();
  const auto py = mu.col_marginal();
  const std::size_t L = td.num_leaves();
  std::vector<double> alice_part(L, 0.0), bob_part(L, 0.0);

  const long long leaf_count = static_cast<long long>(L);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long l = 0; l < leaf_count; ++l) {
    const std::size_t leaf = static_cast<std::size_t>(l);
    const auto p = td.leaf_block(leaf);
    // p(leaf | y) and p(leaf | x) under mu.
    std::vector<double> given_y(cols, 0.0), given_x(rows, 0.0);
    for (std::size_t x = 0; x < rows; ++x)
      for (std::size_t y = 0; y < cols; ++y) {
        const double w = mu(x, y);
        if (w == 0.0) continue;
        given_y[y] += w * p[x * cols + y];
        given_x[x] += w * p[x * cols + y];
      }
    for (std::size_t y = 0; y < cols; ++y)
      if (py[y] > 0.0) given_y[y] /= py[y];
    for (std::size_t x = 0; x < rows; ++x)
      if (px[x] > 0.0) given_x[x] /= px[x];

    double a = 0.0, b = 0.0;
    for (std::size_t x = 0; x < rows; ++x)
      for (std::size_t y = 0; y < cols; ++y) {
        const double w = mu(x, y);
        if (w == 0.0) continue;
        const double q = p[x * cols + y];
        if (given_y[y] > 0.0) a += w * divergence_term(q, given_y[y]);
        if (given_x[x] > 0.0) b += w * divergence_term(q, given_x[x]);
      }
    alice_part[leaf] = a;
    bob_part[leaf] = b;
  }
  return {std::max(0.0, ordered_sum(alice_part)), std::max(0.0, ordered_sum(bob_part))};
}

double internal_ic(const TranscriptDistribution& td, const Measure& mu) { return internal_cost(td, mu).total(); }

double internal_ic(const ProtocolTree& pi, const Measure& mu) {
  return internal_ic(transcript_distribution(pi, mu.rows(), mu.cols()), mu);
}

double external_ic(const TranscriptDistribution& td, const Measure& mu) {
  require_same_space(td, mu);
  const auto weights = mu.mass();
  const std::size_t L = td.num_leaves();
  std::vector<double> part(L, 0.0);

  const long long leaf_count = static_cast<long long>(L);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long l = 0; l < leaf_count; ++l) {
    const std::size_t leaf = static_cast<std::size_t>(l);
    const auto p = td.leaf_block(leaf);
    double marginal = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) marginal += weights[i] * p[i];
    if (marginal == 0.0) continue;
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (weights[i] > 0.0) s += weights[i] * divergence_term(p[i], marginal);
    part[leaf] = s;
  }
  return std::max(0.0, ordered_sum(part));
}

double external_ic(const ProtocolTree& pi, const Measure& mu) {
  return external_ic(transcript_distribution(pi, mu.rows(), mu.cols()), mu);
}

double transcript_l1_distance(const TranscriptDistribution& td, InputPair a, InputPair b) {
  if (a.x >= td.rows() || b.x >= td.rows() || a.y >= td.cols() || b.y >= td.cols()) {
    throw DomainError("input pair outside the protocol's input space");
  }
  double d = 0.0;
  for (std::size_t l = 0; l < td.num_leaves(); ++l) d += std::abs(td.prob(l, a.x, a.y) - td.prob(l, b.x, b.y));
  return d;
}

double support_delta(const Measure& mu) {
  const auto px = mu.row_marginal();
  const auto py = mu.col_marginal();
  double delta = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < mu.rows(); ++x)
    for (std::size_t y = 0; y < mu.cols(); ++y) {
      const double m = mu(x, y);
      if (m < kFlushThreshold) continue;
      delta = std::min({delta, m * m / px[x], m * m / py[y]});
    }
  return delta;
}

BoundReport general_lower_bound(const TranscriptDistribution& td, const Measure& mu, InputPair a, InputPair b,
                                double tolerance) {
  require_same_space(td, mu);
  const auto path = shortest_support_path(mu, a, b);
  if (!path) throw DomainError("input pairs are not connected in the support graph");
  const double delta = support_delta(mu);
  const double l1 = transcript_l1_distance(td, a, b);
  const double dims = static_cast<double>(mu.rows() + mu.cols());
  const double bound = delta / (dims * 2.0 * std::numbers::ln2) * l1 * l1;
  const double ic = internal_ic(td, mu);
  return BoundReport::at_most("general_lower_bound", bound, ic, tolerance,
                              {{"delta", delta}, {"l1", l1}, {"path_length", path->size() - 1}});
}

BoundReport general_lower_bound(const ProtocolTree& pi, const Measure& mu, InputPair a, InputPair b,
                                double tolerance) {
  return general_lower_bound(transcript_distribution(pi, mu.rows(), mu.cols()), mu, a, b, tolerance);
}

namespace serial {

InternalCost internal_cost(const TranscriptDistribution& td, const Measure& mu) {
  require_same_space(td, mu);
  const std::size_t rows = mu.rows(), cols = mu.cols(), L = td.num_leaves();
  const auto px = mu.row_marginal();
  const auto py = mu.col_marginal();
  InternalCost cost;
  // I(Pi; X | Y) = sum_y mu(y) I(Pi; X | Y = y), zero-marginal columns skipped.
  for (std::size_t y = 0; y < cols; ++y) {
    if (py[y] == 0.0) continue;
    std::vector<double> joint(L * rows);
    for (std::size_t l = 0; l < L; ++l)
      for (std::size_t x = 0; x < rows; ++x) joint[l * rows + x] = mu(x, y) / py[y] * td.prob(l, x, y);
    cost.alice_reveals += py[y] * mutual_information(Measure::normalized(L, rows, std::move(joint)));
  }
  for (std::size_t x = 0; x < rows; ++x) {
    if (px[x] == 0.0) continue;
    std::vector<double> joint(L * cols);
    for (std::size_t l = 0; l < L; ++l)
      for (std::size_t y = 0; y < cols; ++y) joint[l * cols + y] = mu(x, y) / px[x] * td.prob(l, x, y);
    cost.bob_reveals += px[x] * mutual_information(Measure::normalized(L, cols, std::move(joint)));
  }
  return cost;
}

double external_ic(const TranscriptDistribution& td, const Measure& mu) {
  require_same_space(td, mu);
  const std::size_t n = mu.rows() * mu.cols(), L = td.num_leaves();
  std::vector<double> joint(L * n);
  for (std::size_t l = 0; l < L; ++l) {
    const auto p = td.leaf_block(l);
    for (std::size_t i = 0; i < n; ++i) joint[l * n + i] = mu.mass()[i] * p[i];
  }
  return mutual_information(Measure::normalized(L, n, std::move(joint)));
}

}  // namespace serial

}  // namespace infotrade
