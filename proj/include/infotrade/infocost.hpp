#pragma once

#include "infotrade/bound_report.hpp"
#include "infotrade/measures.hpp"
#include "infotrade/protocol.hpp"

namespace infotrade {

/// The two halves of the internal information cost.
struct InternalCost {
  double alice_reveals = 0.0;  // I(Pi; X | Y): what Bob learns about X
  double bob_reveals = 0.0;    // I(Pi; Y | X): what Alice learns about Y
  double total() const noexcept { return alice_reveals + bob_reveals; }
};

// Costs are computed from the joint law of (leaf, X, Y) = mu(x,y) p(leaf|x,y).
// Per-leaf contributions are evaluated in parallel and reduced in leaf order.
InternalCost internal_cost(const TranscriptDistribution& td, const Measure& mu);
double internal_ic(const TranscriptDistribution& td, const Measure& mu);
double internal_ic(const ProtocolTree& pi, const Measure& mu);
double external_ic(const TranscriptDistribution& td, const Measure& mu);
double external_ic(const ProtocolTree& pi, const Measure& mu);

double transcript_l1_distance(const TranscriptDistribution& td, InputPair a, InputPair b);

/// min over supp mu of mu(xy)^2/mu(x) and mu(xy)^2/mu(y); entries below 1e-300 count as zero.
double support_delta(const Measure& mu);

/// delta / ((|X|+|Y|) 2 ln 2) * ||p_a - p_b||_1^2, checked against internal_ic.
/// Throws DomainError unless a and b are supported and connected in the support graph.
BoundReport general_lower_bound(const TranscriptDistribution& td, const Measure& mu, InputPair a, InputPair b,
                                double tolerance = 1e-9);
BoundReport general_lower_bound(const ProtocolTree& pi, const Measure& mu, InputPair a, InputPair b,
                                double tolerance = 1e-9);

namespace serial {

// Reference costs through the Measure-level mutual_information on explicit
// (leaf, input) joint tables; independent of the per-leaf parallel sums.
InternalCost internal_cost(const TranscriptDistribution& td, const Measure& mu);
double external_ic(const TranscriptDistribution& td, const Measure& mu);

}  // namespace serial

}  // namespace infotrade
