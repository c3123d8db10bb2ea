#pragma once

#include <cstdint>
#include <random>

#include "infotrade/infotheory.hpp"
#include "infotrade/measures.hpp"
#include "infotrade/protocol.hpp"

namespace infotrade {

using Rng = std::mt19937_64;

/// Independent stream for instance `index` of a run seeded with `seed`.
/// Depends only on (seed, index), so instances can be generated in any order.
Rng instance_rng(std::uint64_t seed, std::uint64_t index);

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
double uniform_real(Rng& rng, double lo, double hi);

/// Normalized exponential draws; each cell is zeroed with probability
/// `zero_prob`, keeping at least one supported cell.
Measure random_measure(Rng& rng, std::size_t rows, std::size_t cols, double zero_prob = 0.0);
Distribution random_distribution(Rng& rng, std::size_t n);
FunctionTable random_function(Rng& rng, std::size_t rows, std::size_t cols, int alphabet);

/// Random owners (Alice, Bob, public coin), random transmission probabilities,
/// random leaf outputs in [0, alphabet). Depth at most max_depth.
ProtocolTree random_protocol(Rng& rng, std::size_t rows, std::size_t cols, int alphabet, std::size_t max_depth);

/// A protocol with worst-case error 0 for f: players deterministically split
/// the live rectangle until f is constant on it, with occasional public coins.
ProtocolTree random_zero_error_protocol(Rng& rng, const FunctionTable& f);

/// A (f, mu) pair for which the class sets {x : f(x,.) = z on supp} partition
/// rows and columns: k blocks X_z x Y_z carry all the mass and f = z there.
struct PlantedPartition {
  FunctionTable f;
  Measure mu;
};
PlantedPartition random_planted_partition(Rng& rng, std::size_t rows, std::size_t cols, int classes);

/// A protocol with worst-case error at most 1/2 - eps for f, found by mixing a
/// half-guess protocol with a random one; candidates failing the error
/// requirement are rejected (falls back to plain half-guess).
ProtocolTree random_half_error_protocol(Rng& rng, const FunctionTable& f, double eps, std::size_t max_depth);

}  // namespace infotrade
