#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infotrade/measures.hpp"

namespace infotrade {

enum class NodeKind { Alice, Bob, Coin, Leaf };

const char* to_string(NodeKind kind);

/// One node of a protocol tree. children[0] follows bit 0, children[1] bit 1.
struct Node {
  NodeKind kind = NodeKind::Leaf;
  std::vector<double> send_one_prob;  // indexed by the owner's input (Alice: x, Bob: y)
  double bias = 0.5;                  // Coin: probability of bit 1
  int output = 0;                     // Leaf: symbol of Z
  std::vector<std::size_t> children;  // indices into ProtocolTree::nodes()

  friend bool operator==(const Node&, const Node&) = default;
};

inline constexpr std::size_t kMaxProtocolDepth = 64;

/// Finite two-party protocol tree, stored in preorder with the root at index 0.
///
/// Private randomness lives in the per-node transmission probabilities; public
/// coins are Coin nodes and therefore part of the transcript. Every leaf is a
/// transcript and carries the agreed output.
class ProtocolTree {
 public:
  static ProtocolTree leaf(int output);
  static ProtocolTree alice(std::vector<double> send_one_prob, ProtocolTree on_zero, ProtocolTree on_one);
  static ProtocolTree bob(std::vector<double> send_one_prob, ProtocolTree on_zero, ProtocolTree on_one);
  static ProtocolTree coin(double bias, ProtocolTree on_zero, ProtocolTree on_one);

  /// Adopts a raw node list. Only memory safety is checked here (indices in
  /// range, every node reachable from the root exactly once); call validate()
  /// for the protocol invariants.
  static ProtocolTree from_nodes(std::vector<Node> nodes);

  std::span<const Node> nodes() const noexcept { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Leaf node indices in depth-first order, bit-0 branch first.
  std::vector<std::size_t> leaves() const;
  std::size_t depth() const;
  /// Bit strings of the root-to-leaf paths (public coin bits included), in leaves() order.
  std::vector<std::string> transcript_labels() const;

  /// Returns a copy of the tree with every Leaf output passed through `relabel`.
  template <typename F>
  ProtocolTree map_outputs(F&& relabel) const {
    ProtocolTree copy = *this;
    for (auto& n : copy.nodes_)
      if (n.kind == NodeKind::Leaf) n.output = relabel(n.output);
    return copy;
  }

  friend bool operator==(const ProtocolTree&, const ProtocolTree&) = default;

 private:
  static ProtocolTree join(Node root, ProtocolTree on_zero, ProtocolTree on_one);

  std::vector<Node> nodes_;
};

enum class DiagnosticKind { ProbabilityRange, Arity, LeafLabel, InputSize, Depth };

struct Diagnostic {
  DiagnosticKind kind;
  std::size_t node;
  std::string message;
};

/// Every invariant violation of the tree. Input sizes are checked against
/// `rows`/`cols` when given, otherwise for consistency among nodes; leaf labels
/// against `alphabet` when given, otherwise for nonnegativity.
std::vector<Diagnostic> validate(const ProtocolTree& pi, std::optional<std::size_t> rows = std::nullopt,
                                 std::optional<std::size_t> cols = std::nullopt,
                                 std::optional<int> alphabet = std::nullopt);

/// p(leaf | x, y) for every leaf and input pair, plus its rectangle factors.
///
/// p(leaf | x, y) = coin(leaf) * alice(leaf, x) * bob(leaf, y): the product of
/// public coin probabilities, of Alice's transmission probabilities and of Bob's
/// along the path.
class TranscriptDistribution {
 public:
  TranscriptDistribution(std::size_t rows, std::size_t cols, std::vector<std::size_t> leaf_nodes,
                         std::vector<int> leaf_outputs, std::vector<double> coin, std::vector<double> alice,
                         std::vector<double> bob, std::vector<double> probs, std::size_t flushed);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t num_leaves() const noexcept { return leaf_nodes_.size(); }

  double prob(std::size_t leaf, std::size_t x, std::size_t y) const {
    return probs_[leaf * rows_ * cols_ + x * cols_ + y];
  }
  // p(leaf | .) as a rows*cols row-major block.
  std::span<const double> leaf_block(std::size_t leaf) const {
    return std::span<const double>(probs_).subspan(leaf * rows_ * cols_, rows_ * cols_);
  }
  double coin_factor(std::size_t leaf) const { return coin_[leaf]; }
  std::span<const double> alice_factor(std::size_t leaf) const {
    return std::span<const double>(alice_).subspan(leaf * rows_, rows_);
  }
  std::span<const double> bob_factor(std::size_t leaf) const {
    return std::span<const double>(bob_).subspan(leaf * cols_, cols_);
  }
  std::size_t leaf_node(std::size_t leaf) const { return leaf_nodes_[leaf]; }
  int leaf_output(std::size_t leaf) const { return leaf_outputs_[leaf]; }
  // Path products that fell below 1e-300 and were set to 0.
  std::size_t flushed_count() const noexcept { return flushed_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::size_t> leaf_nodes_;
  std::vector<int> leaf_outputs_;
  std::vector<double> coin_;
  std::vector<double> alice_;
  std::vector<double> bob_;
  std::vector<double> probs_;
  std::size_t flushed_;
};

inline constexpr double kFlushThreshold = 1e-300;

/// Top-down path-product DP; the leaf-by-input fill runs in parallel.
/// Throws InvalidProtocol if validate() reports anything.
TranscriptDistribution transcript_distribution(const ProtocolTree& pi, std::size_t rows, std::size_t cols);

double worst_case_error(const TranscriptDistribution& td, const FunctionTable& f);
double worst_case_error(const ProtocolTree& pi, const FunctionTable& f);
// Pr[wrong | x, y] for every input, row-major.
std::vector<double> error_profile(const TranscriptDistribution& td, const FunctionTable& f);
double distributional_error(const ProtocolTree& pi, const FunctionTable& f, const Measure& nu);
double distributional_error(const TranscriptDistribution& td, const FunctionTable& f, const Measure& nu);
// Pr[output = z | x, y] row-major.
std::vector<double> output_probability(const TranscriptDistribution& td, int z);

/// Leaf probability Pr[leaf] under mu.
double leaf_probability(const TranscriptDistribution& td, const Measure& mu, std::size_t leaf);

/// Input distribution conditioned on reaching `leaf` (index into leaves()).
/// Throws DomainError when the leaf has zero probability under mu.
Measure leaf_measure(const TranscriptDistribution& td, const Measure& mu, std::size_t leaf);
Measure leaf_measure(const ProtocolTree& pi, const Measure& mu, std::size_t leaf);

namespace serial {

/// Reference transcript computation: walks every root-to-leaf path separately
/// for each input pair. Independent of the factored DP; kept for testing and benchmarks.
TranscriptDistribution transcript_distribution(const ProtocolTree& pi, std::size_t rows, std::size_t cols);

}  // namespace serial

}  // namespace infotrade
