#include "infotrade/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infotrade/errors.hpp"

namespace infotrade {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Alice: return "ALICE";
    case NodeKind::Bob: return "BOB";
    case NodeKind::Coin: return "COIN";
    case NodeKind::Leaf: return "LEAF";
  }
  return "?";
}

ProtocolTree ProtocolTree::leaf(int output) {
  ProtocolTree t;
  Node n;
  n.kind = NodeKind::Leaf;
  n.output = output;
  t.nodes_.push_back(std::move(n));
  return t;
}

ProtocolTree ProtocolTree::join(Node root, ProtocolTree on_zero, ProtocolTree on_one) {
  ProtocolTree t;
  const std::size_t zero_offset = 1;
  const std::size_t one_offset = 1 + on_zero.nodes_.size();
  root.children = {zero_offset, one_offset};
  t.nodes_.reserve(one_offset + on_one.nodes_.size());
  t.nodes_.push_back(std::move(root));
  for (auto* part : {&on_zero, &on_one}) {
    const std::size_t offset = t.nodes_.size();
    for (auto& n : part->nodes_) {
      for (auto& c : n.children) c += offset;
      t.nodes_.push_back(std::move(n));
    }
  }
  return t;
}

ProtocolTree ProtocolTree::alice(std::vector<double> send_one_prob, ProtocolTree on_zero, ProtocolTree on_one) {
  Node n;
  n.kind = NodeKind::Alice;
  n.send_one_prob = std::move(send_one_prob);
  return join(std::move(n), std::move(on_zero), std::move(on_one));
}

ProtocolTree ProtocolTree::bob(std::vector<double> send_one_prob, ProtocolTree on_zero, ProtocolTree on_one) {
  Node n;
  n.kind = NodeKind::Bob;
  n.send_one_prob = std::move(send_one_prob);
  return join(std::move(n), std::move(on_zero), std::move(on_one));
}

ProtocolTree ProtocolTree::coin(double bias, ProtocolTree on_zero, ProtocolTree on_one) {
  Node n;
  n.kind = NodeKind::Coin;
  n.bias = bias;
  return join(std::move(n), std::move(on_zero), std::move(on_one));
}

ProtocolTree ProtocolTree::from_nodes(std::vector<Node> nodes) {
  if (nodes.empty()) throw InvalidProtocol("protocol tree has no nodes");
  std::vector<int> parents(nodes.size(), 0);
  for (const auto& n : nodes) {
    for (std::size_t c : n.children) {
      if (c >= nodes.size()) throw InvalidProtocol("child index " + std::to_string(c) + " out of range");
      if (c == 0) throw InvalidProtocol("root node cannot be a child");
      if (++parents[c] > 1) throw InvalidProtocol("node " + std::to_string(c) + " has two parents");
    }
  }
  // Count reachable nodes; with unique parents this rules out cycles detached from the root.
  std::vector<std::size_t> stack{0};
  std::size_t seen = 0;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    ++seen;
    for (std::size_t c : nodes[i].children) stack.push_back(c);
  }
  if (seen != nodes.size()) throw InvalidProtocol("protocol tree has unreachable nodes");
  ProtocolTree t;
  t.nodes_ = std::move(nodes);
  return t;
}

std::vector<std::size_t> ProtocolTree::leaves() const {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    const Node& n = nodes_[i];
    if (n.kind == NodeKind::Leaf) {
      out.push_back(i);
      continue;
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::size_t ProtocolTree::depth() const {
  std::size_t best = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [i, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    for (std::size_t c : nodes_[i].children) stack.emplace_back(c, d + 1);
  }
  return best;
}

std::vector<std::string> ProtocolTree::transcript_labels() const {
  std::vector<std::string> out;
  std::vector<std::pair<std::size_t, std::string>> stack{{0, ""}};
  while (!stack.empty()) {
    auto [i, label] = std::move(stack.back());
    stack.pop_back();
    const Node& n = nodes_[i];
    if (n.kind == NodeKind::Leaf) {
      out.push_back(std::move(label));
      continue;
    }
    for (std::size_t b = n.children.size(); b-- > 0;) stack.emplace_back(n.children[b], label + char('0' + b));
  }
  return out;
}

std::vector<Diagnostic> validate(const ProtocolTree& pi, std::optional<std::size_t> rows,
                                 std::optional<std::size_t> cols, std::optional<int> alphabet) {
  std::vector<Diagnostic> out;
  auto report = [&](DiagnosticKind k, std::size_t i, std::string msg) {
    out.push_back({k, i, "node " + std::to_string(i) + ": " + std::move(msg)});
  };
  auto in_unit = [](double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; };

  const auto nodes = pi.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    if (n.kind == NodeKind::Leaf) {
      if (!n.children.empty()) report(DiagnosticKind::Arity, i, "leaf has children");
      if (n.output < 0 || (alphabet && n.output >= *alphabet)) {
        report(DiagnosticKind::LeafLabel, i, "leaf output " + std::to_string(n.output) + " is not a symbol of Z");
      }
      continue;
    }
    if (n.children.size() != 2) {
      report(DiagnosticKind::Arity, i, "internal node has " + std::to_string(n.children.size()) + " children");
    }
    if (n.kind == NodeKind::Coin) {
      if (!in_unit(n.bias)) report(DiagnosticKind::ProbabilityRange, i, "coin bias outside [0,1]");
      continue;
    }
    auto& expected = n.kind == NodeKind::Alice ? rows : cols;
    if (n.send_one_prob.empty()) {
      report(DiagnosticKind::InputSize, i, "player node without transmission probabilities");
    } else if (expected && n.send_one_prob.size() != *expected) {
      report(DiagnosticKind::InputSize, i,
             std::string(to_string(n.kind)) + " node sized for " + std::to_string(n.send_one_prob.size()) +
                 " inputs, expected " + std::to_string(*expected));
    } else if (!expected) {
      expected = n.send_one_prob.size();
    }
    for (double p : n.send_one_prob) {
      if (!in_unit(p)) {
        report(DiagnosticKind::ProbabilityRange, i, "transmission probability outside [0,1]");
        break;
      }
    }
  }
  if (out.empty() && pi.depth() > kMaxProtocolDepth) {
    report(DiagnosticKind::Depth, 0, "tree depth exceeds " + std::to_string(kMaxProtocolDepth));
  }
  return out;
}

TranscriptDistribution::TranscriptDistribution(std::size_t rows, std::size_t cols,
                                               std::vector<std::size_t> leaf_nodes, std::vector<int> leaf_outputs,
                                               std::vector<double> coin, std::vector<double> alice,
                                               std::vector<double> bob, std::vector<double> probs,
                                               std::size_t flushed)
    : rows_(rows),
      cols_(cols),
      leaf_nodes_(std::move(leaf_nodes)),
      leaf_outputs_(std::move(leaf_outputs)),
      coin_(std::move(coin)),
      alice_(std::move(alice)),
      bob_(std::move(bob)),
      probs_(std::move(probs)),
      flushed_(flushed) {
  const std::size_t L = leaf_nodes_.size();
  if (leaf_outputs_.size() != L || coin_.size() != L || alice_.size() != L * rows_ || bob_.size() != L * cols_ ||
      probs_.size() != L * rows_ * cols_) {
    throw DimensionError("inconsistent transcript distribution buffers");
  }
}

namespace {

void require_valid(const ProtocolTree& pi, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw DimensionError("empty input space");
  const auto diags = validate(pi, rows, cols);
  if (diags.empty()) return;
  if (diags.front().kind == DiagnosticKind::Depth) throw ResourceError(diags.front().message);
  if (diags.front().kind == DiagnosticKind::InputSize) throw DimensionError(diags.front().message);
  throw InvalidProtocol(diags.front().message);
}

double flush(double v, std::size_t& flushed) {
  if (v != 0.0 && v < kFlushThreshold) {
    ++flushed;
    return 0.0;
  }
  return v;
}

}  // namespace

TranscriptDistribution transcript_distribution(const ProtocolTree& pi, std::size_t rows, std::size_t cols) {
  require_valid(pi, rows, cols);

  struct Frame {
    std::size_t node;
    double coin;
    std::vector<double> alice;
    std::vector<double> bob;
  };

  std::vector<std::size_t> leaf_nodes;
  std::vector<int> leaf_outputs;
  std::vector<double> coin, alice, bob;
  std::size_t flushed = 0;

  // Depth-first, bit-0 child first, so leaf order matches ProtocolTree::leaves().
  std::vector<Frame> stack;
  stack.push_back({0, 1.0, std::vector<double>(rows, 1.0), std::vector<double>(cols, 1.0)});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const Node& n = pi.node(f.node);
    switch (n.kind) {
      case NodeKind::Leaf:
        leaf_nodes.push_back(f.node);
        leaf_outputs.push_back(n.output);
        coin.push_back(f.coin);
        alice.insert(alice.end(), f.alice.begin(), f.alice.end());
        bob.insert(bob.end(), f.bob.begin(), f.bob.end());
        break;
      case NodeKind::Coin: {
        Frame one{n.children[1], flush(f.coin * n.bias, flushed), f.alice, f.bob};
        f.coin = flush(f.coin * (1.0 - n.bias), flushed);
        f.node = n.children[0];
        stack.push_back(std::move(one));
        stack.push_back(std::move(f));
        break;
      }
      case NodeKind::Alice:
      case NodeKind::Bob: {
        Frame one{n.children[1], f.coin, f.alice, f.bob};
        auto& zero_side = n.kind == NodeKind::Alice ? f.alice : f.bob;
        auto& one_side = n.kind == NodeKind::Alice ? one.alice : one.bob;
        for (std::size_t i = 0; i < zero_side.size(); ++i) {
          const double p = n.send_one_prob[i];
          one_side[i] = flush(one_side[i] * p, flushed);
          zero_side[i] = flush(zero_side[i] * (1.0 - p), flushed);
        }
        f.node = n.children[0];
        stack.push_back(std::move(one));
        stack.push_back(std::move(f));
        break;
      }
    }
  }

  const std::size_t L = leaf_nodes.size();
  const std::size_t block = rows * cols;
  std::vector<double> probs(L * block);
  std::size_t fill_flushed = 0;
  const long long leaf_count = static_cast<long long>(L);
#pragma omp parallel for schedule(static) reduction(+ : fill_flushed)
  for (long long l = 0; l < leaf_count; ++l) {
    const std::size_t leaf = static_cast<std::size_t>(l);
    const double c = coin[leaf];
    const double* a = alice.data() + leaf * rows;
    const double* b = bob.data() + leaf * cols;
    double* out = probs.data() + leaf * block;
    for (std::size_t x = 0; x < rows; ++x) {
      const double ca = c * a[x];
      for (std::size_t y = 0; y < cols; ++y) out[x * cols + y] = flush(ca * b[y], fill_flushed);
    }
  }

  return TranscriptDistribution(rows, cols, std::move(leaf_nodes), std::move(leaf_outputs), std::move(coin),
                                std::move(alice), std::move(bob), std::move(probs), flushed + fill_flushed);
}

namespace {

void require_same_space(const TranscriptDistribution& td, std::size_t rows, std::size_t cols) {
  if (td.rows() != rows || td.cols() != cols) {
    throw DimensionError("protocol input space is " + std::to_string(td.rows()) + "x" + std::to_string(td.cols()) +
                         ", operand is " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

std::vector<double> error_profile(const TranscriptDistribution& td, const FunctionTable& f) {
  require_same_space(td, f.rows(), f.cols());
  std::vector<double> err(td.rows() * td.cols(), 0.0);
  for (std::size_t l = 0; l < td.num_leaves(); ++l) {
    const int z = td.leaf_output(l);
    const auto block = td.leaf_block(l);
    for (std::size_t i = 0; i < block.size(); ++i)
      if (f.outputs()[i] != z) err[i] += block[i];
  }
  for (double& e : err) e = std::min(e, 1.0);
  return err;
}

std::vector<double> output_probability(const TranscriptDistribution& td, int z) {
  std::vector<double> out(td.rows() * td.cols(), 0.0);
  for (std::size_t l = 0; l < td.num_leaves(); ++l) {
    if (td.leaf_output(l) != z) continue;
    const auto block = td.leaf_block(l);
    for (std::size_t i = 0; i < block.size(); ++i) out[i] += block[i];
  }
  return out;
}

double worst_case_error(const TranscriptDistribution& td, const FunctionTable& f) {
  const auto err = error_profile(td, f);
  return *std::max_element(err.begin(), err.end());
}

double worst_case_error(const ProtocolTree& pi, const FunctionTable& f) {
  return worst_case_error(transcript_distribution(pi, f.rows(), f.cols()), f);
}

double distributional_error(const TranscriptDistribution& td, const FunctionTable& f, const Measure& nu) {
  require_same_space(td, nu.rows(), nu.cols());
  const auto err = error_profile(td, f);
  double e = 0.0;
  for (std::size_t i = 0; i < err.size(); ++i) e += nu.mass()[i] * err[i];
  return e;
}

double distributional_error(const ProtocolTree& pi, const FunctionTable& f, const Measure& nu) {
  require_same_space(f, nu);
  return distributional_error(transcript_distribution(pi, f.rows(), f.cols()), f, nu);
}

double leaf_probability(const TranscriptDistribution& td, const Measure& mu, std::size_t leaf) {
  require_same_space(td, mu.rows(), mu.cols());
  const auto block = td.leaf_block(leaf);
  double p = 0.0;
  for (std::size_t i = 0; i < block.size(); ++i) p += mu.mass()[i] * block[i];
  return p;
}

Measure leaf_measure(const TranscriptDistribution& td, const Measure& mu, std::size_t leaf) {
  require_same_space(td, mu.rows(), mu.cols());
  if (leaf >= td.num_leaves()) throw DomainError("leaf index " + std::to_string(leaf) + " out of range");
  if (!(leaf_probability(td, mu, leaf) > 0.0)) {
    throw DomainError("leaf " + std::to_string(leaf) + " has zero probability; conditioning is undefined");
  }
  // Rectangle property: conditioning on a leaf rescales rows by alice(leaf,.) and columns by bob(leaf,.).
  return scale_rectangle(mu, td.alice_factor(leaf), td.bob_factor(leaf));
}

Measure leaf_measure(const ProtocolTree& pi, const Measure& mu, std::size_t leaf) {
  return leaf_measure(transcript_distribution(pi, mu.rows(), mu.cols()), mu, leaf);
}

}  // namespace infotrade
