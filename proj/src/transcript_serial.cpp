#include <algorithm>
#include <cstddef>
#include <vector>

#include "infotrade/errors.hpp"
#include "infotrade/protocol.hpp"

namespace infotrade::serial {

namespace {

struct Walker {
  const ProtocolTree& pi;
  std::vector<std::size_t> ordinal;  // node index -> leaf ordinal

  // Probability of every leaf under the single input (x, y), accumulated into row.
  void walk(std::size_t node, double p, std::size_t x, std::size_t y, std::vector<double>& row) const {
    const Node& n = pi.node(node);
    if (n.kind == NodeKind::Leaf) {
      row[ordinal[node]] += p;
      return;
    }
    double one = 0.0;
    switch (n.kind) {
      case NodeKind::Coin: one = n.bias; break;
      case NodeKind::Alice: one = n.send_one_prob[x]; break;
      case NodeKind::Bob: one = n.send_one_prob[y]; break;
      case NodeKind::Leaf: break;
    }
    walk(n.children[0], p * (1.0 - one), x, y, row);
    walk(n.children[1], p * one, x, y, row);
  }
};

}  // namespace

TranscriptDistribution transcript_distribution(const ProtocolTree& pi, std::size_t rows, std::size_t cols) {
  const auto diags = validate(pi, rows, cols);
  if (!diags.empty()) throw InvalidProtocol(diags.front().message);

  const auto leaf_nodes = pi.leaves();
  const std::size_t L = leaf_nodes.size();
  Walker w{pi, std::vector<std::size_t>(pi.size(), 0)};
  std::vector<int> outputs(L);
  for (std::size_t l = 0; l < L; ++l) {
    w.ordinal[leaf_nodes[l]] = l;
    outputs[l] = pi.node(leaf_nodes[l]).output;
  }

  std::vector<double> probs(L * rows * cols, 0.0);
  std::size_t flushed = 0;
  std::vector<double> row(L);
  for (std::size_t x = 0; x < rows; ++x) {
    for (std::size_t y = 0; y < cols; ++y) {
      std::fill(row.begin(), row.end(), 0.0);
      w.walk(0, 1.0, x, y, row);
      for (std::size_t l = 0; l < L; ++l) {
        double v = row[l];
        if (v != 0.0 && v < kFlushThreshold) {
          v = 0.0;
          ++flushed;
        }
        probs[l * rows * cols + x * cols + y] = v;
      }
    }
  }

  // Rectangle factors from the same walk with the other player's probabilities pinned to 1.
  std::vector<double> coin(L, 0.0), alice(L * rows, 0.0), bob(L * cols, 0.0);
  std::vector<std::size_t> parent(pi.size(), 0);
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t c : pi.node(i).children) parent[c] = i;
  for (std::size_t l = 0; l < L; ++l) {
    double c = 1.0;
    std::vector<double> a(rows, 1.0), b(cols, 1.0);
    for (std::size_t child = leaf_nodes[l]; child != 0; child = parent[child]) {
      const Node& n = pi.node(parent[child]);
      const bool took_one = n.children[1] == child;
      if (n.kind == NodeKind::Coin) c *= took_one ? n.bias : 1.0 - n.bias;
      auto& side = n.kind == NodeKind::Alice ? a : b;
      if (n.kind == NodeKind::Alice || n.kind == NodeKind::Bob)
        for (std::size_t i = 0; i < side.size(); ++i)
          side[i] *= took_one ? n.send_one_prob[i] : 1.0 - n.send_one_prob[i];
    }
    coin[l] = c;
    std::copy(a.begin(), a.end(), alice.begin() + static_cast<std::ptrdiff_t>(l * rows));
    std::copy(b.begin(), b.end(), bob.begin() + static_cast<std::ptrdiff_t>(l * cols));
  }

  return TranscriptDistribution(rows, cols, leaf_nodes, std::move(outputs), std::move(coin), std::move(alice),
                                std::move(bob), std::move(probs), flushed);
}

}  // namespace infotrade::serial
