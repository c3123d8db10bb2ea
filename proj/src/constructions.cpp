#include "infotrade/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "infotrade/errors.hpp"
#include "infotrade/infocost.hpp"

namespace infotrade {

namespace {

void require_probability(double eps, double lo, double hi, bool open_low, const char* what) {
  const bool low_ok = open_low ? eps > lo : eps >= lo;
  if (!(low_ok && eps <= hi)) throw DomainError(std::string(what) + ": eps = " + std::to_string(eps) + " out of range");
}

// Deterministic balanced announcement of an index in [lo, hi) by one player;
// `tail(index)` builds the subtree reached once the index is known.
template <typename Tail>
ProtocolTree announce(NodeKind who, std::size_t size, std::size_t lo, std::size_t hi, Tail&& tail) {
  if (hi - lo == 1) return tail(lo);
  const std::size_t mid = lo + (hi - lo) / 2;
  std::vector<double> send(size);
  for (std::size_t i = 0; i < size; ++i) send[i] = i >= mid ? 1.0 : 0.0;
  auto zero = announce(who, size, lo, mid, tail);
  auto one = announce(who, size, mid, hi, tail);
  return who == NodeKind::Alice ? ProtocolTree::alice(std::move(send), std::move(zero), std::move(one))
                                : ProtocolTree::bob(std::move(send), std::move(zero), std::move(one));
}

ProtocolTree fair_bit() { return ProtocolTree::coin(0.5, ProtocolTree::leaf(0), ProtocolTree::leaf(1)); }

}  // namespace

ProtocolTree half_guess_protocol(const FunctionTable& f, double eps) {
  require_probability(eps, 0.0, 0.5, true, "half_guess_protocol");
  if (f.alphabet() < 2) throw DomainError("half_guess_protocol needs at least two output symbols");
  auto reveal = announce(NodeKind::Alice, f.rows(), 0, f.rows(), [&](std::size_t x) {
    return announce(NodeKind::Bob, f.cols(), 0, f.cols(),
                    [&](std::size_t y) { return ProtocolTree::leaf(f(x, y)); });
  });
  return ProtocolTree::coin(2.0 * eps, fair_bit(), std::move(reveal));
}

ProtocolTree and_half_error_protocol(double eps) {
  // 1/2 + 4eps must be a probability.
  require_probability(eps, 0.0, 0.125, true, "and_half_error_protocol");
  const double keep = 0.5 + 4.0 * eps;
  const std::vector<double> send{1.0 - keep, keep};  // sends 1 w.p. keep when the bit is 1
  auto after_zero = ProtocolTree::bob(send, ProtocolTree::leaf(0), fair_bit());
  auto after_one = ProtocolTree::bob(send, fair_bit(), ProtocolTree::leaf(1));
  auto noisy = ProtocolTree::alice(send, std::move(after_zero), std::move(after_one));
  return ProtocolTree::coin(2.0 * eps, std::move(noisy), ProtocolTree::leaf(0));
}

namespace and_closed_form {

double p_plus(double eps) { return (0.5 + 4.0 * eps) * (0.5 + 4.0 * eps); }
double p_minus(double eps) { return (0.5 - 4.0 * eps) * (0.5 - 4.0 * eps); }
double q(double eps) { return (0.5 + 4.0 * eps) * (0.5 - 4.0 * eps); }

std::array<std::array<double, 2>, 2> error_matrix(double eps) {
  const double e2 = eps * eps;
  return {{{0.5 + 5.0 * eps - 8.0 * e2, 0.5 + eps}, {0.5 + eps, 0.5 - 3.0 * eps + 8.0 * e2}}};
}

namespace {

struct Cells {
  double alpha, beta, gamma, delta;
};

Cells cells(const Measure& mu) {
  if (mu.rows() != 2 || mu.cols() != 2) throw DimensionError("AND closed forms need a 2x2 prior");
  return {mu(0, 0), mu(0, 1), mu(1, 0), mu(1, 1)};
}

}  // namespace

std::array<std::array<double, 2>, 2> noisy_copy_distribution(const Measure& mu, double eps) {
  const auto [a, b, c, d] = cells(mu);
  const double pp = p_plus(eps), pm = p_minus(eps), qq = q(eps);
  return {{{a * pp + d * pm + (b + c) * qq, b * pp + c * pm + (a + d) * qq},
           {c * pp + b * pm + (a + d) * qq, d * pp + a * pm + (b + c) * qq}}};
}

double ext_coefficient(const Measure& mu) {
  const auto [a, b, c, d] = cells(mu);
  return 128.0 * (2.0 * a * d + b * (1.0 - b) + c * (1.0 - c)) / std::numbers::ln2;
}

double int_coefficient(const Measure& mu) {
  const auto [a, b, c, d] = cells(mu);
  const double denom = (a + b) * (c + d) * (a + c) * (b + d);
  if (!(denom > 0.0)) throw DomainError("internal AND coefficient needs every marginal positive");
  return ext_coefficient(mu) * ((a + d) * b * c + (b + c) * a * d) / denom;
}

}  // namespace and_closed_form

AndClosedForms and_closed_forms(const Measure& mu, double eps) {
  AndClosedForms out;
  out.epsilon = eps;
  out.p_plus = and_closed_form::p_plus(eps);
  out.p_minus = and_closed_form::p_minus(eps);
  out.q = and_closed_form::q(eps);
  out.error_matrix = and_closed_form::error_matrix(eps);
  out.noisy_copy_distribution = and_closed_form::noisy_copy_distribution(mu, eps);
  out.ext_coefficient = and_closed_form::ext_coefficient(mu);
  try {
    out.int_coefficient = and_closed_form::int_coefficient(mu);
  } catch (const DomainError&) {
    out.int_coefficient.reset();
  }
  return out;
}

ProtocolTree uniform_symbol_protocol(int alphabet) {
  if (alphabet < 1) throw DomainError("alphabet must have at least one symbol");
  auto build = [](auto&& self, int lo, int hi) -> ProtocolTree {
    if (hi - lo == 1) return ProtocolTree::leaf(lo);
    const int mid = lo + (hi - lo) / 2;
    const double bias = static_cast<double>(hi - mid) / static_cast<double>(hi - lo);
    return ProtocolTree::coin(bias, self(self, lo, mid), self(self, mid, hi));
  };
  return build(build, 0, alphabet);
}

ProtocolTree mix_with_random_guess(const ProtocolTree& pi, double eps, int alphabet) {
  require_probability(eps, 0.0, 1.0, false, "mix_with_random_guess");
  return ProtocolTree::coin(eps, pi, uniform_symbol_protocol(alphabet));
}

namespace {

// Rewrites one player's transmission probabilities so that the leaf law equals
// running pi on a copy of the input kept w.p. 1-eps and resampled from prior otherwise.
ProtocolTree resample_player(const ProtocolTree& pi, NodeKind who, std::span<const double> prior, double eps) {
  std::vector<Node> nodes(pi.nodes().begin(), pi.nodes().end());
  const std::size_t n = prior.size();
  // prefix[x]: product of this player's probabilities along the path, on input x.
  std::vector<std::pair<std::size_t, std::vector<double>>> stack;
  stack.emplace_back(0, std::vector<double>(n, 1.0));
  while (!stack.empty()) {
    auto [i, prefix] = std::move(stack.back());
    stack.pop_back();
    Node& node = nodes[i];
    if (node.kind == NodeKind::Leaf) continue;
    if (node.kind != who) {
      for (std::size_t c : node.children) stack.emplace_back(c, prefix);
      continue;
    }
    const std::vector<double> send = node.send_one_prob;
    double avg = 0.0, avg_one = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      avg += prior[x] * prefix[x];
      avg_one += prior[x] * prefix[x] * send[x];
    }
    std::vector<double> zero_prefix(n), one_prefix(n);
    for (std::size_t x = 0; x < n; ++x) {
      const double reach = (1.0 - eps) * prefix[x] + eps * avg;
      if (reach > 0.0) {
        const double s = ((1.0 - eps) * prefix[x] * send[x] + eps * avg_one) / reach;
        node.send_one_prob[x] = std::clamp(s, 0.0, 1.0);
      }
      zero_prefix[x] = prefix[x] * (1.0 - send[x]);
      one_prefix[x] = prefix[x] * send[x];
    }
    stack.emplace_back(node.children[0], std::move(zero_prefix));
    stack.emplace_back(node.children[1], std::move(one_prefix));
  }
  return ProtocolTree::from_nodes(std::move(nodes));
}

}  // namespace

ProtocolTree noise_injection(const ProtocolTree& pi, const FunctionTable& f, const Distribution& mu1,
                             const Distribution& mu2, double eps) {
  require_probability(eps, 0.0, 1.0, false, "noise_injection");
  if (mu1.size() != f.rows() || mu2.size() != f.cols()) throw DimensionError("prior factors do not match f");
  if (worst_case_error(pi, f) > kConservationTolerance) {
    throw DomainError("noise injection needs a zero-error base protocol");
  }
  return ProtocolTree::coin(0.5, resample_player(pi, NodeKind::Alice, mu1.probs(), eps),
                            resample_player(pi, NodeKind::Bob, mu2.probs(), eps));
}

ProtocolTree noise_injection(const ProtocolTree& pi, const FunctionTable& f, const Measure& mu, double eps) {
  require_same_space(f, mu);
  const auto rows = mu.row_marginal();
  const auto cols = mu.col_marginal();
  for (std::size_t x = 0; x < mu.rows(); ++x)
    for (std::size_t y = 0; y < mu.cols(); ++y)
      if (std::abs(mu(x, y) - rows[x] * cols[y]) > kConservationTolerance)
        throw DomainError("noise injection needs a product prior");
  return noise_injection(pi, f, Distribution(rows), Distribution(cols), eps);
}

BoundReport noise_injection_bound(const ProtocolTree& pi, const FunctionTable& f, const Distribution& mu1,
                                  const Distribution& mu2, double eps, double tolerance) {
  for (int z : f.outputs())
    if (z > 1) throw DomainError("noise injection bound is stated for boolean f");
  const Measure mu = product(mu1.probs(), mu2.probs());
  const ProtocolTree noisy = noise_injection(pi, f, mu1, mu2, eps);
  const double base = external_ic(pi, mu);
  const double after = external_ic(noisy, mu);
  double ones = 0.0;
  for (std::size_t i = 0; i < f.outputs().size(); ++i)
    if (f.outputs()[i] == 1) ones += mu.mass()[i];
  const double delta = std::min(ones, 1.0 - ones);
  const double eps_log = eps > 0.0 ? eps * std::log2(1.0 / eps) : 0.0;
  const double rhs = (1.0 - eps / 2.0) * base - 0.5 * eps_log * (1.0 - std::sqrt(1.0 - delta));
  return BoundReport::at_most("noise_injection", after, rhs, tolerance,
                              {{"eps", eps},
                               {"delta", delta},
                               {"base_external", base},
                               {"worst_case_error", worst_case_error(noisy, f)}});
}

namespace {

struct Completion {
  const FunctionTable& f;
  int fallback;
  std::vector<InputPair> candidates;
  std::vector<double> row_mass, col_mass;

  ProtocolTree from(std::size_t k, std::set<std::size_t> xs, std::set<std::size_t> ys) const {
    while (k < candidates.size() && (!xs.count(candidates[k].x) || !ys.count(candidates[k].y))) ++k;
    if (k == candidates.size()) return ProtocolTree::leaf(fallback);
    const auto [x, y] = candidates[k];
    const bool alice_first = row_mass[x] <= col_mass[y];
    auto& first = alice_first ? xs : ys;
    auto& second = alice_first ? ys : xs;
    const std::size_t first_value = alice_first ? x : y;
    const std::size_t second_value = alice_first ? y : x;

    // The responder's answer, given the initiator confirmed.
    auto confirmed = [&]() {
      std::set<std::size_t> pinned{first_value};
      if (second.size() == 1) return ProtocolTree::leaf(f(x, y));
      std::set<std::size_t> rest = second;
      rest.erase(second_value);
      auto no = alice_first ? from(k + 1, pinned, rest) : from(k + 1, rest, pinned);
      return ask(!alice_first, second_value, alice_first ? f.cols() : f.rows(), std::move(no),
                 ProtocolTree::leaf(f(x, y)));
    };
    if (first.size() == 1) return confirmed();
    std::set<std::size_t> rest = first;
    rest.erase(first_value);
    auto no = alice_first ? from(k + 1, rest, ys) : from(k + 1, xs, rest);
    return ask(alice_first, first_value, alice_first ? f.rows() : f.cols(), std::move(no), confirmed());
  }

  // "Is my input equal to `value`?" as one deterministic bit.
  static ProtocolTree ask(bool alice, std::size_t value, std::size_t size, ProtocolTree no, ProtocolTree yes) {
    std::vector<double> send(size, 0.0);
    send[value] = 1.0;
    return alice ? ProtocolTree::alice(std::move(send), std::move(no), std::move(yes))
                 : ProtocolTree::bob(std::move(send), std::move(no), std::move(yes));
  }
};

std::set<std::size_t> support_of(std::span<const double> v) {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0.0) s.insert(i);
  return s;
}

}  // namespace

ProtocolTree zero_error_completion(const ProtocolTree& pi, const FunctionTable& f, const Measure& mu) {
  require_same_space(f, mu);
  for (double m : mu.mass())
    if (!(m > 0.0)) throw DomainError("zero-error completion needs a full-support prior");
  const auto td = transcript_distribution(pi, f.rows(), f.cols());

  std::vector<ProtocolTree> tails;
  tails.reserve(td.num_leaves());
  for (std::size_t l = 0; l < td.num_leaves(); ++l) {
    const int z = td.leaf_output(l);
    Completion c{f, z, {}, {}, {}};
    for (std::size_t x = 0; x < f.rows(); ++x)
      for (std::size_t y = 0; y < f.cols(); ++y)
        if (f(x, y) != z) c.candidates.push_back({x, y});
    const Measure conditioned = leaf_probability(td, mu, l) > 0.0 ? leaf_measure(td, mu, l) : mu;
    c.row_mass = conditioned.row_marginal();
    c.col_mass = conditioned.col_marginal();
    tails.push_back(c.from(0, support_of(td.alice_factor(l)), support_of(td.bob_factor(l))));
  }

  std::vector<std::size_t> ordinal(pi.size(), 0);
  const auto leaves = pi.leaves();
  for (std::size_t l = 0; l < leaves.size(); ++l) ordinal[leaves[l]] = l;
  auto rebuild = [&](auto&& self, std::size_t i) -> ProtocolTree {
    const Node& n = pi.node(i);
    switch (n.kind) {
      case NodeKind::Leaf: return std::move(tails[ordinal[i]]);
      case NodeKind::Coin: return ProtocolTree::coin(n.bias, self(self, n.children[0]), self(self, n.children[1]));
      case NodeKind::Alice:
        return ProtocolTree::alice(n.send_one_prob, self(self, n.children[0]), self(self, n.children[1]));
      case NodeKind::Bob:
        return ProtocolTree::bob(n.send_one_prob, self(self, n.children[0]), self(self, n.children[1]));
    }
    throw InvalidProtocol("unknown node kind");
  };
  return rebuild(rebuild, 0);
}

BoundReport completion_gap_bound(const ProtocolTree& pi, const FunctionTable& f, const Measure& mu,
                                 double tolerance) {
  const double eps_hat = worst_case_error(pi, f);
  const ProtocolTree completed = zero_error_completion(pi, f, mu);
  const double gap = external_ic(completed, mu) - external_ic(pi, mu);
  const double cells = static_cast<double>(f.rows() * f.cols());
  const double rhs = 4.0 * cells * clamped_entropy(std::sqrt(eps_hat));
  return BoundReport::at_most("completion_gap", gap, rhs, tolerance,
                              {{"base_error", eps_hat}, {"completed_error", worst_case_error(completed, f)}});
}

}  // namespace infotrade
