#include "infotrade/generators.hpp"

#include <algorithm>
#include <numeric>

#include "infotrade/constructions.hpp"
#include "infotrade/errors.hpp"

namespace infotrade {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Rng instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{splitmix(seed), splitmix(seed ^ splitmix(index + 1))};
  return Rng(seq);
}

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Measure random_measure(Rng& rng, std::size_t rows, std::size_t cols, double zero_prob) {
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> w(rows * cols);
  for (double& v : w) v = chance(rng, zero_prob) ? 0.0 : draw(rng);
  if (std::all_of(w.begin(), w.end(), [](double v) { return v == 0.0; })) w[uniform_size(rng, 0, w.size() - 1)] = 1.0;
  return Measure::normalized(rows, cols, std::move(w));
}

Distribution random_distribution(Rng& rng, std::size_t n) {
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> w(n);
  for (double& v : w) v = draw(rng);
  return Distribution::normalized(std::move(w));
}

FunctionTable random_function(Rng& rng, std::size_t rows, std::size_t cols, int alphabet) {
  std::uniform_int_distribution<int> z(0, alphabet - 1);
  std::vector<int> out(rows * cols);
  for (int& v : out) v = z(rng);
  return FunctionTable(rows, cols, alphabet, std::move(out));
}

namespace {

std::vector<double> random_probs(Rng& rng, std::size_t n) {
  std::vector<double> p(n);
  for (double& v : p) {
    // Mix in exact 0/1 so deterministic bits show up too.
    const double u = uniform_real(rng, 0.0, 1.0);
    v = u < 0.15 ? 0.0 : u > 0.85 ? 1.0 : uniform_real(rng, 0.0, 1.0);
  }
  return p;
}

ProtocolTree grow(Rng& rng, std::size_t rows, std::size_t cols, int alphabet, std::size_t depth_left) {
  const double stop = depth_left == 0 ? 1.0 : 0.25;
  if (chance(rng, stop)) return ProtocolTree::leaf(std::uniform_int_distribution<int>(0, alphabet - 1)(rng));
  auto zero = grow(rng, rows, cols, alphabet, depth_left - 1);
  auto one = grow(rng, rows, cols, alphabet, depth_left - 1);
  const double u = uniform_real(rng, 0.0, 1.0);
  if (u < 0.4) return ProtocolTree::alice(random_probs(rng, rows), std::move(zero), std::move(one));
  if (u < 0.8) return ProtocolTree::bob(random_probs(rng, cols), std::move(zero), std::move(one));
  return ProtocolTree::coin(uniform_real(rng, 0.0, 1.0), std::move(zero), std::move(one));
}

}  // namespace

ProtocolTree random_protocol(Rng& rng, std::size_t rows, std::size_t cols, int alphabet, std::size_t max_depth) {
  if (max_depth > kMaxProtocolDepth) throw ResourceError("requested depth exceeds the protocol depth guard");
  return grow(rng, rows, cols, alphabet, max_depth);
}

namespace {

ProtocolTree split_until_constant(Rng& rng, const FunctionTable& f, const std::vector<std::size_t>& xs,
                                  const std::vector<std::size_t>& ys, int coins_left) {
  const int z = f(xs.front(), ys.front());
  bool constant = true;
  for (auto x : xs)
    for (auto y : ys) constant = constant && f(x, y) == z;
  if (constant) return ProtocolTree::leaf(z);

  if (coins_left > 0 && chance(rng, 0.15)) {
    auto zero = split_until_constant(rng, f, xs, ys, coins_left - 1);
    auto one = split_until_constant(rng, f, xs, ys, coins_left - 1);
    return ProtocolTree::coin(uniform_real(rng, 0.05, 0.95), std::move(zero), std::move(one));
  }
  // f non-constant: at least one side has two live inputs.
  bool alice = xs.size() > 1 && (ys.size() == 1 || chance(rng, 0.5));
  const auto& live = alice ? xs : ys;
  std::vector<std::size_t> shuffled = live;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const std::size_t cut = uniform_size(rng, 1, shuffled.size() - 1);
  std::vector<std::size_t> left(shuffled.begin(), shuffled.begin() + cut);
  std::vector<std::size_t> right(shuffled.begin() + cut, shuffled.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());

  std::vector<double> send = random_probs(rng, alice ? f.rows() : f.cols());  // off-rectangle inputs: anything
  for (auto v : left) send[v] = 0.0;
  for (auto v : right) send[v] = 1.0;
  if (alice) {
    auto zero = split_until_constant(rng, f, left, ys, coins_left);
    auto one = split_until_constant(rng, f, right, ys, coins_left);
    return ProtocolTree::alice(std::move(send), std::move(zero), std::move(one));
  }
  auto zero = split_until_constant(rng, f, xs, left, coins_left);
  auto one = split_until_constant(rng, f, xs, right, coins_left);
  return ProtocolTree::bob(std::move(send), std::move(zero), std::move(one));
}

}  // namespace

ProtocolTree random_zero_error_protocol(Rng& rng, const FunctionTable& f) {
  std::vector<std::size_t> xs(f.rows()), ys(f.cols());
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), 0);
  return split_until_constant(rng, f, xs, ys, 2);
}

PlantedPartition random_planted_partition(Rng& rng, std::size_t rows, std::size_t cols, int classes) {
  const auto k = static_cast<std::size_t>(classes);
  if (classes < 1 || k > rows || k > cols) throw DomainError("planted partition needs 1 <= classes <= min(rows, cols)");
  auto assign = [&](std::size_t n) {
    std::vector<std::size_t> cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = i < k ? i : uniform_size(rng, 0, k - 1);
    std::shuffle(cls.begin(), cls.end(), rng);
    return cls;
  };
  const auto row_class = assign(rows);
  const auto col_class = assign(cols);
  std::exponential_distribution<double> draw(1.0);
  std::uniform_int_distribution<int> any(0, classes - 1);
  std::vector<double> w(rows * cols, 0.0);
  std::vector<int> out(rows * cols);
  for (std::size_t x = 0; x < rows; ++x)
    for (std::size_t y = 0; y < cols; ++y) {
      const bool inside = row_class[x] == col_class[y];
      out[x * cols + y] = inside ? static_cast<int>(row_class[x]) : any(rng);
      if (inside) w[x * cols + y] = draw(rng);
    }
  return {FunctionTable(rows, cols, classes, std::move(out)), Measure::normalized(rows, cols, std::move(w))};
}

ProtocolTree random_half_error_protocol(Rng& rng, const FunctionTable& f, double eps, std::size_t max_depth) {
  const double target = 0.5 - eps;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const double stronger = uniform_real(rng, eps, 0.5);
    auto base = half_guess_protocol(f, stronger);
    auto noise = random_protocol(rng, f.rows(), f.cols(), f.alphabet(), max_depth);
    auto mixed = ProtocolTree::coin(uniform_real(rng, 0.0, 0.5), std::move(base), std::move(noise));
    if (worst_case_error(mixed, f) <= target) return mixed;
  }
  return half_guess_protocol(f, eps);
}

}  // namespace infotrade
