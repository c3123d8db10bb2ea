#include "infotrade/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "infotrade/errors.hpp"

namespace infotrade {

namespace {

void check_mass(std::size_t rows, std::size_t cols, const std::vector<double>& mass) {
  if (rows == 0 || cols == 0) throw DimensionError("measure needs at least one row and column");
  if (mass.size() != rows * cols) {
    throw DimensionError("measure mass has " + std::to_string(mass.size()) + " entries, expected " +
                         std::to_string(rows * cols));
  }
  double total = 0.0;
  for (double m : mass) {
    if (!std::isfinite(m) || m < 0.0) throw DomainError("measure entries must be finite and nonnegative");
    total += m;
  }
  if (std::abs(total - 1.0) > kConservationTolerance) {
    throw DomainError("measure mass sums to " + std::to_string(total) + ", not 1");
  }
}

}  // namespace

Measure::Measure(std::size_t rows, std::size_t cols, std::vector<double> mass)
    : rows_(rows), cols_(cols), mass_(std::move(mass)) {
  check_mass(rows_, cols_, mass_);
}

Measure Measure::normalized(std::size_t rows, std::size_t cols, std::vector<double> weights) {
  if (weights.size() != rows * cols) throw DimensionError("weight count does not match rows*cols");
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw DomainError("weights must be finite and nonnegative");
    total += w;
  }
  if (!(total > 0.0)) throw DomainError("weights have zero total mass");
  for (double& w : weights) w /= total;
  return Measure(rows, cols, std::move(weights));
}

Measure Measure::uniform(std::size_t rows, std::size_t cols) {
  return normalized(rows, cols, std::vector<double>(rows * cols, 1.0));
}

Measure Measure::from_matrix(const std::vector<std::vector<double>>& matrix) {
  if (matrix.empty()) throw DimensionError("empty matrix");
  const std::size_t cols = matrix.front().size();
  std::vector<double> mass;
  mass.reserve(matrix.size() * cols);
  for (const auto& row : matrix) {
    if (row.size() != cols) throw DimensionError("ragged measure matrix");
    mass.insert(mass.end(), row.begin(), row.end());
  }
  return Measure(matrix.size(), cols, std::move(mass));
}

std::vector<InputPair> Measure::support() const {
  std::vector<InputPair> out;
  for (std::size_t x = 0; x < rows_; ++x)
    for (std::size_t y = 0; y < cols_; ++y)
      if (in_support(x, y)) out.push_back({x, y});
  return out;
}

std::vector<double> Measure::row_marginal() const {
  std::vector<double> out(rows_, 0.0);
  for (std::size_t x = 0; x < rows_; ++x)
    for (std::size_t y = 0; y < cols_; ++y) out[x] += (*this)(x, y);
  return out;
}

std::vector<double> Measure::col_marginal() const {
  std::vector<double> out(cols_, 0.0);
  for (std::size_t x = 0; x < rows_; ++x)
    for (std::size_t y = 0; y < cols_; ++y) out[y] += (*this)(x, y);
  return out;
}

Marginals marginals(const Measure& mu) { return {mu.row_marginal(), mu.col_marginal()}; }

Measure scale_rectangle(const Measure& mu, std::span<const double> row_weights,
                        std::span<const double> col_weights) {
  if (row_weights.size() != mu.rows() || col_weights.size() != mu.cols()) {
    throw DimensionError("rectangle weights do not match the measure");
  }
  std::vector<double> w(mu.rows() * mu.cols());
  double total = 0.0;
  for (std::size_t x = 0; x < mu.rows(); ++x) {
    if (row_weights[x] < 0.0) throw DomainError("negative row weight");
    for (std::size_t y = 0; y < mu.cols(); ++y) {
      if (col_weights[y] < 0.0) throw DomainError("negative column weight");
      w[x * mu.cols() + y] = mu(x, y) * row_weights[x] * col_weights[y];
      total += w[x * mu.cols() + y];
    }
  }
  if (!(total > 0.0)) throw DomainError("rescaled rectangle has no mass");
  for (double& v : w) v /= total;
  return Measure(mu.rows(), mu.cols(), std::move(w));
}

Measure product(std::span<const double> mu1, std::span<const double> mu2) {
  if (mu1.empty() || mu2.empty()) throw DimensionError("product of empty vectors");
  std::vector<double> mass;
  mass.reserve(mu1.size() * mu2.size());
  for (double a : mu1)
    for (double b : mu2) mass.push_back(a * b);
  return Measure(mu1.size(), mu2.size(), std::move(mass));
}

namespace {

constexpr std::size_t kSingletons[3] = {4, 2, 1};  // "100", "010", "001"

std::size_t disj_side(int blocks, int max_blocks) {
  if (blocks < 1) throw DomainError("disjointness needs at least one block");
  if (blocks > max_blocks) {
    throw ResourceError("disjointness with " + std::to_string(blocks) + " blocks exceeds the limit of " +
                        std::to_string(max_blocks));
  }
  std::size_t side = 1;
  for (int i = 0; i < blocks; ++i) side *= 8;
  return side;
}

}  // namespace

Measure disj_hard_measure(int blocks, int max_blocks) {
  const std::size_t side = disj_side(blocks, max_blocks);
  // Enumerate the 6^k supported pairs: each block picks an ordered pair of distinct singletons.
  std::vector<double> mass(side * side, 0.0);
  std::size_t count = 1;
  for (int i = 0; i < blocks; ++i) count *= 6;
  const double weight = 1.0 / static_cast<double>(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::size_t rest = code;
    std::size_t x = 0, y = 0, place = 1;
    for (int j = 0; j < blocks; ++j) {
      const std::size_t pick = rest % 6;
      rest /= 6;
      const std::size_t a = pick / 2;
      const std::size_t b = (a + 1 + pick % 2) % 3;
      x += kSingletons[a] * place;
      y += kSingletons[b] * place;
      place *= 8;
    }
    mass[x * side + y] = weight;
  }
  return Measure::normalized(side, side, std::move(mass));
}

FunctionTable::FunctionTable(std::size_t rows, std::size_t cols, int alphabet, std::vector<int> outputs)
    : rows_(rows), cols_(cols), alphabet_(alphabet), outputs_(std::move(outputs)) {
  if (rows_ == 0 || cols_ == 0) throw DimensionError("function table needs at least one row and column");
  if (outputs_.size() != rows_ * cols_) throw DimensionError("function table size does not match rows*cols");
  if (alphabet_ < 1) throw DomainError("output alphabet must have at least one symbol");
  for (int z : outputs_) {
    if (z < 0 || z >= alphabet_) throw DomainError("function output " + std::to_string(z) + " outside alphabet");
  }
}

FunctionTable FunctionTable::from_matrix(const std::vector<std::vector<int>>& matrix, int alphabet) {
  if (matrix.empty()) throw DimensionError("empty matrix");
  const std::size_t cols = matrix.front().size();
  std::vector<int> out;
  int top = 0;
  for (const auto& row : matrix) {
    if (row.size() != cols) throw DimensionError("ragged function matrix");
    for (int z : row) top = std::max(top, z);
    out.insert(out.end(), row.begin(), row.end());
  }
  return FunctionTable(matrix.size(), cols, alphabet > 0 ? alphabet : top + 1, std::move(out));
}

bool FunctionTable::is_constant() const {
  return std::all_of(outputs_.begin(), outputs_.end(), [&](int z) { return z == outputs_.front(); });
}

FunctionTable and_function() { return FunctionTable(2, 2, 2, {0, 0, 0, 1}); }
FunctionTable xor_function() { return FunctionTable(2, 2, 2, {0, 1, 1, 0}); }

FunctionTable constant_function(std::size_t rows, std::size_t cols, int value, int alphabet) {
  return FunctionTable(rows, cols, alphabet, std::vector<int>(rows * cols, value));
}

FunctionTable disjointness_function(int blocks, int max_blocks) {
  const std::size_t side = disj_side(blocks, max_blocks);
  std::vector<int> out(side * side);
  // Base-8 digits are 3-bit blocks, so bitwise AND on the integer codes is set intersection.
  for (std::size_t x = 0; x < side; ++x)
    for (std::size_t y = 0; y < side; ++y) out[x * side + y] = (x & y) == 0 ? 1 : 0;
  return FunctionTable(side, side, 2, std::move(out));
}

void require_same_space(const FunctionTable& f, const Measure& mu) {
  if (f.rows() != mu.rows() || f.cols() != mu.cols()) {
    throw DimensionError("function table is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                         " but measure is " + std::to_string(mu.rows()) + "x" + std::to_string(mu.cols()));
  }
}

}  // namespace infotrade
