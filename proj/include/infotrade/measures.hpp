#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace infotrade {

inline constexpr double kConservationTolerance = 1e-12;
inline constexpr double kLoadTolerance = 1e-9;

struct InputPair {
  std::size_t x = 0;
  std::size_t y = 0;

  friend bool operator==(const InputPair&, const InputPair&) = default;
  friend auto operator<=>(const InputPair&, const InputPair&) = default;
};

/// Joint prior on X x Y, stored densely in row-major order.
///
/// Construction validates nonnegativity and that the total mass is 1 within
/// kConservationTolerance; the value is immutable afterwards.
class Measure {
 public:
  Measure(std::size_t rows, std::size_t cols, std::vector<double> mass);

  /// Builds a measure from arbitrary nonnegative weights by dividing by their sum.
  static Measure normalized(std::size_t rows, std::size_t cols, std::vector<double> weights);
  static Measure uniform(std::size_t rows, std::size_t cols);
  static Measure from_matrix(const std::vector<std::vector<double>>& matrix);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t x, std::size_t y) const { return mass_[x * cols_ + y]; }
  std::span<const double> mass() const noexcept { return mass_; }

  bool in_support(std::size_t x, std::size_t y) const { return (*this)(x, y) > 0.0; }
  std::vector<InputPair> support() const;
  std::vector<double> row_marginal() const;
  std::vector<double> col_marginal() const;

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> mass_;
};

struct Marginals {
  std::vector<double> rows;
  std::vector<double> cols;
};

Marginals marginals(const Measure& mu);

// mass(x,y) proportional to mu(x,y) * row_weights[x] * col_weights[y].
// Throws DomainError when the rescaled mass vanishes (empty rectangle).
Measure scale_rectangle(const Measure& mu, std::span<const double> row_weights,
                        std::span<const double> col_weights);

Measure product(std::span<const double> mu1, std::span<const double> mu2);

inline constexpr int kDisjMaxBlocks = 2;

/// k-fold tensor power of the uniform measure on the six pairs of distinct
/// singletons of {1,2,3}. Inputs are 3k-bit strings; block j sits in base-8
/// digit j and the string b1b2b3 maps to 4*b1 + 2*b2 + b3.
Measure disj_hard_measure(int blocks, int max_blocks = kDisjMaxBlocks);

/// f: X x Y -> Z with Z = {0, ..., alphabet-1}.
class FunctionTable {
 public:
  FunctionTable(std::size_t rows, std::size_t cols, int alphabet, std::vector<int> outputs);
  // alphabet <= 0 means "max entry + 1".
  static FunctionTable from_matrix(const std::vector<std::vector<int>>& matrix, int alphabet = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int alphabet() const noexcept { return alphabet_; }
  int operator()(std::size_t x, std::size_t y) const { return outputs_[x * cols_ + y]; }
  std::span<const int> outputs() const noexcept { return outputs_; }
  bool is_constant() const;

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  int alphabet_;
  std::vector<int> outputs_;
};

FunctionTable and_function();
FunctionTable xor_function();
FunctionTable constant_function(std::size_t rows, std::size_t cols, int value, int alphabet = 2);
// f(x,y) = 1 iff the 3k-bit sets x and y are disjoint.
FunctionTable disjointness_function(int blocks, int max_blocks = kDisjMaxBlocks);

// Throws DimensionError unless f and mu share the input space.
void require_same_space(const FunctionTable& f, const Measure& mu);

}  // namespace infotrade
