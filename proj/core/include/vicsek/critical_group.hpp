#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vicsek/graph.hpp"
#include "vicsek/rational.hpp"
#include "vicsek/sandpile.hpp"

namespace vicsek {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Non-decreasing d_1 | d_2 | ... | d_r, unit factors included.
using InvariantFactors = std::vector<BigInt>;

/// Graph Laplacian with the sink row and column removed, canonical order.
IntegerMatrix reduced_laplacian(const Graph& g);

/// Invariant factors of a square non-singular matrix. Elimination pivots on
/// the least absolute value; the diagonal is then normalized into a
/// divisibility chain with gcd/lcm exchanges. Throws SingularError.
InvariantFactors smith_normal_form(IntegerMatrix m);

/// Invariant factors of the sandpile group of the level-n Vicsek graph.
InvariantFactors group_structure(int level);

/// Product of the factors (the group order / spanning tree count).
BigInt group_order(const InvariantFactors& f);

/// Number of elements g with 2g = 0: product of gcd(d, 2).
BigInt order2_count(const InvariantFactors& f);
BigInt order2_count(int level);

/// Smallest k >= 1 with the k-fold sum of eta equal to `identity`. Orders
/// 1, 2, 4 are checked by doubling first; other orders fall back to a
/// linear scan bounded by `limit` (VerificationError when exceeded).
/// Throws DomainError for non-recurrent eta.
std::uint64_t element_order(const Graph& g, const SandpileConfig& eta, const SandpileConfig& identity,
                            std::uint64_t limit = 1u << 20);

struct SinkHitEstimate {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
};

/// Fraction of uniform recurrent eta for which eta + k delta_x sends at
/// least one particle to the sink during stabilization.
SinkHitEstimate sink_hit_probability(const Graph& g, Coord x, std::int64_t k, std::uint64_t samples,
                                     std::uint64_t seed, unsigned workers = 0);

}  // namespace vicsek
