#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace stretchalign {

/// Exact non-negative integer of unbounded magnitude.
///
/// Gap costs are sums of 2^(G-1) whose exponents routinely reach the length
/// of the input sequences (thousands), far past what a double or a machine
/// word can hold, so the accumulator must be exact. Only the operations the
/// cost accounting needs are provided: addition, comparison, bit queries,
/// a small-scalar multiply, log2 for display, and decimal rendering.
class CostValue {
 public:
  CostValue() = default;
  explicit CostValue(std::uint64_t value);

  static CostValue pow2(std::size_t exponent);

  CostValue& operator+=(const CostValue& rhs);
  friend CostValue operator+(CostValue lhs, const CostValue& rhs) {
    lhs += rhs;
    return lhs;
  }

  // *this += 2^exponent
  void add_pow2(std::size_t exponent);

  // Exact product with a small scalar.
  CostValue times(std::uint64_t factor) const;

  bool is_zero() const { return limbs_.empty(); }
  bool single_bit() const;
  // Position of the highest set bit plus one; 0 for zero.
  std::size_t bit_length() const;

  friend std::strong_ordering operator<=>(const CostValue& a, const CostValue& b);
  friend bool operator==(const CostValue& a, const CostValue& b) {
    return a.limbs_ == b.limbs_;
  }

  // log2 of the value, computed from the top 64 significant bits and the bit
  // length. Requires a non-zero value.
  double log2() const;

  std::string to_decimal() const;

 private:
  // Little-endian base-2^64 digits, no trailing zero limbs.
  std::vector<std::uint64_t> limbs_;
};

/// Cost of one maximal run of G consecutive gaps: 0 for G = 0 (a match costs
/// nothing), otherwise exactly 2^(G-1).
CostValue run_cost(std::size_t gap_run_length);

/// log2(numerator / denominator) to within 0.005. A zero numerator yields the
/// display sentinel 0; callers that must distinguish a zero cost from a cost
/// of exactly 1 check CostValue::is_zero separately.
double cost_log2(const CostValue& numerator, std::size_t denominator);

}  // namespace stretchalign
