#include "stretchalign/cost.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace stretchalign {

CostValue::CostValue(std::uint64_t value) {
  if (value != 0) limbs_.push_back(value);
}

CostValue CostValue::pow2(std::size_t exponent) {
  CostValue r;
  r.limbs_.assign(exponent / 64 + 1, 0);
  r.limbs_.back() = std::uint64_t{1} << (exponent % 64);
  return r;
}

void CostValue::add_pow2(std::size_t exponent) {
  const std::size_t idx = exponent / 64;
  if (limbs_.size() < idx + 1) limbs_.resize(idx + 1, 0);
  std::uint64_t carry = std::uint64_t{1} << (exponent % 64);
  for (std::size_t k = idx; carry != 0; ++k) {
    if (k == limbs_.size()) {
      limbs_.push_back(carry);
      return;
    }
    const std::uint64_t old = limbs_[k];
    limbs_[k] = old + carry;
    carry = limbs_[k] < old ? 1 : 0;
  }
}

CostValue& CostValue::operator+=(const CostValue& rhs) {
  if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t k = 0; k < rhs.limbs_.size(); ++k) {
    const std::uint64_t a = limbs_[k];
    const std::uint64_t sum = a + rhs.limbs_[k];
    const std::uint64_t overflow = sum < a ? 1 : 0;
    limbs_[k] = sum + carry;
    carry = overflow | (limbs_[k] < sum ? 1 : 0);
  }
  for (std::size_t k = rhs.limbs_.size(); carry != 0 && k < limbs_.size(); ++k) {
    ++limbs_[k];
    carry = limbs_[k] == 0 ? 1 : 0;
  }
  if (carry != 0) limbs_.push_back(1);
  return *this;
}

CostValue CostValue::times(std::uint64_t factor) const {
  CostValue r;
  if (is_zero() || factor == 0) return r;
  r.limbs_.reserve(limbs_.size() + 1);
  unsigned __int128 carry = 0;
  for (const std::uint64_t limb : limbs_) {
    const unsigned __int128 cur = static_cast<unsigned __int128>(limb) * factor + carry;
    r.limbs_.push_back(static_cast<std::uint64_t>(cur));
    carry = cur >> 64;
  }
  if (carry != 0) r.limbs_.push_back(static_cast<std::uint64_t>(carry));
  return r;
}

bool CostValue::single_bit() const {
  int bits = 0;
  for (const std::uint64_t limb : limbs_) {
    bits += std::popcount(limb);
    if (bits > 1) return false;
  }
  return bits == 1;
}

std::size_t CostValue::bit_length() const {
  if (limbs_.empty()) return 0;
  const std::size_t top = limbs_.size() - 1;
  return top * 64 + (64 - static_cast<std::size_t>(std::countl_zero(limbs_[top])));
}

std::strong_ordering operator<=>(const CostValue& a, const CostValue& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
  for (std::size_t k = a.limbs_.size(); k-- > 0;) {
    if (a.limbs_[k] != b.limbs_[k]) return a.limbs_[k] <=> b.limbs_[k];
  }
  return std::strong_ordering::equal;
}

double CostValue::log2() const {
  assert(!is_zero());
  const std::size_t n = bit_length();
  if (n <= 64) {
    return static_cast<double>(std::log2l(static_cast<long double>(limbs_[0])));
  }
  const std::size_t top = limbs_.size() - 1;
  const unsigned top_bits = static_cast<unsigned>(n - top * 64);  // 1..64
  std::uint64_t mantissa;
  if (top_bits == 64) {
    mantissa = limbs_[top];
  } else {
    mantissa = (limbs_[top] << (64 - top_bits)) | (limbs_[top - 1] >> top_bits);
  }
  // value ~= mantissa * 2^(n - 64); truncating below the top 64 bits shifts
  // log2 by less than 2^-63.
  const long double l = std::log2l(static_cast<long double>(mantissa)) +
                        static_cast<long double>(n) - 64.0L;
  return static_cast<double>(l);
}

std::string CostValue::to_decimal() const {
  if (is_zero()) return "0";
  constexpr std::uint64_t kChunk = 10'000'000'000'000'000'000ULL;  // 10^19 < 2^64
  std::vector<std::uint64_t> work(limbs_);
  std::string out;
  while (!work.empty()) {
    unsigned __int128 rem = 0;
    for (std::size_t k = work.size(); k-- > 0;) {
      const unsigned __int128 cur = (rem << 64) | work[k];
      work[k] = static_cast<std::uint64_t>(cur / kChunk);
      rem = cur % kChunk;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    const auto part = static_cast<std::uint64_t>(rem);
    if (work.empty()) {
      out.insert(0, std::to_string(part));
    } else {
      char buf[24];
      std::snprintf(buf, sizeof buf, "%019llu", static_cast<unsigned long long>(part));
      out.insert(0, buf);
    }
  }
  return out;
}

CostValue run_cost(std::size_t gap_run_length) {
  if (gap_run_length == 0) return CostValue{};
  return CostValue::pow2(gap_run_length - 1);
}

double cost_log2(const CostValue& numerator, std::size_t denominator) {
  if (denominator == 0) throw std::invalid_argument("cost_log2: zero denominator");
  if (numerator.is_zero()) return 0.0;
  return numerator.log2() - std::log2(static_cast<double>(denominator));
}

}  // namespace stretchalign
