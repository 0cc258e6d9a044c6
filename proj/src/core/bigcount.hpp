#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace defcalc {

// Arbitrary-size natural number, just big enough for exact cardinality
// bookkeeping (p^(k*M) grows past 2^64 quickly).  Little-endian limbs in
// base 10^9 so printing is direct.
class BigCount {
public:
  BigCount() : limbs_{0} {}
  static BigCount from_u64(std::uint64_t v);
  static BigCount power(std::uint64_t base, std::uint64_t exponent);

  BigCount& mul_u64(std::uint64_t v);
  BigCount operator*(const BigCount& other) const;
  BigCount pow(std::uint64_t exponent) const;

  bool operator==(const BigCount& other) const { return limbs_ == other.limbs_; }
  bool operator!=(const BigCount& other) const { return !(*this == other); }

  // Exact value if it fits in 64 bits.
  std::optional<std::uint64_t> as_u64() const;

  std::string to_string() const;

private:
  std::vector<std::uint32_t> limbs_; // base 1e9, little endian, no leading zeros (except the value 0)
  void trim();
};

} // namespace defcalc
