#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tslab {

/// Finitely supported integer sequence: coeffs[j] is the value at index
/// offset + j. Leading and trailing zeros are trimmed on construction, so the
/// stored ends are nonzero unless the sequence is identically zero.
template <typename Int>
class BasicIntSeq {
 public:
  BasicIntSeq() = default;
  BasicIntSeq(std::int64_t offset, std::vector<Int> coeffs);

  std::int64_t offset() const { return offset_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  std::optional<std::int64_t> min_support() const;
  std::optional<std::int64_t> max_support() const;

  friend bool operator==(const BasicIntSeq&, const BasicIntSeq&) = default;

 private:
  std::int64_t offset_ = 0;
  std::vector<Int> coeffs_;
};

using IntSeq = BasicIntSeq<std::int64_t>;
using BigIntSeq = BasicIntSeq<boost::multiprecision::cpp_int>;

/// Exact convolution with checked 64-bit arithmetic; throws
/// std::overflow_error instead of wrapping.
IntSeq conv(const IntSeq& a, const IntSeq& b);

/// Exact convolution in arbitrary precision.
BigIntSeq conv(const BigIntSeq& a, const BigIntSeq& b);

BigIntSeq widen(const IntSeq& s);

/// conv in 64 bits when it fits, arbitrary precision otherwise.
BigIntSeq conv_exact(const IntSeq& a, const IntSeq& b);

}  // namespace tslab
