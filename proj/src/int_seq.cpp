#include "tslab/int_seq.hpp"

#include <stdexcept>

namespace tslab {

template <typename Int>
BasicIntSeq<Int>::BasicIntSeq(std::int64_t offset, std::vector<Int> coeffs) : offset_(offset) {
  std::size_t first = 0;
  while (first < coeffs.size() && coeffs[first] == 0) ++first;
  std::size_t last = coeffs.size();
  while (last > first && coeffs[last - 1] == 0) --last;
  if (first == last) {
    offset_ = 0;
    return;
  }
  if (__builtin_add_overflow(offset, static_cast<std::int64_t>(first), &offset_)) {
    throw std::overflow_error("IntSeq: offset overflow");
  }
  coeffs_.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(first), coeffs.begin() + static_cast<std::ptrdiff_t>(last));
}

template <typename Int>
std::optional<std::int64_t> BasicIntSeq<Int>::min_support() const {
  if (is_zero()) return std::nullopt;
  return offset_;
}

template <typename Int>
std::optional<std::int64_t> BasicIntSeq<Int>::max_support() const {
  if (is_zero()) return std::nullopt;
  std::int64_t out = 0;
  if (__builtin_add_overflow(offset_, static_cast<std::int64_t>(coeffs_.size() - 1), &out)) {
    throw std::overflow_error("IntSeq: index overflow");
  }
  return out;
}

template class BasicIntSeq<std::int64_t>;
template class BasicIntSeq<boost::multiprecision::cpp_int>;

namespace {

std::int64_t joint_offset(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("conv: offset overflow");
  return out;
}

}  // namespace

IntSeq conv(const IntSeq& a, const IntSeq& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<std::int64_t> out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      std::int64_t prod = 0;
      if (__builtin_mul_overflow(x[i], y[j], &prod) || __builtin_add_overflow(out[i + j], prod, &out[i + j])) {
        throw std::overflow_error("conv: 64-bit overflow");
      }
    }
  }
  return IntSeq(joint_offset(a.offset(), b.offset()), std::move(out));
}

BigIntSeq conv(const BigIntSeq& a, const BigIntSeq& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<boost::multiprecision::cpp_int> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return BigIntSeq(joint_offset(a.offset(), b.offset()), std::move(out));
}

BigIntSeq widen(const IntSeq& s) {
  std::vector<boost::multiprecision::cpp_int> c(s.coeffs().begin(), s.coeffs().end());
  return BigIntSeq(s.offset(), std::move(c));
}

BigIntSeq conv_exact(const IntSeq& a, const IntSeq& b) {
  try {
    return widen(conv(a, b));
  } catch (const std::overflow_error&) {
    return conv(widen(a), widen(b));
  }
}

}  // namespace tslab
