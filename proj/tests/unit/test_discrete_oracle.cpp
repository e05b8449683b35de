#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "tslab/int_seq.hpp"
#include "tslab/support.hpp"

using namespace tslab;

namespace {

IntSeq random_seq(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 12), off(-50, 50), val(-9, 9);
  std::vector<std::int64_t> c(static_cast<std::size_t>(len(rng)));
  for (auto& v : c) v = val(rng);
  c.front() = c.front() == 0 ? 3 : c.front();
  c.back() = c.back() == 0 ? -2 : c.back();
  return IntSeq(off(rng), c);
}

}  // namespace

TEST_CASE("construction trims zeros") {
  const IntSeq s(4, {0, 0, 5, 0, 7, 0});
  CHECK(s.offset() == 6);
  CHECK(s.coeffs() == std::vector<std::int64_t>{5, 0, 7});
  CHECK(s.min_support() == 6);
  CHECK(s.max_support() == 8);
  const IntSeq z(3, {0, 0});
  CHECK(z.is_zero());
  CHECK_FALSE(z.min_support().has_value());
  CHECK(z == IntSeq());
}

TEST_CASE("delta and hand-multiplied examples") {
  CHECK(conv(IntSeq(2, {1}), IntSeq(3, {1})) == IntSeq(5, {1}));
  const IntSeq p = conv(IntSeq(0, {1, 1}), IntSeq(0, {1, -1}));
  CHECK(p.offset() == 0);
  CHECK(p.coeffs() == std::vector<std::int64_t>{1, 0, -1});
  CHECK(p.min_support() == 0);
  CHECK(p.max_support() == 2);
  CHECK(conv(IntSeq(), IntSeq(1, {4})).is_zero());
}

TEST_CASE("support additivity on random pairs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntSeq a = random_seq(rng), b = random_seq(rng);
    const IntSeq c = conv(a, b);
    CHECK(*c.min_support() == *a.min_support() + *b.min_support());
    CHECK(*c.max_support() == *a.max_support() + *b.max_support());
    CHECK(c.coeffs().front() == a.coeffs().front() * b.coeffs().front());
  }
}

TEST_CASE("overflow is detected, and the arbitrary-precision path is exact") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2;
  const IntSeq a(0, {big, 1}), b(0, {3, 1});
  CHECK_THROWS_AS(conv(a, b), std::overflow_error);
  const BigIntSeq c = conv_exact(a, b);
  using boost::multiprecision::cpp_int;
  CHECK(c.coeffs().front() == cpp_int(big) * 3);
  CHECK(c.max_support() == 2);
  CHECK(conv_exact(IntSeq(0, {2}), IntSeq(1, {3})) == widen(IntSeq(1, {6})));
}

TEST_CASE("partial_convolution reproduces the integer convolution up to dw") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const IntSeq a = random_seq(rng), b = random_seq(rng);
    const IntSeq c = conv(a, b);
    const double dw = 0.25;
    // Two identical columns: the x axis needs at least two points.
    auto embed = [&](const IntSeq& s) {
      const std::size_t n = std::max<std::size_t>(s.coeffs().size(), 2);
      std::vector<cplx> v(2 * n);
      for (std::size_t j = 0; j < s.coeffs().size(); ++j) v[j] = v[n + j] = static_cast<double>(s.coeffs()[j]);
      return SpaceFreqField(AxisGrid(0.0, 1.0, 2), AxisGrid(dw * static_cast<double>(s.offset()), dw, n), v);
    };
    const SpaceFreqField h = partial_convolution(embed(a), embed(b));
    CHECK(h.wgrid().origin() == doctest::Approx(dw * static_cast<double>(c.offset())));
    double scale = 0.0;
    for (auto v : c.coeffs()) scale = std::max(scale, std::abs(static_cast<double>(v)));
    for (std::size_t row = 0; row < 2; ++row) {
      for (std::size_t k = 0; k < h.cols(); ++k) {
        const double expect = k < c.coeffs().size() ? static_cast<double>(c.coeffs()[k]) * dw : 0.0;
        CHECK(std::abs(h(row, k) - expect) <= 1e-12 * scale * dw);
      }
    }
  }
}
