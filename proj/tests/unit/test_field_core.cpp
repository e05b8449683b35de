#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "tslab/errors.hpp"
#include "tslab/field_io.hpp"
#include "tslab/fourier.hpp"

using namespace tslab;
using oracle::cplx;

namespace {

SpaceTimeField random_time_field(std::mt19937_64& rng, std::size_t nx, std::size_t nt, double t0 = -1.3, double dt = 0.25) {
  return SpaceTimeField(AxisGrid(0.0, 0.5, nx), AxisGrid(t0, dt, nt), oracle::random_values(rng, nx * nt));
}

double energy(std::span<const cplx> v) {
  double e = 0.0;
  for (const cplx& z : v) e += std::norm(z);
  return e;
}

}  // namespace

TEST_CASE("AxisGrid invariants") {
  CHECK_THROWS_AS(AxisGrid(0.0, 0.0, 4), InvalidInput);
  CHECK_THROWS_AS(AxisGrid(0.0, -1.0, 4), InvalidInput);
  CHECK_THROWS_AS(AxisGrid(0.0, 1.0, 1), InvalidInput);
  const AxisGrid g(-2.0, 0.5, 9);
  CHECK(g.back() == doctest::Approx(2.0));
  CHECK(g.is_symmetric());
  CHECK(g.lattice_index(0.5) == 5u);
  CHECK_FALSE(g.lattice_index(0.3).has_value());
  CHECK_FALSE(AxisGrid(0.0, 1.0, 4).is_symmetric());

  const std::vector<double> uneven{0.0, 1.0, 2.5};
  CHECK_THROWS_AS(AxisGrid::from_coordinates(uneven), InvalidInput);
  const std::vector<double> even{1.0, 1.5, 2.0, 2.5};
  CHECK(AxisGrid::from_coordinates(even).same_as(AxisGrid(1.0, 0.5, 4)));
}

TEST_CASE("fields reject bad shapes and non-finite values") {
  const AxisGrid g(0.0, 1.0, 2);
  CHECK_THROWS_AS(SpaceTimeField(g, g, std::vector<cplx>(3)), InvalidInput);
  std::vector<cplx> v(4);
  v[2] = cplx(std::nan(""), 0.0);
  CHECK_THROWS_AS(SpaceTimeField(g, g, v), InvalidInput);
}

TEST_CASE("time_fourier of a constant lands in the zero bin") {
  const AxisGrid xg(0.0, 1.0, 3), tg(0.0, 0.1, 16);
  const SpaceTimeField u(xg, tg, std::vector<cplx>(48, cplx(2.0, -1.0)));
  const SpaceFreqField f = time_fourier(u);
  const std::size_t k0 = *f.wgrid().lattice_index(0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 16; ++k) {
      if (k == k0) {
        CHECK(std::abs(f(i, k) - cplx(2.0, -1.0) * 1.6) < 1e-12);
      } else {
        CHECK(std::abs(f(i, k)) < 1e-12);
      }
    }
  }
}

TEST_CASE("a pure tone exp(-i w0 t) occupies the single column at +w0") {
  const AxisGrid xg(-1.0, 0.5, 5), tg(0.3, 0.2, 20);
  const AxisGrid wg = dft_frequency_grid(tg);
  const std::size_t k0 = 13;
  const double w0 = wg.coordinate(k0);
  std::vector<cplx> v(5 * 20);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 20; ++j) v[i * 20 + j] = (1.0 + i) * std::polar(1.0, -w0 * tg.coordinate(j));
  }
  const SpaceFreqField f = time_fourier(SpaceTimeField(xg, tg, v));
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t k = 0; k < 20; ++k) {
      CHECK(std::abs(f(i, k)) == doctest::Approx(k == k0 ? (1.0 + i) * 4.0 : 0.0).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("time_fourier matches the direct double sum") {
  std::mt19937_64 rng(11);
  for (std::size_t nt : {8u, 9u, 16u, 31u}) {
    const SpaceTimeField u = random_time_field(rng, 8, nt);
    const SpaceFreqField f = time_fourier(u);
    CHECK(oracle::max_rel_diff(f.values(), oracle::naive_time_fourier(u)) < 1e-12);
    for (std::size_t k = 0; k < nt; ++k) CHECK(f.wgrid().coordinate(k) == doctest::Approx(oracle::dft_omega(k, nt, 0.25)));
  }
}

TEST_CASE("inverse_time_fourier inverts and matches the naive inverse") {
  std::mt19937_64 rng(12);
  for (std::size_t nt : {8u, 15u, 64u}) {
    const SpaceTimeField u = random_time_field(rng, 6, nt);
    const SpaceFreqField f = time_fourier(u);
    const SpaceTimeField back = inverse_time_fourier(f, u.tgrid());
    CHECK(oracle::max_rel_diff(back.values(), u.values()) < 1e-12);
    CHECK(oracle::max_rel_diff(back.values(), oracle::naive_inverse(f, u.tgrid())) < 1e-12);
  }
  SUBCASE("delta column gives a pure tone") {
    const AxisGrid xg(0.0, 1.0, 2), tg(0.0, 0.5, 12);
    const AxisGrid wg = dft_frequency_grid(tg);
    std::vector<cplx> v(2 * 12);
    v[0 * 12 + 9] = 1.0;
    v[1 * 12 + 9] = 1.0;
    const SpaceTimeField u = inverse_time_fourier(SpaceFreqField(xg, wg, v), tg);
    const double w0 = wg.coordinate(9);
    for (std::size_t j = 0; j < 12; ++j) {
      const cplx expect = wg.step() / (2.0 * std::numbers::pi) * std::polar(1.0, -w0 * tg.coordinate(j));
      CHECK(std::abs(u(1, j) - expect) < 1e-14);
    }
  }
  const SpaceTimeField u = random_time_field(rng, 2, 8);
  CHECK_THROWS_AS(inverse_time_fourier(time_fourier(u), AxisGrid(0.0, 0.3, 8)), InvalidInput);
}

TEST_CASE("Plancherel and linearity hold on random fields up to 64x64") {
  std::mt19937_64 rng(13);
  for (std::size_t n : {4u, 17u, 32u, 64u}) {
    const SpaceTimeField u = random_time_field(rng, n, n);
    const SpaceFreqField f = time_fourier(u);
    const double lhs = energy(f.values()) * f.wgrid().step();
    const double rhs = 2.0 * std::numbers::pi * energy(u.values()) * u.tgrid().step();
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);

    const SpaceTimeField v = random_time_field(rng, n, n);
    const cplx a(0.3, -1.2), b(-2.0, 0.5);
    std::vector<cplx> mix(n * n);
    for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = a * u.values()[i] + b * v.values()[i];
    const SpaceFreqField fm = time_fourier(SpaceTimeField(u.xgrid(), u.tgrid(), mix));
    const SpaceFreqField fv = time_fourier(v);
    std::vector<cplx> expect(n * n);
    for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = a * f.values()[i] + b * fv.values()[i];
    CHECK(oracle::max_rel_diff(fm.values(), expect) < 1e-12);
  }
}

TEST_CASE("sharp is an isometric involution matching conjugation in time") {
  std::mt19937_64 rng(14);
  for (std::size_t nt : {9u, 21u, 33u}) {
    const SpaceTimeField u = random_time_field(rng, 5, nt, 0.0, 0.1);
    const SpaceFreqField f = time_fourier(u);
    REQUIRE(f.wgrid().is_symmetric());
    const SpaceFreqField s = sharp(f);
    CHECK(oracle::max_rel_diff(sharp(s).values(), f.values()) == 0.0);
    CHECK(s.l2_norm() == doctest::Approx(f.l2_norm()).epsilon(1e-14));
    CHECK(oracle::max_rel_diff(s.values(), time_fourier(conjugate(u)).values()) < 1e-12);
  }
  SUBCASE("real even field is fixed") {
    const AxisGrid xg(0.0, 1.0, 3), wg(-2.0, 1.0, 5);
    std::vector<cplx> v{1, 2, 3, 2, 1, 0, 5, 0, 5, 0, 4, 4, 4, 4, 4};
    const SpaceFreqField f(xg, wg, v);
    CHECK(oracle::max_rel_diff(sharp(f).values(), f.values()) == 0.0);
  }
  SUBCASE("asymmetric frequency grid is rejected") {
    const SpaceFreqField f(AxisGrid(0.0, 1.0, 2), AxisGrid(-1.0, 1.0, 4));
    CHECK_THROWS_AS(sharp(f), InvalidInput);
  }
}

TEST_CASE("support_mask") {
  const AxisGrid xg(0.0, 1.0, 4), wg(-1.5, 1.0, 4);
  SUBCASE("zero field gives an empty mask") {
    CHECK(support_mask(SpaceFreqField(xg, wg), 0.0).popcount() == 0);
  }
  SUBCASE("single entry is a singleton for every threshold below one") {
    std::vector<cplx> v(16);
    v[6] = cplx(0.0, -3.0);
    for (double rel : {0.0, 1e-8, 0.5, 0.999}) {
      const SupportMask m = support_mask(SpaceFreqField(xg, wg, v), rel);
      CHECK(m.popcount() == 1);
      CHECK(m(1, 2));
      CHECK(m.threshold_used() == rel);
    }
  }
  SUBCASE("tone plus tiny noise keeps one column") {
    std::mt19937_64 rng(15);
    std::vector<cplx> v = oracle::random_values(rng, 16);
    for (cplx& z : v) z *= 1e-9;
    for (std::size_t i = 0; i < 4; ++i) v[i * 4 + 2] += 1.0;
    const SupportMask m = support_mask(SpaceFreqField(xg, wg, v), 1e-6);
    CHECK(m.popcount() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(m(i, 2));
  }
  CHECK_THROWS_AS(support_mask(SpaceFreqField(xg, wg), 1.0), InvalidInput);
  CHECK_THROWS_AS(support_mask(SpaceFreqField(xg, wg), -0.1), InvalidInput);
}

TEST_CASE("field container round trip and CSV") {
  std::mt19937_64 rng(16);
  const SpaceTimeField u = random_time_field(rng, 3, 5);
  std::stringstream ss;
  write_field(ss, u);
  const SpaceTimeField back = read_field<Domain::time>(ss);
  CHECK(back.xgrid().same_as(u.xgrid()));
  CHECK(back.tgrid().same_as(u.tgrid()));
  CHECK(oracle::max_rel_diff(back.values(), u.values()) == 0.0);

  std::stringstream wrong;
  write_field(wrong, u);
  CHECK_THROWS_AS(read_field<Domain::frequency>(wrong), InvalidInput);
  std::stringstream junk("not a field");
  CHECK_THROWS_AS(read_field<Domain::time>(junk), InvalidInput);

  std::stringstream csv;
  write_field_csv(csv, time_fourier(u));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "x,omega,re,im,abs");
  std::size_t lines = 0;
  for (std::string line; std::getline(csv, line);) ++lines;
  CHECK(lines == 15);
}
