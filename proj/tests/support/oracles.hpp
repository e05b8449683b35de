// Test-only reference implementations. Deliberately naive: direct sums and
// exhaustive scans, sharing no code paths with the library algorithms.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "tslab/field.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline double dft_omega(std::size_t k, std::size_t n, double dt) {
  const double half = std::floor(static_cast<double>(n) / 2.0);
  return (static_cast<double>(k) - half) * 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
}

// u~[i,k] = dt sum_j u[i,j] exp(+i w_k t_j)
inline std::vector<cplx> naive_time_fourier(const tslab::SpaceTimeField& u) {
  const std::size_t nt = u.cols();
  const double dt = u.tgrid().step();
  std::vector<cplx> out(u.rows() * nt);
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t k = 0; k < nt; ++k) {
      const double w = dft_omega(k, nt, dt);
      cplx acc{};
      for (std::size_t j = 0; j < nt; ++j) acc += u(i, j) * std::polar(1.0, w * u.tgrid().coordinate(j));
      out[i * nt + k] = dt * acc;
    }
  }
  return out;
}

// u[i,j] = dw / (2 pi) sum_k f[i,k] exp(-i w_k t_j)
inline std::vector<cplx> naive_inverse(const tslab::SpaceFreqField& f, const tslab::AxisGrid& tgrid) {
  const std::size_t n = f.cols();
  const double dw = f.wgrid().step();
  std::vector<cplx> out(f.rows() * tgrid.count());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < tgrid.count(); ++j) {
      cplx acc{};
      for (std::size_t k = 0; k < n; ++k) acc += f(i, k) * std::polar(1.0, -f.wgrid().coordinate(k) * tgrid.coordinate(j));
      out[i * tgrid.count() + j] = dw / (2.0 * std::numbers::pi) * acc;
    }
  }
  return out;
}

// Per-column linear convolution times dw; row-major, width nf + ng - 1.
inline std::vector<cplx> naive_partial_convolution(const tslab::SpaceFreqField& f, const tslab::SpaceFreqField& g) {
  const std::size_t nf = f.cols(), ng = g.cols(), n = nf + ng - 1;
  const double dw = f.wgrid().step();
  std::vector<cplx> out(f.rows() * n);
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t a = 0; a < nf; ++a) {
      for (std::size_t b = 0; b < ng; ++b) out[i * n + a + b] += f(i, a) * g(i, b) * dw;
    }
  }
  return out;
}

// Extended reals as doubles with real infinities. Only used inside tests.
constexpr double kInf = std::numeric_limits<double>::infinity();

struct ScanBounds {
  std::vector<double> lo, hi;  // +inf / -inf on empty columns
};

inline ScanBounds scan_bounds(const std::vector<cplx>& v, std::size_t rows, std::size_t cols, double w0, double dw,
                              double rel) {
  double peak = 0.0;
  for (const cplx& z : v) peak = std::max(peak, std::abs(z));
  ScanBounds b{std::vector<double>(rows, kInf), std::vector<double>(rows, -kInf)};
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      if (peak > 0 && std::abs(v[i * cols + k]) > rel * peak) {
        const double w = w0 + dw * static_cast<double>(k);
        b.lo[i] = std::min(b.lo[i], w);
        b.hi[i] = std::max(b.hi[i], w);
      }
    }
  }
  return b;
}

inline ScanBounds scan_bounds(const tslab::SpaceFreqField& f, double rel) {
  return scan_bounds(std::vector<cplx>(f.values().begin(), f.values().end()), f.rows(), f.cols(), f.wgrid().origin(),
                     f.wgrid().step(), rel);
}

// Smallest open neighbourhood of i in the alternating lattice topology.
inline std::vector<std::size_t> open_hull(std::size_t i, std::size_t n, std::size_t r) {
  if (i % (2 * r) != 0) return {i};
  std::vector<std::size_t> out;
  for (std::size_t j = (i >= r ? i - r : 0); j <= std::min(n - 1, i + r); ++j) out.push_back(j);
  return out;
}

inline bool is_lsc(const std::vector<double>& q, std::size_t r) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j : open_hull(i, q.size(), r)) {
      if (q[j] < q[i]) return false;
    }
  }
  return true;
}

// Largest lower semicontinuous minorant by exhaustion over all functions with
// values in the value set of p (the envelope takes values there).
inline std::vector<double> brute_lower_envelope(const std::vector<double>& p, std::size_t r) {
  std::vector<double> vals(p.begin(), p.end());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  const std::size_t n = p.size();
  std::vector<double> best(n, -kInf);
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    std::vector<double> q(n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      q[i] = vals[idx[i]];
      ok = q[i] <= p[i];
    }
    if (ok && is_lsc(q, r)) {
      for (std::size_t i = 0; i < n; ++i) best[i] = std::max(best[i], q[i]);
    }
    std::size_t d = 0;
    while (d < n && ++idx[d] == vals.size()) idx[d++] = 0;
    if (d == n) break;
  }
  return best;
}

// Second-order central difference residual of i u_t + u_xx + 2 |u|^2 u at (x, t).
template <typename U>
double nls_fd_residual(U u, double x, double t, double h) {
  const cplx ut = (u(x, t + h) - u(x, t - h)) / (2.0 * h);
  const cplx uxx = (u(x + h, t) - 2.0 * u(x, t) + u(x - h, t)) / (h * h);
  const cplx v = u(x, t);
  return std::abs(cplx(0, 1) * ut + uxx + 2.0 * std::norm(v) * v);
}

inline double rel_l2(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return std::sqrt(num / den);
}

inline double max_rel_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(b[i]));
  }
  return num / den;
}

inline std::vector<cplx> random_values(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(n);
  for (cplx& z : v) z = cplx(g(rng), g(rng));
  return v;
}

}  // namespace oracle
