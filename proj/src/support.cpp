#include "tslab/support.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fft.hpp"
#include "tslab/errors.hpp"

namespace tslab {

BoundProfile::BoundProfile(AxisGrid grid, std::vector<ExtReal> vals) : xgrid(grid), values(std::move(vals)) {
  if (values.size() != xgrid.count()) throw InvalidInput("BoundProfile: size does not match x grid");
}

BoundProfile operator+(const BoundProfile& p, const BoundProfile& q) {
  if (!p.xgrid.same_as(q.xgrid)) throw InvalidInput("BoundProfile: x grids differ");
  std::vector<ExtReal> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] + q[i];
  return BoundProfile(p.xgrid, std::move(out));
}

std::size_t SigmaSet::cardinality() const {
  return static_cast<std::size_t>(std::count_if(member.begin(), member.end(), [](std::uint8_t c) { return c != 0; }));
}

BoundProfile lower_bound_profile(const SupportMask& m) {
  std::vector<ExtReal> out(m.rows(), ExtReal::pos_inf());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (m(i, k)) {
        out[i] = ExtReal::finite(m.wgrid().coordinate(k));
        break;
      }
    }
  }
  return BoundProfile(m.xgrid(), std::move(out));
}

BoundProfile upper_bound_profile(const SupportMask& m) {
  std::vector<ExtReal> out(m.rows(), ExtReal::neg_inf());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = m.cols(); k-- > 0;) {
      if (m(i, k)) {
        out[i] = ExtReal::finite(m.wgrid().coordinate(k));
        break;
      }
    }
  }
  return BoundProfile(m.xgrid(), std::move(out));
}

SigmaSet sigma_projection(const SupportMask& m) {
  SigmaSet s{std::vector<std::uint8_t>(m.rows(), 0)};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (m(i, k)) {
        s.member[i] = 1;
        break;
      }
    }
  }
  return s;
}

bool is_closed_point(std::size_t i, std::size_t radius) { return i % (2 * radius) == 0; }

namespace {

template <typename Pick>
BoundProfile envelope(const BoundProfile& p, std::size_t radius, Pick pick) {
  if (radius < 1) throw InvalidInput("envelope: radius must be at least 1");
  std::vector<ExtReal> out(p.values);
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; i += 2 * radius) {
    const std::size_t lo = i >= radius ? i - radius : 0;
    const std::size_t hi = std::min(n - 1, i + radius);
    ExtReal acc = p[i];
    for (std::size_t j = lo; j <= hi; ++j) acc = pick(acc, p[j]);
    out[i] = acc;
  }
  return BoundProfile(p.xgrid, std::move(out));
}

}  // namespace

BoundProfile lower_envelope(const BoundProfile& p, std::size_t radius) {
  return envelope(p, radius, [](const ExtReal& a, const ExtReal& b) { return std::min(a, b); });
}

BoundProfile upper_envelope(const BoundProfile& p, std::size_t radius) {
  return envelope(p, radius, [](const ExtReal& a, const ExtReal& b) { return std::max(a, b); });
}

SupportBounds support_bounds(const SupportMask& m, std::size_t radius) {
  return {lower_envelope(lower_bound_profile(m), radius), upper_envelope(upper_bound_profile(m), radius)};
}

SupportBounds support_bounds(const SpaceFreqField& f, double rel_threshold, std::size_t radius) {
  return support_bounds(support_mask(f, rel_threshold), radius);
}

SpaceFreqField partial_convolution(const SpaceFreqField& f, const SpaceFreqField& g) {
  if (!f.xgrid().same_as(g.xgrid())) throw InvalidInput("partial_convolution: x grids differ");
  if (!f.wgrid().same_step(g.wgrid(), 1e-9)) throw InvalidInput("partial_convolution: frequency steps differ");

  const double dw = f.wgrid().step();
  const std::size_t nf = f.cols();
  const std::size_t ng = g.cols();
  const std::size_t n = nf + ng - 1;
  const AxisGrid out_grid(f.wgrid().origin() + g.wgrid().origin(), dw, n);

  detail::FftPlan forward(n, -1);
  detail::FftPlan backward(n, +1);
  std::vector<cplx> a(n), b(n), fa(n), fb(n), prod(n);
  std::vector<cplx> out(f.rows() * n);
  const double scale = dw / static_cast<double>(n);
  for (std::size_t i = 0; i < f.rows(); ++i) {
    std::fill(a.begin(), a.end(), cplx{});
    std::fill(b.begin(), b.end(), cplx{});
    std::copy(f.row(i).begin(), f.row(i).end(), a.begin());
    std::copy(g.row(i).begin(), g.row(i).end(), b.begin());
    forward.execute(a, fa);
    forward.execute(b, fb);
    for (std::size_t k = 0; k < n; ++k) fa[k] *= fb[k];
    backward.execute(fa, prod);
    for (std::size_t k = 0; k < n; ++k) out[i * n + k] = scale * prod[k];
  }
  return SpaceFreqField(f.xgrid(), out_grid, std::move(out));
}

SpaceFreqField moment_multiply(const SpaceFreqField& f, unsigned n) {
  std::vector<cplx> out(f.values().begin(), f.values().end());
  const std::size_t nw = f.cols();
  for (std::size_t k = 0; k < nw; ++k) {
    const double factor = std::pow(f.wgrid().coordinate(k), static_cast<double>(n));
    for (std::size_t i = 0; i < f.rows(); ++i) out[i * nw + k] *= factor;
  }
  return SpaceFreqField(f.xgrid(), f.wgrid(), std::move(out));
}

std::vector<double> triangle_mollifier(std::size_t half_width, double dw) {
  const std::size_t width = 2 * half_width + 1;
  std::vector<double> phi(width);
  for (std::size_t k = 0; k < width; ++k) {
    const double d = std::abs(static_cast<double>(k) - static_cast<double>(half_width));
    phi[k] = static_cast<double>(half_width) + 1.0 - d;
  }
  const double mass = std::accumulate(phi.begin(), phi.end(), 0.0) * dw;
  for (double& v : phi) v /= mass;
  return phi;
}

SpaceFreqField mollify(const SpaceFreqField& f, std::size_t half_width) {
  if (half_width == 0) return f;
  const double dw = f.wgrid().step();
  const std::vector<double> phi = triangle_mollifier(half_width, dw);
  const AxisGrid phi_grid(-static_cast<double>(half_width) * dw, dw, phi.size());
  std::vector<cplx> cols(f.rows() * phi.size());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < phi.size(); ++k) cols[i * phi.size() + k] = phi[k];
  }
  return partial_convolution(f, SpaceFreqField(f.xgrid(), phi_grid, std::move(cols)));
}

}  // namespace tslab
