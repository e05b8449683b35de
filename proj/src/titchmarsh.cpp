#include "tslab/titchmarsh.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "tslab/errors.hpp"

namespace tslab {

double profile_discrepancy_cells(const BoundProfile& p, const BoundProfile& q, double step) {
  if (p.size() != q.size()) throw InvalidInput("profile_discrepancy_cells: size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_finite() && q[i].is_finite()) {
      worst = std::max(worst, std::abs(p[i].value() - q[i].value()) / step);
    } else if (p[i] != q[i]) {
      return std::numeric_limits<double>::infinity();
    }
  }
  return worst;
}

namespace {

SideReport make_side(char side, BoundProfile lhs, BoundProfile rhs, BoundProfile rhs_swapped, double step, double tol) {
  SideReport r{side, std::move(lhs), std::move(rhs), std::move(rhs_swapped), 0.0, false};
  r.max_discrepancy_cells = std::max(profile_discrepancy_cells(r.lhs, r.rhs, step),
                                     profile_discrepancy_cells(r.lhs, r.rhs_swapped, step));
  r.pass = r.max_discrepancy_cells <= tol;
  return r;
}

}  // namespace

CheckReport titchmarsh_check(const SpaceFreqField& f, const SpaceFreqField& g, const TitchmarshOptions& opts) {
  const SpaceFreqField fg = partial_convolution(f, g);
  const std::size_t r = opts.radius;
  const SupportBounds bf = support_bounds(f, opts.rel_threshold, r);
  const SupportBounds bg = support_bounds(g, opts.rel_threshold, r);
  const SupportBounds bfg = support_bounds(fg, opts.rel_threshold, r);
  const double dw = f.wgrid().step();

  CheckReport rep{make_side('a', bfg.lower, lower_envelope(upper_envelope(bf.lower, r) + bg.lower, r),
                    lower_envelope(bf.lower + upper_envelope(bg.lower, r), r), dw, opts.tol_cells),
                  make_side('b', bfg.upper, upper_envelope(lower_envelope(bf.upper, r) + bg.upper, r),
                    upper_envelope(bf.upper + lower_envelope(bg.upper, r), r), dw, opts.tol_cells),
                  false};
  rep.pass = rep.a.pass && rep.b.pass;
  return rep;
}

void write_profile_csv(std::ostream& out, const BoundProfile& p) {
  out << "x,value\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << p.xgrid.coordinate(i) << ',' << p[i].to_string() << '\n';
}

}  // namespace tslab
