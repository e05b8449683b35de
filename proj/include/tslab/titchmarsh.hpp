#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <string>

#include "tslab/support.hpp"

namespace tslab {

struct TitchmarshOptions {
  double rel_threshold = kDefaultSupportThreshold;
  std::size_t radius = 1;
  double tol_cells = 1.0;
};

/// One side of the identity. For side 'a':
///   lhs = a[f * g],  rhs = (a[f]^U + a[g])^L,  rhs_swapped = (a[f] + a[g]^U)^L.
/// For side 'b' the roles of L and U are exchanged. Discrepancy is measured in
/// frequency cells over the columns where either side is finite; a column
/// where exactly one side is infinite counts as an infinite discrepancy.
struct SideReport {
  char side = 'a';
  BoundProfile lhs;
  BoundProfile rhs;
  BoundProfile rhs_swapped;
  double max_discrepancy_cells = 0.0;
  bool pass = false;
};

struct CheckReport {
  SideReport a;
  SideReport b;
  bool pass = false;
};

CheckReport titchmarsh_check(const SpaceFreqField& f, const SpaceFreqField& g, const TitchmarshOptions& opts = {});

/// Max over columns of |p - q| / step in cells; +inf if Sigma differs.
double profile_discrepancy_cells(const BoundProfile& p, const BoundProfile& q, double step);

/// CSV "x,value" with "+inf"/"-inf" literals.
void write_profile_csv(std::ostream& out, const BoundProfile& p);

}  // namespace tslab
