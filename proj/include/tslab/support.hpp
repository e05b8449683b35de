#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tslab/ext_real.hpp"
#include "tslab/field.hpp"

namespace tslab {

/// Per-x extended-real profile: a[f], b[f] and their envelopes.
struct BoundProfile {
  AxisGrid xgrid;
  std::vector<ExtReal> values;

  BoundProfile(AxisGrid grid, std::vector<ExtReal> vals);
  std::size_t size() const { return values.size(); }
  const ExtReal& operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const BoundProfile& p, const BoundProfile& q) { return p.values == q.values; }
};

/// Pointwise extended-real sum of two profiles on the same x grid.
BoundProfile operator+(const BoundProfile& p, const BoundProfile& q);

/// Sigma[f]: columns with a nonempty support.
struct SigmaSet {
  std::vector<std::uint8_t> member;
  bool operator[](std::size_t i) const { return member[i] != 0; }
  std::size_t size() const { return member.size(); }
  std::size_t cardinality() const;
};

/// Per column, the smallest frequency coordinate of a marked cell; +inf on empty columns.
BoundProfile lower_bound_profile(const SupportMask& m);
/// Per column, the largest frequency coordinate of a marked cell; -inf on empty columns.
BoundProfile upper_bound_profile(const SupportMask& m);

SigmaSet sigma_projection(const SupportMask& m);

// Semicontinuous envelopes on the lattice.
//
// The x lattice carries the alternating ("Khalimsky") topology: indices that
// are multiples of 2*radius are closed points whose smallest neighbourhood is
// the window |j - i| <= radius; all other indices are open singletons. The
// lower envelope is the largest lower semicontinuous minorant in this
// topology: the window minimum at closed points and the value itself at open
// points. Both envelopes are idempotent and monotone, and L is superadditive.

/// True when index i is a closed point of the lattice topology of this radius.
bool is_closed_point(std::size_t i, std::size_t radius);

BoundProfile lower_envelope(const BoundProfile& p, std::size_t radius = 1);
BoundProfile upper_envelope(const BoundProfile& p, std::size_t radius = 1);

/// a[f] and b[f] of the closed support: the column bounds of the mask closed
/// in the lattice topology, i.e. lower_envelope(lower_bound_profile) and
/// upper_envelope(upper_bound_profile).
struct SupportBounds {
  BoundProfile lower;
  BoundProfile upper;
};
SupportBounds support_bounds(const SupportMask& m, std::size_t radius = 1);
SupportBounds support_bounds(const SpaceFreqField& f, double rel_threshold, std::size_t radius = 1);

/// (f *_w g)(x, w) = sum_tau f(x, w - tau) g(x, tau) dw: linear convolution in
/// frequency, column by column. Both inputs need the same x grid and the same
/// frequency step. The output frequency grid starts at w0_f + w0_g and has
/// N_f + N_g - 1 cells.
SpaceFreqField partial_convolution(const SpaceFreqField& f, const SpaceFreqField& g);

/// f_n(x, w) = w^n f(x, w).
SpaceFreqField moment_multiply(const SpaceFreqField& f, unsigned n);

/// Discrete triangle of half-width h cells with sum(phi) * dw == 1.
std::vector<double> triangle_mollifier(std::size_t half_width, double dw);

/// Partial convolution with triangle_mollifier(half_width); the frequency
/// grid grows by half_width cells on each side. half_width == 0 is identity.
SpaceFreqField mollify(const SpaceFreqField& f, std::size_t half_width);

}  // namespace tslab
