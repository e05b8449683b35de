#pragma once

#include "tslab/field.hpp"

namespace tslab {

// Sign convention: the time transform uses exp(+i w t), so a tone
// phi(x) exp(-i w0 t) concentrates at w = +w0.

/// Frequency lattice dual to tgrid: step 2 pi / (N dt), ascending with 0 at
/// index floor(N/2) (fftshift order).
AxisGrid dft_frequency_grid(const AxisGrid& tgrid);

/// u~[i, k] = dt * sum_j u[i, j] exp(+i w_k t_j).
SpaceFreqField time_fourier(const SpaceTimeField& u);

/// Inverse of time_fourier onto `tgrid`; f.wgrid() must be dft_frequency_grid(tgrid).
SpaceTimeField inverse_time_fourier(const SpaceFreqField& f, const AxisGrid& tgrid);

}  // namespace tslab
