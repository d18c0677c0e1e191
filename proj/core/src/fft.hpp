#pragma once

// Thin FFTW wrapper. Plans are built with FFTW_ESTIMATE so the chosen algorithm,
// and therefore the rounding, is identical from run to run.

#include <complex>
#include <vector>

namespace ltft::detail {

/// In-place unnormalized transform: sign -1 computes sum x_j e^{-2 pi i jk/n}.
void fft_inplace(std::vector<std::complex<double>>& data, int sign);

}  // namespace ltft::detail
