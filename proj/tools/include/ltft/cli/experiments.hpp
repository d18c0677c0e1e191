#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ltft/baselines.hpp"
#include "ltft/params.hpp"
#include "ltft/phase_space.hpp"
#include "ltft/signal.hpp"

namespace ltft::cli {

/// Eight unit tones log-spaced over [2 b0, b1], two Gaussian chirps (one
/// crossing b0, one crossing b1) and white noise 60 dB below the signal RMS.
/// The result is zero within S0 of both ends and ramps up over the next S0.
RealSignal test_signal(std::size_t size, double rate, const LtftParams& params,
                       std::uint64_t seed = 1);

/// Multiplies by the edge taper used in test_signal.
void apply_edge_taper(RealSignal& signal, const LtftParams& params);

struct ErrorRow {
  Generator method = Generator::hammersley;
  double redundancy = 0.0;
  std::size_t n = 0;
  double error = 0.0;  ///< relative L2; mean over seeds for mc
  double error_std = 0.0;
};

/// Reconstruction error for each redundancy; mc rows average `mc_seeds` seeds
/// starting at `seed`.
std::vector<ErrorRow> bench_reconstruction(const RealSignal& signal, Generator method,
                                           const std::vector<double>& redundancies,
                                           const LtftParams& params, std::size_t mc_seeds = 10,
                                           std::uint64_t seed = 0);

struct ComplexityCount {
  double actual = 0.0;     ///< sum_n round(L S(b_n))
  double predicted = 0.0;  ///< gamma N (1 + ln(b1/b0) + (L - b1)/b1)
};

ComplexityCount complexity_count(const SampleSet& samples, const LtftParams& params, double rate);

/// gamma (1 + ln(b1/b0) + (L - b1)/b1) + 1, the per-sample ceiling on L S(b).
double complexity_per_sample_bound(const LtftParams& params, double rate);

/// 10 L (gamma / b0) ln^2 N.
double complexity_deviation_bound(const LtftParams& params, double rate, std::size_t count);

/// Grid of about `count` queries at c = 1/2: log-spaced b across the wavelet band,
/// and times kept gamma / b away from the box edges.
std::vector<PhasePoint> coverage_queries(const PhaseSpaceBox& box, const LtftParams& params,
                                         std::size_t count);

/// DWT grid with step r on the signal's band whose size is close to `count`.
DwtGridParams matched_dwt_params(const LtftParams& params, double rate, std::size_t size,
                                 std::size_t count, double r);

}  // namespace ltft::cli
