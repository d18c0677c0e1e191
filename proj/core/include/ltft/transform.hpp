#pragma once

#include <cstddef>
#include <vector>

#include "ltft/params.hpp"
#include "ltft/phase_space.hpp"
#include "ltft/signal.hpp"

namespace ltft {

/// Analysis coefficients aligned with a SampleSet, plus the cubature weight mu/N
/// that synthesis applies.
struct CoefficientVector {
  std::vector<cplx> values;
  double weight = 1.0;

  std::size_t size() const noexcept { return values.size(); }
};

/// value_n = (1/L) sum_m s(t_m) conj(f_{g_n}(t_m)), restricted to the atom support.
CoefficientVector analyze(const DigitalSignal& signal, const SampleSet& samples,
                          const LtftParams& params);

/// weight * sum_n F_n f_{g_n} on a grid of out_size samples at the given rate.
/// Each output sample accumulates its atoms in index order, so the result does
/// not depend on the thread count.
DigitalSignal synthesize(const CoefficientVector& coeffs, const SampleSet& samples,
                         const LtftParams& params, std::size_t out_size, double rate);

/// Synthesis onto the grid of `shape`.
DigitalSignal synthesize(const CoefficientVector& coeffs, const SampleSet& samples,
                         const LtftParams& params, const DigitalSignal& shape);

}  // namespace ltft
