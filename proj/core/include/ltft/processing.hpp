#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "ltft/frame_op.hpp"
#include "ltft/params.hpp"
#include "ltft/phase_space.hpp"
#include "ltft/signal.hpp"
#include "ltft/transform.hpp"

namespace ltft {

using Symbol = std::function<cplx(double a, double b, double c)>;
using CoefficientRule = std::function<cplx(cplx)>;

/// value_n * symbol(a_n, b_n, c_n).
CoefficientVector multiplier_apply(const CoefficientVector& coeffs, const SampleSet& samples,
                                   const Symbol& symbol);

/// rule(value_n) for every n.
CoefficientVector pointwise_nonlinearity(const CoefficientVector& coeffs, const CoefficientRule& rule);

/// z max(0, 1 - lambda / |z|).
cplx soft_threshold(cplx z, double lambda) noexcept;
CoefficientRule soft_threshold_rule(double lambda);

/// |z| e^{i D arg z}; the identity for D = 1.
cplx vocoder_phase_rule(cplx z, int dilation) noexcept;

/// N points of the given kind spread over the box (halton, hammersley or mc).
SampleSet make_samples(const PhaseSpaceBox& box, std::size_t count, Generator kind,
                       std::uint64_t seed = 0);

/// Sample-count rule N = ceil(A M).
std::size_t sample_count(double redundancy, std::size_t grid_size);

struct PipelineConfig {
  LtftParams params;
  double redundancy = 16.0;  ///< A; N = ceil(A M)
  Generator sequence = Generator::hammersley;
  std::uint64_t seed = 0;
  double time_padding = 0.0;  ///< extra time on each side of the box
};

/// Analysis, coefficient map, synthesis and inverse-frame normalization on the
/// analytic signal. The map may be empty (plain reconstruction).
DigitalSignal process(const DigitalSignal& analytic, const PipelineConfig& config,
                      const std::function<CoefficientVector(const CoefficientVector&, const SampleSet&)>& map);

/// Real-signal reconstruction: to_analytic, process, from_analytic.
RealSignal reconstruct(const RealSignal& signal, const PipelineConfig& config);

struct VocoderJob {
  int dilation = 1;
  std::optional<double> redundancy;  ///< default 4 D
  Generator sequence = Generator::hammersley;
  std::uint64_t seed = 0;
  LtftParams params;

  double effective_redundancy() const noexcept {
    return redundancy.value_or(4.0 * static_cast<double>(dilation));
  }
};

/// Integer time dilation: atoms move to (D a_n, b_n, c_n) on a D M grid and the
/// coefficient phases are multiplied by D.
DigitalSignal phase_vocoder(const DigitalSignal& analytic, const VocoderJob& job);
RealSignal phase_vocoder(const RealSignal& signal, const VocoderJob& job);

}  // namespace ltft
