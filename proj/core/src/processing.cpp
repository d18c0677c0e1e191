#include "ltft/processing.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ltft/error.hpp"
#include "ltft/lds.hpp"

namespace ltft {

CoefficientVector multiplier_apply(const CoefficientVector& coeffs, const SampleSet& samples,
                                   const Symbol& symbol) {
  require(coeffs.size() == samples.size(), Errc::invalid_parameter,
          "coefficients are not aligned with the sample set");
  CoefficientVector out = coeffs;
  for (std::size_t n = 0; n < out.size(); ++n) {
    const PhasePoint& g = samples.points[n];
    out.values[n] *= symbol(g.a, g.b, g.c);
  }
  return out;
}

CoefficientVector pointwise_nonlinearity(const CoefficientVector& coeffs, const CoefficientRule& rule) {
  CoefficientVector out = coeffs;
  for (cplx& z : out.values) z = rule(z);
  return out;
}

cplx soft_threshold(cplx z, double lambda) noexcept {
  if (lambda <= 0.0) return z;
  const double mag = std::abs(z);
  if (mag <= lambda) return {0.0, 0.0};
  return z * (1.0 - lambda / mag);
}

CoefficientRule soft_threshold_rule(double lambda) {
  return [lambda](cplx z) { return soft_threshold(z, lambda); };
}

cplx vocoder_phase_rule(cplx z, int dilation) noexcept {
  if (dilation == 1) return z;
  const double mag = std::abs(z);
  if (mag == 0.0) return {0.0, 0.0};
  return std::polar(mag, static_cast<double>(dilation) * std::arg(z));
}

SampleSet make_samples(const PhaseSpaceBox& box, std::size_t count, Generator kind,
                       std::uint64_t seed) {
  require(count >= 1, Errc::invalid_parameter, "sample count must be at least 1");
  const std::size_t dim = box.dimension();
  switch (kind) {
    case Generator::halton: return scale_to_box(halton_sequence(count, dim), box);
    case Generator::hammersley: return scale_to_box(hammersley_set(count, dim), box);
    case Generator::mc: return scale_to_box(mc_uniform(count, dim, seed), box);
    default: break;
  }
  fail(Errc::invalid_parameter,
       "sample generator '" + std::string(to_string(kind)) + "' cannot fill a box");
}

std::size_t sample_count(double redundancy, std::size_t grid_size) {
  require(std::isfinite(redundancy) && redundancy > 0.0, Errc::invalid_parameter,
          "redundancy must be positive");
  const double n = std::ceil(redundancy * static_cast<double>(grid_size) - 1e-9);
  if (n > 1e9) fail(Errc::budget_exceeded, "sample count exceeds 1e9");
  return static_cast<std::size_t>(std::max(n, 1.0));
}

DigitalSignal process(const DigitalSignal& analytic, const PipelineConfig& config,
                      const std::function<CoefficientVector(const CoefficientVector&, const SampleSet&)>& map) {
  config.params.validate();
  const std::size_t m = analytic.size();
  const double rate = analytic.sample_rate();
  const PhaseSpaceBox box = PhaseSpaceBox::for_signal(m, rate, config.time_padding);
  const SampleSet samples =
      make_samples(box, sample_count(config.redundancy, m), config.sequence, config.seed);
  CoefficientVector coeffs = analyze(analytic, samples, config.params);
  if (map) coeffs = map(coeffs, samples);
  const DigitalSignal synth = synthesize(coeffs, samples, config.params, m, rate);
  return apply_inverse_frame(synth, frame_diagonal(config.params, rate, m));
}

RealSignal reconstruct(const RealSignal& signal, const PipelineConfig& config) {
  return from_analytic(process(to_analytic(signal), config, {}));
}

DigitalSignal phase_vocoder(const DigitalSignal& analytic, const VocoderJob& job) {
  job.params.validate();
  require(job.dilation >= 1, Errc::invalid_parameter, "dilation must be an integer >= 1");
  const std::size_t m = analytic.size();
  const double rate = analytic.sample_rate();
  const auto d = static_cast<std::size_t>(job.dilation);
  if (m > std::numeric_limits<std::size_t>::max() / d || m * d > (std::size_t{1} << 31)) {
    fail(Errc::budget_exceeded, "dilated output length is too large");
  }
  const PhaseSpaceBox box = PhaseSpaceBox::for_signal(m, rate);
  const SampleSet samples =
      make_samples(box, sample_count(job.effective_redundancy(), m), job.sequence, job.seed);
  CoefficientVector coeffs = analyze(analytic, samples, job.params);
  for (cplx& z : coeffs.values) z = vocoder_phase_rule(z, job.dilation);

  const double scale = static_cast<double>(job.dilation);
  SampleSet moved = samples;
  moved.box.time = {scale * box.time.lo, scale * box.time.hi};
  for (PhasePoint& g : moved.points) g.a *= scale;
  // Moved centres are D times sparser in time than the analysis box.
  coeffs.weight *= scale;

  const DigitalSignal synth = synthesize(coeffs, moved, job.params, m * d, rate);
  return apply_inverse_frame(synth, frame_diagonal(job.params, rate, m * d));
}

RealSignal phase_vocoder(const RealSignal& signal, const VocoderJob& job) {
  return from_analytic(phase_vocoder(to_analytic(signal), job));
}

}  // namespace ltft
