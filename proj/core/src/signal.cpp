#include "ltft/signal.hpp"

#include <cmath>
#include <string>

#include "fft.hpp"
#include "ltft/error.hpp"

namespace ltft {
namespace {

void check_grid(std::size_t size, double rate) {
  require(rate > 0.0, Errc::invalid_parameter, "sample rate must be positive");
  if (size < 4 || size % 2 != 0) {
    fail(Errc::invalid_parameter,
         "signal length must be even and at least 4 (got " + std::to_string(size) + ")");
  }
}

// Array index j sits at time index m = j - M/2, so exp(-2 pi i k m / M) picks up (-1)^k.
double centering_sign(std::size_t k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

DigitalSignal::DigitalSignal(std::vector<cplx> samples, double sample_rate)
    : samples_(std::move(samples)), rate_(sample_rate) {
  check_grid(samples_.size(), rate_);
}

DigitalSignal DigitalSignal::zeros(std::size_t size, double sample_rate) {
  return DigitalSignal(std::vector<cplx>(size), sample_rate);
}

double DigitalSignal::norm() const noexcept {
  double sum = 0.0;
  for (const cplx& x : samples_) sum += std::norm(x);
  return std::sqrt(sum / rate_);
}

double RealSignal::norm() const noexcept {
  double sum = 0.0;
  for (double x : samples) sum += x * x;
  return std::sqrt(sum / sample_rate);
}

Spectrum::Spectrum(std::vector<cplx> bins, double sample_rate)
    : bins_(std::move(bins)), rate_(sample_rate) {
  check_grid(bins_.size(), rate_);
}

Spectrum dft(const DigitalSignal& signal) {
  std::vector<cplx> data = signal.samples();
  detail::fft_inplace(data, -1);
  const double dt = 1.0 / signal.sample_rate();
  for (std::size_t k = 0; k < data.size(); ++k) data[k] *= dt * centering_sign(k);
  return Spectrum(std::move(data), signal.sample_rate());
}

DigitalSignal idft(const Spectrum& spectrum) {
  std::vector<cplx> data = spectrum.bins();
  for (std::size_t k = 0; k < data.size(); ++k) data[k] *= centering_sign(k);
  detail::fft_inplace(data, +1);
  // x_m = (L/M) sum_k X_k e^{+2 pi i k m / M}
  const double scale = spectrum.sample_rate() / static_cast<double>(data.size());
  for (cplx& x : data) x *= scale;
  return DigitalSignal(std::move(data), spectrum.sample_rate());
}

DigitalSignal to_analytic(const RealSignal& signal) {
  check_grid(signal.size(), signal.sample_rate);
  std::vector<cplx> data(signal.samples.begin(), signal.samples.end());
  Spectrum spec = dft(DigitalSignal(std::move(data), signal.sample_rate));
  const std::size_t m = spec.size();
  for (std::size_t k = 1; k < m / 2; ++k) spec[k] *= 2.0;
  for (std::size_t k = m / 2 + 1; k < m; ++k) spec[k] = 0.0;
  return idft(spec);
}

RealSignal from_analytic(const DigitalSignal& signal) {
  RealSignal out;
  out.sample_rate = signal.sample_rate();
  out.samples.reserve(signal.size());
  for (const cplx& x : signal.samples()) out.samples.push_back(x.real());
  return out;
}

double relative_l2_error(const std::vector<double>& estimate, const std::vector<double>& reference) {
  require(estimate.size() == reference.size(), Errc::invalid_parameter,
          "relative error needs equal lengths");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double d = estimate[i] - reference[i];
    num += d * d;
    den += reference[i] * reference[i];
  }
  require(den > 0.0, Errc::invalid_parameter, "relative error against a zero reference");
  return std::sqrt(num / den);
}

double relative_l2_error(const std::vector<cplx>& estimate, const std::vector<cplx>& reference) {
  require(estimate.size() == reference.size(), Errc::invalid_parameter,
          "relative error needs equal lengths");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    num += std::norm(estimate[i] - reference[i]);
    den += std::norm(reference[i]);
  }
  require(den > 0.0, Errc::invalid_parameter, "relative error against a zero reference");
  return std::sqrt(num / den);
}

cplx inner_product(const DigitalSignal& x, const DigitalSignal& y) {
  require(x.size() == y.size(), Errc::invalid_parameter, "inner product needs equal lengths");
  cplx sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * std::conj(y[i]);
  return sum / x.sample_rate();
}

}  // namespace ltft
