#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ltft {

using cplx = std::complex<double>;

/// M complex samples at rate L on the grid t_m = m / L, m = -M/2 .. M/2 - 1.
/// Array index j holds time index m = j - M/2.
class DigitalSignal {
 public:
  DigitalSignal(std::vector<cplx> samples, double sample_rate);
  static DigitalSignal zeros(std::size_t size, double sample_rate);

  std::size_t size() const noexcept { return samples_.size(); }
  double sample_rate() const noexcept { return rate_; }
  double duration() const noexcept { return static_cast<double>(size()) / rate_; }
  double time(std::size_t j) const noexcept {
    return (static_cast<double>(j) - 0.5 * static_cast<double>(size())) / rate_;
  }

  const std::vector<cplx>& samples() const noexcept { return samples_; }
  std::vector<cplx>& samples() noexcept { return samples_; }
  cplx operator[](std::size_t j) const { return samples_[j]; }
  cplx& operator[](std::size_t j) { return samples_[j]; }

  /// Riemann-sum L2 norm: sqrt(sum |x|^2 / L).
  double norm() const noexcept;

 private:
  std::vector<cplx> samples_;
  double rate_;
};

/// Real-valued counterpart (audio, test signals); same grid conventions.
struct RealSignal {
  std::vector<double> samples;
  double sample_rate = 1.0;

  std::size_t size() const noexcept { return samples.size(); }
  double norm() const noexcept;
};

/// DFT bins X_k on omega_k = k L / M, k = 0 .. M-1.
class Spectrum {
 public:
  Spectrum(std::vector<cplx> bins, double sample_rate);

  std::size_t size() const noexcept { return bins_.size(); }
  double sample_rate() const noexcept { return rate_; }
  double frequency(std::size_t k) const noexcept {
    return static_cast<double>(k) * rate_ / static_cast<double>(size());
  }
  double bin_width() const noexcept { return rate_ / static_cast<double>(size()); }

  const std::vector<cplx>& bins() const noexcept { return bins_; }
  std::vector<cplx>& bins() noexcept { return bins_; }
  cplx operator[](std::size_t k) const { return bins_[k]; }
  cplx& operator[](std::size_t k) { return bins_[k]; }

 private:
  std::vector<cplx> bins_;
  double rate_;
};

/// X_k = (1/L) sum_m x_m exp(-2 pi i k m / M), m over the centered time indices.
Spectrum dft(const DigitalSignal& signal);
/// Exact inverse of dft.
DigitalSignal idft(const Spectrum& spectrum);

/// Zeroes bins k > M/2, doubles 0 < k < M/2, keeps k = 0 and k = M/2.
DigitalSignal to_analytic(const RealSignal& signal);
/// Real part.
RealSignal from_analytic(const DigitalSignal& signal);

/// sqrt(sum |x - y|^2 / sum |y|^2).
double relative_l2_error(const std::vector<double>& estimate, const std::vector<double>& reference);
double relative_l2_error(const std::vector<cplx>& estimate, const std::vector<cplx>& reference);

/// (1/L) sum x conj(y), the digital inner product.
cplx inner_product(const DigitalSignal& x, const DigitalSignal& y);

}  // namespace ltft
