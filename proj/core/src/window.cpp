#include "ltft/window.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ltft/error.hpp"

namespace ltft {
namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double sinc(double x) {
  const double px = std::numbers::pi * x;
  if (std::abs(px) < 1e-4) return 1.0 - px * px / 6.0;
  return std::sin(px) / px;
}

// 5-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 5> kGaussNodes = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                               0.5384693101056831, 0.9061798459386640};
constexpr std::array<double, 5> kGaussWeights = {0.2369268850561891, 0.4786286704993665,
                                                 0.5688888888888889, 0.4786286704993665,
                                                 0.2369268850561891};

// Cubic Hermite on [0, 1] with end values y0, y1 and end slopes d0, d1 (already scaled by h).
double hermite(double s, double y0, double y1, double d0, double d1) {
  const double s2 = s * s;
  const double s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * d0 + (-2 * s3 + 3 * s2) * y1 +
         (s3 - s2) * d1;
}

}  // namespace

std::string_view to_string(WindowKind kind) noexcept {
  switch (kind) {
    case WindowKind::raised_cosine4: return "cos4";
    case WindowKind::raised_cosine6: return "cos6";
  }
  return "unknown";
}

WindowKind parse_window_kind(std::string_view name) {
  if (name == "cos4" || name == "raised-cosine4") return WindowKind::raised_cosine4;
  if (name == "cos6" || name == "raised-cosine6") return WindowKind::raised_cosine6;
  fail(Errc::invalid_parameter, "unknown window kind '" + std::string(name) + "'");
}

WindowSpec::WindowSpec(WindowKind kind) : kind_(kind) {
  half_power_ = kind == WindowKind::raised_cosine6 ? 3 : 2;
  const int p = half_power_;
  const double norm = std::pow(4.0, -p);
  cos_coef_.resize(p + 1);
  cos_coef_[0] = binomial(2 * p, p) * norm;
  for (int j = 1; j <= p; ++j) cos_coef_[j] = 2.0 * binomial(2 * p, p - j) * norm;
  // int cos^{4p}(pi t) over one period = C(4p, 2p) / 16^p
  amplitude_ = 1.0 / std::sqrt(binomial(4 * p, 2 * p) * std::pow(16.0, -p));

  const auto cells = static_cast<std::size_t>(std::llround(2.0 * table_limit_ / table_step_));
  phi_.assign(cells + 1, 0.0);
  psi_.assign(cells + 1, 0.0);
  const double h = table_step_;
  for (std::size_t i = 0; i < cells; ++i) {
    const double left = -table_limit_ + static_cast<double>(i) * h;
    const double right = left + h;
    double mass = 0.0;
    double moment = 0.0;  // int (right - s) g(s) ds
    for (std::size_t q = 0; q < kGaussNodes.size(); ++q) {
      const double s = left + 0.5 * h * (kGaussNodes[q] + 1.0);
      const double g = energy_density(s) * 0.5 * h * kGaussWeights[q];
      mass += g;
      moment += (right - s) * g;
    }
    phi_[i + 1] = phi_[i] + mass;
    psi_[i + 1] = psi_[i] + h * phi_[i] + moment;
  }
}

double WindowSpec::value(double t) const noexcept {
  if (!(t > -0.5 && t < 0.5)) return 0.0;
  const double c = std::cos(std::numbers::pi * t);
  double c2p = 1.0;
  for (int i = 0; i < half_power_; ++i) c2p *= c * c;
  return amplitude_ * c2p;
}

double WindowSpec::spectrum(double omega) const noexcept {
  // sinc(u) * c0 * prod_j j^2 / (j^2 - u^2); the pole-free sum form is used near +-j.
  const double u = std::abs(omega);
  const int p = half_power_;
  if (u < p + 0.5 && std::abs(u - std::round(u)) < 1e-3 && std::round(u) >= 1.0) {
    double sum = cos_coef_[0] * sinc(u);
    for (int j = 1; j <= p; ++j) sum += 0.5 * cos_coef_[j] * (sinc(u - j) + sinc(u + j));
    return amplitude_ * sum;
  }
  double prod = cos_coef_[0] * sinc(u);
  for (int j = 1; j <= p; ++j) {
    const double jj = static_cast<double>(j * j);
    prod *= jj / (jj - u * u);
  }
  return amplitude_ * prod;
}

double WindowSpec::interp_phi(double u) const noexcept {
  const double x = (u + table_limit_) / table_step_;
  const auto i = std::min(static_cast<std::size_t>(x), phi_.size() - 2);
  const double s = x - static_cast<double>(i);
  const double left = -table_limit_ + static_cast<double>(i) * table_step_;
  return hermite(s, phi_[i], phi_[i + 1], energy_density(left) * table_step_,
                 energy_density(left + table_step_) * table_step_);
}

double WindowSpec::energy_cdf(double u) const noexcept {
  if (u <= -table_limit_) return 0.0;
  if (u >= table_limit_) return phi_.back();
  return interp_phi(u);
}

double WindowSpec::energy_cdf2(double u) const noexcept {
  if (u <= -table_limit_) return 0.0;
  if (u >= table_limit_) return psi_.back() + phi_.back() * (u - table_limit_);
  const double x = (u + table_limit_) / table_step_;
  const auto i = std::min(static_cast<std::size_t>(x), phi_.size() - 2);
  const double s = x - static_cast<double>(i);
  return hermite(s, psi_[i], psi_[i + 1], phi_[i] * table_step_, phi_[i + 1] * table_step_);
}

const WindowSpec& make_window(WindowKind kind) {
  static const WindowSpec cos4(WindowKind::raised_cosine4);
  static const WindowSpec cos6(WindowKind::raised_cosine6);
  return kind == WindowKind::raised_cosine6 ? cos6 : cos4;
}

const WindowSpec& make_window(std::string_view name) { return make_window(parse_window_kind(name)); }

}  // namespace ltft
