#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ltft {

enum class WindowKind {
  raised_cosine4,  ///< cos^4(pi t) on (-1/2, 1/2); default
  raised_cosine6,  ///< cos^6(pi t) on (-1/2, 1/2)
};

std::string_view to_string(WindowKind kind) noexcept;
/// Accepts "cos4" / "raised-cosine4" and "cos6" / "raised-cosine6".
WindowKind parse_window_kind(std::string_view name);

/// Unit-energy window supported on (-1/2, 1/2) whose zero extension is C^2.
///
/// The spectrum is available in closed form: cos^{2p}(pi t) expands into
/// cosines of integer frequency, each of which transforms to a pair of shifted
/// sincs. Cumulative energy tables for |f^|^2 and its integral are tabulated once
/// per kind and reused by the frame-operator computation.
class WindowSpec {
 public:
  WindowKind kind() const noexcept { return kind_; }

  /// f(t); zero outside (-1/2, 1/2).
  double value(double t) const noexcept;

  /// f^(omega) = int f(t) e^{-2 pi i omega t} dt (real: f is even).
  double spectrum(double omega) const noexcept;
  double energy_density(double omega) const noexcept {
    const double s = spectrum(omega);
    return s * s;
  }

  /// Phi(u) = int_{-inf}^u |f^|^2.
  double energy_cdf(double u) const noexcept;
  /// Psi(u) = int_{-inf}^u Phi.
  double energy_cdf2(double u) const noexcept;

  /// Half-width of the spectral main lobe, p + 1 for cos^{2p}.
  double bandwidth() const noexcept { return static_cast<double>(half_power_ + 1); }

  /// |u| beyond which the tabulated energy is treated as exhausted.
  double table_limit() const noexcept { return table_limit_; }

 private:
  friend const WindowSpec& make_window(WindowKind kind);
  explicit WindowSpec(WindowKind kind);

  double interp_phi(double u) const noexcept;

  WindowKind kind_;
  int half_power_ = 2;            // p in cos^{2p}
  double amplitude_ = 1.0;        // L2 normalization
  std::vector<double> cos_coef_;  // cos^{2p}(x) = sum_j cos_coef_[j] cos(2 j x)

  double table_limit_ = 64.0;
  double table_step_ = 1.0 / 128.0;
  std::vector<double> phi_;  // Phi at -limit + i*step
  std::vector<double> psi_;  // Psi at the same nodes
};

/// Shared immutable instance per kind.
const WindowSpec& make_window(WindowKind kind);
const WindowSpec& make_window(std::string_view name);

}  // namespace ltft
