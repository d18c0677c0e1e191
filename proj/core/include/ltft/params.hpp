#pragma once

#include "ltft/window.hpp"

namespace ltft {

/// Which atom family a frequency falls in.
enum class Band {
  low,   ///< b < b0: fixed support S0 (STFT-like)
  cwt,   ///< b0 <= b < b1: support gamma / b
  high,  ///< b >= b1: fixed support S1
};

struct LtftParams {
  const WindowSpec* window = &make_window(WindowKind::raised_cosine4);
  double b0 = 0.1;
  double b1 = 0.4;
  double gamma = 6.0;
  double xi = 6.0;

  double S0() const noexcept { return gamma / b0; }
  double S1() const noexcept { return gamma / b1; }

  /// Throws invalid-parameter unless 0 < b0 < b1 and gamma, xi > 0.
  void validate() const;

  /// b0 = c1 L, b1 = c2 L; requires 0 < c1 < c2 <= 1.
  static LtftParams from_rate(double rate, double c1 = 0.1, double c2 = 0.4, double gamma = 6.0,
                              double xi = 6.0, WindowKind window = WindowKind::raised_cosine4);
};

Band band_of(const LtftParams& params, double b) noexcept;

/// Time-support length S(b): S0 below b0, gamma / b in between, S1 from b1 up.
double atom_support_length(const LtftParams& params, double b);

/// Window dilation s = 1 / S(b).
double atom_scale(const LtftParams& params, double b) noexcept;

/// Modulation frequency of the atom at (b, c).
double atom_modulation(const LtftParams& params, double b, double c) noexcept;

}  // namespace ltft
