#include "ltft/params.hpp"

#include <cmath>

#include "ltft/error.hpp"

namespace ltft {

void LtftParams::validate() const {
  require(window != nullptr, Errc::invalid_parameter, "window is not set");
  require(std::isfinite(b0) && std::isfinite(b1) && b0 > 0.0 && b0 < b1, Errc::invalid_parameter,
          "transition frequencies must satisfy 0 < b0 < b1");
  require(std::isfinite(gamma) && gamma > 0.0, Errc::invalid_parameter, "gamma must be positive");
  require(std::isfinite(xi) && xi > 0.0, Errc::invalid_parameter, "xi must be positive");
}

LtftParams LtftParams::from_rate(double rate, double c1, double c2, double gamma, double xi,
                                 WindowKind window) {
  require(rate > 0.0, Errc::invalid_parameter, "sample rate must be positive");
  require(c1 > 0.0 && c1 < c2 && c2 <= 1.0, Errc::invalid_parameter,
          "band fractions must satisfy 0 < C1 < C2 <= 1");
  LtftParams p;
  p.window = &make_window(window);
  p.b0 = c1 * rate;
  p.b1 = c2 * rate;
  p.gamma = gamma;
  p.xi = xi;
  p.validate();
  return p;
}

Band band_of(const LtftParams& params, double b) noexcept {
  if (b < params.b0) return Band::low;
  if (b < params.b1) return Band::cwt;
  return Band::high;
}

double atom_support_length(const LtftParams& params, double b) {
  require(b >= 0.0, Errc::invalid_parameter, "frequency must be non-negative");
  return 1.0 / atom_scale(params, b);
}

double atom_scale(const LtftParams& params, double b) noexcept {
  switch (band_of(params, b)) {
    case Band::low: return params.b0 / params.gamma;
    case Band::cwt: return b / params.gamma;
    case Band::high: return params.b1 / params.gamma;
  }
  return params.b0 / params.gamma;
}

double atom_modulation(const LtftParams& params, double b, double c) noexcept {
  const double r = params.xi / params.gamma * c;
  switch (band_of(params, b)) {
    case Band::low: return r * params.b0 + b;
    case Band::cwt: return (r + 1.0) * b;
    case Band::high: return r * params.b1 + b;
  }
  return b;
}

}  // namespace ltft
