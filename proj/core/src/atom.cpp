#include "ltft/atom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ltft/error.hpp"

namespace ltft {

cplx AtomGeometry::value(std::ptrdiff_t i, const WindowSpec& window) const noexcept {
  const double x = (static_cast<double>(i) - frac) / rate;
  const double w = window.value(scale * x);
  if (w == 0.0) return {0.0, 0.0};
  const double arg = 2.0 * std::numbers::pi * modulation * x;
  return std::sqrt(scale) * w * cplx(std::cos(arg), std::sin(arg));
}

AtomGeometry atom_geometry(const LtftParams& params, double a, double b, double c,
                           std::size_t grid_size, double rate) {
  require(b >= 0.0, Errc::invalid_parameter, "frequency must be non-negative");
  AtomGeometry g;
  const double p = a * rate;
  const double base = std::floor(p);
  g.anchor = static_cast<std::ptrdiff_t>(base) + static_cast<std::ptrdiff_t>(grid_size / 2);
  g.frac = p - base;
  g.rate = rate;
  g.scale = atom_scale(params, b);
  g.modulation = atom_modulation(params, b, c);
  const double half = 0.5 * rate / g.scale;
  g.first = static_cast<std::ptrdiff_t>(std::floor(g.frac - half)) + 1;
  g.last = static_cast<std::ptrdiff_t>(std::ceil(g.frac + half)) - 1;
  return g;
}

SparseAtom ltft_atom_time(const LtftParams& params, double a, double b, double c,
                          std::size_t grid_size, double rate) {
  const AtomGeometry g = atom_geometry(params, a, b, c, grid_size, rate);
  const auto size = static_cast<std::ptrdiff_t>(grid_size);
  const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(g.anchor + g.first, 0);
  const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(g.anchor + g.last, size - 1);
  SparseAtom atom;
  if (lo > hi) return atom;
  atom.first = static_cast<std::size_t>(lo);
  atom.values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::ptrdiff_t j = lo; j <= hi; ++j) atom.values.push_back(g.value(j - g.anchor, *params.window));
  return atom;
}

std::vector<cplx> ltft_atom_freq(const LtftParams& params, double b, double c,
                                 const std::vector<double>& freqs) {
  require(b >= 0.0, Errc::invalid_parameter, "frequency must be non-negative");
  const double s = atom_scale(params, b);
  const double phi = atom_modulation(params, b, c);
  const double amp = 1.0 / std::sqrt(s);
  std::vector<cplx> out;
  out.reserve(freqs.size());
  for (double w : freqs) out.emplace_back(amp * params.window->spectrum((w - phi) / s), 0.0);
  return out;
}

}  // namespace ltft
