#pragma once

#include <cstddef>
#include <vector>

#include "ltft/params.hpp"
#include "ltft/signal.hpp"

namespace ltft {

/// Placement of one atom on a sample grid of M points at rate L.
///
/// With p = a L, anchor = floor(p) + M/2 and frac = p - floor(p), the sample at
/// grid index anchor + i only depends on (i, frac). Two atoms whose times differ
/// by a whole number of samples therefore produce identical values.
struct AtomGeometry {
  std::ptrdiff_t anchor = 0;
  double frac = 0.0;
  double rate = 1.0;
  double scale = 1.0;       ///< s = 1 / S(b)
  double modulation = 0.0;  ///< phi(b, c)
  std::ptrdiff_t first = 0;  ///< lowest offset i inside the support
  std::ptrdiff_t last = -1;  ///< highest offset i inside the support

  /// Atom value at grid index anchor + i.
  cplx value(std::ptrdiff_t i, const WindowSpec& window) const noexcept;
};

AtomGeometry atom_geometry(const LtftParams& params, double a, double b, double c,
                           std::size_t grid_size, double rate);

/// Atom samples on a contiguous index range of the grid; empty when the support
/// misses the grid.
struct SparseAtom {
  std::size_t first = 0;
  std::vector<cplx> values;

  bool empty() const noexcept { return values.empty(); }
};

/// Samples of f_{a,b,c} at the grid points inside its support.
SparseAtom ltft_atom_time(const LtftParams& params, double a, double b, double c,
                          std::size_t grid_size, double rate);

/// Fourier transform of f_{0,b,c} at the given frequencies.
std::vector<cplx> ltft_atom_freq(const LtftParams& params, double b, double c,
                                 const std::vector<double>& freqs);

}  // namespace ltft
