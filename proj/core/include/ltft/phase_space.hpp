#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace ltft {

/// Where a point set came from. Carried through rescaling so experiment tables
/// can record which construction was used.
enum class Generator {
  halton,
  hammersley,
  mc,
  scaled_extern,
  dwt_grid,
  regular,
};

std::string_view to_string(Generator g) noexcept;
/// Parses "halton", "hammersley", "mc", "dwt-grid", "regular", "scaled-extern".
Generator parse_generator(std::string_view name);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi - lo; }
  double center() const noexcept { return 0.5 * (lo + hi); }
  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

/// Rectangular time x frequency x oscillation domain. A degenerate oscillation
/// side (lo == hi) makes the box two-dimensional; its volume then ignores that side.
struct PhaseSpaceBox {
  Interval time;
  Interval freq;
  Interval osc{0.0, 1.0};

  std::size_t dimension() const noexcept { return osc.length() > 0.0 ? 3 : 2; }
  double volume() const noexcept {
    const double v = time.length() * freq.length();
    return dimension() == 3 ? v * osc.length() : v;
  }
  bool contains(double a, double b, double c) const noexcept {
    return time.contains(a) && freq.contains(b) && osc.contains(c);
  }

  /// Time x [0, L] x [0, 1] for a signal of M samples at rate L.
  static PhaseSpaceBox for_signal(std::size_t samples, double sample_rate, double time_padding = 0.0);
};

struct PhasePoint {
  double a = 0.0;  ///< time
  double b = 0.0;  ///< frequency
  double c = 0.0;  ///< oscillation
};

struct SampleSet {
  std::vector<PhasePoint> points;
  PhaseSpaceBox box;
  Generator generator = Generator::scaled_extern;
  std::optional<std::uint64_t> seed;

  std::size_t size() const noexcept { return points.size(); }
  /// Cubature weight mu(G)/N of the synthesis sum.
  double weight() const noexcept {
    return points.empty() ? 0.0 : box.volume() / static_cast<double>(points.size());
  }
};

}  // namespace ltft
