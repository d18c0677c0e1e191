#include "ltft/phase_space.hpp"

#include <string>

#include "ltft/error.hpp"

namespace ltft {

std::string_view to_string(Generator g) noexcept {
  switch (g) {
    case Generator::halton: return "halton";
    case Generator::hammersley: return "hammersley";
    case Generator::mc: return "mc";
    case Generator::scaled_extern: return "scaled-extern";
    case Generator::dwt_grid: return "dwt-grid";
    case Generator::regular: return "regular";
  }
  return "unknown";
}

Generator parse_generator(std::string_view name) {
  for (Generator g : {Generator::halton, Generator::hammersley, Generator::mc,
                      Generator::scaled_extern, Generator::dwt_grid, Generator::regular}) {
    if (to_string(g) == name) return g;
  }
  fail(Errc::invalid_parameter, "unknown generator '" + std::string(name) + "'");
}

PhaseSpaceBox PhaseSpaceBox::for_signal(std::size_t samples, double sample_rate,
                                        double time_padding) {
  require(sample_rate > 0.0, Errc::invalid_parameter, "sample rate must be positive");
  require(time_padding >= 0.0, Errc::invalid_parameter, "time padding must be non-negative");
  const double half = 0.5 * static_cast<double>(samples) / sample_rate;
  PhaseSpaceBox box;
  box.time = {-half - time_padding, half + time_padding};
  box.freq = {0.0, sample_rate};
  box.osc = {0.0, 1.0};
  return box;
}

}  // namespace ltft
