#include "ltft/transform.hpp"

#include <algorithm>

#include "ltft/atom.hpp"
#include "ltft/error.hpp"
#include "ltft/parallel.hpp"

namespace ltft {
namespace {

constexpr std::ptrdiff_t kTile = 256;

}  // namespace

CoefficientVector analyze(const DigitalSignal& signal, const SampleSet& samples,
                          const LtftParams& params) {
  params.validate();
  CoefficientVector out;
  out.values.assign(samples.size(), cplx{});
  out.weight = samples.weight();
  const auto size = static_cast<std::ptrdiff_t>(signal.size());
  const double rate = signal.sample_rate();
  const double dt = 1.0 / rate;
  parallel_for(samples.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t n = begin; n < end; ++n) {
      const PhasePoint& g = samples.points[n];
      const AtomGeometry geo = atom_geometry(params, g.a, g.b, g.c, signal.size(), rate);
      const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(geo.anchor + geo.first, 0);
      const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(geo.anchor + geo.last, size - 1);
      cplx acc{};
      for (std::ptrdiff_t j = lo; j <= hi; ++j) {
        acc += signal[static_cast<std::size_t>(j)] *
               std::conj(geo.value(j - geo.anchor, *params.window));
      }
      out.values[n] = dt * acc;
    }
  }, 16);
  return out;
}

DigitalSignal synthesize(const CoefficientVector& coeffs, const SampleSet& samples,
                         const LtftParams& params, std::size_t out_size, double rate) {
  params.validate();
  require(coeffs.size() == samples.size(), Errc::invalid_parameter,
          "coefficients are not aligned with the sample set");
  DigitalSignal out = DigitalSignal::zeros(out_size, rate);
  const auto size = static_cast<std::ptrdiff_t>(out_size);
  const std::size_t n_points = samples.size();

  std::vector<AtomGeometry> geos(n_points);
  parallel_for(n_points, [&](std::size_t begin, std::size_t end) {
    for (std::size_t n = begin; n < end; ++n) {
      const PhasePoint& g = samples.points[n];
      geos[n] = atom_geometry(params, g.a, g.b, g.c, out_size, rate);
    }
  }, 256);

  const std::size_t tiles = static_cast<std::size_t>((size + kTile - 1) / kTile);
  std::vector<std::vector<std::size_t>> buckets(tiles);
  for (std::size_t n = 0; n < n_points; ++n) {
    if (coeffs.values[n] == cplx{}) continue;
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(geos[n].anchor + geos[n].first, 0);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(geos[n].anchor + geos[n].last, size - 1);
    if (lo > hi) continue;
    for (std::ptrdiff_t t = lo / kTile; t <= hi / kTile; ++t) buckets[static_cast<std::size_t>(t)].push_back(n);
  }

  auto& data = out.samples();
  parallel_for(tiles, [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      const std::ptrdiff_t t_lo = static_cast<std::ptrdiff_t>(t) * kTile;
      const std::ptrdiff_t t_hi = std::min(t_lo + kTile, size) - 1;
      for (std::size_t n : buckets[t]) {
        const AtomGeometry& geo = geos[n];
        const std::ptrdiff_t lo = std::max(geo.anchor + geo.first, t_lo);
        const std::ptrdiff_t hi = std::min(geo.anchor + geo.last, t_hi);
        const cplx f = coeffs.values[n];
        for (std::ptrdiff_t j = lo; j <= hi; ++j) {
          data[static_cast<std::size_t>(j)] += f * geo.value(j - geo.anchor, *params.window);
        }
      }
      for (std::ptrdiff_t j = t_lo; j <= t_hi; ++j) data[static_cast<std::size_t>(j)] *= coeffs.weight;
    }
  });
  return out;
}

DigitalSignal synthesize(const CoefficientVector& coeffs, const SampleSet& samples,
                         const LtftParams& params, const DigitalSignal& shape) {
  return synthesize(coeffs, samples, params, shape.size(), shape.sample_rate());
}

}  // namespace ltft
