#include "ltft/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "ltft/csv.hpp"
#include "ltft/error.hpp"
#include "ltft/lds.hpp"
#include "ltft/parallel.hpp"

namespace ltft {
namespace {

int scale_ceil(double k) { return static_cast<int>(std::ceil(k - 1e-9)); }

std::size_t scale_count(const DwtGridParams& g, int k) {
  const double n = std::round(std::pow(g.r, k) * static_cast<double>(g.samples) / g.rate * g.p);
  return static_cast<std::size_t>(std::max(n, 1.0));
}

std::size_t total_count(const DwtGridParams& g) {
  const double lr = std::log(g.r);
  const int k0 = scale_ceil(std::log(g.b0 / (g.gamma + 0.5)) / lr);
  const int k1 = scale_ceil(std::log(g.rate / (g.gamma - 0.5)) / lr);
  std::size_t n = 0;
  for (int k = k0; k <= k1; ++k) n += scale_count(g, k);
  return n;
}

}  // namespace

void DwtGridParams::validate() const {
  require(gamma > 0.5, Errc::invalid_parameter, "DWT grid needs gamma > 1/2");
  require(r > 1.0 && r < max_step(), Errc::invalid_parameter,
          "dilation step must satisfy 1 < r < (gamma + 1/2) / (gamma - 1/2)");
  require(p > 0.0, Errc::invalid_parameter, "time-spacing factor must be positive");
  require(b0 > 0.0 && rate > b0, Errc::invalid_parameter, "DWT band needs 0 < b0 < L");
  require(samples >= 1, Errc::invalid_parameter, "DWT grid needs at least one signal sample");
}

DwtGrid dwt_grid(const DwtGridParams& params) {
  params.validate();
  const double lr = std::log(params.r);
  DwtGrid grid;
  grid.k_min = scale_ceil(std::log(params.b0 / (params.gamma + 0.5)) / lr);
  grid.k_max = scale_ceil(std::log(params.rate / (params.gamma - 0.5)) / lr);
  require(grid.k_min <= grid.k_max, Errc::invalid_parameter, "DWT scale range is empty");

  const double half = 0.5 * static_cast<double>(params.samples) / params.rate;
  SampleSet& s = grid.samples;
  s.box.time = {-half, half};
  s.box.freq = {0.0, params.gamma * std::pow(params.r, grid.k_max + 0.5)};
  s.box.osc = {0.0, 0.0};
  s.generator = Generator::dwt_grid;
  for (int k = grid.k_min; k <= grid.k_max; ++k) {
    const std::size_t n = scale_count(params, k);
    grid.counts.push_back(n);
    const double b = params.gamma * std::pow(params.r, k);
    const double step = 2.0 * half / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      s.points.push_back({-half + (static_cast<double>(i) + 0.5) * step, b, 0.0});
    }
  }
  grid.estimate = dwt_size_estimate(params);
  return grid;
}

double dwt_size_estimate(const DwtGridParams& params) {
  params.validate();
  const double m = static_cast<double>(params.samples);
  return m * params.p / (params.rate * std::log(params.r) * (params.gamma + 0.5)) *
         (params.rate - params.b0);
}

DwtGridParams balanced_dwt_params(std::size_t target, double rate, double gamma, double b0,
                                  std::size_t samples) {
  require(target >= 1, Errc::invalid_parameter, "target size must be positive");
  DwtGridParams g;
  g.rate = rate;
  g.gamma = gamma;
  g.b0 = b0;
  g.samples = samples;
  const double range = std::log(rate * (gamma + 0.5) / (b0 * (gamma - 0.5)));
  const double v = std::min(range / std::sqrt(static_cast<double>(target)),
                            0.99 * std::log(g.max_step()));
  g.r = std::exp(v);
  g.p = 1e-6;
  g.validate();

  // Smallest p reaching the target, then the closer of it and its predecessor.
  double lo = 1e-6;
  double hi = 1.0;
  g.p = hi;
  while (total_count(g) < target) {
    hi *= 2.0;
    g.p = hi;
    require(hi < 1e12, Errc::invalid_parameter, "DWT target size is unreachable");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    g.p = mid;
    if (total_count(g) >= target) hi = mid; else lo = mid;
  }
  g.p = lo;
  const std::size_t below = total_count(g);
  g.p = hi;
  const std::size_t above = total_count(g);
  if (target - below < above - target) g.p = lo;
  return g;
}

SampleSet regular_grid(std::size_t n_time, std::size_t n_freq, std::size_t n_osc,
                       const PhaseSpaceBox& box) {
  require(n_time >= 1 && n_freq >= 1 && n_osc >= 1, Errc::invalid_parameter,
          "grid counts must be at least 1");
  require(box.dimension() == 3 || n_osc == 1, Errc::invalid_parameter,
          "a two-dimensional box takes a single oscillation level");
  SampleSet s;
  s.box = box;
  s.generator = Generator::regular;
  s.points.reserve(n_time * n_freq * n_osc);
  auto mid = [](const Interval& side, std::size_t i, std::size_t n) {
    return side.lo + (static_cast<double>(i) + 0.5) * side.length() / static_cast<double>(n);
  };
  for (std::size_t i = 0; i < n_time; ++i) {
    for (std::size_t j = 0; j < n_freq; ++j) {
      for (std::size_t l = 0; l < n_osc; ++l) {
        s.points.push_back({mid(box.time, i, n_time), mid(box.freq, j, n_freq),
                            box.dimension() == 3 ? mid(box.osc, l, n_osc) : box.osc.lo});
      }
    }
  }
  return s;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size() && x.size() >= 2, Errc::invalid_parameter,
          "slope fit needs at least two points");
  double mx = 0.0;
  double my = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(x[i] > 0.0 && y[i] > 0.0, Errc::invalid_parameter, "slope fit needs positive values");
    mx += std::log(x[i]) / n;
    my += std::log(y[i]) / n;
  }
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  require(sxx > 0.0, Errc::invalid_parameter, "slope fit needs distinct abscissae");
  return sxy / sxx;
}

DiscrepancyTable discrepancy_scaling(Generator generator, const std::vector<std::size_t>& counts,
                                     std::size_t dim, const ScalingOptions& options) {
  require(!counts.empty(), Errc::invalid_parameter, "no point counts given");
  DiscrepancyTable table;
  table.generator = generator;
  table.dim = dim;
  for (std::size_t target : counts) {
    require(target >= 1, Errc::invalid_parameter, "point counts must be positive");
    DiscrepancyRow row;
    switch (generator) {
      case Generator::halton:
      case Generator::hammersley: {
        const UnitPointSet pts = generator == Generator::halton ? halton_sequence(target, dim)
                                                                : hammersley_set(target, dim);
        row.n = target;
        row.d_star = star_discrepancy(pts).star_value;
        break;
      }
      case Generator::mc: {
        require(options.mc_seeds >= 1, Errc::invalid_parameter, "mc needs at least one seed");
        std::vector<double> values;
        for (std::size_t s = 0; s < options.mc_seeds; ++s) {
          values.push_back(star_discrepancy(mc_uniform(target, dim, options.seed + s)).star_value);
        }
        double mean = 0.0;
        for (double v : values) mean += v / static_cast<double>(values.size());
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        row.n = target;
        row.d_star = mean;
        row.d_star_std = values.size() > 1 ? std::sqrt(var / static_cast<double>(values.size() - 1)) : 0.0;
        break;
      }
      case Generator::dwt_grid: {
        require(dim == 2, Errc::unsupported_dimension, "DWT grids are two-dimensional");
        const DwtGrid grid = dwt_grid(balanced_dwt_params(target, options.dwt_rate, options.dwt_gamma,
                                                          options.dwt_b0, options.dwt_samples));
        row.n = grid.samples.size();
        row.d_star = star_discrepancy(unit_coordinates(grid.samples)).star_value;
        break;
      }
      case Generator::regular: {
        require(dim == 2 || dim == 3, Errc::unsupported_dimension,
                "regular grids are two- or three-dimensional");
        const auto k = static_cast<std::size_t>(
            std::max(1.0, std::round(std::pow(static_cast<double>(target), 1.0 / static_cast<double>(dim)))));
        PhaseSpaceBox unit;
        unit.time = {0.0, 1.0};
        unit.freq = {0.0, 1.0};
        unit.osc = dim == 3 ? Interval{0.0, 1.0} : Interval{0.0, 0.0};
        const SampleSet grid = regular_grid(k, k, dim == 3 ? k : 1, unit);
        row.n = grid.size();
        row.d_star = star_discrepancy(unit_coordinates(grid)).star_value;
        break;
      }
      default:
        fail(Errc::invalid_parameter,
             "no discrepancy scaling for generator '" + std::string(to_string(generator)) + "'");
    }
    table.rows.push_back(row);
  }
  if (table.rows.size() >= 2) {
    std::vector<double> x;
    std::vector<double> y;
    for (const DiscrepancyRow& r : table.rows) {
      x.push_back(static_cast<double>(r.n));
      y.push_back(r.d_star);
    }
    table.slope = loglog_slope(x, y);
  }
  return table;
}

void write_csv(std::ostream& out, const std::vector<DiscrepancyTable>& tables) {
  csv::write_row(out, {"generator", "N", "D_star", "slope"});
  for (const DiscrepancyTable& t : tables) {
    for (const DiscrepancyRow& r : t.rows) {
      csv::write_row(out, {std::string(to_string(t.generator)), csv::number(r.n),
                           csv::number(r.d_star), csv::number(t.slope)});
    }
  }
}

CoverageReport funnel_coverage(const SampleSet& samples, const std::vector<PhasePoint>& queries,
                               const LtftParams& params, FunnelKind kind, double nu) {
  params.validate();
  require(nu > 0.0, Errc::invalid_parameter, "oscillation half-width must be positive");
  const bool three = kind == FunnelKind::ltft;
  require(!three || samples.box.dimension() == 3, Errc::invalid_parameter,
          "the LTFT funnel needs a three-dimensional sample box");
  CoverageReport report;
  report.nu = nu;
  report.values.assign(queries.size(), 0.0);
  std::vector<char> excluded(queries.size(), 0);
  const double weight = samples.weight();
  const PhaseSpaceBox& box = samples.box;

  parallel_for(queries.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t q = begin; q < end; ++q) {
      const PhasePoint& g = queries[q];
      const double n_osc = three ? params.gamma + params.xi * g.c : params.gamma;
      if (!(g.b > 0.0)) {
        excluded[q] = 1;
        continue;
      }
      const Interval ta{g.a - n_osc / g.b, g.a + n_osc / g.b};
      const Interval fb{g.b - g.b / n_osc, g.b + g.b / n_osc};
      const Interval oc{g.c - nu, g.c + nu};
      const bool inside = ta.lo >= box.time.lo && ta.hi <= box.time.hi && fb.lo >= box.freq.lo &&
                          fb.hi <= box.freq.hi && (!three || (oc.lo >= box.osc.lo && oc.hi <= box.osc.hi));
      if (!inside) {
        excluded[q] = 1;
        continue;
      }
      std::size_t count = 0;
      for (const PhasePoint& s : samples.points) {
        if (ta.contains(s.a) && fb.contains(s.b) && (!three || oc.contains(s.c))) ++count;
      }
      const double volume = ta.length() * fb.length() * (three ? oc.length() : 1.0);
      report.values[q] = weight * static_cast<double>(count) / volume;
    }
  });
  report.excluded.assign(excluded.begin(), excluded.end());

  double sum = 0.0;
  std::size_t included = 0;
  report.min = std::numeric_limits<double>::infinity();
  report.max = 0.0;
  for (std::size_t q = 0; q < queries.size(); ++q) {
    if (report.excluded[q]) continue;
    ++included;
    sum += report.values[q];
    report.min = std::min(report.min, report.values[q]);
    report.max = std::max(report.max, report.values[q]);
  }
  if (included == 0) {
    report.min = 0.0;
    report.ratio = std::numeric_limits<double>::infinity();
    return report;
  }
  report.mean = sum / static_cast<double>(included);
  report.ratio = report.min > 0.0 ? report.max / report.min : std::numeric_limits<double>::infinity();
  return report;
}

}  // namespace ltft
