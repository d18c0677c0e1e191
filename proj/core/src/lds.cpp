#include "ltft/lds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <mutex>
#include <ostream>
#include <random>
#include <string>

#include "ltft/csv.hpp"
#include "ltft/error.hpp"
#include "ltft/parallel.hpp"

namespace ltft {
namespace {

constexpr std::array<unsigned, kMaxLdsDimension> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19};

void check_range(std::size_t count, std::size_t dim) {
  require(count >= 1, Errc::invalid_parameter, "point count must be at least 1");
  require(dim >= 1, Errc::invalid_parameter, "dimension must be at least 1");
  if (dim > kMaxLdsDimension) {
    fail(Errc::unsupported_dimension,
         "dimension " + std::to_string(dim) + " exceeds the supported maximum of 8");
  }
}

// Distinct sorted values of one coordinate, and each point's rank in that list.
struct AxisRanks {
  std::vector<double> values;
  std::vector<std::size_t> rank;
};

AxisRanks rank_axis(const UnitPointSet& points, std::size_t axis) {
  const std::size_t n = points.size();
  AxisRanks out;
  out.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.values.push_back(points(i, axis));
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  out.rank.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.rank[i] = static_cast<std::size_t>(
        std::lower_bound(out.values.begin(), out.values.end(), points(i, axis)) -
        out.values.begin());
  }
  return out;
}

}  // namespace

UnitPointSet::UnitPointSet(std::size_t dim, std::vector<double> coords, Generator generator,
                           std::optional<std::uint64_t> seed)
    : dim_(dim), coords_(std::move(coords)), generator_(generator), seed_(seed) {
  require(dim_ >= 1, Errc::invalid_parameter, "dimension must be at least 1");
  require(coords_.size() % dim_ == 0, Errc::invalid_parameter,
          "coordinate count is not a multiple of the dimension");
  for (double x : coords_) {
    require(x >= 0.0 && x < 1.0, Errc::invalid_parameter, "unit coordinates must lie in [0,1)");
  }
}

unsigned prime_base(std::size_t j) {
  if (j >= kPrimes.size()) fail(Errc::unsupported_dimension, "no prime base beyond dimension 8");
  return kPrimes[j];
}

double radical_inverse(std::uint64_t n, unsigned base) {
  require(base >= 2, Errc::invalid_parameter, "radical inverse base must be at least 2");
  // Digit-reverse into an integer while base^k stays exactly representable.
  constexpr std::uint64_t kExact = std::uint64_t{1} << 53;
  std::uint64_t reversed = 0;
  std::uint64_t scale = 1;
  while (n > 0 && scale <= kExact / base) {
    reversed = reversed * base + n % base;
    scale *= base;
    n /= base;
  }
  double result = static_cast<double>(reversed) / static_cast<double>(scale);
  double weight = 1.0 / static_cast<double>(scale);
  const double inv = 1.0 / base;
  while (n > 0) {
    weight *= inv;
    result += static_cast<double>(n % base) * weight;
    n /= base;
  }
  return std::min(result, std::nextafter(1.0, 0.0));
}

UnitPointSet halton_sequence(std::size_t count, std::size_t dim) {
  check_range(count, dim);
  std::vector<double> coords(count * dim);
  for (std::size_t n = 0; n < count; ++n) {
    for (std::size_t j = 0; j < dim; ++j) coords[n * dim + j] = radical_inverse(n + 1, kPrimes[j]);
  }
  return UnitPointSet(dim, std::move(coords), Generator::halton);
}

UnitPointSet hammersley_set(std::size_t count, std::size_t dim) {
  require(dim >= 2, Errc::invalid_parameter,
          "hammersley needs dimension >= 2; use halton_sequence for d = 1");
  check_range(count, dim);
  std::vector<double> coords(count * dim);
  const double inv_n = 1.0 / static_cast<double>(count);
  for (std::size_t n = 0; n < count; ++n) {
    coords[n * dim] = static_cast<double>(n) * inv_n;
    for (std::size_t j = 1; j < dim; ++j) coords[n * dim + j] = radical_inverse(n, kPrimes[j - 1]);
  }
  return UnitPointSet(dim, std::move(coords), Generator::hammersley);
}

UnitPointSet mc_uniform(std::size_t count, std::size_t dim, std::uint64_t seed) {
  require(count >= 1, Errc::invalid_parameter, "point count must be at least 1");
  require(dim >= 1, Errc::invalid_parameter, "dimension must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<double> coords(count * dim);
  for (double& x : coords) x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return UnitPointSet(dim, std::move(coords), Generator::mc, seed);
}

SampleSet scale_to_box(const UnitPointSet& points, const PhaseSpaceBox& box) {
  if (points.dim() != box.dimension()) {
    fail(Errc::invalid_parameter, "point dimension " + std::to_string(points.dim()) +
                                      " does not match box dimension " +
                                      std::to_string(box.dimension()));
  }
  SampleSet out;
  out.box = box;
  out.generator = points.generator();
  out.seed = points.seed();
  out.points.resize(points.size());
  const bool three = points.dim() == 3;
  for (std::size_t i = 0; i < points.size(); ++i) {
    PhasePoint& p = out.points[i];
    p.a = box.time.lo + points(i, 0) * box.time.length();
    p.b = box.freq.lo + points(i, 1) * box.freq.length();
    p.c = three ? box.osc.lo + points(i, 2) * box.osc.length() : box.osc.lo;
  }
  return out;
}

UnitPointSet unit_coordinates(const SampleSet& samples) {
  const std::size_t dim = samples.box.dimension();
  const double below_one = std::nextafter(1.0, 0.0);
  auto unit = [&](double x, const Interval& side) {
    return std::clamp((x - side.lo) / side.length(), 0.0, below_one);
  };
  std::vector<double> coords;
  coords.reserve(samples.size() * dim);
  for (const PhasePoint& p : samples.points) {
    coords.push_back(unit(p.a, samples.box.time));
    coords.push_back(unit(p.b, samples.box.freq));
    if (dim == 3) coords.push_back(unit(p.c, samples.box.osc));
  }
  return UnitPointSet(dim, std::move(coords), samples.generator, samples.seed);
}

std::size_t star_discrepancy_budget(std::size_t dim) {
  switch (dim) {
    case 1: return std::size_t{1} << 20;
    case 2: return std::size_t{1} << 10;
    case 3: return std::size_t{1} << 7;
    case 4: return 32;
    default: return 12;
  }
}

DiscrepancyReport star_discrepancy(const UnitPointSet& points) {
  const std::size_t n = points.size();
  const std::size_t d = points.dim();
  require(n >= 1, Errc::invalid_parameter, "star discrepancy of an empty set is undefined");
  if (n > star_discrepancy_budget(d)) {
    fail(Errc::budget_exceeded, "exact star discrepancy limited to N <= " +
                                    std::to_string(star_discrepancy_budget(d)) + " in dimension " +
                                    std::to_string(d));
  }

  std::vector<AxisRanks> axes;
  axes.reserve(d);
  for (std::size_t j = 0; j < d; ++j) axes.push_back(rank_axis(points, j));
  const double inv_n = 1.0 / static_cast<double>(n);
  const std::size_t last = d - 1;
  const std::size_t last_candidates = axes[last].values.size() + 1;

  // Each task fixes the first coordinate's candidate; the remaining leading
  // coordinates are enumerated odometer-style and the last one is swept with a
  // rank histogram, so one corner prefix costs O(N).
  const std::size_t first_candidates = d == 1 ? 1 : axes[0].values.size() + 1;
  std::vector<double> task_max(first_candidates, 0.0);

  parallel_for(first_candidates, [&](std::size_t begin, std::size_t end) {
    std::vector<std::size_t> corner(d, 0);
    std::vector<std::size_t> open_hist(last_candidates);
    std::vector<std::size_t> closed_hist(last_candidates);
    for (std::size_t t = begin; t < end; ++t) {
      double best = 0.0;
      std::fill(corner.begin(), corner.end(), 0);
      if (d > 1) corner[0] = t;
      while (true) {
        double volume = 1.0;
        for (std::size_t j = 0; j < last; ++j) {
          volume *= corner[j] < axes[j].values.size() ? axes[j].values[corner[j]] : 1.0;
        }
        std::fill(open_hist.begin(), open_hist.end(), 0);
        std::fill(closed_hist.begin(), closed_hist.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
          bool open = true;
          bool closed = true;
          for (std::size_t j = 0; j < last && closed; ++j) {
            const std::size_t r = axes[j].rank[i];
            open = open && r < corner[j];
            closed = r <= corner[j];
          }
          const std::size_t r_last = axes[last].rank[i];
          if (open) ++open_hist[r_last];
          if (closed) ++closed_hist[r_last];
        }
        // Candidate u_last = values[k] (k < size) or 1 (k == size).
        std::size_t open_count = 0;
        std::size_t closed_count = 0;
        for (std::size_t k = 0; k < last_candidates; ++k) {
          const bool at_one = k + 1 == last_candidates;
          const double u = at_one ? 1.0 : axes[last].values[k];
          // At u = 1 both counts are already complete: coordinates are < 1.
          if (!at_one) closed_count += closed_hist[k];
          const double vol = volume * u;
          best = std::max(best, vol - static_cast<double>(open_count) * inv_n);
          best = std::max(best, static_cast<double>(closed_count) * inv_n - vol);
          if (!at_one) open_count += open_hist[k];
        }
        // Advance leading coordinates 1..last-1.
        std::size_t j = 1;
        for (; j < last; ++j) {
          if (++corner[j] <= axes[j].values.size()) break;
          corner[j] = 0;
        }
        if (j >= last) break;
      }
      task_max[t] = best;
    }
  });

  DiscrepancyReport report;
  report.n = n;
  report.method = DiscrepancyMethod::exact;
  report.star_value = std::clamp(*std::max_element(task_max.begin(), task_max.end()), 0.0, 1.0);
  return report;
}

void write_csv(std::ostream& out, const UnitPointSet& points) {
  std::vector<std::string> header;
  for (std::size_t j = 0; j < points.dim(); ++j) header.push_back("x" + std::to_string(j));
  csv::write_row(out, header);
  char buf[32];
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < points.dim(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", points(i, j));
      row.emplace_back(buf);
    }
    csv::write_row(out, row);
  }
}

UnitPointSet read_unit_points_csv(std::istream& in) {
  std::string line;
  std::size_t dim = 0;
  std::vector<double> coords;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto fields = csv::split_row(line);
    if (!header_seen) {
      header_seen = true;
      dim = fields.size();
      continue;
    }
    if (fields.size() != dim) fail(Errc::parse_error, "ragged point CSV row");
    for (const auto& f : fields) {
      char* end = nullptr;
      const double x = std::strtod(f.c_str(), &end);
      if (end == f.c_str()) fail(Errc::parse_error, "non-numeric coordinate '" + f + "'");
      coords.push_back(x);
    }
  }
  require(header_seen && dim > 0, Errc::parse_error, "point CSV has no header");
  return UnitPointSet(dim, std::move(coords), Generator::scaled_extern);
}

}  // namespace ltft
