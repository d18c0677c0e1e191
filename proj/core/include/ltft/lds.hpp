#pragma once

// Low-discrepancy point generation in the unit cube, rescaling to phase-space
// boxes, and exact star discrepancy for small point sets.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ltft/phase_space.hpp"

namespace ltft {

/// N points in [0,1)^d stored row-major.
class UnitPointSet {
 public:
  UnitPointSet() = default;
  UnitPointSet(std::size_t dim, std::vector<double> coords, Generator generator,
               std::optional<std::uint64_t> seed = std::nullopt);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const noexcept { return size() == 0; }
  Generator generator() const noexcept { return generator_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  double operator()(std::size_t i, std::size_t j) const { return coords_[i * dim_ + j]; }
  const std::vector<double>& coords() const noexcept { return coords_; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
  Generator generator_ = Generator::scaled_extern;
  std::optional<std::uint64_t> seed_;
};

enum class DiscrepancyMethod { exact, corner_bound };

struct DiscrepancyReport {
  double star_value = 0.0;
  std::size_t n = 0;
  DiscrepancyMethod method = DiscrepancyMethod::exact;
};

inline constexpr std::size_t kMaxLdsDimension = 8;

/// The j-th prime, j = 0..7.
unsigned prime_base(std::size_t j);

/// Van der Corput digit reversal of n in the given base.
double radical_inverse(std::uint64_t n, unsigned base);

/// Point n (0-based) has coordinate j = radical_inverse(n + 1, p_j): the
/// all-zero point is skipped, and every prefix is the same sequence.
UnitPointSet halton_sequence(std::size_t count, std::size_t dim);

/// Point n = (n/N, radical_inverse(n, 2), radical_inverse(n, 3), ...). Not extendable in N.
UnitPointSet hammersley_set(std::size_t count, std::size_t dim);

/// Seeded i.i.d. uniform points (mt19937_64, 53-bit mantissa conversion).
UnitPointSet mc_uniform(std::size_t count, std::size_t dim, std::uint64_t seed);

/// Coordinate-wise affine map of the unit cube onto the box. The point-set
/// dimension must equal box.dimension(); 2-D sets land on c = osc.lo.
SampleSet scale_to_box(const UnitPointSet& points, const PhaseSpaceBox& box);

/// Inverse of scale_to_box for points inside the box (coordinates clamped to [0,1)).
UnitPointSet unit_coordinates(const SampleSet& samples);

/// Largest N accepted by star_discrepancy for dimension d.
std::size_t star_discrepancy_budget(std::size_t dim);

/// Exact sup over anchored boxes [0,u): corners are enumerated from the
/// coordinate values and 1, checking both the open and the closed count at
/// each corner. Throws budget_exceeded beyond star_discrepancy_budget(dim).
DiscrepancyReport star_discrepancy(const UnitPointSet& points);

/// CSV, header "x0,x1,...", 17 significant digits.
void write_csv(std::ostream& out, const UnitPointSet& points);
UnitPointSet read_unit_points_csv(std::istream& in);

}  // namespace ltft
