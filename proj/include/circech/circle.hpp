#pragma once

// Finite point sets on the circle R/Z and the Cech simplex rule for closed
// arcs of radius t centred at them.
//
// A nonempty subset spans a simplex iff its arcs share a point, which happens
// iff the subset fits in a closed arc of length 2t, i.e. iff one of its cyclic
// gaps is at least 1 - 2t. Every component of the library goes through the
// comparisons below so that ties are resolved identically everywhere.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "circech/exact.hpp"
#include "circech/rng.hpp"

namespace circech {

// Gaps within this distance of a threshold count as touching it (closed arcs).
inline constexpr double kTieTolerance = 1e-12;

// Arc length travelled counter-clockwise from `from` to `to`, in (0, 1] for
// distinct points of [0, 1). Equal points give a full turn.
inline double forward_distance(double from, double to) noexcept {
  return to > from ? to - from : (to - from) + 1.0;
}

// Cyclic gap reaching the simplex threshold 1 - 2t.
inline bool gap_reaches(double gap, double threshold) noexcept {
  return gap >= threshold - kTieTolerance;
}

// Gap bridged by closed arcs whose radii sum to `reach`.
inline bool gap_bridged(double gap, double reach) noexcept { return gap <= reach + kTieTolerance; }

class PointConfig {
 public:
  PointConfig() = default;

  // Sorts, merges exact duplicates, and rejects values outside [0, 1).
  static PointConfig from_positions(std::vector<double> positions);

  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }
  double operator[](std::size_t i) const noexcept { return positions_[i]; }
  std::span<const double> positions() const noexcept { return positions_; }

  // Gap after point i, up to the next point cyclically. A single point has
  // the whole circle as its gap.
  double gap(std::size_t i) const noexcept;
  std::vector<double> gaps() const;
  double max_gap() const noexcept;

  PointConfig without(std::size_t index) const;

  friend bool operator==(const PointConfig&, const PointConfig&) = default;

 private:
  explicit PointConfig(std::vector<double> sorted) : positions_(std::move(sorted)) {}

  std::vector<double> positions_;
};

// n i.i.d. uniform points drawn from `stream`.
PointConfig sample_uniform(std::size_t n, CounterStream& stream);

// {i / n : i = 0 .. n-1}.
PointConfig uniform_config(std::size_t n);

// Simplex test on a subset given by indices into `config`.
bool is_simplex(const PointConfig& config, std::span<const std::size_t> subset, FiltrationRadius t);
// Same, with the subset as a bitmask over the first 64 points.
bool is_simplex(const PointConfig& config, std::uint64_t subset_mask, FiltrationRadius t);

// Whether closed arcs of the given radius cover the circle.
bool covers_circle(const PointConfig& config, double radius);

// Euler characteristic of Cech(config, t), exact.
//
// chi = sum_s (-1)^(s-1) N_s with N_s = C(n,s) - M_s, where M_s counts the
// s-subsets whose cyclic gaps all fall short of 1 - 2t. The alternating sum of
// the M_s is accumulated directly by a signed chain count over consecutive
// selected points, which is O(n^2) and never leaves {-1, 0, 1} per entry.
std::int64_t euler_char_exact(const PointConfig& config, FiltrationRadius t);

// Face counts N_1 .. N_n of Cech(config, t) as exact integers, by the
// unsigned O(n^3) chain count.
std::vector<BigInt> simplex_counts(const PointConfig& config, FiltrationRadius t);

// Point file: one decimal per line, '#' starts a comment, blank lines ignored.
PointConfig read_points(std::istream& in);
void write_points(std::ostream& out, const PointConfig& config);

}  // namespace circech
