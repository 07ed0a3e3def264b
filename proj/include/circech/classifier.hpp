#pragma once

// Homotopy type of Cech(config, t) for arbitrary finite configurations.
//
// Pipeline: split into arc components; a covering component is reduced by
// deleting dominated vertices (strong collapses) until none is left, the
// reduced configuration is matched against the regular nerve N(m, k), and the
// GF(2) oracle is the fallback for anything that does not match.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "circech/circle.hpp"
#include "circech/exact.hpp"
#include "circech/homotopy_type.hpp"

namespace circech {

// Classification gave up: the reduced complex matched no N(m, k) and was too
// large for the homology oracle.
class UnclassifiedError : public std::runtime_error {
 public:
  UnclassifiedError(std::size_t reduced_size, std::vector<std::size_t> window_profile);

  std::size_t reduced_size() const noexcept { return reduced_size_; }
  const std::vector<std::size_t>& window_profile() const noexcept { return window_profile_; }

 private:
  std::size_t reduced_size_;
  std::vector<std::size_t> window_profile_;
};

// Maximal runs of cyclically consecutive points whose inter-point gaps are
// bridged by arcs of radius t. One block containing every point is returned
// both when the arcs cover the circle and when exactly one gap is open.
std::vector<PointConfig> components(const PointConfig& config, FiltrationRadius t);

// For each i, the number of points in the longest run starting at x_i that
// fits in a closed arc of length 2t. Capped at config.size().
std::vector<std::size_t> window_lengths(const PointConfig& config, FiltrationRadius t);

// Lowest-index vertex all of whose maximal simplices share another vertex.
std::optional<std::size_t> find_dominated_vertex(const PointConfig& config, FiltrationRadius t);

// Deletes dominated vertices, lowest index first, until none remain.
PointConfig dismantle(const PointConfig& config, FiltrationRadius t);

struct CanonicalForm {
  std::size_t m;
  std::size_t k;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// (m, k) when Cech(config, t) is combinatorially N(m, k): every maximal window
// holds exactly k + 1 consecutive points.
std::optional<CanonicalForm> recognize_canonical(const PointConfig& config, FiltrationRadius t);

// Which route produced a classification; useful in diagnostics.
enum class ClassificationRoute { kSaturated, kComponents, kFullSimplex, kCanonical, kHomologyOracle };

struct Classification {
  HomotopyType type;
  ClassificationRoute route;
  std::size_t reduced_size;
};

Classification classify_detailed(const PointConfig& config, FiltrationRadius t);

inline HomotopyType classify(const PointConfig& config, FiltrationRadius t) {
  return classify_detailed(config, t).type;
}

}  // namespace circech
