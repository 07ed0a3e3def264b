#pragma once

// Brute-force oracle: explicit Cech complexes over small vertex sets and their
// Betti numbers over GF(2). Only meant for cross-checking the fast paths.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "circech/circle.hpp"

namespace circech {

inline constexpr std::size_t kMaxOracleVertices = 20;
inline constexpr std::size_t kMaxOracleSimplices = std::size_t{1} << 20;

struct SimplicialComplex {
  std::size_t vertex_count = 0;
  // Vertex subsets as bitmasks, ordered by size then value.
  std::vector<std::uint32_t> simplices;

  bool is_face_closed() const;
  // Alternating count of simplices by dimension.
  std::int64_t euler_characteristic() const;
  // Number of simplices with `dimension + 1` vertices.
  std::size_t count(std::size_t dimension) const;
};

struct BettiVector {
  std::vector<std::int64_t> betti;  // trailing zeros trimmed

  std::int64_t euler_characteristic() const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

// Every nonempty subset passing is_simplex. Throws SizeError past 20 points.
SimplicialComplex build_complex(const PointConfig& config, FiltrationRadius t);

// Betti numbers by boundary-matrix column reduction over GF(2).
BettiVector betti_gf2(const SimplicialComplex& complex);

}  // namespace circech
