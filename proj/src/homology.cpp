#include "circech/homology.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <iterator>

#include "circech/errors.hpp"

namespace circech {

namespace {

bool mask_is_simplex(std::span<const double> x, std::uint32_t mask, double threshold) {
  if (std::popcount(mask) == 1) return true;
  const int first = std::countr_zero(mask);
  int previous = first;
  std::uint32_t rest = mask & (mask - 1);
  while (rest != 0) {
    const int current = std::countr_zero(rest);
    if (gap_reaches(forward_distance(x[previous], x[current]), threshold)) return true;
    previous = current;
    rest &= rest - 1;
  }
  return gap_reaches(forward_distance(x[previous], x[first]), threshold);
}

// Symmetric difference of two ascending index lists.
std::vector<std::uint32_t> add_mod2(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool SimplicialComplex::is_face_closed() const {
  std::vector<bool> present(std::size_t{1} << vertex_count, false);
  for (std::uint32_t s : simplices) present[s] = true;
  for (std::uint32_t s : simplices) {
    if (s == 0) return false;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const std::uint32_t face = s & ~(rest & -rest);
      if (face != 0 && !present[face]) return false;
    }
  }
  return true;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::uint32_t s : simplices) chi += (std::popcount(s) % 2 == 1) ? 1 : -1;
  return chi;
}

std::size_t SimplicialComplex::count(std::size_t dimension) const {
  return static_cast<std::size_t>(std::count_if(simplices.begin(), simplices.end(), [&](std::uint32_t s) {
    return static_cast<std::size_t>(std::popcount(s)) == dimension + 1;
  }));
}

std::int64_t BettiVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < betti.size(); ++d) chi += (d % 2 == 0) ? betti[d] : -betti[d];
  return chi;
}

SimplicialComplex build_complex(const PointConfig& config, FiltrationRadius t) {
  const std::size_t n = config.size();
  if (n > kMaxOracleVertices) throw SizeError("build_complex enumerates subsets and is limited to 20 points");

  SimplicialComplex complex;
  complex.vertex_count = n;
  const std::uint32_t full = n == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  const double threshold = t.gap_threshold();
  for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
    if (t.saturated() || mask_is_simplex(config.positions(), mask, threshold)) complex.simplices.push_back(mask);
  }
  std::stable_sort(complex.simplices.begin(), complex.simplices.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  assert(complex.is_face_closed());
  return complex;
}

BettiVector betti_gf2(const SimplicialComplex& complex) {
  if (complex.simplices.size() > kMaxOracleSimplices) throw SizeError("betti_gf2 is limited to 2^20 simplices");
  if (complex.vertex_count > kMaxOracleVertices) throw SizeError("betti_gf2 is limited to 20 vertices");
  if (complex.simplices.empty()) return {};

  std::size_t top = 0;
  for (std::uint32_t s : complex.simplices) top = std::max<std::size_t>(top, std::popcount(s));
  std::vector<std::vector<std::uint32_t>> by_dimension(top);
  for (std::uint32_t s : complex.simplices) by_dimension[std::popcount(s) - 1].push_back(s);

  std::vector<std::int32_t> index_of(std::size_t{1} << complex.vertex_count, -1);
  for (const auto& simplices : by_dimension) {
    for (std::size_t i = 0; i < simplices.size(); ++i) index_of[simplices[i]] = static_cast<std::int32_t>(i);
  }

  // rank[d] = rank of the boundary map from d-simplices to (d-1)-simplices.
  std::vector<std::int64_t> rank(top + 1, 0);
  for (std::size_t d = 1; d < top; ++d) {
    const auto& rows = by_dimension[d - 1];
    std::vector<std::int32_t> pivot_owner(rows.size(), -1);
    std::vector<std::vector<std::uint32_t>> reduced;
    reduced.reserve(by_dimension[d].size());
    for (std::uint32_t simplex : by_dimension[d]) {
      std::vector<std::uint32_t> column;
      for (std::uint32_t rest = simplex; rest != 0; rest &= rest - 1) {
        const std::uint32_t face = simplex & ~(rest & -rest);
        column.push_back(static_cast<std::uint32_t>(index_of[face]));
      }
      std::sort(column.begin(), column.end());
      while (!column.empty() && pivot_owner[column.back()] >= 0) {
        column = add_mod2(column, reduced[static_cast<std::size_t>(pivot_owner[column.back()])]);
      }
      if (!column.empty()) {
        pivot_owner[column.back()] = static_cast<std::int32_t>(reduced.size());
        ++rank[d];
      }
      reduced.push_back(std::move(column));
    }
  }

  BettiVector result;
  result.betti.resize(top);
  for (std::size_t d = 0; d < top; ++d) {
    result.betti[d] = static_cast<std::int64_t>(by_dimension[d].size()) - rank[d] - rank[d + 1];
  }
  while (!result.betti.empty() && result.betti.back() == 0) result.betti.pop_back();
  return result;
}

}  // namespace circech
