#pragma once

// Brute-force reference implementations used only by the tests. None of
// them calls into the library's geometry, counting or homology code.

#include <cstdint>
#include <span>
#include <vector>

#include "circech/exact.hpp"

namespace oracle {

using circech::Rational;

double circle_distance(double a, double b);

// Closed arcs of radius t about the masked points share a point. The left
// end of some arc lies in any nonempty intersection, so those are the only
// witnesses tried.
bool arcs_intersect(std::span<const double> x, std::uint32_t mask, double t);

// Every point of the circle lies within `radius` of some x_i.
bool arcs_cover(std::vector<double> x, double radius);

// sum over nonempty simplices of (-1)^(|S|-1), by enumeration.
std::int64_t euler_brute(std::span<const double> x, double t);

// Simplex counts N_1..N_n by enumeration.
std::vector<std::int64_t> simplex_counts_brute(std::span<const double> x, double t);

// Betti numbers over GF(2) of the arc nerve, by dense elimination.
std::vector<std::int64_t> betti_dense(std::span<const double> x, double t);

// E[chi] for two points: 2 - P(edge), P(edge) = min(1, 4t).
double chi_bar_two(double t);
// E[chi] for three points by midpoint quadrature over (x1, x2) with x0 = 0.
double chi_bar_three_quadrature(double t, int steps);

// Coverage by two arcs of length a: the second start falls in a window of
// length 2a - 1.
double coverage_two(double arc_length);
// Coverage by three arcs of length a by midpoint quadrature.
double coverage_three_quadrature(double arc_length, int steps);

// max over (0, 1) of t^a (1 - t)^b by grid search refined by ternary search.
double power_product_max(double a, double b);

// C(n,j) (1 - j r)^(j-1) (j r)^(n-j) in exact arithmetic, 0^0 = 1.
Rational euler_term(std::int64_t n, std::int64_t j, const Rational& r);
// sum of euler_term over j = 1..pieces.
Rational euler_partial_sum(std::int64_t n, const Rational& t, std::int64_t pieces);
// Full sum with pieces = floor(1 / (1 - 2t)), or 1 when t >= 1/2.
Rational chi_bar_exact(std::int64_t n, const Rational& t);
// C(n,m) (m-1)^(m-1) (n-m)^(n-m) / (n (n-1)^(n-1)).
Rational spike_height_exact(std::int64_t m, std::int64_t n);

}  // namespace oracle
