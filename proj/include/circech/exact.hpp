#pragma once

// Closed-form quantities for random Cech complexes on the circle of unit
// circumference: coverage probabilities, the expected Euler characteristic,
// the spike analytics of the normalised Euler curve, and the constants that
// appear in the homotopy-type probability bounds.
//
// Public entry points take the filtration radius t. Two derived coordinates
// are used internally:
//   r   = 1 - 2t   (gap threshold; a subset is a simplex iff one of its
//                   cyclic gaps is at least r)
//   k   = floor(1 / r), the number of polynomial pieces active at t.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "circech/homotopy_type.hpp"

namespace circech {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Cech filtration radius, in circumference units. Values >= 1/2 are legal:
// every arc is then the whole circle.
class FiltrationRadius {
 public:
  explicit FiltrationRadius(double t);

  double value() const noexcept { return t_; }
  // r = 1 - 2t; may be <= 0 when saturated().
  double gap_threshold() const noexcept { return 1.0 - 2.0 * t_; }
  bool saturated() const noexcept { return t_ >= 0.5; }

 private:
  double t_;
};

// floor(1 / (1 - 2t)) for t in (0, 1/2), decided exactly on the double t.
std::int64_t gap_count(double t);

// Exact rational value of a finite double.
Rational to_rational(double x);

// A probability-valued result: raw analytic value and its [0, 1] clamp.
struct ProbabilityValue {
  double raw;
  double clamped;
};

// ---------------------------------------------------------------------------
// Coverage and expected Euler characteristic
// ---------------------------------------------------------------------------

// Probability that k i.i.d. uniform arcs of length arc_length cover the circle
// (Stevens). The alternating sum is accumulated with Neumaier compensation.
ProbabilityValue coverage_probability(std::int64_t k, double arc_length);
Rational coverage_probability_exact(std::int64_t k, const Rational& arc_length);

// Expected Euler characteristic of Cech(X_n, t) for n i.i.d. uniform points:
//   sum_{j=1}^{floor(1/r)} C(n,j) (1 - j r)^(j-1) (j r)^(n-j),  r = 1 - 2t.
// All summands are nonnegative and evaluated in log space.
double expected_euler_char(std::int64_t n, FiltrationRadius t);

// Same sum truncated after the first `pieces` summands. Evaluating adjacent
// truncations at a breakpoint gives the two one-sided limits there.
double expected_euler_char_piece(std::int64_t n, FiltrationRadius t, std::int64_t pieces);

// Exact value of the positive sum.
Rational expected_euler_char_exact(std::int64_t n, const Rational& t);

// Exact value through inclusion-exclusion over coverage probabilities,
//   1 + sum_{j=1}^n (-1)^j C(n,j) Q_j,
// an algebraically independent route to the same number.
Rational expected_euler_char_alternating_exact(std::int64_t n, const Rational& t);

struct CurvePoint {
  double t;
  double chi;
  double chi_normalized;
};

// Pointwise expected_euler_char over a strictly increasing grid in (0, 1/2).
std::vector<CurvePoint> expected_euler_curve(std::int64_t n, std::span<const double> t_grid);

// Endpoint-inclusive uniform grid; steps == 1 yields {t_min}.
std::vector<double> uniform_grid(double t_min, double t_max, std::int64_t steps);

// ---------------------------------------------------------------------------
// Spike analytics
// ---------------------------------------------------------------------------

// Limiting spike height (m-1)^(m-1) / (m! e^(m-1)), with 0^0 = 1.
double omega(std::int64_t m);

// a_{m,n} = C(n,m) (m-1)^(m-1) (n-m)^(n-m) / (n (n-1)^(n-1)): the normalised
// peak of the dominant summand. Needs 1 <= m <= n, n >= 2.
double spike_lower_bound(std::int64_t m, std::int64_t n);
Rational spike_lower_bound_exact(std::int64_t m, std::int64_t n);

// b_{m,n} = e n^(m-1) (1 - 1/(m+1))^(n-1): bound on the other summands.
double spike_excess_bound(std::int64_t m, std::int64_t n);

// Spike centre s_{m,n} = (m-1) n / (2 (n-1) m) as an exact rational.
Rational spike_center_exact(std::int64_t m, std::int64_t n);

struct SpikeAnalysis {
  std::int64_t m;
  std::int64_t n;
  double center_t;
  double a_mn;
  double b_mn;
  double omega_m;
  // Window in gap-threshold coordinates r = 1 - 2t.
  double alpha_lo;
  double alpha_hi;

  // Same window mapped back to filtration radii (t_lo < t_hi).
  double window_t_lo() const noexcept { return (1.0 - alpha_hi) / 2.0; }
  double window_t_hi() const noexcept { return (1.0 - alpha_lo) / 2.0; }
};

// Requires 2 <= m, m^2 < n, n > 2 m^2 and epsilon in (0, 1).
SpikeAnalysis spike_analysis(std::int64_t m, std::int64_t n, double epsilon);

// Shape of f(t) = t^a (1-t)^b on [0, 1] for a, b >= 1.
struct PowerPeak {
  double a;
  double b;
  double t0;         // a / (a + b)
  double max_value;  // a^a b^b / (a+b)^(a+b); also the slope scale u
  double u;
  double v;  // sqrt((a+b) / (ab))

  // Linear minorant through the peak, valid on (0, 1) minus t0.
  double linear_lower_bound(double t) const noexcept;
  // |t - t0| below this radius guarantees f(t) > lambda * max_value.
  double window_radius(double lambda) const noexcept;
};

PowerPeak peak_of_power_product(double a, double b);

// f_{m,n}(t) = C(n,m) (m t)^(m-1) (1 - m t)^(n-m) for 0 <= m t <= 1.
double f_mn(std::int64_t m, std::int64_t n, double t);
// Maximiser (1 - 1/m) / (n - 1) of f_mn on (0, 1/m).
double f_mn_argmax(std::int64_t m, std::int64_t n);

// ---------------------------------------------------------------------------
// Odd-sphere and even-sphere bound constants
// ---------------------------------------------------------------------------

struct TheoremBParams {
  std::int64_t k;
  double nu;
  double tau;

  // 1/(4(k+1)(k+2)) - |t - nu|: the coverage slack available at t.
  double r_prime(double t) const noexcept { return tau - (t > nu ? t - nu : nu - t); }
};

TheoremBParams theorem_b_params(std::int64_t k);

struct TheoremCParams {
  std::int64_t k;
  double eta;
  std::int64_t n;
  // Centre radius n(k-1) / (2k(n-1)), re-derived from the elder window.
  double rho_kn;
  // The printed n(k+1) / (2k(n-1)); kept for reports only.
  double rho_kn_printed;
  double sigma_k_eta;
  double prob_lower;
  // Admissible a + 1 for the bouquet: [ceil((1-eta) omega_k n / 2), floor(n/k)].
  std::int64_t wedge_lo;
  std::int64_t wedge_hi;
};

TheoremCParams theorem_c_params(std::int64_t k, double eta, std::int64_t n);

struct ElderCBounds {
  std::int64_t k;
  std::int64_t n;
  double delta;
  double epsilon;
  double alpha_lo;
  double alpha_hi;
  double beta_lo;
  double beta_hi;
  // [beta_lo - epsilon, beta_hi + epsilon] intersected with [0, 1].
  double window_lo;
  double window_hi;
};

ElderCBounds elder_c_bounds(std::int64_t k, std::int64_t n, double delta, double epsilon);

struct BoundPair {
  double lower_raw;
  double upper_raw;
  double lower;
  double upper;
};

// Bracket on B_{k,delta} from the bouquet mass A_k.
BoundPair main_prop3_bounds(double a_k, std::int64_t n, std::int64_t k, double delta);

// ---------------------------------------------------------------------------
// Homotopy types of regular configurations and realisability constraints
// ---------------------------------------------------------------------------

// Homotopy type of N(n, k), the nerve on n equally spaced points whose
// maximal faces are k + 1 consecutive points. Integer arithmetic only.
HomotopyType n_k_homotopy(std::int64_t n, std::int64_t k);

// Necessary condition on the homotopy type of Cech(Y, t) over all n-point
// configurations Y.
class TypeConstraint {
 public:
  TypeConstraint(std::int64_t n, std::int64_t k) : n_(n), k_(k) {}

  std::int64_t n() const noexcept { return n_; }
  std::int64_t k() const noexcept { return k_; }

  // Bouquet of a spheres S^(2b).
  bool accepts_wedge(std::int64_t a, std::int64_t b) const noexcept;
  bool accepts(const HomotopyType& type) const noexcept;

 private:
  std::int64_t n_;
  std::int64_t k_;
};

TypeConstraint allowed_types(std::int64_t n, FiltrationRadius t);

}  // namespace circech
