#pragma once

// Seeded Monte Carlo experiments on X_n, the i.i.d. uniform sample of n points.
//
// Trial i draws its sample from CounterStream(master_seed, i), and every
// tally is an integer reduction, so results do not depend on the number of
// threads or on scheduling.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "circech/exact.hpp"
#include "circech/homotopy_type.hpp"

namespace circech {

struct RunOptions {
  unsigned threads = 1;
};

struct Census {
  std::int64_t n = 0;
  double t = 0.0;
  std::int64_t trials = 0;
  std::uint64_t master_seed = 0;
  std::string generator_id;
  std::map<HomotopyType, std::int64_t> counts;
  std::int64_t unclassified = 0;
  // Classified trials whose type's Euler characteristic matched the
  // independent DP count.
  std::int64_t euler_agreements = 0;
  // Wall-clock time; not part of the reproducible payload.
  double elapsed_seconds = 0.0;

  std::int64_t classified() const noexcept { return trials - unclassified; }
};

// Samples, classifies and tallies `trials` configurations. Unclassified
// samples are counted, never thrown.
Census run_census(std::int64_t n, FiltrationRadius t, std::int64_t trials, std::uint64_t master_seed,
                  const RunOptions& options = {});

struct EstimateWithCI {
  double mean = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::string method;  // "normal" or "wilson"
  double confidence = 0.99;
  std::int64_t trials = 0;
};

inline constexpr double kDefaultConfidence = 0.99;

// Normal interval from integer sums of x and x^2 over `trials` samples.
EstimateWithCI normal_estimate(long double sum, long double sum_squares, std::int64_t trials,
                               double confidence = kDefaultConfidence);
// Wilson score interval for `successes` out of `trials`.
EstimateWithCI wilson_estimate(std::int64_t successes, std::int64_t trials, double confidence = kDefaultConfidence);

// Mean Euler characteristic through the exact DP count (not the classifier).
EstimateWithCI estimate_chi(std::int64_t n, FiltrationRadius t, std::int64_t trials, std::uint64_t master_seed,
                            const RunOptions& options = {});

struct BettiEstimate {
  EstimateWithCI estimate;
  std::int64_t excluded = 0;  // unclassified samples
};

// Mean of b_dim derived from the classifier.
BettiEstimate estimate_betti(std::int64_t n, FiltrationRadius t, std::int64_t dim, std::int64_t trials,
                             std::uint64_t master_seed, const RunOptions& options = {});

// Share of classified trials that are bouquets of S^(2k-2) with
// delta n / k <= a + 1 <= n / k. k must equal floor(1 / (1 - 2t)).
EstimateWithCI estimate_B(const Census& census, std::int64_t k, double delta);

// Share of classified trials that are bouquets of S^(2k-2) with a + 1 in
// [lo, hi]; used for the reported Theorem C event.
EstimateWithCI estimate_wedge_share(const Census& census, std::int64_t k, std::int64_t lo, std::int64_t hi);

// Frequency with which closed arcs of `radius` about X_n cover the circle.
EstimateWithCI estimate_coverage(std::int64_t n, double radius, std::int64_t trials, std::uint64_t master_seed,
                                 const RunOptions& options = {});

struct VerifyReport {
  std::string theorem;
  bool pass = false;
  // Ordered name/value pairs of every number that went into the verdict.
  std::vector<std::pair<std::string, double>> numbers;
  std::vector<std::string> notes;
};

// Empirical mean Euler characteristic against the closed form, |diff| <= 3 se.
VerifyReport verify_theorem_a1(std::int64_t n, FiltrationRadius t, std::int64_t trials, std::uint64_t master_seed,
                               const RunOptions& options = {});

// chi/n - epsilon <= mean b_(2k-2) / n <= chi/n with chi exact.
VerifyReport verify_theorem_a2(std::int64_t k, std::int64_t n, FiltrationRadius t, std::int64_t trials,
                               std::uint64_t master_seed, double epsilon = 0.05, const RunOptions& options = {});

// Frequency of S^(2k+1) against the coverage bound at |t - nu_k| < tau_k.
VerifyReport verify_theorem_b(std::int64_t k, std::int64_t n, FiltrationRadius t, std::int64_t trials,
                              std::uint64_t master_seed, const RunOptions& options = {});

// Empirical B_{k,delta} inside [beta- - epsilon, min(1, beta+ + epsilon)];
// the Theorem C event frequency at `eta` is reported alongside.
VerifyReport verify_elder_c(std::int64_t k, std::int64_t n, FiltrationRadius t, double delta, double epsilon,
                            double eta, std::int64_t trials, std::uint64_t master_seed, const RunOptions& options = {});

}  // namespace circech
