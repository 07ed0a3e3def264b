#include "circech/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <boost/math/distributions/normal.hpp>

#include "circech/circle.hpp"
#include "circech/classifier.hpp"
#include "circech/errors.hpp"
#include "circech/rng.hpp"

namespace circech {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

double z_score(double confidence) {
  require(confidence > 0.0 && confidence < 1.0, "confidence must lie in (0, 1)");
  const boost::math::normal_distribution<double> standard;
  return boost::math::quantile(standard, 0.5 + confidence / 2.0);
}

// Runs body(trial, accumulator) over [0, trials), splitting the range into
// contiguous chunks, and merges the per-chunk accumulators in chunk order.
template <class Accumulator, class Body>
Accumulator run_trials(std::int64_t trials, unsigned threads, Body body) {
  const auto workers = static_cast<std::int64_t>(std::clamp<std::int64_t>(threads == 0 ? 1 : threads, 1,
                                                                            std::max<std::int64_t>(trials, 1)));
  std::vector<Accumulator> partial(static_cast<std::size_t>(workers));
  const auto chunk = [&](std::int64_t w) {
    const std::int64_t begin = trials * w / workers;
    const std::int64_t end = trials * (w + 1) / workers;
    for (std::int64_t i = begin; i < end; ++i) body(i, partial[static_cast<std::size_t>(w)]);
  };

  if (workers == 1) {
    chunk(0);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (std::int64_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            chunk(w);
          } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  Accumulator total;
  for (auto& p : partial) total.merge(p);
  return total;
}

struct CensusTally {
  std::map<HomotopyType, std::int64_t> counts;
  std::int64_t unclassified = 0;
  std::int64_t agreements = 0;

  void merge(const CensusTally& other) {
    for (const auto& [type, count] : other.counts) counts[type] += count;
    unclassified += other.unclassified;
    agreements += other.agreements;
  }
};

struct MomentTally {
  std::int64_t sum = 0;
  std::int64_t sum_squares = 0;
  std::int64_t samples = 0;
  std::int64_t excluded = 0;

  void add(std::int64_t x) {
    sum += x;
    sum_squares += x * x;
    ++samples;
  }
  void merge(const MomentTally& other) {
    sum += other.sum;
    sum_squares += other.sum_squares;
    samples += other.samples;
    excluded += other.excluded;
  }
};

std::int64_t count_bouquets(const Census& census, std::int64_t k, auto&& in_range) {
  std::int64_t hits = 0;
  for (const auto& [type, count] : census.counts) {
    if (type.is_odd_sphere() || type.a() == 0 || type.l() != k - 1) continue;
    if (in_range(type.a() + 1)) hits += count;
  }
  return hits;
}

void require_piece(std::int64_t k, double t) {
  require(t < 0.5 && gap_count(t) == k, "k must equal floor(1 / (1 - 2t))");
}

}  // namespace

Census run_census(std::int64_t n, FiltrationRadius t, std::int64_t trials, std::uint64_t master_seed,
                  const RunOptions& options) {
  require(n >= 1, "run_census needs n >= 1");
  require(trials >= 1, "run_census needs trials >= 1");
  const auto started = std::chrono::steady_clock::now();

  const CensusTally tally = run_trials<CensusTally>(trials, options.threads, [&](std::int64_t i, CensusTally& acc) {
    CounterStream stream(master_seed, static_cast<std::uint64_t>(i));
    const PointConfig sample = sample_uniform(static_cast<std::size_t>(n), stream);
    try {
      const HomotopyType type = classify(sample, t);
      ++acc.counts[type];
      if (type.euler_characteristic() == euler_char_exact(sample, t)) ++acc.agreements;
    } catch (const UnclassifiedError&) {
      ++acc.unclassified;
    }
  });

  Census census;
  census.n = n;
  census.t = t.value();
  census.trials = trials;
  census.master_seed = master_seed;
  census.generator_id = std::string(CounterStream::kGeneratorId);
  census.counts = tally.counts;
  census.unclassified = tally.unclassified;
  census.euler_agreements = tally.agreements;
  census.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return census;
}

EstimateWithCI normal_estimate(long double sum, long double sum_squares, std::int64_t trials, double confidence) {
  require(trials >= 1, "an estimate needs at least one trial");
  const long double count = static_cast<long double>(trials);
  const long double mean = sum / count;
  long double variance = 0.0L;
  if (trials >= 2) variance = std::max(0.0L, (sum_squares - count * mean * mean) / (count - 1.0L));
  const double se = static_cast<double>(std::sqrt(variance / count));
  const double z = z_score(confidence);

  EstimateWithCI estimate;
  estimate.mean = static_cast<double>(mean);
  estimate.std_error = se;
  estimate.ci_low = estimate.mean - z * se;
  estimate.ci_high = estimate.mean + z * se;
  estimate.method = "normal";
  estimate.confidence = confidence;
  estimate.trials = trials;
  return estimate;
}

EstimateWithCI wilson_estimate(std::int64_t successes, std::int64_t trials, double confidence) {
  require(trials >= 1, "an estimate needs at least one trial");
  require(successes >= 0 && successes <= trials, "successes must lie in [0, trials]");
  const double count = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / count;
  const double z = z_score(confidence);
  const double z2 = z * z;
  const double scale = 1.0 + z2 / count;
  const double center = (p + z2 / (2.0 * count)) / scale;
  const double half = z / scale * std::sqrt(p * (1.0 - p) / count + z2 / (4.0 * count * count));

  EstimateWithCI estimate;
  estimate.mean = p;
  estimate.std_error = std::sqrt(p * (1.0 - p) / count);
  estimate.ci_low = std::min(p, std::max(0.0, center - half));
  estimate.ci_high = std::max(p, std::min(1.0, center + half));
  estimate.method = "wilson";
  estimate.confidence = confidence;
  estimate.trials = trials;
  return estimate;
}

EstimateWithCI estimate_chi(std::int64_t n, FiltrationRadius t, std::int64_t trials, std::uint64_t master_seed,
                            const RunOptions& options) {
  require(n >= 1, "estimate_chi needs n >= 1");
  require(trials >= 2, "estimate_chi needs trials >= 2");
  const MomentTally tally = run_trials<MomentTally>(trials, options.threads, [&](std::int64_t i, MomentTally& acc) {
    CounterStream stream(master_seed, static_cast<std::uint64_t>(i));
    acc.add(euler_char_exact(sample_uniform(static_cast<std::size_t>(n), stream), t));
  });
  return normal_estimate(tally.sum, tally.sum_squares, tally.samples);
}

BettiEstimate estimate_betti(std::int64_t n, FiltrationRadius t, std::int64_t dim, std::int64_t trials,
                             std::uint64_t master_seed, const RunOptions& options) {
  require(n >= 1, "estimate_betti needs n >= 1");
  require(dim >= 0, "estimate_betti needs dim >= 0");
  require(trials >= 2, "estimate_betti needs trials >= 2");
  const MomentTally tally = run_trials<MomentTally>(trials, options.threads, [&](std::int64_t i, MomentTally& acc) {
    CounterStream stream(master_seed, static_cast<std::uint64_t>(i));
    const PointConfig sample = sample_uniform(static_cast<std::size_t>(n), stream);
    try {
      const std::vector<std::int64_t> betti = classify(sample, t).betti();
      acc.add(static_cast<std::size_t>(dim) < betti.size() ? betti[static_cast<std::size_t>(dim)] : 0);
    } catch (const UnclassifiedError&) {
      ++acc.excluded;
    }
  });
  require(tally.samples >= 1, "every trial was unclassified");
  return {normal_estimate(tally.sum, tally.sum_squares, tally.samples), tally.excluded};
}

EstimateWithCI estimate_B(const Census& census, std::int64_t k, double delta) {
  require(census.classified() >= 1, "estimate_B needs a nonempty census");
  require(delta > 0.0 && delta < 1.0, "estimate_B needs delta in (0, 1)");
  require_piece(k, census.t);
  const double lower = delta * static_cast<double>(census.n);
  const std::int64_t hits = count_bouquets(census, k, [&](std::int64_t size) {
    return static_cast<double>(size * k) >= lower && size * k <= census.n;
  });
  return wilson_estimate(hits, census.classified());
}

EstimateWithCI estimate_wedge_share(const Census& census, std::int64_t k, std::int64_t lo, std::int64_t hi) {
  require(census.classified() >= 1, "estimate_wedge_share needs a nonempty census");
  require(k >= 1, "estimate_wedge_share needs k >= 1");
  const std::int64_t hits =
      count_bouquets(census, k, [&](std::int64_t size) { return size >= lo && size <= hi; });
  return wilson_estimate(hits, census.classified());
}

EstimateWithCI estimate_coverage(std::int64_t n, double radius, std::int64_t trials, std::uint64_t master_seed,
                                 const RunOptions& options) {
  require(n >= 1, "estimate_coverage needs n >= 1");
  require(radius > 0.0, "estimate_coverage needs radius > 0");
  require(trials >= 2, "estimate_coverage needs trials >= 2");
  const MomentTally tally = run_trials<MomentTally>(trials, options.threads, [&](std::int64_t i, MomentTally& acc) {
    CounterStream stream(master_seed, static_cast<std::uint64_t>(i));
    acc.add(covers_circle(sample_uniform(static_cast<std::size_t>(n), stream), radius) ? 1 : 0);
  });
  return wilson_estimate(tally.sum, tally.samples);
}

VerifyReport verify_theorem_a1(std::int64_t n, FiltrationRadius t, std::int64_t trials, std::uint64_t master_seed,
                               const RunOptions& options) {
  const double exact = expected_euler_char(n, t);
  const EstimateWithCI estimate = estimate_chi(n, t, trials, master_seed, options);
  const double diff = estimate.mean - exact;
  const double tolerance = 3.0 * estimate.std_error;

  VerifyReport report;
  report.theorem = "a1";
  report.pass = std::abs(diff) <= tolerance;
  report.numbers = {{"n", static_cast<double>(n)},
                    {"t", t.value()},
                    {"trials", static_cast<double>(trials)},
                    {"chi_exact", exact},
                    {"chi_mean", estimate.mean},
                    {"std_error", estimate.std_error},
                    {"abs_diff", std::abs(diff)},
                    {"tolerance", tolerance}};
  return report;
}

VerifyReport verify_theorem_a2(std::int64_t k, std::int64_t n, FiltrationRadius t, std::int64_t trials,
                               std::uint64_t master_seed, double epsilon, const RunOptions& options) {
  require(k >= 2, "verify_theorem_a2 needs k >= 2");
  require(epsilon > 0.0, "verify_theorem_a2 needs epsilon > 0");
  require_piece(k, t.value());
  const double nd = static_cast<double>(n);
  const double chi_normalized = expected_euler_char(n, t) / nd;
  const BettiEstimate betti = estimate_betti(n, t, 2 * k - 2, trials, master_seed, options);
  const double betti_normalized = betti.estimate.mean / nd;

  VerifyReport report;
  report.theorem = "a2";
  report.pass = betti_normalized >= chi_normalized - epsilon && betti_normalized <= chi_normalized &&
                betti.excluded == 0;
  report.numbers = {{"k", static_cast<double>(k)},
                    {"n", nd},
                    {"t", t.value()},
                    {"trials", static_cast<double>(trials)},
                    {"betti_dimension", static_cast<double>(2 * k - 2)},
                    {"chi_normalized", chi_normalized},
                    {"betti_normalized", betti_normalized},
                    {"betti_std_error_normalized", betti.estimate.std_error / nd},
                    {"lower", chi_normalized - epsilon},
                    {"upper", chi_normalized},
                    {"unclassified", static_cast<double>(betti.excluded)}};
  return report;
}

VerifyReport verify_theorem_b(std::int64_t k, std::int64_t n, FiltrationRadius t, std::int64_t trials,
                              std::uint64_t master_seed, const RunOptions& options) {
  const TheoremBParams params = theorem_b_params(k);
  require(std::abs(t.value() - params.nu) < params.tau, "verify_theorem_b needs |t - nu_k| < tau_k");
  const double slack = params.r_prime(t.value());
  // Arcs of radius r'/2 have length r'.
  const ProbabilityValue bound = coverage_probability(n, slack);
  const Census census = run_census(n, t, trials, master_seed, options);

  const auto sphere = census.counts.find(HomotopyType::odd_sphere(static_cast<int>(k)));
  const std::int64_t hits = sphere == census.counts.end() ? 0 : sphere->second;
  const EstimateWithCI frequency = wilson_estimate(hits, std::max<std::int64_t>(census.classified(), 1));

  VerifyReport report;
  report.theorem = "b";
  report.pass = census.unclassified == 0 && frequency.mean >= bound.clamped - 3.0 * frequency.std_error;
  report.numbers = {{"k", static_cast<double>(k)},
                    {"n", static_cast<double>(n)},
                    {"t", t.value()},
                    {"trials", static_cast<double>(trials)},
                    {"nu_k", params.nu},
                    {"tau_k", params.tau},
                    {"r_prime", slack},
                    {"coverage_bound", bound.clamped},
                    {"coverage_bound_raw", bound.raw},
                    {"frequency", frequency.mean},
                    {"std_error", frequency.std_error},
                    {"unclassified", static_cast<double>(census.unclassified)}};
  return report;
}

VerifyReport verify_elder_c(std::int64_t k, std::int64_t n, FiltrationRadius t, double delta, double epsilon,
                            double eta, std::int64_t trials, std::uint64_t master_seed, const RunOptions& options) {
  require_piece(k, t.value());
  const ElderCBounds bounds = elder_c_bounds(k, n, delta, epsilon);
  const TheoremCParams params_c = theorem_c_params(k, eta, n);
  const Census census = run_census(n, t, trials, master_seed, options);
  const EstimateWithCI b = estimate_B(census, k, delta);
  const EstimateWithCI event = estimate_wedge_share(census, k, params_c.wedge_lo, params_c.wedge_hi);
  const double rho = t.gap_threshold();

  VerifyReport report;
  report.theorem = "c";
  report.pass = census.unclassified == 0 && b.mean >= bounds.window_lo && b.mean <= bounds.window_hi;
  report.numbers = {{"k", static_cast<double>(k)},
                    {"n", static_cast<double>(n)},
                    {"t", t.value()},
                    {"trials", static_cast<double>(trials)},
                    {"delta", delta},
                    {"epsilon", epsilon},
                    {"alpha_lo", bounds.alpha_lo},
                    {"alpha_hi", bounds.alpha_hi},
                    {"gap_threshold", rho},
                    {"beta_lo", bounds.beta_lo},
                    {"beta_hi", bounds.beta_hi},
                    {"window_lo", bounds.window_lo},
                    {"window_hi", bounds.window_hi},
                    {"B_estimate", b.mean},
                    {"B_std_error", b.std_error},
                    {"eta", eta},
                    {"rho_kn", params_c.rho_kn},
                    {"rho_kn_printed", params_c.rho_kn_printed},
                    {"theorem_c_event_frequency", event.mean},
                    {"theorem_c_prob_lower", params_c.prob_lower},
                    {"unclassified", static_cast<double>(census.unclassified)}};
  if (rho < bounds.alpha_lo || rho > bounds.alpha_hi) {
    report.notes.push_back("1 - 2t lies outside [alpha-, alpha+]; the window is checked as a finite-n property");
  }
  report.notes.push_back("the Theorem C event frequency is reported, not asserted");
  return report;
}

}  // namespace circech
