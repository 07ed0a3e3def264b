#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "circech/errors.hpp"
#include "circech/montecarlo.hpp"
#include "circech/rng.hpp"

using namespace circech;
using Catch::Matchers::WithinAbs;

namespace {

std::int64_t count_of(const Census& census, const HomotopyType& type) {
  const auto it = census.counts.find(type);
  return it == census.counts.end() ? 0 : it->second;
}

std::int64_t total(const Census& census) {
  std::int64_t sum = census.unclassified;
  for (const auto& [type, count] : census.counts) sum += count;
  return sum;
}

bool same_payload(const Census& a, const Census& b) {
  return a.n == b.n && a.t == b.t && a.trials == b.trials && a.master_seed == b.master_seed &&
         a.generator_id == b.generator_id && a.counts == b.counts && a.unclassified == b.unclassified &&
         a.euler_agreements == b.euler_agreements;
}

}  // namespace

TEST_CASE("counter streams") {
  CounterStream a(7, 0);
  CounterStream b(7, 0);
  for (int i = 0; i < 100; ++i) CHECK(a() == b());
  CHECK(a.counter() == 100);
  CounterStream c(7, 1);
  CounterStream d(8, 0);
  CounterStream e(7, 0);
  const auto first = e();
  CHECK(c() != first);
  CHECK(d() != first);
  CounterStream u(3, 9);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(CounterStream::kGeneratorId == "splitmix64-counter/v1");
}

TEST_CASE("census of two points") {
  const Census census = run_census(2, FiltrationRadius(0.1), 100000, 1);
  CHECK(total(census) == census.trials);
  CHECK(census.unclassified == 0);
  CHECK(census.euler_agreements == census.classified());
  CHECK(census.counts.size() == 2);
  const EstimateWithCI edge = wilson_estimate(count_of(census, HomotopyType::point()), census.trials);
  const EstimateWithCI apart = wilson_estimate(count_of(census, HomotopyType::wedge(1, 0)), census.trials);
  CHECK(edge.ci_low <= 0.4);
  CHECK(0.4 <= edge.ci_high);
  CHECK(apart.ci_low <= 0.6);
  CHECK(0.6 <= apart.ci_high);
}

TEST_CASE("census in the contractible regime") {
  const Census census = run_census(5, FiltrationRadius(0.49), 100, 2);
  REQUIRE(census.counts.size() == 1);
  CHECK(count_of(census, HomotopyType::point()) == 100);
}

TEST_CASE("census keys satisfy the realisability constraint") {
  const FiltrationRadius t(0.2525);
  const Census census = run_census(50, t, 1000, 3);
  const TypeConstraint constraint = allowed_types(50, t);
  CHECK(constraint.k() == 2);
  for (const auto& [type, count] : census.counts) CHECK(constraint.accepts(type));
  CHECK(census.unclassified == 0);
  CHECK(census.euler_agreements == census.classified());
  CHECK(count_of(census, HomotopyType::odd_sphere(1)) + count_of(census, HomotopyType::point()) < 1000);
}

TEST_CASE("census does not depend on the thread count") {
  const FiltrationRadius t(0.33);
  const Census serial = run_census(60, t, 997, 99);
  for (unsigned threads : {2U, 3U, 8U}) {
    const Census parallel = run_census(60, t, 997, 99, RunOptions{threads});
    CHECK(same_payload(serial, parallel));
  }
  CHECK(run_census(3, t, 1, 5, RunOptions{4}).trials == 1);
  CHECK_THROWS_AS(run_census(3, t, 0, 5), DomainError);
}

TEST_CASE("interval estimates") {
  const EstimateWithCI w = wilson_estimate(0, 50);
  CHECK(w.mean == 0.0);
  CHECK(w.ci_low == 0.0);
  CHECK(w.ci_high > 0.0);
  CHECK(w.method == "wilson");
  const EstimateWithCI all = wilson_estimate(50, 50);
  CHECK(all.ci_high == 1.0);
  CHECK(all.ci_low < 1.0);
  for (std::int64_t s = 0; s <= 40; ++s) {
    const EstimateWithCI e = wilson_estimate(s, 40);
    CHECK(e.ci_low <= e.mean);
    CHECK(e.mean <= e.ci_high);
  }
  const EstimateWithCI n = normal_estimate(30.0L, 100.0L, 10);
  CHECK(n.mean == 3.0);
  CHECK_THAT(n.std_error, WithinAbs(std::sqrt((100.0 - 90.0) / 9.0 / 10.0), 1e-15));
  CHECK_THAT(n.ci_high - n.mean, WithinAbs(2.5758293035489 * n.std_error, 1e-9));
  CHECK(n.method == "normal");
  CHECK_THROWS_AS(wilson_estimate(3, 2), DomainError);
  CHECK_THROWS_AS(normal_estimate(1.0L, 1.0L, 0), DomainError);
}

TEST_CASE("empirical mean Euler characteristic") {
  const EstimateWithCI small = estimate_chi(3, FiltrationRadius(0.25), 100000, 1);
  CHECK(std::abs(small.mean - 0.75) <= 3.0 * small.std_error);
  const EstimateWithCI one = estimate_chi(1, FiltrationRadius(0.3), 500, 1);
  CHECK(one.mean == 1.0);
  CHECK(one.std_error == 0.0);
  const FiltrationRadius t(0.2525);
  const EstimateWithCI big = estimate_chi(100, t, 1000, 4);
  CHECK(std::abs(big.mean - expected_euler_char(100, t)) <= 3.0 * big.std_error);
  CHECK_THROWS_AS(estimate_chi(3, t, 1, 1), DomainError);
}

TEST_CASE("empirical Betti means") {
  const FiltrationRadius t(0.2525);
  const BettiEstimate b2 = estimate_betti(50, t, 2, 1000, 5);
  const double chi = expected_euler_char(50, t) / 50.0;
  CHECK(b2.excluded == 0);
  CHECK(b2.estimate.mean / 50.0 >= chi - 0.05);
  CHECK(b2.estimate.mean / 50.0 <= chi);

  const FiltrationRadius small(0.02);
  const BettiEstimate b0 = estimate_betti(10, small, 0, 1000, 6);
  CHECK(std::abs(b0.estimate.mean - expected_euler_char(10, small)) <= 3.0 * b0.estimate.std_error);

  for (std::int64_t dim = 1; dim <= 4; ++dim) {
    CHECK(estimate_betti(5, FiltrationRadius(0.49), dim, 200, 7).estimate.mean == 0.0);
  }
}

TEST_CASE("bouquet share estimates") {
  Census census;
  census.n = 100;
  census.t = 0.26;
  census.trials = 100;
  census.counts[HomotopyType::wedge(30, 1)] = 50;
  census.counts[HomotopyType::odd_sphere(1)] = 50;
  CHECK(estimate_B(census, 2, 0.5).mean == 0.5);
  CHECK_THROWS_AS(estimate_B(census, 3, 0.5), DomainError);
  CHECK_THROWS_AS(estimate_B(census, 2, 1.5), DomainError);

  Census odd = census;
  odd.counts.erase(HomotopyType::wedge(30, 1));
  odd.counts[HomotopyType::odd_sphere(1)] = 100;
  CHECK(estimate_B(odd, 2, 0.5).mean == 0.0);

  CHECK(estimate_wedge_share(census, 2, 31, 31).mean == 0.5);
  CHECK(estimate_wedge_share(census, 2, 32, 50).mean == 0.0);

  Census empty;
  empty.t = 0.26;
  CHECK_THROWS_AS(estimate_B(empty, 2, 0.5), DomainError);
}

TEST_CASE("coverage frequencies") {
  const EstimateWithCI three = estimate_coverage(3, 0.25, 100000, 1);
  CHECK(std::abs(three.mean - 0.25) <= 3.0 * three.std_error);
  CHECK(estimate_coverage(1, 0.49, 1000, 1).mean == 0.0);
  const EstimateWithCI two = estimate_coverage(2, 0.3, 100000, 2);
  CHECK(std::abs(two.mean - 0.2) <= 3.0 * two.std_error);
}

TEST_CASE("odd sphere verification") {
  const VerifyReport k0 = verify_theorem_b(0, 200, FiltrationRadius(0.125), 1000, 3);
  CHECK(k0.pass);
  const auto bound = [](const VerifyReport& r) {
    for (const auto& [name, value] : r.numbers) {
      if (name == "coverage_bound") return value;
    }
    return -1.0;
  };
  CHECK(bound(k0) > 0.99);

  const VerifyReport k1 = verify_theorem_b(1, 500, FiltrationRadius(7.0 / 24.0), 1000, 4);
  CHECK(k1.pass);

  const VerifyReport vacuous = verify_theorem_b(0, 3, FiltrationRadius(0.125), 200, 5);
  CHECK(vacuous.pass);
  CHECK(bound(vacuous) < 0.01);
  CHECK(vacuous.theorem == "b");

  CHECK_THROWS_AS(verify_theorem_b(0, 200, FiltrationRadius(0.3), 100, 1), DomainError);
}

TEST_CASE("mean Euler characteristic and Betti sandwich verification") {
  CHECK(verify_theorem_a1(50, FiltrationRadius(0.2525), 2000, 3).pass);
  const double centre = static_cast<double>(spike_center_exact(2, 50));
  CHECK(verify_theorem_a2(2, 50, FiltrationRadius(centre), 2000, 3).pass);
  CHECK_THROWS_AS(verify_theorem_a2(2, 50, FiltrationRadius(0.1), 100, 3), DomainError);
}

TEST_CASE("elder window verification") {
  const std::int64_t n = 100;
  const double t = static_cast<double>(n) / (4.0 * static_cast<double>(n - 1));
  const VerifyReport report = verify_elder_c(2, n, FiltrationRadius(t), omega(2), 0.1, 0.5, 2000, 8);
  CHECK(report.pass);
  std::set<std::string> names;
  for (const auto& [name, value] : report.numbers) names.insert(name);
  CHECK(names.count("B_estimate") == 1);
  CHECK(names.count("theorem_c_event_frequency") == 1);
  CHECK(names.count("rho_kn_printed") == 1);
}
