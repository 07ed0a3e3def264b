#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <sstream>

#include "circech/circle.hpp"
#include "circech/errors.hpp"
#include "circech/homology.hpp"
#include "circech/rng.hpp"
#include "oracles.hpp"

using namespace circech;
using Catch::Matchers::WithinAbs;

namespace {

PointConfig random_config(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = u(gen);
  return PointConfig::from_positions(std::move(x));
}

std::vector<double> as_vector(const PointConfig& c) { return {c.positions().begin(), c.positions().end()}; }

}  // namespace

TEST_CASE("point configurations") {
  const PointConfig c = PointConfig::from_positions({0.5, 0.1, 0.5, 0.9});
  CHECK(c.size() == 3);
  CHECK(as_vector(c) == std::vector<double>{0.1, 0.5, 0.9});
  const std::vector<double> gaps = c.gaps();
  CHECK_THAT(std::accumulate(gaps.begin(), gaps.end(), 0.0), WithinAbs(1.0, 1e-12));
  CHECK_THAT(c.gap(2), WithinAbs(0.2, 1e-12));
  CHECK_THAT(c.max_gap(), WithinAbs(0.4, 1e-12));
  CHECK(c.without(1) == PointConfig::from_positions({0.1, 0.9}));
  CHECK_THROWS_AS(PointConfig::from_positions({0.2, 1.0}), DomainError);
  CHECK_THROWS_AS(PointConfig::from_positions({-0.01}), DomainError);
}

TEST_CASE("uniform configurations") {
  CHECK(as_vector(uniform_config(4)) == std::vector<double>{0.0, 0.25, 0.5, 0.75});
  CHECK(as_vector(uniform_config(1)) == std::vector<double>{0.0});
  for (double g : uniform_config(5).gaps()) CHECK_THAT(g, WithinAbs(0.2, 1e-15));
  CHECK_THROWS_AS(uniform_config(0), DomainError);
}

TEST_CASE("sampling is deterministic and uniform") {
  CounterStream a(42, 3);
  CounterStream b(42, 3);
  CHECK(sample_uniform(3, a) == sample_uniform(3, b));
  CounterStream other(42, 4);
  CounterStream again(42, 3);
  CHECK_FALSE(sample_uniform(3, other) == sample_uniform(3, again));

  CounterStream one(1, 0);
  const PointConfig single = sample_uniform(1, one);
  CHECK(single.gaps() == std::vector<double>{1.0});

  CounterStream big(9, 0);
  const PointConfig many = sample_uniform(10000, big);
  const double mean = std::accumulate(many.positions().begin(), many.positions().end(), 0.0) / 10000.0;
  CHECK(mean >= 0.49);
  CHECK(mean <= 0.51);

  CounterStream zero(1, 0);
  CHECK_THROWS_AS(sample_uniform(0, zero), DomainError);
}

TEST_CASE("simplex predicate examples") {
  const PointConfig three = PointConfig::from_positions({0.0, 0.4, 0.8});
  const std::vector<std::size_t> all = {0, 1, 2};
  CHECK_FALSE(is_simplex(three, all, FiltrationRadius(0.225)));
  const PointConfig pair = PointConfig::from_positions({0.0, 0.5});
  CHECK(is_simplex(pair, std::vector<std::size_t>{0, 1}, FiltrationRadius(0.25)));
  CHECK(is_simplex(three, std::vector<std::size_t>{1}, FiltrationRadius(0.01)));
  CHECK_THROWS_AS(is_simplex(three, std::vector<std::size_t>{}, FiltrationRadius(0.2)), DomainError);
  CHECK_THROWS_AS(is_simplex(three, std::uint64_t{0}, FiltrationRadius(0.2)), DomainError);
}

TEST_CASE("simplex predicate agrees with arc intersection and is monotone") {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> radius(0.0, 0.5);
  for (int trial = 0; trial < 100000; ++trial) {
    const std::size_t n = 1 + gen() % 10;
    const PointConfig c = random_config(gen, n);
    const double t = radius(gen) + 1e-9;
    const auto mask = static_cast<std::uint32_t>(1 + gen() % ((std::uint64_t{1} << c.size()) - 1));
    const bool simplex = is_simplex(c, mask, FiltrationRadius(t));
    CHECK(simplex == oracle::arcs_intersect(c.positions(), mask, t));
    if (simplex) {
      const std::uint32_t sub = mask & static_cast<std::uint32_t>(gen());
      if (sub != 0) CHECK(is_simplex(c, sub, FiltrationRadius(t)));
      CHECK(is_simplex(c, mask, FiltrationRadius(std::min(0.5, t + 0.01))));
    }
  }
}

TEST_CASE("build_complex examples") {
  const SimplicialComplex c4 = build_complex(uniform_config(4), FiltrationRadius(0.13));
  CHECK(c4.count(0) == 4);
  CHECK(c4.count(1) == 4);
  CHECK(c4.count(2) == 0);
  CHECK(c4.is_face_closed());

  const SimplicialComplex s2 = build_complex(uniform_config(4), FiltrationRadius(0.26));
  CHECK(s2.count(2) == 4);
  CHECK(s2.count(3) == 0);
  CHECK(s2.euler_characteristic() == 2);

  const SimplicialComplex two = build_complex(PointConfig::from_positions({0.0, 0.5}), FiltrationRadius(0.2));
  CHECK(two.simplices.size() == 2);

  CHECK_THROWS_AS(build_complex(uniform_config(21), FiltrationRadius(0.1)), SizeError);
}

TEST_CASE("betti_gf2 examples") {
  CHECK(betti_gf2(build_complex(uniform_config(4), FiltrationRadius(0.13))).betti == std::vector<std::int64_t>{1, 1});
  CHECK(betti_gf2(build_complex(uniform_config(4), FiltrationRadius(0.26))).betti ==
        std::vector<std::int64_t>{1, 0, 1});
  CHECK(betti_gf2(build_complex(uniform_config(1), FiltrationRadius(0.1))).betti == std::vector<std::int64_t>{1});
}

TEST_CASE("euler_char_exact examples") {
  CHECK(euler_char_exact(PointConfig::from_positions({0.0, 0.5}), FiltrationRadius(0.2)) == 2);
  CHECK(euler_char_exact(uniform_config(4), FiltrationRadius(0.26)) == 2);
  std::mt19937_64 gen(3);
  for (int i = 0; i < 50; ++i) {
    CHECK(euler_char_exact(random_config(gen, 1 + gen() % 60), FiltrationRadius(0.5)) == 1);
  }
}

TEST_CASE("euler_char_exact agrees with enumeration and homology") {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> radius(0.0, 0.5);
  for (int trial = 0; trial < 500; ++trial) {
    const PointConfig c = random_config(gen, 1 + gen() % 15);
    const double t = radius(gen) + 1e-9;
    const FiltrationRadius ft(t);
    const std::int64_t chi = euler_char_exact(c, ft);
    CHECK(chi == oracle::euler_brute(c.positions(), t));
    const SimplicialComplex complex = build_complex(c, ft);
    CHECK(chi == complex.euler_characteristic());
    CHECK(chi == betti_gf2(complex).euler_characteristic());

    const std::vector<BigInt> counts = simplex_counts(c, ft);
    const std::vector<std::int64_t> brute = oracle::simplex_counts_brute(c.positions(), t);
    REQUIRE(counts.size() == brute.size());
    for (std::size_t s = 0; s < counts.size(); ++s) CHECK(counts[s] == brute[s]);
  }
}

TEST_CASE("betti_gf2 agrees with dense elimination") {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> radius(0.0, 0.5);
  for (int trial = 0; trial < 300; ++trial) {
    const PointConfig c = random_config(gen, 1 + gen() % 12);
    const double t = radius(gen) + 1e-9;
    CHECK(betti_gf2(build_complex(c, FiltrationRadius(t))).betti == oracle::betti_dense(c.positions(), t));
  }
}

TEST_CASE("large configurations use the counting DP") {
  std::mt19937_64 gen(6);
  const PointConfig c = random_config(gen, 150);
  const FiltrationRadius t(0.3);
  const std::vector<BigInt> counts = simplex_counts(c, t);
  BigInt alternating = 0;
  for (std::size_t s = 0; s < counts.size(); ++s) alternating += (s % 2 == 0) ? counts[s] : BigInt(-counts[s]);
  CHECK(alternating == euler_char_exact(c, t));
}

TEST_CASE("coverage examples and duality with the full simplex") {
  CHECK(covers_circle(uniform_config(4), 0.125));
  CHECK_FALSE(covers_circle(PointConfig::from_positions({0.0, 0.5}), 0.2));
  CHECK_THROWS_AS(covers_circle(uniform_config(4), 0.0), DomainError);

  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> radius(0.0, 0.5);
  std::vector<std::size_t> indices;
  for (int trial = 0; trial < 100000; ++trial) {
    const PointConfig c = random_config(gen, 1 + gen() % 10);
    const double t = radius(gen) + 1e-9;
    if (t >= 0.5) continue;
    indices.resize(c.size());
    std::iota(indices.begin(), indices.end(), 0);
    const bool full = is_simplex(c, indices, FiltrationRadius(t));
    CHECK(covers_circle(c, 0.5 - t) != full);
    CHECK(covers_circle(c, 0.5 - t) == oracle::arcs_cover(as_vector(c), 0.5 - t));
  }
}

TEST_CASE("coverage frequency for three arcs of length one half") {
  constexpr int kTrials = 100000;
  int hits = 0;
  for (int i = 0; i < kTrials; ++i) {
    CounterStream stream(77, static_cast<std::uint64_t>(i));
    hits += covers_circle(sample_uniform(3, stream), 0.25) ? 1 : 0;
  }
  const double p = static_cast<double>(hits) / kTrials;
  CHECK(std::abs(p - 0.25) <= 3.0 * std::sqrt(0.25 * 0.75 / kTrials));
}

TEST_CASE("expected value bridge") {
  for (auto [n, t] : {std::pair{10, 0.1}, std::pair{50, 0.2525}, std::pair{100, 0.33}}) {
    constexpr int kTrials = 10000;
    double sum = 0.0;
    double sum_squares = 0.0;
    for (int i = 0; i < kTrials; ++i) {
      CounterStream stream(2024, static_cast<std::uint64_t>(i));
      const auto chi = static_cast<double>(euler_char_exact(sample_uniform(n, stream), FiltrationRadius(t)));
      sum += chi;
      sum_squares += chi * chi;
    }
    const double mean = sum / kTrials;
    const double se = std::sqrt((sum_squares / kTrials - mean * mean) / (kTrials - 1));
    CHECK(std::abs(mean - expected_euler_char(n, FiltrationRadius(t))) <= 3.0 * se + 1e-12);
  }
}

TEST_CASE("point files") {
  std::istringstream good("# sample\n0.5\n\n0.25  # inline\n0\n");
  const PointConfig c = read_points(good);
  CHECK(as_vector(c) == std::vector<double>{0.0, 0.25, 0.5});

  std::ostringstream out;
  write_points(out, c);
  std::istringstream back(out.str());
  CHECK(read_points(back) == c);

  std::mt19937_64 gen(12);
  const PointConfig r = random_config(gen, 40);
  std::ostringstream rout;
  write_points(rout, r);
  std::istringstream rback(rout.str());
  CHECK(read_points(rback) == r);

  std::istringstream outside("0.1\n0.2\n1.0\n");
  try {
    read_points(outside);
    FAIL("expected a PointFileError");
  } catch (const PointFileError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream garbage("0.1\nabc\n");
  try {
    read_points(garbage);
    FAIL("expected a PointFileError");
  } catch (const PointFileError& e) {
    CHECK(e.line() == 2);
  }
}
