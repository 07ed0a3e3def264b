#include "circech/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "circech/circle.hpp"
#include "circech/errors.hpp"

namespace circech {

namespace {

constexpr std::int64_t kExactBinomialLimit = 60;

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();
constexpr std::int64_t kExactCoverageLimit = 4096;

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  k = std::min(k, n - k);
  if (n <= kExactBinomialLimit) {
    // C(60, 30) < 2^63 and every intermediate c * (n - k + i) stays below 2^64.
    std::uint64_t c = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
      c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return std::log(static_cast<double>(c));
  }
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    c *= (n - k + i);
    c /= i;
  }
  return c;
}

template <class T>
T ipow(T base, std::int64_t exponent) {
  T result = 1;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

BigInt floor_of(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quotient = num / den;
  if (num < 0 && quotient * den != num) quotient -= 1;
  return quotient;
}

// Whether j * (1 - 2t) <= 1, i.e. j - 1 <= 2 j t, decided without rounding.
bool piece_active(std::int64_t j, double t) {
  const double scale = 2.0 * static_cast<double>(j);
  const double product = scale * t;
  const double error = std::fma(scale, t, -product);
  const double target = static_cast<double>(j - 1);
  return product > target || (product == target && error >= 0.0);
}

// log of the j-th summand's magnitude and its sign, for the polynomial piece
// C(n,j) (1 - j r)^(j-1) (j r)^(n-j) at r = 1 - 2t.
struct LogTerm {
  double log_magnitude;
  int sign;
};

LogTerm euler_log_term(std::int64_t n, std::int64_t j, double t) {
  const double jd = static_cast<double>(j);
  const double remainder = std::fma(2.0 * jd, t, 1.0 - jd);  // 1 - j r
  const double covered = std::fma(-2.0 * jd, t, jd);         // j r
  LogTerm term{log_binomial(n, j), 1};
  if (j > 1) {
    if (remainder == 0.0) return {-std::numeric_limits<double>::infinity(), 1};
    term.log_magnitude += static_cast<double>(j - 1) * std::log(std::abs(remainder));
    if (remainder < 0.0 && ((j - 1) & 1)) term.sign = -1;
  }
  if (n > j) {
    if (covered == 0.0) return {-std::numeric_limits<double>::infinity(), 1};
    term.log_magnitude += static_cast<double>(n - j) * std::log(std::abs(covered));
    if (covered < 0.0 && ((n - j) & 1)) term.sign = -term.sign;
  }
  return term;
}

}  // namespace

FiltrationRadius::FiltrationRadius(double t) : t_(t) {
  require(std::isfinite(t) && t > 0.0, "filtration radius must be a finite value > 0");
}

std::int64_t gap_count(double t) {
  require(std::isfinite(t) && t > 0.0 && t < 0.5, "gap_count needs t in (0, 1/2)");
  const double guess = std::floor(1.0 / (1.0 - 2.0 * t));
  constexpr double kCap = 4503599627370496.0;  // 2^52
  std::int64_t k = static_cast<std::int64_t>(std::clamp(guess, 1.0, kCap));
  while (k > 1 && !piece_active(k, t)) --k;
  while (static_cast<double>(k) < kCap && piece_active(k + 1, t)) ++k;
  return k;
}

Rational to_rational(double x) {
  require(std::isfinite(x), "to_rational needs a finite value");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result{BigInt(scaled)};
  if (exponent > 0) {
    result *= Rational(BigInt(1) << exponent);
  } else if (exponent < 0) {
    result /= Rational(BigInt(1) << -exponent);
  }
  return result;
}

ProbabilityValue coverage_probability(std::int64_t k, double arc_length) {
  require(k >= 1, "coverage_probability needs k >= 1");
  require(std::isfinite(arc_length) && arc_length > 0.0, "coverage_probability needs arc_length > 0");
  if (arc_length >= 1.0) return {1.0, 1.0};

  CompensatedSum sum;
  double error_bound = 0.0;
  for (std::int64_t l = 0; l <= k; ++l) {
    const double ld = static_cast<double>(l);
    const double excess = std::fma(ld, arc_length, -1.0);  // l a - 1, one rounding
    if (excess > 0.0) break;
    double log_term = log_binomial(k, l);
    if (k > 1) {
      if (excess == 0.0) continue;  // 0^(k-1)
      log_term += static_cast<double>(k - 1) * std::log(-excess);
    }
    const double term = std::exp(log_term);
    error_bound += term * (std::abs(log_term) + static_cast<double>(k) + 2.0) * kEpsilon;
    sum.add((l & 1) ? -term : term);
  }
  double raw = sum.value();
  // Heavy cancellation: the rational sum at the exact double is cheap for
  // moderate k.
  if (error_bound > 1e-15 + 1e-13 * std::abs(raw) && k <= kExactCoverageLimit) {
    raw = static_cast<double>(coverage_probability_exact(k, to_rational(arc_length)));
  }
  return {raw, std::clamp(raw, 0.0, 1.0)};
}

Rational coverage_probability_exact(std::int64_t k, const Rational& arc_length) {
  require(k >= 1, "coverage_probability needs k >= 1");
  require(arc_length > 0, "coverage_probability needs arc_length > 0");
  if (arc_length >= 1) return Rational(1);

  const BigInt pieces = floor_of(Rational(1) / arc_length);
  const std::int64_t last = pieces > k ? k : static_cast<std::int64_t>(pieces);
  Rational total = 0;
  BigInt c = 1;  // C(k, l)
  for (std::int64_t l = 0; l <= last; ++l) {
    if (l > 0) {
      c *= (k - l + 1);
      c /= l;
    }
    Rational term = Rational(c) * ipow(Rational(1) - arc_length * l, k - 1);
    if (l & 1) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

double expected_euler_char(std::int64_t n, FiltrationRadius t) {
  require(n >= 1, "expected_euler_char needs n >= 1");
  if (t.saturated()) return 1.0;
  return expected_euler_char_piece(n, t, gap_count(t.value()));
}

double expected_euler_char_piece(std::int64_t n, FiltrationRadius t, std::int64_t pieces) {
  require(n >= 1, "expected_euler_char needs n >= 1");
  require(pieces >= 0, "piece count must be >= 0");
  CompensatedSum sum;
  const std::int64_t last = std::min(pieces, n);
  for (std::int64_t j = 1; j <= last; ++j) {
    const LogTerm term = euler_log_term(n, j, t.value());
    if (std::isinf(term.log_magnitude)) continue;
    sum.add(term.sign * std::exp(term.log_magnitude));
  }
  return sum.value();
}

Rational expected_euler_char_exact(std::int64_t n, const Rational& t) {
  require(n >= 1, "expected_euler_char needs n >= 1");
  require(t > 0, "filtration radius must be > 0");
  if (t * 2 >= 1) return Rational(1);

  const Rational r = Rational(1) - t * 2;
  const BigInt pieces = floor_of(Rational(1) / r);
  const std::int64_t last = pieces > n ? n : static_cast<std::int64_t>(pieces);
  Rational total = 0;
  BigInt c = 1;  // C(n, j)
  for (std::int64_t j = 1; j <= last; ++j) {
    c *= (n - j + 1);
    c /= j;
    const Rational jr = r * j;
    total += Rational(c) * ipow(Rational(1) - jr, j - 1) * ipow(jr, n - j);
  }
  return total;
}

Rational expected_euler_char_alternating_exact(std::int64_t n, const Rational& t) {
  require(n >= 1, "expected_euler_char needs n >= 1");
  require(t > 0, "filtration radius must be > 0");
  if (t * 2 >= 1) return Rational(1);

  const Rational arc = Rational(1) - t * 2;
  Rational total = 1;
  BigInt c = 1;
  for (std::int64_t j = 1; j <= n; ++j) {
    c *= (n - j + 1);
    c /= j;
    const Rational term = Rational(c) * coverage_probability_exact(j, arc);
    if (j & 1) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

std::vector<CurvePoint> expected_euler_curve(std::int64_t n, std::span<const double> t_grid) {
  require(n >= 1, "expected_euler_curve needs n >= 1");
  require(!t_grid.empty(), "expected_euler_curve needs a nonempty grid");
  std::vector<CurvePoint> curve;
  curve.reserve(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double t = t_grid[i];
    require(std::isfinite(t) && t > 0.0 && t < 0.5, "grid values must lie in (0, 1/2)");
    require(i == 0 || t > t_grid[i - 1], "grid values must be strictly increasing");
    const double chi = expected_euler_char(n, FiltrationRadius(t));
    curve.push_back({t, chi, chi / static_cast<double>(n)});
  }
  return curve;
}

std::vector<double> uniform_grid(double t_min, double t_max, std::int64_t steps) {
  require(steps >= 1, "grid needs steps >= 1");
  require(std::isfinite(t_min) && std::isfinite(t_max) && t_min <= t_max, "grid needs t_min <= t_max");
  if (steps == 1) return {t_min};
  require(t_min < t_max, "grid with steps > 1 needs t_min < t_max");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double width = t_max - t_min;
  const double denominator = static_cast<double>(steps - 1);
  for (std::int64_t i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] = t_min + width * (static_cast<double>(i) / denominator);
  }
  grid.back() = t_max;
  return grid;
}

double omega(std::int64_t m) {
  require(m >= 1, "omega needs m >= 1");
  if (m == 1) return 1.0;
  const double k = static_cast<double>(m - 1);
  return std::exp(k * std::log(k) - std::lgamma(static_cast<double>(m) + 1.0) - k);
}

double spike_lower_bound(std::int64_t m, std::int64_t n) {
  require(n >= 2 && m >= 1 && m <= n, "spike bounds need 1 <= m <= n and n >= 2");
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  double log_a = log_binomial(n, m) - std::log(nd);
  if (m > 1) log_a += (md - 1.0) * std::log(md - 1.0);
  // (n-m)^(n-m) / (n-1)^(n-1) = (1 - (m-1)/(n-1))^(n-m) / (n-1)^(m-1)
  if (n > m) log_a += (nd - md) * std::log1p(-(md - 1.0) / (nd - 1.0));
  log_a -= (md - 1.0) * std::log(nd - 1.0);
  return std::exp(log_a);
}

Rational spike_lower_bound_exact(std::int64_t m, std::int64_t n) {
  require(n >= 2 && m >= 1 && m <= n, "spike bounds need 1 <= m <= n and n >= 2");
  BigInt numerator = binomial(n, m) * ipow(BigInt(m - 1), m - 1) * ipow(BigInt(n - m), n - m);
  BigInt denominator = BigInt(n) * ipow(BigInt(n - 1), n - 1);
  return Rational(numerator) / Rational(denominator);
}

double spike_excess_bound(std::int64_t m, std::int64_t n) {
  require(n >= 1 && m >= 1, "spike bounds need m, n >= 1");
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  return std::exp(1.0 + (md - 1.0) * std::log(nd) + (nd - 1.0) * std::log1p(-1.0 / (md + 1.0)));
}

Rational spike_center_exact(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 2, "spike centre needs m >= 1 and n >= 2");
  return Rational(BigInt((m - 1) * n)) / Rational(BigInt(2 * (n - 1) * m));
}

SpikeAnalysis spike_analysis(std::int64_t m, std::int64_t n, double epsilon) {
  require(m >= 2, "spike_analysis needs m >= 2");
  require(m * m < n, "spike_analysis needs m < sqrt(n)");
  require(n > 2 * m * m, "spike_analysis needs n > 2 m^2");
  require(epsilon > 0.0 && epsilon < 1.0, "spike_analysis needs epsilon in (0, 1)");

  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double center_rho = (nd - md) / ((nd - 1.0) * md);
  const double spread = epsilon * std::sqrt(md - 1.0) / nd;

  SpikeAnalysis spike{};
  spike.m = m;
  spike.n = n;
  spike.center_t = ((md - 1.0) * nd) / (2.0 * (nd - 1.0) * md);
  spike.a_mn = spike_lower_bound(m, n);
  spike.b_mn = spike_excess_bound(m, n);
  spike.omega_m = omega(m);
  spike.alpha_lo = center_rho * (1.0 - spread);
  spike.alpha_hi = center_rho * (1.0 + spread);
  return spike;
}

double PowerPeak::linear_lower_bound(double t) const noexcept {
  const double slope = (a + b) * v;
  if (t < t0) return u * (slope * t - a * v + 1.0);
  if (t > t0) return u * (-slope * t + a * v + 1.0);
  return u;
}

double PowerPeak::window_radius(double lambda) const noexcept {
  return (1.0 - lambda) * std::sqrt(a * b) / std::pow(a + b, 1.5);
}

PowerPeak peak_of_power_product(double a, double b) {
  require(std::isfinite(a) && std::isfinite(b) && a >= 1.0 && b >= 1.0,
          "peak_of_power_product needs a, b >= 1");
  PowerPeak peak{};
  peak.a = a;
  peak.b = b;
  peak.t0 = a / (a + b);
  peak.max_value = std::exp(a * std::log(a) + b * std::log(b) - (a + b) * std::log(a + b));
  peak.u = peak.max_value;
  peak.v = std::sqrt((a + b) / (a * b));
  return peak;
}

double f_mn(std::int64_t m, std::int64_t n, double t) {
  require(m >= 1 && n >= 1, "f_mn needs m, n >= 1");
  const double md = static_cast<double>(m);
  const double x = md * t;
  require(std::isfinite(x) && x >= 0.0 && x <= 1.0, "f_mn needs m t in [0, 1]");
  if (m > n) return 0.0;
  double log_value = log_binomial(n, m);
  if (m > 1) {
    if (x == 0.0) return 0.0;
    log_value += (md - 1.0) * std::log(x);
  }
  if (n > m) {
    const double rest = 1.0 - x;
    if (rest == 0.0) return 0.0;
    log_value += static_cast<double>(n - m) * std::log1p(-x);
  }
  return std::exp(log_value);
}

double f_mn_argmax(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 2, "f_mn_argmax needs m >= 1 and n >= 2");
  return (1.0 - 1.0 / static_cast<double>(m)) / static_cast<double>(n - 1);
}

TheoremBParams theorem_b_params(std::int64_t k) {
  require(k >= 0, "theorem_b_params needs k >= 0");
  const double kd = static_cast<double>(k);
  const double denominator = 4.0 * (kd + 1.0) * (kd + 2.0);
  return {k, (2.0 * kd * kd + 4.0 * kd + 1.0) / denominator, 1.0 / denominator};
}

TheoremCParams theorem_c_params(std::int64_t k, double eta, std::int64_t n) {
  require(k >= 2, "theorem_c_params needs k >= 2");
  require(eta > 0.0 && eta < 1.0, "theorem_c_params needs eta in (0, 1)");
  require(n >= 2, "theorem_c_params needs n >= 2");
  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  const double w = omega(k);
  const double mass = kd * w;

  TheoremCParams params{};
  params.k = k;
  params.eta = eta;
  params.n = n;
  params.rho_kn = nd * (kd - 1.0) / (2.0 * kd * (nd - 1.0));
  params.rho_kn_printed = nd * (kd + 1.0) / (2.0 * kd * (nd - 1.0));
  params.sigma_k_eta = std::pow(1.0 - eta, 3) * std::pow(mass, 3) / (320.0 * std::sqrt(kd + 2.0));
  params.prob_lower = eta * mass;
  params.wedge_lo = static_cast<std::int64_t>(std::ceil((1.0 - eta) * w * nd / 2.0));
  params.wedge_hi = n / k;
  return params;
}

ElderCBounds elder_c_bounds(std::int64_t k, std::int64_t n, double delta, double epsilon) {
  require(k >= 2, "elder_c_bounds needs k >= 2");
  require(n >= 2, "elder_c_bounds needs n >= 2");
  require(delta > 0.0 && delta < 1.0, "elder_c_bounds needs delta in (0, 1)");
  require(epsilon > 0.0 && epsilon < 1.0, "elder_c_bounds needs epsilon in (0, 1)");
  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  const double mass = kd * omega(k);
  const double center = (1.0 / kd) * ((nd - kd) / (nd - 1.0));
  const double spread = (std::sqrt(kd - 1.0) / nd) * (delta * (1.0 - delta) / 5.0) * epsilon;

  ElderCBounds bounds{};
  bounds.k = k;
  bounds.n = n;
  bounds.delta = delta;
  bounds.epsilon = epsilon;
  bounds.alpha_lo = center * (1.0 - spread);
  bounds.alpha_hi = center * (1.0 + spread);
  bounds.beta_lo = (mass - delta) / (1.0 - delta);
  bounds.beta_hi = mass / delta;
  bounds.window_lo = std::clamp(bounds.beta_lo - epsilon, 0.0, 1.0);
  bounds.window_hi = std::clamp(bounds.beta_hi + epsilon, 0.0, 1.0);
  return bounds;
}

BoundPair main_prop3_bounds(double a_k, std::int64_t n, std::int64_t k, double delta) {
  require(std::isfinite(a_k) && a_k >= 0.0, "main_prop3_bounds needs A_k >= 0");
  require(n >= 1, "main_prop3_bounds needs n >= 1");
  require(k >= 2, "main_prop3_bounds needs k >= 2");
  require(delta > 0.0 && delta < 1.0, "main_prop3_bounds needs delta in (0, 1)");
  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  BoundPair bounds{};
  bounds.lower_raw = (kd * a_k - delta * nd) / ((1.0 - delta) * nd + kd);
  bounds.upper_raw = kd * a_k / (delta * nd);
  bounds.lower = std::clamp(bounds.lower_raw, 0.0, 1.0);
  bounds.upper = std::clamp(bounds.upper_raw, 0.0, 1.0);
  return bounds;
}

HomotopyType n_k_homotopy(std::int64_t n, std::int64_t k) {
  require(n >= 1, "n_k_homotopy needs n >= 1");
  require(k >= 0 && k <= n - 1, "n_k_homotopy needs 0 <= k <= n - 1");
  // k/n >= l/(l+1)  <=>  l <= k / (n - k)
  const std::int64_t free_points = n - k;
  const auto l = static_cast<int>(k / free_points);
  if (k % free_points == 0) return HomotopyType::wedge(free_points - 1, l);
  return HomotopyType::odd_sphere(l);
}

bool TypeConstraint::accepts_wedge(std::int64_t a, std::int64_t b) const noexcept {
  if (a < 0 || b < 0) return false;
  if (b + 1 <= k_ - 1) return (a + 1) * (k_ - b - 1) <= k_;
  if (b + 1 == k_) return (a + 1) * k_ <= n_;
  return false;
}

bool TypeConstraint::accepts(const HomotopyType& type) const noexcept {
  if (type.is_odd_sphere()) return type.l() <= k_ - 1;
  return accepts_wedge(type.a(), type.l());
}

TypeConstraint allowed_types(std::int64_t n, FiltrationRadius t) {
  require(n >= 1, "allowed_types needs n >= 1");
  require(t.value() < 0.5, "allowed_types needs t in (0, 1/2)");
  // The simplex rule admits gaps within kTieTolerance of 1 - 2t, so the
  // constraint uses the same effective threshold.
  const double threshold = t.gap_threshold() - kTieTolerance;
  std::int64_t k = gap_count(t.value());
  if (threshold <= 0.0) return TypeConstraint(n, std::max(k, n + 1));
  if (static_cast<double>(k + 1) * threshold <= 1.0) ++k;
  return TypeConstraint(n, k);
}

}  // namespace circech
