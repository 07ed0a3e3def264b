#include "circech/circle.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "circech/errors.hpp"

namespace circech {

namespace {

// For each j, the first index j' < j with x_j - x_j' short of the threshold;
// all later j' < j are short as well. Equals j when none is.
std::vector<std::size_t> short_step_starts(std::span<const double> x, double threshold) {
  std::vector<std::size_t> starts(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto first = x.begin();
    const auto it = std::partition_point(first, first + static_cast<std::ptrdiff_t>(j),
                                         [&](double earlier) { return gap_reaches(x[j] - earlier, threshold); });
    starts[j] = static_cast<std::size_t>(it - first);
  }
  return starts;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

PointConfig PointConfig::from_positions(std::vector<double> positions) {
  for (double x : positions) {
    if (!std::isfinite(x) || x < 0.0 || x >= 1.0) {
      throw DomainError("point positions must lie in [0, 1)");
    }
  }
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  return PointConfig(std::move(positions));
}

double PointConfig::gap(std::size_t i) const noexcept {
  const std::size_t next = i + 1 == positions_.size() ? 0 : i + 1;
  return forward_distance(positions_[i], positions_[next]);
}

std::vector<double> PointConfig::gaps() const {
  std::vector<double> result(positions_.size());
  for (std::size_t i = 0; i < positions_.size(); ++i) result[i] = gap(i);
  return result;
}

double PointConfig::max_gap() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < positions_.size(); ++i) best = std::max(best, gap(i));
  return best;
}

PointConfig PointConfig::without(std::size_t index) const {
  std::vector<double> rest = positions_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
  return PointConfig(std::move(rest));
}

PointConfig sample_uniform(std::size_t n, CounterStream& stream) {
  if (n < 1) throw DomainError("sample_uniform needs n >= 1");
  std::vector<double> positions(n);
  for (double& x : positions) x = stream.uniform();
  return PointConfig::from_positions(std::move(positions));
}

PointConfig uniform_config(std::size_t n) {
  if (n < 1) throw DomainError("uniform_config needs n >= 1");
  std::vector<double> positions(n);
  for (std::size_t i = 0; i < n; ++i) positions[i] = static_cast<double>(i) / static_cast<double>(n);
  return PointConfig::from_positions(std::move(positions));
}

bool is_simplex(const PointConfig& config, std::span<const std::size_t> subset, FiltrationRadius t) {
  if (subset.empty()) throw DomainError("is_simplex needs a nonempty subset");
  std::vector<std::size_t> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.back() >= config.size()) throw DomainError("subset index out of range");
  if (t.saturated() || members.size() == 1) return true;

  const double threshold = t.gap_threshold();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::size_t next = members[(i + 1) % members.size()];
    if (gap_reaches(forward_distance(config[members[i]], config[next]), threshold)) return true;
  }
  return false;
}

bool is_simplex(const PointConfig& config, std::uint64_t subset_mask, FiltrationRadius t) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < 64 && (subset_mask >> i) != 0; ++i) {
    if ((subset_mask >> i) & 1U) members.push_back(i);
  }
  return is_simplex(config, members, t);
}

bool covers_circle(const PointConfig& config, double radius) {
  if (!(radius > 0.0)) throw DomainError("covers_circle needs radius > 0");
  if (config.empty()) return false;
  const double reach = 2.0 * radius;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (!gap_bridged(config.gap(i), reach)) return false;
  }
  return true;
}

std::int64_t euler_char_exact(const PointConfig& config, FiltrationRadius t) {
  const std::size_t n = config.size();
  if (n == 0) return 0;
  if (t.saturated()) return 1;

  const double threshold = t.gap_threshold();
  const auto x = config.positions();
  const std::vector<std::size_t> starts = short_step_starts(x, threshold);

  // signed[j] = sum over chains first..j of (-1)^(points - 1); running[j] is
  // its prefix sum from `first`.
  std::vector<std::int64_t> signed_chains(n);
  std::vector<std::int64_t> running(n);
  std::int64_t short_alternating = 0;  // sum_s (-1)^(s-1) M_s
  for (std::size_t first = 0; first < n; ++first) {
    signed_chains[first] = 1;
    running[first] = 1;
    for (std::size_t j = first + 1; j < n; ++j) {
      const std::size_t from = std::max(starts[j], first);
      std::int64_t reachable = 0;
      if (from < j) reachable = running[j - 1] - (from > first ? running[from - 1] : 0);
      signed_chains[j] = -reachable;
      running[j] = running[j - 1] + signed_chains[j];
      if (!gap_reaches(forward_distance(x[j], x[first]), threshold)) short_alternating += signed_chains[j];
    }
  }
  return 1 - short_alternating;
}

std::vector<BigInt> simplex_counts(const PointConfig& config, FiltrationRadius t) {
  const std::size_t n = config.size();
  std::vector<BigInt> counts(n);
  BigInt c = 1;
  for (std::size_t s = 1; s <= n; ++s) {
    c *= (n - s + 1);
    c /= s;
    counts[s - 1] = c;
  }
  if (n == 0 || t.saturated()) return counts;

  const double threshold = t.gap_threshold();
  const auto x = config.positions();
  const std::vector<std::size_t> starts = short_step_starts(x, threshold);

  std::vector<BigInt> chains(n);
  std::vector<BigInt> next(n);
  std::vector<BigInt> prefix(n);
  for (std::size_t first = 0; first < n; ++first) {
    std::fill(chains.begin(), chains.end(), BigInt(0));
    chains[first] = 1;
    for (std::size_t s = 1; s < n; ++s) {
      // chains[j]: s-point chains from `first` to j with short steps.
      BigInt acc = 0;
      for (std::size_t j = first; j < n; ++j) {
        acc += chains[j];
        prefix[j] = acc;
      }
      bool any = false;
      for (std::size_t j = first; j < n; ++j) {
        next[j] = 0;
        if (j == first) continue;
        const std::size_t from = std::max(starts[j], first);
        if (from >= j) continue;
        next[j] = prefix[j - 1] - (from > first ? prefix[from - 1] : BigInt(0));
        if (next[j] != 0) any = true;
      }
      if (!any) break;
      std::swap(chains, next);
      for (std::size_t j = first + 1; j < n; ++j) {
        if (chains[j] != 0 && !gap_reaches(forward_distance(x[j], x[first]), threshold)) {
          counts[s] -= chains[j];  // chains of s + 1 points
        }
      }
    }
  }
  return counts;
}

PointConfig read_points(std::istream& in) {
  std::vector<double> positions;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string token = trim(line);
    if (token.empty()) continue;
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) throw PointFileError(line_number, "expected one decimal number");
    if (!std::isfinite(value) || value < 0.0 || value >= 1.0) {
      throw PointFileError(line_number, "position outside [0, 1)");
    }
    positions.push_back(value);
  }
  if (positions.empty()) throw PointFileError(line_number, "no points in file");
  return PointConfig::from_positions(std::move(positions));
}

void write_points(std::ostream& out, const PointConfig& config) {
  char buffer[32];
  for (double x : config.positions()) {
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, x, std::chars_format::general, 17);
    out.write(buffer, ptr - buffer);
    out.put('\n');
  }
}

}  // namespace circech
