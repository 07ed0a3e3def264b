#include "circech/classifier.hpp"

#include <algorithm>

#include "circech/errors.hpp"
#include "circech/homology.hpp"

namespace circech {

namespace {

std::string unclassified_message(std::size_t reduced_size, const std::vector<std::size_t>& profile) {
  std::string msg = "unclassified: reduced configuration has " + std::to_string(reduced_size) +
                    " points, window profile [";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) msg += ",";
    msg += std::to_string(profile[i]);
  }
  return msg + "]";
}

}  // namespace

UnclassifiedError::UnclassifiedError(std::size_t reduced_size, std::vector<std::size_t> window_profile)
    : std::runtime_error(unclassified_message(reduced_size, window_profile)),
      reduced_size_(reduced_size),
      window_profile_(std::move(window_profile)) {}

std::vector<PointConfig> components(const PointConfig& config, FiltrationRadius t) {
  const std::size_t n = config.size();
  if (n == 0) return {};
  const double reach = 2.0 * t.value();

  std::size_t open_gap = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!gap_bridged(config.gap(i), reach)) {
      open_gap = i;
      break;
    }
  }
  if (open_gap == n) return {config};

  std::vector<PointConfig> blocks;
  std::vector<double> current;
  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t i = (open_gap + step) % n;
    current.push_back(config[i]);
    if (!gap_bridged(config.gap(i), reach)) {
      blocks.push_back(PointConfig::from_positions(std::move(current)));
      current.clear();
    }
  }
  return blocks;
}

std::vector<std::size_t> window_lengths(const PointConfig& config, FiltrationRadius t) {
  const std::size_t n = config.size();
  if (t.saturated()) return std::vector<std::size_t>(n, n);

  const double threshold = t.gap_threshold();
  // Run of `length` points starting at i is a simplex through its closing gap.
  const auto closes = [&](std::size_t i, std::size_t length) {
    if (length <= 1) return true;
    const std::size_t last = (i + length - 1) % n;
    return gap_reaches(forward_distance(config[last], config[i]), threshold);
  };

  std::vector<std::size_t> lengths(n);
  std::size_t length = 1;
  for (std::size_t i = 0; i < n; ++i) {
    length = std::max<std::size_t>(1, length > 0 ? length - 1 : 0);
    while (length > 1 && !closes(i, length)) --length;
    while (length < n && closes(i, length + 1)) ++length;
    lengths[i] = length;
  }
  return lengths;
}

std::optional<std::size_t> find_dominated_vertex(const PointConfig& config, FiltrationRadius t) {
  const std::size_t n = config.size();
  if (n <= 1) return std::nullopt;
  const std::vector<std::size_t> lengths = window_lengths(config, t);
  // A window holding every point is the unique maximal simplex.
  if (std::find(lengths.begin(), lengths.end(), n) != lengths.end()) return 0;

  // Maximal windows are cyclic intervals with distinct starts and ends. A
  // vertex that ends no maximal window is dominated by its successor; one that
  // starts none, by its predecessor.
  std::vector<bool> starts(n, false);
  std::vector<bool> ends(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t previous = (i + n - 1) % n;
    const bool contained = lengths[previous] >= lengths[i] + 1;
    if (contained) continue;
    starts[i] = true;
    ends[(i + lengths[i] - 1) % n] = true;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!starts[v] || !ends[v]) return v;
  }
  return std::nullopt;
}

PointConfig dismantle(const PointConfig& config, FiltrationRadius t) {
  PointConfig current = config;
  while (const auto v = find_dominated_vertex(current, t)) current = current.without(*v);
  return current;
}

std::optional<CanonicalForm> recognize_canonical(const PointConfig& config, FiltrationRadius t) {
  const std::size_t n = config.size();
  if (n == 0) return std::nullopt;
  const std::vector<std::size_t> lengths = window_lengths(config, t);
  const std::size_t length = lengths.front();
  if (std::any_of(lengths.begin(), lengths.end(), [&](std::size_t l) { return l != length; })) return std::nullopt;
  return CanonicalForm{n, length - 1};
}

Classification classify_detailed(const PointConfig& config, FiltrationRadius t) {
  const std::size_t n = config.size();
  if (n == 0) throw DomainError("classify needs at least one point");
  if (t.saturated()) return {HomotopyType::point(), ClassificationRoute::kSaturated, n};

  Classification result{HomotopyType::point(), ClassificationRoute::kComponents, n};
  const std::vector<PointConfig> blocks = components(config, t);
  if (blocks.size() >= 2) {
    result.type = HomotopyType::wedge(static_cast<std::int64_t>(blocks.size()) - 1, 0);
  } else if (!covers_circle(config, t.value())) {
    // Arcs inside a proper sub-arc of the circle: the nerve is contractible.
    result.type = HomotopyType::point();
  } else if (gap_reaches(config.max_gap(), t.gap_threshold())) {
    result.route = ClassificationRoute::kFullSimplex;
  } else {
    const PointConfig reduced = dismantle(config, t);
    result.reduced_size = reduced.size();
    if (const auto canonical = recognize_canonical(reduced, t)) {
      result.route = ClassificationRoute::kCanonical;
      result.type = n_k_homotopy(static_cast<std::int64_t>(canonical->m), static_cast<std::int64_t>(canonical->k));
    } else if (reduced.size() <= kMaxOracleVertices) {
      result.route = ClassificationRoute::kHomologyOracle;
      result.type = homotopy_type_from_betti(betti_gf2(build_complex(reduced, t)).betti);
    } else {
      throw UnclassifiedError(reduced.size(), window_lengths(reduced, t));
    }
  }

  if (!allowed_types(static_cast<std::int64_t>(n), t).accepts(result.type)) {
    throw std::logic_error("classification " + result.type.display() +
                           " violates the realisability constraint at n = " + std::to_string(n));
  }
  return result;
}

}  // namespace circech
