#include "circech/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "circech/errors.hpp"

namespace circech {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) cells.push_back(cell);
  return cells;
}

template <class T>
T parse_cell(const std::string& cell, std::size_t line) {
  T value{};
  const char* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw DomainError("CSV line " + std::to_string(line) + ": bad cell '" + cell + "'");
  return value;
}

// Reads rows of `width` cells after checking the header.
std::vector<std::vector<std::string>> read_table(std::istream& in, const std::string& header, std::size_t width) {
  std::string line;
  if (!std::getline(in, line) || line != header) throw DomainError("CSV header must be '" + header + "'");
  std::vector<std::vector<std::string>> rows;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != width) throw DomainError("CSV line " + std::to_string(number) + ": wrong number of cells");
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

Json to_json(const HomotopyType& type) {
  if (type.is_odd_sphere()) return Json{{"kind", "odd"}, {"l", type.l()}};
  return Json{{"kind", "even"}, {"a", type.a()}, {"l", type.l()}};
}

HomotopyType homotopy_type_from_json(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const int l = j.at("l").get<int>();
    if (l < 0) throw DomainError("homotopy type: l must be >= 0");
    if (kind == "odd") return HomotopyType::odd_sphere(l);
    if (kind == "even") {
      const auto a = j.at("a").get<std::int64_t>();
      if (a < 0) throw DomainError("homotopy type: a must be >= 0");
      return HomotopyType::wedge(a, l);
    }
    throw DomainError("homotopy type: unknown kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("homotopy type: ") + e.what());
  }
}

Json to_json(const Census& census) {
  Json counts = Json::array();
  for (const auto& [type, count] : census.counts) {
    counts.push_back(Json{{"type", to_json(type)}, {"display", type.display()}, {"count", count}});
  }
  return Json{{"n", census.n},
              {"t", census.t},
              {"trials", census.trials},
              {"master_seed", census.master_seed},
              {"generator_id", census.generator_id},
              {"unclassified", census.unclassified},
              {"euler_agreements", census.euler_agreements},
              {"counts", counts},
              {"timing", Json{{"elapsed_seconds", census.elapsed_seconds}}}};
}

Census census_from_json(const Json& j) {
  try {
    Census census;
    census.n = j.at("n").get<std::int64_t>();
    census.t = j.at("t").get<double>();
    census.trials = j.at("trials").get<std::int64_t>();
    census.master_seed = j.at("master_seed").get<std::uint64_t>();
    census.generator_id = j.at("generator_id").get<std::string>();
    census.unclassified = j.at("unclassified").get<std::int64_t>();
    census.euler_agreements = j.at("euler_agreements").get<std::int64_t>();
    for (const auto& entry : j.at("counts")) {
      census.counts[homotopy_type_from_json(entry.at("type"))] += entry.at("count").get<std::int64_t>();
    }
    if (j.contains("timing")) census.elapsed_seconds = j.at("timing").value("elapsed_seconds", 0.0);
    return census;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("census: ") + e.what());
  }
}

Json to_json(const EstimateWithCI& estimate) {
  return Json{{"mean", estimate.mean},
              {"std_error", estimate.std_error},
              {"ci_low", estimate.ci_low},
              {"ci_high", estimate.ci_high},
              {"method", estimate.method},
              {"confidence", estimate.confidence},
              {"trials", estimate.trials}};
}

Json to_json(const VerifyReport& report) {
  Json numbers = Json::object();
  for (const auto& [name, value] : report.numbers) numbers[name] = value;
  return Json{{"theorem", report.theorem},
              {"result", report.pass ? "PASS" : "FAIL"},
              {"numbers", numbers},
              {"notes", report.notes}};
}

Json to_json(const std::vector<CurvePoint>& curve, std::int64_t n) {
  Json rows = Json::array();
  for (const CurvePoint& p : curve) {
    rows.push_back(Json{{"n", n}, {"t", p.t}, {"chi", p.chi}, {"chi_normalized", p.chi_normalized}});
  }
  return rows;
}

Json to_json(const std::vector<SpikeAnalysis>& rows) {
  Json out = Json::array();
  for (const SpikeAnalysis& s : rows) {
    out.push_back(Json{{"m", s.m},
                       {"center_t", s.center_t},
                       {"a_mn", s.a_mn},
                       {"b_mn", s.b_mn},
                       {"omega_m", s.omega_m},
                       {"alpha_lo", s.alpha_lo},
                       {"alpha_hi", s.alpha_hi}});
  }
  return out;
}

std::string format_double(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

void write_curve_csv(std::ostream& out, std::int64_t n, const std::vector<CurvePoint>& curve) {
  out << "n,t,chi,chi_normalized\n";
  for (const CurvePoint& p : curve) {
    out << n << ',' << format_double(p.t) << ',' << format_double(p.chi) << ',' << format_double(p.chi_normalized)
        << '\n';
  }
}

std::vector<CurvePoint> read_curve_csv(std::istream& in) {
  std::vector<CurvePoint> curve;
  std::size_t line = 1;
  for (const auto& cells : read_table(in, "n,t,chi,chi_normalized", 4)) {
    ++line;
    curve.push_back({parse_cell<double>(cells[1], line), parse_cell<double>(cells[2], line),
                     parse_cell<double>(cells[3], line)});
  }
  return curve;
}

void write_spikes_csv(std::ostream& out, const std::vector<SpikeAnalysis>& rows) {
  out << "m,center_t,a_mn,b_mn,omega_m,alpha_lo,alpha_hi\n";
  for (const SpikeAnalysis& s : rows) {
    out << s.m << ',' << format_double(s.center_t) << ',' << format_double(s.a_mn) << ',' << format_double(s.b_mn)
        << ',' << format_double(s.omega_m) << ',' << format_double(s.alpha_lo) << ',' << format_double(s.alpha_hi)
        << '\n';
  }
}

std::vector<SpikeAnalysis> read_spikes_csv(std::istream& in, std::int64_t n) {
  std::vector<SpikeAnalysis> rows;
  std::size_t line = 1;
  for (const auto& cells : read_table(in, "m,center_t,a_mn,b_mn,omega_m,alpha_lo,alpha_hi", 7)) {
    ++line;
    rows.push_back({parse_cell<std::int64_t>(cells[0], line), n, parse_cell<double>(cells[1], line),
                    parse_cell<double>(cells[2], line), parse_cell<double>(cells[3], line),
                    parse_cell<double>(cells[4], line), parse_cell<double>(cells[5], line),
                    parse_cell<double>(cells[6], line)});
  }
  return rows;
}

}  // namespace circech
