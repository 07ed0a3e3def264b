// circech: command-line front end for the circech library.
//
//   circech chi-curve --n 100 --t-min 0.01 --t-max 0.49 --steps 200
//   circech spikes --n 100 --max-m 3
//   circech census --n 50 --t 0.2525 --trials 1000 --seed 7
//   circech classify --input points.txt --t 0.26
//   circech verify a1 --n 50 --t 0.2525 --trials 2000 --seed 3
//
// Exit codes: 0 success or PASS, 1 runtime failure or FAIL, 2 usage error or
// malformed input, 3 unclassified configuration.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "circech/circle.hpp"
#include "circech/classifier.hpp"
#include "circech/errors.hpp"
#include "circech/exact.hpp"
#include "circech/montecarlo.hpp"
#include "circech/serialize.hpp"

namespace {

using namespace circech;

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kUnclassified = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::int64_t n = 0;
  double t = 0.0;
  double t_min = 0.01;
  double t_max = 0.49;
  std::int64_t steps = 200;
  std::int64_t max_m = 2;
  std::int64_t k = 0;
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  double delta = 0.0;
  double epsilon = 0.0;
  double eta = 0.5;
  std::string theorem;
  std::string input;
  std::string output;
  std::string format = "csv";
};

// Writes `text` to --output, or stdout when no path was given.
void emit(const Flags& flags, const std::string& text) {
  if (flags.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(flags.output);
  if (!out) throw IoError("cannot open " + flags.output + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + flags.output);
}

int cmd_chi_curve(const Flags& flags) {
  const std::vector<double> grid = uniform_grid(flags.t_min, flags.t_max, flags.steps);
  const std::vector<CurvePoint> curve = expected_euler_curve(flags.n, grid);
  std::ostringstream out;
  if (flags.format == "json") {
    out << to_json(curve, flags.n).dump(2) << '\n';
  } else {
    write_curve_csv(out, flags.n, curve);
  }
  emit(flags, out.str());
  return kOk;
}

int cmd_spikes(const Flags& flags, double epsilon) {
  std::vector<SpikeAnalysis> rows;
  for (std::int64_t m = 2; m <= flags.max_m; ++m) {
    if (flags.n <= 2 * m * m) {
      std::cerr << "warning: skipping m = " << m << ": needs n > 2 m^2 = " << 2 * m * m << '\n';
      continue;
    }
    rows.push_back(spike_analysis(m, flags.n, epsilon));
  }
  std::ostringstream out;
  if (flags.format == "json") {
    out << to_json(rows).dump(2) << '\n';
  } else {
    write_spikes_csv(out, rows);
  }
  emit(flags, out.str());
  return kOk;
}

int cmd_census(const Flags& flags) {
  const Census census =
      run_census(flags.n, FiltrationRadius(flags.t), flags.trials, flags.seed, RunOptions{flags.threads});
  emit(flags, to_json(census).dump(2) + "\n");
  return kOk;
}

int cmd_classify(const Flags& flags) {
  std::ifstream in(flags.input);
  if (!in) throw IoError("cannot open " + flags.input);
  const PointConfig config = read_points(in);
  const HomotopyType type = classify(config, FiltrationRadius(flags.t));
  const Json out{{"type", to_json(type)}, {"display", type.display()}, {"betti", type.betti()}};
  emit(flags, out.dump() + "\n");
  return kOk;
}

int cmd_verify(const Flags& flags, const CLI::App& app) {
  const auto given = [&](const char* name) { return app.count(name) > 0; };
  const auto need = [&](std::initializer_list<const char*> names) {
    for (const char* name : names) {
      if (!given(name)) throw CLI::RequiredError(std::string(name) + " is required for verify " + flags.theorem);
    }
  };
  const RunOptions options{flags.threads};

  VerifyReport report;
  if (flags.theorem == "a1") {
    need({"--n", "--t"});
    report = verify_theorem_a1(flags.n, FiltrationRadius(flags.t), flags.trials, flags.seed, options);
  } else if (flags.theorem == "a2") {
    need({"--k", "--n"});
    const double t = given("--t") ? flags.t : static_cast<double>(spike_center_exact(flags.k, flags.n));
    const double epsilon = given("--epsilon") ? flags.epsilon : 0.05;
    report = verify_theorem_a2(flags.k, flags.n, FiltrationRadius(t), flags.trials, flags.seed, epsilon, options);
  } else if (flags.theorem == "b") {
    need({"--k", "--n", "--t"});
    report = verify_theorem_b(flags.k, flags.n, FiltrationRadius(flags.t), flags.trials, flags.seed, options);
  } else {
    need({"--k", "--n"});
    const double t = given("--t") ? flags.t : theorem_c_params(flags.k, flags.eta, flags.n).rho_kn;
    const double delta = given("--delta") ? flags.delta : static_cast<double>(flags.k) * omega(flags.k) / 2.0;
    const double epsilon = given("--epsilon") ? flags.epsilon : 0.1;
    report = verify_elder_c(flags.k, flags.n, FiltrationRadius(t), delta, epsilon, flags.eta, flags.trials,
                            flags.seed, options);
  }
  emit(flags, to_json(report).dump(2) + "\n");
  return report.pass ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random Cech complexes on the circle"};
  app.require_subcommand(1);
  Flags flags;

  const auto add_output = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--output", flags.output, "Output path (default: stdout)");
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember(formats));
  };
  const auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", flags.threads, "Worker threads for trials")
        ->envname("CIRCECH_THREADS")
        ->check(CLI::Range(1U, 1024U));
  };

  auto* chi = app.add_subcommand("chi-curve", "Expected Euler characteristic over a uniform t grid");
  chi->add_option("--n", flags.n, "Number of points")->required()->check(CLI::PositiveNumber);
  chi->add_option("--t-min", flags.t_min, "First grid point");
  chi->add_option("--t-max", flags.t_max, "Last grid point");
  chi->add_option("--steps", flags.steps, "Number of grid points")->check(CLI::PositiveNumber);
  add_output(chi, {"csv", "json"});

  double spike_epsilon = 0.5;
  auto* spikes = app.add_subcommand("spikes", "Spike analytics for m = 2..max-m");
  spikes->add_option("--n", flags.n, "Number of points")->required()->check(CLI::PositiveNumber);
  spikes->add_option("--max-m", flags.max_m, "Largest spike index")->required()->check(CLI::Range(2, 1 << 20));
  spikes->add_option("--epsilon", spike_epsilon, "Window half-width parameter in (0, 1)")
      ->check(CLI::Range(0.0, 1.0));
  add_output(spikes, {"csv", "json"});

  auto* census = app.add_subcommand("census", "Monte Carlo census of homotopy types");
  census->add_option("--n", flags.n, "Number of points")->required()->check(CLI::PositiveNumber);
  census->add_option("--t", flags.t, "Filtration radius")->required()->check(CLI::PositiveNumber);
  census->add_option("--trials", flags.trials, "Number of samples")->check(CLI::PositiveNumber);
  census->add_option("--seed", flags.seed, "Master seed");
  add_threads(census);
  add_output(census, {"json"});

  auto* classify_cmd = app.add_subcommand("classify", "Homotopy type of Cech(points, t)");
  classify_cmd->add_option("--input", flags.input, "Point file")->required();
  classify_cmd->add_option("--t", flags.t, "Filtration radius")->required()->check(CLI::PositiveNumber);
  add_output(classify_cmd, {"json"});

  auto* verify = app.add_subcommand("verify", "Statistical check of a1, a2, b or c");
  verify->add_option("theorem", flags.theorem, "One of a1, a2, b, c")
      ->required()
      ->check(CLI::IsMember({"a1", "a2", "b", "c"}));
  verify->add_option("--n", flags.n, "Number of points")->check(CLI::PositiveNumber);
  verify->add_option("--t", flags.t, "Filtration radius")->check(CLI::PositiveNumber);
  verify->add_option("--k", flags.k, "Piece index")->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", flags.trials, "Number of samples")->check(CLI::Range(2, 1 << 30));
  verify->add_option("--seed", flags.seed, "Master seed");
  verify->add_option("--delta", flags.delta, "Bouquet size fraction")->check(CLI::Range(0.0, 1.0));
  verify->add_option("--epsilon", flags.epsilon, "Tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--eta", flags.eta, "Theorem C slack")->check(CLI::Range(0.0, 1.0));
  add_threads(verify);
  add_output(verify, {"json"});

  try {
    app.parse(argc, argv);
    if (chi->parsed()) return cmd_chi_curve(flags);
    if (spikes->parsed()) return cmd_spikes(flags, spike_epsilon);
    if (census->parsed()) return cmd_census(flags);
    if (classify_cmd->parsed()) return cmd_classify(flags);
    return cmd_verify(flags, *verify);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const PointFileError& e) {
    std::cerr << "error: " << flags.input << ": " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnclassifiedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnclassified;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
