#include "calogero/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "calogero/duality.hpp"
#include "calogero/dynamics.hpp"
#include "calogero/lax.hpp"
#include "calogero/poisson.hpp"
#include "calogero/spectral.hpp"
#include "calogero/state_io.hpp"

namespace calogero::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_json(m(j, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-")
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

PhaseSpacePoint as_phase_point(const State& state, const NumericConfig& cfg) {
  if (const auto* pt = std::get_if<PhaseSpacePoint>(&state)) return *pt;
  return backward_map(std::get<ActionAnglePoint>(state), cfg);
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

struct Options {
  NumericConfig cfg;
  std::string input;
  // evolve
  double t = 0.0;
  int k = 2;
  int samples = 1;
  std::string format;
  // scatter
  double t_large = 1e4;
  // verify
  std::uint64_t seed = 1;
  int trials = 10;
  int n = 3;
  double g_range = 3.0;
  double min_gap = 0.5;
  std::string mode = "extrapolated";
  double tolerance = 1e-5;
};

int cmd_lax(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const State state = parse_state(read_input(o.input, in));
  const LaxPair pair = std::holds_alternative<PhaseSpacePoint>(state)
                           ? build_lax(std::get<PhaseSpacePoint>(state))
                           : build_dual(std::get<ActionAnglePoint>(state));
  const double residual = momentum_map_residual(pair);
  const double bound = o.cfg.identity_tol * (1.0 + pair.x_like.norm() * pair.p_like.norm());
  if (residual > bound)
    err << "warning: momentum map residual " << residual << " exceeds " << bound << "\n";
  json doc;
  doc["gauge"] = pair.gauge == Gauge::PositionDiagonal ? "position_diagonal" : "momentum_diagonal";
  doc["n"] = pair.x_like.rows();
  doc["g"] = pair.g;
  doc["x"] = matrix_json(pair.x_like);
  doc["p"] = matrix_json(pair.p_like);
  doc["momentum_map_residual"] = residual;
  out << doc.dump() << "\n";
  return kOk;
}

int cmd_spectral(const Options& o, std::istream& in, std::ostream& out) {
  const PhaseSpacePoint pt = as_phase_point(parse_state(read_input(o.input, in)), o.cfg);
  const SpectralCoordinates sc = sklyanin_coordinates(pt, o.cfg);

  // The identity is checked at the eigenvalues and on a circle enclosing them.
  double radius = 1.0;
  for (const double l : sc.lambda) radius = std::max(radius, 1.0 + std::abs(l));
  double worst = 0.0;
  for (const double l : sc.lambda) worst = std::max(worst, theorem_residual(pt, l));
  for (int m = 0; m < 8; ++m) {
    const Complex z = std::polar(radius, 2.0 * std::numbers::pi * m / 8.0);
    worst = std::max(worst, theorem_residual(pt, z));
  }

  json theta = json::array();
  for (const auto& t : sc.theta) theta.push_back(complex_json(t));
  json doc;
  doc["lambda"] = sc.lambda;
  doc["mu"] = sc.mu;
  doc["theta"] = std::move(theta);
  doc["f_im"] = sc.f_im;
  doc["theorem_residual_max"] = worst;
  out << doc.dump() << "\n";
  return kOk;
}

int cmd_map(const Options& o, std::istream& in, std::ostream& out) {
  const State state = parse_state(read_input(o.input, in));
  if (const auto* pt = std::get_if<PhaseSpacePoint>(&state))
    out << dump_state(forward_map(*pt, o.cfg)) << "\n";
  else
    out << dump_state(backward_map(std::get<ActionAnglePoint>(state), o.cfg)) << "\n";
  return kOk;
}

int cmd_evolve(const Options& o, std::istream& in, std::ostream& out) {
  if (o.samples < 1) throw ValidationError("--samples must be at least 1");
  const std::string format = o.format.empty() ? (o.samples == 1 ? "state" : "csv") : o.format;
  const State state = parse_state(read_input(o.input, in));

  if (format == "state") {
    if (o.samples != 1) throw ValidationError("--format state emits a single sample");
    if (const auto* pt = std::get_if<PhaseSpacePoint>(&state))
      out << dump_state(evolve(*pt, o.t, o.k, o.cfg)) << "\n";
    else
      out << dump_state(evolve_angles(std::get<ActionAnglePoint>(state), o.t, o.k)) << "\n";
    return kOk;
  }

  const PhaseSpacePoint start = as_phase_point(state, o.cfg);
  std::vector<double> times;
  if (o.samples == 1) {
    times.push_back(o.t);
  } else {
    for (int i = 0; i < o.samples; ++i) times.push_back(o.t * i / (o.samples - 1));
  }
  std::vector<PhaseSpacePoint> path;
  path.reserve(times.size());
  for (const double t : times) path.push_back(evolve(start, t, o.k, o.cfg));

  if (format == "csv") {
    std::ostringstream line;
    line << "t";
    for (std::size_t j = 1; j <= start.n(); ++j) line << ",q_" << j;
    for (std::size_t j = 1; j <= start.n(); ++j) line << ",p_" << j;
    out << line.str() << "\n";
    for (std::size_t i = 0; i < times.size(); ++i) {
      // Same shortest round-trip formatting as the JSON output.
      json row = json::array();
      row.push_back(times[i]);
      for (const double x : path[i].q()) row.push_back(x);
      for (const double x : path[i].p()) row.push_back(x);
      std::string text = row.dump();
      text = text.substr(1, text.size() - 2);
      out << text << "\n";
    }
    return kOk;
  }
  if (format == "json") {
    json samples = json::array();
    for (std::size_t i = 0; i < times.size(); ++i) {
      json s;
      s["t"] = times[i];
      s["q"] = to_vector(path[i].q());
      s["p"] = to_vector(path[i].p());
      samples.push_back(std::move(s));
    }
    json doc;
    doc["n"] = start.n();
    doc["g"] = start.g();
    doc["k"] = o.k;
    doc["samples"] = std::move(samples);
    out << doc.dump() << "\n";
    return kOk;
  }
  throw ValidationError("unknown --format '" + format + "' (expected state, csv or json)");
}

int cmd_scatter(const Options& o, std::istream& in, std::ostream& out) {
  const PhaseSpacePoint pt = as_phase_point(parse_state(read_input(o.input, in)), o.cfg);
  const ScatteringData data = scattering_data(pt, o.t_large, o.cfg);
  const auto lambda = descending_eigenvalues(lax_matrix(pt), o.cfg);
  double deviation = 0.0;
  for (std::size_t j = 0; j < lambda.size(); ++j)
    deviation = std::max(deviation, std::abs(data.momenta[j] - lambda[j]));
  json doc;
  doc["t_large"] = o.t_large;
  doc["momenta"] = data.momenta;
  doc["offsets"] = data.offsets;
  doc["lambda"] = lambda;
  doc["max_momentum_deviation"] = deviation;
  out << doc.dump() << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.trials < 1) throw ValidationError("--trials must be at least 1");
  if (o.n < 1) throw ValidationError("--n must be at least 1");
  if (!(o.g_range >= 0.0) || !std::isfinite(o.g_range))
    throw ValidationError("--g-range must be non-negative");
  if (!(o.tolerance > 0.0)) throw ValidationError("--tol must be positive");
  const DifferenceMode mode = parse_difference_mode(o.mode);

  json results = json::array();
  double worst = 0.0;
  bool all_pass = true;
  for (int trial = 0; trial < o.trials; ++trial) {
    const std::uint64_t seed = trial_seed(o.seed, static_cast<std::size_t>(trial));
    std::mt19937_64 rng(seed);
    const double g = std::uniform_real_distribution<double>(-o.g_range, o.g_range)(rng);
    json entry;
    entry["trial"] = trial;
    entry["g"] = g;
    try {
      const PhaseSpacePoint pt =
          random_phase_point(seed + 1, static_cast<std::size_t>(o.n), g, o.min_gap);
      const BracketReport report = canonical_report(pt, o.cfg, mode);
      const bool pass = report.max_deviation <= o.tolerance;
      entry["max_deviation"] = report.max_deviation;
      entry["pass"] = pass;
      worst = std::max(worst, report.max_deviation);
      all_pass = all_pass && pass;
    } catch (const NumericalError& e) {
      entry["error"] = e.what();
      entry["pass"] = false;
      all_pass = false;
    }
    results.push_back(std::move(entry));
  }

  json doc;
  doc["seed"] = o.seed;
  doc["trials"] = o.trials;
  doc["n"] = o.n;
  doc["g_range"] = o.g_range;
  doc["min_gap"] = o.min_gap;
  doc["mode"] = std::string(to_string(mode));
  doc["tolerance"] = o.tolerance;
  doc["results"] = std::move(results);
  doc["max_deviation"] = worst;
  doc["pass"] = all_pass;
  out << doc.dump() << "\n";
  if (!all_pass) err << "verification failed: max deviation " << worst << "\n";
  return all_pass ? kOk : kVerificationFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Rational Calogero-Moser spectral coordinates, action-angle maps and flows",
               "calogero"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--eig-gap-tol", o.cfg.eig_gap_tol,
                 "minimum eigenvalue gap relative to spectral diameter + 1")
      ->capture_default_str();
  app.add_option("--fd-step", o.cfg.fd_step, "finite-difference step scale")
      ->capture_default_str();
  app.add_option("--identity-tol", o.cfg.identity_tol, "residual tolerance for exact identities")
      ->capture_default_str();

  auto with_input = [&o](CLI::App* sub) {
    sub->add_option("input", o.input, "state file (JSON); standard input when absent or '-'");
    return sub;
  };
  auto* lax = with_input(app.add_subcommand("lax", "Lax pair of a state in its natural gauge"));
  auto* spectral = with_input(
      app.add_subcommand("spectral", "eigenvalues, Sklyanin theta, conjugate mu, correction f"));
  auto* map = with_input(app.add_subcommand("map", "action-angle map in either direction"));
  auto* evolve_cmd = with_input(app.add_subcommand("evolve", "exact flow of H_k"));
  evolve_cmd->add_option("--t", o.t, "final time")->capture_default_str();
  evolve_cmd->add_option("--k", o.k, "index of the generating integral H_k")
      ->capture_default_str();
  evolve_cmd->add_option("--samples", o.samples,
                         "number of equally spaced times in [0, t]; 1 samples t only")
      ->capture_default_str();
  evolve_cmd->add_option("--format", o.format,
                         "state | csv | json (default: state for one sample, csv otherwise)");
  auto* scatter = with_input(
      app.add_subcommand("scatter", "asymptotic momenta and offsets of the H_2 flow"));
  scatter->add_option("--t-large", o.t_large, "large time T")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "canonical bracket check on random points");
  verify->add_option("--seed", o.seed, "base seed")->capture_default_str();
  verify->add_option("--trials", o.trials, "number of random points")->capture_default_str();
  verify->add_option("--n", o.n, "particle count")->capture_default_str();
  verify->add_option("--g-range", o.g_range, "g drawn uniformly from [-G, G]")
      ->capture_default_str();
  verify->add_option("--min-gap", o.min_gap, "minimum position gap")->capture_default_str();
  verify->add_option("--mode", o.mode, "fast | extrapolated")->capture_default_str();
  verify->add_option("--tol", o.tolerance, "pass threshold on max deviation")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kValidationFailure;
  }

  try {
    o.cfg.check();
    if (lax->parsed()) return cmd_lax(o, in, out, err);
    if (spectral->parsed()) return cmd_spectral(o, in, out);
    if (map->parsed()) return cmd_map(o, in, out);
    if (evolve_cmd->parsed()) return cmd_evolve(o, in, out);
    if (scatter->parsed()) return cmd_scatter(o, in, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
  return kValidationFailure;
}

}  // namespace calogero::cli
