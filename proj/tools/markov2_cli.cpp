// markov2 command-line tool: conversions between the (a,b), (t,s) and
// (lambda,s) parameterisations, component classification, closed-form
// exp/log, stochasticity bounds, figure-data grids, and Monte Carlo
// validation of the analytic transition probabilities.
//
// Every command writes a single JSON object to stdout (CSV stream for
// `region`); diagnostics go to stderr; exit status is 0 iff no error.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "markov2/decomposition.hpp"
#include "markov2/lie_algebra.hpp"
#include "markov2/markov_matrix.hpp"
#include "markov2/simulate.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace markov2;

// Shortest round-trip decimal form, shared by the CSV writer.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

void emit(const json& record, const std::string& out_path) {
  std::ofstream file;
  std::ostream& os = open_sink(out_path, file);
  os << record.dump(2) << "\n";
}

json matrix_fields(const MarkovMatrix& m) {
  return {{"a", m.a}, {"b", m.b}};
}

// The full record of one group element in every parameterisation.
json conversion_record(const MarkovMatrix& m) {
  const Decomposition d = decompose(m);
  return {{"a", m.a},
          {"b", m.b},
          {"det", det(m)},
          {"lambda", det(m)},
          {"t", d.t},
          {"s", d.s},
          {"component", to_string(classify(m))},
          {"stochastic", is_stochastic(m)}};
}

struct ConvertArgs {
  std::vector<double> ab, ts, ls;
  std::string out;
};

void run_convert(const ConvertArgs& args) {
  const int given =
      (args.ab.empty() ? 0 : 1) + (args.ts.empty() ? 0 : 1) +
      (args.ls.empty() ? 0 : 1);
  if (given != 1) {
    throw CLI::ValidationError(
        "convert", "exactly one of --from-ab/--from-ts/--from-ls required");
  }
  MarkovMatrix m{};
  if (!args.ab.empty()) {
    m = make_markov(args.ab[0], args.ab[1]);
  } else if (!args.ts.empty()) {
    m = compose(Decomposition{args.ts[0], args.ts[1]});
  } else {
    const double lambda = args.ls[0];
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
      throw std::invalid_argument("convert: lambda must be finite and > 0");
    }
    m = compose(Decomposition{-std::log(lambda), args.ls[1]});
  }
  emit(conversion_record(m), args.out);
}

void run_classify(double a, double b, const std::string& out) {
  const MarkovMatrix m = make_markov(a, b);
  const ComponentClass c = classify(m);
  json record{{"a", m.a},
              {"b", m.b},
              {"det", det(m)},
              {"component", to_string(c)},
              {"stochastic", is_stochastic(m)}};
  if (c == ComponentClass::ReflectedComponent) {
    const ParityFactorization p = parity_factor(m);
    record["parity"] = p.parity;
    record["factor"] = matrix_fields(p.factor);
  }
  emit(record, out);
}

void run_log(double a, double b, const std::string& out) {
  const MarkovMatrix m = make_markov(a, b);
  const RateMatrix q = log_markov(m);
  emit(json{{"a", m.a},
            {"b", m.b},
            {"det", det(m)},
            {"alpha", q.alpha},
            {"beta", q.beta}},
       out);
}

void run_exp(double alpha, double beta, double t, const std::string& out) {
  const MarkovMatrix m = exp_rate(RateMatrix{alpha, beta}, t);
  emit(json{{"alpha", alpha},
            {"beta", beta},
            {"t", t},
            {"a", m.a},
            {"b", m.b},
            {"det", det(m)},
            {"component", to_string(classify(m))},
            {"stochastic", is_stochastic(m)}},
       out);
}

void run_bounds(double t, const std::string& out) {
  const StochasticInterval bounds = stochastic_s_bounds(t);
  const MarkovMatrix lo = compose(Decomposition{t, bounds.s_min});
  const MarkovMatrix hi = compose(Decomposition{t, bounds.s_max});
  emit(json{{"t", t},
            {"lambda", std::exp(-t)},
            {"s_min", bounds.s_min},
            {"s_max", bounds.s_max},
            {"at_s_min", matrix_fields(lo)},
            {"at_s_max", matrix_fields(hi)}},
       out);
}

struct RegionArgs {
  double a_min = -2.0, a_max = 3.0;
  double b_min = -2.0, b_max = 3.0;
  double step = 0.05;
  std::string out;
};

int grid_points(double lo, double hi, double step) {
  return static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

void run_region(const RegionArgs& args) {
  if (!std::isfinite(args.a_min) || !std::isfinite(args.a_max) ||
      !std::isfinite(args.b_min) || !std::isfinite(args.b_max) ||
      !std::isfinite(args.step) || args.step <= 0.0 ||
      args.a_min > args.a_max || args.b_min > args.b_max) {
    throw std::invalid_argument("region: empty or invalid grid");
  }
  const int na = grid_points(args.a_min, args.a_max, args.step);
  const int nb = grid_points(args.b_min, args.b_max, args.step);

  std::ofstream file;
  std::ostream& os = open_sink(args.out, file);
  os << "a,b,det,component,stochastic,t,s\n";
  std::string line;
  for (int i = 0; i < na; ++i) {
    const double a = args.a_min + i * args.step;
    for (int j = 0; j < nb; ++j) {
      const double b = args.b_min + j * args.step;
      const MarkovMatrix m{a, b};
      const ComponentClass c = classify(m);
      line.clear();
      line += fmt(a);
      line += ',';
      line += fmt(b);
      line += ',';
      line += fmt(det(m));
      line += ',';
      line += to_string(c);
      line += ',';
      line += is_stochastic(m) ? "true" : "false";
      if (c == ComponentClass::IdentityComponent) {
        const Decomposition d = decompose(m);
        line += ',';
        line += fmt(d.t);
        line += ',';
        line += fmt(d.s);
      } else {
        line += ",,";
      }
      line += '\n';
      os << line;
    }
  }
}

struct SimulateArgs {
  double alpha = 0.0, beta = 0.0, horizon = 0.0;
  std::uint64_t n = 100000;
  std::uint64_t seed = 0;
  std::string out;
};

void run_simulate(const SimulateArgs& args) {
  const RateMatrix rates{args.alpha, args.beta};
  const MarkovMatrix analytic = exp_rate(rates, args.horizon);
  const EmpiricalTransitionMatrix emp =
      empirical_transition(rates, args.horizon, args.n, args.seed);

  // Jump counts start from the chain's stationary distribution
  // (beta, alpha)/(alpha+beta); uniform when both rates vanish.
  const double r = args.alpha + args.beta;
  const std::array<double, 2> p0 =
      r > 0.0 ? std::array<double, 2>{args.beta / r, args.alpha / r}
              : std::array<double, 2>{0.5, 0.5};
  const MonteCarloEstimate jumps =
      mean_jump_count(rates, args.horizon, p0, args.n, args.seed + 1);

  emit(json{{"alpha", args.alpha},
            {"beta", args.beta},
            {"horizon", args.horizon},
            {"n_per_state", args.n},
            {"seed", args.seed},
            {"analytic", matrix_fields(analytic)},
            {"estimate",
             {{"a_hat", emp.a_hat},
              {"b_hat", emp.b_hat},
              {"a_std_err", emp.a_std_err},
              {"b_std_err", emp.b_std_err}}},
            {"counts",
             {{emp.counts[0][0], emp.counts[0][1]},
              {emp.counts[1][0], emp.counts[1][1]}}},
            {"mean_jumps",
             {{"value", jumps.value},
              {"std_err", jumps.std_err},
              {"initial_distribution", {p0[0], p0[1]}}}}},
       args.out);
}

void run_evolve(double alpha, double beta, double t, double p1, double p2,
                const std::string& out) {
  if (!(p1 >= 0.0) || !(p2 >= 0.0) || std::abs(p1 + p2 - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "evolve: initial distribution must be nonnegative and sum to 1");
  }
  const MarkovMatrix m = exp_rate(RateMatrix{alpha, beta}, t);
  const double q1 = (1.0 - m.a) * p1 + m.b * p2;
  const double q2 = m.a * p1 + (1.0 - m.b) * p2;
  emit(json{{"alpha", alpha},
            {"beta", beta},
            {"t", t},
            {"p0", {p1, p2}},
            {"p", {q1, q2}},
            {"norm", q1 + q2}},
       out);
}

void add_out_flag(CLI::App* sub, std::string& out) {
  sub->add_option("--out", out, "Write output to PATH instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Lie-geometric toolkit for 2x2 Markov matrices: parameterisation "
      "conversions, component classification, closed-form exp/log, "
      "stochasticity bounds, figure data, and chain simulation"};
  app.require_subcommand(1);

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand(
      "convert",
      "Convert between the (a,b), (t,s) and (lambda,s) parameterisations; "
      "prints all of them");
  convert->add_option("--from-ab", convert_args.ab, "Matrix parameters a b")
      ->expected(2);
  convert->add_option("--from-ts", convert_args.ts, "Decomposition t s")
      ->expected(2);
  convert->add_option("--from-ls", convert_args.ls, "Decomposition lambda s")
      ->expected(2);
  add_out_flag(convert, convert_args.out);
  convert->callback([&] { run_convert(convert_args); });

  double cl_a = 0.0, cl_b = 0.0;
  std::string cl_out;
  auto* classify_cmd = app.add_subcommand(
      "classify", "Determinant, component and stochasticity of (a, b)");
  classify_cmd->add_option("a", cl_a, "Parameter a")->required();
  classify_cmd->add_option("b", cl_b, "Parameter b")->required();
  add_out_flag(classify_cmd, cl_out);
  classify_cmd->callback([&] { run_classify(cl_a, cl_b, cl_out); });

  double lg_a = 0.0, lg_b = 0.0;
  std::string lg_out;
  auto* log_cmd = app.add_subcommand(
      "log", "Rate matrix Q with e^Q = M, for det(M) > 0");
  log_cmd->add_option("a", lg_a, "Parameter a")->required();
  log_cmd->add_option("b", lg_b, "Parameter b")->required();
  add_out_flag(log_cmd, lg_out);
  log_cmd->callback([&] { run_log(lg_a, lg_b, lg_out); });

  double ex_alpha = 0.0, ex_beta = 0.0, ex_t = 0.0;
  std::string ex_out;
  auto* exp_cmd =
      app.add_subcommand("exp", "Closed-form matrix exponential e^{Qt}");
  exp_cmd->add_option("alpha", ex_alpha, "Rate 1 -> 2")->required();
  exp_cmd->add_option("beta", ex_beta, "Rate 2 -> 1")->required();
  exp_cmd->add_option("t", ex_t, "Time")->required();
  add_out_flag(exp_cmd, ex_out);
  exp_cmd->callback([&] { run_exp(ex_alpha, ex_beta, ex_t, ex_out); });

  double bd_t = 0.0;
  std::string bd_out;
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "Stochasticity interval for s at flow time t >= 0");
  bounds_cmd->add_option("t", bd_t, "Flow time")->required();
  add_out_flag(bounds_cmd, bd_out);
  bounds_cmd->callback([&] { run_bounds(bd_t, bd_out); });

  RegionArgs region_args;
  auto* region = app.add_subcommand(
      "region",
      "CSV grid of classification and (t, s) coordinates over the (a, b) "
      "plane");
  region->add_option("--a-min", region_args.a_min, "Grid lower bound for a")
      ->capture_default_str();
  region->add_option("--a-max", region_args.a_max, "Grid upper bound for a")
      ->capture_default_str();
  region->add_option("--b-min", region_args.b_min, "Grid lower bound for b")
      ->capture_default_str();
  region->add_option("--b-max", region_args.b_max, "Grid upper bound for b")
      ->capture_default_str();
  region->add_option("--step", region_args.step, "Grid step")
      ->capture_default_str();
  add_out_flag(region, region_args.out);
  region->callback([&] { run_region(region_args); });

  SimulateArgs sim_args;
  auto* simulate_cmd = app.add_subcommand(
      "simulate",
      "Monte Carlo transition estimates and jump counts vs the analytic "
      "exponential");
  simulate_cmd->add_option("alpha", sim_args.alpha, "Rate 1 -> 2")->required();
  simulate_cmd->add_option("beta", sim_args.beta, "Rate 2 -> 1")->required();
  simulate_cmd->add_option("horizon", sim_args.horizon, "Time horizon")
      ->required();
  simulate_cmd->add_option("--n", sim_args.n, "Trajectories per initial state")
      ->capture_default_str();
  simulate_cmd->add_option("--seed", sim_args.seed, "Base RNG seed")
      ->capture_default_str();
  add_out_flag(simulate_cmd, sim_args.out);
  simulate_cmd->callback([&] { run_simulate(sim_args); });

  double ev_alpha = 0.0, ev_beta = 0.0, ev_t = 0.0, ev_p1 = 0.0, ev_p2 = 0.0;
  std::string ev_out;
  auto* evolve_cmd = app.add_subcommand(
      "evolve", "Apply e^{Qt} to an initial distribution");
  evolve_cmd->add_option("alpha", ev_alpha, "Rate 1 -> 2")->required();
  evolve_cmd->add_option("beta", ev_beta, "Rate 2 -> 1")->required();
  evolve_cmd->add_option("t", ev_t, "Time")->required();
  evolve_cmd->add_option("p1", ev_p1, "Initial mass on state 1")->required();
  evolve_cmd->add_option("p2", ev_p2, "Initial mass on state 2")->required();
  add_out_flag(evolve_cmd, ev_out);
  evolve_cmd->callback(
      [&] { run_evolve(ev_alpha, ev_beta, ev_t, ev_p1, ev_p2, ev_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
