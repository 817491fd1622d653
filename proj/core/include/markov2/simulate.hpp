#pragma once

#include <array>
#include <cstdint>

#include "markov2/decomposition.hpp"

namespace markov2 {

/// A two-state continuous-time chain to simulate: holding time in state 1
/// is exponential with rate alpha, in state 2 with rate beta; every event
/// flips the state.
struct ChainSpec {
  RateMatrix rates;  // must be a stochastic generator (alpha, beta >= 0)
  double horizon;    // total simulated time, >= 0
  int initial_state; // 1 or 2
};

struct TrajectorySummary {
  int final_state;          // 1 or 2
  std::uint64_t jump_count; // state changes in (0, horizon)
  double total_time;        // == horizon
};

/// Column-convention empirical transition counts: counts[to-1][from-1],
/// column j holding the outcomes of the n trajectories started in state
/// j+1, matching the from-state-per-column layout of MarkovMatrix.
struct EmpiricalTransitionMatrix {
  std::array<std::array<std::uint64_t, 2>, 2> counts;
  std::array<std::uint64_t, 2> n_per_column;
  double a_hat;      // fraction of state-1 starts ending in state 2
  double b_hat;      // fraction of state-2 starts ending in state 1
  double a_std_err;  // binomial standard error of a_hat
  double b_std_err;
};

struct MonteCarloEstimate {
  double value;
  double std_err;
};

/// Engine seed for trajectory `index` of an ensemble with base seed
/// `base_seed`. Every ensemble function here runs trajectory k with
/// sample_trajectory(spec, trajectory_seed(seed, k)), so serial and
/// parallel executions (and external re-runs of a single trajectory)
/// produce identical results.
std::uint64_t trajectory_seed(std::uint64_t base_seed, std::uint64_t index);

/// Simulates one trajectory by competing exponentials. The generator is
/// mt19937_64 seeded with a fixed avalanche mix of `seed`; uniforms are the
/// top 53 bits, holding times -log1p(-u)/rate. Deterministic given
/// (spec, seed). Throws std::invalid_argument on negative rates, negative
/// or non-finite horizon, or initial_state outside {1, 2}.
TrajectorySummary sample_trajectory(const ChainSpec& spec, std::uint64_t seed);

/// Runs n_per_state trajectories from each initial state (indices
/// 0..n-1 from state 1, n..2n-1 from state 2) and tallies final states.
/// Estimates (a_hat, b_hat) of the true transition probabilities (a, b) of
/// e^{Q*horizon}, with binomial standard errors. Parallelized across
/// trajectories; the reduction is order-independent, so results equal the
/// serial run exactly.
EmpiricalTransitionMatrix empirical_transition(const RateMatrix& rates,
                                               double horizon,
                                               std::uint64_t n_per_state,
                                               std::uint64_t seed);

/// Monte Carlo mean of the trajectory jump count, with standard error.
/// Trajectory k draws its initial state from initial_distribution using
/// the first uniform of the engine seeded with trajectory_seed(seed, k),
/// then simulates with the remaining stream.
MonteCarloEstimate mean_jump_count(const RateMatrix& rates, double horizon,
                                   std::array<double, 2> initial_distribution,
                                   std::uint64_t n, std::uint64_t seed);

}  // namespace markov2
