#include "markov2/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rng_detail.hpp"

namespace markov2 {

namespace {

void validate(const RateMatrix& rates, double horizon) {
  if (!std::isfinite(rates.alpha) || !std::isfinite(rates.beta) ||
      !is_stochastic_generator(rates)) {
    throw std::invalid_argument("simulate: rates must be finite and >= 0");
  }
  if (!std::isfinite(horizon) || horizon < 0.0) {
    throw std::invalid_argument("simulate: horizon must be finite and >= 0");
  }
}

TrajectorySummary run_chain(const RateMatrix& rates, double horizon,
                            int state, std::mt19937_64& engine) {
  std::uint64_t jumps = 0;
  double now = 0.0;
  for (;;) {
    const double rate = state == 1 ? rates.alpha : rates.beta;
    if (rate <= 0.0) break;  // absorbing: no exit channel
    now += -std::log1p(-detail::u01(engine)) / rate;
    if (now >= horizon) break;
    state = 3 - state;
    ++jumps;
  }
  return {state, jumps, horizon};
}

// Runs fn(begin, end, slot) over [0, total) in contiguous chunks, one
// thread per chunk above a size threshold. Results are written into
// per-chunk slots and reduced by the caller, so the outcome does not
// depend on the chunking.
template <typename Slot, typename Fn>
std::vector<Slot> run_chunked(std::uint64_t total, Fn fn) {
  std::uint64_t threads = 1;
  if (total >= 8192) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = std::max<std::uint64_t>(1, std::min<std::uint64_t>(
                                             hw == 0 ? 1 : hw, total / 4096));
  }
  std::vector<Slot> slots(threads);
  if (threads == 1) {
    fn(std::uint64_t{0}, total, slots[0]);
    return slots;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::uint64_t chunk = total / threads;
  for (std::uint64_t i = 0; i < threads; ++i) {
    const std::uint64_t begin = i * chunk;
    const std::uint64_t end = i + 1 == threads ? total : begin + chunk;
    pool.emplace_back([&, begin, end, i] { fn(begin, end, slots[i]); });
  }
  for (std::thread& t : pool) t.join();
  return slots;
}

}  // namespace

std::uint64_t trajectory_seed(std::uint64_t base_seed, std::uint64_t index) {
  return detail::mix64(base_seed ^ detail::mix64(index + 1));
}

TrajectorySummary sample_trajectory(const ChainSpec& spec,
                                    std::uint64_t seed) {
  validate(spec.rates, spec.horizon);
  if (spec.initial_state != 1 && spec.initial_state != 2) {
    throw std::invalid_argument("simulate: initial state must be 1 or 2");
  }
  std::mt19937_64 engine(detail::mix64(seed));
  return run_chain(spec.rates, spec.horizon, spec.initial_state, engine);
}

EmpiricalTransitionMatrix empirical_transition(const RateMatrix& rates,
                                               double horizon,
                                               std::uint64_t n_per_state,
                                               std::uint64_t seed) {
  validate(rates, horizon);
  if (n_per_state < 1) {
    throw std::invalid_argument("simulate: n_per_state must be >= 1");
  }

  using Tally = std::array<std::array<std::uint64_t, 2>, 2>;
  const std::uint64_t total = 2 * n_per_state;
  auto slots = run_chunked<Tally>(
      total, [&](std::uint64_t begin, std::uint64_t end, Tally& tally) {
        tally = {};
        for (std::uint64_t k = begin; k < end; ++k) {
          const int from = k < n_per_state ? 1 : 2;
          const ChainSpec spec{rates, horizon, from};
          const TrajectorySummary out =
              sample_trajectory(spec, trajectory_seed(seed, k));
          ++tally[out.final_state - 1][from - 1];
        }
      });

  EmpiricalTransitionMatrix result{};
  for (const auto& tally : slots) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) result.counts[i][j] += tally[i][j];
  }
  result.n_per_column = {n_per_state, n_per_state};
  const double n = static_cast<double>(n_per_state);
  result.a_hat = static_cast<double>(result.counts[1][0]) / n;
  result.b_hat = static_cast<double>(result.counts[0][1]) / n;
  result.a_std_err = std::sqrt(result.a_hat * (1.0 - result.a_hat) / n);
  result.b_std_err = std::sqrt(result.b_hat * (1.0 - result.b_hat) / n);
  return result;
}

MonteCarloEstimate mean_jump_count(const RateMatrix& rates, double horizon,
                                   std::array<double, 2> initial_distribution,
                                   std::uint64_t n, std::uint64_t seed) {
  validate(rates, horizon);
  if (n < 1) throw std::invalid_argument("simulate: n must be >= 1");
  const double p1 = initial_distribution[0];
  const double p2 = initial_distribution[1];
  if (!(p1 >= 0.0) || !(p2 >= 0.0) || std::abs(p1 + p2 - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "simulate: initial_distribution must be a probability pair");
  }

  struct Moments {
    double sum = 0.0;    // integer-valued, exact below 2^53
    double sum_sq = 0.0;
  };
  auto slots = run_chunked<Moments>(
      n, [&](std::uint64_t begin, std::uint64_t end, Moments& m) {
        for (std::uint64_t k = begin; k < end; ++k) {
          std::mt19937_64 engine(detail::mix64(trajectory_seed(seed, k)));
          const int state = detail::u01(engine) < p1 ? 1 : 2;
          const TrajectorySummary out =
              run_chain(rates, horizon, state, engine);
          const double j = static_cast<double>(out.jump_count);
          m.sum += j;
          m.sum_sq += j * j;
        }
      });

  double sum = 0.0, sum_sq = 0.0;
  for (const Moments& m : slots) {
    sum += m.sum;
    sum_sq += m.sum_sq;
  }
  const double mean = sum / static_cast<double>(n);
  double std_err = 0.0;
  if (n > 1) {
    const double var =
        std::max(0.0, (sum_sq - sum * mean) / static_cast<double>(n - 1));
    std_err = std::sqrt(var / static_cast<double>(n));
  }
  return {mean, std_err};
}

}  // namespace markov2
