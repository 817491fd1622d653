#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "markov2/markov_matrix.hpp"

namespace markov2 {

/// A 2x2 rate matrix (continuous-time generator) stored by its two flow
/// rates:
///
///     [[-alpha,  beta],
///      [ alpha, -beta]]
///
/// Columns sum to 0. It generates a stochastic semigroup exactly when both
/// rates are nonnegative, but the exponential below is defined for all
/// finite parameters.
struct RateMatrix {
  double alpha;  // flow rate 1 -> 2
  double beta;   // flow rate 2 -> 1
};

inline bool is_stochastic_generator(const RateMatrix& q) {
  return q.alpha >= 0.0 && q.beta >= 0.0;
}

std::array<std::array<double, 2>, 2> dense(const RateMatrix& q);

/// Coordinates of the factorization M = (binary-symmetric flow at time t)
/// * h(s). lambda = e^{-t} = det(M) is derived, never stored.
struct Decomposition {
  double t;  // binary-symmetric flow time; det(M) = e^{-t}
  double s;  // perturbation coordinate along the nilpotent subgroup

  double lambda() const { return std::exp(-t); }
};

/// Closed interval of s values for which compose(t, s) is stochastic.
struct StochasticInterval {
  double s_min;
  double s_max;
};

/// Below this magnitude the (e^z - 1)/z and -log(1-x)/x kernels switch to
/// a 6-term Taylor expansion; above it, the expm1/log1p closed forms.
inline constexpr double kStableSeriesThreshold = 1e-4;

/// Closed-form e^{Qt}. With r = alpha + beta:
///   a = alpha * t * phi(-r t),  b = beta * t * phi(-r t),
/// phi(z) = (e^z - 1)/z, phi(0) = 1. Covers the nilpotent case r = 0
/// (where e^{Qt} = 1 + Qt) through the same kernel. Entire in (Q, t).
MarkovMatrix exp_rate(const RateMatrix& q, double t);

/// Closed-form solution of M = e^Q for det(M) > 0, with
///   alpha = a * psi(a+b),  beta = b * psi(a+b),
/// psi(x) = -log(1-x)/x, psi(0) = 1 (equivalently -log(det M)/(a+b) times
/// the parameter). Throws ReflectedError when det < -tol (no real
/// generator exists in this family) and SingularError when |det| <= tol.
RateMatrix log_markov(const MarkovMatrix& m, double tol = kDefaultTolerance);

/// The binary-symmetric flow e^{Qt} for Q = [[-1,1],[1,-1]]/2:
/// a = b = (1 - e^{-t})/2, det = e^{-t}.
MarkovMatrix binary_symmetric(double t);

/// Coordinates (t, s) with t = -log(det M) and s = (a - b) / (2 det M).
/// Defined on all of the identity component, including det > 1.
/// Error taxonomy as log_markov.
Decomposition decompose(const MarkovMatrix& m, double tol = kDefaultTolerance);

/// The product (binary-symmetric flow at t) * h(s); in closed form with
/// lambda = e^{-t}:
///   a = (1 - lambda)/2 + lambda*s,  b = (1 - lambda)/2 - lambda*s.
/// det(compose(t, s)) = lambda for every s.
MarkovMatrix compose(const Decomposition& d);

/// The interval [-(e^t - 1)/2, (e^t - 1)/2]: compose(t, s) is stochastic
/// iff s lies inside it. Throws std::domain_error for t < 0, where det > 1
/// forces a + b < 0 and no stochastic matrix exists.
StochasticInterval stochastic_s_bounds(double t);

/// Structured view of a decomposition as a perturbation of the
/// binary-symmetric flow.
struct PerturbationReport {
  enum class Regime {
    BinarySymmetric,     // s = 0 within tolerance
    StochasticInterior,  // composed matrix stochastic, strictly inside
    StochasticBoundary,  // |s| at the stochastic interval endpoint
    NonStochastic,
  };

  double t;
  double s;
  double lambda;
  MarkovMatrix binary_symmetric_factor;
  MarkovMatrix perturbation_factor;  // h(s)
  MarkovMatrix composed;
  bool stochastic;
  std::optional<StochasticInterval> bounds;  // present iff t >= 0
  // |s| / s_max when that is meaningful (t >= 0); 0 at the degenerate
  // t = 0, s = 0 point, +inf when s_max = 0 but s != 0.
  std::optional<double> boundary_fraction;
  Regime regime;
};

const char* to_string(PerturbationReport::Regime r);

PerturbationReport perturbation_interpretation(const Decomposition& d);

}  // namespace markov2
