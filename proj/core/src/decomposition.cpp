#include "markov2/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "markov2/lie_algebra.hpp"

namespace markov2 {

namespace {

// phi(z) = (e^z - 1)/z, phi(0) = 1. Taylor below the threshold (the
// truncation error there is ~z^6/7! ~ 1e-27), expm1 above.
double phi(double z) {
  if (std::abs(z) < kStableSeriesThreshold) {
    return 1.0 +
           z * (1.0 / 2 +
                z * (1.0 / 6 + z * (1.0 / 24 + z * (1.0 / 120 + z / 720))));
  }
  return std::expm1(z) / z;
}

// psi(x) = -log(1-x)/x, psi(0) = 1.
double psi(double x) {
  if (std::abs(x) < kStableSeriesThreshold) {
    return 1.0 +
           x * (1.0 / 2 +
                x * (1.0 / 3 + x * (1.0 / 4 + x * (1.0 / 5 + x / 6))));
  }
  return -std::log1p(-x) / x;
}

double canonical_zero(double v) { return v + 0.0; }  // -0 -> +0

[[noreturn]] void throw_wrong_component(double d, double tol,
                                        const char* verb) {
  if (d < -tol) {
    throw ReflectedError(std::string("reflected-component: not ") + verb +
                         "; use parity");
  }
  throw SingularError(std::string("singular: det = 0 within tolerance, not ") +
                      verb);
}

}  // namespace

std::array<std::array<double, 2>, 2> dense(const RateMatrix& q) {
  return {{{-q.alpha, q.beta}, {q.alpha, -q.beta}}};
}

MarkovMatrix exp_rate(const RateMatrix& q, double t) {
  if (!std::isfinite(q.alpha) || !std::isfinite(q.beta) || !std::isfinite(t)) {
    throw std::invalid_argument("exp_rate: rates and time must be finite");
  }
  const double r = q.alpha + q.beta;
  const double f = t * phi(-r * t);  // = (1 - e^{-rt})/r, also defined at r=0
  return make_markov(q.alpha * f, q.beta * f);
}

RateMatrix log_markov(const MarkovMatrix& m, double tol) {
  const double d = det(m);
  if (d <= tol) throw_wrong_component(d, tol, "embeddable");
  const double p = psi(m.a + m.b);  // -log(det)/(a+b), stable at a+b = 0
  return {m.a * p, m.b * p};
}

MarkovMatrix binary_symmetric(double t) {
  return exp_rate(RateMatrix{0.5, 0.5}, t);
}

Decomposition decompose(const MarkovMatrix& m, double tol) {
  const double d = det(m);
  if (d <= tol) throw_wrong_component(d, tol, "decomposable");
  const double t = -std::log(d);
  const double s = (m.a - m.b) / (2.0 * d);
  return {canonical_zero(t), canonical_zero(s)};
}

MarkovMatrix compose(const Decomposition& dec) {
  if (!std::isfinite(dec.t) || !std::isfinite(dec.s)) {
    throw std::invalid_argument("compose: coordinates must be finite");
  }
  // (1-lambda)/2 +- lambda*s, evaluated so that the stochastic-boundary
  // cancellation at s = +-(e^t - 1)/2 resolves at full precision.
  const double lambda = std::exp(-dec.t);
  const double half = 0.5 * (1.0 - lambda);
  const double shift = lambda * dec.s;
  return make_markov(half + shift, half - shift);
}

StochasticInterval stochastic_s_bounds(double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("stochastic_s_bounds: time must be finite");
  }
  if (t < 0.0) {
    throw std::domain_error(
        "no stochastic matrices: det > 1 forces a + b < 0");
  }
  const double m = 0.5 * std::expm1(t);
  return {canonical_zero(-m), m};
}

const char* to_string(PerturbationReport::Regime r) {
  switch (r) {
    case PerturbationReport::Regime::BinarySymmetric:
      return "binary-symmetric";
    case PerturbationReport::Regime::StochasticInterior:
      return "stochastic-interior";
    case PerturbationReport::Regime::StochasticBoundary:
      return "stochastic-boundary";
    case PerturbationReport::Regime::NonStochastic:
      return "non-stochastic";
  }
  return "unknown";
}

PerturbationReport perturbation_interpretation(const Decomposition& d) {
  PerturbationReport r{};
  r.t = d.t;
  r.s = d.s;
  r.lambda = d.lambda();
  r.binary_symmetric_factor = binary_symmetric(d.t);
  r.perturbation_factor = h(d.s);
  r.composed = compose(d);
  r.stochastic = is_stochastic(r.composed);

  if (d.t >= 0.0) {
    const StochasticInterval bounds = stochastic_s_bounds(d.t);
    r.bounds = bounds;
    if (bounds.s_max > 0.0) {
      r.boundary_fraction = std::abs(d.s) / bounds.s_max;
    } else {
      r.boundary_fraction =
          d.s == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
  }

  using Regime = PerturbationReport::Regime;
  if (std::abs(d.s) <= kDefaultTolerance) {
    r.regime = Regime::BinarySymmetric;
  } else if (r.bounds &&
             std::abs(std::abs(d.s) - r.bounds->s_max) <=
                 kDefaultTolerance * std::max(1.0, r.bounds->s_max)) {
    r.regime = Regime::StochasticBoundary;
  } else if (r.stochastic) {
    r.regime = Regime::StochasticInterior;
  } else {
    r.regime = Regime::NonStochastic;
  }
  return r;
}

}  // namespace markov2
