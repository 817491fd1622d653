#include "markov2/markov_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rng_detail.hpp"

namespace markov2 {

const char* to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::IdentityComponent:
      return "identity-component";
    case ComponentClass::ReflectedComponent:
      return "reflected-component";
    case ComponentClass::Singular:
      return "singular";
  }
  return "unknown";
}

MarkovMatrix make_markov(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("markov matrix parameters must be finite");
  }
  return {a, b};
}

double det(const MarkovMatrix& m) {
  // 1 - (a + b), not (1 - a) - b: a + b = 0 then gives det = 1 exactly.
  return 1.0 - (m.a + m.b);
}

MarkovMatrix multiply(const MarkovMatrix& n, const MarkovMatrix& m) {
  const double k = det(n);  // 1 - (n.a + n.b)
  return {m.a * k + n.a, m.b * k + n.b};
}

MarkovMatrix inverse(const MarkovMatrix& m, double tol) {
  const double d = det(m);
  if (std::abs(d) <= tol) {
    throw SingularError("singular: |det| within tolerance of zero, no inverse");
  }
  return {-m.a / d, -m.b / d};
}

ComponentClass classify(const MarkovMatrix& m, double tol) {
  const double d = det(m);
  if (d > tol) return ComponentClass::IdentityComponent;
  if (d < -tol) return ComponentClass::ReflectedComponent;
  return ComponentClass::Singular;
}

ParityFactorization parity_factor(const MarkovMatrix& m, double tol) {
  switch (classify(m, tol)) {
    case ComponentClass::IdentityComponent:
      return {+1, m};
    case ComponentClass::ReflectedComponent:
      return {-1, multiply(kExchange, m)};  // P*M, parameters (1-a, 1-b)
    case ComponentClass::Singular:
      break;
  }
  throw SingularError("singular: no parity factorization on the det = 0 boundary");
}

bool is_central(const MarkovMatrix& m, int trial_count, std::uint64_t seed,
                double tol) {
  if (trial_count < 1) {
    throw std::invalid_argument("is_central: trial_count must be >= 1");
  }
  // Analytic criterion: N commutes with everything iff its parameters
  // vanish (NM = MN forces n.a * m.b = n.b * m.a for all m).
  const bool analytic = std::abs(m.a) <= tol && std::abs(m.b) <= tol;

  std::mt19937_64 engine(detail::mix64(seed));
  for (int i = 0; i < trial_count; ++i) {
    MarkovMatrix g{0.0, 0.0};
    do {
      g.a = 4.0 * detail::u01(engine) - 2.0;
      g.b = 4.0 * detail::u01(engine) - 2.0;
    } while (std::abs(det(g)) <= 1e-6);  // stay off the boundary
    const MarkovMatrix lhs = multiply(m, g);
    const MarkovMatrix rhs = multiply(g, m);
    const double scale =
        std::max({1.0, std::abs(lhs.a), std::abs(lhs.b), std::abs(rhs.a),
                  std::abs(rhs.b)});
    if (std::abs(lhs.a - rhs.a) > tol * scale ||
        std::abs(lhs.b - rhs.b) > tol * scale) {
      return false;
    }
  }
  return analytic;
}

bool is_stochastic(const MarkovMatrix& m) {
  return 0.0 <= m.a && m.a <= 1.0 && 0.0 <= m.b && m.b <= 1.0;
}

std::array<std::array<double, 2>, 2> dense(const MarkovMatrix& m) {
  return {{{1.0 - m.a, m.b}, {m.a, 1.0 - m.b}}};
}

}  // namespace markov2
