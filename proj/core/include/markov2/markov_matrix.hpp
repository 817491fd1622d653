#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace markov2 {

/// Absolute tolerance that decides singularity in classify(), inverse(),
/// parity_factor() and the decompositions. The det = 0 line is a hard
/// boundary; anything within the tolerance band resolves to Singular.
inline constexpr double kDefaultTolerance = 1e-12;

/// Thrown when an operation requires an invertible matrix and |det| is
/// within tolerance of zero.
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation requires det > 0 (the identity component) but
/// the input has det < 0. Such matrices factor as P * M0 with det(M0) > 0;
/// see parity_factor().
class ReflectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A 2x2 Markov matrix stored by its two free parameters:
///
///     [[1-a, b],
///      [ a, 1-b]]
///
/// Columns sum to 1 by construction. The parameters are unrestricted reals;
/// the matrix is stochastic exactly when a and b both lie in [0, 1], and it
/// is a group element exactly when a + b != 1 (det != 0).
struct MarkovMatrix {
  double a;  // off-diagonal flow 1 -> 2, entry (2,1)
  double b;  // off-diagonal flow 2 -> 1, entry (1,2)
};

inline constexpr MarkovMatrix kIdentity{0.0, 0.0};

/// The antidiagonal permutation P = [[0,1],[1,0]]: the fixed coset
/// representative for the det < 0 component. P*P = identity.
inline constexpr MarkovMatrix kExchange{1.0, 1.0};

/// Which side of the det = 0 boundary a matrix lies on.
enum class ComponentClass { IdentityComponent, ReflectedComponent, Singular };

const char* to_string(ComponentClass c);

/// Result of factoring M through the sign-of-determinant quotient:
/// parity = +1 and factor = M, or parity = -1 and M = P * factor, with
/// factor always in the identity component.
struct ParityFactorization {
  int parity;  // +1 or -1
  MarkovMatrix factor;
};

/// Builds the matrix with off-diagonal column entries (a, b).
/// Throws std::invalid_argument on non-finite input.
MarkovMatrix make_markov(double a, double b);

/// det = 1 - (a + b), computed in that form so that a + b = 0 gives
/// exactly 1.
double det(const MarkovMatrix& m);

/// The literal matrix product n * m (n acts second). In parameters:
/// result.a = m.a * det(n) + n.a, result.b = m.b * det(n) + n.b.
MarkovMatrix multiply(const MarkovMatrix& n, const MarkovMatrix& m);

/// Group inverse, parameters (-a/det, -b/det).
/// Throws SingularError when |det| <= tol.
MarkovMatrix inverse(const MarkovMatrix& m, double tol = kDefaultTolerance);

ComponentClass classify(const MarkovMatrix& m, double tol = kDefaultTolerance);

/// Factors M as parity * (coset representative): (+1, M) when det > 0,
/// (-1, P*M) when det < 0. Throws SingularError on the boundary.
ParityFactorization parity_factor(const MarkovMatrix& m,
                                  double tol = kDefaultTolerance);

/// Tests whether M commutes with every group element. Runs trial_count
/// randomized commutator checks (seeded, deterministic) and the analytic
/// criterion |a| <= tol && |b| <= tol; both must hold. The group's center
/// is trivial, so this is true only near the identity.
bool is_central(const MarkovMatrix& m, int trial_count, std::uint64_t seed,
                double tol = kDefaultTolerance);

/// True iff 0 <= a <= 1 and 0 <= b <= 1.
bool is_stochastic(const MarkovMatrix& m);

/// Materializes the full 2x2 array [[1-a, b],[a, 1-b]], row-major.
std::array<std::array<double, 2>, 2> dense(const MarkovMatrix& m);

}  // namespace markov2
