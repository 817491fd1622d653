#pragma once

#include <array>

#include "markov2/markov_matrix.hpp"

namespace markov2 {

/// Tangent vector at the identity of the Markov-matrix group, in the basis
///
///     L1 = [[-1, 0],   L2 = [[0,  1],
///           [ 1, 0]]         [0, -1]]
///
/// so (x, y) represents x*L1 + y*L2 = [[-x, y],[x, -y]] (columns sum to 0).
/// The coordinates coincide with rate-matrix coordinates (alpha, beta).
struct TangentVector {
  double x;  // coefficient of L1
  double y;  // coefficient of L2
};

inline constexpr TangentVector kL1{1.0, 0.0};
inline constexpr TangentVector kL2{0.0, 1.0};

/// Y = L1 - L2, the nilpotent direction: Y^2 = 0 and span{Y} is the unique
/// proper ideal of the algebra.
inline constexpr TangentVector kNilpotentY{1.0, -1.0};

/// The commutator [X, W] = XW - WX in basis coordinates:
/// (x*v - y*u) * (1, -1) for X = (x, y), W = (u, v). Every bracket lies in
/// span{Y}.
TangentVector bracket(const TangentVector& x, const TangentVector& w);

/// Velocity coordinates of a path A(t) through the identity with
/// a'(0) = da, b'(0) = db; equal to (da, db) in the {L1, L2} basis.
TangentVector tangent_from_path_derivative(double da, double db);

/// True iff X is proportional to Y = (1, -1), i.e.
/// |x + y| <= tol * max(1, |x|, |y|).
bool is_ideal_member(const TangentVector& x, double tol = kDefaultTolerance);

/// Re-derives the unique proper ideal constructively: builds the adjoint
/// maps v -> [v, L1] and v -> [v, L2] from bracket() alone, intersects
/// their real eigenspaces, and keeps the directions closed under both
/// brackets. Returns the generator normalized to unit max-norm with its
/// first nonzero coordinate positive, i.e. (1, -1).
TangentVector find_proper_ideal();

/// The one-parameter subgroup through Y: since Y^2 = 0,
/// exp(s*Y) = 1 + s*Y = [[1-s, -s],[s, 1+s]], i.e. parameters (s, -s).
/// h(s)*h(t) = h(s+t) and det(h(s)) = 1 exactly.
MarkovMatrix h(double s);

/// Matrix exponential of x*L1 + y*L2 (rate-matrix exponential at t = 1).
MarkovMatrix exp_tangent(const TangentVector& x);

/// Materializes x*L1 + y*L2 = [[-x, y],[x, -y]], row-major.
std::array<std::array<double, 2>, 2> dense(const TangentVector& v);

}  // namespace markov2
