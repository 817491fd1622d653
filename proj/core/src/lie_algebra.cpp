#include "markov2/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "markov2/decomposition.hpp"

namespace markov2 {

TangentVector bracket(const TangentVector& x, const TangentVector& w) {
  // [x*L1 + y*L2, u*L1 + v*L2] = (x*v - y*u) * (L1 - L2)
  const double c = x.x * w.y - x.y * w.x;
  return {c, -c};
}

TangentVector tangent_from_path_derivative(double da, double db) {
  return {da, db};
}

bool is_ideal_member(const TangentVector& v, double tol) {
  const double scale = std::max({1.0, std::abs(v.x), std::abs(v.y)});
  return std::abs(v.x + v.y) <= tol * scale;
}

namespace {

struct Vec2 {
  double x, y;
};

// x.y' - y.x' — zero iff the two vectors are collinear.
double cross(const Vec2& p, const Vec2& q) { return p.x * q.y - p.y * q.x; }

double max_abs(const Vec2& v) { return std::max(std::abs(v.x), std::abs(v.y)); }

// Real eigenvectors of a 2x2 matrix given column-wise as the images of the
// basis vectors. Returns 0, 1 or 2 unit-max-norm directions.
std::vector<Vec2> real_eigenvectors(const Vec2& col0, const Vec2& col1) {
  const double a11 = col0.x, a12 = col1.x, a21 = col0.y, a22 = col1.y;
  const double tr = a11 + a22;
  const double dt = a11 * a22 - a12 * a21;
  const double disc = tr * tr - 4.0 * dt;
  if (disc < 0.0) return {};
  const double root = std::sqrt(disc);
  std::vector<Vec2> out;
  for (double lambda : {0.5 * (tr + root), 0.5 * (tr - root)}) {
    // A - lambda*I has rank <= 1; take the kernel direction from the row
    // of larger magnitude.
    const Vec2 row0{a11 - lambda, a12};
    const Vec2 row1{a21, a22 - lambda};
    const Vec2& row = max_abs(row0) >= max_abs(row1) ? row0 : row1;
    Vec2 v{-row.y, row.x};
    if (max_abs(v) == 0.0) v = {1.0, 0.0};  // A == lambda*I on this row
    const double m = max_abs(v);
    out.push_back({v.x / m, v.y / m});
  }
  return out;
}

// Whether span{v} is closed under bracketing with the whole algebra
// (bilinearity: checking against the two basis vectors suffices).
bool spans_ideal(const Vec2& v, double tol) {
  const TangentVector tv{v.x, v.y};
  for (const TangentVector& basis : {kL1, kL2}) {
    const TangentVector w = bracket(tv, basis);
    if (std::abs(cross({w.x, w.y}, v)) > tol) return false;
  }
  return true;
}

}  // namespace

TangentVector find_proper_ideal() {
  // A one-dimensional ideal span{v} needs [v, Li] in span{v} for both
  // basis directions, i.e. v must be a common real eigenvector of the two
  // adjoint maps v -> [v, Li]. Build those maps from bracket() itself.
  std::vector<Vec2> candidates;
  for (const TangentVector& basis : {kL1, kL2}) {
    const TangentVector c0 = bracket(kL1, basis);
    const TangentVector c1 = bracket(kL2, basis);
    for (const Vec2& v : real_eigenvectors({c0.x, c0.y}, {c1.x, c1.y})) {
      candidates.push_back(v);
    }
  }

  constexpr double tol = 1e-9;
  std::vector<Vec2> ideals;
  for (const Vec2& v : candidates) {
    if (!spans_ideal(v, tol)) continue;
    bool duplicate = false;
    for (const Vec2& u : ideals) {
      if (std::abs(cross(u, v)) <= tol) duplicate = true;
    }
    if (!duplicate) ideals.push_back(v);
  }
  if (ideals.size() != 1) {
    throw std::logic_error("find_proper_ideal: expected a unique direction");
  }

  // Normalize: unit max-norm, first nonzero coordinate positive.
  Vec2 v = ideals.front();
  const double m = max_abs(v);
  v = {v.x / m, v.y / m};
  const double lead = v.x != 0.0 ? v.x : v.y;
  if (lead < 0.0) v = {-v.x, -v.y};
  return {v.x + 0.0, v.y + 0.0};  // canonicalize -0
}

MarkovMatrix h(double s) { return make_markov(s, -s); }

MarkovMatrix exp_tangent(const TangentVector& v) {
  // x*L1 + y*L2 is the rate matrix with (alpha, beta) = (x, y).
  return exp_rate(RateMatrix{v.x, v.y}, 1.0);
}

std::array<std::array<double, 2>, 2> dense(const TangentVector& v) {
  return {{{-v.x, v.y}, {v.x, -v.y}}};
}

}  // namespace markov2
