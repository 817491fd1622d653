#include <doctest.h>

#include <cmath>
#include <random>

#include "markov2/markov_matrix.hpp"
#include "oracle.hpp"

using namespace markov2;
using oracle::Mat2;

namespace {

MarkovMatrix random_matrix(std::mt19937_64& rng, double lo, double hi) {
  return {oracle::uniform(rng, lo, hi), oracle::uniform(rng, lo, hi)};
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("make_markov materializes the column-stochastic template") {
  CHECK(oracle::max_abs_diff(dense(make_markov(0.0, 0.0)), oracle::eye()) == 0.0);

  const Mat2 p = dense(make_markov(1.0, 1.0));
  CHECK(p == Mat2{{{0.0, 1.0}, {1.0, 0.0}}});
  CHECK(dense(kExchange) == p);

  const Mat2 m = dense(make_markov(0.3, 0.1));
  CHECK(m[0][0] == doctest::Approx(0.7));
  CHECK(m[0][1] == 0.1);
  CHECK(m[1][0] == 0.3);
  CHECK(m[1][1] == doctest::Approx(0.9));

  CHECK_THROWS_AS(make_markov(std::nan(""), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_markov(0.0, INFINITY), std::invalid_argument);
}

TEST_CASE("det matches the cofactor oracle") {
  CHECK(det(kIdentity) == 1.0);
  CHECK(det(kExchange) == oracle::det_cofactor(dense(kExchange)));
  CHECK(det(kExchange) == -1.0);

  const MarkovMatrix m = make_markov(0.3, 0.1);
  CHECK(det(m) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(det(m) ==
        doctest::Approx(oracle::det_cofactor(dense(m))).epsilon(1e-15));
}

TEST_CASE("multiply equals the dense matrix product") {
  const MarkovMatrix m = make_markov(0.3, 0.1);
  CHECK(multiply(kIdentity, m).a == m.a);
  CHECK(multiply(kIdentity, m).b == m.b);
  CHECK(multiply(m, kIdentity).a == m.a);

  const MarkovMatrix n = make_markov(0.2, 0.4);
  const MarkovMatrix nm = multiply(n, m);
  CHECK(nm.a == doctest::Approx(0.32).epsilon(1e-15));
  CHECK(nm.b == doctest::Approx(0.44).epsilon(1e-15));
  CHECK(oracle::max_abs_diff(dense(nm), oracle::mul(dense(n), dense(m))) <=
        1e-15);

  const MarkovMatrix pp = multiply(kExchange, kExchange);
  CHECK(pp.a == 0.0);
  CHECK(pp.b == 0.0);
}

TEST_CASE("inverse matches the adjugate oracle and the group law") {
  CHECK(inverse(kIdentity).a == 0.0);
  CHECK(inverse(kIdentity).b == 0.0);

  const MarkovMatrix m = make_markov(0.3, 0.1);
  const MarkovMatrix mi = inverse(m);
  CHECK(mi.a == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(mi.b == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
  CHECK(oracle::max_abs_diff(dense(mi), oracle::adjugate_inverse(dense(m))) <=
        1e-15);
  const MarkovMatrix prod = multiply(mi, m);
  CHECK(std::abs(prod.a) <= 1e-15);
  CHECK(std::abs(prod.b) <= 1e-15);

  CHECK_THROWS_AS(inverse(make_markov(0.5, 0.5)), SingularError);
}

TEST_CASE("classify splits on the sign of the determinant") {
  CHECK(classify(kIdentity) == ComponentClass::IdentityComponent);
  CHECK(classify(kExchange) == ComponentClass::ReflectedComponent);
  CHECK(classify(make_markov(0.25, 0.75)) == ComponentClass::Singular);

  // Tolerance band resolves to Singular on both sides.
  CHECK(classify(make_markov(0.5, 0.5 - 1e-13)) == ComponentClass::Singular);
  CHECK(classify(make_markov(0.5, 0.5 + 1e-13)) == ComponentClass::Singular);
  CHECK(classify(make_markov(0.5, 0.5 - 1e-13), 1e-14) ==
        ComponentClass::IdentityComponent);
}

TEST_CASE("parity_factor splits off the reflection") {
  const ParityFactorization id = parity_factor(kIdentity);
  CHECK(id.parity == 1);
  CHECK(id.factor.a == 0.0);

  const ParityFactorization pf = parity_factor(kExchange);
  CHECK(pf.parity == -1);
  CHECK(pf.factor.a == 0.0);
  CHECK(pf.factor.b == 0.0);

  const MarkovMatrix m = make_markov(0.9, 0.4);
  REQUIRE(det(m) == doctest::Approx(-0.3).epsilon(1e-15));
  const ParityFactorization f = parity_factor(m);
  CHECK(f.parity == -1);
  CHECK(f.factor.a == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(f.factor.b == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(det(f.factor) == doctest::Approx(0.3).epsilon(1e-14));
  // Row swap is exactly left multiplication by P on the dense form.
  CHECK(oracle::max_abs_diff(dense(f.factor), oracle::row_swap(dense(m))) <=
        1e-15);
  const MarkovMatrix back = multiply(kExchange, f.factor);
  CHECK(std::abs(back.a - m.a) <= 1e-14);
  CHECK(std::abs(back.b - m.b) <= 1e-14);

  CHECK_THROWS_AS(parity_factor(make_markov(0.25, 0.75)), SingularError);
}

TEST_CASE("is_central holds only at the identity") {
  CHECK(is_central(kIdentity, 8, 42));
  CHECK_FALSE(is_central(make_markov(0.3, 0.1), 8, 42));
  // h(1/2) does not commute with (a, b) = (1, 0).
  const MarkovMatrix hs = make_markov(0.5, -0.5);
  const MarkovMatrix g = make_markov(1.0, 0.0);
  const Mat2 c = oracle::commutator(dense(hs), dense(g));
  CHECK(oracle::max_abs_diff(c, Mat2{}) > 0.1);
  CHECK_FALSE(is_central(hs, 8, 42));

  CHECK_THROWS_AS(is_central(kIdentity, 0, 42), std::invalid_argument);
}

TEST_CASE("is_stochastic is the unit-square predicate") {
  CHECK(is_stochastic(make_markov(0.3, 0.1)));
  CHECK_FALSE(is_stochastic(make_markov(-0.1, 0.5)));
  CHECK(is_stochastic(kExchange));  // P sits in the corner of the square
  CHECK_FALSE(is_stochastic(make_markov(0.3, 1.0000001)));
}

TEST_CASE("property: closure keeps column sums at 1") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const MarkovMatrix prod =
        multiply(random_matrix(rng, -10.0, 10.0), random_matrix(rng, -10.0, 10.0));
    const Mat2 d = dense(prod);
    CHECK(std::abs(d[0][0] + d[1][0] - 1.0) <= 1e-14);
    CHECK(std::abs(d[0][1] + d[1][1] - 1.0) <= 1e-14);
  }
}

TEST_CASE("property: determinant is multiplicative") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const MarkovMatrix n = random_matrix(rng, -10.0, 10.0);
    const MarkovMatrix m = random_matrix(rng, -10.0, 10.0);
    CHECK(std::abs(det(multiply(n, m)) - det(n) * det(m)) <= 1e-12);
  }
}

TEST_CASE("property: multiplication is associative") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const MarkovMatrix a = random_matrix(rng, -3.0, 3.0);
    const MarkovMatrix b = random_matrix(rng, -3.0, 3.0);
    const MarkovMatrix c = random_matrix(rng, -3.0, 3.0);
    const MarkovMatrix lhs = multiply(multiply(a, b), c);
    const MarkovMatrix rhs = multiply(a, multiply(b, c));
    CHECK(std::abs(lhs.a - rhs.a) <= 1e-12);
    CHECK(std::abs(lhs.b - rhs.b) <= 1e-12);
  }
}

TEST_CASE("property: inverse law") {
  std::mt19937_64 rng(13);
  int kept = 0;
  while (kept < 500) {
    const MarkovMatrix m = random_matrix(rng, -2.0, 2.0);
    if (std::abs(det(m)) <= 1e-6) continue;
    ++kept;
    const MarkovMatrix prod = multiply(inverse(m), m);
    CHECK(std::abs(prod.a) <= 1e-10);
    CHECK(std::abs(prod.b) <= 1e-10);
  }
  // Directed near-singular case, still inside the admissible region.
  const MarkovMatrix near = make_markov(0.4, 0.6 - 2e-6);
  const MarkovMatrix prod = multiply(inverse(near), near);
  CHECK(std::abs(prod.a) <= 1e-10);
  CHECK(std::abs(prod.b) <= 1e-10);
}

TEST_CASE("property: parity factorization") {
  std::mt19937_64 rng(17);
  int kept = 0;
  while (kept < 500) {
    const MarkovMatrix m = random_matrix(rng, -3.0, 3.0);
    const double d = det(m);
    if (std::abs(d) <= 1e-6) continue;
    ++kept;
    const ParityFactorization f = parity_factor(m);
    CHECK(f.parity == (d > 0.0 ? 1 : -1));
    CHECK(classify(f.factor) == ComponentClass::IdentityComponent);
    const MarkovMatrix back =
        f.parity == 1 ? f.factor : multiply(kExchange, f.factor);
    CHECK(std::abs(back.a - m.a) <= 1e-14);
    CHECK(std::abs(back.b - m.b) <= 1e-14);
  }
}

TEST_CASE("property: no central element away from the identity") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    const MarkovMatrix m = random_matrix(rng, -2.0, 2.0);
    if (std::max(std::abs(m.a), std::abs(m.b)) <= kDefaultTolerance) continue;
    CHECK_FALSE(is_central(m, 8, 1234 + i));
  }
  CHECK(is_central(make_markov(5e-13, -3e-13), 8, 99));
}

TEST_CASE("property: sign of det is a homomorphism onto {+1, -1}") {
  std::mt19937_64 rng(23);
  int kept = 0;
  while (kept < 1000) {
    const MarkovMatrix n = random_matrix(rng, -5.0, 5.0);
    const MarkovMatrix m = random_matrix(rng, -5.0, 5.0);
    if (std::abs(det(n)) <= 1e-3 || std::abs(det(m)) <= 1e-3) continue;
    ++kept;
    const double sign_prod = det(multiply(n, m)) > 0.0 ? 1.0 : -1.0;
    const double sign_n = det(n) > 0.0 ? 1.0 : -1.0;
    const double sign_m = det(m) > 0.0 ? 1.0 : -1.0;
    CHECK(sign_prod == sign_n * sign_m);
  }
}

}  // TEST_SUITE
