#include "doctest.h"

#include <cmath>

#include "cpfuzzy/algebra.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cpfuzzy;
using namespace cpfuzzy::testing;

namespace {

const CPFV a{0.6, 0.5, 0.2};
const CPFV b{0.8, 0.3, 0.4};

void check_close(const CPFV &got, double mu, double nu, double r, double tol = 1e-7) {
  CHECK(std::abs(got.mu() - mu) <= tol);
  CHECK(std::abs(got.nu() - nu) <= tol);
  CHECK(std::abs(got.r() - r) <= tol);
}

}  // namespace

TEST_CASE("generator sum") {
  const GeneratorPair q = algebraic_pair("algebraic_q");
  check_close(add(a, b, q), 0.8772685, 0.15, 0.08);
  check_close(add(a, b, algebraic_pair("algebraic_p")), oracle::alg_sum(0.6, 0.8), 0.15, std::sqrt(0.04 + 0.16 - 0.0064), 1e-14);
  check_close(add(a, b, algebraic_pair("algebraic_p")), 0.8772685, 0.15, 0.44);
  check_close(add(a, b, q), oracle::alg_sum(0.6, 0.8), 0.5 * 0.3, 0.2 * 0.4, 1e-14);

  const CPFV zero{0.0, 1.0, 1.0};
  check_close(add(zero, a, q), a.mu(), a.nu(), a.r(), 1e-15);
}

TEST_CASE("generator product") {
  const GeneratorPair q = algebraic_pair("algebraic_q");
  check_close(multiply(a, b, q), 0.48, std::sqrt(0.25 + 0.09 - 0.0225), 0.08, 1e-14);
  check_close(multiply(a, b, q), 0.48, 0.5634714, 0.08);
  check_close(multiply(ideal_cpfv(), a, q), a.mu(), a.nu(), a.r(), 1e-15);
  CHECK(multiply(CPFV{0.0, 0.4, 0.3}, b, q).mu() == 0.0);
}

TEST_CASE("scalar multiple") {
  const GeneratorPair q = algebraic_pair("algebraic_q");
  check_close(scalar_multiple(1.0, a, q), a.mu(), a.nu(), a.r(), 1e-14);
  check_close(scalar_multiple(2.0, a, q), std::sqrt(1.0 - 0.64 * 0.64), 0.25, 0.04, 1e-14);
  check_close(scalar_multiple(2.0, a, q), 0.7683749, 0.25, 0.04);
  const CPFV round = scalar_multiple(2.0, scalar_multiple(0.5, a, q), q);
  check_close(round, a.mu(), a.nu(), a.r(), 1e-12);
  CHECK(code_of([&] { scalar_multiple(0.0, a, q); }) == ErrorCode::NonPositiveScalar);
  CHECK(code_of([&] { scalar_multiple(-1.0, a, q); }) == ErrorCode::NonPositiveScalar);
  CHECK(code_of([&] { scalar_multiple(INFINITY, a, q); }) == ErrorCode::NonPositiveScalar);
}

TEST_CASE("power") {
  const GeneratorPair q = algebraic_pair("algebraic_q");
  check_close(power(a, 1.0, q), a.mu(), a.nu(), a.r(), 1e-14);
  check_close(power(a, 2.0, q), 0.36, std::sqrt(1.0 - 0.5625), 0.04, 1e-14);
  check_close(power(a, 2.0, q), 0.36, 0.6614378, 0.04);
  CHECK(power(ideal_cpfv(), 3.0, q) == ideal_cpfv());
  CHECK(code_of([&] { power(a, 0.0, q); }) == ErrorCode::NonPositiveScalar);
  CHECK(code_of([&] { power(a, std::nan(""), q); }) == ErrorCode::NonPositiveScalar);
}

TEST_CASE("min/max radius sum and product") {
  check_close(add_minmax(a, b, RadiusMode::Min), 0.8772685, 0.15, 0.2);
  check_close(add_minmax(a, b, RadiusMode::Max), 0.8772685, 0.15, 0.4);
  CHECK(add_minmax(a, a, RadiusMode::Min).r() == a.r());
  check_close(multiply_minmax(a, b, RadiusMode::Max), 0.48, std::sqrt(0.3175), 0.4, 1e-14);
  CHECK(multiply_minmax(CPFV{1, 0, 0.3}, CPFV{1, 0, 0.7}, RadiusMode::Min) == CPFV{1, 0, 0.3});
  CHECK(multiply_minmax(a, b, RadiusMode::Min) == multiply_minmax(b, a, RadiusMode::Min));
}

TEST_CASE("t-norm based sum and product") {
  const BinaryOp product = tnorm_from_generator(algebraic_generator());
  const GeneratorPair q = algebraic_pair("algebraic_q");
  check_close(add_general(a, b, product, min_op()), 0.8772685, 0.15, 0.2);
  const CPFV via_minmax = add_minmax(a, b, RadiusMode::Min);
  check_close(add_general(a, b, product, min_op()), via_minmax.mu(), via_minmax.nu(), via_minmax.r(), 1e-12);
  const CPFV via_gen = add(a, b, q);
  check_close(add_general(a, b, product, product), via_gen.mu(), via_gen.nu(), via_gen.r(), 1e-12);
  const CPFV via_mul = multiply(a, b, q);
  check_close(multiply_general(a, b, product, product), via_mul.mu(), via_mul.nu(), via_mul.r(), 1e-12);

  const CPFV neutral{0.0, 1.0, 0.0};
  check_close(add_general(neutral, b, product, max_op()), b.mu(), b.nu(), b.r(), 1e-12);
}

TEST_CASE("t-norm based sum matches the generator sum on random pairs") {
  oracle::Sampler s(31);
  const BinaryOp product = tnorm_from_generator(algebraic_generator());
  const GeneratorPair q = algebraic_pair("algebraic_q");
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const CPFV x = s.cpfv();
    const CPFV y = s.cpfv();
    const CPFV g = add_general(x, y, product, product);
    const CPFV h = add(x, y, q);
    worst = std::max({worst, std::abs(g.mu() - h.mu()), std::abs(g.nu() - h.nu()), std::abs(g.r() - h.r())});
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("constraint bound T^2(mu) + S^2(nu) <= 1 holds for products") {
  oracle::Sampler s(32);
  const BinaryOp t = tnorm_from_generator(algebraic_generator());
  const BinaryOp sn = dual_tconorm(t);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const CPFV x = s.cpfv();
    const CPFV y = s.cpfv();
    const double lhs = std::pow(t(x.mu(), y.mu()), 2) + std::pow(sn(x.nu(), y.nu()), 2);
    if (lhs > 1.0 + 1e-12) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("closure of every operation") { check_outcomes(props::closure(41, props::kCases)); }

TEST_CASE("algebraic laws") { check_outcomes(props::algebra_laws(42, props::kCases)); }

TEST_CASE("generator operations and aggregation agree with closed forms and folds") {
  check_outcomes(props::fold_oracle(43, props::kCases));
}
