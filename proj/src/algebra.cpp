#include "cpfuzzy/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cpfuzzy/errors.hpp"

namespace cpfuzzy {

namespace {

void require_positive(double lambda) {
  if (!std::isfinite(lambda) || !(lambda > 0.0)) {
    std::ostringstream os;
    os << "scalar must be finite and > 0, got " << lambda;
    throw Error(ErrorCode::NonPositiveScalar, os.str());
  }
}

double combine(const Generator &gen, double x, double y) { return gen.inverse(gen(x) + gen(y)); }

double scale(const Generator &gen, double lambda, double x) { return gen.inverse(lambda * gen(x)); }

double algebraic_sum(double x, double y) {
  const double x2 = x * x;
  const double y2 = y * y;
  return std::sqrt(std::min(1.0, x2 + y2 - x2 * y2));
}

double pick(RadiusMode mode, double ra, double rb) {
  return mode == RadiusMode::Min ? std::min(ra, rb) : std::max(ra, rb);
}

}  // namespace

CPFV add(const CPFV &a, const CPFV &b, const GeneratorPair &gens) {
  return CPFV{combine(gens.h, a.mu(), b.mu()), combine(gens.g, a.nu(), b.nu()), combine(gens.q, a.r(), b.r())};
}

CPFV multiply(const CPFV &a, const CPFV &b, const GeneratorPair &gens) {
  return CPFV{combine(gens.g, a.mu(), b.mu()), combine(gens.h, a.nu(), b.nu()), combine(gens.q, a.r(), b.r())};
}

CPFV scalar_multiple(double lambda, const CPFV &a, const GeneratorPair &gens) {
  require_positive(lambda);
  return CPFV{scale(gens.h, lambda, a.mu()), scale(gens.g, lambda, a.nu()), scale(gens.q, lambda, a.r())};
}

CPFV power(const CPFV &a, double lambda, const GeneratorPair &gens) {
  require_positive(lambda);
  return CPFV{scale(gens.g, lambda, a.mu()), scale(gens.h, lambda, a.nu()), scale(gens.q, lambda, a.r())};
}

CPFV add_minmax(const CPFV &a, const CPFV &b, RadiusMode mode) {
  return CPFV{algebraic_sum(a.mu(), b.mu()), a.nu() * b.nu(), pick(mode, a.r(), b.r())};
}

CPFV multiply_minmax(const CPFV &a, const CPFV &b, RadiusMode mode) {
  return CPFV{a.mu() * b.mu(), algebraic_sum(a.nu(), b.nu()), pick(mode, a.r(), b.r())};
}

CPFV add_general(const CPFV &a, const CPFV &b, const BinaryOp &tnorm, const BinaryOp &radius_op) {
  const BinaryOp tconorm = dual_tconorm(tnorm);
  return CPFV{tconorm(a.mu(), b.mu()), tnorm(a.nu(), b.nu()), radius_op(a.r(), b.r())};
}

CPFV multiply_general(const CPFV &a, const CPFV &b, const BinaryOp &tnorm, const BinaryOp &radius_op) {
  const BinaryOp tconorm = dual_tconorm(tnorm);
  return CPFV{tnorm(a.mu(), b.mu()), tconorm(a.nu(), b.nu()), radius_op(a.r(), b.r())};
}

}  // namespace cpfuzzy
