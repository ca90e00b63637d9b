#include "cpfuzzy/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "cpfuzzy/errors.hpp"

namespace cpfuzzy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Clamp rounding spill just outside [0,1] (sqrt(1 - x^2) for x ~ 1 and similar).
double to_unit(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

Generator::Generator(std::string name, Monotonicity monotonicity, Fn forward, Fn inverse)
    : name_(std::move(name)), monotonicity_(monotonicity), forward_(std::move(forward)), inverse_(std::move(inverse)) {}

double Generator::inverse(double s) const {
  if (std::isinf(s) && s > 0) return monotonicity_ == Monotonicity::Decreasing ? 0.0 : 1.0;
  if (s <= 0.0) return neutral();
  return to_unit(inverse_(s));
}

Generator algebraic_generator() {
  return Generator(
      "algebraic_g", Monotonicity::Decreasing,
      [](double t) { return t <= 0.0 ? kInf : -2.0 * std::log(t) + 0.0; },
      [](double s) { return std::exp(-0.5 * s); });
}

Generator algebraic_dual_generator() {
  return Generator(
      "algebraic_h", Monotonicity::Increasing,
      [](double t) { return t >= 1.0 ? kInf : -std::log1p(-t * t) + 0.0; },
      [](double s) { return std::sqrt(-std::expm1(-s)); });
}

Generator membership_generator(const Generator &g) {
  return Generator(
      g.name() + "_dual", Monotonicity::Increasing,
      [g](double t) { return g(pythagorean_complement(t)); },
      [g](double s) { return pythagorean_complement(g.inverse(s)); });
}

Generator radius_generator(std::string_view id) {
  if (id == "algebraic_q") {
    Generator g = algebraic_generator();
    return Generator("algebraic_q", Monotonicity::Decreasing, [g](double t) { return g(t); },
                     [g](double s) { return g.inverse(s); });
  }
  if (id == "algebraic_p") {
    Generator h = algebraic_dual_generator();
    return Generator("algebraic_p", Monotonicity::Increasing, [h](double t) { return h(t); },
                     [h](double s) { return h.inverse(s); });
  }
  throw Error(ErrorCode::UnknownOperator,
              "unknown radius generator '" + std::string(id) + "' (expected algebraic_q or algebraic_p)");
}

BinaryOp operation_from_generator(const Generator &gen) {
  return [gen](double x, double y) { return gen.inverse(gen(x) + gen(y)); };
}

BinaryOp tnorm_from_generator(const Generator &gen) { return operation_from_generator(gen); }

double pythagorean_complement(double a) { return std::sqrt(to_unit(1.0 - a * a)); }

BinaryOp dual_tconorm(BinaryOp tnorm) {
  return [t = std::move(tnorm)](double x, double y) {
    return pythagorean_complement(t(pythagorean_complement(x), pythagorean_complement(y)));
  };
}

BinaryOp dual_tnorm(BinaryOp tconorm) { return dual_tconorm(std::move(tconorm)); }

BinaryOp min_op() {
  return [](double x, double y) { return std::min(x, y); };
}

BinaryOp max_op() {
  return [](double x, double y) { return std::max(x, y); };
}

GeneratorPair make_generator_pair(const Generator &g, const Generator &q) {
  return GeneratorPair{g, membership_generator(g), q};
}

GeneratorPair algebraic_pair(std::string_view radius_id) {
  return GeneratorPair{algebraic_generator(), algebraic_dual_generator(), radius_generator(radius_id)};
}

}  // namespace cpfuzzy
