#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace cpfuzzy {

enum class Monotonicity { Decreasing, Increasing };

/// Additive generator on [0,1] with values in [0, +inf].
///
/// A decreasing generator (forward(1) = 0) induces a t-norm through
/// inverse(forward(x) + forward(y)); an increasing one (forward(0) = 0)
/// induces a t-conorm the same way. +inf is a regular value: finite sums
/// with it stay infinite, and inverse(+inf) is the annihilator of the
/// induced operation (0 for decreasing, 1 for increasing generators).
class Generator {
 public:
  using Fn = std::function<double(double)>;

  Generator(std::string name, Monotonicity monotonicity, Fn forward, Fn inverse);

  double operator()(double t) const { return forward_(t); }
  double forward(double t) const { return forward_(t); }
  double inverse(double s) const;

  Monotonicity monotonicity() const noexcept { return monotonicity_; }
  const std::string &name() const noexcept { return name_; }

  /// Point where the generator vanishes: the neutral element of the induced operation.
  double neutral() const noexcept { return monotonicity_ == Monotonicity::Decreasing ? 1.0 : 0.0; }

 private:
  std::string name_;
  Monotonicity monotonicity_;
  Fn forward_;
  Fn inverse_;
};

/// g(t) = -log t^2, inverse exp(-s/2).
Generator algebraic_generator();

/// h(t) = -log(1 - t^2), inverse sqrt(1 - exp(-s)).
Generator algebraic_dual_generator();

/// h(t) = g(sqrt(1 - t^2)) for any decreasing g; h^-1(s) = sqrt(1 - g^-1(s)^2).
Generator membership_generator(const Generator &g);

/// Radius generators by identifier: "algebraic_q" (-log t^2) or "algebraic_p" (-log(1 - t^2)).
/// Throws Error{UnknownOperator} for anything else.
Generator radius_generator(std::string_view id);

using BinaryOp = std::function<double(double, double)>;

/// inverse(forward(x) + forward(y)); a t-norm for decreasing generators, t-conorm for increasing.
BinaryOp operation_from_generator(const Generator &gen);
BinaryOp tnorm_from_generator(const Generator &gen);

/// N(a) = sqrt(1 - a^2)
double pythagorean_complement(double a);

/// S(x,y) = N(T(N(x), N(y)))
BinaryOp dual_tconorm(BinaryOp tnorm);
/// T(x,y) = N(S(N(x), N(y)))
BinaryOp dual_tnorm(BinaryOp tconorm);

BinaryOp min_op();
BinaryOp max_op();

/// g drives non-membership sums (and membership products), h = g(sqrt(1 - t^2))
/// drives membership sums, q drives the radius.
struct GeneratorPair {
  Generator g;
  Generator h;
  Generator q;
};

/// Derives h from g generically.
GeneratorPair make_generator_pair(const Generator &g, const Generator &q);

/// Algebraic family with closed-form h; `radius_id` as in radius_generator().
GeneratorPair algebraic_pair(std::string_view radius_id = "algebraic_q");

}  // namespace cpfuzzy
