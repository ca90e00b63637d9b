#pragma once

#include "cpfuzzy/core_model.hpp"
#include "cpfuzzy/generators.hpp"

namespace cpfuzzy {

// Generator-based operations. With the algebraic pair these reduce to
//   a (+) b   = <sqrt(mu_a^2 + mu_b^2 - mu_a^2 mu_b^2), nu_a nu_b; r_a r_b>
//   a (x) b   = <mu_a mu_b, sqrt(nu_a^2 + nu_b^2 - nu_a^2 nu_b^2); r_a r_b>
//   lambda a  = <sqrt(1 - (1 - mu^2)^lambda), nu^lambda; r^lambda>
//   a^lambda  = <mu^lambda, sqrt(1 - (1 - nu^2)^lambda); r^lambda>
// and the radius follows p(t) = -log(1 - t^2) instead when q is "algebraic_p".

CPFV add(const CPFV &a, const CPFV &b, const GeneratorPair &gens);
CPFV multiply(const CPFV &a, const CPFV &b, const GeneratorPair &gens);
/// Throws Error{NonPositiveScalar} unless lambda is finite and > 0.
CPFV scalar_multiple(double lambda, const CPFV &a, const GeneratorPair &gens);
/// Throws Error{NonPositiveScalar} unless lambda is finite and > 0.
CPFV power(const CPFV &a, double lambda, const GeneratorPair &gens);

// Algebraic centers with min/max radius.
CPFV add_minmax(const CPFV &a, const CPFV &b, RadiusMode mode);
CPFV multiply_minmax(const CPFV &a, const CPFV &b, RadiusMode mode);

// <S(mu_a, mu_b), T(nu_a, nu_b); Q(r_a, r_b)> and <T(mu_a, mu_b), S(nu_a, nu_b); Q(r_a, r_b)>,
// S being the Pythagorean dual of T.
CPFV add_general(const CPFV &a, const CPFV &b, const BinaryOp &tnorm, const BinaryOp &radius_op);
CPFV multiply_general(const CPFV &a, const CPFV &b, const BinaryOp &tnorm, const BinaryOp &radius_op);

}  // namespace cpfuzzy
