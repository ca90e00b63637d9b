#pragma once

#include "cpfuzzy/core_model.hpp"

namespace cpfuzzy {

/// Radius-aware cosine similarity:
///   1/2 * (cos angle between (mu_a^2, nu_a^2) and (mu_b^2, nu_b^2) + 1 - |r_a - r_b|)
///
/// Result lies in [0,1], is symmetric, and equals 1 when a == b (the converse
/// does not hold). A center with mu = nu = 0 has no direction and raises
/// Error{DegenerateCenter}.
double csm(const CPFV &a, const CPFV &b);

/// csm(a, <1, 0; 1>)
double csm_to_ideal(const CPFV &a);

}  // namespace cpfuzzy
