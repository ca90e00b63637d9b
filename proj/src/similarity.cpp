#include "cpfuzzy/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "cpfuzzy/errors.hpp"

namespace cpfuzzy {

namespace {

struct Squared {
  double mu2;
  double nu2;
  double norm2;  // mu^4 + nu^4
};

Squared squared(const CPFV &v, const char *which) {
  if (v.mu() == 0.0 && v.nu() == 0.0) {
    throw Error(ErrorCode::DegenerateCenter, std::string(which) + " has center <0, 0>; cosine term is undefined");
  }
  const double mu2 = v.mu() * v.mu();
  const double nu2 = v.nu() * v.nu();
  return {mu2, nu2, mu2 * mu2 + nu2 * nu2};
}

}  // namespace

double csm(const CPFV &a, const CPFV &b) {
  const Squared sa = squared(a, "first argument");
  const Squared sb = squared(b, "second argument");

  // sqrt(x * x) == x exactly in IEEE arithmetic, which keeps csm(a, a) == 1.
  // Fall back to the split form if the product underflows.
  double denom = std::sqrt(sa.norm2 * sb.norm2);
  if (denom == 0.0) denom = std::sqrt(sa.norm2) * std::sqrt(sb.norm2);
  const double cosine = std::clamp((sa.mu2 * sb.mu2 + sa.nu2 * sb.nu2) / denom, 0.0, 1.0);

  return 0.5 * (cosine + 1.0 - std::abs(a.r() - b.r()));
}

double csm_to_ideal(const CPFV &a) { return csm(a, ideal_cpfv()); }

}  // namespace cpfuzzy
