#include "cpfuzzy/aggregation.hpp"

#include <cmath>
#include <sstream>

#include "cpfuzzy/errors.hpp"

namespace cpfuzzy {

namespace {

void check_inputs(std::span<const CPFV> values, const WeightVector &w) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "cannot aggregate an empty collection");
  if (values.size() != w.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(values.size()) + " values but " +
                                               std::to_string(w.size()) + " weights");
  }
}

// The algebraic generators are logarithms, so this weighted sum is the log of
// the weighted product and never underflows the way the product itself would.
// An infinite generator value with positive weight makes the sum infinite.
template <typename Component>
double weighted_sum(const Generator &gen, std::span<const CPFV> values, const WeightVector &w, Component component) {
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (w[i] == 0.0) continue;
    sum += w[i] * gen(component(values[i]));
  }
  return sum;
}

constexpr auto mu_of = [](const CPFV &v) { return v.mu(); };
constexpr auto nu_of = [](const CPFV &v) { return v.nu(); };
constexpr auto r_of = [](const CPFV &v) { return v.r(); };

}  // namespace

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(ErrorCode::EmptyInput, "weight vector is empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double wi = weights_[i];
    if (!std::isfinite(wi) || wi < 0.0 || wi > 1.0) {
      std::ostringstream os;
      os << "weight " << i << " = " << wi << " is outside [0,1]";
      throw Error(ErrorCode::InvalidWeights, os.str());
    }
    sum += wi;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "weights sum to " << sum << ", expected 1";
    throw Error(ErrorCode::InvalidWeights, os.str());
  }
}

WeightVector WeightVector::equal(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "weight vector is empty");
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

CPFV cpwa(std::span<const CPFV> values, const WeightVector &w, const GeneratorPair &gens) {
  check_inputs(values, w);
  return CPFV{gens.h.inverse(weighted_sum(gens.h, values, w, mu_of)),
              gens.g.inverse(weighted_sum(gens.g, values, w, nu_of)),
              gens.q.inverse(weighted_sum(gens.q, values, w, r_of))};
}

CPFV cpwg(std::span<const CPFV> values, const WeightVector &w, const GeneratorPair &gens) {
  check_inputs(values, w);
  return CPFV{gens.g.inverse(weighted_sum(gens.g, values, w, mu_of)),
              gens.h.inverse(weighted_sum(gens.h, values, w, nu_of)),
              gens.q.inverse(weighted_sum(gens.q, values, w, r_of))};
}

AggregationOperator parse_operator(std::string_view id) {
  if (id == "cpwa_q") return AggregationOperator::CpwaQ;
  if (id == "cpwa_p") return AggregationOperator::CpwaP;
  if (id == "cpwg_q") return AggregationOperator::CpwgQ;
  if (id == "cpwg_p") return AggregationOperator::CpwgP;
  throw Error(ErrorCode::UnknownOperator,
              "unknown operator '" + std::string(id) + "' (expected cpwa_q, cpwa_p, cpwg_q or cpwg_p)");
}

std::string_view to_string(AggregationOperator op) noexcept {
  switch (op) {
    case AggregationOperator::CpwaQ: return "cpwa_q";
    case AggregationOperator::CpwaP: return "cpwa_p";
    case AggregationOperator::CpwgQ: return "cpwg_q";
    case AggregationOperator::CpwgP: return "cpwg_p";
  }
  return "unknown";
}

AggregationKind kind_of(AggregationOperator op) noexcept {
  return op == AggregationOperator::CpwaQ || op == AggregationOperator::CpwaP ? AggregationKind::Arithmetic
                                                                              : AggregationKind::Geometric;
}

bool is_p_type(AggregationOperator op) noexcept {
  return op == AggregationOperator::CpwaP || op == AggregationOperator::CpwgP;
}

std::string_view radius_generator_id(AggregationOperator op) noexcept {
  return is_p_type(op) ? "algebraic_p" : "algebraic_q";
}

Aggregator make_aggregator(AggregationKind kind, GeneratorPair gens) {
  if (kind == AggregationKind::Arithmetic) {
    return [gens = std::move(gens)](std::span<const CPFV> v, const WeightVector &w) { return cpwa(v, w, gens); };
  }
  return [gens = std::move(gens)](std::span<const CPFV> v, const WeightVector &w) { return cpwg(v, w, gens); };
}

Aggregator make_aggregator(AggregationOperator op) {
  return make_aggregator(kind_of(op), algebraic_pair(radius_generator_id(op)));
}

CPFV aggregate(AggregationOperator op, std::span<const CPFV> values, const WeightVector &w) {
  return make_aggregator(op)(values, w);
}

}  // namespace cpfuzzy
