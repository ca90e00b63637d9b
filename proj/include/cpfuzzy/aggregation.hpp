#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpfuzzy/core_model.hpp"
#include "cpfuzzy/generators.hpp"

namespace cpfuzzy {

inline constexpr double kWeightSumTolerance = 1e-9;

/// Weights in [0,1] summing to 1 (within kWeightSumTolerance). Never renormalized.
class WeightVector {
 public:
  WeightVector() = default;
  /// Throws Error{InvalidWeights} (or Error{EmptyInput} for an empty list).
  explicit WeightVector(std::vector<double> weights);

  std::span<const double> values() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

  static WeightVector equal(std::size_t n);

  friend bool operator==(const WeightVector &, const WeightVector &) = default;

 private:
  std::vector<double> weights_;
};

/// <h^-1(sum w_i h(mu_i)), g^-1(sum w_i g(nu_i)); q^-1(sum w_i q(r_i))>
///
/// Components with w_i == 0 are skipped.
CPFV cpwa(std::span<const CPFV> values, const WeightVector &w, const GeneratorPair &gens);

/// <g^-1(sum w_i g(mu_i)), h^-1(sum w_i h(nu_i)); q^-1(sum w_i q(r_i))>
CPFV cpwg(std::span<const CPFV> values, const WeightVector &w, const GeneratorPair &gens);

enum class AggregationKind { Arithmetic, Geometric };

/// The four algebraic operators: arithmetic/geometric x q/p radius generator.
enum class AggregationOperator { CpwaQ, CpwaP, CpwgQ, CpwgP };

/// "cpwa_q", "cpwa_p", "cpwg_q", "cpwg_p"; throws Error{UnknownOperator}.
AggregationOperator parse_operator(std::string_view id);
std::string_view to_string(AggregationOperator op) noexcept;
AggregationKind kind_of(AggregationOperator op) noexcept;
/// "algebraic_q" or "algebraic_p"
std::string_view radius_generator_id(AggregationOperator op) noexcept;
bool is_p_type(AggregationOperator op) noexcept;

using Aggregator = std::function<CPFV(std::span<const CPFV>, const WeightVector &)>;

Aggregator make_aggregator(AggregationKind kind, GeneratorPair gens);
Aggregator make_aggregator(AggregationOperator op);

CPFV aggregate(AggregationOperator op, std::span<const CPFV> values, const WeightVector &w);

}  // namespace cpfuzzy
