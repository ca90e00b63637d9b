#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cpfuzzy/aggregation.hpp"
#include "cpfuzzy/core_model.hpp"
#include "cpfuzzy/generators.hpp"
#include "cpfuzzy/matrix.hpp"

namespace cpfuzzy {

enum class Polarity { Benefit, Cost };

/// "benefit" or "cost"; throws Error{ParseError}.
Polarity parse_polarity(std::string_view s);
std::string_view to_string(Polarity p) noexcept;

/// Experts x alternatives x criteria PFV evaluations with per-criterion
/// polarity and weight.
class DecisionProblem {
 public:
  /// Validates shapes and labels. Throws Error{EmptyInput}, Error{DimensionMismatch},
  /// Error{LengthMismatch} or Error{DuplicateLabel}.
  DecisionProblem(std::vector<std::string> alternatives, std::vector<std::string> criteria,
                  std::vector<Polarity> polarity, WeightVector weights, std::vector<Matrix<PFV>> experts);

  const std::vector<std::string> &alternatives() const noexcept { return alternatives_; }
  const std::vector<std::string> &criteria() const noexcept { return criteria_; }
  const std::vector<Polarity> &polarity() const noexcept { return polarity_; }
  const WeightVector &weights() const noexcept { return weights_; }
  const std::vector<Matrix<PFV>> &experts() const noexcept { return experts_; }

  std::size_t alternative_count() const noexcept { return alternatives_.size(); }
  std::size_t criterion_count() const noexcept { return criteria_.size(); }
  std::size_t expert_count() const noexcept { return experts_.size(); }

  friend bool operator==(const DecisionProblem &, const DecisionProblem &) = default;

 private:
  std::vector<std::string> alternatives_;
  std::vector<std::string> criteria_;
  std::vector<Polarity> polarity_;
  WeightVector weights_;
  std::vector<Matrix<PFV>> experts_;
};

/// Swaps <mu, nu> for every cost criterion; the result has all polarities
/// preserved so normalize(normalize(p)) == p.
DecisionProblem normalize(const DecisionProblem &problem);

struct RankedAlternative {
  std::string label;
  std::size_t index = 0;  // position in the problem's alternative list
  double score = 0.0;
  bool tied = false;      // equal score with a neighbour
};

/// Best-first. Equal scores keep input order and are flagged as tied.
class Ranking {
 public:
  Ranking() = default;
  Ranking(const std::vector<std::string> &labels, const std::vector<double> &scores);

  const std::vector<RankedAlternative> &entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const RankedAlternative &best() const { return entries_.front(); }
  bool has_ties() const noexcept;

  /// Worst to best, e.g. "A1 < A4 < A3 < A2 < A5"; tied neighbours are joined by "=".
  std::string ascending() const;

 private:
  std::vector<RankedAlternative> entries_;
};

/// Every intermediate of the method, kept for reporting.
struct Solution {
  std::string operator_name;
  DecisionProblem normalized;
  Matrix<CPFV> circular;          // fused alternatives x criteria
  std::vector<CPFV> aggregated;   // one per alternative
  std::vector<double> scores;     // similarity to the ideal, alternative order
  Ranking ranking;
};

/// normalize -> fuse cells over experts -> aggregate each alternative with
/// the criterion weights -> similarity to <1,0;1> -> rank.
Solution solve(const DecisionProblem &problem, AggregationOperator op);
Solution solve(const DecisionProblem &problem, AggregationKind kind, const GeneratorPair &gens);
Solution solve(const DecisionProblem &problem, const Aggregator &aggregator, std::string operator_name);

/// Operation count of the method for k criteria, n alternatives, m experts:
///   q-type: k + 2kn(6m + 7) + 25n
///   p-type: k + 4kn(3m + 4) + 27n
/// Throws Error{DomainError} when k < 2, n < 2 or m < 1.
std::uint64_t complexity_estimate(std::uint64_t k, std::uint64_t n, std::uint64_t m, AggregationOperator op);
std::uint64_t complexity_estimate(std::uint64_t k, std::uint64_t n, std::uint64_t m, bool p_type);

}  // namespace cpfuzzy
