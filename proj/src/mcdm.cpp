#include "cpfuzzy/mcdm.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "cpfuzzy/errors.hpp"
#include "cpfuzzy/fusion.hpp"
#include "cpfuzzy/similarity.hpp"

namespace cpfuzzy {

namespace {

void require_unique(const std::vector<std::string> &labels, const char *what) {
  std::unordered_set<std::string> seen;
  for (const auto &l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::DuplicateLabel, std::string(what) + " label '" + l + "' appears more than once");
    }
  }
}

}  // namespace

Polarity parse_polarity(std::string_view s) {
  if (s == "benefit") return Polarity::Benefit;
  if (s == "cost") return Polarity::Cost;
  throw Error(ErrorCode::ParseError, "polarity must be \"benefit\" or \"cost\", got \"" + std::string(s) + "\"");
}

std::string_view to_string(Polarity p) noexcept { return p == Polarity::Benefit ? "benefit" : "cost"; }

DecisionProblem::DecisionProblem(std::vector<std::string> alternatives, std::vector<std::string> criteria,
                                 std::vector<Polarity> polarity, WeightVector weights,
                                 std::vector<Matrix<PFV>> experts)
    : alternatives_(std::move(alternatives)),
      criteria_(std::move(criteria)),
      polarity_(std::move(polarity)),
      weights_(std::move(weights)),
      experts_(std::move(experts)) {
  if (alternatives_.empty()) throw Error(ErrorCode::EmptyInput, "no alternatives", "alternatives");
  if (criteria_.empty()) throw Error(ErrorCode::EmptyInput, "no criteria", "criteria");
  if (experts_.empty()) throw Error(ErrorCode::EmptyInput, "no expert matrices", "experts");
  require_unique(alternatives_, "alternative");
  require_unique(criteria_, "criterion");
  if (polarity_.size() != criteria_.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(polarity_.size()) + " entries for " + std::to_string(criteria_.size()) + " criteria",
                "polarity");
  }
  if (weights_.size() != criteria_.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(weights_.size()) + " entries for " + std::to_string(criteria_.size()) + " criteria",
                "weights");
  }
  for (std::size_t e = 0; e < experts_.size(); ++e) {
    if (experts_[e].rows() != alternatives_.size() || experts_[e].cols() != criteria_.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "matrix is " + std::to_string(experts_[e].rows()) + "x" + std::to_string(experts_[e].cols()) +
                      ", expected " + std::to_string(alternatives_.size()) + "x" + std::to_string(criteria_.size()),
                  "experts[" + std::to_string(e) + "]");
    }
  }
}

DecisionProblem normalize(const DecisionProblem &problem) {
  std::vector<Matrix<PFV>> experts = problem.experts();
  for (auto &m : experts) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (problem.polarity()[j] == Polarity::Cost) m(i, j) = m(i, j).swapped();
      }
    }
  }
  return DecisionProblem(problem.alternatives(), problem.criteria(), problem.polarity(), problem.weights(),
                         std::move(experts));
}

Ranking::Ranking(const std::vector<std::string> &labels, const std::vector<double> &scores) {
  if (labels.size() != scores.size()) {
    throw Error(ErrorCode::LengthMismatch, "ranking needs one score per alternative");
  }
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  entries_.reserve(order.size());
  for (std::size_t idx : order) entries_.push_back({labels[idx], idx, scores[idx], false});
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].score == entries_[i - 1].score) entries_[i].tied = entries_[i - 1].tied = true;
  }
}

bool Ranking::has_ties() const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [](const auto &e) { return e.tied; });
}

std::string Ranking::ascending() const {
  // Groups of equal scores are walked worst-first; members keep input order.
  std::string out;
  std::size_t end = entries_.size();
  while (end > 0) {
    std::size_t begin = end - 1;
    while (begin > 0 && entries_[begin - 1].score == entries_[end - 1].score) --begin;
    if (!out.empty()) out += " < ";
    for (std::size_t i = begin; i < end; ++i) {
      if (i != begin) out += " = ";
      out += entries_[i].label;
    }
    end = begin;
  }
  return out;
}

Solution solve(const DecisionProblem &problem, const Aggregator &aggregator, std::string operator_name) {
  Solution s{std::move(operator_name), normalize(problem), {}, {}, {}, {}};
  s.circular = build_circular_matrix(s.normalized.experts());

  s.aggregated.reserve(problem.alternative_count());
  s.scores.reserve(problem.alternative_count());
  for (std::size_t i = 0; i < s.circular.rows(); ++i) {
    s.aggregated.push_back(aggregator(s.circular.row(i), problem.weights()));
    s.scores.push_back(csm_to_ideal(s.aggregated.back()));
  }
  s.ranking = Ranking(problem.alternatives(), s.scores);
  return s;
}

Solution solve(const DecisionProblem &problem, AggregationKind kind, const GeneratorPair &gens) {
  std::string name = (kind == AggregationKind::Arithmetic ? "cpwa(" : "cpwg(") + gens.q.name() + ")";
  return solve(problem, make_aggregator(kind, gens), std::move(name));
}

Solution solve(const DecisionProblem &problem, AggregationOperator op) {
  return solve(problem, make_aggregator(op), std::string(to_string(op)));
}

std::uint64_t complexity_estimate(std::uint64_t k, std::uint64_t n, std::uint64_t m, bool p_type) {
  if (k < 2 || n < 2) throw Error(ErrorCode::DomainError, "criteria and alternative counts must be at least 2");
  if (m < 1) throw Error(ErrorCode::DomainError, "expert count must be at least 1");
  return p_type ? k + 4 * k * n * (3 * m + 4) + 27 * n : k + 2 * k * n * (6 * m + 7) + 25 * n;
}

std::uint64_t complexity_estimate(std::uint64_t k, std::uint64_t n, std::uint64_t m, AggregationOperator op) {
  return complexity_estimate(k, n, m, is_p_type(op));
}

}  // namespace cpfuzzy
