#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpfuzzy/aggregation.hpp"
#include "cpfuzzy/core_model.hpp"
#include "cpfuzzy/mcdm.hpp"

namespace cpfuzzy::io {

/// Fixed-point text with `precision` decimals, rounding half up on the shortest
/// decimal representation of x (so 0.145 -> "0.15", 0.125 -> "0.13").
std::string format_fixed(double x, int precision);

/// Problem document:
///   { "alternatives": [...], "criteria": [...], "polarity": ["benefit"|"cost", ...],
///     "weights": [...], "experts": [ [[ [mu, nu], ... per criterion ], ... per alternative ], ... ] }
/// Errors carry `source` plus either line:column (syntax) or the offending field path.
DecisionProblem parse_problem(std::string_view text, std::string_view source = "<input>");
DecisionProblem load_problem(const std::filesystem::path &path);
std::string problem_to_json(const DecisionProblem &problem);

struct SolveConfig {
  AggregationOperator op = AggregationOperator::CpwaQ;
  int precision = 2;
};

/// { "operator": "cpwa_q" | ... | "cpwa" | "cpwg", "radius_generator": "algebraic_q" | "algebraic_p",
///   "generator": "algebraic", "precision": 2 }, every field optional.
SolveConfig parse_config(std::string_view text, std::string_view source = "<config>");
SolveConfig load_config(const std::filesystem::path &path);

using Collection = std::pair<std::string, std::vector<PFV>>;

/// { "collections": [ { "label": "x1", "values": [[mu, nu], ...] }, ... ] }
/// A bare array of value lists is accepted too; labels then default to x1, x2, ...
std::vector<Collection> parse_collections(std::string_view text, std::string_view source = "<input>");
std::vector<Collection> load_collections(const std::filesystem::path &path);

/// element,mu,nu,r
std::string fused_csv(const std::vector<Collection> &collections, int precision);

// Case-study tables.
std::string normalized_csv(const DecisionProblem &normalized, int precision);
std::string centers_csv(const DecisionProblem &problem, const Matrix<CPFV> &circular, int precision);
std::string radii_csv(const DecisionProblem &problem, const Matrix<CPFV> &circular, int precision);
std::string circular_csv(const DecisionProblem &problem, const Matrix<CPFV> &circular, int precision);
std::string aggregated_csv(const DecisionProblem &problem, const Solution &solution, int precision);
std::string similarity_csv(const DecisionProblem &problem, const Solution &solution, int precision);
std::string ranking_txt(const Solution &solution);
/// Full-precision machine-readable result document.
std::string solution_json(const DecisionProblem &problem, const Solution &solution);

/// File names written by write_solution, in order.
const std::vector<std::string> &solution_files();

/// Writes every table plus result.json into out_dir (created if missing).
void write_solution(const std::filesystem::path &out_dir, const DecisionProblem &problem, const Solution &solution,
                    int precision);

/// Grid of complexity_estimate over k in [2,max_k], n in [2,max_n], m in [1,max_m]: k,n,m,count
std::string complexity_sweep_csv(std::uint64_t max_k, std::uint64_t max_n, std::uint64_t max_m, bool p_type);

}  // namespace cpfuzzy::io
