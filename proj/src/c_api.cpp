#include "cpfuzzy/cpfuzzy.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "cpfuzzy/aggregation.hpp"
#include "cpfuzzy/algebra.hpp"
#include "cpfuzzy/errors.hpp"
#include "cpfuzzy/fusion.hpp"
#include "cpfuzzy/io.hpp"
#include "cpfuzzy/mcdm.hpp"
#include "cpfuzzy/similarity.hpp"

struct cpf_problem {
  cpfuzzy::DecisionProblem problem;
};

struct cpf_solution {
  cpfuzzy::DecisionProblem problem;
  cpfuzzy::Solution solution;
};

using namespace cpfuzzy;

namespace {

thread_local std::string last_error;

cpf_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return CPF_ERR_OUT_OF_RANGE;
    case ErrorCode::ConstraintViolation: return CPF_ERR_CONSTRAINT_VIOLATION;
    case ErrorCode::RadiusOutOfRange: return CPF_ERR_RADIUS_OUT_OF_RANGE;
    case ErrorCode::UniverseMismatch: return CPF_ERR_UNIVERSE_MISMATCH;
    case ErrorCode::DuplicateLabel: return CPF_ERR_DUPLICATE_LABEL;
    case ErrorCode::NonPositiveScalar: return CPF_ERR_NON_POSITIVE_SCALAR;
    case ErrorCode::EmptyInput: return CPF_ERR_EMPTY_INPUT;
    case ErrorCode::LengthMismatch: return CPF_ERR_LENGTH_MISMATCH;
    case ErrorCode::InvalidWeights: return CPF_ERR_INVALID_WEIGHTS;
    case ErrorCode::DimensionMismatch: return CPF_ERR_DIMENSION_MISMATCH;
    case ErrorCode::DegenerateCenter: return CPF_ERR_DEGENERATE_CENTER;
    case ErrorCode::UnknownOperator: return CPF_ERR_UNKNOWN_OPERATOR;
    case ErrorCode::DomainError: return CPF_ERR_DOMAIN;
    case ErrorCode::ParseError: return CPF_ERR_PARSE;
    case ErrorCode::IoError: return CPF_ERR_IO;
  }
  return CPF_ERR_INTERNAL;
}

cpf_status fail(cpf_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Translates exceptions into status codes at the C boundary.
template <typename Fn>
cpf_status guarded(Fn fn) {
  try {
    last_error.clear();
    fn();
    return CPF_OK;
  } catch (const Error &e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(CPF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(CPF_ERR_INTERNAL, e.what());
  }
}

#define CPF_REQUIRE(cond, what) \
  if (!(cond)) return fail(CPF_ERR_INVALID_ARGUMENT, what)

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

CPFV to_cpfv(const cpf_value &v) { return CPFV{v.mu, v.nu, v.r}; }

cpf_value to_c(const CPFV &v) { return cpf_value{v.mu(), v.nu(), v.r()}; }

GeneratorPair pair_for(const char *radius_generator) {
  return algebraic_pair(radius_generator == nullptr ? "algebraic_q" : radius_generator);
}

}  // namespace

extern "C" {

const char *cpf_version(void) { return "1.0.0"; }

const char *cpf_status_name(cpf_status status) {
  switch (status) {
    case CPF_OK: return "OK";
    case CPF_ERR_OUT_OF_RANGE: return "OutOfRange";
    case CPF_ERR_CONSTRAINT_VIOLATION: return "ConstraintViolation";
    case CPF_ERR_RADIUS_OUT_OF_RANGE: return "RadiusOutOfRange";
    case CPF_ERR_UNIVERSE_MISMATCH: return "UniverseMismatch";
    case CPF_ERR_DUPLICATE_LABEL: return "DuplicateLabel";
    case CPF_ERR_NON_POSITIVE_SCALAR: return "NonPositiveScalar";
    case CPF_ERR_EMPTY_INPUT: return "EmptyInput";
    case CPF_ERR_LENGTH_MISMATCH: return "LengthMismatch";
    case CPF_ERR_INVALID_WEIGHTS: return "InvalidWeights";
    case CPF_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case CPF_ERR_DEGENERATE_CENTER: return "DegenerateCenter";
    case CPF_ERR_UNKNOWN_OPERATOR: return "UnknownOperator";
    case CPF_ERR_DOMAIN: return "DomainError";
    case CPF_ERR_PARSE: return "ParseError";
    case CPF_ERR_IO: return "IoError";
    case CPF_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case CPF_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char *cpf_last_error(void) { return last_error.c_str(); }

void cpf_string_free(char *s) { std::free(s); }

cpf_status cpf_value_make(double mu, double nu, double r, cpf_value *out) {
  CPF_REQUIRE(out, "out is null");
  return guarded([&] { *out = to_c(CPFV{mu, nu, r}); });
}

cpf_status cpf_add(const cpf_value *a, const cpf_value *b, const char *radius_generator, cpf_value *out) {
  CPF_REQUIRE(a && b && out, "null argument");
  return guarded([&] { *out = to_c(add(to_cpfv(*a), to_cpfv(*b), pair_for(radius_generator))); });
}

cpf_status cpf_multiply(const cpf_value *a, const cpf_value *b, const char *radius_generator, cpf_value *out) {
  CPF_REQUIRE(a && b && out, "null argument");
  return guarded([&] { *out = to_c(multiply(to_cpfv(*a), to_cpfv(*b), pair_for(radius_generator))); });
}

cpf_status cpf_scalar_multiple(double lambda, const cpf_value *a, const char *radius_generator, cpf_value *out) {
  CPF_REQUIRE(a && out, "null argument");
  return guarded([&] { *out = to_c(scalar_multiple(lambda, to_cpfv(*a), pair_for(radius_generator))); });
}

cpf_status cpf_power(const cpf_value *a, double lambda, const char *radius_generator, cpf_value *out) {
  CPF_REQUIRE(a && out, "null argument");
  return guarded([&] { *out = to_c(power(to_cpfv(*a), lambda, pair_for(radius_generator))); });
}

cpf_status cpf_aggregate(const char *operator_id, const cpf_value *values, const double *weights, size_t n,
                         cpf_value *out) {
  CPF_REQUIRE(operator_id && out, "null argument");
  CPF_REQUIRE(n == 0 || (values && weights), "null values or weights");
  return guarded([&] {
    const AggregationOperator op = parse_operator(operator_id);
    std::vector<CPFV> vs;
    vs.reserve(n);
    for (size_t i = 0; i < n; ++i) vs.push_back(to_cpfv(values[i]));
    const WeightVector w(std::vector<double>(weights, weights + n));
    *out = to_c(aggregate(op, vs, w));
  });
}

cpf_status cpf_fuse(const double *mu, const double *nu, size_t k, cpf_value *out) {
  CPF_REQUIRE(out, "out is null");
  CPF_REQUIRE(k == 0 || (mu && nu), "null mu or nu");
  return guarded([&] {
    std::vector<PFV> pfvs;
    pfvs.reserve(k);
    for (size_t i = 0; i < k; ++i) pfvs.emplace_back(mu[i], nu[i]);
    *out = to_c(fuse(pfvs));
  });
}

cpf_status cpf_csm(const cpf_value *a, const cpf_value *b, double *out) {
  CPF_REQUIRE(a && b && out, "null argument");
  return guarded([&] { *out = csm(to_cpfv(*a), to_cpfv(*b)); });
}

cpf_status cpf_complexity(uint64_t k, uint64_t n, uint64_t m, const char *operator_id, uint64_t *out) {
  CPF_REQUIRE(operator_id && out, "null argument");
  return guarded([&] { *out = complexity_estimate(k, n, m, parse_operator(operator_id)); });
}

cpf_status cpf_complexity_sweep_csv(uint64_t max_k, uint64_t max_n, uint64_t max_m, const char *operator_id,
                                    char **out) {
  CPF_REQUIRE(operator_id && out, "null argument");
  return guarded([&] {
    const bool p = is_p_type(parse_operator(operator_id));
    *out = dup_string(io::complexity_sweep_csv(max_k, max_n, max_m, p));
  });
}

cpf_status cpf_problem_parse(const char *json_text, cpf_problem **out) {
  CPF_REQUIRE(json_text && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new cpf_problem{io::parse_problem(json_text)}; });
}

cpf_status cpf_problem_load(const char *path, cpf_problem **out) {
  CPF_REQUIRE(path && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new cpf_problem{io::load_problem(path)}; });
}

void cpf_problem_free(cpf_problem *problem) { delete problem; }

cpf_status cpf_problem_to_json(const cpf_problem *problem, char **out) {
  CPF_REQUIRE(problem && out, "null argument");
  return guarded([&] { *out = dup_string(io::problem_to_json(problem->problem)); });
}

size_t cpf_problem_alternative_count(const cpf_problem *problem) {
  return problem ? problem->problem.alternative_count() : 0;
}

size_t cpf_problem_criterion_count(const cpf_problem *problem) {
  return problem ? problem->problem.criterion_count() : 0;
}

size_t cpf_problem_expert_count(const cpf_problem *problem) { return problem ? problem->problem.expert_count() : 0; }

cpf_status cpf_problem_normalize(const cpf_problem *problem, cpf_problem **out) {
  CPF_REQUIRE(problem && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new cpf_problem{normalize(problem->problem)}; });
}

cpf_status cpf_config_load(const char *path, char **operator_id_out, int *precision_out) {
  CPF_REQUIRE(path && operator_id_out && precision_out, "null argument");
  return guarded([&] {
    const io::SolveConfig cfg = io::load_config(path);
    *operator_id_out = dup_string(std::string(to_string(cfg.op)));
    *precision_out = cfg.precision;
  });
}

cpf_status cpf_solve(const cpf_problem *problem, const char *operator_id, cpf_solution **out) {
  CPF_REQUIRE(problem && operator_id && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    const AggregationOperator op = parse_operator(operator_id);
    *out = new cpf_solution{problem->problem, solve(problem->problem, op)};
  });
}

void cpf_solution_free(cpf_solution *solution) { delete solution; }

cpf_status cpf_solution_ranking(const cpf_solution *solution, char **out) {
  CPF_REQUIRE(solution && out, "null argument");
  return guarded([&] { *out = dup_string(solution->solution.ranking.ascending()); });
}

cpf_status cpf_solution_best(const cpf_solution *solution, char **out) {
  CPF_REQUIRE(solution && out, "null argument");
  return guarded([&] { *out = dup_string(solution->solution.ranking.best().label); });
}

cpf_status cpf_solution_score(const cpf_solution *solution, size_t alternative, double *out) {
  CPF_REQUIRE(solution && out, "null argument");
  CPF_REQUIRE(alternative < solution->solution.scores.size(), "alternative index out of range");
  *out = solution->solution.scores[alternative];
  return CPF_OK;
}

cpf_status cpf_solution_aggregated(const cpf_solution *solution, size_t alternative, cpf_value *out) {
  CPF_REQUIRE(solution && out, "null argument");
  CPF_REQUIRE(alternative < solution->solution.aggregated.size(), "alternative index out of range");
  *out = to_c(solution->solution.aggregated[alternative]);
  return CPF_OK;
}

cpf_status cpf_solution_cell(const cpf_solution *solution, size_t alternative, size_t criterion, cpf_value *out) {
  CPF_REQUIRE(solution && out, "null argument");
  const auto &m = solution->solution.circular;
  CPF_REQUIRE(alternative < m.rows() && criterion < m.cols(), "cell index out of range");
  *out = to_c(m(alternative, criterion));
  return CPF_OK;
}

cpf_status cpf_solution_to_json(const cpf_solution *solution, char **out) {
  CPF_REQUIRE(solution && out, "null argument");
  return guarded([&] { *out = dup_string(io::solution_json(solution->problem, solution->solution)); });
}

cpf_status cpf_solution_write(const cpf_solution *solution, const char *out_dir, int precision) {
  CPF_REQUIRE(solution && out_dir, "null argument");
  return guarded([&] { io::write_solution(out_dir, solution->problem, solution->solution, precision); });
}

cpf_status cpf_fuse_collections_file(const char *path, int precision, char **csv_out) {
  CPF_REQUIRE(path && csv_out, "null argument");
  return guarded([&] { *csv_out = dup_string(io::fused_csv(io::load_collections(path), precision)); });
}

}  // extern "C"
