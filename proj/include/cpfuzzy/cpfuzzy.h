/*
 * C interface to the circular Pythagorean fuzzy decision library.
 *
 * Every fallible call returns a cpf_status. On failure a description is
 * available from cpf_last_error() on the calling thread until the next call
 * on that thread. Strings returned through char** are owned by the caller and
 * released with cpf_string_free(). Handles are released with their *_free().
 */
#ifndef CPFUZZY_H
#define CPFUZZY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CPF_API __declspec(dllexport)
#else
#define CPF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cpf_status {
  CPF_OK = 0,
  CPF_ERR_OUT_OF_RANGE = 1,
  CPF_ERR_CONSTRAINT_VIOLATION = 2,
  CPF_ERR_RADIUS_OUT_OF_RANGE = 3,
  CPF_ERR_UNIVERSE_MISMATCH = 4,
  CPF_ERR_DUPLICATE_LABEL = 5,
  CPF_ERR_NON_POSITIVE_SCALAR = 6,
  CPF_ERR_EMPTY_INPUT = 7,
  CPF_ERR_LENGTH_MISMATCH = 8,
  CPF_ERR_INVALID_WEIGHTS = 9,
  CPF_ERR_DIMENSION_MISMATCH = 10,
  CPF_ERR_DEGENERATE_CENTER = 11,
  CPF_ERR_UNKNOWN_OPERATOR = 12,
  CPF_ERR_DOMAIN = 13,
  CPF_ERR_PARSE = 14,
  CPF_ERR_IO = 15,
  CPF_ERR_INVALID_ARGUMENT = 16,
  CPF_ERR_INTERNAL = 17
} cpf_status;

/* <mu, nu; r> */
typedef struct cpf_value {
  double mu;
  double nu;
  double r;
} cpf_value;

typedef struct cpf_problem cpf_problem;
typedef struct cpf_solution cpf_solution;

CPF_API const char *cpf_version(void);
CPF_API const char *cpf_status_name(cpf_status status);
CPF_API const char *cpf_last_error(void);
CPF_API void cpf_string_free(char *s);

/* Values. radius_generator is "algebraic_q" or "algebraic_p"; NULL means "algebraic_q". */
CPF_API cpf_status cpf_value_make(double mu, double nu, double r, cpf_value *out);
CPF_API cpf_status cpf_add(const cpf_value *a, const cpf_value *b, const char *radius_generator, cpf_value *out);
CPF_API cpf_status cpf_multiply(const cpf_value *a, const cpf_value *b, const char *radius_generator,
                                cpf_value *out);
CPF_API cpf_status cpf_scalar_multiple(double lambda, const cpf_value *a, const char *radius_generator,
                                       cpf_value *out);
CPF_API cpf_status cpf_power(const cpf_value *a, double lambda, const char *radius_generator, cpf_value *out);
/* operator_id: "cpwa_q", "cpwa_p", "cpwg_q", "cpwg_p" */
CPF_API cpf_status cpf_aggregate(const char *operator_id, const cpf_value *values, const double *weights, size_t n,
                                 cpf_value *out);
CPF_API cpf_status cpf_fuse(const double *mu, const double *nu, size_t k, cpf_value *out);
CPF_API cpf_status cpf_csm(const cpf_value *a, const cpf_value *b, double *out);
CPF_API cpf_status cpf_complexity(uint64_t k, uint64_t n, uint64_t m, const char *operator_id, uint64_t *out);
/* k in [2,max_k], n in [2,max_n], m in [1,max_m] as "k,n,m,count" CSV */
CPF_API cpf_status cpf_complexity_sweep_csv(uint64_t max_k, uint64_t max_n, uint64_t max_m,
                                            const char *operator_id, char **out);

/* Decision problems (JSON documents). */
CPF_API cpf_status cpf_problem_parse(const char *json_text, cpf_problem **out);
CPF_API cpf_status cpf_problem_load(const char *path, cpf_problem **out);
CPF_API void cpf_problem_free(cpf_problem *problem);
CPF_API cpf_status cpf_problem_to_json(const cpf_problem *problem, char **out);
CPF_API size_t cpf_problem_alternative_count(const cpf_problem *problem);
CPF_API size_t cpf_problem_criterion_count(const cpf_problem *problem);
CPF_API size_t cpf_problem_expert_count(const cpf_problem *problem);
/* Writes the cost-criterion-swapped problem to *out. */
CPF_API cpf_status cpf_problem_normalize(const cpf_problem *problem, cpf_problem **out);

/* Solve configuration document (operator, radius_generator, precision). */
CPF_API cpf_status cpf_config_load(const char *path, char **operator_id_out, int *precision_out);

CPF_API cpf_status cpf_solve(const cpf_problem *problem, const char *operator_id, cpf_solution **out);
CPF_API void cpf_solution_free(cpf_solution *solution);
/* Worst to best, e.g. "A1 < A4 < A3 < A2 < A5". */
CPF_API cpf_status cpf_solution_ranking(const cpf_solution *solution, char **out);
CPF_API cpf_status cpf_solution_best(const cpf_solution *solution, char **out);
CPF_API cpf_status cpf_solution_score(const cpf_solution *solution, size_t alternative, double *out);
CPF_API cpf_status cpf_solution_aggregated(const cpf_solution *solution, size_t alternative, cpf_value *out);
CPF_API cpf_status cpf_solution_cell(const cpf_solution *solution, size_t alternative, size_t criterion,
                                     cpf_value *out);
CPF_API cpf_status cpf_solution_to_json(const cpf_solution *solution, char **out);
/* Writes the CSV tables, ranking.txt and result.json into out_dir. */
CPF_API cpf_status cpf_solution_write(const cpf_solution *solution, const char *out_dir, int precision);

/* Reads a PFV collections document and returns "element,mu,nu,r" CSV. */
CPF_API cpf_status cpf_fuse_collections_file(const char *path, int precision, char **csv_out);

#ifdef __cplusplus
}
#endif

#endif /* CPFUZZY_H */
