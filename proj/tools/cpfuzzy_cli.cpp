// cpfuzzy: command-line front end over the C API.
//
//   cpfuzzy solve --input problem.json [--config cfg.json] [--operator cpwa_q] [--precision 2] [--out-dir DIR]
//   cpfuzzy fuse --input collections.json [--precision 2]
//   cpfuzzy complexity -k 5 -n 5 -m 3 [--operator q|p|cpwa_q|...] [--sweep]
//   cpfuzzy validate --input problem.json

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cpfuzzy/cpfuzzy.h"

namespace {

struct ProblemDeleter {
  void operator()(cpf_problem *p) const { cpf_problem_free(p); }
};
struct SolutionDeleter {
  void operator()(cpf_solution *s) const { cpf_solution_free(s); }
};
struct StringDeleter {
  void operator()(char *s) const { cpf_string_free(s); }
};
using ProblemPtr = std::unique_ptr<cpf_problem, ProblemDeleter>;
using SolutionPtr = std::unique_ptr<cpf_solution, SolutionDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

int report(cpf_status status) {
  std::cerr << "error [" << cpf_status_name(status) << "]: " << cpf_last_error() << "\n";
  return 1;
}

// "q" / "p" are shorthands accepted by the complexity command.
std::string operator_id(const std::string &name) {
  if (name == "q") return "cpwa_q";
  if (name == "p") return "cpwa_p";
  return name;
}

ProblemPtr load(const std::string &path, cpf_status &status) {
  cpf_problem *raw = nullptr;
  status = cpf_problem_load(path.c_str(), &raw);
  return ProblemPtr(raw);
}

int run_solve(const std::string &input, const std::string &config, std::optional<std::string> op,
              std::optional<int> precision, const std::string &out_dir) {
  std::string op_id = "cpwa_q";
  int digits = 2;
  if (!config.empty()) {
    char *cfg_op = nullptr;
    if (auto st = cpf_config_load(config.c_str(), &cfg_op, &digits); st != CPF_OK) return report(st);
    op_id = CString(cfg_op).get();
  }
  if (op) op_id = *op;
  if (precision) digits = *precision;

  cpf_status st = CPF_OK;
  ProblemPtr problem = load(input, st);
  if (st != CPF_OK) return report(st);

  cpf_solution *raw = nullptr;
  if (st = cpf_solve(problem.get(), op_id.c_str(), &raw); st != CPF_OK) return report(st);
  SolutionPtr solution(raw);

  if (!out_dir.empty()) {
    if (st = cpf_solution_write(solution.get(), out_dir.c_str(), digits); st != CPF_OK) return report(st);
  }

  char *ranking = nullptr;
  char *best = nullptr;
  if (st = cpf_solution_ranking(solution.get(), &ranking); st != CPF_OK) return report(st);
  CString ranking_owner(ranking);
  if (st = cpf_solution_best(solution.get(), &best); st != CPF_OK) return report(st);
  CString best_owner(best);

  std::cout << "operator: " << op_id << "\n";
  std::cout << "ranking: " << ranking << "\n";
  std::cout << "best: " << best << "\n";
  return 0;
}

int run_fuse(const std::string &input, int precision) {
  char *csv = nullptr;
  if (auto st = cpf_fuse_collections_file(input.c_str(), precision, &csv); st != CPF_OK) return report(st);
  CString owner(csv);
  std::cout << csv;
  return 0;
}

int run_complexity(std::uint64_t k, std::uint64_t n, std::uint64_t m, const std::string &op, bool sweep,
                   std::uint64_t max_k, std::uint64_t max_n, std::uint64_t max_m) {
  const std::string id = operator_id(op);
  if (sweep) {
    char *csv = nullptr;
    if (auto st = cpf_complexity_sweep_csv(max_k, max_n, max_m, id.c_str(), &csv); st != CPF_OK) return report(st);
    CString owner(csv);
    std::cout << csv;
    return 0;
  }
  std::uint64_t count = 0;
  if (auto st = cpf_complexity(k, n, m, id.c_str(), &count); st != CPF_OK) return report(st);
  std::cout << count << "\n";
  return 0;
}

int run_validate(const std::string &input) {
  cpf_status st = CPF_OK;
  ProblemPtr problem = load(input, st);
  if (st != CPF_OK) return report(st);
  std::cout << "ok: " << cpf_problem_expert_count(problem.get()) << " experts, "
            << cpf_problem_alternative_count(problem.get()) << " alternatives, "
            << cpf_problem_criterion_count(problem.get()) << " criteria\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Circular Pythagorean fuzzy multi-criteria decision making"};
  app.set_version_flag("--version", std::string(cpf_version()));
  app.require_subcommand(1);

  std::string input;
  std::string config;
  std::string out_dir;
  std::optional<std::string> op;
  std::optional<int> precision;

  auto *solve = app.add_subcommand("solve", "Rank alternatives and emit every intermediate table");
  solve->add_option("--input", input, "Decision problem JSON")->required()->check(CLI::ExistingFile);
  solve->add_option("--config", config, "Solve configuration JSON")->check(CLI::ExistingFile);
  solve->add_option("--operator", op, "cpwa_q, cpwa_p, cpwg_q or cpwg_p (overrides config)");
  solve->add_option("--precision", precision, "Decimals in CSV tables (overrides config)")
      ->check(CLI::Range(0, 17));
  solve->add_option("--out-dir", out_dir, "Directory for CSV tables and result.json");

  int fuse_precision = 2;
  auto *fuse = app.add_subcommand("fuse", "Fuse PFV collections into circular values");
  fuse->add_option("--input", input, "Collections JSON")->required()->check(CLI::ExistingFile);
  fuse->add_option("--precision", fuse_precision, "Decimals in output")->check(CLI::Range(0, 17));

  std::uint64_t k = 0, n = 0, m = 0;
  std::uint64_t max_k = 10, max_n = 10, max_m = 3;
  std::string complexity_op = "q";
  bool sweep = false;
  auto *complexity = app.add_subcommand("complexity", "Operation-count estimate of the method");
  complexity->add_option("-k,--criteria", k, "Number of criteria");
  complexity->add_option("-n,--alternatives", n, "Number of alternatives");
  complexity->add_option("-m,--experts", m, "Number of experts");
  complexity->add_option("--operator", complexity_op, "q, p or a full operator id");
  complexity->add_flag("--sweep", sweep, "Print a k,n,m,count grid instead of a single count");
  complexity->add_option("--max-k", max_k, "Sweep upper bound for k");
  complexity->add_option("--max-n", max_n, "Sweep upper bound for n");
  complexity->add_option("--max-m", max_m, "Sweep upper bound for m");

  auto *validate = app.add_subcommand("validate", "Parse and validate a decision problem");
  validate->add_option("--input", input, "Decision problem JSON")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  if (*solve) return run_solve(input, config, op, precision, out_dir);
  if (*fuse) return run_fuse(input, fuse_precision);
  if (*complexity) {
    if (!sweep && !(complexity->count("-k") && complexity->count("-n") && complexity->count("-m"))) {
      std::cerr << "error: -k, -n and -m are required unless --sweep is given\n";
      return 2;
    }
    return run_complexity(k, n, m, complexity_op, sweep, max_k, max_n, max_m);
  }
  if (*validate) return run_validate(input);
  return 2;
}
