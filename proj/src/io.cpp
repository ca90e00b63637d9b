#include "cpfuzzy/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cpfuzzy/errors.hpp"
#include "cpfuzzy/fusion.hpp"

namespace cpfuzzy::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open file", path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write file", path.string());
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "write failed", path.string());
}

std::string join(std::string_view source, const std::string &where) {
  if (where.empty()) return std::string(source);
  return std::string(source) + ": " + where;
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError, e.what(),
                std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col));
  }
}

// Runs `fn`, rewriting any library Error so its location names `path`
// within the document `source`.
template <typename Fn>
auto at(std::string_view source, const std::string &path, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error &e) {
    const std::string inner = e.where().empty() ? path : e.where();
    std::string message = e.what();
    if (!e.where().empty()) message = message.substr(e.where().size() + 2);
    throw Error(e.code(), message, join(source, inner));
  } catch (const json::exception &e) {
    throw Error(ErrorCode::ParseError, e.what(), join(source, path));
  }
}

const json &field(const json &doc, const char *name, std::string_view source) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "document must be a JSON object", std::string(source));
  auto it = doc.find(name);
  if (it == doc.end()) throw Error(ErrorCode::ParseError, "missing required field", join(source, name));
  return *it;
}

const json &array_at(const json &value, std::string_view source, const std::string &path) {
  if (!value.is_array()) throw Error(ErrorCode::ParseError, "expected an array", join(source, path));
  return value;
}

std::vector<std::string> string_list(const json &value, std::string_view source, const std::string &path) {
  std::vector<std::string> out;
  const json &arr = array_at(value, source, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) {
      throw Error(ErrorCode::ParseError, "expected a string", join(source, path + "[" + std::to_string(i) + "]"));
    }
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

double number_at(const json &value, std::string_view source, const std::string &path) {
  if (!value.is_number()) throw Error(ErrorCode::ParseError, "expected a number", join(source, path));
  return value.get<double>();
}

PFV pfv_at(const json &value, std::string_view source, const std::string &path) {
  if (!value.is_array() || value.size() != 2) {
    throw Error(ErrorCode::ParseError, "expected a [mu, nu] pair", join(source, path));
  }
  const double mu = number_at(value[0], source, path + "[0]");
  const double nu = number_at(value[1], source, path + "[1]");
  return at(source, path, [&] { return PFV{mu, nu}; });
}

std::string idx(const std::string &base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

std::string csv_escape(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json cpfv_json(const CPFV &v) { return ordered_json{{"mu", v.mu()}, {"nu", v.nu()}, {"r", v.r()}}; }

}  // namespace

std::string format_fixed(double x, int precision) {
  if (precision < 0) throw Error(ErrorCode::DomainError, "precision must be non-negative");
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");

  char buf[512];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed);
  std::string s(buf, res.ptr);
  const bool negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(0, 1);

  const auto dot = s.find('.');
  std::string digits = dot == std::string::npos ? s : s.substr(0, dot) + s.substr(dot + 1);
  const std::size_t int_len = dot == std::string::npos ? s.size() : dot;
  std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);

  const auto keep = int_len + static_cast<std::size_t>(precision);
  if (frac.size() <= static_cast<std::size_t>(precision)) {
    digits.append(static_cast<std::size_t>(precision) - frac.size(), '0');
  } else {
    const bool round_up = digits[keep] >= '5';
    digits.resize(keep);
    if (round_up) {
      auto i = static_cast<std::ptrdiff_t>(digits.size()) - 1;
      while (i >= 0 && digits[static_cast<std::size_t>(i)] == '9') digits[static_cast<std::size_t>(i--)] = '0';
      if (i >= 0) {
        ++digits[static_cast<std::size_t>(i)];
      } else {
        digits.insert(digits.begin(), '1');
      }
    }
  }

  const std::size_t new_int_len = digits.size() - static_cast<std::size_t>(precision);
  std::string out = digits.substr(0, new_int_len);
  if (out.empty()) out = "0";
  if (precision > 0) out += "." + digits.substr(new_int_len);
  if (negative && out.find_first_not_of("0.") != std::string::npos) out.insert(0, "-");
  return out;
}

DecisionProblem parse_problem(std::string_view text, std::string_view source) {
  const json doc = parse_json(text, source);

  auto alternatives = string_list(field(doc, "alternatives", source), source, "alternatives");
  auto criteria = string_list(field(doc, "criteria", source), source, "criteria");

  std::vector<Polarity> polarity;
  const auto polarity_names = string_list(field(doc, "polarity", source), source, "polarity");
  for (std::size_t j = 0; j < polarity_names.size(); ++j) {
    polarity.push_back(at(source, idx("polarity", j), [&] { return parse_polarity(polarity_names[j]); }));
  }

  std::vector<double> weight_values;
  const json &weights_json = array_at(field(doc, "weights", source), source, "weights");
  for (std::size_t j = 0; j < weights_json.size(); ++j) {
    weight_values.push_back(number_at(weights_json[j], source, idx("weights", j)));
  }
  WeightVector weights = at(source, "weights", [&] { return WeightVector(std::move(weight_values)); });

  std::vector<Matrix<PFV>> experts;
  const json &experts_json = array_at(field(doc, "experts", source), source, "experts");
  for (std::size_t e = 0; e < experts_json.size(); ++e) {
    const std::string epath = idx("experts", e);
    const json &rows = array_at(experts_json[e], source, epath);
    if (rows.size() != alternatives.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  std::to_string(rows.size()) + " rows for " + std::to_string(alternatives.size()) + " alternatives",
                  join(source, epath));
    }
    Matrix<PFV> m(alternatives.size(), criteria.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string rpath = idx(epath, i);
      const json &cells = array_at(rows[i], source, rpath);
      if (cells.size() != criteria.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(cells.size()) + " cells for " + std::to_string(criteria.size()) + " criteria",
                    join(source, rpath));
      }
      for (std::size_t j = 0; j < cells.size(); ++j) {
        m(i, j) = pfv_at(cells[j], source, idx(rpath, j) + " (" + alternatives[i] + "/" + criteria[j] + ")");
      }
    }
    experts.push_back(std::move(m));
  }

  return at(source, "", [&] {
    return DecisionProblem(std::move(alternatives), std::move(criteria), std::move(polarity), std::move(weights),
                           std::move(experts));
  });
}

DecisionProblem load_problem(const std::filesystem::path &path) {
  return parse_problem(read_file(path), path.string());
}

std::string problem_to_json(const DecisionProblem &problem) {
  ordered_json doc;
  doc["alternatives"] = problem.alternatives();
  doc["criteria"] = problem.criteria();
  ordered_json pol = ordered_json::array();
  for (Polarity p : problem.polarity()) pol.push_back(std::string(to_string(p)));
  doc["polarity"] = pol;
  doc["weights"] = std::vector<double>(problem.weights().values().begin(), problem.weights().values().end());
  ordered_json experts = ordered_json::array();
  for (const auto &m : problem.experts()) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      ordered_json cells = ordered_json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) cells.push_back({m(i, j).mu(), m(i, j).nu()});
      rows.push_back(cells);
    }
    experts.push_back(rows);
  }
  doc["experts"] = experts;
  return doc.dump(2) + "\n";
}

SolveConfig parse_config(std::string_view text, std::string_view source) {
  const json doc = parse_json(text, source);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object", std::string(source));

  SolveConfig cfg;
  std::string op_name = "cpwa_q";
  if (auto it = doc.find("operator"); it != doc.end()) {
    if (!it->is_string()) throw Error(ErrorCode::ParseError, "expected a string", join(source, "operator"));
    op_name = it->get<std::string>();
  }
  std::string radius;
  if (auto it = doc.find("radius_generator"); it != doc.end()) {
    if (!it->is_string()) throw Error(ErrorCode::ParseError, "expected a string", join(source, "radius_generator"));
    radius = it->get<std::string>();
    at(source, "radius_generator", [&] { return radius_generator(radius); });
  }
  if (auto it = doc.find("generator"); it != doc.end()) {
    if (!it->is_string() || it->get<std::string>() != "algebraic") {
      throw Error(ErrorCode::UnknownOperator, "only the \"algebraic\" generator family is available",
                  join(source, "generator"));
    }
  }

  if (op_name == "cpwa" || op_name == "cpwg") {
    const std::string suffix = radius == "algebraic_p" ? "_p" : "_q";
    cfg.op = parse_operator(op_name + suffix);
  } else {
    cfg.op = at(source, "operator", [&] { return parse_operator(op_name); });
    if (!radius.empty() && radius != radius_generator_id(cfg.op)) {
      throw Error(ErrorCode::ParseError,
                  "radius generator '" + radius + "' contradicts operator '" + op_name + "'",
                  join(source, "radius_generator"));
    }
  }

  if (auto it = doc.find("precision"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int>() < 0 || it->get<int>() > 17) {
      throw Error(ErrorCode::ParseError, "precision must be an integer in [0, 17]", join(source, "precision"));
    }
    cfg.precision = it->get<int>();
  }
  return cfg;
}

SolveConfig load_config(const std::filesystem::path &path) { return parse_config(read_file(path), path.string()); }

std::vector<Collection> parse_collections(std::string_view text, std::string_view source) {
  const json doc = parse_json(text, source);
  const bool bare = doc.is_array();
  const json &items = bare ? doc : array_at(field(doc, "collections", source), source, "collections");
  const std::string base = bare ? "" : "collections";

  std::vector<Collection> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string path = idx(base, i);
    std::string label = "x" + std::to_string(i + 1);
    const json *values = &items[i];
    if (items[i].is_object()) {
      if (auto it = items[i].find("label"); it != items[i].end()) {
        if (!it->is_string()) throw Error(ErrorCode::ParseError, "expected a string", join(source, path + ".label"));
        label = it->get<std::string>();
      }
      auto it = items[i].find("values");
      if (it == items[i].end()) throw Error(ErrorCode::ParseError, "missing required field", join(source, path + ".values"));
      values = &*it;
    }
    const std::string vpath = items[i].is_object() ? path + ".values" : path;
    const json &arr = array_at(*values, source, vpath);
    if (arr.empty()) throw Error(ErrorCode::EmptyInput, "collection '" + label + "' is empty", join(source, vpath));
    std::vector<PFV> pfvs;
    for (std::size_t j = 0; j < arr.size(); ++j) pfvs.push_back(pfv_at(arr[j], source, idx(vpath, j)));
    out.emplace_back(std::move(label), std::move(pfvs));
  }
  return out;
}

std::vector<Collection> load_collections(const std::filesystem::path &path) {
  return parse_collections(read_file(path), path.string());
}

std::string fused_csv(const std::vector<Collection> &collections, int precision) {
  std::string out = "element,mu,nu,r\n";
  for (const auto &[label, values] : collections) {
    const CPFV v = fuse(values);
    out += csv_escape(label) + "," + format_fixed(v.mu(), precision) + "," + format_fixed(v.nu(), precision) + "," +
           format_fixed(v.r(), precision) + "\n";
  }
  return out;
}

std::string normalized_csv(const DecisionProblem &normalized, int precision) {
  std::string out = "expert,alternative,criterion,mu,nu\n";
  for (std::size_t e = 0; e < normalized.expert_count(); ++e) {
    const auto &m = normalized.experts()[e];
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out += "E" + std::to_string(e + 1) + "," + csv_escape(normalized.alternatives()[i]) + "," +
               csv_escape(normalized.criteria()[j]) + "," + format_fixed(m(i, j).mu(), precision) + "," +
               format_fixed(m(i, j).nu(), precision) + "\n";
      }
    }
  }
  return out;
}

namespace {

template <typename Cell>
std::string cell_table(const DecisionProblem &problem, const Matrix<CPFV> &circular, const std::string &header,
                       Cell cell) {
  std::string out = "alternative,criterion," + header + "\n";
  for (std::size_t i = 0; i < circular.rows(); ++i) {
    for (std::size_t j = 0; j < circular.cols(); ++j) {
      out += csv_escape(problem.alternatives()[i]) + "," + csv_escape(problem.criteria()[j]) + "," +
             cell(circular(i, j)) + "\n";
    }
  }
  return out;
}

}  // namespace

std::string centers_csv(const DecisionProblem &problem, const Matrix<CPFV> &circular, int precision) {
  return cell_table(problem, circular, "mu,nu", [&](const CPFV &v) {
    return format_fixed(v.mu(), precision) + "," + format_fixed(v.nu(), precision);
  });
}

std::string radii_csv(const DecisionProblem &problem, const Matrix<CPFV> &circular, int precision) {
  return cell_table(problem, circular, "r", [&](const CPFV &v) { return format_fixed(v.r(), precision); });
}

std::string circular_csv(const DecisionProblem &problem, const Matrix<CPFV> &circular, int precision) {
  return cell_table(problem, circular, "mu,nu,r", [&](const CPFV &v) {
    return format_fixed(v.mu(), precision) + "," + format_fixed(v.nu(), precision) + "," +
           format_fixed(v.r(), precision);
  });
}

std::string aggregated_csv(const DecisionProblem &problem, const Solution &solution, int precision) {
  std::string out = "alternative,operator,mu,nu,r\n";
  for (std::size_t i = 0; i < solution.aggregated.size(); ++i) {
    const CPFV &v = solution.aggregated[i];
    out += csv_escape(problem.alternatives()[i]) + "," + solution.operator_name + "," +
           format_fixed(v.mu(), precision) + "," + format_fixed(v.nu(), precision) + "," +
           format_fixed(v.r(), precision) + "\n";
  }
  return out;
}

std::string similarity_csv(const DecisionProblem &problem, const Solution &solution, int precision) {
  std::string out = "alternative,operator,csm\n";
  for (std::size_t i = 0; i < solution.scores.size(); ++i) {
    out += csv_escape(problem.alternatives()[i]) + "," + solution.operator_name + "," +
           format_fixed(solution.scores[i], precision) + "\n";
  }
  return out;
}

std::string ranking_txt(const Solution &solution) {
  std::string out = solution.ranking.ascending() + "\n";
  out += "best: " + solution.ranking.best().label + "\n";
  if (solution.ranking.has_ties()) out += "ties: yes\n";
  return out;
}

std::string solution_json(const DecisionProblem &problem, const Solution &solution) {
  ordered_json doc;
  doc["operator"] = solution.operator_name;
  doc["alternatives"] = problem.alternatives();
  doc["criteria"] = problem.criteria();

  ordered_json circular = ordered_json::array();
  for (std::size_t i = 0; i < solution.circular.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < solution.circular.cols(); ++j) row.push_back(cpfv_json(solution.circular(i, j)));
    circular.push_back(row);
  }
  doc["circular_matrix"] = circular;

  ordered_json aggregated = ordered_json::array();
  for (const CPFV &v : solution.aggregated) aggregated.push_back(cpfv_json(v));
  doc["aggregated"] = aggregated;
  doc["scores"] = solution.scores;

  ordered_json ranking = ordered_json::array();
  for (const auto &e : solution.ranking.entries()) {
    ranking.push_back(ordered_json{{"alternative", e.label}, {"score", e.score}, {"tied", e.tied}});
  }
  doc["ranking"] = ranking;
  doc["ranking_string"] = solution.ranking.ascending();
  doc["best"] = solution.ranking.best().label;
  return doc.dump(2) + "\n";
}

const std::vector<std::string> &solution_files() {
  static const std::vector<std::string> files = {"normalized.csv", "centers.csv",    "radii.csv",   "circular.csv",
                                                 "aggregated.csv", "similarity.csv", "ranking.txt", "result.json"};
  return files;
}

void write_solution(const std::filesystem::path &out_dir, const DecisionProblem &problem, const Solution &solution,
                    int precision) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::IoError, ec.message(), out_dir.string());

  write_file(out_dir / "normalized.csv", normalized_csv(solution.normalized, precision));
  write_file(out_dir / "centers.csv", centers_csv(problem, solution.circular, precision));
  write_file(out_dir / "radii.csv", radii_csv(problem, solution.circular, precision));
  write_file(out_dir / "circular.csv", circular_csv(problem, solution.circular, precision));
  write_file(out_dir / "aggregated.csv", aggregated_csv(problem, solution, precision));
  write_file(out_dir / "similarity.csv", similarity_csv(problem, solution, precision));
  write_file(out_dir / "ranking.txt", ranking_txt(solution));
  write_file(out_dir / "result.json", solution_json(problem, solution));
}

std::string complexity_sweep_csv(std::uint64_t max_k, std::uint64_t max_n, std::uint64_t max_m, bool p_type) {
  std::string out = "k,n,m,count\n";
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    for (std::uint64_t k = 2; k <= max_k; ++k) {
      for (std::uint64_t n = 2; n <= max_n; ++n) {
        out += std::to_string(k) + "," + std::to_string(n) + "," + std::to_string(m) + "," +
               std::to_string(complexity_estimate(k, n, m, p_type)) + "\n";
      }
    }
  }
  return out;
}

}  // namespace cpfuzzy::io
