// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance            run all criteria
//   acceptance 3 5        run criteria 3 and 5
//
// Exit status is 0 only if every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "case_study_tables.hpp"
#include "cpfuzzy/aggregation.hpp"
#include "cpfuzzy/core_model.hpp"
#include "cpfuzzy/errors.hpp"
#include "cpfuzzy/fusion.hpp"
#include "cpfuzzy/io.hpp"
#include "cpfuzzy/mcdm.hpp"
#include "cpfuzzy/similarity.hpp"
#include "properties.hpp"

using namespace cpfuzzy;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;  // printed under a failing line

  void fail(std::string why) {
    pass = false;
    details.push_back(std::move(why));
  }
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(double x, int precision) { return io::format_fixed(x, precision); }

// Value as displayed in a table with `precision` decimals.
double shown(double x, int precision) { return std::stod(io::format_fixed(x, precision)); }

bool within(double got, double want, double tol) { return std::abs(got - want) <= tol + 1e-9; }

std::string cell(std::size_t i, std::size_t j) { return "A" + std::to_string(i + 1) + "/C" + std::to_string(j + 1); }

DecisionProblem case_study() { return io::load_problem(CPFUZZY_DATA_DIR "/case_study.json"); }

Matrix<CPFV> case_study_circular() {
  const DecisionProblem n = normalize(case_study());
  return build_circular_matrix(n.experts());
}

Result normalization() {
  Result r;
  const auto t0 = Clock::now();
  const DecisionProblem n = normalize(case_study());
  const double elapsed = ms_since(t0);
  std::size_t exact = 0;
  for (std::size_t e = 0; e < 3; ++e) {
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        const PFV &got = n.experts()[e](i, j);
        const auto &want = testdata::kNormalized[e][i][j];
        if (got.mu() == want.mu && got.nu() == want.nu) {
          ++exact;
        } else {
          r.fail("expert " + std::to_string(e + 1) + " " + cell(i, j) + ": <" + fmt(got.mu(), 2) + ", " +
                 fmt(got.nu(), 2) + ">");
        }
      }
    }
  }
  if (elapsed >= 1000.0) r.fail("took " + fmt(elapsed, 1) + " ms");
  r.summary = std::to_string(exact) + "/75 cells exact, " + fmt(elapsed, 2) + " ms";
  return r;
}

Result fusion_tables() {
  Result r;
  const Matrix<CPFV> c = case_study_circular();
  std::size_t ok = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const CPFV &v = c(i, j);
      const auto &center = testdata::kCenters[i][j];
      const double radius = testdata::kRadii[i][j];
      const bool good = within(shown(v.mu(), 2), center.mu, 0.01) && within(shown(v.nu(), 2), center.nu, 0.01) &&
                        within(shown(v.r(), 2), radius, 0.01);
      if (good) {
        ++ok;
      } else {
        r.fail(cell(i, j) + ": <" + fmt(v.mu(), 2) + ", " + fmt(v.nu(), 2) + "; " + fmt(v.r(), 2) + "> vs <" +
               fmt(center.mu, 2) + ", " + fmt(center.nu, 2) + "; " + fmt(radius, 2) + ">");
      }
    }
  }
  const CPFV &a11 = c(0, 0);
  if (fmt(a11.mu(), 2) != "0.45" || fmt(a11.nu(), 2) != "0.83" || fmt(a11.r(), 2) != "0.16") {
    r.fail("anchor A1/C1 is <" + fmt(a11.mu(), 2) + ", " + fmt(a11.nu(), 2) + "; " + fmt(a11.r(), 2) + ">");
  }
  if (fmt(c(2, 3).r(), 2) != "0.37") r.fail("anchor A3/C4 radius is " + fmt(c(2, 3).r(), 2));
  r.summary = std::to_string(ok) + "/25 cells within 0.01 (centers and radii), anchors A1/C1 <" + fmt(a11.mu(), 2) +
              ", " + fmt(a11.nu(), 2) + "; " + fmt(a11.r(), 2) + "> and A3/C4 r " + fmt(c(2, 3).r(), 2);
  return r;
}

Result aggregation_tables() {
  Result r;
  const DecisionProblem p = case_study();
  std::size_t ok = 0;
  double worst = 0.0;
  for (std::size_t o = 0; o < 4; ++o) {
    const Solution s = solve(p, parse_operator(testdata::kOperators[o]));
    for (std::size_t i = 0; i < 5; ++i) {
      const CPFV &v = s.aggregated[i];
      const auto &want = testdata::kAggregated[o][i];
      const double dev = std::max({std::abs(shown(v.mu(), 2) - want.mu), std::abs(shown(v.nu(), 2) - want.nu),
                                   std::abs(shown(v.r(), 2) - want.r)});
      worst = std::max(worst, dev);
      if (dev <= 0.02 + 1e-9) {
        ++ok;
      } else {
        r.fail(std::string(testdata::kOperators[o]) + " A" + std::to_string(i + 1) + ": <" + fmt(v.mu(), 2) + ", " +
               fmt(v.nu(), 2) + "; " + fmt(v.r(), 2) + ">");
      }
    }
  }
  const CPFV a2 = solve(p, AggregationOperator::CpwaQ).aggregated[1];
  const std::string anchor = "<" + fmt(a2.mu(), 2) + ", " + fmt(a2.nu(), 2) + "; " + fmt(a2.r(), 2) + ">";
  if (anchor != "<0.78, 0.32; 0.00>") r.fail("anchor cpwa_q A2 is " + anchor);
  r.summary = std::to_string(ok) + "/20 values within 0.02 (worst " + fmt(worst, 2) + "), anchor cpwa_q A2 " + anchor;
  return r;
}

Result similarity_tables() {
  Result r;
  const DecisionProblem p = case_study();
  std::size_t ok = 0;
  double a5 = 0.0;
  for (std::size_t o = 0; o < 4; ++o) {
    const Solution s = solve(p, parse_operator(testdata::kOperators[o]));
    if (o == 0) a5 = s.scores[4];
    for (std::size_t i = 0; i < 5; ++i) {
      const double got = shown(s.scores[i], 3);
      const double want = testdata::kSimilarity[o][i];
      if (within(got, want, 0.02)) {
        ++ok;
      } else {
        r.fail(std::string(testdata::kOperators[o]) + " A" + std::to_string(i + 1) + ": " + fmt(s.scores[i], 4) +
               " vs published " + fmt(want, 3) + " (off by " + fmt(std::abs(got - want), 3) + ")");
      }
    }
  }
  if (!within(shown(a5, 3), 0.555, 0.02)) r.fail("anchor cpwa_q A5 is " + fmt(a5, 4));
  r.summary = std::to_string(ok) + "/20 entries within 0.02, anchor cpwa_q A5 " + fmt(a5, 3) + " (published 0.555)";
  return r;
}

Result rankings() {
  Result r;
  const DecisionProblem p = case_study();
  std::size_t ok = 0;
  for (std::size_t o = 0; o < 4; ++o) {
    const Solution s = solve(p, parse_operator(testdata::kOperators[o]));
    const std::string got = s.ranking.ascending();
    if (got == testdata::kRankings[o]) {
      ++ok;
    } else {
      std::ostringstream os;
      os << testdata::kOperators[o] << ": \"" << got << "\" vs published \"" << testdata::kRankings[o]
         << "\"; scores";
      for (std::size_t i = 0; i < 5; ++i) os << " A" << i + 1 << "=" << fmt(s.scores[i], 4);
      r.fail(os.str());
    }
  }
  r.summary = std::to_string(ok) + "/4 rankings identical";
  return r;
}

Result examples() {
  Result r;
  const CPFS a = CPFS::uniform({{"x1", {0.3, 0.8}}, {"x2", {0.1, 0.9}}, {"x3", {0.5, 0.6}}}, 0.2);
  const CPFS b = CPFS::uniform({{"x1", {0.7, 0.5}}, {"x2", {0.2, 0.5}}, {"x3", {0.6, 0.3}}}, 0.6);
  const std::vector<std::pair<std::string, PFV>> upper = {{"x1", {0.7, 0.5}}, {"x2", {0.2, 0.5}}, {"x3", {0.6, 0.3}}};
  const std::vector<std::pair<std::string, PFV>> lower = {{"x1", {0.3, 0.8}}, {"x2", {0.1, 0.9}}, {"x3", {0.5, 0.6}}};
  std::size_t ok = 0;
  auto expect = [&](bool cond, const char *what) {
    if (cond) {
      ++ok;
    } else {
      r.fail(what);
    }
  };
  expect(subset(a, b), "A is not a subset of B");
  expect(complement(a) == CPFS::uniform({{"x1", {0.8, 0.3}}, {"x2", {0.9, 0.1}}, {"x3", {0.6, 0.5}}}, 0.2),
         "complement of A");
  expect(set_union(a, b, RadiusMode::Min) == CPFS::uniform(upper, 0.2), "union with min radius");
  expect(set_union(a, b, RadiusMode::Max) == CPFS::uniform(upper, 0.6), "union with max radius");
  expect(set_intersection(a, b, RadiusMode::Min) == CPFS::uniform(lower, 0.2), "intersection with min radius");
  expect(set_intersection(a, b, RadiusMode::Max) == CPFS::uniform(lower, 0.6), "intersection with max radius");

  const auto collections = io::load_collections(CPFUZZY_DATA_DIR "/example3_collections.json");
  const char *want[] = {"0.41 0.73 0.13", "0.16 0.46 0.17", "0.80 0.32 0.20"};
  for (std::size_t i = 0; i < collections.size() && i < 3; ++i) {
    const CPFV f = fuse(collections[i].second);
    const std::string got = fmt(f.mu(), 2) + " " + fmt(f.nu(), 2) + " " + fmt(f.r(), 2);
    if (got == want[i]) {
      ++ok;
    } else {
      r.fail(collections[i].first + " fuses to " + got);
    }
  }
  if (collections.size() != 3) r.fail("expected 3 collections");
  r.summary = std::to_string(ok) + "/9 set-operation and fusion outputs reproduced";
  return r;
}

Result property_suites() {
  Result r;
  const auto t0 = Clock::now();
  std::vector<props::Outcome> all;
  auto add = [&](std::vector<props::Outcome> v) { all.insert(all.end(), v.begin(), v.end()); };
  add(props::closure(1001, 100000));
  add(props::algebra_laws(1002, props::kCases));
  add(props::de_morgan(1003, props::kCases));
  add(props::similarity(1004, 100000));
  add(props::generators(1005, props::kCases));
  add(props::fold_oracle(1006, props::kCases));
  const double elapsed = ms_since(t0);

  std::size_t ok = 0;
  std::size_t cases = 0;
  for (const auto &o : all) {
    cases += o.cases;
    if (o.ok() && o.cases >= props::kCases) {
      ++ok;
    } else {
      r.fail(props::describe(o));
    }
  }
  if (elapsed >= 30000.0) r.fail("took " + fmt(elapsed / 1000.0, 1) + " s");
  r.summary = std::to_string(ok) + "/" + std::to_string(all.size()) + " suites hold over " + std::to_string(cases) +
              " checks, " + fmt(elapsed / 1000.0, 2) + " s";
  return r;
}

Result complexity() {
  Result r;
  const auto q = complexity_estimate(5, 5, 3, false);
  const auto p = complexity_estimate(5, 5, 3, true);
  if (q != 1380) r.fail("q-type (5,5,3) = " + std::to_string(q));
  if (p != 1440) r.fail("p-type (5,5,3) = " + std::to_string(p));
  std::size_t points = 0;
  for (bool pt : {false, true}) {
    for (std::uint64_t m = 1; m <= 3; ++m) {
      const auto least = complexity_estimate(2, 2, m, pt);
      for (std::uint64_t k = 2; k <= 10; ++k) {
        for (std::uint64_t n = 2; n <= 10; ++n) {
          ++points;
          const auto c = complexity_estimate(k, n, m, pt);
          const std::string at = "(" + std::to_string(k) + "," + std::to_string(n) + "," + std::to_string(m) + ")";
          if ((k > 2 || n > 2) && c <= least) r.fail("not above the (2,2) minimum at " + at);
          if (k < 10 && complexity_estimate(k + 1, n, m, pt) <= c) r.fail("not increasing in k at " + at);
          if (n < 10 && complexity_estimate(k, n + 1, m, pt) <= c) r.fail("not increasing in n at " + at);
          if (m < 3 && complexity_estimate(k, n, m + 1, pt) <= c) r.fail("not increasing in m at " + at);
        }
      }
    }
  }
  r.summary = "q " + std::to_string(q) + ", p " + std::to_string(p) + ", sweep of " + std::to_string(points) +
              " points strictly increasing with minimum at (2,2)";
  return r;
}

struct Criterion {
  int id;
  const char *name;
  std::function<Result()> run;
};

}  // namespace

int main(int argc, char **argv) {
  const std::vector<Criterion> criteria = {
      {1, "case-study normalization", normalization},
      {2, "fusion tables (centers, radii)", fusion_tables},
      {3, "aggregation tables", aggregation_tables},
      {4, "similarity tables", similarity_tables},
      {5, "ranking exactness", rankings},
      {6, "example-level anchors", examples},
      {7, "property suites", property_suites},
      {8, "complexity formulas", complexity},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto &c : criteria) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    Result r;
    try {
      r = c.run();
    } catch (const std::exception &e) {
      r.fail(std::string("threw: ") + e.what());
      r.summary = "aborted";
    }
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " " << c.name << ": " << r.summary << "\n";
    if (!r.pass) {
      ++failed;
      for (const auto &d : r.details) std::cout << "        " << d << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}
