// Copyright 2026 The searchtime Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace searchtime::cli {
namespace {

Json NumberOrNull(double value) {
  if (std::isnan(value)) return nullptr;
  return value;
}

std::string RuleText(uint32_t mask) {
  char* text = nullptr;
  if (st_rules_to_string(mask, &text) != ST_OK) return {};
  std::string out = text;
  st_string_free(text);
  return out;
}

}  // namespace

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

const char* MethodText(st_method m) { return m == ST_BFS ? "BFS" : "DFS"; }

const char* Recommendation(const st_estimate_report& report) {
  if (report.verdict != ST_VERDICT_BAND) return VerdictText(report.verdict);
  return report.dfs.mean < report.bfs.mean ? "DFS" : "BFS";
}

const char* VerdictText(st_verdict v) {
  switch (v) {
    case ST_VERDICT_BFS:
      return "BFS";
    case ST_VERDICT_DFS:
      return "DFS";
    case ST_VERDICT_BAND:
      return "BAND";
  }
  return "?";
}

const char* ConditioningText(st_conditioning c) {
  switch (c) {
    case ST_COND_NONE:
      return "none";
    case ST_COND_GIVEN_GOAL:
      return "given-goal";
    case ST_COND_DROP_NO_GOAL_TERM:
      return "drop-no-goal-term";
  }
  return "?";
}

const char* ModelText(st_model m) {
  switch (m) {
    case ST_MODEL_TREE:
      return "tree";
    case ST_MODEL_BINARY_GRAMMAR:
      return "binary-grammar";
    case ST_MODEL_FULL_GRAMMAR:
      return "full-grammar";
  }
  return "?";
}

Json Meta(uint64_t seed, uint64_t trials) {
  return Json{{"seed", seed}, {"trials", trials}, {"version", st_version()}};
}

Json EstimateToJson(const st_estimate& e) {
  return Json{{"lower", e.lower},
              {"mean", e.mean},
              {"upper", e.upper},
              {"conditioning", ConditioningText(e.conditioning)}};
}

Json ProblemToJson(const st_problem& problem) {
  Json j{{"model", ModelText(problem.model)}, {"depth", problem.depth}};
  if (problem.model == ST_MODEL_TREE) j["branching"] = problem.branching;
  if (problem.gaussian) {
    j["mu"] = problem.mu;
    j["sigma2"] = problem.sigma2;
  } else {
    j["goal_level"] = problem.goal_level;
    j["goal_prob"] = problem.goal_prob;
  }
  return j;
}

Json EstimateReportJson(const st_problem& problem, st_conditioning c,
                        const st_estimate_report& report) {
  Json params = ProblemToJson(problem);
  params["conditioning"] = ConditioningText(c);
  Json bfs = EstimateToJson(report.bfs);
  bfs["formula"] = report.bfs_formula;
  bfs["goal_terms"] = report.bfs_goal_terms;
  Json dfs = EstimateToJson(report.dfs);
  dfs["formula"] = report.dfs_formula;
  return Json{{"params", params},
              {"bfs", bfs},
              {"dfs", dfs},
              {"verdict", VerdictText(report.verdict)},
              {"recommendation", Recommendation(report)},
              {"meta", Json{{"version", st_version()}}}};
}

std::string EstimateReportCsv(const st_estimate_report& report) {
  std::ostringstream out;
  out << "method,formula,lower,mean,upper,conditioning,verdict,"
         "recommendation\n";
  const auto row = [&](const char* method, const char* formula,
                       const st_estimate& e) {
    out << method << ',' << formula << ',' << FormatNumber(e.lower) << ','
        << FormatNumber(e.mean) << ',' << FormatNumber(e.upper) << ','
        << ConditioningText(e.conditioning) << ','
        << VerdictText(report.verdict) << ',' << Recommendation(report)
        << '\n';
  };
  row("BFS", report.bfs_formula, report.bfs);
  row("DFS", report.dfs_formula, report.dfs);
  return out.str();
}

std::string EstimateReportText(const st_problem& problem,
                               const st_estimate_report& report) {
  std::ostringstream out;
  out << "model " << ModelText(problem.model) << ", depth " << problem.depth;
  if (problem.gaussian) {
    out << ", mu " << problem.mu << ", sigma2 " << FormatNumber(problem.sigma2);
  } else {
    out << ", goal level " << problem.goal_level << ", goal prob "
        << FormatNumber(problem.goal_prob);
  }
  out << '\n';
  const auto line = [&](const char* method, const char* formula,
                        const st_estimate& e) {
    out << method << " (" << formula << ", "
        << ConditioningText(e.conditioning) << "): ";
    if (e.lower == e.upper) {
      out << FormatNumber(e.mean);
    } else {
      out << FormatNumber(e.mean) << " in [" << FormatNumber(e.lower) << ", "
          << FormatNumber(e.upper) << "]";
    }
    out << '\n';
  };
  line("BFS", report.bfs_formula, report.bfs);
  out << "BFS goal terms only: " << FormatNumber(report.bfs_goal_terms)
      << '\n';
  line("DFS", report.dfs_formula, report.dfs);
  if (report.verdict == ST_VERDICT_BAND) {
    out << "boundary band: too close to call, falling back to the means\n";
  }
  out << "recommendation: " << Recommendation(report) << '\n';
  return out.str();
}

Json SimulateReportJson(const st_problem& problem, st_method m,
                        uint64_t trials, uint64_t seed, bool conditioned,
                        const st_simulate_report& report) {
  Json params = ProblemToJson(problem);
  params["method"] = MethodText(m);
  params["condition_on_goal"] = conditioned;
  const st_trial_stats& s = report.stats;
  Json stats{{"trials_total", s.trials_total},
             {"trials_kept", s.trials_kept},
             {"discarded_no_goal", s.discarded_no_goal},
             {"mean", s.mean},
             {"std_error", s.std_error}};
  Json j{{"params", params},
         {"stats", stats},
         {"estimate", EstimateToJson(report.estimate)}};
  j["oracle"] = report.has_oracle ? Json(report.oracle) : Json(nullptr);
  j["meta"] = Meta(seed, trials);
  return j;
}

std::string SimulateReportCsv(const st_simulate_report& report) {
  const st_trial_stats& s = report.stats;
  std::ostringstream out;
  out << "trials_total,trials_kept,discarded_no_goal,mean,std_error,"
         "estimate_lower,estimate_mean,estimate_upper,oracle\n";
  out << s.trials_total << ',' << s.trials_kept << ',' << s.discarded_no_goal
      << ',' << FormatNumber(s.mean) << ',' << FormatNumber(s.std_error) << ','
      << FormatNumber(report.estimate.lower) << ','
      << FormatNumber(report.estimate.mean) << ','
      << FormatNumber(report.estimate.upper) << ','
      << (report.has_oracle ? FormatNumber(report.oracle) : "") << '\n';
  return out.str();
}

std::string SimulateReportText(st_method m, const st_simulate_report& report) {
  const st_trial_stats& s = report.stats;
  std::ostringstream out;
  out << MethodText(m) << " over " << s.trials_kept << " of "
      << s.trials_total << " trials (" << s.discarded_no_goal
      << " goalless discarded)\n";
  out << "empirical mean: " << FormatNumber(s.mean) << " +- "
      << FormatNumber(s.std_error) << '\n';
  out << "analytical: " << FormatNumber(report.estimate.mean);
  if (report.estimate.lower != report.estimate.upper) {
    out << " in [" << FormatNumber(report.estimate.lower) << ", "
        << FormatNumber(report.estimate.upper) << "]";
  }
  out << " (" << ConditioningText(report.estimate.conditioning) << ")\n";
  if (report.has_oracle) {
    out << "exact oracle: " << FormatNumber(report.oracle) << '\n';
  }
  return out.str();
}

Json TableJson(const char* name, const st_table* table, uint64_t trials,
               uint64_t seed) {
  const bool mgl = std::string(name) == "mgl";
  Json cells = Json::array();
  for (size_t i = 0; i < st_table_cell_count(table); ++i) {
    st_table_cell c;
    st_table_get_cell(table, i, &c);
    Json cell{{"method", MethodText(c.method)},
              {mgl ? "mu" : "goal_level", c.row},
              {mgl ? "sigma2" : "goal_prob", c.column},
              {"blank", c.blank != 0},
              {"analytical", EstimateToJson(c.analytical)},
              {"empirical", NumberOrNull(c.empirical)},
              {"std_error", NumberOrNull(c.std_error)},
              {"error_pct", NumberOrNull(c.error_pct)},
              {"discarded_no_goal", c.discarded_no_goal}};
    cells.push_back(std::move(cell));
  }
  return Json{{"params",
               Json{{"table", name}, {"depth", st_table_depth(table)}}},
              {"cells", cells},
              {"meta", Meta(seed, trials)}};
}

std::string TableCsv(const char* name, const st_table* table) {
  const bool mgl = std::string(name) == "mgl";
  std::ostringstream out;
  out << "method," << (mgl ? "mu,sigma2" : "goal_level,goal_prob")
      << ",blank,analytical_lower,analytical_mean,analytical_upper,"
         "conditioning,empirical,std_error,error_pct,discarded_no_goal\n";
  for (size_t i = 0; i < st_table_cell_count(table); ++i) {
    st_table_cell c;
    st_table_get_cell(table, i, &c);
    out << MethodText(c.method) << ',' << FormatNumber(c.row) << ','
        << FormatNumber(c.column) << ',' << c.blank << ','
        << FormatNumber(c.analytical.lower) << ','
        << FormatNumber(c.analytical.mean) << ','
        << FormatNumber(c.analytical.upper) << ','
        << ConditioningText(c.analytical.conditioning) << ','
        << FormatNumber(c.empirical) << ',' << FormatNumber(c.std_error)
        << ',' << FormatNumber(c.error_pct) << ',' << c.discarded_no_goal
        << '\n';
  }
  return out.str();
}

Json BoundaryJson(const char* name, const st_boundary* boundary,
                  uint64_t samples, uint64_t seed) {
  const std::string x = st_boundary_x_name(boundary);
  const std::string y = st_boundary_y_name(boundary);
  Json grid = Json::array();
  for (size_t i = 0; i < st_boundary_grid_count(boundary); ++i) {
    st_boundary_point p;
    st_boundary_grid_point(boundary, i, &p);
    grid.push_back(
        Json{{x, p.x}, {y, p.y}, {"verdict", VerdictText(p.verdict)}});
  }
  Json rows = Json::array();
  for (size_t i = 0; i < st_boundary_sample_count(boundary); ++i) {
    st_boundary_sample s;
    st_boundary_sample_at(boundary, i, &s);
    rows.push_back(Json{{x, s.x},
                        {y, s.y},
                        {"bfs_time", s.bfs_time},
                        {"dfs_time", s.dfs_time},
                        {"winner", MethodText(s.winner)},
                        {"predicted", MethodText(s.predicted)},
                        {"redraws", s.redraws}});
  }
  return Json{{"params", Json{{"boundary", name}, {"samples", samples}}},
              {"grid", grid},
              {"rows", rows},
              {"accuracy", st_boundary_accuracy(boundary)},
              {"meta", Meta(seed, samples)}};
}

std::string BoundaryCsv(const st_boundary* boundary) {
  std::ostringstream out;
  out << "# accuracy=" << FormatNumber(st_boundary_accuracy(boundary))
      << "; winner ties go to BFS\n";
  out << "kind," << st_boundary_x_name(boundary) << ','
      << st_boundary_y_name(boundary)
      << ",verdict,bfs_time,dfs_time,winner,predicted,redraws\n";
  for (size_t i = 0; i < st_boundary_grid_count(boundary); ++i) {
    st_boundary_point p;
    st_boundary_grid_point(boundary, i, &p);
    out << "grid," << FormatNumber(p.x) << ',' << FormatNumber(p.y) << ','
        << VerdictText(p.verdict) << ",,,,,\n";
  }
  for (size_t i = 0; i < st_boundary_sample_count(boundary); ++i) {
    st_boundary_sample s;
    st_boundary_sample_at(boundary, i, &s);
    out << "sample," << FormatNumber(s.x) << ',' << FormatNumber(s.y) << ",,"
        << s.bfs_time << ',' << s.dfs_time << ',' << MethodText(s.winner)
        << ',' << MethodText(s.predicted) << ',' << s.redraws << '\n';
  }
  return out.str();
}

Json DatasetJson(const st_dataset* dataset, uint64_t count, uint64_t seed) {
  Json rows = Json::array();
  for (size_t i = 0; i < st_dataset_row_count(dataset); ++i) {
    st_dataset_row r;
    st_dataset_get_row(dataset, i, &r);
    rows.push_back(Json{{"mean_branching", r.features.mean_branching},
                        {"std_branching", r.features.std_branching},
                        {"num_rules", r.features.num_rules},
                        {"max_depth", r.features.max_depth},
                        {"bfs_time", r.bfs_time},
                        {"dfs_time", r.dfs_time},
                        {"winner", MethodText(r.winner)},
                        {"goals", r.goals},
                        {"rules", RuleText(r.rule_mask)}});
  }
  return Json{{"params", Json{{"count", count}, {"ties", "BFS"}}},
              {"rows", rows},
              {"dfs_win_fraction", st_dataset_dfs_win_fraction(dataset)},
              {"skipped", st_dataset_skipped(dataset)},
              {"meta", Meta(seed, count)}};
}

std::string DatasetCsv(const st_dataset* dataset) {
  std::ostringstream out;
  out << "# winner ties (bfs_time == dfs_time) are labeled BFS\n";
  out << "mean_branching,std_branching,num_rules,max_depth,bfs_time,"
         "dfs_time,winner,goals,rules\n";
  for (size_t i = 0; i < st_dataset_row_count(dataset); ++i) {
    st_dataset_row r;
    st_dataset_get_row(dataset, i, &r);
    out << FormatNumber(r.features.mean_branching) << ','
        << FormatNumber(r.features.std_branching) << ','
        << r.features.num_rules << ',' << r.features.max_depth << ','
        << r.bfs_time << ',' << r.dfs_time << ',' << MethodText(r.winner)
        << ',' << r.goals << ",\"" << RuleText(r.rule_mask) << "\"\n";
  }
  return out.str();
}

}  // namespace searchtime::cli
