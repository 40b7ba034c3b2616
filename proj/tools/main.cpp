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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "report.hpp"
#include "searchtime/searchtime.h"

namespace {

using searchtime::cli::Json;
namespace report = searchtime::cli;

constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuntimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void Check(st_status status) {
  if (status == ST_OK) return;
  const std::string message =
      std::string(st_status_name(status)) + ": " + st_last_error();
  if (status == ST_ERR_INVALID_ARGUMENT || status == ST_ERR_DOMAIN) {
    throw UsageError(message);
  }
  throw RuntimeError(message);
}

struct Options {
  std::string model = "tree";
  int depth = 14;
  int branching = 2;
  std::optional<int> goal_level;
  std::optional<double> goal_prob;
  std::optional<int> mu;
  std::optional<double> sigma2;
  uint64_t trials = 1000;
  uint64_t seed = 1;
  std::string method = "bfs";
  bool conditioned = false;
  std::string format;
  std::string out;
  std::string rules;
  int threads = 0;
  uint64_t samples = 100;
  uint64_t count = 1827;
  std::string which;
};

template <typename T>
std::map<std::string, T> Choices(
    std::initializer_list<std::pair<const std::string, T>> items) {
  return std::map<std::string, T>(items);
}

void AddModel(CLI::App* cmd, Options& o) {
  cmd->add_option("--model", o.model, "tree, binary-grammar or full-grammar")
      ->check(CLI::IsMember({"tree", "binary-grammar", "full-grammar"}));
  cmd->add_option("--depth", o.depth, "depth limit D");
  cmd->add_option("--branching", o.branching, "tree branching factor b");
}

void AddGoals(CLI::App* cmd, Options& o) {
  cmd->add_option("--goal-level", o.goal_level, "single goal level g");
  cmd->add_option("--goal-prob", o.goal_prob, "goal probability on level g");
  cmd->add_option("--mu", o.mu, "Gaussian goal profile peak level");
  cmd->add_option("--sigma2", o.sigma2, "Gaussian goal profile variance");
}

void AddFormat(CLI::App* cmd, Options& o, const std::string& fallback) {
  cmd->add_option("--format", o.format, "csv, json or text (default " +
                                            fallback + ")")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

void AddConditioned(CLI::App* cmd, Options& o) {
  cmd->add_flag("--condition-on-goal,--conditioned", o.conditioned,
                "condition on at least one goal existing");
}

st_model ParseModelFlag(const std::string& text) {
  if (text == "binary-grammar") return ST_MODEL_BINARY_GRAMMAR;
  if (text == "full-grammar") return ST_MODEL_FULL_GRAMMAR;
  return ST_MODEL_TREE;
}

st_problem ProblemFrom(const Options& o) {
  st_problem p{};
  p.model = ParseModelFlag(o.model);
  p.depth = o.depth;
  p.branching = o.branching;
  const bool single = o.goal_level || o.goal_prob;
  const bool gaussian = o.mu || o.sigma2;
  if (single && gaussian) {
    throw UsageError("--goal-level/--goal-prob and --mu/--sigma2 conflict");
  }
  if (gaussian) {
    if (!o.mu || !o.sigma2) throw UsageError("--mu needs --sigma2");
    p.gaussian = 1;
    p.mu = *o.mu;
    p.sigma2 = *o.sigma2;
  } else {
    if (!o.goal_level || !o.goal_prob) {
      throw UsageError(
          "give --goal-level with --goal-prob, or --mu with --sigma2");
    }
    p.goal_level = *o.goal_level;
    p.goal_prob = *o.goal_prob;
  }
  return p;
}

void Emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw RuntimeError("cannot open " + o.out);
  file << text;
  if (!file) throw RuntimeError("cannot write " + o.out);
}

void EmitJson(const Options& o, const Json& j) { Emit(o, j.dump(2) + "\n"); }

void RunEstimate(const Options& o) {
  const st_problem problem = ProblemFrom(o);
  const st_conditioning c = o.conditioned ? ST_COND_GIVEN_GOAL : ST_COND_NONE;
  st_estimate_report r;
  Check(st_estimate_problem(&problem, c, &r));
  if (o.format == "json") {
    EmitJson(o, report::EstimateReportJson(problem, c, r));
  } else if (o.format == "csv") {
    Emit(o, report::EstimateReportCsv(r));
  } else {
    Emit(o, report::EstimateReportText(problem, r));
  }
}

void RunSimulate(const Options& o) {
  const st_problem problem = ProblemFrom(o);
  const st_method m = o.method == "dfs" ? ST_DFS : ST_BFS;
  st_simulate_report r;
  Check(st_simulate_problem(&problem, m, o.trials, o.seed, o.conditioned,
                            o.threads, &r));
  if (o.format == "json") {
    EmitJson(o, report::SimulateReportJson(problem, m, o.trials, o.seed,
                                           o.conditioned, r));
  } else if (o.format == "csv") {
    Emit(o, report::SimulateReportCsv(r));
  } else {
    Emit(o, report::SimulateReportText(m, r));
  }
}

void RunTable(const Options& o) {
  const auto kinds = Choices<st_table_kind>(
      {{"sgl", ST_TABLE_SGL}, {"mgl", ST_TABLE_MGL}, {"bg", ST_TABLE_BG}});
  st_table* table = nullptr;
  Check(st_table_run(kinds.at(o.which), o.trials, o.seed, o.threads, &table));
  try {
    if (o.format == "json") {
      EmitJson(o, report::TableJson(o.which.c_str(), table, o.trials, o.seed));
    } else {
      Emit(o, report::TableCsv(o.which.c_str(), table));
    }
  } catch (...) {
    st_table_destroy(table);
    throw;
  }
  st_table_destroy(table);
}

void RunBoundary(const Options& o) {
  const auto kinds = Choices<st_boundary_kind>({{"sgl-fig", ST_BOUNDARY_SGL},
                                                {"bg-fig", ST_BOUNDARY_BG},
                                                {"gaussian-fig",
                                                 ST_BOUNDARY_GAUSSIAN}});
  st_boundary* b = nullptr;
  Check(st_boundary_run(kinds.at(o.which), o.samples, o.seed, &b));
  try {
    if (o.format == "json") {
      EmitJson(o, report::BoundaryJson(o.which.c_str(), b, o.samples, o.seed));
    } else {
      Emit(o, report::BoundaryCsv(b));
    }
  } catch (...) {
    st_boundary_destroy(b);
    throw;
  }
  st_boundary_destroy(b);
}

void RunDataset(const Options& o) {
  if (o.count == 0) throw UsageError("--count must be at least 1");
  st_dataset* d = nullptr;
  Check(st_dataset_run(o.count, o.seed, o.threads, &d));
  try {
    for (size_t i = 0; i < st_dataset_warning_count(d); ++i) {
      std::cerr << "warning: " << st_dataset_warning(d, i) << '\n';
    }
    if (o.format == "json") {
      EmitJson(o, report::DatasetJson(d, o.count, o.seed));
    } else {
      Emit(o, report::DatasetCsv(d));
    }
  } catch (...) {
    st_dataset_destroy(d);
    throw;
  }
  st_dataset_destroy(d);
}

void RunExportGraph(const Options& o) {
  st_graph* g = nullptr;
  if (!o.rules.empty()) {
    uint32_t mask = 0;
    Check(st_parse_rules(o.rules.c_str(), &mask));
    Check(st_graph_random_grammar(mask, o.depth, &g));
  } else if (o.model == "binary-grammar") {
    Check(st_graph_binary_grammar(o.depth, &g));
  } else if (o.model == "full-grammar") {
    Check(st_graph_full_grammar(o.depth, &g));
  } else {
    Check(st_graph_complete_tree(o.branching, o.depth, &g));
  }
  char* text = nullptr;
  const st_status status = st_graph_export(g, &text);
  st_graph_destroy(g);
  Check(status);
  std::string body = text;
  st_string_free(text);
  Emit(o, body);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expected BFS and DFS runtimes on goal-seeded trees and graphs"};
  app.set_version_flag("--version", std::string(st_version()));
  app.require_subcommand(1);
  Options o;

  CLI::App* estimate = app.add_subcommand("estimate", "analytical estimates");
  AddModel(estimate, o);
  AddGoals(estimate, o);
  AddConditioned(estimate, o);
  AddFormat(estimate, o, "text");

  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte Carlo against the estimates");
  AddModel(simulate, o);
  AddGoals(simulate, o);
  AddConditioned(simulate, o);
  simulate->add_option("--method", o.method, "bfs or dfs")
      ->check(CLI::IsMember({"bfs", "dfs"}, CLI::ignore_case));
  simulate->add_option("--trials", o.trials, "number of trials");
  simulate->add_option("--seed", o.seed, "base seed");
  simulate->add_option("--threads", o.threads, "worker threads, 0 for all");
  AddFormat(simulate, o, "text");

  CLI::App* table = app.add_subcommand("table", "reproduce a results table");
  table->add_option("which", o.which, "sgl, mgl or bg")
      ->required()
      ->check(CLI::IsMember({"sgl", "mgl", "bg"}));
  table->add_option("--trials", o.trials, "trials per cell, 0 to skip");
  table->add_option("--seed", o.seed, "base seed");
  table->add_option("--threads", o.threads, "worker threads, 0 for all");
  AddFormat(table, o, "csv");

  CLI::App* boundary =
      app.add_subcommand("boundary", "decision boundary and its accuracy");
  boundary->add_option("which", o.which, "sgl-fig, bg-fig or gaussian-fig")
      ->required()
      ->check(CLI::IsMember({"sgl-fig", "bg-fig", "gaussian-fig"}));
  boundary->add_option("--samples", o.samples, "sampled problems");
  boundary->add_option("--seed", o.seed, "base seed");
  AddFormat(boundary, o, "csv");

  CLI::App* dataset =
      app.add_subcommand("dataset", "random grammar BFS/DFS race dataset");
  dataset->add_option("--count", o.count, "number of problems");
  dataset->add_option("--seed", o.seed, "base seed");
  dataset->add_option("--threads", o.threads, "worker threads, 0 for all");
  AddFormat(dataset, o, "csv");

  CLI::App* export_graph =
      app.add_subcommand("export-graph", "list nodes and edges of a graph");
  AddModel(export_graph, o);
  export_graph->add_option("--rules", o.rules,
                           "comma-separated rules for a random grammar");
  export_graph->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (o.format.empty()) {
    o.format = (*estimate || *simulate) ? "text" : "csv";
  }
  try {
    if (*estimate) RunEstimate(o);
    if (*simulate) RunSimulate(o);
    if (*table) RunTable(o);
    if (*boundary) RunBoundary(o);
    if (*dataset) RunDataset(o);
    if (*export_graph) RunExportGraph(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
