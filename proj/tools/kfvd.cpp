/*
 * Copyright 2026 The kfvd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// kfvd: command line front end.
//
// Exit codes: 0 success, 1 invalid input or infeasible candidate solution,
// 2 internal invariant violation (including drop violations under --strict).

#include "kfvd/enumerate.hpp"
#include "kfvd/generate.hpp"
#include "kfvd/io.hpp"
#include "kfvd/knots.hpp"
#include "kfvd/oracle.hpp"
#include "kfvd/potential.hpp"
#include "kfvd/report.hpp"
#include "kfvd/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

using json = nlohmann::ordered_json;
using namespace kfvd;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_invariant = 2;

constexpr double growth_base = 1.4549;
constexpr double growth_tolerance = 0.02;

std::string units(Quarters q) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", q.as_units());
  return buf;
}

std::string millis(std::chrono::steady_clock::duration d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::chrono::duration<double, std::milli>(d).count());
  return buf;
}

json stats_json(const SearchStats &s) {
  json out = json::object();
  for (const auto &[key, value] : flatten(s))
    out[key] = value;
  return out;
}

json violations_json(const SearchStats &s) {
  json out = json::array();
  for (const auto &v : s.drop_violations)
    out.push_back({{"subroutine", v.subroutine},
                   {"branch", v.branch},
                   {"expected_min", v.expected_min.value},
                   {"observed", v.observed.value},
                   {"fingerprint", v.fingerprint},
                   {"sink_degree", v.sink_degree}});
  return out;
}

VertexSet parse_id_list(const std::string &text) {
  std::vector<Vertex> ids;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos)
      end = text.size();
    std::string tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ')
      tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ')
      tok.pop_back();
    auto value = detail::to_uint(tok);
    if (!value || *value == 0 || *value > 0xFFFFFFFFu)
      throw InputError("bad vertex id '" + tok + "' in solution list");
    ids.push_back(static_cast<Vertex>(*value));
    pos = end + 1;
  }
  return make_set(std::move(ids));
}

struct SolveArgs {
  std::string path;
  bool json = false;
  bool trace = false;
  bool strict = false;
  bool dump_potentials = false;
};

void dump_potentials(const Instance &inst, std::ostream &os) {
  os << "vertex potential psi surviving candidates\n";
  for (Vertex v : inst.graph().vertices()) {
    os << v << ' ' << units(inst.potential(v));
    if (inst.is_undecided(v))
      os << ' ' << units(drop_value(inst, v)) << ' ' << surviving_set(inst, v).size() << ' '
         << candidate_sinks(inst, v).size();
    else
      os << " - - -";
    os << '\n';
  }
}

int cmd_solve(const SolveArgs &args) {
  const Digraph d = read_digraph(args.path);
  const Instance inst(d);
  json trace = json::array();
  SearchOptions options;
  if (args.trace)
    options.trace = [&](const TraceEvent &e) {
      if (args.json)
        trace.push_back({{"depth", e.depth},
                         {"subroutine", e.subroutine},
                         {"vertex", e.vertex},
                         {"branch", e.branch},
                         {"measure_before", units(e.measure_before)},
                         {"measure_after", units(e.measure_after)},
                         {"cost_added", e.cost_added}});
      else
        std::cout << e.depth << ' ' << e.subroutine << ' ' << e.vertex << ' ' << e.branch << ' '
                  << units(e.measure_before) << ' ' << units(e.measure_after) << ' ' << e.cost_added << '\n';
    };
  if (args.dump_potentials && !args.json)
    dump_potentials(inst, std::cout);

  const auto start = std::chrono::steady_clock::now();
  const SolveResult r = solve(inst, options);
  const auto elapsed = std::chrono::steady_clock::now() - start;

  if (!verify_solution(d, r.solution.deletion_set, false).knot_free || !sink_set_consistent(d, r.solution))
    throw InvariantError("solver witness failed verification");

  if (args.json) {
    json out = {{"command", "solve"},
                {"n", d.order()},
                {"m", d.arc_count()},
                {"opt", r.solution.size},
                {"solution", r.solution.deletion_set},
                {"sinks", r.solution.sink_set},
                {"stats", stats_json(r.stats)},
                {"violations", violations_json(r.stats)}};
    if (args.trace)
      out["trace"] = trace;
    out["time_ms"] = millis(elapsed);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "n=" << d.order() << " m=" << d.arc_count() << '\n'
              << "opt=" << r.solution.size << '\n'
              << "solution=" << format_set(r.solution.deletion_set) << '\n'
              << "sinks=" << format_set(r.solution.sink_set) << '\n'
              << format_stats(r.stats) << '\n';
    for (const auto &v : r.stats.drop_violations)
      std::cout << "violation " << v.subroutine << ' ' << v.branch << " expected>=" << units(v.expected_min)
                << " observed=" << units(v.observed) << ' ' << v.fingerprint << '\n';
    std::cout << "time_ms=" << millis(elapsed) << '\n';
  }
  if (args.strict && !r.stats.drop_violations.empty())
    return exit_invariant;
  return exit_ok;
}

void print_family(const std::string &command, const Digraph &d, const MinimalFamily &family,
                  std::optional<std::size_t> leaves, bool as_json) {
  if (as_json) {
    json out = {{"command", command}, {"n", d.order()}, {"m", d.arc_count()}, {"sets", family.sets},
                {"count", family.sets.size()}};
    if (leaves)
      out["leaves"] = *leaves;
    std::cout << out.dump(2) << '\n';
    return;
  }
  for (const auto &s : family.sets)
    std::cout << format_set(s) << '\n';
  std::cout << "count=" << family.sets.size();
  if (leaves)
    std::cout << " leaves=" << *leaves;
  std::cout << '\n';
}

int cmd_enumerate(const std::string &path, bool as_json) {
  const Digraph d = read_digraph(path);
  const MinimalFamily family = enumerate_minimal(d);
  print_family("enumerate", d, family, family.leaf_count, as_json);
  return exit_ok;
}

int cmd_verify(const std::string &path, const std::string &solution, bool minimal, bool as_json) {
  const Digraph d = read_digraph(path);
  const VertexSet s = parse_id_list(solution);
  const VerificationReport rep = verify_solution(d, s, minimal);
  if (as_json) {
    json out = {{"command", "verify"}, {"n", d.order()}, {"m", d.arc_count()}, {"solution", s},
                {"knot_free", rep.knot_free}};
    if (rep.minimal)
      out["minimal"] = *rep.minimal;
    if (rep.witness_knot)
      out["witness_knot"] = *rep.witness_knot;
    if (rep.redundant_vertex)
      out["redundant_vertex"] = *rep.redundant_vertex;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "knot_free=" << (rep.knot_free ? "true" : "false");
    if (rep.minimal)
      std::cout << " minimal=" << (*rep.minimal ? "true" : "false");
    std::cout << '\n';
    if (rep.witness_knot)
      std::cout << "witness_knot=" << format_set(*rep.witness_knot) << '\n';
    if (rep.redundant_vertex)
      std::cout << "redundant_vertex=" << *rep.redundant_vertex << '\n';
  }
  return rep.knot_free ? exit_ok : exit_input;
}

int cmd_oracle(const std::string &path, bool enumerate, std::optional<std::size_t> cap, bool as_json) {
  const Digraph d = read_digraph(path);
  if (enumerate) {
    print_family("oracle", d, oracle_enumerate_minimal(d, cap.value_or(default_enumerate_cap)), std::nullopt,
                 as_json);
    return exit_ok;
  }
  const Solution s = oracle_min(d, cap.value_or(default_min_cap));
  if (as_json) {
    json out = {{"command", "oracle"}, {"n", d.order()}, {"m", d.arc_count()}, {"opt", s.size},
                {"solution", s.deletion_set}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "opt=" << s.size << '\n' << "solution=" << format_set(s.deletion_set) << '\n';
  }
  return exit_ok;
}

struct GenArgs {
  std::string family;
  std::int64_t k = 1;
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenArgs &args) {
  Digraph d;
  if (args.family == "triangles")
    d = gen_triangles(args.k);
  else if (args.family == "random")
    d = gen_random(args.n, args.p, args.seed);
  else
    throw InputError("unknown family '" + args.family + "'");
  const std::string text = serialize(d);
  if (args.output.empty() || args.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out)
      throw InputError("cannot write " + args.output);
    out << text;
  }
  return exit_ok;
}

int cmd_knots(const std::string &path, bool as_json) {
  const Digraph d = read_digraph(path);
  const KnotReport report = find_knots(d);
  const bool knot_free = is_knot_free(d);
  if (as_json) {
    json out = {{"command", "knots"}, {"n", d.order()}, {"m", d.arc_count()}, {"knots", report.knots},
                {"count", report.knots.size()}, {"knot_free", knot_free}};
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto &k : report.knots)
      std::cout << format_set(k) << '\n';
    std::cout << "count=" << report.knots.size() << '\n';
  }
  return exit_ok;
}

struct BenchArgs {
  std::string family = "triangles";
  std::int64_t k_max = 5;
  std::size_t n_max = 16;
  double p = 0.3;
  std::size_t seeds = 5;
  bool json = false;
};

int cmd_bench(const BenchArgs &args) {
  const double bound = std::log(growth_base);
  const double limit = bound + growth_tolerance;
  json rows = json::array();
  double worst = 0.0;
  if (args.family == "triangles") {
    if (args.k_max < 1)
      throw InputError("--k-max must be >= 1");
    if (!args.json)
      std::cout << "k n leaves nodes time_ms ratio log_leaves_per_n\n";
    std::size_t prev = 0;
    for (std::int64_t k = 1; k <= args.k_max; ++k) {
      const Digraph d = gen_triangles(k);
      const auto start = std::chrono::steady_clock::now();
      const SolveResult r = solve(d);
      const auto elapsed = std::chrono::steady_clock::now() - start;
      const double per_n = std::log(static_cast<double>(r.stats.leaves)) / static_cast<double>(d.order());
      worst = std::max(worst, per_n);
      std::string ratio;
      if (prev != 0) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", static_cast<double>(r.stats.leaves) / static_cast<double>(prev));
        ratio = buf;
      }
      char per_buf[32];
      std::snprintf(per_buf, sizeof per_buf, "%.4f", per_n);
      if (args.json)
        rows.push_back({{"k", k}, {"n", d.order()}, {"leaves", r.stats.leaves}, {"nodes", r.stats.nodes},
                        {"opt", r.solution.size}, {"time_ms", millis(elapsed)}, {"ratio", ratio},
                        {"log_leaves_per_n", per_buf}});
      else
        std::cout << k << ' ' << d.order() << ' ' << r.stats.leaves << ' ' << r.stats.nodes << ' '
                  << millis(elapsed) << ' ' << (ratio.empty() ? "-" : ratio) << ' ' << per_buf << '\n';
      prev = r.stats.leaves;
    }
  } else if (args.family == "random") {
    if (!args.json)
      std::cout << "n seeds max_leaves max_nodes time_ms log_leaves_per_n\n";
    for (std::size_t n = 1; n <= args.n_max; ++n) {
      std::size_t max_leaves = 0, max_nodes = 0;
      const auto start = std::chrono::steady_clock::now();
      for (std::uint64_t seed = 0; seed < args.seeds; ++seed) {
        const SolveResult r = solve(gen_random(n, args.p, seed), SearchOptions{false, {}});
        max_leaves = std::max(max_leaves, r.stats.leaves);
        max_nodes = std::max(max_nodes, r.stats.nodes);
      }
      const auto elapsed = std::chrono::steady_clock::now() - start;
      const double per_n = std::log(static_cast<double>(max_leaves)) / static_cast<double>(n);
      worst = std::max(worst, per_n);
      char per_buf[32];
      std::snprintf(per_buf, sizeof per_buf, "%.4f", per_n);
      if (args.json)
        rows.push_back({{"n", n}, {"seeds", args.seeds}, {"max_leaves", max_leaves}, {"max_nodes", max_nodes},
                        {"time_ms", millis(elapsed)}, {"log_leaves_per_n", per_buf}});
      else
        std::cout << n << ' ' << args.seeds << ' ' << max_leaves << ' ' << max_nodes << ' ' << millis(elapsed)
                  << ' ' << per_buf << '\n';
    }
  } else {
    throw InputError("unknown family '" + args.family + "'");
  }

  char worst_buf[32], bound_buf[32], limit_buf[32];
  std::snprintf(worst_buf, sizeof worst_buf, "%.4f", worst);
  std::snprintf(bound_buf, sizeof bound_buf, "%.4f", bound);
  std::snprintf(limit_buf, sizeof limit_buf, "%.4f", limit);
  if (args.json) {
    json out = {{"command", "bench"}, {"family", args.family}, {"rows", rows},
                {"max_log_leaves_per_n", worst_buf}, {"ln_1_4549", bound_buf}, {"limit", limit_buf},
                {"within_bound", worst <= limit}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "max_log_leaves_per_n=" << worst_buf << " ln(1.4549)=" << bound_buf << " limit=" << limit_buf
              << " within_bound=" << (worst <= limit ? "true" : "false") << '\n';
  }
  return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact knot-free vertex deletion: solve, enumerate, verify"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto *solve_cmd = app.add_subcommand("solve", "Minimum deletion set with search statistics");
  solve_cmd->add_option("path", solve_args.path, "Instance file")->required();
  solve_cmd->add_flag("--json", solve_args.json, "Structured output");
  solve_cmd->add_flag("--trace", solve_args.trace, "Print every branch decision");
  solve_cmd->add_flag("--strict", solve_args.strict, "Exit 2 on any drop violation");
  solve_cmd->add_flag("--dump-potentials", solve_args.dump_potentials,
                      "Print vertex, potential, psi, |S_x|, |C_x| before solving");

  std::string path;
  bool as_json = false;
  auto *enum_cmd = app.add_subcommand("enumerate", "All inclusion-minimal deletion sets");
  enum_cmd->add_option("path", path, "Instance file")->required();
  enum_cmd->add_flag("--json", as_json, "Structured output");

  std::string solution;
  bool minimal = false;
  auto *verify_cmd = app.add_subcommand("verify", "Check a candidate deletion set");
  verify_cmd->add_option("path", path, "Instance file")->required();
  verify_cmd->add_option("--solution", solution, "Comma-separated vertex ids")->required();
  verify_cmd->add_flag("--minimal", minimal, "Also check that no single vertex can be restored");
  verify_cmd->add_flag("--json", as_json, "Structured output");

  bool oracle_enum = false;
  std::optional<std::size_t> cap;
  auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle_cmd->add_option("path", path, "Instance file")->required();
  oracle_cmd->add_flag("--enumerate", oracle_enum, "List all inclusion-minimal sets");
  oracle_cmd->add_option("--cap-override", cap, "Raise the vertex cap");
  oracle_cmd->add_flag("--json", as_json, "Structured output");

  GenArgs gen_args;
  auto *gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("--family", gen_args.family, "triangles | random")->required();
  gen_cmd->add_option("--k", gen_args.k, "Triangle count");
  gen_cmd->add_option("--n", gen_args.n, "Vertex count (random)");
  gen_cmd->add_option("--p", gen_args.p, "Arc probability (random)");
  gen_cmd->add_option("--seed", gen_args.seed, "Seed (random)");
  gen_cmd->add_option("-o,--output", gen_args.output, "Output path, default stdout");

  auto *knots_cmd = app.add_subcommand("knots", "List the knots of an instance");
  knots_cmd->add_option("path", path, "Instance file")->required();
  knots_cmd->add_flag("--json", as_json, "Structured output");

  BenchArgs bench_args;
  auto *bench_cmd = app.add_subcommand("bench", "Leaf growth on generated families");
  bench_cmd->add_option("--family", bench_args.family, "triangles | random");
  bench_cmd->add_option("--k-max", bench_args.k_max, "Largest triangle count");
  bench_cmd->add_option("--n-max", bench_args.n_max, "Largest vertex count (random)");
  bench_cmd->add_option("--p", bench_args.p, "Arc probability (random)");
  bench_cmd->add_option("--seeds", bench_args.seeds, "Seeds per vertex count (random)");
  bench_cmd->add_flag("--json", bench_args.json, "Structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*solve_cmd)
      return cmd_solve(solve_args);
    if (*enum_cmd)
      return cmd_enumerate(path, as_json);
    if (*verify_cmd)
      return cmd_verify(path, solution, minimal, as_json);
    if (*oracle_cmd)
      return cmd_oracle(path, oracle_enum, cap, as_json);
    if (*gen_cmd)
      return cmd_gen(gen_args);
    if (*knots_cmd)
      return cmd_knots(path, as_json);
    if (*bench_cmd)
      return cmd_bench(bench_args);
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const InvariantError &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_invariant;
  }
  return exit_ok;
}
