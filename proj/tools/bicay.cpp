// Command-line front end: build bi-Cayley graphs from group descriptors,
// analyze invariants, run the verification suites, and export artifacts.
//
// Exit codes: 0 = success / no failed claim, 1 = a verification claim
// failed, 2 = usage or input error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicay/constructions.hpp"
#include "bicay/errors.hpp"
#include "bicay/graph.hpp"
#include "bicay/group.hpp"
#include "bicay/metrics.hpp"
#include "bicay/serialize.hpp"
#include "bicay/solvers.hpp"
#include "bicay/verifier.hpp"

namespace {

using namespace bicay;

// ---------------------------------------------------------------------------
// Shared option plumbing
// ---------------------------------------------------------------------------
struct BuildOptions {
  int p = 0;
  int q = 0;
  std::string preset;
  std::string group;
  std::string s1, s2, s3;
};

struct BudgetOptions {
  std::uint64_t nodes = 0;  // 0 = default
  double seconds = 0.0;     // 0 = default / env
};

Budget resolve_budget(const BudgetOptions& opts) {
  Budget budget;
  if (opts.nodes > 0) budget.max_nodes = opts.nodes;
  if (opts.seconds > 0) {
    budget.max_seconds = opts.seconds;
  } else if (const char* env = std::getenv("BICAY_BUDGET_SECONDS")) {
    try {
      budget.max_seconds = std::stod(env);
    } catch (const std::exception&) {
      throw InvalidParameter("BICAY_BUDGET_SECONDS is not a number: " + std::string(env));
    }
  }
  return budget;
}

// Connection-set source grammar: a bare or "explicit:"-prefixed
// comma-separated element list, "orders:<list>" resolved through element
// orders, or "involutions".
std::vector<int> parse_set_source(const FiniteGroup& g, const std::string& text,
                                  const std::string& flag) {
  std::string body = text;
  bool by_orders = false;
  if (body.rfind("explicit:", 0) == 0) {
    body = body.substr(9);
  } else if (body.rfind("orders:", 0) == 0) {
    body = body.substr(7);
    by_orders = true;
  } else if (body == "involutions") {
    return involutions(g);
  }
  std::vector<int> values;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      values.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InvalidParameter(flag + ": not an integer: '" + item + "'");
    }
  }
  if (values.empty()) throw InvalidParameter(flag + ": empty element list");
  if (!by_orders) return values;
  const auto resolved = elements_of_order(g, std::set<int>(values.begin(), values.end()));
  if (resolved.empty()) throw InvalidParameter(flag + ": no elements of the requested orders");
  return resolved;
}

LabeledGraph build_graph(const BuildOptions& opts) {
  if (!opts.preset.empty()) {
    if (opts.preset != "p2q2") throw InvalidParameter("unknown preset: " + opts.preset);
    if (opts.p == 0 || opts.q == 0) throw InvalidParameter("--preset p2q2 requires --p and --q");
    return bicayley_graph(spec_from_preset(preset_connection_sets(opts.p, opts.q)));
  }
  if (opts.p != 0 || opts.q != 0) {
    // Bare --p/--q defaults to the canonical family preset.
    return bicayley_graph(spec_from_preset(preset_connection_sets(opts.p, opts.q)));
  }
  if (opts.group.empty()) {
    throw InvalidParameter("build needs either --p/--q (with optional --preset p2q2) or --group with --s1/--s2/--s3");
  }
  const auto g = parse_group_descriptor(opts.group);
  if (opts.s1.empty() || opts.s2.empty()) {
    throw InvalidParameter("--group requires --s1 and --s2");
  }
  const auto s1 = parse_set_source(g, opts.s1, "--s1");
  const auto s2 = parse_set_source(g, opts.s2, "--s2");
  const auto s3 = opts.s3.empty() ? std::vector<int>{0} : parse_set_source(g, opts.s3, "--s3");
  return bicayley_graph(make_bicayley_spec(g, s1, s2, s3));
}

LabeledGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return import_json(buffer.str());
}

// Input precedence: an explicit graph file wins, otherwise build in-process.
LabeledGraph obtain_graph(const std::string& input, const BuildOptions& build) {
  if (!input.empty()) return load_graph(input);
  return build_graph(build);
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot write file: " + path);
  out << text;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------
nlohmann::ordered_json solver_entry(const SolveOutcome& out) {
  nlohmann::ordered_json j;
  j["value"] = out.value;
  j["exhaustive"] = out.exhaustive;
  j["lowerBound"] = out.lower_bound;
  j["upperBound"] = out.upper_bound;
  j["nodes"] = out.nodes;
  return j;
}

std::string analyze_graph(const LabeledGraph& g, const Budget& budget) {
  nlohmann::ordered_json j;
  j["vertexCount"] = g.vertex_count();
  j["edgeCount"] = g.edge_count();

  const auto profile = degree_profile(g);
  nlohmann::ordered_json degrees;
  degrees["kind"] = profile.kind == DegreeProfile::Kind::Regular      ? "regular"
                    : profile.kind == DegreeProfile::Kind::Biregular ? "biregular"
                                                                     : "irregular";
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [deg, count] : profile.histogram) hist[std::to_string(deg)] = count;
  degrees["histogram"] = hist;
  j["degrees"] = degrees;

  const auto comps = connected_components(g);
  j["componentCount"] = comps.size();
  std::vector<std::size_t> sizes;
  sizes.reserve(comps.size());
  for (const auto& c : comps) sizes.push_back(c.size());
  j["componentSizes"] = sizes;

  const auto info = diameter(g);
  j["connected"] = info.connected;
  if (info.connected) {
    j["diameter"] = info.value;
  } else {
    j["diameter"] = "infinite";  // disconnected graphs have no finite diameter
  }
  j["componentDiameters"] = info.component_diameters;

  const auto gi = girth(g);
  if (gi) {
    j["girth"] = *gi;
  } else {
    j["girth"] = nullptr;  // acyclic
  }

  const auto eu = is_eulerian(g);
  j["eulerian"] = eu.eulerian;
  j["eulerianReason"] = eu.reason;

  j["omega"] = solver_entry(clique_number_exact(g, budget));
  j["alpha"] = solver_entry(independence_number_exact(g, budget));
  j["chi"] = solver_entry(chromatic_number_exact(g, budget));
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// verification report output
// ---------------------------------------------------------------------------
int emit_report(VerificationReport report, const std::string& out_path,
                const std::string& format, bool no_timing) {
  if (no_timing) {
    report.timestamp = "";
    for (auto& c : report.claims) c.elapsed_ms = 0.0;
  }
  const auto json_text = report_to_json(report);
  if (format == "json") {
    write_or_print(out_path, json_text);
  } else {
    std::ostringstream text;
    text << "params: " << report.params << "\n";
    for (const auto& c : report.claims) {
      text << "  [" << to_string(c.status) << "] " << c.id << ": expected " << c.expected
           << ", computed " << c.computed;
      if (!c.notes.empty()) text << " (" << c.notes << ")";
      text << "\n";
    }
    text << "summary: " << report.passed << " pass, " << report.failed << " fail, "
         << report.inconclusive << " inconclusive, " << report.diagnostics << " diagnostic\n";
    write_or_print(out_path, text.str());
  }
  if (!out_path.empty()) {
    std::cout << report.passed << " pass, " << report.failed << " fail, " << report.inconclusive
              << " inconclusive, " << report.diagnostics << " diagnostic -> " << out_path << "\n";
  }
  return report.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bi-Cayley graph toolkit: build, analyze, verify, export"};
  app.require_subcommand(1);

  BuildOptions build;
  BudgetOptions budget_opts;
  std::string input, out_path;
  std::string format = "json";
  int trials = 0;
  unsigned seed = 1;
  bool no_timing = false;

  const auto add_build_flags = [&](CLI::App* cmd) {
    cmd->add_option("--p", build.p, "first prime of the Z_{p^2 q^2} family");
    cmd->add_option("--q", build.q, "second prime of the Z_{p^2 q^2} family");
    cmd->add_option("--preset", build.preset, "named connection-set preset (p2q2)");
    cmd->add_option("--group", build.group,
                    "group descriptor: cyclic:<n> | sym:<k> | dihedral:<order> | product:<a>x<b>");
    cmd->add_option("--s1", build.s1, "side-0 set: '1,2' | explicit:<list> | orders:<list> | involutions");
    cmd->add_option("--s2", build.s2, "side-1 set, same grammar");
    cmd->add_option("--s3", build.s3, "cross set, same grammar (default: identity)");
  };
  const auto add_budget_flags = [&](CLI::App* cmd) {
    cmd->add_option("--budget-nodes", budget_opts.nodes, "search-node budget per solver call");
    cmd->add_option("--budget-seconds", budget_opts.seconds,
                    "wall-clock budget per solver call (also env BICAY_BUDGET_SECONDS)");
  };

  auto* cmd_build = app.add_subcommand("build", "construct a graph and write it as JSON");
  add_build_flags(cmd_build);
  cmd_build->add_option("-o,--output", out_path, "output .graph.json path");
  std::string dot_path;
  cmd_build->add_option("--dot", dot_path, "also write a DOT rendering here");

  auto* cmd_analyze = app.add_subcommand("analyze", "compute the invariant profile of a graph");
  cmd_analyze->add_option("input", input, "graph JSON file (otherwise build flags apply)");
  add_build_flags(cmd_analyze);
  add_budget_flags(cmd_analyze);
  cmd_analyze->add_option("-o,--output", out_path, "report path (default: stdout)");

  auto* cmd_verify = app.add_subcommand("verify", "run the Z_{p^2 q^2} family claim suite");
  cmd_verify->add_option("--p", build.p, "first prime")->required();
  cmd_verify->add_option("--q", build.q, "second prime")->required();
  add_budget_flags(cmd_verify);
  cmd_verify->add_option("-o,--output", out_path, "report path (default: stdout)");
  cmd_verify->add_option("--format", format, "report format: json | text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_verify->add_flag("--no-timing", no_timing, "blank timestamp/elapsed fields for byte comparison");

  auto* cmd_general = app.add_subcommand("verify-general", "run the general-group claim suite");
  cmd_general->add_option("--group", build.group, "group descriptor")->required();
  cmd_general->add_option("--s1", build.s1, "side-0 set (omit when using --trials)");
  cmd_general->add_option("--s2", build.s2, "side-1 set (omit when using --trials)");
  cmd_general->add_option("--trials", trials, "number of random (S1,S2) draws");
  cmd_general->add_option("--seed", seed, "random seed for --trials mode");
  add_budget_flags(cmd_general);
  cmd_general->add_option("-o,--output", out_path, "report path (default: stdout)");
  cmd_general->add_option("--format", format, "report format: json | text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_general->add_flag("--no-timing", no_timing, "blank timestamp/elapsed fields for byte comparison");

  auto* cmd_involution =
      app.add_subcommand("verify-involution", "run the all-involutions cross-set claim suite");
  cmd_involution->add_option("--group", build.group, "group descriptor")->required();
  cmd_involution->add_option("--s1", build.s1, "side-0 set")->required();
  cmd_involution->add_option("--s2", build.s2, "side-1 set")->required();
  add_budget_flags(cmd_involution);
  cmd_involution->add_option("-o,--output", out_path, "report path (default: stdout)");
  cmd_involution->add_option("--format", format, "report format: json | text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_involution->add_flag("--no-timing", no_timing,
                           "blank timestamp/elapsed fields for byte comparison");

  auto* cmd_export = app.add_subcommand("export", "re-emit a graph as dot / edgelist / json");
  cmd_export->add_option("input", input, "graph JSON file (otherwise build flags apply)");
  add_build_flags(cmd_export);
  cmd_export->add_option("--format", format, "output format: json | dot | edgelist")
      ->check(CLI::IsMember({"json", "dot", "edgelist"}));
  cmd_export->add_option("-o,--output", out_path, "output path (default: stdout)");
  std::string dot_name = "bicayley";
  cmd_export->add_option("--name", dot_name, "graph name used in DOT output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // CLI11's own codes collapse onto usage-error = 2
  }

  try {
    if (cmd_build->parsed()) {
      const auto g = build_graph(build);
      if (!out_path.empty()) write_or_print(out_path, export_json(g));
      if (!dot_path.empty()) write_or_print(dot_path, export_dot(g, dot_name));
      std::cout << g.vertex_count() << " vertices, " << g.edge_count() << " edges";
      if (!out_path.empty()) std::cout << " -> " << out_path;
      std::cout << "\n";
      return 0;
    }
    if (cmd_analyze->parsed()) {
      const auto g = obtain_graph(input, build);
      write_or_print(out_path, analyze_graph(g, resolve_budget(budget_opts)));
      return 0;
    }
    if (cmd_verify->parsed()) {
      return emit_report(verify_p2q2(build.p, build.q, resolve_budget(budget_opts)), out_path,
                         format, no_timing);
    }
    if (cmd_general->parsed()) {
      const auto g = parse_group_descriptor(build.group);
      const auto budget = resolve_budget(budget_opts);
      if (trials > 0) {
        return emit_report(verify_general_random(g, trials, seed, budget), out_path, format,
                           no_timing);
      }
      if (build.s1.empty() || build.s2.empty()) {
        throw InvalidParameter("verify-general needs --s1/--s2 or --trials");
      }
      return emit_report(verify_general(g, parse_set_source(g, build.s1, "--s1"),
                                        parse_set_source(g, build.s2, "--s2"), budget),
                         out_path, format, no_timing);
    }
    if (cmd_involution->parsed()) {
      const auto g = parse_group_descriptor(build.group);
      return emit_report(verify_involution(g, parse_set_source(g, build.s1, "--s1"),
                                           parse_set_source(g, build.s2, "--s2"),
                                           resolve_budget(budget_opts)),
                         out_path, format, no_timing);
    }
    if (cmd_export->parsed()) {
      const auto g = obtain_graph(input, build);
      if (format == "dot") {
        write_or_print(out_path, export_dot(g, dot_name));
      } else if (format == "edgelist") {
        write_or_print(out_path, export_edgelist(g));
      } else {
        write_or_print(out_path, export_json(g));
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
