// Acceptance harness: grades the nine scripted exit criteria end to end and
// prints one [PASS]/[FAIL] line per criterion with the supporting evidence
// indented underneath. The process exit code is the number of failed
// criteria, so a fully green run exits 0.
//
// Grading is intentionally strict: a criterion line is failed when any of
// its items fails, even when the underlying suite explains the failure as a
// refuted input claim. The detail lines carry the refutation evidence.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bicay/constructions.hpp"
#include "bicay/graph.hpp"
#include "bicay/group.hpp"
#include "bicay/isomorphism.hpp"
#include "bicay/metrics.hpp"
#include "bicay/serialize.hpp"
#include "bicay/solvers.hpp"
#include "bicay/verifier.hpp"

namespace {

using namespace bicay;
using Clock = std::chrono::steady_clock;

// ---- pinned tolerances -----------------------------------------------------
constexpr double kSmallInstanceSeconds = 10.0;   // criteria 1 and 2 wall clock
constexpr double kBfsInstanceSeconds = 60.0;     // criterion 4 wall clock
constexpr double kAlphaBudgetSeconds = 300.0;    // criterion 3 independence budget
constexpr double kChiBudgetSeconds = 600.0;      // criterion 3 colorability budget
constexpr std::uint64_t kWideNodeBudget = 4'000'000'000ULL;

struct Criterion {
  bool ok = true;
  std::vector<std::string> details;

  void item(bool good, const std::string& text) {
    ok = ok && good;
    details.push_back(std::string(good ? "  ok   " : "  BAD  ") + text);
  }
  void note(const std::string& text) { details.push_back("  note " + text); }
};

const ClaimResult* claim(const VerificationReport& rep, const std::string& id, Criterion& c) {
  const auto* found = rep.find(id);
  if (!found) c.item(false, "missing claim " + id);
  return found;
}

void expect_pass(const VerificationReport& rep, const std::string& id, Criterion& c,
                 const std::string& label) {
  const auto* cl = claim(rep, id, c);
  if (!cl) return;
  c.item(cl->status == ClaimStatus::Pass,
         label + ": " + to_string(cl->status) + " (computed " + cl->computed + ")");
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

// ---- criteria 1 and 2: the 72-vertex family instance ----------------------
Criterion grade_small_family(const VerificationReport& rep, double secs) {
  Criterion c;
  c.item(secs < kSmallInstanceSeconds,
         "suite wall clock " + fmt_secs(secs) + " (limit " + fmt_secs(kSmallInstanceSeconds) + ")");
  c.item(rep.inconclusive == 0, "zero inconclusive entries (" + std::to_string(rep.inconclusive) + ")");

  expect_pass(rep, "p2q2.vertex_count", c, "vertex count 72");
  expect_pass(rep, "p2q2.edge_count", c, "edge count 234");
  expect_pass(rep, "p2q2.degrees", c, "biregular degrees {4,9}");
  expect_pass(rep, "p2q2.connected", c, "connected");
  expect_pass(rep, "p2q2.eulerian", c, "not Eulerian");
  expect_pass(rep, "p2q2.girth", c, "girth 3");
  expect_pass(rep, "p2q2.omega", c, "clique number 3, exhaustive");
  expect_pass(rep, "p2q2.chi_gamma0", c, "side-0 chromatic number 3");
  expect_pass(rep, "p2q2.chi_gamma1", c, "side-1 chromatic number 3");
  expect_pass(rep, "p2q2.not_k_colorable", c, "exhaustive 3-colorability refutation");
  expect_pass(rep, "p2q2.chi", c, "chromatic number 4");
  expect_pass(rep, "p2q2.gamma0_components", c, "side 0 splits into 6 residue-grid components");
  expect_pass(rep, "p2q2.component_iso", c, "each component isomorphic to the 2x3 rook graph");
  expect_pass(rep, "p2q2.gamma1_iso", c, "side 1 isomorphic to the multipartite product model");
  expect_pass(rep, "p2q2.component_diameter", c, "component diameter 2");
  expect_pass(rep, "p2q2.gamma1_diameter", c, "side-1 diameter 4");
  expect_pass(rep, "p2q2.alpha_gamma0", c, "side-0 independence number 12, exhaustive");
  expect_pass(rep, "p2q2.alpha_gamma1", c, "side-1 independence number 12, exhaustive");
  expect_pass(rep, "p2q2.alpha", c, "independence number 20, exhaustive");

  const auto* diam = claim(rep, "p2q2.diameter", c);
  if (diam) {
    c.item(diam->status == ClaimStatus::Pass,
           "whole-graph diameter 5: " + to_string(diam->status) + " (computed " + diam->computed + ")");
    if (diam->status == ClaimStatus::Fail) {
      c.note("the stated diameter 5 is refuted on the graph itself: BFS over all pairs finds "
             "diameter 4 (worst pairs admit align-cross-jump-cross routes); every other claim in "
             "the suite passes exhaustively");
    }
  }
  c.item(rep.failed <= 1, "no failures beyond the refuted diameter claim (failed=" +
                              std::to_string(rep.failed) + ")");
  return c;
}

// ---- criterion 3: the 200-vertex instance ----------------------------------
Criterion grade_medium_family(const VerificationReport& rep, double secs) {
  Criterion c;
  c.note("suite wall clock " + fmt_secs(secs) + "; per-call budgets: " +
         fmt_secs(kChiBudgetSeconds) + " / " + std::to_string(kWideNodeBudget) + " nodes");

  // Structural and BFS claims must be exact.
  expect_pass(rep, "p2q2.vertex_count", c, "vertex count 200");
  expect_pass(rep, "p2q2.edge_count", c, "edge count 1450");
  expect_pass(rep, "p2q2.degrees", c, "biregular degrees {6,23}");
  expect_pass(rep, "p2q2.connected", c, "connected");
  expect_pass(rep, "p2q2.girth", c, "girth 3");
  expect_pass(rep, "p2q2.gamma0_components", c, "side 0 splits into 10 residue-grid components");
  expect_pass(rep, "p2q2.component_iso", c, "each component isomorphic to the 2x5 rook graph");
  expect_pass(rep, "p2q2.gamma1_iso", c, "side 1 isomorphic to the multipartite product model");
  expect_pass(rep, "p2q2.gamma1_diameter", c, "side-1 diameter 4");

  const auto* diam = claim(rep, "p2q2.diameter", c);
  if (diam) {
    c.item(diam->status == ClaimStatus::Pass, "whole-graph diameter 5: " + to_string(diam->status) +
                                                  " (computed " + diam->computed + ")");
    if (diam->status == ClaimStatus::Fail) {
      c.note("diameter claim refuted by BFS exactly as on the 72-vertex instance: computed 4");
    }
  }

  expect_pass(rep, "p2q2.omega", c, "clique number 5, exhaustive");

  const auto* alpha = claim(rep, "p2q2.alpha", c);
  if (alpha) {
    const bool in_budget = alpha->elapsed_ms <= kAlphaBudgetSeconds * 1000.0;
    c.item(alpha->status == ClaimStatus::Pass && in_budget,
           "independence number 36 exhaustive within " + fmt_secs(kAlphaBudgetSeconds) + ": " +
               to_string(alpha->status) + " in " + fmt_secs(alpha->elapsed_ms / 1000.0));
  }

  // Chromatic number: exhaustive refutation within budget is the primary
  // path; the constructive fallback (certified 6-coloring + 5-clique with an
  // explicit inconclusive flag) also satisfies the criterion. A false pass
  // (pass without exhaustive backing) would fail both arms.
  const auto* probe = claim(rep, "p2q2.not_k_colorable", c);
  const auto* chi = claim(rep, "p2q2.chi", c);
  const auto* full = claim(rep, "p2q2.construct.full_coloring", c);
  const auto* clique5 = claim(rep, "p2q2.construct.gamma1_clique", c);
  if (probe && chi && full && clique5) {
    const bool exhaustive_path =
        probe->status == ClaimStatus::Pass && chi->status == ClaimStatus::Pass;
    const bool constructive_path = probe->status == ClaimStatus::Inconclusive &&
                                   chi->status == ClaimStatus::Inconclusive &&
                                   full->status == ClaimStatus::Pass &&
                                   clique5->status == ClaimStatus::Pass;
    c.item(exhaustive_path || constructive_path,
           std::string("chromatic number 6: ") +
               (exhaustive_path ? "exhaustive 5-colorability refutation in " +
                                      fmt_secs(probe->elapsed_ms / 1000.0)
                : constructive_path
                    ? "inconclusive flagged explicitly; certified 6-coloring and 5-clique bound it"
                    : "neither exhaustively refuted nor constructively bounded (probe " +
                          to_string(probe->status) + ", chi " + to_string(chi->status) + ")"));
  }
  return c;
}

// ---- criterion 4: the 450-vertex instance ----------------------------------
Criterion grade_large_family(const VerificationReport& rep, double secs) {
  Criterion c;
  c.item(secs < kBfsInstanceSeconds,
         "suite wall clock " + fmt_secs(secs) + " (limit " + fmt_secs(kBfsInstanceSeconds) + ")");

  expect_pass(rep, "p2q2.vertex_count", c, "vertex count 450");
  expect_pass(rep, "p2q2.edge_count", c, "edge count 3825");
  expect_pass(rep, "p2q2.degrees", c, "biregular degrees {7,27}");
  expect_pass(rep, "p2q2.gamma0_components", c, "side 0 splits into 15 residue-grid components");
  expect_pass(rep, "p2q2.component_iso", c, "each component isomorphic to the 3x5 rook graph");
  expect_pass(rep, "p2q2.girth", c, "girth 3");
  expect_pass(rep, "p2q2.gamma1_diameter", c, "side-1 diameter 4");

  const auto* diam = claim(rep, "p2q2.diameter", c);
  if (diam) {
    c.item(diam->status == ClaimStatus::Pass, "whole-graph diameter 5: " + to_string(diam->status) +
                                                  " (computed " + diam->computed + ")");
    if (diam->status == ClaimStatus::Fail) {
      c.note("diameter claim refuted by BFS on this instance as well: computed 4");
    }
  }

  // Construction witnesses must validate regardless of solver budgets.
  expect_pass(rep, "p2q2.construct.full_coloring", c, "proper 6-coloring certificate");
  expect_pass(rep, "p2q2.construct.gamma1_clique", c, "clique-of-size-5 certificate");
  const auto* alpha = claim(rep, "p2q2.alpha", c);
  if (alpha) {
    const bool witness_ok = alpha->status == ClaimStatus::Pass ||
                            (alpha->status == ClaimStatus::Inconclusive &&
                             alpha->notes.find("constructive witness") != std::string::npos);
    c.item(witness_ok, "independent set of size 81 validates (claim " + to_string(alpha->status) +
                           ")");
  }

  int hard_failures = 0;
  for (const auto& cl : rep.claims) {
    if (cl.status == ClaimStatus::Fail && cl.id != "p2q2.diameter") ++hard_failures;
  }
  c.item(hard_failures == 0,
         "no failures beyond the refuted diameter claim (other failures=" +
             std::to_string(hard_failures) + ")");
  c.note("NP-hard exact values may be inconclusive under this budget by design; inconclusive "
         "entries: " +
         std::to_string(rep.inconclusive));
  return c;
}

// ---- criterion 5: constructions agree with exhaustive solvers --------------
void grade_construction_instance(const VerificationReport& rep, const std::string& label,
                                 Criterion& c) {
  // Every explicit construction must validate, and every optimum it claims
  // must match the solver verdict (pass = certificate plus solver agreement).
  static const char* kIds[] = {
      "p2q2.construct.gamma0_coloring", "p2q2.construct.gamma1_coloring",
      "p2q2.construct.full_coloring",   "p2q2.construct.coset_cliques",
      "p2q2.construct.coset_rainbow",   "p2q2.construct.gamma1_clique",
      "p2q2.construct.grid_independent", "p2q2.construct.transversals",
      "p2q2.omega_gamma0",              "p2q2.omega_gamma1",
      "p2q2.alpha_gamma0",              "p2q2.alpha_gamma1",
      "p2q2.alpha",                     "p2q2.chi_gamma0",
      "p2q2.chi_gamma1",                "p2q2.chi"};
  int good = 0, total = 0;
  std::string bad;
  for (const char* id : kIds) {
    ++total;
    const auto* cl = rep.find(id);
    if (cl && cl->status == ClaimStatus::Pass) {
      ++good;
    } else {
      bad += std::string(" ") + id + "=" + (cl ? to_string(cl->status) : "missing");
    }
  }
  c.item(good == total, label + ": " + std::to_string(good) + "/" + std::to_string(total) +
                            " construction-vs-solver agreements" + bad);
}

// ---- criterion 6: randomized general-group battery -------------------------
Criterion grade_random_general() {
  Criterion c;
  const std::pair<std::string, unsigned> instances[] = {
      {"sym:3", 1}, {"dihedral:8", 2}, {"cyclic:12", 3}, {"product:cyclic:2xcyclic:2", 4}};
  // Claim families graded by this criterion, per trial.
  static const char* kSuffixes[] = {"degrees",  "regularity",
                                    "side_connectivity", "connected_iff_side_connected",
                                    "eulerian", "omega_rule",
                                    "chi_bounds"};
  int total_graded = 0, total_failed = 0;
  int repaired_pass = 0, repaired_total = 0;
  std::vector<std::string> counterexamples;
  for (const auto& [desc, seed] : instances) {
    const auto g = parse_group_descriptor(desc);
    const auto rep = verify_general_random(g, 50, seed);
    int failed_here = 0;
    for (int t = 0; t < 50; ++t) {
      char prefix[24];
      std::snprintf(prefix, sizeof prefix, "t%02d.general.", t);
      for (const char* suffix : kSuffixes) {
        const auto* cl = rep.find(std::string(prefix) + suffix);
        if (!cl) continue;
        if (cl->status == ClaimStatus::Diagnostic) continue;  // Eulerian rule on disconnected draws
        ++total_graded;
        if (cl->status != ClaimStatus::Pass) {
          ++total_failed;
          ++failed_here;
          if (counterexamples.size() < 4) {
            counterexamples.push_back(desc + " " + cl->id + ": " + cl->computed);
          }
        }
      }
      const auto* repaired = rep.find(std::string(prefix) + "connected_iff_union_generates");
      if (repaired) {
        ++repaired_total;
        if (repaired->status == ClaimStatus::Pass) ++repaired_pass;
      }
    }
    c.item(failed_here == 0, desc + ": 50 seeded trials, " + std::to_string(failed_here) +
                                 " failed graded claims (seed " + std::to_string(seed) + ")");
  }
  c.item(total_failed == 0, "zero failures overall: " + std::to_string(total_failed) + " of " +
                                std::to_string(total_graded) + " graded claims failed");
  for (const auto& line : counterexamples) c.note("counterexample " + line);
  if (total_failed > 0) {
    c.note("every failure is the whole-graph connectivity biconditional 'connected <=> some side "
           "connected': the cross matching can connect two disconnected sides whenever "
           "<S1 u S2> = G with neither set generating alone");
  }
  c.note("repaired law 'connected <=> <S1 u S2> = G' passed " + std::to_string(repaired_pass) +
         "/" + std::to_string(repaired_total) + " trials");
  return c;
}

// ---- criterion 7: involution cross-set suite -------------------------------
Criterion grade_involution_suite() {
  Criterion c;
  struct Instance {
    std::string label;
    FiniteGroup group;
    std::vector<int> s1, s2;
  };
  const auto sym3 = make_symmetric(3);
  const auto sym4 = make_symmetric(4);
  const auto d4 = make_dihedral(8);
  const std::vector<Instance> instances = {
      {"sym:3 transposition sets", sym3, {1, 2}, {1, 2}},
      {"sym:4 order-4 / order-3 sets", sym4, elements_of_order(sym4, {4}),
       elements_of_order(sym4, {3})},
      {"dihedral:8 quarter-rotation sets", d4, {1, 3}, {1, 3}},
  };
  static const char* kIds[] = {"inv.cross_regular", "inv.edge_count", "inv.component_partition",
                               "inv.mixed_clique_bound"};
  for (const auto& inst : instances) {
    const auto rep = verify_involution(inst.group, inst.s1, inst.s2);
    int failed = 0;
    std::string detail;
    for (const char* id : kIds) {
      const auto* cl = rep.find(id);
      if (!cl) {
        ++failed;
        detail += std::string(" ") + id + "=missing";
        continue;
      }
      if (cl->status == ClaimStatus::Fail || cl->status == ClaimStatus::Inconclusive) {
        ++failed;
        detail += std::string(" ") + id + "=" + to_string(cl->status);
      } else if (cl->status == ClaimStatus::Diagnostic) {
        detail += std::string(" ") + id + "=n/a";
      }
    }
    c.item(failed == 0, inst.label + ": graded claim families clean" + detail);
  }
  c.note("the mixed-clique commuting hypothesis cannot fire when the same-side sets are "
         "separating (the would-be commuting product is an involution inside an involution-free "
         "set), so the two-per-side bound holds vacuously; enumeration still runs exhaustively");
  c.note("the cross-edge connectivity biconditional is not among this criterion's claim "
         "families; it is graded in the involution suite itself and is refuted there on sym:3 "
         "(two-involution products only reach the even permutations)");
  return c;
}

// ---- criterion 8: cross-oracle agreement -----------------------------------
LabeledGraph random_graph(std::mt19937& rng, int n, double edge_prob) {
  GraphBuilder b(n);
  const auto threshold = static_cast<std::uint32_t>(edge_prob * 4294967295.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng() < threshold) b.add_edge(i, j);
    }
  }
  return b.build("random");
}

// Shortest cycle by exhaustive simple-path enumeration: every cycle is
// explored from its minimum vertex, so each is found at least once.
int naive_girth(const LabeledGraph& g) {
  const int n = g.vertex_count();
  int best = 0;  // 0 = no cycle found
  std::vector<bool> on_path(n, false);
  std::vector<int> path;
  auto dfs = [&](auto&& self, int start, int v) -> void {
    on_path[v] = true;
    path.push_back(v);
    for (int w = 0; w < n; ++w) {
      if (!g.adjacent(v, w)) continue;
      if (w == start && path.size() >= 3) {
        const int len = static_cast<int>(path.size());
        if (best == 0 || len < best) best = len;
      } else if (!on_path[w] && w > start) {
        self(self, start, w);
      }
    }
    on_path[v] = false;
    path.pop_back();
  };
  for (int s = 0; s < n; ++s) dfs(dfs, s, s);
  return best;
}

Criterion grade_cross_oracles() {
  Criterion c;
  std::mt19937 rng(2024);
  Budget budget;
  budget.max_nodes = kWideNodeBudget;
  budget.max_seconds = 60.0;

  int alpha_agree = 0;
  const int alpha_trials = 30;
  for (int t = 0; t < alpha_trials; ++t) {
    const int n = 5 + static_cast<int>(rng() % 56);  // 5..60 vertices
    const double prob = 0.15 + 0.6 * (t % 5) / 4.0;  // 0.15 .. 0.75
    const auto g = random_graph(rng, n, prob);
    const auto a = independence_number_exact(g, budget);
    const auto w = clique_number_exact(complement(g), budget);
    if (a.exhaustive && w.exhaustive && a.value == w.value) {
      ++alpha_agree;
    } else {
      c.note("independence/complement-clique disagreement: n=" + std::to_string(n) +
             " alpha=" + std::to_string(a.value) + " omega(complement)=" + std::to_string(w.value));
    }
  }
  c.item(alpha_agree == alpha_trials,
         "independence number equals complement clique number on " + std::to_string(alpha_agree) +
             "/" + std::to_string(alpha_trials) + " random graphs (5..60 vertices)");

  int girth_agree = 0;
  const int girth_trials = 30;
  for (int t = 0; t < girth_trials; ++t) {
    const int n = 3 + static_cast<int>(rng() % 10);  // 3..12 vertices
    const double prob = 0.10 + 0.7 * (t % 6) / 5.0;  // sparse draws include acyclic graphs
    const auto g = random_graph(rng, n, prob);
    const auto fast = girth(g);
    const int slow = naive_girth(g);
    const bool agree = fast ? (slow == *fast) : (slow == 0);
    if (agree) {
      ++girth_agree;
    } else {
      c.note("girth disagreement: n=" + std::to_string(n) + " bfs=" +
             (fast ? std::to_string(*fast) : std::string("acyclic")) +
             " naive=" + std::to_string(slow));
    }
  }
  c.item(girth_agree == girth_trials,
         "BFS girth equals naive cycle enumeration on " + std::to_string(girth_agree) + "/" +
             std::to_string(girth_trials) + " random graphs (3..12 vertices)");
  return c;
}

// ---- criterion 9: serialization stability ----------------------------------
Criterion grade_serialization() {
  Criterion c;
  std::mt19937 rng(9);
  int roundtrip_ok = 0;
  const int trials = 20;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + static_cast<int>(rng() % 39);  // 2..40 vertices
    auto g = random_graph(rng, n, 0.1 + 0.5 * (t % 4) / 3.0);
    if (t % 2 == 0) {
      // Exercise sided labels on half the draws.
      GraphBuilder b(n);
      for (int v = 0; v < n; ++v)
        b.set_label(v, {static_cast<std::int8_t>(v < n / 2 ? 0 : 1), v % (n / 2 == 0 ? 1 : n / 2)});
      for (const auto& [u, v] : g.edges()) b.add_edge(u, v);
      g = b.build("random sided");
    }
    const auto text = export_json(g);
    const auto back = import_json(text);

    bool same = back.vertex_count() == g.vertex_count() && back.edge_count() == g.edge_count() &&
                back.edges() == g.edges();
    for (int v = 0; same && v < n; ++v) {
      same = back.label(v).side == g.label(v).side && back.label(v).element == g.label(v).element;
    }
    same = same && degree_profile(back).histogram == degree_profile(g).histogram;
    same = same && connected_components(back) == connected_components(g);
    const auto da = diameter(g), db = diameter(back);
    same = same && da.connected == db.connected && da.value == db.value &&
           da.component_diameters == db.component_diameters;
    same = same && girth(back) == girth(g);
    same = same && export_json(back) == text;  // byte-stable re-export
    if (same) {
      ++roundtrip_ok;
    } else {
      c.note("round-trip mismatch on trial " + std::to_string(t));
    }
  }
  c.item(roundtrip_ok == trials, "JSON round-trip preserves invariants on " +
                                     std::to_string(roundtrip_ok) + "/" + std::to_string(trials) +
                                     " random graphs");

  const auto g23 =
      bicayley_graph(spec_from_preset(preset_connection_sets(2, 3)));
  const bool dot_stable = export_dot(g23, "g") == export_dot(g23, "g") &&
                          export_dot(import_json(export_json(g23)), "g") == export_dot(g23, "g");
  const bool edges_stable =
      export_edgelist(g23) == export_edgelist(g23) &&
      export_edgelist(import_json(export_json(g23))) == export_edgelist(g23);
  c.item(dot_stable, "DOT export byte-stable across repeated runs and round-trips");
  c.item(edges_stable, "edgelist export byte-stable across repeated runs and round-trips");
  return c;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, Criterion>> rows;

  // Criteria 1 and 2 share the grader; criterion 2 additionally checks that
  // the two prime orders give the same verdicts.
  auto t0 = Clock::now();
  const auto rep23 = verify_p2q2(2, 3);
  const double secs23 = seconds_since(t0);
  rows.emplace_back("criterion 1: 72-vertex family instance (2,3), full exact suite in under 10 s",
                    grade_small_family(rep23, secs23));

  t0 = Clock::now();
  const auto rep32 = verify_p2q2(3, 2);
  const double secs32 = seconds_since(t0);
  auto crit2 = grade_small_family(rep32, secs32);
  {
    bool same = rep23.claims.size() == rep32.claims.size();
    for (std::size_t i = 0; same && i < rep23.claims.size(); ++i) {
      same = rep23.claims[i].id == rep32.claims[i].id &&
             rep23.claims[i].status == rep32.claims[i].status;
    }
    crit2.item(same, "claim-by-claim verdicts identical to the (2,3) run (role-swap symmetry)");
  }
  rows.emplace_back("criterion 2: prime-swapped instance (3,2) matches the (2,3) verdicts",
                    std::move(crit2));

  Budget medium;
  medium.max_nodes = kWideNodeBudget;
  medium.max_seconds = kChiBudgetSeconds;
  t0 = Clock::now();
  const auto rep25 = verify_p2q2(2, 5, medium);
  const double secs25 = seconds_since(t0);
  rows.emplace_back(
      "criterion 3: 200-vertex instance (2,5), exact structure plus budgeted hard invariants",
      grade_medium_family(rep25, secs25));

  Budget large;
  large.max_nodes = 3'000'000;
  large.max_seconds = 3.0;
  t0 = Clock::now();
  const auto rep35 = verify_p2q2(3, 5, large);
  const double secs35 = seconds_since(t0);
  rows.emplace_back("criterion 4: 450-vertex instance (3,5), BFS-exact structure in under 60 s",
                    grade_large_family(rep35, secs35));

  Criterion crit5;
  grade_construction_instance(rep23, "(2,3)", crit5);
  grade_construction_instance(rep32, "(3,2)", crit5);
  grade_construction_instance(rep25, "(2,5)", crit5);
  rows.emplace_back("criterion 5: every explicit construction matches the exhaustive solver",
                    std::move(crit5));

  rows.emplace_back("criterion 6: four groups x 50 seeded random set pairs, zero failed claims",
                    grade_random_general());
  rows.emplace_back("criterion 7: involution cross-set suite on sym:3, sym:4, dihedral:8",
                    grade_involution_suite());
  rows.emplace_back("criterion 8: independent cross-oracles (complement clique, naive girth)",
                    grade_cross_oracles());
  rows.emplace_back("criterion 9: serialization round-trip and byte-stable exports",
                    grade_serialization());

  int failures = 0;
  for (const auto& [title, crit] : rows) {
    std::printf("[%s] %s\n", crit.ok ? "PASS" : "FAIL", title.c_str());
    for (const auto& line : crit.details) std::printf("%s\n", line.c_str());
    if (!crit.ok) ++failures;
  }
  std::printf("\n%d of %zu criteria passed, %d failed\n", static_cast<int>(rows.size()) - failures,
              rows.size(), failures);
  return failures;
}
