#include "bicay/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bicay/constructions.hpp"
#include "bicay/errors.hpp"
#include "bicay/graph.hpp"
#include "bicay/isomorphism.hpp"
#include "bicay/metrics.hpp"

namespace bicay {

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Inconclusive: return "inconclusive";
    case ClaimStatus::Diagnostic: return "diagnostic";
  }
  return "fail";
}

const ClaimResult* VerificationReport::find(const std::string& id) const {
  for (const auto& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

namespace {

std::string iso_timestamp() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string int_list(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

void add_note(ClaimResult& c, const std::string& text) {
  if (!c.notes.empty()) c.notes += "; ";
  c.notes += text;
}

// Collects timed claims and assembles the final report.
class Recorder {
 public:
  explicit Recorder(std::string params) { report_.params = std::move(params); }

  template <typename F>
  void claim(const std::string& id, F&& body) {
    ClaimResult c;
    c.id = id;
    const auto t0 = std::chrono::steady_clock::now();
    body(c);
    const auto t1 = std::chrono::steady_clock::now();
    c.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report_.claims.push_back(std::move(c));
  }

  VerificationReport finish() {
    report_.timestamp = iso_timestamp();
    report_.passed = report_.failed = report_.inconclusive = report_.diagnostics = 0;
    for (const auto& c : report_.claims) {
      switch (c.status) {
        case ClaimStatus::Pass: ++report_.passed; break;
        case ClaimStatus::Fail: ++report_.failed; break;
        case ClaimStatus::Inconclusive: ++report_.inconclusive; break;
        case ClaimStatus::Diagnostic: ++report_.diagnostics; break;
      }
    }
    return std::move(report_);
  }

 private:
  VerificationReport report_;
};

void check_eq(ClaimResult& c, std::int64_t expected, std::int64_t computed) {
  c.expected = std::to_string(expected);
  c.computed = std::to_string(computed);
  c.status = expected == computed ? ClaimStatus::Pass : ClaimStatus::Fail;
}

void check_bool(ClaimResult& c, bool expected, bool computed) {
  c.expected = expected ? "true" : "false";
  c.computed = computed ? "true" : "false";
  c.status = expected == computed ? ClaimStatus::Pass : ClaimStatus::Fail;
}

int distinct_colors(const std::vector<int>& coloring) {
  return static_cast<int>(std::set<int>(coloring.begin(), coloring.end()).size());
}

// Triangles whose vertices do not all carry the same side label, counted once
// each (u < v < w).
std::int64_t mixed_triangle_count(const LabeledGraph& g, std::int64_t* total = nullptr) {
  std::int64_t mixed = 0, all = 0;
  for (const auto& [u, v] : g.edges()) {
    auto common = g.row(u) & g.row(v);
    for (auto w = common.find_first(); w != boost::dynamic_bitset<>::npos;
         w = common.find_next(w)) {
      if (static_cast<int>(w) <= v) continue;
      ++all;
      const auto su = g.label(u).side, sv = g.label(v).side,
                 sw = g.label(static_cast<int>(w)).side;
      if (!(su == sv && sv == sw)) ++mixed;
    }
  }
  if (total) *total = all;
  return mixed;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& verts) {
  GraphBuilder b(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) b.set_label(static_cast<int>(i), g.label(verts[i]));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (g.adjacent(verts[i], verts[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return b.build("induced subgraph");
}

std::string outcome_text(const SolveOutcome& out) {
  std::string s = out.exhaustive ? "exhaustive" : "budget-limited";
  s += " (" + std::to_string(out.nodes) + " nodes)";
  return s;
}

// Re-validates a solver witness; on failure downgrades the claim to a hard
// fail, since a bad certificate means the computed value cannot be trusted.
void check_witness(ClaimResult& c, const LabeledGraph& g, const SolveOutcome& out) {
  if (!out.certificate) return;
  const auto chk = validate_certificate(g, *out.certificate);
  if (!chk.valid) {
    c.status = ClaimStatus::Fail;
    add_note(c, "solver witness failed independent validation: " +
                    (chk.violations.empty() ? std::string("unknown") : chk.violations.front()));
  }
}

// Grades "optimum of a maximisation problem equals `expected`".
void grade_max(ClaimResult& c, const SolveOutcome& out, int expected) {
  c.expected = std::to_string(expected);
  c.computed = std::to_string(out.value);
  add_note(c, outcome_text(out));
  if (out.value > expected) {
    c.status = ClaimStatus::Fail;
    add_note(c, "solver witness strictly exceeds the claimed optimum");
    return;
  }
  if (out.exhaustive) {
    c.status = out.value == expected ? ClaimStatus::Pass : ClaimStatus::Fail;
    if (c.status == ClaimStatus::Fail) add_note(c, "exhaustive optimum differs from the claimed value");
    return;
  }
  c.status = ClaimStatus::Inconclusive;
  add_note(c, "bounds [" + std::to_string(out.lower_bound) + "," +
                  std::to_string(out.upper_bound) + "] contain the claim but optimality is unproven");
}

// Grades "chromatic number equals `expected`" from a solver outcome alone.
void grade_chromatic(ClaimResult& c, const SolveOutcome& out, int expected) {
  c.expected = std::to_string(expected);
  add_note(c, outcome_text(out));
  if (out.lower_bound > expected || out.upper_bound < expected) {
    c.computed = "[" + std::to_string(out.lower_bound) + "," + std::to_string(out.upper_bound) + "]";
    c.status = ClaimStatus::Fail;
    add_note(c, "solver bounds exclude the claimed value");
    return;
  }
  if (out.exhaustive) {
    c.computed = std::to_string(out.value);
    c.status = out.value == expected ? ClaimStatus::Pass : ClaimStatus::Fail;
    return;
  }
  c.computed = "[" + std::to_string(out.lower_bound) + "," + std::to_string(out.upper_bound) + "]";
  c.status = ClaimStatus::Inconclusive;
  add_note(c, "undecided within budget");
}

// Chromatic claim proved by a certificate pair: a valid clique of size k
// forces chi >= k, a valid proper coloring with k colors forces chi <= k.
// The solver run is kept as an independent cross-check.
void chi_by_sandwich(ClaimResult& c, const LabeledGraph& g, int k,
                     const std::vector<int>& coloring, const std::vector<int>& clique,
                     const Budget& budget) {
  c.expected = std::to_string(k);
  const auto col_chk = validate_certificate(g, {CertificateKind::Coloring, coloring});
  const auto clq_chk = validate_certificate(g, {CertificateKind::Clique, clique});
  const bool sandwich = col_chk.valid && distinct_colors(coloring) == k && clq_chk.valid &&
                        static_cast<int>(clique.size()) == k;
  const auto out = chromatic_number_exact(g, budget);
  if (!sandwich) {
    grade_chromatic(c, out, k);
    add_note(c, "certificate pair unavailable (construction failed validation); graded from the solver alone");
    return;
  }
  c.computed = std::to_string(k);
  if (out.exhaustive && out.value != k) {
    c.status = ClaimStatus::Fail;
    add_note(c, "solver result " + std::to_string(out.value) + " contradicts the certificate pair");
    return;
  }
  if (!out.exhaustive && (out.lower_bound > k || out.upper_bound < k)) {
    c.status = ClaimStatus::Fail;
    add_note(c, "solver bounds contradict the certificate pair");
    return;
  }
  c.status = ClaimStatus::Pass;
  add_note(c, "proved by explicit " + std::to_string(k) + "-coloring plus " + std::to_string(k) +
                  "-clique; solver cross-check " +
                  (out.exhaustive ? std::string("agrees") : std::string("budget-limited, bounds consistent")));
}

// Grades a maximisation claim that also ships a constructive witness of the
// claimed size; the witness supplies the lower-bound half of the proof.
void grade_max_with_witness(ClaimResult& c, const LabeledGraph& g, const SolveOutcome& out,
                            int expected, const std::vector<int>& witness, CertificateKind kind) {
  const auto chk = validate_certificate(g, {kind, witness});
  if (!chk.valid || static_cast<int>(witness.size()) != expected) {
    c.expected = std::to_string(expected);
    c.computed = "constructive witness invalid";
    c.status = ClaimStatus::Fail;
    add_note(c, chk.valid ? "witness has wrong size " + std::to_string(witness.size())
                          : "witness failed validation: " +
                                (chk.violations.empty() ? std::string("unknown") : chk.violations.front()));
    return;
  }
  grade_max(c, out, expected);
  check_witness(c, g, out);
  if (c.status == ClaimStatus::Inconclusive) {
    add_note(c, "constructive witness of the claimed size stands as a proven lower bound");
  }
}

std::vector<int> union_of(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<int> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// General-group claim battery (S3 = {identity}), shared by the deterministic
// and the randomized suites.
// ---------------------------------------------------------------------------
void append_general_claims(Recorder& rec, const std::string& prefix, const FiniteGroup& g,
                           const std::vector<int>& s1, const std::vector<int>& s2,
                           const Budget& budget) {
  const auto spec = make_bicayley_spec(g, s1, s2, {0});
  const auto graph = bicayley_graph(spec);
  const auto g0 = side_subgraph(graph, 0);
  const auto g1 = side_subgraph(graph, 1);
  const int n = g.order();
  const int a = static_cast<int>(s1.size());
  const int b = static_cast<int>(s2.size());

  const bool conn0 = connected_components(g0).size() == 1;
  const bool conn1 = connected_components(g1).size() == 1;
  const bool conn = connected_components(graph).size() == 1;
  const bool gen1 = static_cast<int>(subgroup_closure(g, s1).members.size()) == n;
  const bool gen2 = static_cast<int>(subgroup_closure(g, s2).members.size()) == n;
  const bool gen_union =
      static_cast<int>(subgroup_closure(g, union_of(s1, s2)).members.size()) == n;

  rec.claim(prefix + "vertex_count", [&](ClaimResult& c) {
    check_eq(c, 2LL * n, graph.vertex_count());
  });

  rec.claim(prefix + "edge_count", [&](ClaimResult& c) {
    check_eq(c, static_cast<std::int64_t>(n) * (a + b + 2) / 2, graph.edge_count());
  });

  rec.claim(prefix + "degrees", [&](ClaimResult& c) {
    c.expected = "side 0: " + std::to_string(a + 1) + ", side 1: " + std::to_string(b + 1);
    bool ok = true;
    for (int v = 0; v < graph.vertex_count(); ++v) {
      const int want = graph.label(v).side == 0 ? a + 1 : b + 1;
      if (graph.degree(v) != want) {
        ok = false;
        add_note(c, "vertex " + std::to_string(v) + " has degree " + std::to_string(graph.degree(v)));
        break;
      }
    }
    c.computed = ok ? c.expected : "deviating degree found";
    c.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim(prefix + "regularity", [&](ClaimResult& c) {
    const auto profile = degree_profile(graph);
    c.expected = a == b ? "regular (|S1| = |S2|)" : "biregular (|S1| != |S2|)";
    const bool want_regular = a == b;
    const bool is_regular = profile.kind == DegreeProfile::Kind::Regular;
    const bool is_biregular = profile.kind == DegreeProfile::Kind::Biregular;
    c.computed = is_regular ? "regular" : is_biregular ? "biregular" : "irregular";
    c.status = (want_regular ? is_regular : is_biregular) ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim(prefix + "side_connectivity", [&](ClaimResult& c) {
    c.expected = "connected(side i) <=> <S_i> = G, both sides";
    c.computed = "side 0: connected=" + std::string(conn0 ? "true" : "false") +
                 " generates=" + (gen1 ? "true" : "false") +
                 "; side 1: connected=" + std::string(conn1 ? "true" : "false") +
                 " generates=" + (gen2 ? "true" : "false");
    c.status = (conn0 == gen1 && conn1 == gen2) ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim(prefix + "connected_if_side_connected", [&](ClaimResult& c) {
    c.expected = "(connected(side 0) or connected(side 1)) => connected";
    const bool holds = !(conn0 || conn1) || conn;
    c.computed = holds ? "implication holds" : "implication violated";
    c.status = holds ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim(prefix + "connected_iff_side_connected", [&](ClaimResult& c) {
    c.expected = "connected <=> (connected(side 0) or connected(side 1))";
    c.computed = "connected=" + std::string(conn ? "true" : "false") +
                 ", side-connected=" + ((conn0 || conn1) ? "true" : "false");
    c.status = (conn == (conn0 || conn1)) ? ClaimStatus::Pass : ClaimStatus::Fail;
    if (c.status == ClaimStatus::Fail) {
      add_note(c, "counterexample: s1=" + int_list(s1) + " s2=" + int_list(s2) +
                      "; the cross matching glues the two coset partitions, so connectivity is "
                      "governed by <S1 u S2> (see the companion union-generation claim)");
    }
  });

  rec.claim(prefix + "connected_iff_union_generates", [&](ClaimResult& c) {
    c.expected = "connected <=> <S1 u S2> = G";
    c.computed = "connected=" + std::string(conn ? "true" : "false") +
                 ", union generates=" + (gen_union ? "true" : "false");
    c.status = (conn == gen_union) ? ClaimStatus::Pass : ClaimStatus::Fail;
    add_note(c, "repaired form of the side-connectivity rule");
  });

  rec.claim(prefix + "eulerian", [&](ClaimResult& c) {
    const auto eu = is_eulerian(graph);
    if (!conn) {
      c.status = ClaimStatus::Diagnostic;
      c.expected = "rule stated for connected instances only";
      c.computed = "graph disconnected; eulerian=" + std::string(eu.eulerian ? "true" : "false");
      add_note(c, "not applicable; recorded as a note, not a failure");
      return;
    }
    check_bool(c, a % 2 == 1 && b % 2 == 1, eu.eulerian);
    c.expected += " (both set sizes odd: " + std::string(a % 2 == 1 && b % 2 == 1 ? "yes" : "no") + ")";
    if (!eu.eulerian) add_note(c, eu.reason);
  });

  rec.claim(prefix + "triangles_same_side", [&](ClaimResult& c) {
    std::int64_t total = 0;
    const auto mixed = mixed_triangle_count(graph, &total);
    c.expected = "0 triangles with vertices on both sides";
    c.computed = std::to_string(mixed) + " mixed of " + std::to_string(total) + " total";
    c.status = mixed == 0 ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim(prefix + "omega_rule", [&](ClaimResult& c) {
    const auto w = clique_number_exact(graph, budget);
    const auto w0 = clique_number_exact(g0, budget);
    const auto w1 = clique_number_exact(g1, budget);
    const int bound = std::max({w0.value, w1.value, 2});
    c.expected = "omega = max{omega(side0), omega(side1), 2}";
    c.computed = "omega=" + std::to_string(w.value) + ", max{" + std::to_string(w0.value) + "," +
                 std::to_string(w1.value) + ",2}=" + std::to_string(bound);
    if (!(w.exhaustive && w0.exhaustive && w1.exhaustive)) {
      c.status = ClaimStatus::Inconclusive;
      add_note(c, "at least one clique search was budget-limited");
      return;
    }
    c.status = w.value == bound ? ClaimStatus::Pass : ClaimStatus::Fail;
    check_witness(c, graph, w);
  });

  rec.claim(prefix + "chi_bounds", [&](ClaimResult& c) {
    const auto x = chromatic_number_exact(graph, budget);
    const auto x0 = chromatic_number_exact(g0, budget);
    const auto x1 = chromatic_number_exact(g1, budget);
    c.expected = "max{chi(side0), chi(side1)} <= chi <= 1 + max";
    if (!(x.exhaustive && x0.exhaustive && x1.exhaustive)) {
      c.computed = "chi in [" + std::to_string(x.lower_bound) + "," + std::to_string(x.upper_bound) +
                   "], sides in [" + std::to_string(x0.lower_bound) + "," +
                   std::to_string(x0.upper_bound) + "] / [" + std::to_string(x1.lower_bound) + "," +
                   std::to_string(x1.upper_bound) + "]";
      c.status = ClaimStatus::Inconclusive;
      add_note(c, "at least one chromatic search was budget-limited");
      return;
    }
    const int m = std::max(x0.value, x1.value);
    c.computed = "chi=" + std::to_string(x.value) + ", max=" + std::to_string(m);
    c.status = (m <= x.value && x.value <= m + 1) ? ClaimStatus::Pass : ClaimStatus::Fail;
  });
}

std::vector<int> sample_symmetric_set(const FiniteGroup& g, std::mt19937& rng) {
  const int n = g.order();
  for (;;) {
    std::set<int> s;
    for (int x = 1; x < n; ++x) {
      if (rng() % 2 == 1) {
        s.insert(x);
        s.insert(g.inverse(x));
      }
    }
    if (!s.empty()) return {s.begin(), s.end()};
  }
}

// Distance contributed by one CRT coordinate inside the side-1 graph:
// 0 if equal, 1 if the residue classes differ (single class-changing jump),
// 2 if same class but unequal (two jumps).
int factor_distance(int part_a, int part_b, int prime) {
  if (part_a == part_b) return 0;
  if (part_a % prime != part_b % prime) return 1;
  return 2;
}

}  // namespace

// ---------------------------------------------------------------------------
// Z_{p^2 q^2} family suite
// ---------------------------------------------------------------------------
VerificationReport verify_p2q2(int p, int q, const Budget& budget) {
  const auto ctx = make_p2q2_context(p, q);
  const auto spec = make_bicayley_spec(ctx.group, ctx.s1.elements, ctx.s2.elements, ctx.s3.elements);
  const auto graph = bicayley_graph(spec);
  const auto g0 = side_subgraph(graph, 0);
  const auto g1 = side_subgraph(graph, 1);
  const int n = ctx.n, k = ctx.k, m = ctx.m;
  const int pq = p * q;

  Recorder rec("p2q2 p=" + std::to_string(p) + " q=" + std::to_string(q) + " n=" + std::to_string(n));

  rec.claim("p2q2.vertex_count", [&](ClaimResult& c) { check_eq(c, 2LL * n, graph.vertex_count()); });

  rec.claim("p2q2.edge_count", [&](ClaimResult& c) {
    check_eq(c, static_cast<std::int64_t>(n) * (p * p + q * q) / 2, graph.edge_count());
  });

  rec.claim("p2q2.degrees", [&](ClaimResult& c) {
    const int d0 = p + q - 1;
    const int d1 = p * (p - 1) + q * (q - 1) + 1;
    const auto profile = degree_profile(graph);
    c.expected = "biregular {" + std::to_string(d0) + "," + std::to_string(d1) + "}, " +
                 std::to_string(n) + " vertices each";
    const bool ok = profile.kind == DegreeProfile::Kind::Biregular &&
                    profile.degree_a == std::min(d0, d1) && profile.degree_b == std::max(d0, d1) &&
                    profile.histogram.size() == 2 && profile.histogram.at(d0) == n &&
                    profile.histogram.at(d1) == n;
    c.computed = ok ? c.expected : "degree profile differs";
    c.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim("p2q2.gamma1_connected", [&](ClaimResult& c) {
    check_eq(c, 1, static_cast<int>(connected_components(g1).size()));
    c.expected = "1 component (side-1 graph connected)";
    c.computed += " component(s)";
  });

  rec.claim("p2q2.connected", [&](ClaimResult& c) {
    check_eq(c, 1, static_cast<int>(connected_components(graph).size()));
    c.expected = "1 component (whole graph connected)";
    c.computed += " component(s)";
  });

  rec.claim("p2q2.eulerian", [&](ClaimResult& c) {
    const auto eu = is_eulerian(graph);
    check_bool(c, false, eu.eulerian);
    c.expected = "false (not Eulerian)";
    add_note(c, eu.reason);
  });

  rec.claim("p2q2.triangles_same_side", [&](ClaimResult& c) {
    std::int64_t total = 0;
    const auto mixed = mixed_triangle_count(graph, &total);
    c.expected = "0 triangles with vertices on both sides";
    c.computed = std::to_string(mixed) + " mixed of " + std::to_string(total) + " total";
    c.status = mixed == 0 ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim("p2q2.girth", [&](ClaimResult& c) {
    const auto gi = girth(graph);
    c.expected = "3";
    c.computed = gi ? std::to_string(*gi) : "acyclic";
    c.status = (gi && *gi == 3) ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim("p2q2.omega", [&](ClaimResult& c) {
    const auto out = clique_number_exact(graph, budget);
    grade_max(c, out, k);
    check_witness(c, graph, out);
  });

  rec.claim("p2q2.omega_gamma0", [&](ClaimResult& c) {
    const auto out = clique_number_exact(g0, budget);
    grade_max_with_witness(c, g0, out, k, coset_clique(ctx, 0), CertificateKind::Clique);
  });

  rec.claim("p2q2.omega_gamma1", [&](ClaimResult& c) {
    const auto out = clique_number_exact(g1, budget);
    grade_max_with_witness(c, g1, out, k, gamma1_clique(ctx), CertificateKind::Clique);
  });

  rec.claim("p2q2.chi_gamma0", [&](ClaimResult& c) {
    chi_by_sandwich(c, g0, k, gamma0_coloring(ctx), coset_clique(ctx, 0), budget);
  });

  rec.claim("p2q2.chi_gamma1", [&](ClaimResult& c) {
    chi_by_sandwich(c, g1, k, gamma1_coloring(ctx), gamma1_clique(ctx), budget);
  });

  SolveOutcome probe;  // k-colorability of the whole graph, shared by two claims
  rec.claim("p2q2.not_k_colorable", [&](ClaimResult& c) {
    probe = k_colorability(graph, k, budget);
    c.expected = "no proper " + std::to_string(k) + "-coloring exists";
    if (probe.value == 1) {
      c.computed = std::to_string(k) + "-coloring found";
      c.status = ClaimStatus::Fail;
      check_witness(c, graph, probe);
      return;
    }
    if (probe.exhaustive) {
      c.computed = "refuted exhaustively";
      c.status = ClaimStatus::Pass;
      add_note(c, outcome_text(probe));
      return;
    }
    c.computed = "undecided";
    c.status = ClaimStatus::Inconclusive;
    add_note(c, "search aborted by budget before refutation; " + outcome_text(probe));
  });

  rec.claim("p2q2.chi", [&](ClaimResult& c) {
    c.expected = std::to_string(k + 1);
    const auto full = full_coloring(ctx);
    const auto chk = validate_certificate(graph, {CertificateKind::Coloring, full});
    if (!chk.valid || distinct_colors(full) != k + 1) {
      c.computed = "constructive coloring invalid";
      c.status = ClaimStatus::Fail;
      return;
    }
    if (probe.value == 1) {
      c.computed = "<= " + std::to_string(k);
      c.status = ClaimStatus::Fail;
      add_note(c, "a " + std::to_string(k) + "-coloring exists (see p2q2.not_k_colorable)");
      return;
    }
    if (probe.exhaustive) {
      c.computed = std::to_string(k + 1);
      c.status = ClaimStatus::Pass;
      add_note(c, "explicit (" + std::to_string(k + 1) + ")-coloring plus exhaustive " +
                      std::to_string(k) + "-colorability refutation");
      return;
    }
    c.computed = "[" + std::to_string(k) + "," + std::to_string(k + 1) + "]";
    c.status = ClaimStatus::Inconclusive;
    add_note(c, "constructive upper bound " + std::to_string(k + 1) +
                    " stands; lower bound rests on the undecided colorability probe");
  });

  rec.claim("p2q2.gamma0_components", [&](ClaimResult& c) {
    const auto comps = connected_components(g0);
    std::set<std::vector<int>> actual(comps.begin(), comps.end());
    std::set<std::vector<int>> predicted;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) predicted.insert(component_elements(ctx, i, j));
    c.expected = std::to_string(pq) + " components equal to the CRT residue grids";
    c.computed = std::to_string(comps.size()) + " components, grid match=" +
                 (actual == predicted ? "exact" : "MISMATCH");
    c.status = (static_cast<int>(comps.size()) == pq && actual == predicted) ? ClaimStatus::Pass
                                                                             : ClaimStatus::Fail;
  });

  rec.claim("p2q2.component_iso", [&](ClaimResult& c) {
    const auto model = component_model(ctx);
    c.expected = "every side-0 component isomorphic to K_" + std::to_string(p) + " x K_" +
                 std::to_string(q) + " (explicit map + structure search)";
    int verified = 0;
    for (int i = 0; i < p && c.status != ClaimStatus::Fail; ++i) {
      for (int j = 0; j < q; ++j) {
        const int base = crt_merge({p, q, i, j});
        const auto mapping = component_isomorphism(ctx, base);
        auto image = mapping;
        std::sort(image.begin(), image.end());
        if (image != component_elements(ctx, i, j)) {
          c.status = ClaimStatus::Fail;
          add_note(c, "explicit map is not a bijection onto component (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
          break;
        }
        bool adj_ok = true;
        for (int u = 0; u < pq && adj_ok; ++u)
          for (int v = u + 1; v < pq; ++v)
            if (model.adjacent(u, v) != g0.adjacent(mapping[u], mapping[v])) {
              adj_ok = false;
              break;
            }
        if (!adj_ok) {
          c.status = ClaimStatus::Fail;
          add_note(c, "explicit map does not preserve adjacency on component (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
          break;
        }
        if (!are_isomorphic(induced_subgraph(g0, component_elements(ctx, i, j)), model)) {
          c.status = ClaimStatus::Fail;
          add_note(c, "structure search found no isomorphism for component (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
          break;
        }
        ++verified;
      }
    }
    c.computed = std::to_string(verified) + "/" + std::to_string(pq) + " components verified";
    if (c.status != ClaimStatus::Fail) c.status = ClaimStatus::Pass;
  });

  rec.claim("p2q2.gamma1_iso", [&](ClaimResult& c) {
    const auto model = gamma1_model(ctx);
    const auto mapping = gamma1_isomorphism(ctx);
    c.expected = "side-1 graph isomorphic to the product of complete multipartite graphs";
    auto image = mapping;
    std::sort(image.begin(), image.end());
    bool bijective = static_cast<int>(image.size()) == n;
    for (int i = 0; bijective && i < n; ++i) bijective = image[i] == i;
    if (!bijective) {
      c.computed = "explicit map not bijective";
      c.status = ClaimStatus::Fail;
      return;
    }
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (g1.adjacent(x, y) != model.adjacent(mapping[x], mapping[y])) {
          c.computed = "adjacency mismatch at (" + std::to_string(x) + "," + std::to_string(y) + ")";
          c.status = ClaimStatus::Fail;
          return;
        }
      }
    }
    c.computed = "explicit bijection preserves adjacency on all pairs";
    c.status = ClaimStatus::Pass;
    if (n <= 150) {
      if (are_isomorphic(g1, model)) {
        add_note(c, "independent structure search agrees");
      } else {
        c.status = ClaimStatus::Fail;
        add_note(c, "structure search contradicts the explicit bijection");
      }
    } else {
      add_note(c, "structure-search cross-check skipped above 150 vertices; the explicit bijection is already a complete proof");
    }
  });

  rec.claim("p2q2.component_diameter", [&](ClaimResult& c) {
    const auto info = diameter(g0);
    c.expected = "every side-0 component has diameter 2";
    bool ok = static_cast<int>(info.component_diameters.size()) == pq;
    for (int d : info.component_diameters) ok = ok && d == 2;
    c.computed = std::to_string(info.component_diameters.size()) + " components, diameters " +
                 int_list(info.component_diameters);
    c.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim("p2q2.component_distance", [&](ClaimResult& c) {
    const auto dist = all_pairs_distances(g0);
    c.expected = "within a component, distance = number of differing CRT coordinates";
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) {
        const auto mapping = component_isomorphism(ctx, crt_merge({p, q, i, j}));
        for (int u = 0; u < pq; ++u) {
          for (int v = u + 1; v < pq; ++v) {
            const int want = (u / q != v / q ? 1 : 0) + (u % q != v % q ? 1 : 0);
            if (dist[mapping[u]][mapping[v]] != want) {
              c.computed = "mismatch in component (" + std::to_string(i) + "," + std::to_string(j) + ")";
              c.status = ClaimStatus::Fail;
              return;
            }
          }
        }
      }
    }
    c.computed = "indicator formula holds on all within-component pairs";
    c.status = ClaimStatus::Pass;
  });

  rec.claim("p2q2.gamma1_diameter", [&](ClaimResult& c) {
    const auto info = diameter(g1);
    c.expected = "4";
    c.computed = info.connected ? std::to_string(info.value) : "disconnected";
    c.status = (info.connected && info.value == 4) ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  std::vector<std::vector<int>> whole_dist;  // shared with the diagnostic claim
  rec.claim("p2q2.diameter", [&](ClaimResult& c) {
    whole_dist = all_pairs_distances(graph);
    int diam = 0;
    for (const auto& row : whole_dist)
      for (int d : row) diam = std::max(diam, d);
    c.expected = "5";
    c.computed = std::to_string(diam);
    c.status = diam == 5 ? ClaimStatus::Pass : ClaimStatus::Fail;
    if (diam == 4) {
      add_note(c,
               "the claimed worst-case pairs admit length-4 routes: one side-0 move aligning the "
               "shared-class coordinate, a cross edge, a single side-1 jump, and a cross edge back; "
               "mixed pairs collapse to <= 3 through the matching. See the companion diagnostic claim "
               "for the observed value");
    }
  });

  rec.claim("p2q2.diameter_observed", [&](ClaimResult& c) {
    std::map<int, std::int64_t> hist;
    int diam = 0;
    const int nv = graph.vertex_count();
    for (int u = 0; u < nv; ++u) {
      for (int v = u + 1; v < nv; ++v) {
        ++hist[whole_dist[u][v]];
        diam = std::max(diam, whole_dist[u][v]);
      }
    }
    c.status = ClaimStatus::Diagnostic;
    c.expected = "-";
    c.computed = "diameter " + std::to_string(diam);
    std::string h;
    for (const auto& [d, count] : hist) {
      if (!h.empty()) h += " ";
      h += std::to_string(d) + ":" + std::to_string(count);
    }
    add_note(c, "distance histogram over unordered pairs: " + h);
  });

  rec.claim("p2q2.alpha_gamma0", [&](ClaimResult& c) {
    const auto out = independence_number_exact(g0, budget);
    grade_max_with_witness(c, g0, out, pq * m, gamma0_independent_max(ctx),
                           CertificateKind::IndependentSet);
  });

  rec.claim("p2q2.alpha_gamma1", [&](ClaimResult& c) {
    const auto out = independence_number_exact(g1, budget);
    grade_max_with_witness(c, g1, out, pq * m, gamma1_independent_max(ctx),
                           CertificateKind::IndependentSet);
  });

  rec.claim("p2q2.alpha", [&](ClaimResult& c) {
    const auto out = independence_number_exact(graph, budget);
    grade_max_with_witness(c, graph, out, 2 * pq * m - m * m, joint_independent_max(ctx),
                           CertificateKind::IndependentSet);
  });

  rec.claim("p2q2.construct.gamma0_coloring", [&](ClaimResult& c) {
    const auto col = gamma0_coloring(ctx);
    const auto chk = validate_certificate(g0, {CertificateKind::Coloring, col});
    c.expected = "proper coloring of the side-0 graph with exactly " + std::to_string(k) + " colors";
    c.computed = (chk.valid ? "proper" : "IMPROPER") + std::string(", ") +
                 std::to_string(distinct_colors(col)) + " colors";
    c.status = (chk.valid && distinct_colors(col) == k) ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim("p2q2.construct.gamma1_coloring", [&](ClaimResult& c) {
    const auto col = gamma1_coloring(ctx);
    const auto chk = validate_certificate(g1, {CertificateKind::Coloring, col});
    c.expected = "proper coloring of the side-1 graph with exactly " + std::to_string(k) + " colors";
    c.computed = (chk.valid ? "proper" : "IMPROPER") + std::string(", ") +
                 std::to_string(distinct_colors(col)) + " colors";
    c.status = (chk.valid && distinct_colors(col) == k) ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim("p2q2.construct.full_coloring", [&](ClaimResult& c) {
    const auto col = full_coloring(ctx);
    const auto chk = validate_certificate(graph, {CertificateKind::Coloring, col});
    c.expected = "proper coloring of the whole graph with exactly " + std::to_string(k + 1) + " colors";
    c.computed = (chk.valid ? "proper" : "IMPROPER") + std::string(", ") +
                 std::to_string(distinct_colors(col)) + " colors";
    c.status = (chk.valid && distinct_colors(col) == k + 1) ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim("p2q2.construct.coset_cliques", [&](ClaimResult& c) {
    c.expected = std::to_string(n) + " order-k subgroup cosets, each a " + std::to_string(k) +
                 "-clique of the side-0 graph";
    int good = 0;
    for (int base = 0; base < n; ++base) {
      const auto clique = coset_clique(ctx, base);
      const auto chk = validate_certificate(g0, {CertificateKind::Clique, clique});
      if (chk.valid && static_cast<int>(clique.size()) == k) ++good;
    }
    c.computed = std::to_string(good) + "/" + std::to_string(n) + " valid";
    c.status = good == n ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim("p2q2.construct.coset_rainbow", [&](ClaimResult& c) {
    const auto col = gamma0_coloring(ctx);
    c.expected = "each coset of the order-k subgroup sees every side-0 color exactly once";
    int good = 0;
    for (int base = 0; base < n; ++base) {
      const auto clique = coset_clique(ctx, base);
      std::set<int> seen;
      for (int v : clique) seen.insert(col[v]);
      if (static_cast<int>(seen.size()) == k) ++good;
    }
    c.computed = std::to_string(good) + "/" + std::to_string(n) + " cosets rainbow";
    c.status = good == n ? ClaimStatus::Pass : ClaimStatus::Fail;
    add_note(c, "the coloring uses exactly k colors, so k distinct colors on a k-set means each exactly once");
  });

  rec.claim("p2q2.construct.gamma1_clique", [&](ClaimResult& c) {
    const auto clique = gamma1_clique(ctx);
    const auto chk = validate_certificate(g1, {CertificateKind::Clique, clique});
    c.expected = "a " + std::to_string(k) + "-clique of the side-1 graph";
    c.computed = (chk.valid ? "clique" : "NOT a clique") + std::string(" of size ") +
                 std::to_string(clique.size());
    c.status = (chk.valid && static_cast<int>(clique.size()) == k) ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim("p2q2.construct.grid_independent", [&](ClaimResult& c) {
    c.expected = std::to_string(pq) + " residue grids, each independent in the side-1 graph, " +
                 std::to_string(pq) + " elements each";
    int good = 0;
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) {
        const auto grid = component_elements(ctx, i, j);
        const auto chk = validate_certificate(g1, {CertificateKind::IndependentSet, grid});
        if (chk.valid && static_cast<int>(grid.size()) == pq) ++good;
      }
    }
    c.computed = std::to_string(good) + "/" + std::to_string(pq) + " valid";
    c.status = good == pq ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim("p2q2.construct.transversals", [&](ClaimResult& c) {
    c.expected = std::to_string(pq) + " diagonal transversals, each independent in the side-0 graph, " +
                 std::to_string(m) + " elements inside the owning grid";
    int good = 0;
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) {
        const auto trans = component_transversal(ctx, i, j);
        const auto grid = component_elements(ctx, i, j);
        const auto chk = validate_certificate(g0, {CertificateKind::IndependentSet, trans});
        const bool inside = std::includes(grid.begin(), grid.end(), trans.begin(), trans.end());
        if (chk.valid && static_cast<int>(trans.size()) == m && inside) ++good;
      }
    }
    c.computed = std::to_string(good) + "/" + std::to_string(pq) + " valid";
    c.status = good == pq ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  return rec.finish();
}

// ---------------------------------------------------------------------------
// General-group suites
// ---------------------------------------------------------------------------
VerificationReport verify_general(const FiniteGroup& g, const std::vector<int>& s1,
                                  const std::vector<int>& s2, const Budget& budget) {
  Recorder rec("general group=" + g.description() + " s1=" + int_list(s1) + " s2=" + int_list(s2));
  append_general_claims(rec, "general.", g, s1, s2, budget);
  return rec.finish();
}

VerificationReport verify_general_random(const FiniteGroup& g, int trials, unsigned seed,
                                         const Budget& budget) {
  if (trials < 1) throw InvalidParameter("trial count must be positive");
  Recorder rec("general-random group=" + g.description() + " trials=" + std::to_string(trials) +
               " seed=" + std::to_string(seed));
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto s1 = sample_symmetric_set(g, rng);
    const auto s2 = sample_symmetric_set(g, rng);
    const std::string tag =
        "t" + std::string(t < 10 ? "0" : "") + std::to_string(t) + ".";
    rec.claim(tag + "sets", [&](ClaimResult& c) {
      c.status = ClaimStatus::Diagnostic;
      c.expected = "-";
      c.computed = "s1=" + int_list(s1) + " s2=" + int_list(s2);
      add_note(c, "inverse-closed identity-free draw, symmetrized uniform sample");
    });
    append_general_claims(rec, tag + "general.", g, s1, s2, budget);
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// Involution suite (S3 = all involutions)
// ---------------------------------------------------------------------------
bool is_involution_separating(const FiniteGroup& g, const std::vector<int>& s) {
  const std::set<int> sset(s.begin(), s.end());
  const auto inv = involutions(g);
  // Rank-1 elementary abelian 2-subgroups {e, t}.
  for (int t : inv) {
    if (sset.count(t)) return false;
  }
  // Rank-2 subgroups {e, t, u, tu} from commuting involution pairs.
  for (std::size_t i = 0; i < inv.size(); ++i) {
    for (std::size_t j = i + 1; j < inv.size(); ++j) {
      const int t = inv[i], u = inv[j];
      if (g.multiply(t, u) != g.multiply(u, t)) continue;
      if (sset.count(g.multiply(t, u))) return false;
    }
  }
  return true;
}

namespace {

bool has_distinct_commuting_pair(const FiniteGroup& g, const std::vector<int>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (elems[i] == elems[j]) continue;
      if (g.multiply(elems[i], elems[j]) == g.multiply(elems[j], elems[i])) return true;
    }
  }
  return false;
}

}  // namespace

VerificationReport verify_involution(const FiniteGroup& g, const std::vector<int>& s1,
                                     const std::vector<int>& s2, const Budget& budget) {
  const auto inv = involutions(g);
  if (inv.empty()) {
    throw InvalidParameter("involution suite requires a group with involutions (even order)");
  }
  const auto spec = make_bicayley_spec(g, s1, s2, inv);
  const auto graph = bicayley_graph(spec);
  const auto g0 = side_subgraph(graph, 0);
  const auto g1 = side_subgraph(graph, 1);
  const auto ce = cross_edge_subgraph(graph);
  const int n = g.order();
  const int ni = static_cast<int>(inv.size());
  const int a = static_cast<int>(s1.size());
  const int b = static_cast<int>(s2.size());

  Recorder rec("involution group=" + g.description() + " s1=" + int_list(s1) + " s2=" +
               int_list(s2) + " s3=involutions" + int_list(inv));

  rec.claim("inv.notation", [&](ClaimResult& c) {
    c.status = ClaimStatus::Diagnostic;
    c.expected = "-";
    c.computed = "side-set interpretation";
    add_note(c,
             "the mixed-clique bound as stated references an otherwise-undefined "
             "connection-set symbol; it is read here as the same-side set (S1 when bounding side 0, "
             "S2 when bounding side 1), because the pairwise products of the cross-adjacency "
             "involutions arise as same-side differences");
  });

  rec.claim("inv.cross_regular", [&](ClaimResult& c) {
    c.expected = "cross-edge subgraph is " + std::to_string(ni) + "-regular";
    bool ok = true;
    for (int v = 0; v < ce.vertex_count() && ok; ++v) ok = ce.degree(v) == ni;
    c.computed = ok ? "all cross-degrees " + std::to_string(ni) : "deviating cross-degree found";
    c.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim("inv.edge_count", [&](ClaimResult& c) {
    check_eq(c, static_cast<std::int64_t>(n) * (a + b + 2 * ni) / 2, graph.edge_count());
  });

  rec.claim("inv.degrees", [&](ClaimResult& c) {
    c.expected = "side 0: " + std::to_string(a + ni) + ", side 1: " + std::to_string(b + ni);
    bool ok = true;
    for (int v = 0; v < graph.vertex_count() && ok; ++v) {
      ok = graph.degree(v) == (graph.label(v).side == 0 ? a + ni : b + ni);
    }
    c.computed = ok ? c.expected : "deviating degree found";
    c.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim("inv.regularity", [&](ClaimResult& c) {
    const auto profile = degree_profile(graph);
    c.expected = a == b ? "regular (|S1| = |S2|)" : "biregular (|S1| != |S2|)";
    const bool is_regular = profile.kind == DegreeProfile::Kind::Regular;
    const bool is_biregular = profile.kind == DegreeProfile::Kind::Biregular;
    c.computed = is_regular ? "regular" : is_biregular ? "biregular" : "irregular";
    c.status = ((a == b) ? is_regular : is_biregular) ? ClaimStatus::Pass : ClaimStatus::Fail;
  });

  rec.claim("inv.ce_connected_iff", [&](ClaimResult& c) {
    const bool conn = connected_components(ce).size() == 1;
    const bool generates = static_cast<int>(subgroup_closure(g, inv).members.size()) == n;
    c.expected = "cross-edge subgraph connected <=> <I(G)> = G";
    c.computed = "connected=" + std::string(conn ? "true" : "false") +
                 ", <I(G)>=G: " + (generates ? "true" : "false");
    c.status = conn == generates ? ClaimStatus::Pass : ClaimStatus::Fail;
    if (c.status == ClaimStatus::Fail) {
      std::vector<int> pair_products;
      for (int x : inv)
        for (int y : inv) pair_products.push_back(g.multiply(x, y));
      const auto products = subgroup_closure(g, pair_products);
      add_note(c, std::to_string(connected_components(ce).size()) +
                      " components; cross-edge reachability is governed by products of two "
                      "involutions, and |<I(G) * I(G)>| = " +
                      std::to_string(products.members.size()) + " of " + std::to_string(n));
    }
  });

  rec.claim("inv.component_partition", [&](ClaimResult& c) {
    const auto h = subgroup_closure(g, union_of(union_of(s1, s2), inv));
    std::set<std::vector<int>> predicted;
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
      if (seen[x]) continue;
      std::vector<int> block;
      for (int hm : h.members) {
        const int y = g.multiply(hm, x);
        seen[y] = true;
        block.push_back(y);
        block.push_back(n + y);
      }
      std::sort(block.begin(), block.end());
      predicted.insert(block);
    }
    const auto comps = connected_components(graph);
    const std::set<std::vector<int>> actual(comps.begin(), comps.end());
    c.expected = "components are exactly the side-doubled cosets of <S1 u S2 u I(G)> (" +
                 std::to_string(predicted.size()) + " blocks)";
    c.computed = std::to_string(comps.size()) + " components, partition match=" +
                 (actual == predicted ? "exact" : "MISMATCH");
    c.status = actual == predicted ? ClaimStatus::Pass : ClaimStatus::Fail;
    if (c.status == ClaimStatus::Fail) {
      add_note(c, "|<S1 u S2 u I(G)>| = " + std::to_string(h.members.size()) +
                      "; the graph walk alternates sides through the involution matching, which can "
                      "preserve an invariant (e.g. permutation sign vs side) that the coset "
                      "prediction ignores");
    }
  });

  const bool sep1 = is_involution_separating(g, s1);
  const bool sep2 = is_involution_separating(g, s2);

  rec.claim("inv.separating", [&](ClaimResult& c) {
    c.status = ClaimStatus::Diagnostic;
    c.expected = "-";
    c.computed = std::string("S1 separating: ") + (sep1 ? "yes" : "no") +
                 "; S2 separating: " + (sep2 ? "yes" : "no");
    add_note(c, "verbatim test: the set meets no nontrivial elementary abelian 2-subgroup "
                "(singleton involutions and commuting involution pairs) outside the identity");
  });

  rec.claim("inv.separating_equiv", [&](ClaimResult& c) {
    const std::set<int> invset(inv.begin(), inv.end());
    const auto no_involution = [&](const std::vector<int>& s) {
      for (int x : s)
        if (invset.count(x)) return false;
      return true;
    };
    const bool equiv = sep1 == no_involution(s1) && sep2 == no_involution(s2);
    c.expected = "verbatim separating test agrees with the equivalent form S ∩ I(G) = ∅";
    c.computed = equiv ? "agree on both sets" : "DISAGREE";
    c.status = equiv ? ClaimStatus::Pass : ClaimStatus::Fail;
    add_note(c, "equivalence holds because every element of an elementary abelian 2-subgroup is "
                "itself an involution");
  });

  rec.claim("inv.mixed_clique_bound", [&](ClaimResult& c) {
    c.expected = "every maximal mixed clique whose cross-partner involutions contain a distinct "
                 "commuting pair has at most 2 vertices on the bounded side";
    if (!sep1 || !sep2) {
      c.status = ClaimStatus::Diagnostic;
      c.computed = "not applicable";
      add_note(c, std::string("separating hypothesis fails (S1: ") + (sep1 ? "yes" : "no") +
                      ", S2: " + (sep2 ? "yes" : "no") + "); claim skipped");
      return;
    }
    if (graph.vertex_count() > 48) {
      c.status = ClaimStatus::Inconclusive;
      c.computed = "graph exceeds the exhaustive clique-enumeration cap (48 vertices)";
      return;
    }
    const auto cliques = maximal_cliques(graph, 48);
    int mixed = 0, triggered = 0;
    bool violated = false;
    for (const auto& clique : cliques) {
      std::vector<int> side0, side1;
      for (int v : clique) (v < n ? side0 : side1).push_back(v < n ? v : v - n);
      if (side0.empty() || side1.empty()) continue;
      ++mixed;
      for (int h : side1) {
        std::vector<int> partners;
        partners.reserve(side0.size());
        for (int x : side0) partners.push_back(g.multiply(x, g.inverse(h)));
        if (has_distinct_commuting_pair(g, partners)) {
          ++triggered;
          if (side0.size() > 2) {
            violated = true;
            add_note(c, "violation: clique " + int_list(clique) + " has " +
                            std::to_string(side0.size()) + " side-0 vertices");
          }
        }
      }
      for (int h : side0) {
        std::vector<int> partners;
        partners.reserve(side1.size());
        for (int y : side1) partners.push_back(g.multiply(g.inverse(h), y));
        if (has_distinct_commuting_pair(g, partners)) {
          ++triggered;
          if (side1.size() > 2) {
            violated = true;
            add_note(c, "violation: clique " + int_list(clique) + " has " +
                            std::to_string(side1.size()) + " side-1 vertices");
          }
        }
      }
    }
    c.computed = std::to_string(cliques.size()) + " maximal cliques, " + std::to_string(mixed) +
                 " mixed, hypothesis triggered " + std::to_string(triggered) + " times, " +
                 (violated ? "violations found" : "no violation");
    c.status = violated ? ClaimStatus::Fail : ClaimStatus::Pass;
    if (triggered == 0) {
      add_note(c, "commuting-pair hypothesis never triggered: two distinct cross-partner "
                  "involutions commute exactly when their product is an involution, and that "
                  "product is a same-side difference lying in the separating (hence "
                  "involution-free) connection set, so the hypothesis cannot fire and the bound "
                  "holds vacuously");
    }
  });

  rec.claim("inv.omega_diagnostic", [&](ClaimResult& c) {
    const auto w = clique_number_exact(graph, budget);
    const auto w0 = clique_number_exact(g0, budget);
    const auto w1 = clique_number_exact(g1, budget);
    const auto wce = clique_number_exact(ce, budget);
    const int bound = std::max({w0.value, w1.value, 4});
    c.status = ClaimStatus::Diagnostic;
    c.expected = "omega <= max{omega(side0), omega(side1), 4} (conditional bound)";
    c.computed = "omega=" + std::to_string(w.value) + ", max{" + std::to_string(w0.value) + "," +
                 std::to_string(w1.value) + ",4}=" + std::to_string(bound) +
                 ", bound " + (w.value <= bound ? "holds" : "VIOLATED") +
                 "; omega(cross-edge subgraph)=" + std::to_string(wce.value);
    add_note(c, "the constant 4 is motivated as a cross-edge clique number, but the "
                "cross-edge subgraph is bipartite (its clique number is 2 whenever it has an edge); "
                "reported as observed, not asserted");
    if (!(w.exhaustive && w0.exhaustive && w1.exhaustive && wce.exhaustive)) {
      add_note(c, "at least one clique search was budget-limited");
    }
  });

  return rec.finish();
}

// ---------------------------------------------------------------------------
// Distance diagnostics for the Z_{p^2 q^2} family
// ---------------------------------------------------------------------------
VerificationReport distance_diagnostics(int p, int q) {
  const auto ctx = make_p2q2_context(p, q);
  const auto spec = make_bicayley_spec(ctx.group, ctx.s1.elements, ctx.s2.elements, ctx.s3.elements);
  const auto graph = bicayley_graph(spec);
  const auto g1 = side_subgraph(graph, 1);
  const int n = ctx.n;

  Recorder rec("distance p=" + std::to_string(p) + " q=" + std::to_string(q));

  std::vector<CrtCoordinates> coords;
  coords.reserve(n);
  for (int x = 0; x < n; ++x) coords.push_back(crt_split(p, q, x));

  const auto dist1 = all_pairs_distances(g1);

  rec.claim("dist.product_law", [&](ClaimResult& c) {
    c.expected = "side-1 distance = factor distance mod p^2 + factor distance mod q^2 "
                 "(0 equal, 1 class change, 2 same class unequal)";
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        const int want = factor_distance(coords[x].p_part, coords[y].p_part, p) +
                         factor_distance(coords[x].q_part, coords[y].q_part, q);
        if (dist1[x][y] != want) {
          c.computed = "mismatch at (" + std::to_string(x) + "," + std::to_string(y) + "): " +
                       std::to_string(dist1[x][y]) + " vs " + std::to_string(want);
          c.status = ClaimStatus::Fail;
          return;
        }
      }
    }
    c.computed = "law holds on all " + std::to_string(static_cast<std::int64_t>(n) * (n - 1) / 2) +
                 " unordered pairs";
    c.status = ClaimStatus::Pass;
  });

  rec.claim("dist.case_table", [&](ClaimResult& c) {
    c.status = ClaimStatus::Diagnostic;
    c.expected = "-";
    // Bucket unordered side-1 pairs by (p-coordinate case, q-coordinate case),
    // where case E = equal, D = different residue class, S = same class unequal.
    const auto case_of = [](int u, int v, int prime) {
      if (u == v) return 'E';
      return u % prime != v % prime ? 'D' : 'S';
    };
    std::map<std::string, std::map<int, std::int64_t>> table;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        std::string key = "p:";
        key += case_of(coords[x].p_part, coords[y].p_part, p);
        key += " q:";
        key += case_of(coords[x].q_part, coords[y].q_part, q);
        ++table[key][dist1[x][y]];
      }
    }
    std::string out;
    for (const auto& [key, hist] : table) {
      if (!out.empty()) out += "; ";
      out += key + " ->";
      for (const auto& [d, count] : hist) out += " " + std::to_string(d) + "(x" + std::to_string(count) + ")";
    }
    c.computed = out;
    add_note(c, "empirical table; the case list as stated contains overlapping conditions (its case 1 "
                "intersects case 4) and duplicated items, so no precedence is asserted");
  });

  rec.claim("dist.gamma0_cross_split", [&](ClaimResult& c) {
    const auto dist = all_pairs_distances(graph);
    std::map<int, std::int64_t> hist;
    int max_cross = 0;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (coords[x].p_part % p == coords[y].p_part % p &&
            coords[x].q_part % q == coords[y].q_part % q) {
          continue;  // same side-0 component
        }
        ++hist[dist[x][y]];
        max_cross = std::max(max_cross, dist[x][y]);
      }
    }
    c.expected = "maximum whole-graph distance over side-0 cross-component pairs = 5";
    c.computed = "maximum " + std::to_string(max_cross);
    c.status = max_cross == 5 ? ClaimStatus::Pass : ClaimStatus::Fail;
    std::string h;
    for (const auto& [d, count] : hist) {
      if (!h.empty()) h += " ";
      h += std::to_string(d) + ":" + std::to_string(count);
    }
    add_note(c, "distance histogram over those pairs: " + h +
                    (hist.count(5) ? "" : "; the 5 bucket is empty"));
  });

  return rec.finish();
}

// ---------------------------------------------------------------------------
// JSON rendering
// ---------------------------------------------------------------------------
std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["toolVersion"] = report.tool_version;
  j["timestamp"] = report.timestamp;
  j["params"] = report.params;
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : report.claims) {
    nlohmann::ordered_json jc;
    jc["claimId"] = c.id;
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    jc["status"] = to_string(c.status);
    jc["notes"] = c.notes;
    jc["elapsedMs"] = c.elapsed_ms;
    j["claims"].push_back(std::move(jc));
  }
  j["summary"] = {{"total", report.claims.size()},
                  {"pass", report.passed},
                  {"fail", report.failed},
                  {"inconclusive", report.inconclusive},
                  {"diagnostic", report.diagnostics},
                  {"allOk", report.all_ok()}};
  return j.dump(2) + "\n";
}

}  // namespace bicay
