#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicay/graph.hpp"

namespace bicay {

struct Budget {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 60.0;
};

enum class CertificateKind { Coloring, Clique, IndependentSet, Geodesic };

struct Certificate {
  CertificateKind kind = CertificateKind::Clique;
  // Coloring: payload[v] = color of vertex v (size = vertex count).
  // Clique / IndependentSet: sorted vertex list.
  // Geodesic: vertex path in traversal order.
  std::vector<int> payload;
};

struct SolveOutcome {
  int value = 0;
  bool exhaustive = false;  // true = proven optimal, false = budget-limited
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
  // Present whenever a concrete witness exists (best clique / independent
  // set / coloring found). Absent for a pure refutation.
  std::optional<Certificate> certificate;
  // Bracketing interval; both equal `value` when exhaustive. The
  // infeasibility flag records the "no better answer" half of the proof:
  // for maximisation problems, that no larger witness exists; for chromatic
  // number, that (value-1) colors were exhaustively refuted (by search or by
  // a clique of size `value`).
  int lower_bound = 0;
  int upper_bound = 0;
  bool infeasibility_proven = false;
};

// Branch-and-bound maximum clique with greedy-coloring bounds, per component.
SolveOutcome clique_number_exact(const LabeledGraph& g,
                                 const Budget& budget = {});
// Direct branch-and-bound maximum independent set (component decomposition
// first, greedy clique-cover bounds). Not implemented via the complement;
// the complement route exists as an independent cross-check.
SolveOutcome independence_number_exact(const LabeledGraph& g,
                                       const Budget& budget = {});
// Clique lower bound + DSATUR upper bound + descending exhaustive
// k-colorability probes.
SolveOutcome chromatic_number_exact(const LabeledGraph& g,
                                    const Budget& budget = {});
// k-colorability probe: value 1 = colorable (coloring certificate attached),
// value 0 with exhaustive=true = refuted, value 0 with exhaustive=false =
// inconclusive.
SolveOutcome k_colorability(const LabeledGraph& g, int k,
                            const Budget& budget = {});

struct CertificateCheck {
  bool valid = true;
  std::vector<std::string> violations;
};
// Independent re-check of a certificate against the graph.
CertificateCheck validate_certificate(const LabeledGraph& g,
                                      const Certificate& cert);

// All maximal cliques via Bron–Kerbosch with pivoting. Hard-capped on vertex
// count and on the number of cliques produced (throws BudgetExceeded).
std::vector<std::vector<int>> maximal_cliques(const LabeledGraph& g,
                                              int vertex_cap = 64);

}  // namespace bicay
