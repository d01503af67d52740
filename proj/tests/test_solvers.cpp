#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "bicay/errors.hpp"
#include "bicay/graph.hpp"
#include "bicay/solvers.hpp"

using namespace bicay;

namespace {

LabeledGraph cycle(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build("cycle" + std::to_string(n));
}

LabeledGraph complete(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build("complete" + std::to_string(n));
}

LabeledGraph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, 5 + i);
  }
  return b.build("petersen");
}

// Mycielskian of the 5-cycle: triangle-free with chromatic number 4.
LabeledGraph grotzsch() {
  GraphBuilder b(11);
  for (int i = 0; i < 5; ++i) {
    int j = (i + 1) % 5;
    b.add_edge(i, j);       // outer cycle
    b.add_edge(5 + i, j);   // shadow vertex to cycle neighbors
    b.add_edge(5 + j, i);
    b.add_edge(10, 5 + i);  // apex
  }
  return b.build("grotzsch");
}

LabeledGraph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution flip(p);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) b.add_edge(i, j);
  return b.build("random");
}

// Exhaustive subset-enumeration oracles, deliberately naive (n <= 20).
bool subset_is_clique(const LabeledGraph& g, std::uint32_t mask) {
  for (int i = 0; i < g.vertex_count(); ++i)
    if (mask & (1u << i))
      for (int j = i + 1; j < g.vertex_count(); ++j)
        if ((mask & (1u << j)) && !g.adjacent(i, j)) return false;
  return true;
}

bool subset_is_independent(const LabeledGraph& g, std::uint32_t mask) {
  for (int i = 0; i < g.vertex_count(); ++i)
    if (mask & (1u << i))
      for (int j = i + 1; j < g.vertex_count(); ++j)
        if ((mask & (1u << j)) && g.adjacent(i, j)) return false;
  return true;
}

int brute_clique(const LabeledGraph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (subset_is_clique(g, mask))
      best = std::max(best, std::popcount(mask));
  return best;
}

int brute_independent(const LabeledGraph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (subset_is_independent(g, mask))
      best = std::max(best, std::popcount(mask));
  return best;
}

// Plain backtracking k-colorability with none of the solver's heuristics.
bool brute_colorable(const LabeledGraph& g, int k, int v,
                     std::vector<int>& color) {
  if (v == g.vertex_count()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int w : g.neighbors(v))
      if (w < v && color[static_cast<size_t>(w)] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[static_cast<size_t>(v)] = c;
    if (brute_colorable(g, k, v + 1, color)) return true;
  }
  color[static_cast<size_t>(v)] = -1;
  return false;
}

int brute_chromatic(const LabeledGraph& g) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
    if (brute_colorable(g, k, 0, color)) return k;
  }
}

void check_valid(const LabeledGraph& g, const SolveOutcome& out,
                 CertificateKind kind) {
  REQUIRE(out.certificate.has_value());
  CHECK(out.certificate->kind == kind);
  auto chk = validate_certificate(g, *out.certificate);
  for (const auto& v : chk.violations) INFO(v);
  CHECK(chk.valid);
}

}  // namespace

TEST_CASE("clique number on fixtures") {
  auto k5 = clique_number_exact(complete(5));
  CHECK(k5.value == 5);
  CHECK(k5.exhaustive);
  check_valid(complete(5), k5, CertificateKind::Clique);

  CHECK(clique_number_exact(cycle(5)).value == 2);
  CHECK(clique_number_exact(petersen()).value == 2);
  CHECK(clique_number_exact(complete_multipartite({2, 2, 2})).value == 3);
  CHECK(clique_number_exact(complete_multipartite({7})).value == 1);
  CHECK(clique_number_exact(complete_multipartite({7})).infeasibility_proven);
}

TEST_CASE("independence number on fixtures") {
  CHECK(independence_number_exact(complete(5)).value == 1);
  CHECK(independence_number_exact(cycle(5)).value == 2);
  auto pet = independence_number_exact(petersen());
  CHECK(pet.value == 4);
  CHECK(pet.exhaustive);
  check_valid(petersen(), pet, CertificateKind::IndependentSet);
  CHECK(independence_number_exact(complete_multipartite({3, 4})).value == 4);
}

TEST_CASE("chromatic number on fixtures") {
  CHECK(chromatic_number_exact(complete(6)).value == 6);
  CHECK(chromatic_number_exact(cycle(6)).value == 2);
  CHECK(chromatic_number_exact(cycle(7)).value == 3);
  auto pet = chromatic_number_exact(petersen());
  CHECK(pet.value == 3);
  CHECK(pet.exhaustive);
  CHECK(pet.lower_bound == 3);
  CHECK(pet.upper_bound == 3);
  check_valid(petersen(), pet, CertificateKind::Coloring);
  // The coloring payload uses exactly the reported number of colors.
  std::set<int> used(pet.certificate->payload.begin(),
                     pet.certificate->payload.end());
  CHECK(static_cast<int>(used.size()) == pet.value);

  // Triangle-free but 4-chromatic: the proof must come from search, not a
  // clique witness.
  auto gz = chromatic_number_exact(grotzsch());
  CHECK(gz.value == 4);
  CHECK(gz.exhaustive);
  CHECK(gz.infeasibility_proven);
}

TEST_CASE("solvers agree with subset-enumeration oracles on random graphs") {
  for (unsigned seed = 1; seed <= 25; ++seed) {
    int n = 10 + static_cast<int>(seed % 7);
    double p = (seed % 3 == 0) ? 0.3 : (seed % 3 == 1) ? 0.5 : 0.7;
    LabeledGraph g = random_graph(n, p, 1000 + seed);
    CAPTURE(seed);
    auto cq = clique_number_exact(g);
    auto is = independence_number_exact(g);
    REQUIRE(cq.exhaustive);
    REQUIRE(is.exhaustive);
    CHECK(cq.value == brute_clique(g));
    CHECK(is.value == brute_independent(g));
    check_valid(g, cq, CertificateKind::Clique);
    check_valid(g, is, CertificateKind::IndependentSet);
  }
}

TEST_CASE("chromatic solver agrees with plain backtracking oracle") {
  for (unsigned seed = 1; seed <= 15; ++seed) {
    int n = 8 + static_cast<int>(seed % 5);
    LabeledGraph g = random_graph(n, 0.45, 2000 + seed);
    CAPTURE(seed);
    auto chi = chromatic_number_exact(g);
    REQUIRE(chi.exhaustive);
    CHECK(chi.value == brute_chromatic(g));
    check_valid(g, chi, CertificateKind::Coloring);
  }
}

TEST_CASE("independence equals clique number of the complement") {
  for (unsigned seed = 1; seed <= 12; ++seed) {
    LabeledGraph g = random_graph(30 + static_cast<int>(seed), 0.4,
                                  3000 + seed);
    CAPTURE(seed);
    auto is = independence_number_exact(g);
    auto cq = clique_number_exact(complement(g));
    REQUIRE(is.exhaustive);
    REQUIRE(cq.exhaustive);
    CHECK(is.value == cq.value);
  }
}

TEST_CASE("k-colorability answers all three ways") {
  auto yes = k_colorability(cycle(5), 3);
  CHECK(yes.value == 1);
  CHECK(yes.exhaustive);
  check_valid(cycle(5), yes, CertificateKind::Coloring);

  auto no = k_colorability(cycle(5), 2);
  CHECK(no.value == 0);
  CHECK(no.exhaustive);
  CHECK(no.infeasibility_proven);
  CHECK(!no.certificate.has_value());

  CHECK(k_colorability(complete(4), 3).value == 0);
  CHECK(k_colorability(complete(4), 4).value == 1);
  CHECK(k_colorability(petersen(), 3).value == 1);

  // A clique larger than k refutes soundly even under a tiny node budget.
  Budget tiny{.max_nodes = 1, .max_seconds = 60.0};
  auto via_clique = k_colorability(complete(6), 5, tiny);
  CHECK(via_clique.value == 0);
  CHECK(via_clique.exhaustive);

  // Triangle-free refutations need real search, so a vanishing budget must
  // come back inconclusive, never a fake refutation.
  LabeledGraph gz = grotzsch();
  auto full = k_colorability(gz, 3);
  CHECK(full.value == 0);
  CHECK(full.exhaustive);
  auto stuck = k_colorability(gz, 3, tiny);
  CHECK(stuck.value == 0);
  CHECK(!stuck.exhaustive);
  CHECK(!stuck.infeasibility_proven);
}

TEST_CASE("budget-limited runs stay honest") {
  LabeledGraph g = random_graph(60, 0.5, 99);
  Budget tiny{.max_nodes = 50, .max_seconds = 60.0};
  auto cq = clique_number_exact(g, tiny);
  CHECK(!cq.exhaustive);
  CHECK(cq.value >= 1);  // still reports the best clique found
  check_valid(g, cq, CertificateKind::Clique);
  auto chi = chromatic_number_exact(g, tiny);
  CHECK(!chi.exhaustive);
  CHECK(chi.lower_bound <= chi.upper_bound);
  CHECK(chi.value == chi.upper_bound);
  check_valid(g, chi, CertificateKind::Coloring);
}

TEST_CASE("solvers are deterministic") {
  LabeledGraph g = random_graph(24, 0.5, 4242);
  auto a = clique_number_exact(g);
  auto b = clique_number_exact(g);
  CHECK(a.value == b.value);
  CHECK(a.nodes == b.nodes);
  CHECK(a.certificate->payload == b.certificate->payload);
  auto c1 = chromatic_number_exact(g);
  auto c2 = chromatic_number_exact(g);
  CHECK(c1.value == c2.value);
  CHECK(c1.certificate->payload == c2.certificate->payload);
}

TEST_CASE("certificate validation catches corrupt witnesses") {
  LabeledGraph g = cycle(4);
  Certificate bad_clique{CertificateKind::Clique, {0, 1, 2}};
  auto chk = validate_certificate(g, bad_clique);
  CHECK(!chk.valid);
  CHECK(!chk.violations.empty());

  Certificate bad_set{CertificateKind::IndependentSet, {0, 1}};
  CHECK(!validate_certificate(g, bad_set).valid);

  Certificate bad_coloring{CertificateKind::Coloring, {0, 0, 1, 1}};
  CHECK(!validate_certificate(g, bad_coloring).valid);
  Certificate short_coloring{CertificateKind::Coloring, {0, 1}};
  CHECK(!validate_certificate(g, short_coloring).valid);
  Certificate oob{CertificateKind::Clique, {0, 9}};
  CHECK(!validate_certificate(g, oob).valid);

  Certificate good{CertificateKind::Coloring, {0, 1, 0, 1}};
  CHECK(validate_certificate(g, good).valid);
}

TEST_CASE("maximal clique enumeration") {
  // Triangle 0-1-2 with a pendant edge 2-3.
  GraphBuilder b(4);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(0, 2);
  b.add_edge(2, 3);
  auto cliques = maximal_cliques(b.build("paw"));
  REQUIRE(cliques.size() == 2);
  CHECK(cliques[0] == std::vector<int>{0, 1, 2});
  CHECK(cliques[1] == std::vector<int>{2, 3});

  // Petersen is triangle-free: the maximal cliques are exactly its edges.
  CHECK(maximal_cliques(petersen()).size() == 15);
  CHECK(maximal_cliques(complete(4)).size() == 1);

  CHECK_THROWS_AS(maximal_cliques(random_graph(70, 0.2, 5), 64),
                  BudgetExceeded);
}

TEST_CASE("solver results on the small bi-cayley instance") {
  BiCayleySpec spec = spec_from_preset(preset_connection_sets(2, 3));
  LabeledGraph gamma = bicayley_graph(spec);
  LabeledGraph g0 = side_subgraph(gamma, 0);
  LabeledGraph g1 = side_subgraph(gamma, 1);
  CHECK(clique_number_exact(gamma).value == 3);
  CHECK(chromatic_number_exact(g0).value == 3);
  CHECK(chromatic_number_exact(g1).value == 3);
  CHECK(chromatic_number_exact(gamma).value == 4);
  CHECK(independence_number_exact(g0).value == 12);
  CHECK(independence_number_exact(g1).value == 12);
  CHECK(independence_number_exact(gamma).value == 20);
  auto probe = k_colorability(gamma, 3);
  CHECK(probe.value == 0);
  CHECK(probe.exhaustive);
}
