#include "bicay/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include "bicay/errors.hpp"
#include "bicay/metrics.hpp"

namespace bicay {

namespace {

using Bitset = boost::dynamic_bitset<>;
using Clock = std::chrono::steady_clock;

struct BudgetTracker {
  explicit BudgetTracker(const Budget& b)
      : budget(b), start(Clock::now()) {}
  Budget budget;
  Clock::time_point start;
  std::uint64_t nodes = 0;
  bool exhausted_flag = false;

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
  }
  // Counts one search node; returns false once the budget is gone.
  bool tick() {
    if (exhausted_flag) return false;
    ++nodes;
    if (nodes > budget.max_nodes ||
        ((nodes & 2047) == 0 && elapsed_ms() > budget.max_seconds * 1000.0))
      exhausted_flag = true;
    return !exhausted_flag;
  }
  bool ok() const { return !exhausted_flag; }
};

// Induced subgraph with local bitset adjacency; local vertex i corresponds to
// global[i]. For clique and coloring searches vertices are reordered by
// (degree desc, index asc) so greedy classes in the bounds are built from
// high-degree vertices first; the independent-set search wants the opposite
// order, because there the greedy cover classes play the role that color
// classes play on the complement graph.
struct SubGraph {
  int n = 0;
  std::vector<int> global;
  std::vector<Bitset> adj;
};

SubGraph induce(const LabeledGraph& g, std::vector<int> verts,
                bool degree_ascending = false) {
  std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b))
      return degree_ascending ? g.degree(a) < g.degree(b)
                              : g.degree(a) > g.degree(b);
    return a < b;
  });
  SubGraph s;
  s.n = static_cast<int>(verts.size());
  s.global = verts;
  s.adj.assign(s.n, Bitset(s.n));
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < s.n; ++i) local[verts[i]] = i;
  for (int i = 0; i < s.n; ++i)
    for (int w : g.neighbors(verts[i]))
      if (local[w] >= 0) s.adj[i].set(local[w]);
  return s;
}

// ---------------------------------------------------------------------------
// Maximum clique (Tomita-style: greedy coloring bound, reverse color order).

struct CliqueSearch {
  const SubGraph& g;
  BudgetTracker& tracker;
  std::vector<int> best;
  std::vector<int> current;

  void expand(Bitset p) {
    if (!tracker.tick()) return;
    if (p.none()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    // Greedy coloring of p; vertices listed class by class.
    std::vector<std::pair<int, int>> order;  // (vertex, color)
    {
      Bitset rest = p;
      int color = 0;
      while (rest.any()) {
        ++color;
        Bitset cls = rest;
        while (cls.any()) {
          const auto v = cls.find_first();
          order.emplace_back(static_cast<int>(v), color);
          rest.reset(v);
          cls.reset(v);
          cls -= g.adj[v];
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto [v, color] = *it;
      if (current.size() + color <= best.size()) return;
      if (!tracker.ok()) return;
      current.push_back(v);
      expand(p & g.adj[v]);
      current.pop_back();
      p.reset(v);
    }
  }
};

// Deterministic greedy clique for a warm start.
std::vector<int> greedy_clique(const SubGraph& g) {
  std::vector<int> clique;
  Bitset cand(g.n);
  cand.set();
  while (cand.any()) {
    int pick = -1;
    std::size_t pick_deg = 0;
    for (auto v = cand.find_first(); v != Bitset::npos;
         v = cand.find_next(v)) {
      const std::size_t d = (g.adj[v] & cand).count();
      if (pick < 0 || d > pick_deg) {
        pick = static_cast<int>(v);
        pick_deg = d;
      }
    }
    clique.push_back(pick);
    cand &= g.adj[pick];
  }
  return clique;
}

// ---------------------------------------------------------------------------
// Maximum independent set (reduce, then mirror the clique search).
//
// Forced takes applied to a fixpoint at every node, each preserving at least
// one maximum set:
//   * a vertex with no candidate neighbours is always taken;
//   * a vertex with one candidate neighbour can be taken in place of that
//     neighbour without loss;
//   * a degree-two vertex whose neighbours are adjacent beats either of them;
//   * once every remaining degree is exactly two the candidates are disjoint
//     cycles, where any fixed vertex extends to some maximum set (and the
//     pendant rule then unwinds the rest of its cycle).
// What survives is branched in reverse greedy-clique-cover order: an
// independent set takes at most one vertex per cover class, so once the
// class index can no longer beat the incumbent the remaining branches are
// pruned wholesale.

struct MisSearch {
  const SubGraph& g;
  BudgetTracker& tracker;
  std::vector<int> best;
  std::vector<int> current;

  void expand(Bitset p) {
    if (!tracker.tick()) return;
    const std::size_t mark = current.size();
    bool changed = true;
    while (changed && p.any()) {
      changed = false;
      bool all_degree_two = true;
      for (auto v = p.find_first(); v != Bitset::npos; v = p.find_next(v)) {
        const Bitset nbrs = g.adj[v] & p;
        const std::size_t deg = nbrs.count();
        if (deg == 0) {
          current.push_back(static_cast<int>(v));
          p.reset(v);
          changed = true;
        } else if (deg == 1) {
          current.push_back(static_cast<int>(v));
          p.reset(v);
          p.reset(nbrs.find_first());
          changed = true;
        } else if (deg == 2) {
          const auto a = nbrs.find_first();
          const auto b = nbrs.find_next(a);
          if (g.adj[a].test(b)) {
            current.push_back(static_cast<int>(v));
            p.reset(v);
            p.reset(a);
            p.reset(b);
            changed = true;
          }
        } else {
          all_degree_two = false;
        }
      }
      if (!changed && all_degree_two && p.any()) {
        const auto v = p.find_first();
        current.push_back(static_cast<int>(v));
        p -= g.adj[v];
        p.reset(v);
        changed = true;
      }
    }
    if (p.none()) {
      if (current.size() > best.size()) best = current;
      current.resize(mark);
      return;
    }
    std::vector<std::pair<int, int>> order;  // (vertex, cover class)
    {
      Bitset rest = p;
      int cls = 0;
      while (rest.any()) {
        ++cls;
        Bitset clique = rest;
        while (clique.any()) {
          const auto v = clique.find_first();
          order.emplace_back(static_cast<int>(v), cls);
          rest.reset(v);
          clique.reset(v);
          clique &= g.adj[v];
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto [v, cls] = *it;
      if (current.size() + cls <= best.size()) break;
      if (!tracker.ok()) break;
      current.push_back(v);
      Bitset next = p;
      next -= g.adj[v];
      next.reset(v);
      expand(next);
      current.pop_back();
      p.reset(v);
    }
    current.resize(mark);
  }
};

// Min-degree greedy independent set restricted to a candidate set.
std::vector<int> greedy_independent_in(const SubGraph& g, Bitset cand) {
  std::vector<int> set;
  while (cand.any()) {
    int pick = -1;
    std::size_t pick_deg = 0;
    for (auto v = cand.find_first(); v != Bitset::npos;
         v = cand.find_next(v)) {
      const std::size_t d = (g.adj[v] & cand).count();
      if (pick < 0 || d < pick_deg) {
        pick = static_cast<int>(v);
        pick_deg = d;
      }
    }
    set.push_back(pick);
    cand -= g.adj[pick];
    cand.reset(pick);
  }
  return set;
}

std::vector<int> greedy_independent_set(const SubGraph& g) {
  Bitset all(g.n);
  all.set();
  return greedy_independent_in(g, all);
}

// ---------------------------------------------------------------------------
// Coloring machinery.

constexpr int kMaxColors = 63;

// DSATUR greedy: deterministic (saturation desc, degree desc, index asc).
std::vector<int> dsatur_greedy(const SubGraph& g, int& colors_used) {
  std::vector<int> color(g.n, -1);
  std::vector<std::uint64_t> forbidden(g.n, 0);
  colors_used = 0;
  for (int step = 0; step < g.n; ++step) {
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < g.n; ++v) {
      if (color[v] >= 0) continue;
      const int sat = std::popcount(forbidden[v]);
      const int deg = static_cast<int>(g.adj[v].count());
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    int c = std::countr_one(forbidden[pick]);  // lowest free color
    color[pick] = c;
    colors_used = std::max(colors_used, c + 1);
    for (auto w = g.adj[pick].find_first(); w != Bitset::npos;
         w = g.adj[pick].find_next(w))
      if (c < kMaxColors) forbidden[w] |= (1ULL << c);
  }
  return color;
}

enum class ProbeResult { Sat, Unsat, Abort };

// Exhaustive k-colorability with clique seeding and ordered-new-color
// symmetry breaking, DSATUR branching.
struct ColorProbe {
  const SubGraph& g;
  int k;
  BudgetTracker& tracker;
  std::vector<int> color;
  std::vector<std::vector<int>> nbr_color_count;  // [v][c]
  std::vector<std::uint64_t> forbidden;
  int uncolored = 0;

  ProbeResult run(const std::vector<int>& seed_clique) {
    if (k < 0) return ProbeResult::Unsat;
    if (g.n == 0) return ProbeResult::Sat;
    if (k == 0) return ProbeResult::Unsat;
    if (k > kMaxColors)
      throw InvalidParameter("colorability probe supports at most 63 colors");
    if (static_cast<int>(seed_clique.size()) > k) return ProbeResult::Unsat;
    color.assign(g.n, -1);
    nbr_color_count.assign(g.n, std::vector<int>(k, 0));
    forbidden.assign(g.n, 0);
    uncolored = g.n;
    int max_used = -1;
    for (int i = 0; i < static_cast<int>(seed_clique.size()); ++i) {
      assign(seed_clique[i], i);
      max_used = i;
    }
    return dive(max_used);
  }

  void assign(int v, int c) {
    color[v] = c;
    --uncolored;
    for (auto w = g.adj[v].find_first(); w != Bitset::npos;
         w = g.adj[v].find_next(w)) {
      if (nbr_color_count[w][c]++ == 0) forbidden[w] |= (1ULL << c);
    }
  }
  void unassign(int v, int c) {
    color[v] = -1;
    ++uncolored;
    for (auto w = g.adj[v].find_first(); w != Bitset::npos;
         w = g.adj[v].find_next(w)) {
      if (--nbr_color_count[w][c] == 0) forbidden[w] &= ~(1ULL << c);
    }
  }

  ProbeResult dive(int max_used) {
    if (!tracker.tick()) return ProbeResult::Abort;
    if (uncolored == 0) return ProbeResult::Sat;
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < g.n; ++v) {
      if (color[v] >= 0) continue;
      const int sat = std::popcount(forbidden[v]);
      const int deg = static_cast<int>(g.adj[v].count());
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    // Colors 0..max_used plus one fresh color, never more than k.
    const int limit = std::min(k, max_used + 2);
    std::uint64_t avail =
        ~forbidden[pick] & ((limit >= 64) ? ~0ULL : ((1ULL << limit) - 1));
    while (avail) {
      const int c = std::countr_zero(avail);
      avail &= avail - 1;
      assign(pick, c);
      const ProbeResult r = dive(std::max(max_used, c));
      if (r != ProbeResult::Unsat) {
        if (r == ProbeResult::Abort) unassign(pick, c);
        return r;  // Sat keeps the assignment in `color`
      }
      unassign(pick, c);
    }
    return ProbeResult::Unsat;
  }
};

// ---------------------------------------------------------------------------
// Component-decomposed drivers.

SolveOutcome finish(SolveOutcome out, const BudgetTracker& tracker) {
  out.nodes = tracker.nodes;
  out.elapsed_ms = tracker.elapsed_ms();
  return out;
}

}  // namespace

SolveOutcome clique_number_exact(const LabeledGraph& g, const Budget& budget) {
  BudgetTracker tracker(budget);
  SolveOutcome out;
  std::vector<int> best_global;
  for (const auto& comp : connected_components(g)) {
    const SubGraph sub = induce(g, comp);
    CliqueSearch search{sub, tracker, greedy_clique(sub), {}};
    Bitset all(sub.n);
    all.set();
    search.expand(all);
    if (search.best.size() > best_global.size()) {
      best_global.clear();
      for (int v : search.best) best_global.push_back(sub.global[v]);
    }
  }
  std::sort(best_global.begin(), best_global.end());
  out.value = static_cast<int>(best_global.size());
  out.certificate = Certificate{CertificateKind::Clique,
                                std::move(best_global)};
  out.exhaustive = tracker.ok();
  out.lower_bound = out.value;
  out.upper_bound = out.exhaustive ? out.value : g.vertex_count();
  out.infeasibility_proven = out.exhaustive;
  return finish(std::move(out), tracker);
}

SolveOutcome independence_number_exact(const LabeledGraph& g,
                                       const Budget& budget) {
  BudgetTracker tracker(budget);
  SolveOutcome out;
  std::vector<int> union_set;
  for (const auto& comp : connected_components(g)) {
    // Per-component optimum; the union over components is optimal because
    // components are independent of one another.
    const SubGraph sub = induce(g, comp, /*degree_ascending=*/true);
    MisSearch search{sub, tracker, greedy_independent_set(sub), {}};
    Bitset all(sub.n);
    all.set();
    search.expand(all);
    for (int v : search.best) union_set.push_back(sub.global[v]);
  }
  std::sort(union_set.begin(), union_set.end());
  out.value = static_cast<int>(union_set.size());
  out.certificate = Certificate{CertificateKind::IndependentSet,
                                std::move(union_set)};
  out.exhaustive = tracker.ok();
  out.lower_bound = out.value;
  out.upper_bound = out.exhaustive ? out.value : g.vertex_count();
  out.infeasibility_proven = out.exhaustive;
  return finish(std::move(out), tracker);
}

SolveOutcome k_colorability(const LabeledGraph& g, int k,
                            const Budget& budget) {
  BudgetTracker tracker(budget);
  SolveOutcome out;
  std::vector<int> coloring(static_cast<size_t>(g.vertex_count()), -1);
  bool refuted = false, aborted = false;
  for (const auto& comp : connected_components(g)) {
    const SubGraph sub = induce(g, comp);
    // Clique seed for symmetry breaking (own small budget slice).
    BudgetTracker seed_tracker(Budget{std::max<std::uint64_t>(
                                          budget.max_nodes / 10, 10000),
                                      budget.max_seconds / 10});
    CliqueSearch seed{sub, seed_tracker, greedy_clique(sub), {}};
    Bitset all(sub.n);
    all.set();
    seed.expand(all);
    tracker.nodes += seed_tracker.nodes;
    ColorProbe probe{sub, k, tracker, {}, {}, {}, 0};
    const ProbeResult r = probe.run(seed.best);
    if (r == ProbeResult::Unsat) {
      refuted = true;
      break;
    }
    if (r == ProbeResult::Abort) {
      aborted = true;
      break;
    }
    for (int i = 0; i < sub.n; ++i)
      coloring[static_cast<size_t>(sub.global[i])] = probe.color[i];
  }
  if (refuted) {
    out.value = 0;
    out.exhaustive = true;
    out.infeasibility_proven = true;
  } else if (aborted) {
    out.value = 0;
    out.exhaustive = false;
  } else {
    out.value = 1;
    out.exhaustive = true;
    out.certificate = Certificate{CertificateKind::Coloring,
                                  std::move(coloring)};
  }
  return finish(std::move(out), tracker);
}

SolveOutcome chromatic_number_exact(const LabeledGraph& g,
                                    const Budget& budget) {
  BudgetTracker tracker(budget);
  SolveOutcome out;
  std::vector<int> merged(static_cast<size_t>(g.vertex_count()), 0);
  int lb_total = 0, ub_total = 0;
  bool all_exact = true;
  bool any_search_refutation = false, any_clique_tight = false;
  for (const auto& comp : connected_components(g)) {
    const SubGraph sub = induce(g, comp);
    int ub = 0;
    std::vector<int> best_coloring = dsatur_greedy(sub, ub);
    // Clique lower bound (valid even if the clique search is truncated).
    BudgetTracker lb_tracker(Budget{std::max<std::uint64_t>(
                                        budget.max_nodes / 10, 10000),
                                    budget.max_seconds / 10});
    CliqueSearch clique{sub, lb_tracker, greedy_clique(sub), {}};
    Bitset all(sub.n);
    all.set();
    clique.expand(all);
    tracker.nodes += lb_tracker.nodes;
    const std::vector<int> seed = clique.best;
    int lb = static_cast<int>(seed.size());
    bool exact = lb >= ub;
    if (exact && lb == ub) any_clique_tight = true;
    for (int k = ub - 1; k >= lb && !exact; --k) {
      ColorProbe probe{sub, k, tracker, {}, {}, {}, 0};
      const ProbeResult r = probe.run(seed);
      if (r == ProbeResult::Sat) {
        ub = k;
        best_coloring = probe.color;
        if (ub == lb) {
          exact = true;
          any_clique_tight = true;
        }
      } else if (r == ProbeResult::Unsat) {
        lb = k + 1;
        exact = true;
        any_search_refutation = true;
      } else {
        all_exact = false;
        break;
      }
    }
    if (!tracker.ok()) all_exact = false;
    lb_total = std::max(lb_total, lb);
    ub_total = std::max(ub_total, ub);
    for (int i = 0; i < sub.n; ++i)
      merged[static_cast<size_t>(sub.global[i])] = best_coloring[i];
  }
  out.certificate = Certificate{CertificateKind::Coloring, std::move(merged)};
  out.value = ub_total;
  out.lower_bound = lb_total;
  out.upper_bound = ub_total;
  out.exhaustive = all_exact && lb_total == ub_total;
  out.infeasibility_proven =
      out.exhaustive && (any_search_refutation || any_clique_tight ||
                         out.value <= 1);
  return finish(std::move(out), tracker);
}

CertificateCheck validate_certificate(const LabeledGraph& g,
                                      const Certificate& cert) {
  CertificateCheck check;
  auto flag = [&](std::string msg) {
    check.valid = false;
    check.violations.push_back(std::move(msg));
  };
  const int n = g.vertex_count();
  auto in_range = [&](int v) { return v >= 0 && v < n; };
  switch (cert.kind) {
    case CertificateKind::Coloring: {
      if (static_cast<int>(cert.payload.size()) != n) {
        flag("coloring must assign a color to every vertex");
        break;
      }
      for (int v = 0; v < n; ++v)
        if (cert.payload[v] < 0) flag("vertex " + std::to_string(v) +
                                      " has no color");
      for (auto [u, v] : g.edges())
        if (cert.payload[u] == cert.payload[v] && cert.payload[u] >= 0)
          flag("edge (" + std::to_string(u) + "," + std::to_string(v) +
               ") endpoints share color " + std::to_string(cert.payload[u]));
      break;
    }
    case CertificateKind::Clique:
    case CertificateKind::IndependentSet: {
      const bool want_adjacent = cert.kind == CertificateKind::Clique;
      for (int v : cert.payload)
        if (!in_range(v)) flag("vertex " + std::to_string(v) + " out of range");
      if (!check.valid) break;
      for (std::size_t i = 0; i < cert.payload.size(); ++i)
        for (std::size_t j = i + 1; j < cert.payload.size(); ++j) {
          const int u = cert.payload[i], v = cert.payload[j];
          if (u == v) {
            flag("vertex " + std::to_string(u) + " listed twice");
            continue;
          }
          if (g.adjacent(u, v) != want_adjacent)
            flag("pair (" + std::to_string(u) + "," + std::to_string(v) +
                 (want_adjacent ? ") not adjacent" : ") adjacent"));
        }
      break;
    }
    case CertificateKind::Geodesic: {
      for (int v : cert.payload)
        if (!in_range(v)) flag("vertex " + std::to_string(v) + " out of range");
      if (!check.valid) break;
      for (std::size_t i = 0; i + 1 < cert.payload.size(); ++i)
        if (!g.adjacent(cert.payload[i], cert.payload[i + 1]))
          flag("consecutive pair (" + std::to_string(cert.payload[i]) + "," +
               std::to_string(cert.payload[i + 1]) + ") not adjacent");
      break;
    }
  }
  return check;
}

std::vector<std::vector<int>> maximal_cliques(const LabeledGraph& g,
                                              int vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    throw BudgetExceeded("maximal clique enumeration vertex cap exceeded (" +
                         std::to_string(vertex_cap) + ")");
  constexpr std::size_t kMaxCliques = 1'000'000;
  const int n = g.vertex_count();
  std::vector<Bitset> adj(n, Bitset(n));
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) adj[v].set(w);

  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  auto bk = [&](auto&& self, Bitset p, Bitset x) -> void {
    if (p.none() && x.none()) {
      if (cliques.size() >= kMaxCliques)
        throw BudgetExceeded("maximal clique enumeration output cap exceeded");
      std::vector<int> clique = r;
      std::sort(clique.begin(), clique.end());
      cliques.push_back(std::move(clique));
      return;
    }
    // Pivot: vertex of P∪X with the most neighbors in P.
    int pivot = -1;
    std::size_t best = 0;
    Bitset px = p | x;
    for (auto v = px.find_first(); v != Bitset::npos; v = px.find_next(v)) {
      const std::size_t cnt = (adj[v] & p).count();
      if (pivot < 0 || cnt > best) {
        pivot = static_cast<int>(v);
        best = cnt;
      }
    }
    Bitset expand = p;
    expand -= adj[pivot];
    for (auto v = expand.find_first(); v != Bitset::npos;
         v = expand.find_next(v)) {
      r.push_back(static_cast<int>(v));
      self(self, p & adj[v], x & adj[v]);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  };
  Bitset p(n), x(n);
  p.set();
  bk(bk, p, x);
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

}  // namespace bicay
