#include "bicay/metrics.hpp"

#include <algorithm>
#include <queue>

#include "bicay/errors.hpp"

namespace bicay {

std::vector<std::vector<int>> connected_components(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> bfs;
    bfs.push(s);
    comp[s] = id;
    while (!bfs.empty()) {
      const int v = bfs.front();
      bfs.pop();
      out[id].push_back(v);
      for (int w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          bfs.push(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::vector<int> bfs_distances(const LabeledGraph& g, int source) {
  if (source < 0 || source >= g.vertex_count())
    throw InvalidParameter("bfs source out of range");
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const LabeledGraph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out.push_back(bfs_distances(g, v));
  return out;
}

DiameterInfo diameter(const LabeledGraph& g) {
  DiameterInfo info;
  const auto comps = connected_components(g);
  info.connected = comps.size() == 1 && g.vertex_count() > 0;
  info.component_diameters.assign(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    int ecc_max = 0;
    for (int v : comps[c]) {
      const auto dist = bfs_distances(g, v);
      for (int w : comps[c]) ecc_max = std::max(ecc_max, dist[w]);
    }
    info.component_diameters[c] = ecc_max;
  }
  if (info.connected) info.value = info.component_diameters[0];
  return info;
}

std::optional<int> girth(const LabeledGraph& g) {
  // BFS from every vertex; a non-tree edge (v,w) seen from root r closes a
  // cycle of length dist(v)+dist(w)+1. The minimum over all roots is exact:
  // any value found is at least the girth, and a root on a shortest cycle
  // attains it.
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[r] = 0;
    q.push(r);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (w != parent[v] && v < w) {
          const int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
    if (best == 3) break;  // nothing shorter exists in a simple graph
  }
  if (best < 0) return std::nullopt;
  return best;
}

DegreeProfile degree_profile(const LabeledGraph& g) {
  DegreeProfile profile;
  for (int v = 0; v < g.vertex_count(); ++v) ++profile.histogram[g.degree(v)];
  if (profile.histogram.size() == 1) {
    profile.kind = DegreeProfile::Kind::Regular;
    profile.degree_a = profile.histogram.begin()->first;
  } else if (profile.histogram.size() == 2) {
    profile.kind = DegreeProfile::Kind::Biregular;
    profile.degree_a = profile.histogram.begin()->first;
    profile.degree_b = std::next(profile.histogram.begin())->first;
  }
  return profile;
}

EulerianCheck is_eulerian(const LabeledGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0)
      return {false, "vertex " + std::to_string(v) + " has odd degree " +
                         std::to_string(g.degree(v))};
  }
  const auto comps = connected_components(g);
  int with_edges = 0;
  for (const auto& comp : comps)
    if (comp.size() > 1 || g.degree(comp[0]) > 0) ++with_edges;
  if (with_edges > 1)
    return {false, "edges span " + std::to_string(with_edges) +
                       " components"};
  if (g.edge_count() == 0) return {false, "graph has no edges"};
  return {true, "all degrees even and edges lie in one component"};
}

}  // namespace bicay
