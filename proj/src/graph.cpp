#include "bicay/graph.hpp"

#include <algorithm>
#include <numeric>

#include "bicay/errors.hpp"

namespace bicay {

int LabeledGraph::check(int v) const {
  if (v < 0 || v >= n_) throw InvalidParameter("vertex index out of range");
  return v;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxGraphVertices)
    throw InvalidParameter("graph vertex count out of range");
  labels_.resize(vertex_count);
  for (int v = 0; v < vertex_count; ++v) labels_[v].element = v;
}

void GraphBuilder::set_label(int v, VertexLabel label) {
  if (v < 0 || v >= n_) throw InvalidParameter("vertex index out of range");
  labels_[v] = label;
}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InvalidParameter("edge endpoint out of range");
  if (u == v) throw InvalidParameter("self-loops are not allowed");
  if (u > v) std::swap(u, v);
  edges_.emplace_back(u, v);
}

LabeledGraph GraphBuilder::build(std::string meta,
                                 std::string group_descriptor) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  LabeledGraph g;
  g.n_ = n_;
  g.edges_ = static_cast<std::int64_t>(edges_.size());
  g.labels_ = labels_;
  g.meta_ = std::move(meta);
  g.group_descriptor_ = std::move(group_descriptor);
  g.adj_.assign(n_, {});
  g.rows_.assign(n_, boost::dynamic_bitset<>(n_));
  for (auto [u, v] : edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.rows_[u].set(v);
    g.rows_[v].set(u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

LabeledGraph cayley_graph(const FiniteGroup& g, const ConnectionSet& s) {
  // Re-validate under side rules regardless of the stored role.
  ConnectionSet checked =
      make_connection_set(g, ConnectionSetRole::S1, s.elements);
  const int n = g.order();
  GraphBuilder b(n);
  for (int x = 0; x < n; ++x) {
    b.set_label(x, VertexLabel{-1, x});
    for (int e : checked.elements) b.add_edge(x, g.multiply(g.inverse(e), x));
  }
  return b.build("cayley |G|=" + std::to_string(n) +
                     " |S|=" + std::to_string(checked.elements.size()),
                 g.description());
}

BiCayleySpec make_bicayley_spec(const FiniteGroup& g, std::vector<int> s1,
                                std::vector<int> s2, std::vector<int> s3) {
  if (s1.empty() || s2.empty() || s3.empty())
    throw InvalidConnectionSet("all three connection sets must be nonempty");
  return BiCayleySpec{
      g, make_connection_set(g, ConnectionSetRole::S1, std::move(s1)),
      make_connection_set(g, ConnectionSetRole::S2, std::move(s2)),
      make_connection_set(g, ConnectionSetRole::S3, std::move(s3))};
}

BiCayleySpec spec_from_preset(const P2Q2Preset& preset) {
  return BiCayleySpec{preset.group, preset.s1, preset.s2, preset.s3};
}

LabeledGraph bicayley_graph(const BiCayleySpec& spec) {
  const FiniteGroup& g = spec.group;
  if (spec.s1.elements.empty() || spec.s2.elements.empty() ||
      spec.s3.elements.empty())
    throw InvalidConnectionSet("all three connection sets must be nonempty");
  const int n = g.order();
  if (2LL * n > kMaxGraphVertices)
    throw InvalidParameter("bi-cayley graph would exceed the vertex cap");
  GraphBuilder b(2 * n);
  for (int x = 0; x < n; ++x) {
    b.set_label(x, VertexLabel{0, x});
    b.set_label(n + x, VertexLabel{1, x});
  }
  for (int x = 0; x < n; ++x) {
    for (int e : spec.s1.elements)
      b.add_edge(x, g.multiply(g.inverse(e), x));
    for (int e : spec.s2.elements)
      b.add_edge(n + x, n + g.multiply(g.inverse(e), x));
    // Cross edge {(0,x),(1,y)} iff x*y^-1 in S3, i.e. y = s^-1 * x.
    for (int e : spec.s3.elements)
      b.add_edge(x, n + g.multiply(g.inverse(e), x));
  }
  return b.build("bicayley |G|=" + std::to_string(n) +
                     " |S1|=" + std::to_string(spec.s1.elements.size()) +
                     " |S2|=" + std::to_string(spec.s2.elements.size()) +
                     " |S3|=" + std::to_string(spec.s3.elements.size()),
                 g.description());
}

namespace {
void require_bipartitioned(const LabeledGraph& g) {
  bool saw0 = false, saw1 = false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto side = g.label(v).side;
    if (side == 0) saw0 = true;
    else if (side == 1) saw1 = true;
    else throw InvalidParameter("graph is not bi-partitioned (unsided vertex)");
  }
  if (!saw0 || !saw1)
    throw InvalidParameter("graph is not bi-partitioned (one side is empty)");
}
}  // namespace

LabeledGraph side_subgraph(const LabeledGraph& g, int side) {
  if (side != 0 && side != 1)
    throw InvalidParameter("side must be 0 or 1");
  require_bipartitioned(g);
  std::vector<int> keep;
  std::vector<int> new_index(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.label(v).side == side) {
      new_index[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  }
  GraphBuilder b(static_cast<int>(keep.size()));
  for (int v : keep) b.set_label(new_index[v], g.label(v));
  for (int v : keep)
    for (int w : g.neighbors(v))
      if (new_index[w] >= 0 && v < w) b.add_edge(new_index[v], new_index[w]);
  return b.build(g.meta() + " side=" + std::to_string(side),
                 g.group_descriptor());
}

LabeledGraph cross_edge_subgraph(const LabeledGraph& g) {
  require_bipartitioned(g);
  GraphBuilder b(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) b.set_label(v, g.label(v));
  for (auto [u, v] : g.edges())
    if (g.label(u).side != g.label(v).side) b.add_edge(u, v);
  return b.build(g.meta() + " cross-edges", g.group_descriptor());
}

LabeledGraph complete_multipartite(const std::vector<int>& part_sizes) {
  if (part_sizes.empty())
    throw InvalidParameter("multipartite graph needs at least one part");
  long long total = 0;
  for (int s : part_sizes) {
    if (s < 1) throw InvalidParameter("part sizes must be positive");
    total += s;
  }
  if (total > kMaxGraphVertices)
    throw InvalidParameter("multipartite graph would exceed the vertex cap");
  const int n = static_cast<int>(total);
  std::vector<int> part_of(n);
  {
    int v = 0;
    for (std::size_t i = 0; i < part_sizes.size(); ++i)
      for (int j = 0; j < part_sizes[i]; ++j) part_of[v++] = static_cast<int>(i);
  }
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  std::string meta = "multipartite[";
  for (std::size_t i = 0; i < part_sizes.size(); ++i)
    meta += (i ? "," : "") + std::to_string(part_sizes[i]);
  return b.build(meta + "]");
}

LabeledGraph cartesian_product(const LabeledGraph& a, const LabeledGraph& b) {
  const long long total =
      static_cast<long long>(a.vertex_count()) * b.vertex_count();
  if (total > kMaxGraphVertices)
    throw InvalidParameter("cartesian product would exceed the vertex cap");
  const int nb = b.vertex_count();
  GraphBuilder builder(static_cast<int>(total));
  for (int i = 0; i < a.vertex_count(); ++i) {
    for (auto [u, v] : b.edges()) builder.add_edge(i * nb + u, i * nb + v);
  }
  for (auto [u, v] : a.edges())
    for (int j = 0; j < nb; ++j) builder.add_edge(u * nb + j, v * nb + j);
  return builder.build("cartesian(" + a.meta() + ", " + b.meta() + ")");
}

LabeledGraph complement(const LabeledGraph& g) {
  GraphBuilder b(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) b.set_label(v, g.label(v));
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build("complement(" + g.meta() + ")", g.group_descriptor());
}

}  // namespace bicay
