#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bicay/group.hpp"

namespace bicay {

// Sanity cap for anything we materialize as an adjacency matrix.
inline constexpr int kMaxGraphVertices = 10000;

struct VertexLabel {
  std::int8_t side = -1;  // -1 = unsided, 0/1 = Bi-Cayley side
  int element = 0;        // group element index, or plain vertex id
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

// Immutable simple undirected graph with per-vertex labels, sorted neighbor
// lists and O(1) adjacency via per-vertex bit rows.
class LabeledGraph {
 public:
  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adj_[check(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
  bool adjacent(int u, int v) const { return rows_[check(u)][check(v)]; }
  const boost::dynamic_bitset<>& row(int v) const { return rows_[check(v)]; }
  const VertexLabel& label(int v) const { return labels_[check(v)]; }
  const std::string& meta() const { return meta_; }
  const std::string& group_descriptor() const { return group_descriptor_; }
  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  friend class GraphBuilder;
  int check(int v) const;

  int n_ = 0;
  std::int64_t edges_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<boost::dynamic_bitset<>> rows_;
  std::vector<VertexLabel> labels_;
  std::string meta_;
  std::string group_descriptor_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int vertex_count);
  void set_label(int v, VertexLabel label);
  void add_edge(int u, int v);  // duplicate edges are coalesced
  LabeledGraph build(std::string meta, std::string group_descriptor = "");

 private:
  int n_;
  std::vector<VertexLabel> labels_;
  std::vector<std::pair<int, int>> edges_;
};

// Cayley graph Cay(G, S): vertex per group element (unsided labels),
// edge {x, y} iff x*y^-1 in S. S must be identity-free and inverse-closed.
LabeledGraph cayley_graph(const FiniteGroup& g, const ConnectionSet& s);

struct BiCayleySpec {
  FiniteGroup group;
  ConnectionSet s1, s2, s3;
};

// Validates roles, nonemptiness of all three sets, and set legality.
BiCayleySpec make_bicayley_spec(const FiniteGroup& g, std::vector<int> s1,
                                std::vector<int> s2, std::vector<int> s3);
BiCayleySpec spec_from_preset(const P2Q2Preset& preset);

// Vertex (side, x) has index side*|G| + x. Side-0 edges use S1, side-1 edges
// use S2; the cross edge {(0,x),(1,y)} exists iff x*y^-1 in S3, evaluated
// with x taken from side 0.
LabeledGraph bicayley_graph(const BiCayleySpec& spec);

// Induced subgraph on one side of a Bi-Cayley graph, vertices kept in index
// order (so vertex i is group element i). Requires both sides present.
LabeledGraph side_subgraph(const LabeledGraph& g, int side);
// Same vertex set, only the edges whose endpoints lie on opposite sides.
LabeledGraph cross_edge_subgraph(const LabeledGraph& g);

LabeledGraph complete_multipartite(const std::vector<int>& part_sizes);
// Vertex (a_i, b_j) has index i*|V(b)| + j.
LabeledGraph cartesian_product(const LabeledGraph& a, const LabeledGraph& b);
LabeledGraph complement(const LabeledGraph& g);

}  // namespace bicay
