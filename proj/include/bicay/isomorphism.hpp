#pragma once

#include <optional>
#include <vector>

#include "bicay/graph.hpp"

namespace bicay {

inline constexpr int kDefaultIsoVertexCap = 512;

struct IsoWitness {
  std::vector<int> mapping;  // mapping[u in a] = image vertex in b
};

// Exact isomorphism test on the underlying unlabeled structure: iterated
// degree/neighborhood refinement to prune, then backtracking search. A
// returned witness has been re-verified edge-by-edge. Throws BudgetExceeded
// when either graph is larger than vertex_cap.
std::optional<IsoWitness> are_isomorphic(const LabeledGraph& a,
                                         const LabeledGraph& b,
                                         int vertex_cap = kDefaultIsoVertexCap);

}  // namespace bicay
