#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicay/graph.hpp"

namespace bicay {

// Components as sorted vertex lists, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const LabeledGraph& g);

// BFS distances from one source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const LabeledGraph& g, int source);

// Full 2D distance table (entry -1 = unreachable / infinite).
std::vector<std::vector<int>> all_pairs_distances(const LabeledGraph& g);

struct DiameterInfo {
  bool connected = false;
  int value = -1;  // meaningful only when connected (-1 reads as infinite)
  std::vector<int> component_diameters;  // one entry per component, in order
};
DiameterInfo diameter(const LabeledGraph& g);

// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const LabeledGraph& g);

struct DegreeProfile {
  enum class Kind { Regular, Biregular, Irregular };
  Kind kind = Kind::Irregular;
  int degree_a = -1;  // the degree when regular; smaller degree when biregular
  int degree_b = -1;  // larger degree when biregular, else -1
  std::map<int, std::int64_t> histogram;  // degree -> multiplicity
};
DegreeProfile degree_profile(const LabeledGraph& g);

struct EulerianCheck {
  bool eulerian = false;
  std::string reason;
};
// Eulerian circuit existence: all degrees even and one component once
// isolated vertices are ignored.
EulerianCheck is_eulerian(const LabeledGraph& g);

}  // namespace bicay
