#include "bicay/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "bicay/errors.hpp"

namespace bicay {

namespace {

// One round of neighborhood refinement over both graphs with a shared
// dictionary, so identical signatures receive identical new colors.
// Returns false if the color histograms diverge (graphs cannot be isomorphic).
bool refine_round(const LabeledGraph& a, const LabeledGraph& b,
                  std::vector<int>& ca, std::vector<int>& cb, int& palette) {
  const int n = a.vertex_count();
  auto signature = [](const LabeledGraph& g, const std::vector<int>& c, int v) {
    std::vector<int> sig;
    sig.reserve(g.degree(v) + 1);
    sig.push_back(c[v]);
    for (int w : g.neighbors(v)) sig.push_back(c[w]);
    std::sort(sig.begin() + 1, sig.end());
    return sig;
  };
  std::map<std::vector<int>, int> dict;
  std::vector<int> na(n), nb(n);
  for (int v = 0; v < n; ++v) {
    auto [it, _] = dict.emplace(signature(a, ca, v), -1);
    (void)_;
    if (it->second < 0) it->second = static_cast<int>(dict.size()) - 1;
    na[v] = it->second;
  }
  std::map<int, int> hist_a;
  for (int c : na) ++hist_a[c];
  std::map<int, int> hist_b;
  for (int v = 0; v < n; ++v) {
    auto it = dict.find(signature(b, cb, v));
    if (it == dict.end()) return false;  // signature absent from a
    nb[v] = it->second;
    ++hist_b[it->second];
  }
  if (hist_a != hist_b) return false;
  ca.swap(na);
  cb.swap(nb);
  palette = static_cast<int>(dict.size());
  return true;
}

}  // namespace

std::optional<IsoWitness> are_isomorphic(const LabeledGraph& a,
                                         const LabeledGraph& b,
                                         int vertex_cap) {
  if (a.vertex_count() > vertex_cap || b.vertex_count() > vertex_cap)
    throw BudgetExceeded("isomorphism vertex cap exceeded (" +
                         std::to_string(vertex_cap) + ")");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  const int n = a.vertex_count();
  if (n == 0) return IsoWitness{{}};

  // Initial colors: degrees. Refine until the palette stabilizes.
  std::vector<int> ca(n), cb(n);
  for (int v = 0; v < n; ++v) ca[v] = a.degree(v);
  for (int v = 0; v < n; ++v) cb[v] = b.degree(v);
  {
    std::multiset<int> da(ca.begin(), ca.end()), db(cb.begin(), cb.end());
    if (da != db) return std::nullopt;
  }
  int palette = 0, prev = -1;
  while (palette != prev) {
    prev = palette;
    if (!refine_round(a, b, ca, cb, palette)) return std::nullopt;
  }

  // Candidate masks per final color.
  std::vector<boost::dynamic_bitset<>> color_mask(
      palette, boost::dynamic_bitset<>(n));
  for (int v = 0; v < n; ++v) color_mask[cb[v]].set(v);

  std::vector<int> mapping(n, -1);
  boost::dynamic_bitset<> used(n);
  std::vector<int> mapped_nbrs(n, 0);  // per a-vertex, count of mapped nbrs
  std::vector<char> placed(n, 0);
  std::uint64_t nodes = 0;
  constexpr std::uint64_t kNodeGuard = 50'000'000;

  // Pick the unmapped a-vertex with most already-mapped neighbors (most
  // constrained), lowest index on ties.
  auto next_vertex = [&]() {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && (best < 0 || mapped_nbrs[v] > mapped_nbrs[best]))
        best = v;
    return best;
  };

  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int u = next_vertex();
    // Images of u's already-mapped neighbors; a valid image v must satisfy
    // row_b(v) ∩ used == needed, which enforces adjacency AND non-adjacency
    // against everything mapped so far.
    boost::dynamic_bitset<> needed(n);
    for (int w : a.neighbors(u))
      if (placed[w]) needed.set(mapping[w]);
    const boost::dynamic_bitset<> cand = color_mask[ca[u]] & ~used;
    for (auto v = cand.find_first(); v != boost::dynamic_bitset<>::npos;
         v = cand.find_next(v)) {
      if (++nodes > kNodeGuard)
        throw BudgetExceeded("isomorphism search budget exceeded");
      if ((b.row(static_cast<int>(v)) & used) != needed) continue;
      mapping[u] = static_cast<int>(v);
      placed[u] = 1;
      used.set(v);
      for (int w : a.neighbors(u)) ++mapped_nbrs[w];
      if (self(self, depth + 1)) return true;
      for (int w : a.neighbors(u)) --mapped_nbrs[w];
      used.reset(v);
      placed[u] = 0;
      mapping[u] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  // Independent verification of the witness before handing it out.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (a.adjacent(u, v) != b.adjacent(mapping[u], mapping[v]))
        throw std::logic_error("isomorphism witness failed verification");
  return IsoWitness{std::move(mapping)};
}

}  // namespace bicay
