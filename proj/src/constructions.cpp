#include "bicay/constructions.hpp"

#include <algorithm>
#include <string>

#include "bicay/errors.hpp"

namespace bicay {

namespace {

void check_component_coords(const P2Q2Context& ctx, int i, int j) {
  if (i < 0 || i >= ctx.p || j < 0 || j >= ctx.q)
    throw InvalidParameter("component coordinates must satisfy 0 <= i < p, "
                           "0 <= j < q; got (" +
                           std::to_string(i) + ", " + std::to_string(j) +
                           ")");
}

int merge(const P2Q2Context& ctx, int p_part, int q_part) {
  return crt_merge(CrtCoordinates{ctx.p, ctx.q, p_part, q_part});
}

}  // namespace

P2Q2Context make_p2q2_context(int p, int q, int cap) {
  P2Q2Preset preset = preset_connection_sets(p, q, cap);
  P2Q2Context ctx{p,
                  q,
                  preset.group.order(),
                  std::max(p, q),
                  std::min(p, q),
                  preset.group,
                  std::move(preset.s1),
                  std::move(preset.s2),
                  std::move(preset.s3)};
  return ctx;
}

std::vector<int> gamma0_coloring(const P2Q2Context& ctx) {
  const int width = ctx.n / ctx.k;  // k m^2
  std::vector<int> color(static_cast<size_t>(ctx.n));
  for (int g = 0; g < ctx.n; ++g)
    color[static_cast<size_t>(g)] = (g / width) % ctx.k;
  return color;
}

std::vector<int> gamma1_coloring(const P2Q2Context& ctx) {
  std::vector<int> color(static_cast<size_t>(ctx.n));
  for (int g = 0; g < ctx.n; ++g)
    color[static_cast<size_t>(g)] = (g % ctx.p + g % ctx.q) % ctx.k;
  return color;
}

std::vector<int> full_coloring(const P2Q2Context& ctx) {
  const std::vector<int> c0 = gamma0_coloring(ctx);
  const std::vector<int> c1 = gamma1_coloring(ctx);
  std::vector<int> color(static_cast<size_t>(2 * ctx.n));
  for (int g = 0; g < ctx.n; ++g) {
    // Where the side colorings collide, side 0 takes the spare color k.
    // This stays proper: along side-0 edges the side-1 coloring is
    // constant (differences there are divisible by both p and q), so two
    // adjacent collisions would force equal side-0 colors, contradicting
    // properness of the side-0 coloring.
    color[static_cast<size_t>(g)] =
        c0[static_cast<size_t>(g)] == c1[static_cast<size_t>(g)]
            ? ctx.k
            : c0[static_cast<size_t>(g)];
    color[static_cast<size_t>(ctx.n + g)] = c1[static_cast<size_t>(g)];
  }
  return color;
}

std::vector<int> coset_clique(const P2Q2Context& ctx, int g) {
  if (g < 0 || g >= ctx.n)
    throw InvalidParameter("coset base out of range: " + std::to_string(g));
  const int step = ctx.n / ctx.k;
  std::vector<int> clique;
  clique.reserve(static_cast<size_t>(ctx.k));
  for (int j = 0; j < ctx.k; ++j)
    clique.push_back((g + j * step) % ctx.n);
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::vector<int> gamma1_clique(const P2Q2Context& ctx) {
  std::vector<int> clique;
  clique.reserve(static_cast<size_t>(ctx.k));
  for (int t = 0; t < ctx.k; ++t)
    clique.push_back(ctx.k == ctx.q ? merge(ctx, 0, t) : merge(ctx, t, 0));
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::vector<int> component_elements(const P2Q2Context& ctx, int i, int j) {
  check_component_coords(ctx, i, j);
  const int p2 = ctx.p * ctx.p, q2 = ctx.q * ctx.q;
  std::vector<int> elems;
  elems.reserve(static_cast<size_t>(ctx.p * ctx.q));
  for (int a = 0; a < ctx.p; ++a)
    for (int b = 0; b < ctx.q; ++b)
      elems.push_back(merge(ctx, (i + a * ctx.p) % p2, (j + b * ctx.q) % q2));
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> component_transversal(const P2Q2Context& ctx, int i, int j) {
  check_component_coords(ctx, i, j);
  const int p2 = ctx.p * ctx.p, q2 = ctx.q * ctx.q;
  std::vector<int> elems;
  elems.reserve(static_cast<size_t>(ctx.m));
  for (int t = 0; t < ctx.m; ++t)
    elems.push_back(merge(ctx, (i + t * ctx.p) % p2, (j + t * ctx.q) % q2));
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> gamma0_independent_max(const P2Q2Context& ctx) {
  std::vector<int> result;
  result.reserve(static_cast<size_t>(ctx.p * ctx.q * ctx.m));
  for (int i = 0; i < ctx.p; ++i)
    for (int j = 0; j < ctx.q; ++j) {
      std::vector<int> t = component_transversal(ctx, i, j);
      result.insert(result.end(), t.begin(), t.end());
    }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> gamma1_independent_max(const P2Q2Context& ctx) {
  std::vector<int> result;
  result.reserve(static_cast<size_t>(ctx.p * ctx.q * ctx.m));
  for (int i = 0; i < ctx.m; ++i) {
    std::vector<int> c = component_elements(ctx, i, i);
    result.insert(result.end(), c.begin(), c.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> joint_independent_max(const P2Q2Context& ctx) {
  std::vector<int> vertices;
  for (int g : gamma1_independent_max(ctx))
    vertices.push_back(ctx.n + g);  // side-1 vertex indices
  for (int i = 0; i < ctx.p; ++i)
    for (int j = 0; j < ctx.q; ++j) {
      if (i == j && i < ctx.m) continue;  // skip the diagonal components
      for (int g : component_transversal(ctx, i, j)) vertices.push_back(g);
    }
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

LabeledGraph component_model(const P2Q2Context& ctx) {
  auto complete = [](int size) {
    GraphBuilder b(size);
    for (int u = 0; u < size; ++u)
      for (int v = u + 1; v < size; ++v) b.add_edge(u, v);
    return b.build("complete" + std::to_string(size));
  };
  return cartesian_product(complete(ctx.p), complete(ctx.q));
}

std::vector<int> component_isomorphism(const P2Q2Context& ctx, int base) {
  if (base < 0 || base >= ctx.n)
    throw InvalidParameter("component base out of range: " +
                           std::to_string(base));
  const CrtCoordinates c = crt_split(ctx.p, ctx.q, base);
  const int p2 = ctx.p * ctx.p, q2 = ctx.q * ctx.q;
  std::vector<int> map(static_cast<size_t>(ctx.p * ctx.q));
  for (int i = 0; i < ctx.p; ++i)
    for (int j = 0; j < ctx.q; ++j)
      map[static_cast<size_t>(i * ctx.q + j)] =
          merge(ctx, (c.p_part + i * ctx.p) % p2, (c.q_part + j * ctx.q) % q2);
  return map;
}

LabeledGraph gamma1_model(const P2Q2Context& ctx) {
  auto balanced_multipartite = [](int parts) {
    return complete_multipartite(std::vector<int>(static_cast<size_t>(parts),
                                                  parts));
  };
  return cartesian_product(balanced_multipartite(ctx.p),
                           balanced_multipartite(ctx.q));
}

std::vector<int> gamma1_isomorphism(const P2Q2Context& ctx) {
  // Z_{p^2} with order-p^2 differences is complete multipartite with the
  // parts given by residue mod p; index x as (part, position) = part*p +
  // floor(x/p). Same for q. The product index is then p-index * q^2 + q-index.
  const int q2 = ctx.q * ctx.q;
  std::vector<int> map(static_cast<size_t>(ctx.n));
  for (int g = 0; g < ctx.n; ++g) {
    const CrtCoordinates c = crt_split(ctx.p, ctx.q, g);
    const int pi = (c.p_part % ctx.p) * ctx.p + c.p_part / ctx.p;
    const int qi = (c.q_part % ctx.q) * ctx.q + c.q_part / ctx.q;
    map[static_cast<size_t>(g)] = pi * q2 + qi;
  }
  return map;
}

}  // namespace bicay
