// Planar layer invariants: both are minima over every genus-0 embedding,
// computed by exhaustive embedding enumeration (deduplicated up to
// reflection) plus face-peeling rounds on the chosen outer face.
#include <algorithm>

#include "embed_internal.hpp"

namespace rtl {

namespace {

constexpr int kLayerVertexCap = 16;

// Vertices lying on each traced face (tails of the walk's darts).
std::vector<std::vector<int>> face_vertex_sets(const SimpleGraph& g, const FaceTrace& ft) {
  std::vector<std::vector<int>> out;
  out.reserve(ft.faces.size());
  for (const auto& walk : ft.faces) {
    std::vector<int> verts;
    for (int d : walk) {
      auto [u, v] = g.edges[d >> 1];
      verts.push_back((d & 1) == 0 ? u : v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.push_back(std::move(verts));
  }
  return out;
}

// Rounds of deleting every vertex that sees the merged region, starting
// from the outer face; the count is the embedding's layer depth.
int peel_rounds(int n, const std::vector<std::vector<int>>& fverts, int outer) {
  std::vector<char> merged(fverts.size(), 0), dead(n, 0);
  merged[outer] = 1;
  int alive = n, rounds = 0;
  while (alive > 0) {
    std::vector<int> layer;
    for (std::size_t f = 0; f < fverts.size(); ++f) {
      if (!merged[f]) continue;
      for (int v : fverts[f])
        if (!dead[v]) layer.push_back(v);
    }
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    if (layer.empty())
      throw Error("internal: peeling stalled on a connected embedding");
    ++rounds;
    for (int v : layer) {
      dead[v] = 1;
      --alive;
    }
    for (std::size_t f = 0; f < fverts.size(); ++f) {
      if (merged[f]) continue;
      for (int v : fverts[f])
        if (dead[v]) {
          merged[f] = 1;
          break;
        }
    }
  }
  return rounds;
}

void layer_preflight(const SimpleGraph& g, const Budget& budget) {
  if (g.n > kLayerVertexCap)
    throw CapExceeded("layer invariants capped at " + std::to_string(kLayerVertexCap) +
                      " vertices");
  if (!is_connected(g))
    throw Disconnected("layer invariants require a connected graph");
  if (!is_planar(g, budget).planar)
    throw NonPlanarInput("layer invariants require a planar graph");
}

}  // namespace

LayerResult outerplanarity_index(const SimpleGraph& g, const Budget& budget) {
  layer_preflight(g, budget);
  LayerResult best;
  if (g.n <= 1) {
    best.value = g.n;  // a lone vertex peels in one round
    best.embedding = detail::identity_embedding(g);
    return best;
  }
  std::vector<RotationEmbedding> embs;
  if (!enumerate_planar_embeddings(g, budget, embs))
    throw BudgetExhausted("embedding enumeration ran out of budget");
  best.value = g.n + 1;
  for (const auto& emb : embs) {
    FaceTrace ft = trace_faces(g, emb);
    auto fverts = face_vertex_sets(g, ft);
    for (std::size_t f = 0; f < ft.faces.size(); ++f) {
      int r = peel_rounds(g.n, fverts, static_cast<int>(f));
      if (r < best.value) {
        best.value = r;
        best.embedding = emb;
        best.outer_face = ft.faces[f];
      }
    }
  }
  return best;
}

LayerResult inner_vertex_number(const SimpleGraph& g, const Budget& budget) {
  layer_preflight(g, budget);
  LayerResult best;
  if (g.n <= 1) {
    best.value = 0;
    best.embedding = detail::identity_embedding(g);
    return best;
  }
  std::vector<RotationEmbedding> embs;
  if (!enumerate_planar_embeddings(g, budget, embs))
    throw BudgetExhausted("embedding enumeration ran out of budget");
  best.value = g.n + 1;
  for (const auto& emb : embs) {
    FaceTrace ft = trace_faces(g, emb);
    auto fverts = face_vertex_sets(g, ft);
    for (std::size_t f = 0; f < ft.faces.size(); ++f) {
      int inner = g.n - static_cast<int>(fverts[f].size());
      if (inner < best.value) {
        best.value = inner;
        best.embedding = emb;
        best.outer_face = ft.faces[f];
      }
    }
  }
  return best;
}

}  // namespace rtl
