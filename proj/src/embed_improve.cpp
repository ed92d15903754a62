// Iterated local search over rotation systems used to seed upper bounds
// before the decision search runs. Every visited state is a complete valid
// embedding, so whatever comes out is certified by re-tracing, not trusted.
#include <algorithm>
#include <cstdint>

#include "embed_internal.hpp"
#include "rtl/embed.hpp"

namespace rtl {

namespace {

struct XorShift {
  std::uint64_t s;
  explicit XorShift(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

// Euler genus 2 - chi of the traced surface. Orientable schemes cost 2g,
// nonorientable ones cost the crosscap number, so both compare on the same
// scale; the caller derives its bound from the final trace.
int euler_cost(const FaceTrace& t) { return 2 - t.euler_characteristic; }

}  // namespace

RotationEmbedding improve_embedding_upper(const SimpleGraph& g, bool allow_nonorientable,
                                          std::uint64_t iterations, std::uint64_t seed) {
  RotationEmbedding best = detail::identity_embedding(g);
  int ne = g.edge_count();
  if (g.n <= 2 || ne == 0) return best;
  if (iterations == 0) iterations = 20000 + 2000ull * static_cast<std::uint64_t>(ne);

  std::vector<int> movable;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) >= 2) movable.push_back(v);
  if (movable.empty()) return best;
  int nm = static_cast<int>(movable.size());

  XorShift rng(seed);
  auto eval = [&](const RotationEmbedding& emb) { return euler_cost(trace_faces(g, emb)); };
  int best_cost = eval(best);
  RotationEmbedding cur = best;
  int cur_cost = best_cost;
  std::uint64_t stale = 0;
  const std::uint64_t stale_limit = 40ull * static_cast<std::uint64_t>(ne) + 150;
  int kick_size = 1;

  // Moves: flip one edge signature (nonorientable mode only), pull one dart
  // out of a rotation and reinsert it elsewhere, or transpose two darts.
  enum class Move { kFlip, kShift, kSwap };
  for (std::uint64_t it = 0; it < iterations && best_cost > 0; ++it) {
    int v = -1, i = -1, j = -1, e = -1;
    Move mv;
    int roll = rng.below(4);
    if (allow_nonorientable && roll == 0)
      mv = Move::kFlip;
    else
      mv = (roll < 3) ? Move::kShift : Move::kSwap;
    if (mv == Move::kFlip) {
      e = rng.below(ne);
      cur.signature[e] = -cur.signature[e];
    } else {
      v = movable[rng.below(nm)];
      int deg = static_cast<int>(cur.rotation[v].size());
      i = rng.below(deg);
      j = rng.below(deg);
      if (i == j) j = (j + 1) % deg;
      if (mv == Move::kShift) {
        int d = cur.rotation[v][i];
        cur.rotation[v].erase(cur.rotation[v].begin() + i);
        cur.rotation[v].insert(cur.rotation[v].begin() + j, d);
      } else {
        std::swap(cur.rotation[v][i], cur.rotation[v][j]);
      }
    }
    int cost = eval(cur);
    if (cost <= cur_cost) {
      cur_cost = cost;
      if (cost < best_cost) {
        best = cur;
        best_cost = cost;
        stale = 0;
        kick_size = 1;
      } else {
        ++stale;
      }
    } else {
      if (mv == Move::kFlip) {
        cur.signature[e] = -cur.signature[e];
      } else if (mv == Move::kShift) {
        int d = cur.rotation[v][j];
        cur.rotation[v].erase(cur.rotation[v].begin() + j);
        cur.rotation[v].insert(cur.rotation[v].begin() + i, d);
      } else {
        std::swap(cur.rotation[v][i], cur.rotation[v][j]);
      }
      ++stale;
    }
    if (stale > stale_limit) {
      // Restart from the incumbent and kick it: reshuffle a few rotations
      // (and flip a few signatures in nonorientable mode), growing the
      // perturbation while the same basin keeps winning.
      cur = best;
      for (int k = 0; k < kick_size; ++k) {
        int w = movable[rng.below(nm)];
        for (std::size_t p = cur.rotation[w].size(); p > 1; --p)
          std::swap(cur.rotation[w][p - 1], cur.rotation[w][rng.below(static_cast<int>(p))]);
        if (allow_nonorientable && rng.below(2) == 0) {
          int f = rng.below(ne);
          cur.signature[f] = -cur.signature[f];
        }
      }
      cur_cost = eval(cur);
      stale = 0;
      kick_size = std::min(kick_size + 1, 4);
    }
  }
  return best;
}

}  // namespace rtl
