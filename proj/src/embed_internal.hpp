// Shared dart bookkeeping for the embedding layer. Dart 2k leaves the
// smaller endpoint of edge k, dart 2k+1 the larger; rev flips direction.
#ifndef RTL_EMBED_INTERNAL_HPP
#define RTL_EMBED_INTERNAL_HPP

#include <vector>

#include "rtl/embed.hpp"
#include "rtl/graph.hpp"

namespace rtl::detail {

inline int rev(int d) { return d ^ 1; }
inline int dart_edge(int d) { return d >> 1; }

struct DartMap {
  int nv = 0, ne = 0, nd = 0;
  std::vector<int> tail, head;        // per dart
  std::vector<std::vector<int>> out;  // darts leaving v, ascending ids

  explicit DartMap(const SimpleGraph& g) {
    nv = g.n;
    ne = g.edge_count();
    nd = 2 * ne;
    tail.resize(nd);
    head.resize(nd);
    out.assign(nv, {});
    for (int k = 0; k < ne; ++k) {
      auto [u, v] = g.edges[k];
      tail[2 * k] = u;
      head[2 * k] = v;
      tail[2 * k + 1] = v;
      head[2 * k + 1] = u;
      out[u].push_back(2 * k);
      out[v].push_back(2 * k + 1);
    }
  }
};

// Throws MalformedEmbedding unless emb is a valid scheme for g: one cyclic
// order per vertex covering exactly its out-darts, one +-1 per edge.
void validate_embedding(const SimpleGraph& g, const RotationEmbedding& emb);

// Identity scheme: rotation[v] = out-darts ascending, all signatures +1.
RotationEmbedding identity_embedding(const SimpleGraph& g);

}  // namespace rtl::detail

#endif  // RTL_EMBED_INTERNAL_HPP
