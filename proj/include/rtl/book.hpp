// Book thickness: exact page-minimal book embeddings over spine orders,
// with independently verifiable witnesses.
#ifndef RTL_BOOK_HPP
#define RTL_BOOK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtl/embed.hpp"
#include "rtl/graph.hpp"

namespace rtl {

// Exactness is guaranteed only up to this many vertices; larger inputs get
// bounds (characterization filters below, complete-graph bound above).
inline constexpr int kBookExactVertexCap = 12;

// Vertices on a line (the spine), every edge assigned to one half-plane
// (page); two edges on a page must not interleave along the spine. Edges
// joining consecutive spine vertices may be omitted from the pages: they
// lie on the spine itself, which is how a path needs zero pages.
struct BookEmbedding {
  std::vector<int> spine;               // permutation of the vertices
  std::vector<std::vector<int>> pages;  // page -> sorted edge indices
};

struct BookResult {
  int lower = 0;
  int upper = -1;
  bool exact = false;
  bool budget_exhausted = false;
  std::string method;
  std::uint64_t nodes_used = 0;
  std::optional<BookEmbedding> witness;  // valid embedding in `upper` pages
};

// Exact book thickness for connected graphs up to kBookExactVertexCap
// vertices. Lower bounds come from the characterizations (0 iff path,
// <= 1 iff outerplanar, <= 2 implies planar); the search enumerates spine
// orders with the first vertex fixed and reflections folded, minimizing
// pages per order as a conflict-graph coloring. The witness is the
// lexicographically smallest page-minimal embedding. On budget exhaustion
// the bounds established so far are returned with the flag set.
// Raises Disconnected.
BookResult book_thickness(const SimpleGraph& g,
                          const Budget& budget = default_budget());

// Structural validation (spine a permutation, edge ids valid, every edge on
// exactly one page or lying on the spine) raises MalformedWitness; the
// return value is the geometric test: true iff no two same-page edges
// interleave along the spine.
bool verify_book_embedding(const SimpleGraph& g, const BookEmbedding& be);

// Witness JSON: {"spine": [...], "pages": [[edge ids...], ...]}.
ordered_json book_embedding_to_json(const BookEmbedding& be);
BookEmbedding book_embedding_from_json(const ordered_json& j);  // IoError

}  // namespace rtl

#endif  // RTL_BOOK_HPP
