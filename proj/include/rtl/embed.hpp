// Rotation-system embeddings and exact topological invariants: face
// tracing, genus/crosscap decision search, planarity, outerplanarity,
// Euler-type lower bounds, closed-formula oracles, and planar layer
// invariants (outerplanarity index, inner vertex number).
//
// Dart convention: edge k = {u, v} with u < v yields dart 2k (leaving u)
// and dart 2k+1 (leaving v). A rotation lists the darts leaving each
// vertex in cyclic order; an edge signature of -1 reverses local
// orientation when the edge is crossed. All +1 signatures = orientable.
#ifndef RTL_EMBED_HPP
#define RTL_EMBED_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtl/graph.hpp"
#include "rtl/iso.hpp"

namespace rtl {

// Branch-and-bound budgets. Node counts are the deterministic cap; the
// wall-clock cap is a safety net (0 disables it). Reported outcomes are
// machine-independent whenever the node cap binds first.
struct Budget {
  std::uint64_t nodes = 10'000'000;
  double seconds = 120.0;
};
// Default profile; RTL_BUDGET_NODES / RTL_BUDGET_SECONDS env vars override.
Budget default_budget();
// Extended profile (1e9 nodes / 3600 s), not affected by env overrides.
Budget extended_budget();

struct RotationEmbedding {
  std::vector<std::vector<int>> rotation;  // rotation[v] = darts leaving v
  std::vector<int> signature;              // per edge, +1 or -1
};

struct FaceTrace {
  std::vector<std::vector<int>> faces;  // dart walks, one per face
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;
  int euler_characteristic = 0;
  bool orientable = true;
  // Orientable genus when orientable, crosscap number otherwise; -1 when the
  // graph is disconnected (the surface interpretation needs connectivity).
  int genus = -1;
};

// Traces the boundary walks of emb and derives Euler data. Raises
// MalformedEmbedding when rotation/signature are not a valid scheme for g.
FaceTrace trace_faces(const SimpleGraph& g, const RotationEmbedding& emb);

// Certificate serialization: {"rotation": [[...]], "signature": {...},
// "faces": [[...]], "euler": {...}}. The signature key is omitted for
// orientable schemes on output and defaults to all +1 on input.
ordered_json embedding_to_json(const SimpleGraph& g, const RotationEmbedding& emb);
RotationEmbedding embedding_from_json(const SimpleGraph& g, const ordered_json& j);

struct PlanarityResult {
  bool planar = false;
  std::optional<RotationEmbedding> embedding;   // genus-0 certificate
  std::string obstruction;                      // "K5" or "K3,3" when nonplanar
  std::optional<SubdivisionWitness> witness;    // subdivision of the obstruction
};
// Exact planarity via genus-0 decision search; nonplanar outputs carry a
// Kuratowski subdivision found independently. CapExceeded past 64 vertices.
PlanarityResult is_planar(const SimpleGraph& g, const Budget& budget = default_budget());

struct OuterplanarityResult {
  bool outerplanar = false;
  std::vector<int> outer_order;               // all vertices on one face
  std::string obstruction;                    // "K4" or "K2,3" when not
  std::optional<SubdivisionWitness> witness;
};
// Outerplanar iff the graph stays planar after joining one apex vertex.
// CapExceeded past 63 vertices.
OuterplanarityResult is_outerplanar(const SimpleGraph& g,
                                    const Budget& budget = default_budget());

// Exact-or-bounded invariant value. exact means lower == upper; method names
// the deciding argument (search, counting bound, degree bound, ...).
struct BoundedInvariant {
  int lower = 0;
  int upper = -1;  // -1 = no upper bound established
  bool exact = false;
  bool budget_exhausted = false;
  std::string method;
  std::uint64_t nodes_used = 0;
  std::optional<RotationEmbedding> certificate;  // attains upper when present
};

// Minimum orientable genus by iterative-deepening decision search starting
// from the strongest available lower bound. hint_lower (with hint_source)
// lets callers inject an external lower bound, e.g. one derived from the
// structure that produced g; it never weakens the computed bound.
// Disconnected input raises Disconnected.
BoundedInvariant min_genus(const SimpleGraph& g, const Budget& budget = default_budget(),
                           int hint_lower = 0, const std::string& hint_source = "");
// Minimum crosscap number, same contract; planar graphs report 0 exactly.
BoundedInvariant min_crosscap(const SimpleGraph& g, const Budget& budget = default_budget(),
                              int hint_lower = 0, const std::string& hint_source = "");

// Deterministic hill climb over rotation systems (plus edge signatures when
// allow_nonorientable) that lowers the traced Euler characteristic deficit.
// Starts at the identity scheme; every intermediate state is a valid
// embedding, so the result is always a sound upper-bound certificate once
// re-traced. iterations = 0 picks a size-based default. Connected input only.
RotationEmbedding improve_embedding_upper(const SimpleGraph& g, bool allow_nonorientable,
                                          std::uint64_t iterations = 0,
                                          std::uint64_t seed = 1);

// Girth-aware Euler-formula lower bounds: max(0, ceil((e - s(v-2)) / s))
// with s = girth/(girth-2), specialized to genus and crosscap counting.
// A value >= 1 certifies nothing unless nonplanarity is known separately.
int euler_genus_lower_bound(const SimpleGraph& g);
int euler_crosscap_lower_bound(const SimpleGraph& g);

// Lower bounds on the genus/crosscap of the line graph of g from the two
// largest vertex degrees: stars at distinct vertices become near-disjoint
// complete subgraphs of line_graph(g). The crosscap form loses 1 when a
// chosen degree equals 7.
struct LineDegreeBound {
  int genus_lower = 0;
  int crosscap_lower = 0;
  int v1 = -1, v2 = -1;  // chosen vertices (genus maximizer)
};
LineDegreeBound line_genus_degree_bound(const SimpleGraph& g);

// Closed-form reference values, independent of the search engine.
//   genus_complete(n)             n >= 1
//   crosscap_complete(n)          n >= 1, n = 7 exceptional
//   genus_bipartite(m, n)         m, n >= 1
//   crosscap_bipartite(m, n)      m, n >= 1
//   genus_line_complete_lower(n)  lower bound for L(K_n)
//   crosscap_line_complete_lower(n)
//   genus_line_star(n)            exact genus of L(K_{1,n}) = genus of K_n
//   genus_line_k2n_lower(n)       lower bound for L(K_{2,n}), exact unless
//                                 n mod 12 in {5, 9}
//   crosscap_line_k2n_lower(n)    exact unless n = 6 or n mod 6 in {1, 4}
//   book_complete(n)              book thickness of K_n, n >= 4
//   book_k33()                    book thickness of K_{3,3}
struct FormulaValue {
  long long value = 0;
  bool exact = true;       // false when the formula is only a lower bound
  std::string note;
};
FormulaValue formula_oracle(const std::string& name, const std::vector<int>& args);

// Planar layer invariants over all genus-0 embeddings (enumerated exactly,
// deduplicated up to reflection). NonPlanarInput when g is not planar;
// CapExceeded past 16 vertices; BudgetExhausted when enumeration is cut off.
struct LayerResult {
  int value = 0;
  RotationEmbedding embedding;   // attaining embedding
  std::vector<int> outer_face;   // chosen outer face (dart walk)
};
LayerResult outerplanarity_index(const SimpleGraph& g,
                                 const Budget& budget = default_budget());
LayerResult inner_vertex_number(const SimpleGraph& g,
                                const Budget& budget = default_budget());

// Verifies the hypotheses of the join-style lower-bound lemma on g: v1 and
// v2 disjoint, g[v1] 3-connected and planar, g[v2] connected, and every v1
// vertex adjacent to some v2 vertex. When valid, genus(g) > genus(g[v2])
// and crosscap(g) > crosscap(g[v2]). OverlappingSets when v1 meets v2.
struct JoinCertificateResult {
  bool valid = false;
  std::string reason;
};
JoinCertificateResult verify_join_lower_bound_certificate(const SimpleGraph& g,
                                                          const std::vector<int>& v1,
                                                          const std::vector<int>& v2);

// ---- decision engine (shared by the invariants above and by tests) ----

enum class DecisionStatus { kSat, kUnsat, kBudget };

struct EmbedDecision {
  DecisionStatus status = DecisionStatus::kBudget;
  RotationEmbedding embedding;  // valid when status == kSat
  std::uint64_t nodes = 0;
};

// Does g (connected) admit an orientable embedding of genus <= max_genus?
EmbedDecision decide_orientable_genus(const SimpleGraph& g, int max_genus,
                                      const Budget& budget);
// Does g (connected) admit a non-orientable embedding with crosscap <= max_crosscap?
EmbedDecision decide_nonorientable_crosscap(const SimpleGraph& g, int max_crosscap,
                                            const Budget& budget);
// Enumerates every genus-0 rotation system of connected g, deduplicated up
// to reflection, in a deterministic order. Returns false when the budget ran
// out before the enumeration completed.
bool enumerate_planar_embeddings(const SimpleGraph& g, const Budget& budget,
                                 std::vector<RotationEmbedding>& out);

}  // namespace rtl

#endif  // RTL_EMBED_HPP
