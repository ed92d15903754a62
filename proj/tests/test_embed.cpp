// Face tracing, embedding serialization, Euler-type lower bounds and the
// closed-form surface formulas.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>

#include "rtl/embed.hpp"
#include "rtl/graph.hpp"

using namespace rtl;

namespace {

RotationEmbedding identity_of(const SimpleGraph& g) {
  RotationEmbedding emb;
  emb.rotation.assign(g.n, {});
  for (int v = 0; v < g.n; ++v)
    for (int w : g.adj[v]) emb.rotation[v].push_back(2 * g.edge_index(v, w) + (v < w ? 0 : 1));
  emb.signature.assign(g.edges.size(), 1);
  return emb;
}

// Small deterministic generator for the property hammer below.
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

}  // namespace

TEST_CASE("cycle and K4 traces close up") {
  auto c4 = cycle_graph(4);
  auto t = trace_faces(c4, identity_of(c4));
  CHECK(t.face_count == 2);
  CHECK(t.euler_characteristic == 2);
  CHECK(t.orientable);
  CHECK(t.genus == 0);
  for (const auto& f : t.faces) CHECK(f.size() == 4);

  auto k4 = complete_graph(4);
  auto tk = trace_faces(k4, identity_of(k4));
  CHECK(tk.vertex_count == 4);
  CHECK(tk.edge_count == 6);
  CHECK(tk.euler_characteristic == 4 - 6 + tk.face_count);
  CHECK(tk.orientable);
  std::size_t darts = 0;
  for (const auto& f : tk.faces) darts += f.size();
  CHECK(darts == 12);
}

TEST_CASE("one negative edge on a triangle gives a crosscap") {
  auto k3 = complete_graph(3);
  auto emb = identity_of(k3);
  emb.signature[0] = -1;
  auto t = trace_faces(k3, emb);
  CHECK(t.face_count == 1);
  CHECK(t.faces[0].size() == 6);
  CHECK(t.euler_characteristic == 1);
  CHECK(!t.orientable);
  CHECK(t.genus == 1);  // projective plane
}

TEST_CASE("signature flips along a spanning tree do not change the surface") {
  // Flipping every edge at one vertex is a re-coordinatization; the trace
  // must land on the same Euler characteristic and orientability.
  auto k4 = complete_graph(4);
  auto emb = identity_of(k4);
  auto base = trace_faces(k4, emb);
  auto flipped = emb;
  for (int w : k4.adj[0]) {
    int e = k4.edge_index(0, w);
    flipped.signature[e] = -flipped.signature[e];
    std::reverse(flipped.rotation[0].begin(), flipped.rotation[0].end());
  }
  // Reversing the local rotation at the flipped vertex completes the
  // re-coordinatization only together with the sign change on its edges.
  auto t = trace_faces(k4, flipped);
  CHECK(t.euler_characteristic == base.euler_characteristic);
  CHECK(t.orientable == base.orientable);
}

TEST_CASE("isolated vertices add empty faces and spheres stay spheres") {
  auto g = make_graph(3, {{0, 1}});
  RotationEmbedding emb;
  emb.rotation = {{0}, {1}, {}};
  emb.signature = {1};
  auto t = trace_faces(g, emb);
  CHECK(t.face_count == 2);  // the digon walk plus the isolated vertex
  CHECK(t.euler_characteristic == 3 - 1 + 2);
  CHECK(t.genus == -1);  // disconnected: genus not defined here
}

TEST_CASE("malformed embeddings are rejected") {
  auto k3 = complete_graph(3);
  auto emb = identity_of(k3);
  emb.rotation[0] = {0, 0};
  CHECK_THROWS_AS(trace_faces(k3, emb), MalformedEmbedding);
  emb = identity_of(k3);
  emb.signature.pop_back();
  CHECK_THROWS_AS(trace_faces(k3, emb), MalformedEmbedding);
  emb = identity_of(k3);
  emb.signature[1] = 0;
  CHECK_THROWS_AS(trace_faces(k3, emb), MalformedEmbedding);
  emb = identity_of(k3);
  emb.rotation.pop_back();
  CHECK_THROWS_AS(trace_faces(k3, emb), MalformedEmbedding);
}

TEST_CASE("embedding JSON round trip") {
  auto k3 = complete_graph(3);
  auto emb = identity_of(k3);
  emb.signature[2] = -1;
  auto j = embedding_to_json(k3, emb);
  CHECK(j.contains("signature"));
  CHECK(j["euler"]["orientable"] == false);
  auto back = embedding_from_json(k3, j);
  CHECK(back.rotation == emb.rotation);
  CHECK(back.signature == emb.signature);
  // All-positive signatures are omitted from the JSON form.
  auto j2 = embedding_to_json(k3, identity_of(k3));
  CHECK(!j2.contains("signature"));
  CHECK(j2["euler"].contains("genus"));
  auto back2 = embedding_from_json(k3, j2);
  CHECK(back2.signature == std::vector<int>{1, 1, 1});
}

TEST_CASE("random rotation systems always trace consistently") {
  XorShift rng(20260817);
  for (int iter = 0; iter < 500; ++iter) {
    int n = 2 + rng.below(6);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.below(2)) edges.push_back({u, v});
    auto g = make_graph(n, edges);
    auto emb = identity_of(g);
    for (int v = 0; v < g.n; ++v)
      for (std::size_t i = emb.rotation[v].size(); i > 1; --i)
        std::swap(emb.rotation[v][i - 1], emb.rotation[v][rng.below(static_cast<int>(i))]);
    for (auto& s : emb.signature)
      if (rng.below(3) == 0) s = -1;
    auto t = trace_faces(g, emb);
    std::size_t darts = 0;
    for (const auto& f : t.faces) darts += f.size();
    CHECK(darts == 2 * g.edges.size());
    CHECK(t.euler_characteristic == t.vertex_count - t.edge_count + t.face_count);
    if (is_connected(g)) {
      CHECK(t.euler_characteristic <= 2);
      if (t.orientable) CHECK((2 - t.euler_characteristic) % 2 == 0);
      CHECK(t.genus == (t.orientable ? (2 - t.euler_characteristic) / 2
                                     : 2 - t.euler_characteristic));
    }
  }
}

TEST_CASE("Euler-type lower bounds") {
  CHECK(euler_genus_lower_bound(complete_graph(8)) == 2);
  CHECK(euler_genus_lower_bound(complete_graph(7)) == 1);
  CHECK(euler_crosscap_lower_bound(complete_graph(7)) == 2);
  CHECK(euler_genus_lower_bound(complete_bipartite(3, 3)) == 1);
  CHECK(euler_genus_lower_bound(path_graph(4)) == 0);
  CHECK(euler_crosscap_lower_bound(cycle_graph(5)) == 0);
  // Disconnected: bound is the max over components.
  auto g = make_graph(11, [] {
    auto ks = complete_graph(8);
    auto es = ks.edges;
    es.push_back({8, 9});
    es.push_back({9, 10});
    return es;
  }());
  CHECK(euler_genus_lower_bound(g) == 2);
}

TEST_CASE("degree pair bound for line graphs of dense graphs") {
  auto b = line_genus_degree_bound(complete_graph(8));
  // Two degree-7 stars: gamma(K7) + gamma(K7) = 2, and for the crosscap
  // 3 + 3 - 1 = 5 (one unit lost at the K7 exception).
  CHECK(b.genus_lower == 2);
  CHECK(b.crosscap_lower == 5);
  CHECK(b.v1 != b.v2);
  auto k5 = complete_graph(5);
  auto b5 = line_genus_degree_bound(k5);
  // gamma(K4) = 0 twice: bound clamps at 0.
  CHECK(b5.genus_lower == 0);
  CHECK(b5.crosscap_lower == 0);
}

TEST_CASE("closed-form surface formulas") {
  CHECK(formula_oracle("genus_complete", {5}).value == 1);
  CHECK(formula_oracle("genus_complete", {7}).value == 1);
  CHECK(formula_oracle("genus_complete", {8}).value == 2);
  CHECK(formula_oracle("genus_complete", {2}).value == 0);
  CHECK(formula_oracle("crosscap_complete", {5}).value == 1);
  CHECK(formula_oracle("crosscap_complete", {6}).value == 1);
  CHECK(formula_oracle("crosscap_complete", {7}).value == 3);  // the exceptional case
  CHECK(formula_oracle("crosscap_complete", {8}).value == 4);
  CHECK(formula_oracle("genus_bipartite", {3, 3}).value == 1);
  CHECK(formula_oracle("genus_bipartite", {4, 4}).value == 1);
  CHECK(formula_oracle("genus_bipartite", {3, 4}).value == 1);
  CHECK(formula_oracle("crosscap_bipartite", {3, 3}).value == 1);
  CHECK(formula_oracle("crosscap_bipartite", {3, 4}).value == 1);
  CHECK(formula_oracle("crosscap_bipartite", {4, 4}).value == 2);
  CHECK(formula_oracle("genus_line_star", {8}).value == 2);
  CHECK(formula_oracle("genus_line_star", {4}).value == 0);
  auto lk2n = formula_oracle("genus_line_k2n_lower", {6});
  CHECK(lk2n.value == 2);
  CHECK(lk2n.exact);
  auto lk2n5 = formula_oracle("genus_line_k2n_lower", {5});
  CHECK(!lk2n5.exact);  // n = 5 is one of the open residues
  auto cc26 = formula_oracle("crosscap_line_k2n_lower", {6});
  CHECK(cc26.value == 4);
  CHECK(!cc26.exact);  // n = 6 excluded
  auto cc27 = formula_oracle("crosscap_line_k2n_lower", {7});
  CHECK(cc27.value == 7);
  CHECK(!cc27.exact);  // 7 = 1 mod 6
  auto cc28 = formula_oracle("crosscap_line_k2n_lower", {8});
  CHECK(cc28.value == 10);
  CHECK(cc28.exact);
  CHECK(formula_oracle("genus_line_complete_lower", {5}).value == 1);
  CHECK(formula_oracle("genus_line_complete_lower", {6}).value == 4);
  CHECK(formula_oracle("crosscap_line_complete_lower", {5}).value == 2);
  CHECK(formula_oracle("crosscap_line_complete_lower", {6}).value == 7);
  CHECK(formula_oracle("book_complete", {4}).value == 2);
  CHECK(formula_oracle("book_complete", {7}).value == 4);
  CHECK(formula_oracle("book_k33", {}).value == 3);
  CHECK_THROWS_AS(formula_oracle("genus_complete", {}), OutOfRange);
  CHECK_THROWS_AS(formula_oracle("book_complete", {3}), OutOfRange);
  CHECK_THROWS_AS(formula_oracle("no_such_formula", {1}), OutOfRange);
}
