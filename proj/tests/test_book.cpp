// Unit tests for book thickness: classification theorems, solver/verifier
// agreement, witness determinism, and random-graph laws.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "rtl/book.hpp"
#include "rtl/embed.hpp"
#include "rtl/graph.hpp"

using namespace rtl;

namespace {

struct XorShift {
  std::uint64_t s;
  explicit XorShift(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int below(int n) { return static_cast<int>(next() % n); }
};

SimpleGraph random_connected(XorShift* rng, int max_n, int percent) {
  for (;;) {
    int n = 2 + rng->below(max_n - 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng->below(100) < percent) edges.emplace_back(i, j);
    SimpleGraph g = make_graph(n, std::move(edges));
    if (is_connected(g)) return g;
  }
}

int exact_bt(const SimpleGraph& g) {
  BookResult r = book_thickness(g);
  REQUIRE(r.exact);
  REQUIRE(r.lower == r.upper);
  REQUIRE(r.witness.has_value());
  CHECK(verify_book_embedding(g, *r.witness));
  CHECK(static_cast<int>(r.witness->pages.size()) == r.upper);
  return r.upper;
}

}  // namespace

TEST_CASE("paths and near-paths sit at zero pages") {
  CHECK(exact_bt(path_graph(5)) == 0);
  CHECK(exact_bt(complete_graph(1)) == 0);
  CHECK(exact_bt(complete_graph(2)) == 0);
  BookResult p = book_thickness(path_graph(4));
  CHECK(p.witness->pages.empty());
  CHECK(verify_book_embedding(path_graph(4), *p.witness));
}

TEST_CASE("outerplanar non-paths take exactly one page") {
  CHECK(exact_bt(cycle_graph(6)) == 1);
  CHECK(exact_bt(cycle_graph(3)) == 1);
  // A triangle with a pendant vertex: still outerplanar, not a path.
  CHECK(exact_bt(make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})) == 1);
}

TEST_CASE("complete graphs need one page per two vertices") {
  CHECK(exact_bt(complete_graph(4)) == 2);
  CHECK(exact_bt(complete_graph(5)) == 3);
  CHECK(exact_bt(complete_graph(6)) == 3);
  CHECK(exact_bt(complete_graph(7)) == 4);
}

TEST_CASE("bipartite and planar benchmarks match known values") {
  CHECK(exact_bt(complete_bipartite(3, 3)) == 3);
  // Octahedron and prism are planar with a Hamiltonian cycle: two pages.
  CHECK(exact_bt(line_graph(complete_graph(4))) == 2);
  CHECK(exact_bt(line_graph(complete_bipartite(2, 3))) == 2);
}

TEST_CASE("method strings name the deciding arguments") {
  BookResult path = book_thickness(path_graph(3));
  CHECK(path.method == "lower:path characterization;upper:path characterization");
  BookResult k33 = book_thickness(complete_bipartite(3, 3));
  CHECK(k33.method == "lower:planarity;upper:spine search");
  BookResult k7 = book_thickness(complete_graph(7));
  // 4 > the planarity filter's 3, so full enumeration set the lower bound.
  CHECK(k7.method == "lower:spine search;upper:spine search");
}

TEST_CASE("witnesses are deterministic and lexicographically canonical") {
  BookResult a = book_thickness(complete_graph(5));
  BookResult b = book_thickness(complete_graph(5));
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(a.witness->spine == b.witness->spine);
  CHECK(a.witness->pages == b.witness->pages);
  CHECK(a.witness->spine[0] == 0);
  CHECK(a.nodes_used == b.nodes_used);
}

TEST_CASE("verifier accepts valid embeddings and rejects interleavings") {
  SimpleGraph c6 = cycle_graph(6);
  OuterplanarityResult op = is_outerplanar(c6);
  REQUIRE(op.outerplanar);
  BookEmbedding one_page;
  one_page.spine = op.outer_order;
  one_page.pages.assign(1, {});
  for (int e = 0; e < c6.edge_count(); ++e) one_page.pages[0].push_back(e);
  CHECK(verify_book_embedding(c6, one_page));

  SimpleGraph k4 = complete_graph(4);
  BookEmbedding crossed;
  crossed.spine = {0, 1, 2, 3};
  crossed.pages.assign(1, {});
  for (int e = 0; e < k4.edge_count(); ++e) crossed.pages[0].push_back(e);
  // {0,2} and {1,3} interleave along 0,1,2,3 yet share the page.
  CHECK(!verify_book_embedding(k4, crossed));
}

TEST_CASE("verifier rejects structural garbage as malformed") {
  SimpleGraph k4 = complete_graph(4);
  BookEmbedding be;
  be.spine = {0, 1, 2};
  CHECK_THROWS_AS(verify_book_embedding(k4, be), MalformedWitness);

  be.spine = {0, 1, 2, 2};
  CHECK_THROWS_AS(verify_book_embedding(k4, be), MalformedWitness);

  be.spine = {0, 1, 2, 3};
  be.pages = {{0, 1, 2, 3, 4, 5}, {5}};
  CHECK_THROWS_AS(verify_book_embedding(k4, be), MalformedWitness);

  be.pages = {{0, 1, 99}};
  CHECK_THROWS_AS(verify_book_embedding(k4, be), MalformedWitness);

  // Edge {0,2} is not spine-consecutive, so omitting it is malformed.
  be.spine = {0, 1, 2, 3};
  be.pages = {{0, 2, 3, 4, 5}};
  CHECK_THROWS_AS(verify_book_embedding(k4, be), MalformedWitness);

  // Omitting spine edges is fine: a path needs no pages at all.
  SimpleGraph p4 = path_graph(4);
  BookEmbedding on_spine{{0, 1, 2, 3}, {}};
  CHECK(verify_book_embedding(p4, on_spine));
}

TEST_CASE("witness JSON round-trips and rejects malformed documents") {
  BookResult r = book_thickness(complete_graph(4));
  REQUIRE(r.witness.has_value());
  ordered_json j = book_embedding_to_json(*r.witness);
  BookEmbedding back = book_embedding_from_json(j);
  CHECK(back.spine == r.witness->spine);
  CHECK(back.pages == r.witness->pages);
  CHECK(verify_book_embedding(complete_graph(4), back));

  CHECK_THROWS_AS(book_embedding_from_json(ordered_json::parse("{}")), IoError);
  CHECK_THROWS_AS(
      book_embedding_from_json(ordered_json::parse("{\"spine\":1,\"pages\":[]}")),
      IoError);
}

TEST_CASE("budget exhaustion reports bounds without exactness") {
  Budget tiny{40, 120.0};
  BookResult r = book_thickness(complete_graph(7), tiny);
  CHECK(r.budget_exhausted);
  CHECK(!r.exact);
  CHECK(r.lower == 3);  // nonplanarity filter
  CHECK(r.nodes_used <= 2 * tiny.nodes);
}

TEST_CASE("oversized graphs get sound bounds instead of a stall") {
  BookResult r = book_thickness(complete_graph(14));
  CHECK(!r.exact);
  CHECK(r.lower == 3);
  CHECK(r.upper == 7);
  CHECK(r.method == "lower:planarity;upper:complete graph bound");
  CHECK(!r.witness.has_value());
}

TEST_CASE("disconnected input is rejected") {
  SimpleGraph two = make_graph(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(book_thickness(two), Disconnected);
}

TEST_CASE("random graphs obey the path and outerplanar characterizations") {
  XorShift rng(20260817);
  for (int trial = 0; trial < 200; ++trial) {
    SimpleGraph g = random_connected(&rng, 9, 30);
    CAPTURE(trial);
    CAPTURE(g.n);
    CAPTURE(g.edge_count());
    BookResult r = book_thickness(g);
    REQUIRE(r.exact);
    CHECK((r.upper == 0) == is_path_graph(g));
    CHECK((r.upper <= 1) == is_outerplanar(g).outerplanar);
    REQUIRE(r.witness.has_value());
    CHECK(verify_book_embedding(g, *r.witness));
  }
}

TEST_CASE("book thickness is monotone under subgraphs") {
  XorShift rng(97531);
  int done = 0;
  while (done < 25) {
    SimpleGraph g = random_connected(&rng, 8, 45);
    if (g.edge_count() < 2) continue;
    // Drop one random edge; skip if that disconnects the graph.
    std::vector<std::pair<int, int>> edges = g.edges;
    edges.erase(edges.begin() + rng.below(static_cast<int>(edges.size())));
    SimpleGraph h = make_graph(g.n, std::move(edges), g.labels);
    if (!is_connected(h)) continue;
    CHECK(exact_bt(h) <= exact_bt(g));
    ++done;
  }
}
