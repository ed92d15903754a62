// Simple labeled graphs: construction, named families, line graphs,
// induced subgraphs, connectivity/cycle queries, JSON serialization.
// Vertices are 0-based indices; labels are display annotations carried
// through derived constructions (line graphs name vertices by the
// endpoint labels of the underlying edge).
#ifndef RTL_GRAPH_HPP
#define RTL_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rtl/errors.hpp"

namespace rtl {

using ordered_json = nlohmann::ordered_json;

struct SimpleGraph {
  int n = 0;
  std::vector<std::string> labels;               // size n
  std::vector<std::vector<int>> adj;             // sorted neighbor lists
  std::vector<std::pair<int, int>> edges;        // u < v, sorted lexicographically
  std::vector<std::vector<std::uint64_t>> bits;  // adjacency bitset rows

  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const {
    return u != v && ((bits[u][static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u);
  }
  // Index into edges of {u, v}; -1 when the edge is absent.
  int edge_index(int u, int v) const;
};

// Canonical constructor: sorts and deduplicates edges, rejects loops and
// out-of-range endpoints. Labels default to decimal vertex indices.
SimpleGraph make_graph(int n, std::vector<std::pair<int, int>> edges,
                       std::vector<std::string> labels = {});

// Named families. Parameters below their stated minimum raise InvalidParameter.
SimpleGraph complete_graph(int n);                   // n >= 1
SimpleGraph complete_bipartite(int m, int n);        // m, n >= 1
SimpleGraph path_graph(int n);                       // n >= 1
SimpleGraph cycle_graph(int n);                      // n >= 3
SimpleGraph empty_graph(int n);                      // n >= 1
// Disjoint union of a and b plus every cross edge; labels carried over.
SimpleGraph join_graph(const SimpleGraph& a, const SimpleGraph& b);

// Parses compact names: "K5", "K2,3", "P4", "C6", "E3".
SimpleGraph named_graph(const std::string& name);

// Vertices are the edges of g; two are adjacent iff the edges share an
// endpoint. Vertex labels are "{a,b}" built from endpoint labels.
SimpleGraph line_graph(const SimpleGraph& g);

// Subgraph induced on verts (indices into g, duplicates rejected); vertex i of
// the result corresponds to verts[i] and keeps its label.
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& verts);

// Identity on (n, labels, edge set) -- the library's graph equality.
bool graphs_equal(const SimpleGraph& a, const SimpleGraph& b);

bool is_connected(const SimpleGraph& g);  // vacuously true for n <= 1
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);
int min_degree(const SimpleGraph& g);  // 0 for the empty vertex set
int max_degree(const SimpleGraph& g);
bool is_complete_graph(const SimpleGraph& g);
// Path graphs: connected, acyclic, max degree <= 2 (includes K1 and K2).
bool is_path_graph(const SimpleGraph& g);

// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const SimpleGraph& g, int src);
// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const SimpleGraph& g);
// Length of a shortest cycle using edge ei; nullopt if ei is a bridge.
std::optional<int> shortest_cycle_through_edge(const SimpleGraph& g, int ei);

// JSON schema: {"labels": [...], "edges": [[i, j], ...]} with i < j.
ordered_json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const ordered_json& j);  // IoError on malformed input
SimpleGraph load_graph_file(const std::string& path);
void save_graph_file(const SimpleGraph& g, const std::string& path);

}  // namespace rtl

#endif  // RTL_GRAPH_HPP
