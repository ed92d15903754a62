#include "rtl/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace rtl {

int SimpleGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges.begin());
}

SimpleGraph make_graph(int n, std::vector<std::pair<int, int>> edges,
                       std::vector<std::string> labels) {
  if (n < 0) throw InvalidParameter("vertex count must be nonnegative");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw InvalidParameter("label count does not match vertex count");
  SimpleGraph g;
  g.n = n;
  if (labels.empty()) {
    g.labels.reserve(n);
    for (int i = 0; i < n; ++i) g.labels.push_back(std::to_string(i));
  } else {
    g.labels = std::move(labels);
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidParameter("edge endpoint out of range");
    if (u == v) throw InvalidParameter("loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  g.bits.assign(n, std::vector<std::uint64_t>(words, 0));
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
    g.bits[u][static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63);
    g.bits[v][static_cast<std::size_t>(u) >> 6] |= 1ull << (u & 63);
  }
  for (auto& lst : g.adj) std::sort(lst.begin(), lst.end());
  return g;
}

SimpleGraph complete_graph(int n) {
  if (n < 1) throw InvalidParameter("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, std::move(e));
}

SimpleGraph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw InvalidParameter("complete bipartite graph needs m, n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
  return make_graph(m + n, std::move(e));
}

SimpleGraph path_graph(int n) {
  if (n < 1) throw InvalidParameter("path graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, std::move(e));
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw InvalidParameter("cycle graph needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, std::move(e));
}

SimpleGraph empty_graph(int n) {
  if (n < 1) throw InvalidParameter("empty graph needs n >= 1");
  return make_graph(n, {});
}

SimpleGraph join_graph(const SimpleGraph& a, const SimpleGraph& b) {
  std::vector<std::pair<int, int>> e = a.edges;
  for (auto [u, v] : b.edges) e.emplace_back(a.n + u, a.n + v);
  for (int u = 0; u < a.n; ++u)
    for (int v = 0; v < b.n; ++v) e.emplace_back(u, a.n + v);
  std::vector<std::string> labels = a.labels;
  labels.insert(labels.end(), b.labels.begin(), b.labels.end());
  return make_graph(a.n + b.n, std::move(e), std::move(labels));
}

SimpleGraph named_graph(const std::string& name) {
  if (name.size() < 2) throw InvalidParameter("unrecognized graph name: " + name);
  char kind = name[0];
  std::string rest = name.substr(1);
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidParameter("unrecognized graph name: " + name);
    return std::stoi(s);
  };
  auto comma = rest.find(',');
  if (kind == 'K' && comma != std::string::npos)
    return complete_bipartite(parse_int(rest.substr(0, comma)),
                              parse_int(rest.substr(comma + 1)));
  switch (kind) {
    case 'K': return complete_graph(parse_int(rest));
    case 'P': return path_graph(parse_int(rest));
    case 'C': return cycle_graph(parse_int(rest));
    case 'E': return empty_graph(parse_int(rest));
    default: throw InvalidParameter("unrecognized graph name: " + name);
  }
}

SimpleGraph line_graph(const SimpleGraph& g) {
  int m = g.edge_count();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (auto [u, v] : g.edges)
    labels.push_back("{" + g.labels[u] + "," + g.labels[v] + "}");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = g.edges[i];
      auto [c, d] = g.edges[j];
      if (a == c || a == d || b == c || b == d) e.emplace_back(i, j);
    }
  return make_graph(m, std::move(e), std::move(labels));
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& verts) {
  std::vector<int> index(g.n, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    int v = verts[i];
    if (v < 0 || v >= g.n) throw InvalidParameter("induced subgraph vertex out of range");
    if (index[v] != -1) throw InvalidParameter("induced subgraph vertex repeated");
    index[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges)
    if (index[u] != -1 && index[v] != -1) e.emplace_back(index[u], index[v]);
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (int v : verts) labels.push_back(g.labels[v]);
  return make_graph(static_cast<int>(verts.size()), std::move(e), std::move(labels));
}

bool graphs_equal(const SimpleGraph& a, const SimpleGraph& b) {
  return a.n == b.n && a.labels == b.labels && a.edges == b.edges;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const SimpleGraph& g) {
  return g.n <= 1 || connected_components(g).size() == 1;
}

int min_degree(const SimpleGraph& g) {
  int d = g.n == 0 ? 0 : g.degree(0);
  for (int v = 1; v < g.n; ++v) d = std::min(d, g.degree(v));
  return d;
}

int max_degree(const SimpleGraph& g) {
  int d = 0;
  for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
  return d;
}

bool is_complete_graph(const SimpleGraph& g) {
  return 2 * g.edge_count() == g.n * (g.n - 1);
}

bool is_path_graph(const SimpleGraph& g) {
  return is_connected(g) && g.edge_count() == g.n - 1 && max_degree(g) <= 2;
}

std::vector<int> bfs_distances(const SimpleGraph& g, int src) {
  std::vector<int> dist(g.n, -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.adj[v])
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::optional<int> shortest_cycle_through_edge(const SimpleGraph& g, int ei) {
  if (ei < 0 || ei >= g.edge_count()) throw InvalidParameter("edge index out of range");
  auto [u, v] = g.edges[ei];
  // Shortest u-v path avoiding the edge itself, plus the edge.
  std::vector<int> dist(g.n, -1);
  std::queue<int> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int w : g.adj[x]) {
      if ((x == u && w == v) || (x == v && w == u)) continue;
      if (dist[w] == -1) {
        dist[w] = dist[x] + 1;
        q.push(w);
      }
    }
  }
  if (dist[v] == -1) return std::nullopt;
  return dist[v] + 1;
}

std::optional<int> girth(const SimpleGraph& g) {
  std::optional<int> best;
  for (int ei = 0; ei < g.edge_count(); ++ei) {
    auto c = shortest_cycle_through_edge(g, ei);
    if (c && (!best || *c < *best)) best = c;
  }
  return best;
}

ordered_json graph_to_json(const SimpleGraph& g) {
  ordered_json j;
  j["labels"] = g.labels;
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : g.edges) edges.push_back(ordered_json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

SimpleGraph graph_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("edges"))
    throw IoError("graph JSON must be an object with labels and edges");
  if (!j["labels"].is_array()) throw IoError("graph JSON labels must be an array");
  std::vector<std::string> labels;
  for (const auto& l : j["labels"]) {
    if (!l.is_string()) throw IoError("graph JSON labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  int n = static_cast<int>(labels.size());
  if (!j["edges"].is_array()) throw IoError("graph JSON edges must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw IoError("graph JSON edges must be integer pairs");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw IoError("graph JSON edge endpoints out of range");
    edges.emplace_back(u, v);
  }
  try {
    return make_graph(n, std::move(edges), std::move(labels));
  } catch (const InvalidParameter& e) {
    throw IoError(std::string("graph JSON invalid: ") + e.what());
  }
}

SimpleGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
  return graph_from_json(j);
}

void save_graph_file(const SimpleGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << graph_to_json(g).dump(2) << "\n";
}

}  // namespace rtl
