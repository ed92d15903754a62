#include "rtl/iso.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace rtl {

namespace {

// Iterated neighborhood refinement; returns stable color ids shared between
// both graphs so classes can be compared across them.
std::pair<std::vector<int>, std::vector<int>> joint_colors(const SimpleGraph& a,
                                                           const SimpleGraph& b) {
  std::vector<int> ca(a.n), cb(b.n);
  for (int v = 0; v < a.n; ++v) ca[v] = a.degree(v);
  for (int v = 0; v < b.n; ++v) cb[v] = b.degree(v);
  for (int round = 0; round < 4; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> dict;
    auto refine = [&dict](const SimpleGraph& g, std::vector<int>& c) {
      std::vector<std::pair<int, std::vector<int>>> sig(g.n);
      for (int v = 0; v < g.n; ++v) {
        std::vector<int> nb;
        nb.reserve(g.adj[v].size());
        for (int w : g.adj[v]) nb.push_back(c[w]);
        std::sort(nb.begin(), nb.end());
        sig[v] = {c[v], std::move(nb)};
      }
      std::vector<int> next(g.n);
      for (int v = 0; v < g.n; ++v) {
        auto it = dict.find(sig[v]);
        if (it == dict.end()) it = dict.emplace(sig[v], static_cast<int>(dict.size())).first;
        next[v] = it->second;
      }
      c = std::move(next);
    };
    refine(a, ca);
    refine(b, cb);
  }
  return {std::move(ca), std::move(cb)};
}

struct IsoSearch {
  const SimpleGraph& a;
  const SimpleGraph& b;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<int> order;    // a-vertices, most constrained first
  std::vector<int> mapping;  // a vertex -> b vertex or -1
  std::vector<char> used;    // b vertex already taken

  bool extend(std::size_t k) {
    if (k == order.size()) return true;
    int u = order[k];
    for (int x = 0; x < b.n; ++x) {
      if (used[x] || cb[x] != ca[u]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        int v = order[j];
        ok = a.has_edge(u, v) == b.has_edge(x, mapping[v]);
      }
      if (!ok) continue;
      mapping[u] = x;
      used[x] = 1;
      if (extend(k + 1)) return true;
      mapping[u] = -1;
      used[x] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.n > kIsoVertexCap || b.n > kIsoVertexCap)
    throw CapExceeded("isomorphism search capped at " + std::to_string(kIsoVertexCap) +
                      " vertices");
  if (a.n != b.n || a.edge_count() != b.edge_count()) return std::nullopt;
  if (a.n == 0) return std::vector<int>{};
  auto [ca, cb] = joint_colors(a, b);
  {
    std::vector<int> sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> class_size(a.n + b.n, 0);
  for (int v = 0; v < a.n; ++v) ++class_size[ca[v]];
  IsoSearch s{a, b, ca, cb, {}, std::vector<int>(a.n, -1), std::vector<char>(b.n, 0)};
  s.order.resize(a.n);
  for (int v = 0; v < a.n; ++v) s.order[v] = v;
  std::sort(s.order.begin(), s.order.end(), [&](int u, int v) {
    if (class_size[ca[u]] != class_size[ca[v]]) return class_size[ca[u]] < class_size[ca[v]];
    if (a.degree(u) != a.degree(v)) return a.degree(u) > a.degree(v);
    return u < v;
  });
  if (!s.extend(0)) return std::nullopt;
  return s.mapping;
}

namespace {

struct SubdivSearch {
  const SimpleGraph& host;
  const SimpleGraph& pat;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> order;   // pattern vertices, highest degree first
  std::vector<int> branch;  // pattern vertex -> host vertex or -1
  std::vector<char> used;   // host vertex consumed by a branch or interior
  std::vector<std::vector<int>> paths;

  void tick() {
    if (++nodes > budget)
      throw BudgetExhausted("subdivision search exceeded " + std::to_string(budget) +
                            " nodes");
  }

  bool reachable(int from, int to) const {
    // BFS through unused vertices (endpoints exempt).
    std::vector<char> seen(host.n, 0);
    std::queue<int> q;
    seen[from] = 1;
    q.push(from);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : host.adj[v]) {
        if (w == to) return true;
        if (!seen[w] && !used[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    return false;
  }

  bool route_edges(std::size_t k, std::vector<int>& path) {
    if (k == pat.edges.size()) return true;
    auto [p, q] = pat.edges[k];
    int from = branch[p], to = branch[q];
    if (!reachable(from, to)) return false;
    path.clear();
    path.push_back(from);
    return extend_path(k, from, to, path);
  }

  bool extend_path(std::size_t k, int cur, int to, std::vector<int>& path) {
    for (int w : host.adj[cur]) {
      tick();
      if (w == to) {
        paths[k] = path;
        paths[k].push_back(to);
        std::vector<int> next_path;
        if (route_edges(k + 1, next_path)) return true;
        continue;
      }
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (extend_path(k, w, to, path)) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  }

  bool place(std::size_t k) {
    if (k == order.size()) {
      std::vector<int> path;
      return route_edges(0, path);
    }
    int p = order[k];
    for (int v = 0; v < host.n; ++v) {
      if (used[v] || host.degree(v) < pat.degree(p)) continue;
      tick();
      branch[p] = v;
      used[v] = 1;
      if (place(k + 1)) return true;
      branch[p] = -1;
      used[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<SubdivisionWitness> contains_subdivision(const SimpleGraph& host,
                                                       const SimpleGraph& pattern,
                                                       std::uint64_t node_budget) {
  if (host.n > kIsoVertexCap)
    throw CapExceeded("subdivision host capped at " + std::to_string(kIsoVertexCap) +
                      " vertices");
  if (pattern.n > kSubdivisionPatternCap)
    throw CapExceeded("subdivision pattern capped at " +
                      std::to_string(kSubdivisionPatternCap) + " vertices");
  if (pattern.n > host.n || pattern.edge_count() > host.edge_count()) return std::nullopt;
  SubdivSearch s{host, pattern, node_budget, 0, {}, std::vector<int>(pattern.n, -1),
                 std::vector<char>(host.n, 0), {}};
  s.paths.resize(pattern.edges.size());
  s.order.resize(pattern.n);
  for (int v = 0; v < pattern.n; ++v) s.order[v] = v;
  std::sort(s.order.begin(), s.order.end(), [&](int u, int v) {
    if (pattern.degree(u) != pattern.degree(v)) return pattern.degree(u) > pattern.degree(v);
    return u < v;
  });
  if (!s.place(0)) return std::nullopt;
  SubdivisionWitness w;
  w.branch = s.branch;
  w.paths = s.paths;
  return w;
}

}  // namespace rtl
