// Book thickness solver. Spine orders are enumerated with vertex 0 pinned
// first and each reflection pair folded to its lexicographically smaller
// member (page validity only depends on the cyclic order). Per order, the
// minimum page count is the chromatic number of the edge-interleaving
// conflict graph, computed by branch and bound with a greedy clique bound.
#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "rtl/book.hpp"

namespace rtl {

namespace {

struct SearchCtx {
  const Budget* budget;
  std::chrono::steady_clock::time_point start;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  // Returns false once the node or time budget is spent.
  bool tick() {
    if (exhausted) return false;
    ++nodes;
    if (nodes > budget->nodes) {
      exhausted = true;
      return false;
    }
    if ((nodes & 0x3ff) == 0 && budget->seconds > 0) {
      double el = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      if (el > budget->seconds) {
        exhausted = true;
        return false;
      }
    }
    return true;
  }
};

// Conflict graph of a spine order: edges of g as vertices, adjacent iff
// their endpoints alternate along the spine.
std::vector<std::vector<int>> conflict_graph(const SimpleGraph& g,
                                             const std::vector<int>& pos) {
  int m = g.edge_count();
  std::vector<std::pair<int, int>> span(m);
  for (int e = 0; e < m; ++e) {
    int a = pos[g.edges[e].first], b = pos[g.edges[e].second];
    span[e] = {std::min(a, b), std::max(a, b)};
  }
  std::vector<std::vector<int>> adj(m);
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      auto [a, b] = span[e];
      auto [c, d] = span[f];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
        adj[e].push_back(f);
        adj[f].push_back(e);
      }
    }
  return adj;
}

int greedy_clique(const std::vector<std::vector<int>>& adj) {
  int m = static_cast<int>(adj.size());
  std::vector<int> deg(m);
  for (int v = 0; v < m; ++v) deg[v] = static_cast<int>(adj[v].size());
  int size = 0;
  std::vector<char> cand(m, 1);
  for (;;) {
    int best = -1;
    for (int v = 0; v < m; ++v)
      if (cand[v] && (best < 0 || deg[v] > deg[best])) best = v;
    if (best < 0) return size;
    ++size;
    std::vector<char> next(m, 0);
    for (int u : adj[best]) next[u] = cand[u];
    cand = next;
  }
}

// Decides whether the conflict graph is k-colorable; when `out` is given,
// finds the lexicographically smallest proper coloring instead of just
// deciding. Decision mode picks the most color-constrained vertex next and
// introduces pages canonically (a new page only one past the maximum in
// use); lex mode colors in index order over the full page range.
bool color_decide(const std::vector<std::vector<int>>& adj, int k,
                  SearchCtx* ctx, std::vector<int>* out) {
  int m = static_cast<int>(adj.size());
  std::vector<int> color(m, -1);
  std::function<bool(int, int)> go = [&](int done, int used) {
    if (done == m) {
      if (out) *out = color;
      return true;
    }
    if (!ctx->tick()) return false;
    int v = -1;
    if (out) {
      v = done;  // lex mode: strict index order
    } else {
      // Most saturated first, ties to higher degree then lower index.
      int best_sat = -1, best_deg = -1;
      for (int u = 0; u < m; ++u) {
        if (color[u] >= 0) continue;
        unsigned mask = 0;
        for (int w : adj[u])
          if (color[w] >= 0) mask |= 1u << color[w];
        int sat = __builtin_popcount(mask);
        int deg = static_cast<int>(adj[u].size());
        if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
          best_sat = sat;
          best_deg = deg;
          v = u;
        }
      }
    }
    int top = out ? k : std::min(k, used + 1);
    for (int c = 0; c < top; ++c) {
      bool ok = true;
      for (int u : adj[v])
        if (color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (go(done + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
      if (ctx->exhausted) return false;
    }
    return false;
  };
  return go(0, 0);
}

std::vector<int> path_spine(const SimpleGraph& g) {
  if (g.n == 0) return {};
  int start = 0;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) <= 1) {
      start = v;
      break;
    }
  std::vector<int> order{start};
  std::vector<char> seen(g.n, 0);
  seen[start] = 1;
  while (static_cast<int>(order.size()) < g.n) {
    int cur = order.back();
    for (int u : g.adj[cur])
      if (!seen[u]) {
        seen[u] = 1;
        order.push_back(u);
        break;
      }
  }
  return order;
}

BookEmbedding assemble(const SimpleGraph& g, const std::vector<int>& spine,
                       const std::vector<int>& coloring, int k) {
  BookEmbedding be;
  be.spine = spine;
  be.pages.assign(k, {});
  for (int e = 0; e < g.edge_count(); ++e) be.pages[coloring[e]].push_back(e);
  return be;
}

}  // namespace

BookResult book_thickness(const SimpleGraph& g, const Budget& budget) {
  if (!is_connected(g)) throw Disconnected("book thickness needs a connected graph");
  BookResult r;

  if (g.n == 0 || is_path_graph(g)) {
    r.lower = r.upper = 0;
    r.exact = true;
    r.method = "lower:path characterization;upper:path characterization";
    r.witness = BookEmbedding{path_spine(g), {}};
    return r;
  }
  r.lower = 1;
  std::string lower_src = "path characterization";
  // The characterization consults can run out of budget on their own; the
  // result stays a bounded invariant, so keep the ladder climbed so far.
  bool ladder_cut = false;
  try {
    OuterplanarityResult op = is_outerplanar(g, budget);
    if (!op.outerplanar) {
      r.lower = 2;
      lower_src = "outerplanarity";
      PlanarityResult pl = is_planar(g, budget);
      if (!pl.planar) {
        r.lower = 3;
        lower_src = "planarity";
      }
    }
  } catch (const BudgetExhausted&) {
    ladder_cut = true;
  }

  if (g.n > kBookExactVertexCap) {
    r.upper = (g.n + 1) / 2;  // complete-graph pages suffice for any subgraph
    r.budget_exhausted = ladder_cut;
    r.method = "lower:" + lower_src + ";upper:complete graph bound";
    return r;
  }

  SearchCtx ctx{&budget, std::chrono::steady_clock::now(), 0, false};
  int n = g.n;
  int best = g.edge_count() + 1;
  std::vector<int> best_order;

  std::vector<int> rest(n > 0 ? n - 1 : 0);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<int> pos(n, 0);
  bool stopped = false;
  do {
    if (n >= 3 && rest.front() > rest.back()) continue;  // reflection fold
    if (!ctx.tick()) {
      stopped = true;
      break;
    }
    for (int i = 0; i + 1 < n; ++i) pos[rest[i]] = i + 1;
    pos[0] = 0;
    std::vector<std::vector<int>> adj = conflict_graph(g, pos);
    int lb = greedy_clique(adj);
    if (lb >= best) continue;
    for (int k = std::max(lb, 1); k < best; ++k) {
      if (color_decide(adj, k, &ctx, nullptr)) {
        best = k;
        best_order.assign(n, 0);
        for (int i = 0; i + 1 < n; ++i) best_order[i + 1] = rest[i];
        break;
      }
      if (ctx.exhausted) break;
    }
    if (ctx.exhausted) {
      stopped = true;
      break;
    }
    if (best == r.lower) break;  // cannot do better than the lower bound
  } while (std::next_permutation(rest.begin(), rest.end()));

  r.nodes_used = ctx.nodes;
  if (stopped) {
    r.budget_exhausted = true;
    if (best <= g.edge_count()) r.upper = best;
    r.method = "lower:" + lower_src + ";upper:" +
               (best <= g.edge_count() ? "spine search partial" : "none");
    return r;
  }

  r.upper = best;
  if (best > r.lower) {
    r.lower = best;  // full enumeration proves no order does better
    lower_src = "spine search";
  }
  r.exact = true;
  r.method = "lower:" + lower_src + ";upper:spine search";

  // Second pass: lexicographically smallest coloring for the winning order.
  for (int i = 0; i < n; ++i) pos[best_order[i]] = i;
  std::vector<std::vector<int>> adj = conflict_graph(g, pos);
  std::vector<int> coloring;
  SearchCtx ctx2{&budget, std::chrono::steady_clock::now(), 0, false};
  color_decide(adj, best, &ctx2, &coloring);
  r.nodes_used += ctx2.nodes;
  r.witness = assemble(g, best_order, coloring, best);
  return r;
}

bool verify_book_embedding(const SimpleGraph& g, const BookEmbedding& be) {
  int n = g.n, m = g.edge_count();
  if (static_cast<int>(be.spine.size()) != n)
    throw MalformedWitness("spine length differs from the vertex count");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = be.spine[i];
    if (v < 0 || v >= n) throw MalformedWitness("spine vertex out of range");
    if (pos[v] >= 0) throw MalformedWitness("spine repeats a vertex");
    pos[v] = i;
  }
  std::vector<int> uses(m, 0);
  for (const std::vector<int>& page : be.pages)
    for (int e : page) {
      if (e < 0 || e >= m) throw MalformedWitness("edge index out of range");
      ++uses[e];
    }
  for (int e = 0; e < m; ++e) {
    if (uses[e] > 1) throw MalformedWitness("edge assigned to several pages");
    if (uses[e] == 0) {
      int d = pos[g.edges[e].first] - pos[g.edges[e].second];
      if (d != 1 && d != -1)
        throw MalformedWitness("edge missing from every page does not lie "
                               "on the spine");
    }
  }

  for (const std::vector<int>& page : be.pages)
    for (std::size_t i = 0; i < page.size(); ++i)
      for (std::size_t j = i + 1; j < page.size(); ++j) {
        int a = pos[g.edges[page[i]].first], b = pos[g.edges[page[i]].second];
        int c = pos[g.edges[page[j]].first], d = pos[g.edges[page[j]].second];
        if (a > b) std::swap(a, b);
        if (c > d) std::swap(c, d);
        if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
          return false;
      }
  return true;
}

ordered_json book_embedding_to_json(const BookEmbedding& be) {
  ordered_json j;
  j["spine"] = be.spine;
  j["pages"] = be.pages;
  return j;
}

BookEmbedding book_embedding_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("spine") || !j.contains("pages"))
    throw IoError("book embedding JSON needs 'spine' and 'pages'");
  BookEmbedding be;
  try {
    be.spine = j.at("spine").get<std::vector<int>>();
    be.pages = j.at("pages").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw IoError("book embedding JSON has malformed entries");
  }
  return be;
}

}  // namespace rtl
