// Branch-and-bound decision search over rotation schemes. One engine serves
// four callers: orientable genus decisions, non-orientable crosscap
// decisions, planarity (genus 0), and exhaustive genus-0 enumeration.
//
// The search traces faces incrementally over "sided darts": state 2d+s
// means dart d is about to be traversed while the tracer's local side is s.
// Crossing an edge with signature -1 flips the side; side 0 consumes
// rotation-successor links, side 1 rotation-predecessor links. Faces close
// when the trace returns to its start state. Each traversal also consumes
// the mirror state (rev d, side^sig^1) of the twin orbit, so every face is
// traced exactly once and the face count is direct.
//
// Soundness of the pruning bound: every still-open or future face consumes
// at least lambda traversals, where lambda is the minimum over edges of the
// shortest cycle length through that edge (2 for bridges); the current
// partial face needs at least max(cyc_len over its darts) total. If even
// the optimistic face count misses the target, the branch dies.
#include <algorithm>
#include <chrono>
#include <functional>

#include "embed_internal.hpp"

namespace rtl {

namespace {

using detail::DartMap;

struct BudgetStop {};

struct Engine {
  const SimpleGraph& g;
  DartMap dm;
  Budget budget;
  bool nonorient = false;
  int f_needed = 0;
  std::function<bool()> on_sat;  // returns true to stop the search

  std::vector<int> cyc_len;  // per edge; >= 3 unless the edge is a bridge
  int lambda = 2;
  std::vector<int> next_, prev_;  // rotation links per dart, -1 unset
  std::vector<int> ufp;           // union-find over darts of one vertex
  std::vector<int> links_at;      // assigned rotation links per vertex
  std::vector<int> sig;           // per edge: 0 = +1, 1 = -1, -1 = unset
  int neg_count = 0, unset_sig = 0;

  std::vector<char> consumed;  // per sided state
  int traversals = 0;          // representative dart traversals so far

  bool face_open = false;
  int start_sd = -1, cur_sd = -1;
  int cur_len = 0, cur_need = 0;
  std::vector<int> cur_walk;
  std::vector<std::vector<int>> closed_walks;
  int f_closed = 0;

  std::vector<int> root_order;  // states, most cycle-constrained first
  std::size_t root_ptr = 0;

  std::uint64_t nodes = 0;
  std::chrono::steady_clock::time_point t_start;

  Engine(const SimpleGraph& gg, Budget b) : g(gg), dm(gg), budget(b) {}

  void setup(bool nonorientable_mode, int faces_needed, bool fix_complete) {
    nonorient = nonorientable_mode;
    f_needed = faces_needed;
    cyc_len.resize(dm.ne);
    for (int e = 0; e < dm.ne; ++e) {
      auto c = shortest_cycle_through_edge(g, e);
      cyc_len[e] = c ? *c : 2;
    }
    lambda = dm.ne ? *std::min_element(cyc_len.begin(), cyc_len.end()) : 2;
    next_.assign(dm.nd, -1);
    prev_.assign(dm.nd, -1);
    ufp.resize(dm.nd);
    for (int d = 0; d < dm.nd; ++d) ufp[d] = d;
    links_at.assign(dm.nv, 0);
    if (nonorient) {
      // Spanning-tree signatures are +1 without loss of generality; only
      // the remaining edges branch.
      sig.assign(dm.ne, -1);
      std::vector<char> seen(dm.nv, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[v])
          if (!seen[w]) {
            seen[w] = 1;
            sig[g.edge_index(v, w)] = 0;
            stack.push_back(w);
          }
      }
      unset_sig = 0;
      for (int e = 0; e < dm.ne; ++e)
        if (sig[e] == -1) ++unset_sig;
    } else {
      sig.assign(dm.ne, 0);
      unset_sig = 0;
    }
    consumed.assign(2 * dm.nd, 0);
    root_order.resize(2 * dm.nd);
    for (int s = 0; s < 2 * dm.nd; ++s) root_order[s] = s;
    std::stable_sort(root_order.begin(), root_order.end(),
                     [&](int a, int b) { return cyc_len[a >> 2] > cyc_len[b >> 2]; });
    if (fix_complete) fix_vertex_rotation(0);
  }

  // Pins the full rotation cycle at v to ascending dart order. Sound for
  // vertex-transitive-stabilizer situations (complete graphs): any scheme
  // can be relabeled so v carries the canonical rotation.
  void fix_vertex_rotation(int v) {
    const auto& o = dm.out[v];
    int k = static_cast<int>(o.size());
    if (k == 0) return;
    for (int i = 0; i < k; ++i) {
      int a = o[i], b = o[(i + 1) % k];
      next_[a] = b;
      prev_[b] = a;
      if (i + 1 < k) ufp[uf_find(a)] = uf_find(b);
    }
    links_at[v] = k;
  }

  int uf_find(int x) const {
    while (ufp[x] != x) x = ufp[x];
    return x;
  }

  bool prune_ok() const {
    if (nonorient && unset_sig == 0 && neg_count == 0) return false;
    int u_left = 2 * dm.ne - traversals;
    long long fmax;
    if (face_open) {
      int need = std::max(0, cur_need - cur_len);
      if (need > u_left) return false;
      fmax = static_cast<long long>(f_closed) + 1 + (u_left - need) / lambda;
    } else {
      fmax = static_cast<long long>(f_closed) + u_left / lambda;
    }
    return fmax >= f_needed;
  }

  bool dfs() {
    if (++nodes > budget.nodes) throw BudgetStop{};
    if ((nodes & 8191u) == 0 && budget.seconds > 0) {
      double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                t_start)
                      .count();
      if (dt > budget.seconds) throw BudgetStop{};
    }
    if (!prune_ok()) return false;
    return face_open ? step() : start_or_finish();
  }

  bool start_or_finish() {
    if (traversals == 2 * dm.ne) {
      if (f_closed < f_needed) return false;
      if (nonorient && neg_count == 0) return false;
      return on_sat();
    }
    std::size_t saved_ptr = root_ptr;
    while (consumed[root_order[root_ptr]]) ++root_ptr;
    int root = root_order[root_ptr];
    face_open = true;
    start_sd = cur_sd = root;
    consumed[root] = 1;
    ++traversals;
    cur_len = 1;
    cur_need = cyc_len[root >> 2];
    cur_walk.clear();
    cur_walk.push_back(root >> 1);
    bool found = dfs();
    --traversals;
    consumed[root] = 0;
    face_open = false;
    start_sd = cur_sd = -1;
    root_ptr = saved_ptr;
    return found;
  }

  bool step() {
    int e = cur_sd >> 2;
    if (sig[e] == -1) {
      for (int b = 0; b < 2; ++b) {
        sig[e] = b;
        neg_count += b;
        --unset_sig;
        bool found = step_signed();
        ++unset_sig;
        neg_count -= b;
        sig[e] = -1;
        if (found) return true;
      }
      return false;
    }
    return step_signed();
  }

  bool step_signed() {
    int d = cur_sd >> 1, s = cur_sd & 1, e = cur_sd >> 2;
    int s2 = s ^ sig[e];
    int msd = (detail::rev(d) << 1) | (s2 ^ 1);
    if (consumed[msd])
      throw Error("internal: mirror state consumed before its twin");
    consumed[msd] = 1;
    bool found = route(s2);
    consumed[msd] = 0;
    return found;
  }

  bool route(int s2) {
    int d = cur_sd >> 1;
    int r = detail::rev(d);
    int w = dm.tail[r];
    int existing = (s2 == 0) ? next_[r] : prev_[r];
    if (existing != -1) {
      int nsd = (existing << 1) | s2;
      if (nsd == start_sd) return close_face();
      if (consumed[nsd]) return false;
      return advance(nsd);
    }
    // Closing the face is the most constrained move; try it first.
    int x0 = start_sd >> 1, s0 = start_sd & 1;
    if (s2 == s0 && dm.tail[x0] == w) {
      int a = (s2 == 0) ? r : x0, b = (s2 == 0) ? x0 : r;
      if (next_[a] == -1 && prev_[b] == -1 && try_link(a, b, w)) {
        bool found = close_face();
        undo_link(a, b, w);
        if (found) return true;
      }
    }
    for (int x : dm.out[w]) {
      int nsd = (x << 1) | s2;
      if (consumed[nsd]) continue;
      int a = (s2 == 0) ? r : x, b = (s2 == 0) ? x : r;
      if (next_[a] != -1 || prev_[b] != -1) continue;
      if (!try_link(a, b, w)) continue;
      bool found = advance(nsd);
      undo_link(a, b, w);
      if (found) return true;
    }
    return false;
  }

  // Assigns the rotation link a -> b at vertex w unless it would close the
  // vertex cycle early. Returns false (no state change) when disallowed.
  bool try_link(int a, int b, int w) {
    int ra = uf_find(a), rb = uf_find(b);
    if (ra == rb && links_at[w] + 1 != g.degree(w)) return false;
    next_[a] = b;
    prev_[b] = a;
    ++links_at[w];
    if (ra != rb) {
      ufp[ra] = rb;
      union_trail.push_back(ra);
    } else {
      union_trail.push_back(-1);
    }
    return true;
  }
  std::vector<int> union_trail;
  void undo_link(int a, int b, int w) {
    int ra = union_trail.back();
    union_trail.pop_back();
    if (ra != -1) ufp[ra] = ra;
    --links_at[w];
    next_[a] = -1;
    prev_[b] = -1;
  }

  bool advance(int nsd) {
    consumed[nsd] = 1;
    ++traversals;
    cur_walk.push_back(nsd >> 1);
    int sv_cur = cur_sd, sv_need = cur_need;
    cur_sd = nsd;
    ++cur_len;
    cur_need = std::max(cur_need, cyc_len[nsd >> 2]);
    bool found = dfs();
    cur_need = sv_need;
    --cur_len;
    cur_sd = sv_cur;
    cur_walk.pop_back();
    --traversals;
    consumed[nsd] = 0;
    return found;
  }

  bool close_face() {
    int sv_start = start_sd, sv_cur = cur_sd, sv_len = cur_len, sv_need = cur_need;
    closed_walks.push_back(std::move(cur_walk));
    ++f_closed;
    face_open = false;
    bool found = dfs();
    face_open = true;
    --f_closed;
    cur_walk = std::move(closed_walks.back());
    closed_walks.pop_back();
    start_sd = sv_start;
    cur_sd = sv_cur;
    cur_len = sv_len;
    cur_need = sv_need;
    return found;
  }

  RotationEmbedding extract() const {
    RotationEmbedding emb;
    emb.rotation.assign(dm.nv, {});
    for (int v = 0; v < dm.nv; ++v) {
      if (dm.out[v].empty()) continue;
      int d0 = dm.out[v][0], d = d0;
      do {
        emb.rotation[v].push_back(d);
        d = next_[d];
      } while (d != d0);
    }
    emb.signature.resize(dm.ne);
    for (int e = 0; e < dm.ne; ++e) emb.signature[e] = sig[e] == 1 ? -1 : 1;
    return emb;
  }

  EmbedDecision run() {
    t_start = std::chrono::steady_clock::now();
    EmbedDecision res;
    bool found = false;
    on_sat = [&] {
      res.embedding = extract();
      found = true;
      return true;
    };
    try {
      dfs();
      res.status = found ? DecisionStatus::kSat : DecisionStatus::kUnsat;
    } catch (const BudgetStop&) {
      res.status = DecisionStatus::kBudget;
    }
    res.nodes = nodes;
    return res;
  }
};

// Engine precondition: at least one edge. Trivial graphs are settled here.
EmbedDecision trivial_decision(const SimpleGraph& g, bool sat) {
  EmbedDecision res;
  res.status = sat ? DecisionStatus::kSat : DecisionStatus::kUnsat;
  if (sat) res.embedding = detail::identity_embedding(g);
  return res;
}

}  // namespace

EmbedDecision decide_orientable_genus(const SimpleGraph& g, int max_genus,
                                      const Budget& budget) {
  if (!is_connected(g)) throw Disconnected("genus decision requires a connected graph");
  if (max_genus < 0) return trivial_decision(g, false);
  if (g.edge_count() == 0) return trivial_decision(g, true);
  Engine eng(g, budget);
  eng.setup(false, g.edge_count() - g.n + 2 - 2 * max_genus,
            is_complete_graph(g) && g.n >= 4);
  return eng.run();
}

EmbedDecision decide_nonorientable_crosscap(const SimpleGraph& g, int max_crosscap,
                                            const Budget& budget) {
  if (!is_connected(g))
    throw Disconnected("crosscap decision requires a connected graph");
  if (max_crosscap < 1) return trivial_decision(g, false);
  // A non-orientable scheme needs an edge outside a spanning tree.
  if (g.edge_count() < g.n) return trivial_decision(g, false);
  Engine eng(g, budget);
  eng.setup(true, g.edge_count() - g.n + 2 - max_crosscap,
            is_complete_graph(g) && g.n >= 4);
  return eng.run();
}

bool enumerate_planar_embeddings(const SimpleGraph& g, const Budget& budget,
                                 std::vector<RotationEmbedding>& out) {
  if (!is_connected(g))
    throw Disconnected("embedding enumeration requires a connected graph");
  out.clear();
  if (g.edge_count() == 0) {
    out.push_back(detail::identity_embedding(g));
    return true;
  }
  Engine eng(g, budget);
  eng.setup(false, g.edge_count() - g.n + 2, false);
  std::vector<RotationEmbedding> raw;
  eng.on_sat = [&] {
    raw.push_back(eng.extract());
    return false;  // keep enumerating
  };
  eng.t_start = std::chrono::steady_clock::now();
  bool complete = true;
  try {
    eng.dfs();
  } catch (const BudgetStop&) {
    complete = false;
  }
  // Deduplicate up to reflection via canonical face keys.
  auto face_key = [&](const RotationEmbedding& emb) {
    FaceTrace ft = trace_faces(g, emb);
    std::vector<std::vector<int>> canon;
    for (auto& f : ft.faces) {
      // Lexicographically smallest rotation of the cyclic dart sequence.
      std::vector<int> best = f;
      for (std::size_t off = 0; off < f.size(); ++off) {
        std::vector<int> rot(f.begin() + off, f.end());
        rot.insert(rot.end(), f.begin(), f.begin() + off);
        if (rot < best) best = rot;
      }
      canon.push_back(std::move(best));
    }
    std::sort(canon.begin(), canon.end());
    return canon;
  };
  auto reflected = [&](const RotationEmbedding& emb) {
    RotationEmbedding r = emb;
    for (auto& cyc : r.rotation) std::reverse(cyc.begin(), cyc.end());
    return r;
  };
  std::vector<std::vector<std::vector<int>>> seen_keys;
  for (const auto& emb : raw) {
    auto k1 = face_key(emb);
    auto k2 = face_key(reflected(emb));
    auto key = std::min(k1, k2);
    bool dup = false;
    for (const auto& k : seen_keys)
      if (k == key) {
        dup = true;
        break;
      }
    if (!dup) {
      seen_keys.push_back(key);
      out.push_back(emb);
    }
  }
  return complete;
}

}  // namespace rtl
