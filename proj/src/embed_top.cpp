#include <algorithm>
#include <chrono>

#include "embed_internal.hpp"

namespace rtl {

namespace {

// Lifts embeddings found on induced components back into g's dart space.
// Component vertex lists must be ascending so edge orientations survive.
RotationEmbedding combine_component_embeddings(
    const SimpleGraph& g, const std::vector<std::vector<int>>& comps,
    const std::vector<SimpleGraph>& subs, const std::vector<RotationEmbedding>& embs) {
  RotationEmbedding out;
  out.rotation.assign(g.n, {});
  out.signature.assign(g.edge_count(), 1);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& verts = comps[i];
    const auto& sub = subs[i];
    for (int a = 0; a < sub.n; ++a) {
      for (int d : embs[i].rotation[a]) {
        auto [x, y] = sub.edges[d >> 1];
        int ek = g.edge_index(verts[x], verts[y]);
        out.rotation[verts[a]].push_back(2 * ek + (d & 1));
      }
    }
  }
  return out;
}

Budget remaining_budget(const Budget& total, std::uint64_t used_nodes,
                        std::chrono::steady_clock::time_point t0) {
  Budget b;
  b.nodes = total.nodes > used_nodes ? total.nodes - used_nodes : 1;
  if (total.seconds > 0) {
    double el =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    b.seconds = std::max(total.seconds - el, 0.001);
  } else {
    b.seconds = 0;
  }
  return b;
}

}  // namespace

PlanarityResult is_planar(const SimpleGraph& g, const Budget& budget) {
  if (g.n > kIsoVertexCap)
    throw CapExceeded("planarity capped at " + std::to_string(kIsoVertexCap) +
                      " vertices");
  PlanarityResult res;
  bool dense = g.n >= 3 && g.edge_count() > 3 * g.n - 6;
  if (!dense) {
    auto comps = connected_components(g);
    std::vector<SimpleGraph> subs;
    std::vector<RotationEmbedding> embs;
    bool all_planar = true;
    for (const auto& c : comps) {
      SimpleGraph sub = induced_subgraph(g, c);
      auto dec = decide_orientable_genus(sub, 0, budget);
      if (dec.status == DecisionStatus::kBudget)
        throw BudgetExhausted("planarity decision ran out of budget");
      if (dec.status == DecisionStatus::kUnsat) {
        all_planar = false;
        break;
      }
      subs.push_back(std::move(sub));
      embs.push_back(std::move(dec.embedding));
    }
    if (all_planar) {
      res.planar = true;
      res.embedding = combine_component_embeddings(g, comps, subs, embs);
      return res;
    }
  }
  res.planar = false;
  if (auto w5 = contains_subdivision(g, complete_graph(5), budget.nodes)) {
    res.obstruction = "K5";
    res.witness = std::move(w5);
    return res;
  }
  if (auto w33 = contains_subdivision(g, complete_bipartite(3, 3), budget.nodes)) {
    res.obstruction = "K3,3";
    res.witness = std::move(w33);
    return res;
  }
  throw Error("internal: nonplanar graph lacks a Kuratowski subdivision");
}

OuterplanarityResult is_outerplanar(const SimpleGraph& g, const Budget& budget) {
  if (g.n > kIsoVertexCap - 1)
    throw CapExceeded("outerplanarity capped at " + std::to_string(kIsoVertexCap - 1) +
                      " vertices");
  OuterplanarityResult res;
  if (g.n == 0) {
    res.outerplanar = true;
    return res;
  }
  // Outerplanar iff the graph plus one universal apex vertex stays planar;
  // the apex rotation then reads off a single face holding every vertex.
  SimpleGraph apex = make_graph(1, {}, {"apex"});
  SimpleGraph joined = join_graph(g, apex);
  PlanarityResult pl = is_planar(joined, budget);
  if (pl.planar) {
    res.outerplanar = true;
    for (int d : pl.embedding->rotation[g.n])
      res.outer_order.push_back(joined.edges[d >> 1].first);
    return res;
  }
  res.outerplanar = false;
  if (auto w4 = contains_subdivision(g, complete_graph(4), budget.nodes)) {
    res.obstruction = "K4";
    res.witness = std::move(w4);
    return res;
  }
  if (auto w23 = contains_subdivision(g, complete_bipartite(2, 3), budget.nodes)) {
    res.obstruction = "K2,3";
    res.witness = std::move(w23);
    return res;
  }
  throw Error("internal: non-outerplanar graph lacks a K4/K2,3 subdivision");
}

BoundedInvariant min_genus(const SimpleGraph& g, const Budget& budget, int hint_lower,
                           const std::string& hint_source) {
  if (!is_connected(g)) throw Disconnected("minimum genus requires a connected graph");
  auto t0 = std::chrono::steady_clock::now();
  BoundedInvariant r;
  int eb = euler_genus_lower_bound(g);
  std::string lower_src = "euler bound";
  r.lower = eb;
  if (hint_lower > r.lower) {
    r.lower = hint_lower;
    lower_src = hint_source.empty() ? "caller hint" : hint_source;
  }
  FaceTrace ident = trace_faces(g, detail::identity_embedding(g));
  r.upper = ident.genus;
  std::string upper_src = "identity rotation";
  r.certificate = detail::identity_embedding(g);
  if (r.upper > r.lower) {
    RotationEmbedding h = improve_embedding_upper(g, false);
    FaceTrace th = trace_faces(g, h);
    if (th.genus < r.upper) {
      r.upper = th.genus;
      upper_src = "local search";
      r.certificate = std::move(h);
    }
  }
  for (int t = r.lower; t < r.upper; ++t) {
    auto dec = decide_orientable_genus(g, t, remaining_budget(budget, r.nodes_used, t0));
    r.nodes_used += dec.nodes;
    if (dec.status == DecisionStatus::kSat) {
      r.upper = t;
      upper_src = "search";
      r.certificate = std::move(dec.embedding);
      break;
    }
    if (dec.status == DecisionStatus::kUnsat) {
      r.lower = t + 1;
      lower_src = "search refutation";
      continue;
    }
    r.budget_exhausted = true;
    break;
  }
  r.exact = (r.lower == r.upper);
  r.method = "lower:" + lower_src + ";upper:" + upper_src;
  return r;
}

BoundedInvariant min_crosscap(const SimpleGraph& g, const Budget& budget, int hint_lower,
                              const std::string& hint_source) {
  if (!is_connected(g))
    throw Disconnected("minimum crosscap requires a connected graph");
  auto t0 = std::chrono::steady_clock::now();
  BoundedInvariant r;
  // The planarity consult may itself run out of budget; crosscap stays a
  // bounded result, so degrade to bounds instead of propagating the throw.
  // An Euler crosscap bound >= 1 certifies nonplanarity on its own.
  bool planarity_decided = true;
  PlanarityResult pl;
  try {
    pl = is_planar(g, budget);
  } catch (const BudgetExhausted&) {
    planarity_decided = false;
  }
  if (planarity_decided && pl.planar) {
    // Planar graphs report crosscap 0 by convention, certified by a
    // genus-0 (orientable) embedding.
    r.lower = r.upper = 0;
    r.exact = true;
    r.method = "lower:planar;upper:planar";
    r.certificate = std::move(pl.embedding);
    return r;
  }
  int eb = euler_crosscap_lower_bound(g);
  std::string lower_src = "euler bound";
  if (planarity_decided || eb >= 1) {
    r.lower = std::max(1, eb);
    if (eb < 1) lower_src = "nonplanar";
  } else {
    r.lower = 0;
    lower_src = "planarity undecided";
  }
  if (hint_lower > r.lower) {
    r.lower = hint_lower;
    lower_src = hint_source.empty() ? "caller hint" : hint_source;
  }
  FaceTrace ident = trace_faces(g, detail::identity_embedding(g));
  r.upper = 2 * ident.genus + 1;  // crosscap <= 2*genus + 1 for any genus bound
  std::string upper_src = "orientable excess";
  if (r.upper > r.lower) {
    RotationEmbedding h = improve_embedding_upper(g, true);
    FaceTrace th = trace_faces(g, h);
    int hb = th.orientable ? 2 * th.genus + 1 : th.genus;
    if (hb < r.upper) {
      r.upper = hb;
      if (!th.orientable) {
        upper_src = "local search";
        r.certificate = std::move(h);
      } else {
        upper_src = "local search orientable excess";
      }
    }
  }
  // Deepening only makes sense once nonplanarity is settled (by the decision
  // search or by the Euler bound): refuting a nonorientable scheme at k
  // never rules out crosscap 0.
  if (!planarity_decided && eb < 1) {
    r.budget_exhausted = true;
    r.exact = (r.lower == r.upper);
    r.method = "lower:" + lower_src + ";upper:" + upper_src;
    return r;
  }
  for (int k = r.lower; k < r.upper; ++k) {
    auto dec =
        decide_nonorientable_crosscap(g, k, remaining_budget(budget, r.nodes_used, t0));
    r.nodes_used += dec.nodes;
    if (dec.status == DecisionStatus::kSat) {
      r.upper = k;
      upper_src = "search";
      r.certificate = std::move(dec.embedding);
      break;
    }
    if (dec.status == DecisionStatus::kUnsat) {
      r.lower = k + 1;
      lower_src = "search refutation";
      continue;
    }
    r.budget_exhausted = true;
    break;
  }
  r.exact = (r.lower == r.upper);
  r.method = "lower:" + lower_src + ";upper:" + upper_src;
  return r;
}

namespace {

bool connected_after_removal(const SimpleGraph& g, int skip1, int skip2) {
  int start = -1, remaining = 0;
  for (int v = 0; v < g.n; ++v)
    if (v != skip1 && v != skip2) {
      if (start == -1) start = v;
      ++remaining;
    }
  if (remaining <= 1) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v]) {
      if (w == skip1 || w == skip2 || seen[w]) continue;
      seen[w] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  return count == remaining;
}

bool three_connected(const SimpleGraph& g) {
  if (g.n < 4) return false;
  if (!is_connected(g)) return false;
  for (int u = 0; u < g.n; ++u)
    if (!connected_after_removal(g, u, -1)) return false;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (!connected_after_removal(g, u, v)) return false;
  return true;
}

}  // namespace

JoinCertificateResult verify_join_lower_bound_certificate(const SimpleGraph& g,
                                                          const std::vector<int>& v1,
                                                          const std::vector<int>& v2) {
  JoinCertificateResult res;
  std::vector<char> in1(g.n, 0), in2(g.n, 0);
  for (int v : v1) {
    if (v < 0 || v >= g.n) throw InvalidParameter("certificate vertex out of range");
    in1[v] = 1;
  }
  for (int v : v2) {
    if (v < 0 || v >= g.n) throw InvalidParameter("certificate vertex out of range");
    if (in1[v]) throw OverlappingSets("certificate sets share vertex " + std::to_string(v));
    in2[v] = 1;
  }
  if (v1.empty() || v2.empty()) {
    res.reason = "certificate sets must be nonempty";
    return res;
  }
  SimpleGraph g1 = induced_subgraph(g, v1);
  if (!three_connected(g1)) {
    res.reason = "first set does not induce a 3-connected subgraph";
    return res;
  }
  if (!is_planar(g1).planar) {
    res.reason = "first set does not induce a planar subgraph";
    return res;
  }
  SimpleGraph g2 = induced_subgraph(g, v2);
  if (!is_connected(g2)) {
    res.reason = "second set does not induce a connected subgraph";
    return res;
  }
  for (int v : v1) {
    bool touches = false;
    for (int w : g.adj[v]) touches |= (in2[w] != 0);
    if (!touches) {
      res.reason = "vertex " + std::to_string(v) + " has no neighbor in the second set";
      return res;
    }
  }
  res.valid = true;
  res.reason = "hypotheses verified";
  return res;
}

}  // namespace rtl
