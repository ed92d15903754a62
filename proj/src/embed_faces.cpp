#include <algorithm>
#include <cstdlib>
#include <string>

#include "embed_internal.hpp"
#include "rtl/embed.hpp"

namespace rtl {

Budget default_budget() {
  static const Budget cached = [] {
    Budget b;
    if (const char* s = std::getenv("RTL_BUDGET_NODES")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end && *end == '\0' && v > 0) b.nodes = v;
    }
    if (const char* s = std::getenv("RTL_BUDGET_SECONDS")) {
      char* end = nullptr;
      double v = std::strtod(s, &end);
      if (end && *end == '\0' && v >= 0) b.seconds = v;
    }
    return b;
  }();
  return cached;
}

Budget extended_budget() { return Budget{1'000'000'000ull, 3600.0}; }

namespace detail {

void validate_embedding(const SimpleGraph& g, const RotationEmbedding& emb) {
  DartMap dm(g);
  if (static_cast<int>(emb.rotation.size()) != g.n)
    throw MalformedEmbedding("rotation must list one cycle per vertex");
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> darts = emb.rotation[v];
    std::sort(darts.begin(), darts.end());
    if (darts != dm.out[v])
      throw MalformedEmbedding("rotation at vertex " + std::to_string(v) +
                               " is not a permutation of its darts");
  }
  if (static_cast<int>(emb.signature.size()) != dm.ne)
    throw MalformedEmbedding("signature must assign one value per edge");
  for (int s : emb.signature)
    if (s != 1 && s != -1) throw MalformedEmbedding("signature entries must be +1 or -1");
}

RotationEmbedding identity_embedding(const SimpleGraph& g) {
  DartMap dm(g);
  RotationEmbedding emb;
  emb.rotation = dm.out;
  emb.signature.assign(dm.ne, 1);
  return emb;
}

}  // namespace detail

FaceTrace trace_faces(const SimpleGraph& g, const RotationEmbedding& emb) {
  detail::validate_embedding(g, emb);
  detail::DartMap dm(g);
  FaceTrace out;
  out.vertex_count = g.n;
  out.edge_count = dm.ne;
  if (g.n == 0) {
    out.face_count = 0;
    out.euler_characteristic = 2;  // empty graph counts as planar by convention
    out.orientable = true;
    out.genus = 0;
    return out;
  }

  std::vector<int> next(dm.nd, -1), prev(dm.nd, -1);
  for (int v = 0; v < g.n; ++v) {
    const auto& cyc = emb.rotation[v];
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
      next[cyc[i]] = cyc[(i + 1) % k];
      prev[cyc[(i + 1) % k]] = cyc[i];
    }
  }
  auto neg = [&](int d) { return emb.signature[detail::dart_edge(d)] == -1 ? 1 : 0; };

  // Sided-state tracing: state 2d+s means "about to traverse dart d with
  // current side s". Faces come in mirror pairs; the first orbit of a pair
  // is kept and its mirror marked off, so each face is emitted once.
  std::vector<char> seen(2 * dm.nd, 0);
  for (int start = 0; start < 2 * dm.nd; ++start) {
    if (seen[start]) continue;
    std::vector<int> walk;
    std::vector<int> states;
    int sd = start;
    do {
      if (seen[sd])
        throw MalformedEmbedding("face orbit is not mirror-pairable");
      seen[sd] = 1;
      states.push_back(sd);
      int d = sd >> 1, s = sd & 1;
      walk.push_back(d);
      int s2 = s ^ neg(d);
      int r = detail::rev(d);
      int nx = (s2 == 0) ? next[r] : prev[r];
      sd = (nx << 1) | s2;
    } while (sd != start);
    for (int x : states) {
      int d = x >> 1, s = x & 1;
      int msd = (detail::rev(d) << 1) | (s ^ neg(d) ^ 1);
      if (!seen[msd]) seen[msd] = 1;
    }
    out.faces.push_back(std::move(walk));
  }
  // Isolated vertices each bound one face of their own.
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == 0) out.faces.push_back({});

  out.face_count = static_cast<int>(out.faces.size());
  out.euler_characteristic = g.n - dm.ne + out.face_count;

  // Orientability: with a spanning forest regularized to +1 by vertex flips,
  // the scheme is orientable iff every remaining edge comes out +1.
  std::vector<int> flip(g.n, -1);
  bool orient = true;
  for (int root = 0; root < g.n; ++root) {
    if (flip[root] != -1) continue;
    flip[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.adj[v]) {
        int s = emb.signature[g.edge_index(v, w)] == -1 ? 1 : 0;
        if (flip[w] == -1) {
          flip[w] = flip[v] ^ s;
          stack.push_back(w);
        } else if (flip[w] != (flip[v] ^ s)) {
          orient = false;
        }
      }
    }
  }
  out.orientable = orient;
  if (is_connected(g)) {
    int chi = out.euler_characteristic;
    out.genus = orient ? (2 - chi) / 2 : (2 - chi);
  }
  return out;
}

ordered_json embedding_to_json(const SimpleGraph& g, const RotationEmbedding& emb) {
  FaceTrace ft = trace_faces(g, emb);
  ordered_json j;
  j["rotation"] = emb.rotation;
  bool any_negative = false;
  for (int s : emb.signature) any_negative |= (s == -1);
  if (any_negative) {
    ordered_json sig = ordered_json::object();
    for (std::size_t k = 0; k < emb.signature.size(); ++k)
      sig[std::to_string(k)] = emb.signature[k];
    j["signature"] = std::move(sig);
  }
  j["faces"] = ft.faces;
  ordered_json euler;
  euler["vertices"] = ft.vertex_count;
  euler["edges"] = ft.edge_count;
  euler["faces"] = ft.face_count;
  euler["characteristic"] = ft.euler_characteristic;
  euler["orientable"] = ft.orientable;
  if (ft.genus >= 0) euler[ft.orientable ? "genus" : "crosscap"] = ft.genus;
  j["euler"] = std::move(euler);
  return j;
}

RotationEmbedding embedding_from_json(const SimpleGraph& g, const ordered_json& j) {
  if (!j.is_object() || !j.contains("rotation") || !j["rotation"].is_array())
    throw MalformedEmbedding("embedding JSON needs a rotation array");
  RotationEmbedding emb;
  for (const auto& row : j["rotation"]) {
    if (!row.is_array()) throw MalformedEmbedding("rotation rows must be arrays");
    std::vector<int> cyc;
    for (const auto& d : row) {
      if (!d.is_number_integer()) throw MalformedEmbedding("rotation darts must be integers");
      cyc.push_back(d.get<int>());
    }
    emb.rotation.push_back(std::move(cyc));
  }
  emb.signature.assign(g.edge_count(), 1);
  if (j.contains("signature")) {
    if (!j["signature"].is_object())
      throw MalformedEmbedding("signature must map edge indices to +-1");
    for (const auto& [key, val] : j["signature"].items()) {
      std::size_t pos = 0;
      int k = -1;
      try {
        k = std::stoi(key, &pos);
      } catch (const std::exception&) {
        throw MalformedEmbedding("signature keys must be edge indices");
      }
      if (pos != key.size() || k < 0 || k >= g.edge_count())
        throw MalformedEmbedding("signature keys must be edge indices");
      if (!val.is_number_integer() || (val.get<int>() != 1 && val.get<int>() != -1))
        throw MalformedEmbedding("signature entries must be +1 or -1");
      emb.signature[k] = val.get<int>();
    }
  }
  detail::validate_embedding(g, emb);
  return emb;
}

}  // namespace rtl
