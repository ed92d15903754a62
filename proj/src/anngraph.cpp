// Ring-derived graph constructions. Annihilators are memoized as bitsets so
// the strict-containment edge test is a few word operations per pair.
#include <algorithm>
#include <cstdint>
#include <vector>

#include "rtl/anngraph.hpp"

namespace rtl {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits annihilator_bits(const FiniteRing& r, int a) {
  Bits out((static_cast<std::size_t>(r.order) + 63) / 64, 0);
  for (int d = 0; d < r.order; ++d)
    if (r.mul_of(d, a) == r.zero)
      out[static_cast<std::size_t>(d) >> 6] |= std::uint64_t{1} << (d & 63);
  return out;
}

}  // namespace

SimpleGraph annihilator_graph(const FiniteRing& r) {
  std::vector<int> verts = zero_divisors(r);
  int n = static_cast<int>(verts.size());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int v : verts) labels.push_back(r.labels[v]);

  // ann(ab) is needed for arbitrary products, so memoize per ring element.
  std::vector<Bits> ann(r.order);
  std::vector<bool> have(r.order, false);
  auto ann_of = [&](int a) -> const Bits& {
    if (!have[a]) {
      ann[a] = annihilator_bits(r, a);
      have[a] = true;
    }
    return ann[a];
  };

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Bits& ai = ann_of(verts[i]);
      const Bits& aj = ann_of(verts[j]);
      const Bits& ap = ann_of(r.mul_of(verts[i], verts[j]));
      bool strict = false;
      for (std::size_t w = 0; w < ap.size() && !strict; ++w)
        if ((ai[w] | aj[w]) != ap[w]) strict = true;
      if (strict) edges.emplace_back(i, j);
    }
  return make_graph(n, std::move(edges), std::move(labels));
}

SimpleGraph zero_divisor_graph(const FiniteRing& r) {
  std::vector<int> verts = zero_divisors(r);
  int n = static_cast<int>(verts.size());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int v : verts) labels.push_back(r.labels[v]);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (r.mul_of(verts[i], verts[j]) == r.zero) edges.emplace_back(i, j);
  return make_graph(n, std::move(edges), std::move(labels));
}

SimpleGraph nilpotent_subgraph(const FiniteRing& r) {
  SimpleGraph ag = annihilator_graph(r);
  std::vector<int> verts = zero_divisors(r);
  std::vector<int> nil = nilpotents(r);
  std::vector<int> keep;
  for (int a : nil) {
    auto it = std::lower_bound(verts.begin(), verts.end(), a);
    if (it != verts.end() && *it == a)
      keep.push_back(static_cast<int>(it - verts.begin()));
  }
  return induced_subgraph(ag, keep);
}

}  // namespace rtl
