// Graphs derived from a finite commutative ring: the annihilator graph on
// the nonzero zero-divisors, the classical zero-divisor graph on the same
// vertex set, and the subgraph induced on the nonzero nilpotents.
#ifndef RTL_ANNGRAPH_HPP
#define RTL_ANNGRAPH_HPP

#include "rtl/finring.hpp"
#include "rtl/graph.hpp"

namespace rtl {

// Vertices are Z(R)* in ascending element order, labeled by ring element
// labels. Edge {a,b} iff ann(ab) != ann(a) u ann(b); the union is always
// contained in ann(ab), so adjacency is strict containment. Fields yield
// the graph on 0 vertices.
SimpleGraph annihilator_graph(const FiniteRing& r);

// Same vertex set, edge {a,b} iff ab = 0. A spanning subgraph of the
// annihilator graph; kept as an independent cross-check fixture.
SimpleGraph zero_divisor_graph(const FiniteRing& r);

// Subgraph of annihilator_graph(r) induced on Nil(R)*.
SimpleGraph nilpotent_subgraph(const FiniteRing& r);

}  // namespace rtl

#endif  // RTL_ANNGRAPH_HPP
