// Label-agnostic graph isomorphism and subdivision (topological minor)
// containment, both exact backtracking searches sized for desk-scale
// instances. Caps and budgets are hard limits, not heuristics: exceeding
// them raises instead of returning a wrong answer.
#ifndef RTL_ISO_HPP
#define RTL_ISO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rtl/graph.hpp"

namespace rtl {

inline constexpr int kIsoVertexCap = 64;
inline constexpr int kSubdivisionPatternCap = 8;
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// Returns m with m[u] = image of a's vertex u in b, or nullopt when the
// graphs are not isomorphic. Labels are ignored. CapExceeded past
// kIsoVertexCap vertices on either side.
std::optional<std::vector<int>> is_isomorphic(const SimpleGraph& a,
                                              const SimpleGraph& b);

struct SubdivisionWitness {
  // branch[p] = host vertex realizing pattern vertex p.
  std::vector<int> branch;
  // paths[k] = host path realizing pattern edge k (endpoints included);
  // interiors are internally disjoint and avoid all branch vertices.
  std::vector<std::vector<int>> paths;
};

// Searches host for a subdivision of pattern. CapExceeded when host exceeds
// kIsoVertexCap or pattern exceeds kSubdivisionPatternCap vertices;
// BudgetExhausted when the node budget runs out before a decision.
std::optional<SubdivisionWitness> contains_subdivision(
    const SimpleGraph& host, const SimpleGraph& pattern,
    std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace rtl

#endif  // RTL_ISO_HPP
