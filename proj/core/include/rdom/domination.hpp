#pragma once

#include <cstdint>
#include <vector>

#include "rdom/assignment.hpp"
#include "rdom/graph.hpp"

namespace rdom {

inline constexpr int kSolverMaxOrder = 64;
inline constexpr int kEnumerationMaxOrder = 16;
inline constexpr int kPrismCheckMaxOrder = 20;

template <class Assignment>
struct SolveResult {
  int value = 0;
  Assignment witness;
  std::uint64_t nodes = 0;  ///< search nodes visited
};

using RainbowResult = SolveResult<RainbowAssignment>;
using RomanResult = SolveResult<RomanAssignment>;

/// Every vertex labelled None sees both colors among its neighbors.
/// Throws DomainError if f is not sized to g.
bool is_2rainbow_dominating(const Graph& g, const RainbowAssignment& f);

/// Every vertex valued 0 has a neighbor valued 2.
/// Throws DomainError if r is not sized to g.
bool is_roman_dominating(const Graph& g, const RomanAssignment& r);

/// Exact 2-rainbow domination number with a witness.
///
/// Depth-first branch and bound over vertices in non-increasing degree order
/// (ties by index), labels tried in the order {1,2}, {1}, {2}, {}. The bound
/// counts the undominated vertices of the prism G x K2 (vertex (x, c) is
/// dominated when x carries any color or a neighbor of x carries c) against
/// the largest coverages still available. The witness is the first optimum in
/// branch order.
RainbowResult gamma_r2(const Graph& g);

/// Exact Roman domination number with a witness.
///
/// Branch and bound over the set V2 of vertices valued 2: pick the undominated
/// vertex with the fewest admissible dominators, branch on which of them
/// joins V2, or value it 1 when none does. Fixing V2 forces the rest
/// (0 on N(V2), 1 elsewhere).
RomanResult gamma_roman(const Graph& g);

/// Every minimum 2-rainbow dominating function, in lexicographic order of the
/// label vector. Order must be <= max_order (default 16).
std::vector<RainbowAssignment> all_min_2rdf(const Graph& g,
                                            int max_order = kEnumerationMaxOrder);

/// The prism G x K2: vertex v in layer c (c = 0, 1) is v + c * order.
Graph prism(const Graph& g);

/// Domination number of the prism G x K2 by subset enumeration in increasing
/// cardinality. Equals gamma_r2(G); kept as an independent cross-check.
/// Order must be <= 20.
int gamma_r2_product_check(const Graph& g);

}  // namespace rdom
