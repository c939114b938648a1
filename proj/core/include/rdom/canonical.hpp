#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

inline constexpr int kMaxCanonicalOrder = 10;

/// Isomorphism-invariant string for graphs of order <= 10.
///
/// Layout: two-digit order, ':', then the adjacency bits of the relabelled
/// graph column by column (for p = 1..n-1, bits a(q, p) for q = 0..p-1) as
/// '0'/'1' characters. The relabelling is the lexicographically least such
/// encoding over all vertex orders that list vertices by non-increasing
/// degree. Two graphs get equal strings iff they are isomorphic.
std::string canonical_form(const Graph& g);

/// Vertex order achieving canonical_form: position p holds vertex order[p].
std::vector<int> canonical_order(const Graph& g);

/// Rebuilds the labelled graph a canonical string encodes.
Graph from_canonical_form(std::string_view form);

/// g relabelled into canonical position order.
Graph canonical_graph(const Graph& g);

}  // namespace rdom
