#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdom/assignment.hpp"
#include "rdom/graph.hpp"

namespace rdom {

inline constexpr int kInducedPatternMaxOrder = 6;
inline constexpr int kHereditaryMaxOrder = 8;

struct FamilyMember {
  std::string name;
  Graph graph;
};
using Family = std::vector<FamilyMember>;

/// {P5, C5, C4}: forbidden induced subgraphs for gamma_r2 = gamma_R on every
/// induced subgraph.
Family equality_family();
/// {co-K3, K2 + K1}: forbidden induced subgraphs for membership in G_3.
Family extremal3_family();
/// "theorem2" -> equality_family(), "theorem3" -> extremal3_family().
/// Throws DomainError on any other name.
Family preset_family(std::string_view name);

/// A vertex set S with g[S] isomorphic to h, or nullopt. h must have order <= 6.
std::optional<VertexSet> find_induced(const Graph& g, const Graph& h);
bool has_induced(const Graph& g, const Graph& h);

/// Name of the first family member contained as an induced subgraph.
std::optional<std::string> first_induced_member(const Graph& g, const Family& family);
bool is_free(const Graph& g, const Family& family);

/// gamma_r2(g[S]) == gamma_R(g[S]) for every vertex subset S (order <= 8).
bool hereditary_equality_direct(const Graph& g);

/// For every vertex subset S with gamma_r2(g[S]) >= k:
/// 2 gamma_R(g[S]) == 3 gamma_r2(g[S]). Order <= 8, k >= 1.
bool in_Gk_direct(const Graph& g, int k);

/// Among all minimum 2-rainbow dominating functions with the most vertices
/// labelled {1,2}, the least one with labels ordered {1,2} < {1} < {2} < {}.
RainbowAssignment canonical_min_2rdf(const Graph& g);

/// {} -> 0, {1} and {2} -> 1, {1,2} -> 2. Weight preserving.
RomanAssignment merge_colors(const RainbowAssignment& f);

}  // namespace rdom
