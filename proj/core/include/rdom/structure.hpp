#pragma once

#include <array>
#include <string>
#include <vector>

#include "rdom/assignment.hpp"
#include "rdom/graph.hpp"

namespace rdom {

/// Audit of one minimum 2-rainbow dominating function f of a graph with
/// 2 gamma_R = 3 gamma_r2. V_F is the set of vertices labelled F.
struct StructureAudit {
  RainbowAssignment function;
  VertexSet none, one, two, both;

  /// properties[0..4]:
  ///  (i)   |V_1| = |V_2| and V_12 is empty
  ///  (ii)  no edge between V_1 and V_2
  ///  (iii) G[V_1] and G[V_2] have maximum degree <= 1
  ///  (iv)  every vertex of V_0 has 1 or 2 neighbors in V_1, and in V_2
  ///  (v)   every u in V_i has >= 2 neighbors v in V_0 with N(v) & V_i = {u}
  std::array<bool, 5> properties{};

  /// For u in V_1 or V_2: the number of v in V_0 whose only neighbor in u's
  /// class is u. -1 for every other vertex.
  std::vector<int> private_counts;

  bool passed() const;
};

/// 2 gamma_R(g) == 3 gamma_r2(g).
bool is_extremal(const Graph& g);

/// Checks the five properties for a single 2-rainbow function; no
/// extremality precondition. Throws DomainError if f is not sized to g.
StructureAudit audit_function(const Graph& g, const RainbowAssignment& f);

/// Audits every minimum 2-rainbow dominating function of g. Throws
/// DomainError when g is not extremal or exceeds the enumeration cap.
std::vector<StructureAudit> audit_theorem4(const Graph& g);

/// {"graph": {"order", "edges"}, "gamma_r2", "gamma_R", "extremal",
///  "functions": [{"assignment", "properties": {"i".."v"}, "private_counts"}]}
/// `functions` is null when the graph is not extremal.
std::string structure_json(const Graph& g);

}  // namespace rdom
