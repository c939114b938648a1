#include "rdom/constructions.hpp"

#include "rdom/domination.hpp"
#include "rdom/error.hpp"

namespace rdom {

Graph add_c4(const Graph& g) { return disjoint_union(g, cycle_graph(4)); }

Graph star_link(const Graph& g) {
  const auto comps = components(g);
  if (comps.empty()) throw DomainError("star_link needs a graph with at least one component");
  const int k = static_cast<int>(comps.size());
  const int n = g.order();
  if (n + k + 3 > kMaxOrder) throw DomainError("star_link result exceeds order 64");
  Graph out = disjoint_union(g, star_graph(k + 2));
  const int center = n;
  for (int i = 0; i < k; ++i) out.add_edge(center + 1 + i, comps[i].front());
  return out;
}

Graph gap_instance(int k) {
  if (k < 0 || k > kGapInstanceMaxK) {
    throw DomainError("gap_instance supports 0 <= k <= " + std::to_string(kGapInstanceMaxK));
  }
  if (k == 0) return complete_graph(1);
  Graph g = complete_graph(1);
  for (int i = 0; i < k; ++i) g = add_c4(g);
  Graph linked = star_link(g);

  const int r2 = gamma_r2(linked).value;
  const int roman = gamma_roman(linked).value;
  // K1 contributes (1, 1), each C4 (2, 3), the star link (2, 2).
  if (r2 != 2 * k + 3 || roman != 3 * k + 3 || !is_connected(linked) || !is_k4_free(linked)) {
    throw InconsistencyError("gap_instance(" + std::to_string(k) + ") verification failed: gamma_r2=" +
                             std::to_string(r2) + " gamma_R=" + std::to_string(roman));
  }
  return linked;
}

}  // namespace rdom
