#pragma once

#include "rdom/graph.hpp"

namespace rdom {

inline constexpr int kGapInstanceMaxK = 8;

/// G + C4. Raises gamma_r2 by 2 and gamma_R by 3.
Graph add_c4(const Graph& g);

/// Links the k >= 1 components of g through a star K_{1,k+2}: leaf u_i is
/// joined to the minimum-index vertex of component i (components ascending by
/// minimum vertex), two leaves stay pendant. New vertices: the center at
/// index order(g), then leaves u_1..u_{k+2}. The result is connected and both
/// parameters rise by exactly 2. Throws DomainError on the empty graph.
Graph star_link(const Graph& g);

/// Connected K4-free graph with gamma_R - gamma_r2 = k: K1 for k = 0,
/// otherwise star_link applied to K1 plus k copies of C4. Both parameters are
/// solved exactly before returning; a mismatch throws InconsistencyError.
/// Requires 0 <= k <= 8.
Graph gap_instance(int k);

}  // namespace rdom
