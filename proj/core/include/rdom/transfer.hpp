#pragma once

#include "rdom/assignment.hpp"
#include "rdom/graph.hpp"

namespace rdom {

/// 0 -> {}, 1 -> {1}, 2 -> {1,2}. Weight is preserved value by value.
/// Throws DomainError unless r is Roman dominating on g.
RainbowAssignment roman_to_rainbow(const Graph& g, const RomanAssignment& r);

/// Exchanges the labels {1} and {2}.
RainbowAssignment swap_colors(const RainbowAssignment& f);

/// Swaps colors when {2} is strictly more frequent than {1}, then maps
/// {} -> 0, {1} -> 1, {2} and {1,2} -> 2. The result weighs at most
/// floor(3 w(f) / 2). Throws DomainError unless f is 2-rainbow dominating on g.
RomanAssignment rainbow_to_roman(const Graph& g, const RainbowAssignment& f);

/// Weight of rainbow_to_roman(f) computed from label counts alone:
/// n1 + 2 n2 + 2 n12 after normalization.
int rainbow_to_roman_weight(const RainbowAssignment& f);

}  // namespace rdom
