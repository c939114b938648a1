#include "doctest.h"
#include "oracles.hpp"
#include "rdom/catalog.hpp"
#include "rdom/domination.hpp"
#include "rdom/error.hpp"
#include "rdom/transfer.hpp"

using namespace rdom;

namespace {

constexpr Label E = Label::None;
constexpr Label A = Label::One;
constexpr Label B = Label::Two;
constexpr Label AB = Label::Both;

}  // namespace

TEST_CASE("roman_to_rainbow examples") {
  const auto c4 = roman_to_rainbow(cycle_graph(4), {2, 0, 1, 0});
  CHECK(c4 == RainbowAssignment{AB, E, A, E});
  CHECK(c4.weight() == 3);
  CHECK(is_2rainbow_dominating(cycle_graph(4), c4));

  CHECK(roman_to_rainbow(Graph(0), RomanAssignment{}).size() == 0);

  const auto p3 = roman_to_rainbow(path_graph(3), {0, 2, 0});
  CHECK(p3 == RainbowAssignment{E, AB, E});
  CHECK(p3.weight() == 2);

  CHECK_THROWS_AS(roman_to_rainbow(path_graph(3), {0, 1, 0}), DomainError);
}

TEST_CASE("swap_colors") {
  CHECK(swap_colors({A, E, B, E}) == RainbowAssignment{B, E, A, E});
  const RainbowAssignment all{AB, AB, AB};
  CHECK(swap_colors(all) == all);
  SplitMix64 rng(4);
  for (int i = 0; i < 50; ++i) {
    RainbowAssignment f(6);
    for (int v = 0; v < 6; ++v) f[v] = static_cast<Label>(rng.below(4));
    CHECK(swap_colors(swap_colors(f)) == f);
    CHECK(swap_colors(f).weight() == f.weight());
  }
}

TEST_CASE("rainbow_to_roman examples") {
  const auto c4 = rainbow_to_roman(cycle_graph(4), {A, E, B, E});
  CHECK(c4 == RomanAssignment{1, 0, 2, 0});
  CHECK(c4.weight() == 3);

  CHECK(rainbow_to_roman(path_graph(3), {E, AB, E}) == RomanAssignment{0, 2, 0});
  CHECK(rainbow_to_roman(complete_graph(2), {A, A}) == RomanAssignment{1, 1});

  // More {2} than {1}: colors swap first.
  CHECK(rainbow_to_roman(path_graph(4), {B, A, E, B}) == RomanAssignment{1, 2, 0, 1});
  CHECK(rainbow_to_roman(complete_graph(2), {B, B}) == RomanAssignment{1, 1});

  CHECK_THROWS_AS(rainbow_to_roman(cycle_graph(4), {A, E, A, E}), DomainError);
}

TEST_CASE("conversions on minimum witnesses respect the bounds") {
  for (int n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, [](const Graph& g) {
      const auto rr = gamma_roman(g);
      const auto r2 = gamma_r2(g);
      const auto f = roman_to_rainbow(g, rr.witness);
      CHECK(is_2rainbow_dominating(g, f));
      CHECK(f.weight() == rr.value);

      const auto h = rainbow_to_roman(g, r2.witness);
      CHECK(is_roman_dominating(g, h));
      CHECK(h.weight() <= 3 * r2.value / 2);
      CHECK(h.weight() == rainbow_to_roman_weight(r2.witness));
    });
  }
}
