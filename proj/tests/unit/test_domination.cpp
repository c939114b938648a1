#include <algorithm>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rdom/catalog.hpp"
#include "rdom/domination.hpp"
#include "rdom/error.hpp"

using namespace rdom;

namespace {

constexpr Label E = Label::None;
constexpr Label A = Label::One;
constexpr Label B = Label::Two;
constexpr Label AB = Label::Both;

std::vector<int> codes(const RainbowAssignment& f) {
  std::vector<int> out;
  for (Label l : f.labels()) out.push_back(static_cast<int>(l));
  return out;
}

}  // namespace

TEST_CASE("validators on the documented examples") {
  const Graph c4 = cycle_graph(4);
  CHECK(is_2rainbow_dominating(c4, {A, E, B, E}));
  CHECK_FALSE(is_2rainbow_dominating(c4, {A, E, A, E}));
  CHECK(is_2rainbow_dominating(c4, {AB, AB, AB, AB}));

  CHECK(is_roman_dominating(c4, {2, 0, 1, 0}));
  CHECK(is_roman_dominating(path_graph(3), {0, 2, 0}));
  CHECK_FALSE(is_roman_dominating(path_graph(3), {0, 1, 0}));
  CHECK(is_roman_dominating(c4, {1, 1, 1, 1}));

  CHECK_THROWS_AS(is_2rainbow_dominating(c4, {A, E}), DomainError);
  CHECK_THROWS_AS(is_roman_dominating(c4, {1, 1}), DomainError);
}

TEST_CASE("validators agree with the definition-level checks") {
  SplitMix64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const Graph g = random_graph(n, rng);
    RainbowAssignment f(n);
    RomanAssignment r(n);
    std::vector<int> fc(n), rv(n);
    for (int v = 0; v < n; ++v) {
      fc[v] = static_cast<int>(rng.below(4));
      rv[v] = static_cast<int>(rng.below(3));
      f[v] = static_cast<Label>(fc[v]);
      r.set(v, rv[v]);
    }
    CHECK(is_2rainbow_dominating(g, f) == oracle::rainbow_valid(g, fc));
    CHECK(is_roman_dominating(g, r) == oracle::roman_valid(g, rv));
  }
}

TEST_CASE("known parameter values") {
  struct Case {
    Graph g;
    int r2, roman;
  };
  const std::vector<Case> cases = {
      {complete_graph(1), 1, 1}, {empty_graph(2), 2, 2}, {cycle_graph(4), 2, 3},
      {path_graph(5), 3, 4},     {cycle_graph(5), 3, 4}, {Graph(0), 0, 0},
  };
  for (const auto& c : cases) {
    const auto r2 = gamma_r2(c.g);
    const auto rr = gamma_roman(c.g);
    CHECK(r2.value == c.r2);
    CHECK(rr.value == c.roman);
    CHECK(r2.witness.weight() == r2.value);
    CHECK(rr.witness.weight() == rr.value);
    CHECK(is_2rainbow_dominating(c.g, r2.witness));
    CHECK(is_roman_dominating(c.g, rr.witness));
  }
  CHECK(gamma_r2(Graph(0)).witness.size() == 0);
}

TEST_CASE("solvers agree with brute force and the prism check up to order 8") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 160; ++i) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const Graph g = random_graph(n, rng);
    const auto r2 = gamma_r2(g);
    const auto rr = gamma_roman(g);
    CAPTURE(to_edge_list(g));
    CHECK(r2.value == oracle::gamma_r2(g));
    CHECK(r2.value == gamma_r2_product_check(g));
    CHECK(rr.value == oracle::gamma_roman(g));
    CHECK(oracle::rainbow_valid(g, codes(r2.witness)));
    CHECK(oracle::roman_valid(g, rr.witness.values()));
    CHECK(r2.witness.weight() == r2.value);
    CHECK(rr.witness.weight() == rr.value);
    CHECK(r2.value <= rr.value);
    CHECK(2 * rr.value <= 3 * r2.value);
  }
}

TEST_CASE("every labelled graph of order 5 matches brute force") {
  for_each_labeled_graph(5, [](const Graph& g) {
    CHECK(gamma_r2(g).value == oracle::gamma_r2(g));
    CHECK(gamma_roman(g).value == oracle::gamma_roman(g));
  });
}

TEST_CASE("both parameters add over disjoint unions") {
  SplitMix64 rng(31);
  for (int i = 0; i < 60; ++i) {
    const Graph a = random_graph(static_cast<int>(rng.below(7)), rng);
    const Graph b = random_graph(static_cast<int>(rng.below(7)), rng);
    const Graph u = disjoint_union(a, b);
    CHECK(gamma_r2(u).value == gamma_r2(a).value + gamma_r2(b).value);
    CHECK(gamma_roman(u).value == gamma_roman(a).value + gamma_roman(b).value);
  }
}

TEST_CASE("solvers are deterministic") {
  SplitMix64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(9, rng);
    CHECK(gamma_r2(g).witness == gamma_r2(g).witness);
    CHECK(gamma_roman(g).witness == gamma_roman(g).witness);
  }
}

TEST_CASE("all_min_2rdf examples") {
  const auto k1 = all_min_2rdf(complete_graph(1));
  CHECK(k1 == std::vector<RainbowAssignment>{{A}, {B}});

  const auto c4 = all_min_2rdf(cycle_graph(4));
  CHECK(std::find(c4.begin(), c4.end(), RainbowAssignment{A, E, B, E}) != c4.end());
  for (const auto& f : c4) CHECK(f.weight() == 2);

  const auto k2 = all_min_2rdf(complete_graph(2));
  CHECK(k2 == std::vector<RainbowAssignment>{
                  {E, AB}, {A, A}, {A, B}, {B, A}, {B, B}, {AB, E}});

  CHECK(all_min_2rdf(Graph(0)) == std::vector<RainbowAssignment>{RainbowAssignment{}});
  CHECK_THROWS_AS(all_min_2rdf(Graph(17)), DomainError);
}

TEST_CASE("all_min_2rdf matches exhaustive enumeration") {
  SplitMix64 rng(77);
  for (int i = 0; i < 80; ++i) {
    const Graph g = random_graph(1 + static_cast<int>(rng.below(6)), rng);
    CHECK(all_min_2rdf(g) == oracle::all_min_2rdf(g));
  }
}

TEST_CASE("product check examples and cap") {
  CHECK(gamma_r2_product_check(cycle_graph(4)) == 2);
  CHECK(gamma_r2_product_check(complete_graph(1)) == 1);
  CHECK(gamma_r2_product_check(path_graph(5)) == 3);
  CHECK(gamma_r2_product_check(Graph(0)) == 0);
  CHECK_THROWS_AS(gamma_r2_product_check(Graph(21)), DomainError);

  const Graph p = prism(path_graph(3));
  CHECK(p.order() == 6);
  CHECK(p.edge_count() == 2 * 2 + 3);
  CHECK(p.adjacent(1, 4));
}

TEST_CASE("larger inputs stay within reach") {
  const Graph c = cycle_graph(30);
  CHECK(gamma_r2(c).value == 16);  // floor(n/2) + ceil(n/4) - floor(n/4)
  CHECK(gamma_roman(c).value == 20);
  CHECK(gamma_r2(empty_graph(64)).value == 64);
  CHECK(gamma_roman(complete_graph(64)).value == 2);
}
