#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "rdom/catalog.hpp"
#include "rdom/domination.hpp"
#include "rdom/error.hpp"
#include "rdom/structure.hpp"

using namespace rdom;

namespace {

constexpr Label E = Label::None;
constexpr Label A = Label::One;
constexpr Label B = Label::Two;
constexpr Label AB = Label::Both;

}  // namespace

TEST_CASE("is_extremal examples") {
  CHECK(is_extremal(cycle_graph(4)));
  CHECK_FALSE(is_extremal(complete_graph(1)));
  CHECK_FALSE(is_extremal(path_graph(5)));
  CHECK_FALSE(is_extremal(complete_graph(5)));
  CHECK(is_extremal(disjoint_union(cycle_graph(4), cycle_graph(4))));
}

TEST_CASE("audit of the C4 witness") {
  const auto a = audit_function(cycle_graph(4), {A, E, B, E});
  CHECK(a.passed());
  CHECK(a.one == VertexSet{0b0001});
  CHECK(a.two == VertexSet{0b0100});
  CHECK(a.none == VertexSet{0b1010});
  CHECK(a.both.empty());
  CHECK(a.private_counts == std::vector<int>{2, -1, 2, -1});
}

TEST_CASE("audit flags each property separately") {
  // K2 with {1,2} on one end fails (i) only through n_12 > 0.
  const auto both = audit_function(complete_graph(2), {AB, E});
  CHECK_FALSE(both.properties[0]);

  // Adjacent {1} and {2}.
  const auto adj = audit_function(path_graph(2), {A, B});
  CHECK_FALSE(adj.properties[1]);

  // P3 fully coloured {1}: a vertex of degree 2 inside V_1.
  const auto deg = audit_function(path_graph(3), {A, A, A});
  CHECK_FALSE(deg.properties[2]);

  // Star centre {1}, one leaf {2}: the empty leaves never see color 2.
  const auto star = audit_function(star_graph(3), {A, E, E, B});
  CHECK_FALSE(star.properties[3]);
  CHECK_FALSE(star.properties[4]);

  CHECK_THROWS_AS(audit_function(cycle_graph(4), {A, E}), DomainError);
}

TEST_CASE("audit_theorem4 on C4 and C4 + C4") {
  const auto c4 = audit_theorem4(cycle_graph(4));
  CHECK(c4.size() == all_min_2rdf(cycle_graph(4)).size());
  for (const auto& a : c4) CHECK(a.passed());

  const Graph cc = disjoint_union(cycle_graph(4), cycle_graph(4));
  CHECK(gamma_r2(cc).value == 4);
  CHECK(gamma_roman(cc).value == 6);
  const auto audits = audit_theorem4(cc);
  CHECK_FALSE(audits.empty());
  for (const auto& a : audits) {
    CHECK(a.passed());
    CHECK(a.one.size() == a.two.size());
    CHECK((a.none | a.one | a.two | a.both) == cc.vertices());
  }
}

TEST_CASE("audit_theorem4 rejects non-extremal graphs") {
  CHECK_THROWS_AS(audit_theorem4(path_graph(5)), DomainError);
  CHECK_THROWS_AS(audit_theorem4(complete_graph(1)), DomainError);
}

TEST_CASE("every extremal graph of order <= 5 passes the audit") {
  for (int n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, [](const Graph& g) {
      if (!is_extremal(g)) return;
      const int r2 = gamma_r2(g).value;
      CHECK(r2 % 2 == 0);
      for (const auto& a : audit_theorem4(g)) {
        CHECK(a.passed());
        CHECK(a.one.size() + a.two.size() == r2);
      }
    });
  }
}

TEST_CASE("structure_json layout") {
  const auto j = nlohmann::ordered_json::parse(structure_json(cycle_graph(4)));
  CHECK(j["graph"]["order"] == 4);
  CHECK(j["gamma_r2"] == 2);
  CHECK(j["gamma_R"] == 3);
  CHECK(j["extremal"] == true);
  REQUIRE(j["functions"].is_array());
  for (const auto& f : j["functions"]) {
    CHECK(f["properties"]["v"] == true);
    CHECK(f["private_counts"].size() == 4);
  }

  const auto p = nlohmann::ordered_json::parse(structure_json(path_graph(5)));
  CHECK(p["extremal"] == false);
  CHECK(p["functions"].is_null());
}
