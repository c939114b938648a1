#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "rdom/cnf.hpp"
#include "rdom/domination.hpp"
#include "rdom/error.hpp"
#include "rdom/reduction.hpp"

using namespace rdom;

namespace {

ParseErrorKind dimacs_kind(std::string_view text) {
  try {
    parse_dimacs(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ParseErrorKind::BadToken;
}

CnfFormula formula(int n, std::vector<Clause> clauses) { return {n, std::move(clauses)}; }

}  // namespace

TEST_CASE("parse_dimacs examples") {
  CHECK(parse_dimacs("p cnf 1 2\n1 0\n-1 0") == formula(1, {{1}, {-1}}));
  const auto f = parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 0");
  REQUIRE(f.num_clauses() == 2);
  CHECK(f.clauses[0].size() == 3);
  CHECK(f.clauses[1].size() == 2);
  CHECK(dimacs_kind("p cnf 1 1\n1 -1 0") == ParseErrorKind::TautologicalClause);
}

TEST_CASE("parse_dimacs accepts comments and multi-line clauses") {
  const auto f = parse_dimacs("c hello\np cnf 2 2\n1\n 2 0 -1\n0\n%\n0\n");
  CHECK(f == formula(2, {{1, 2}, {-1}}));
}

TEST_CASE("parse_dimacs rejects malformed input") {
  CHECK(dimacs_kind("1 0\n") == ParseErrorKind::MalformedHeader);
  CHECK(dimacs_kind("p cnf 0 1\n") == ParseErrorKind::MalformedHeader);
  CHECK(dimacs_kind("p cnf 1 1\n2 0\n") == ParseErrorKind::LiteralOutOfRange);
  CHECK(dimacs_kind("p cnf 4 1\n1 2 3 4 0\n") == ParseErrorKind::ClauseTooLong);
  CHECK(dimacs_kind("p cnf 1 2\n1 0\n0\n") == ParseErrorKind::EmptyClause);
  CHECK(dimacs_kind("p cnf 1 2\n1 0\n") == ParseErrorKind::CountMismatch);
  CHECK(dimacs_kind("p cnf 1 1\n1 0\n-1 0\n") == ParseErrorKind::CountMismatch);
  CHECK(dimacs_kind("p cnf 1 1\n1 x 0\n") == ParseErrorKind::MalformedLine);
}

TEST_CASE("dimacs round trip") {
  SplitMix64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto f = oracle::random_cnf(1 + static_cast<int>(rng.below(6)),
                                      1 + static_cast<int>(rng.below(8)), 3, rng);
    CHECK(parse_dimacs(to_dimacs(f)) == f);
  }
}

TEST_CASE("sat_brute_force examples") {
  CHECK_FALSE(sat_brute_force(formula(1, {{1}, {-1}})).has_value());
  CHECK(sat_brute_force(formula(1, {{1}, {1}})) == TruthAssignment{true});
  CHECK(sat_brute_force(formula(2, {{1, 2}, {-1, 2}})) == TruthAssignment{false, true});
  CHECK_THROWS_AS(sat_brute_force(formula(25, {{1}})), DomainError);
}

TEST_CASE("gadget for (x1) and (not x1)") {
  const auto f = formula(1, {{1}, {-1}});
  const auto r = build_reduction(f);
  CHECK(r.graph.order() == 9);
  CHECK(r.graph.edge_count() == 13);
  CHECK(is_connected(r.graph));
  CHECK(is_k4_free(r.graph));
  CHECK(check_gadget_structure(f, r));
  CHECK(r.roles[r.neg_literal(1)].name() == "~x1");
  CHECK(r.graph.vertex_names()[r.v()] == "v");

  const auto rep = verify_reduction(f);
  CHECK(rep.gamma_r2 == 4);
  CHECK(rep.gamma_roman == 5);
  CHECK(rep.gap == 1);
  CHECK_FALSE(rep.satisfiable);
  CHECK_FALSE(rep.assignment.has_value());
  CHECK(rep.consistent);
}

TEST_CASE("gadget for (x1) and (x1)") {
  const auto f = formula(1, {{1}, {1}});
  const auto r = build_reduction(f);
  const auto rep = verify_reduction(f);
  CHECK(rep.gamma_r2 == 4);
  CHECK(rep.gamma_roman == 4);
  CHECK(rep.gap == 0);
  CHECK(rep.satisfiable);
  CHECK(rep.assignment == TruthAssignment{true});
  CHECK(rep.consistent);

  const auto g = roman_from_assignment(r, {true});
  CHECK(g[r.pos_literal(1)] == 2);
  CHECK(g[r.v()] == 2);
  CHECK(extract_assignment(r, g) == TruthAssignment{true});
  CHECK_THROWS_AS(extract_assignment(r, roman_upper_certificate(r)), DomainError);
}

TEST_CASE("gadget order and clause degrees") {
  SplitMix64 rng(12);
  for (int i = 0; i < 10; ++i) {
    const auto f = oracle::random_cnf(3, 4, 3, rng);
    const auto r = build_reduction(f);
    CHECK(r.graph.order() == 19);
    CHECK(check_gadget_structure(f, r));
    CHECK(r.graph.degree(r.v()) == 2);
    for (int j = 1; j <= 4; ++j) CHECK(r.graph.degree(r.clause_vertex(j)) == 3 + 2);
  }
  CHECK_THROWS_AS(build_reduction(formula(1, {{1}})), DomainError);
  CHECK_THROWS_AS(build_reduction(formula(1, {{1}, {2}})), DomainError);
  CHECK_THROWS_AS(build_reduction(formula(2, {{1}, {-1}})), DomainError);
}

TEST_CASE("certificates are valid with the promised weights") {
  for (const auto& f : oracle::reduction_fixtures()) {
    const auto r = build_reduction(f);
    const int n = f.num_vars;
    const auto cert = rainbow_certificate(r);
    CHECK(is_2rainbow_dominating(r.graph, cert));
    CHECK(cert.weight() == 2 * n + 2);
    const auto up = roman_upper_certificate(r);
    CHECK(is_roman_dominating(r.graph, up));
    CHECK(up.weight() == 2 * n + 3);
    if (const auto a = sat_brute_force(f)) {
      const auto g = roman_from_assignment(r, *a);
      CHECK(is_roman_dominating(r.graph, g));
      CHECK(g.weight() == 2 * n + 2);
    }
  }
}

TEST_CASE("verify_reduction on small random formulas") {
  SplitMix64 rng(404);
  for (int i = 0; i < 8; ++i) {
    const auto f = oracle::random_cnf(2 + static_cast<int>(rng.below(2)),
                                      2 + static_cast<int>(rng.below(4)), 3, rng);
    const auto rep = verify_reduction(f);
    CHECK(rep.consistent);
    CHECK(rep.gamma_r2 == 2 * f.num_vars + 2);
    CHECK(rep.satisfiable == (rep.gap == 0));
    if (rep.assignment) CHECK(satisfies(f, *rep.assignment));
  }
}

TEST_CASE("report json keeps key order") {
  const auto rep = verify_reduction(formula(1, {{1}, {-1}}));
  const auto j = nlohmann::ordered_json::parse(to_json(rep));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "m", "order", "gamma_r2", "gamma_R", "gap",
                                         "satisfiable", "assignment", "consistent"});
  CHECK(j["assignment"].is_null());
}
