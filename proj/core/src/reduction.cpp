#include "rdom/reduction.hpp"

#include <cstdlib>

#include "json.hpp"
#include "rdom/domination.hpp"
#include "rdom/error.hpp"

namespace rdom {

std::string Role::name() const {
  switch (kind) {
    case RoleKind::PosLiteral: return "x" + std::to_string(index);
    case RoleKind::NegLiteral: return "~x" + std::to_string(index);
    case RoleKind::Filler: return "d" + std::to_string(index) + (slot == 1 ? "a" : "b");
    case RoleKind::Clause: return "C" + std::to_string(index);
    case RoleKind::U: return "u";
    case RoleKind::V: return "v";
    case RoleKind::W: return "w";
  }
  return "?";
}

ReductionGraph build_reduction(const CnfFormula& f) {
  validate(f);
  if (f.num_clauses() < 2) throw DomainError("the reduction needs at least 2 clauses");
  std::vector<bool> occurs(static_cast<std::size_t>(f.num_vars), false);
  for (const auto& c : f.clauses)
    for (Literal l : c) occurs[std::abs(l) - 1] = true;
  for (int i = 0; i < f.num_vars; ++i) {
    if (!occurs[i]) throw DomainError("variable x" + std::to_string(i + 1) + " occurs in no clause");
  }
  const int n = f.num_vars;
  const int m = f.num_clauses();
  if (4 * n + m + 3 > kMaxOrder) {
    throw DomainError("gadget order " + std::to_string(4 * n + m + 3) + " exceeds " +
                      std::to_string(kMaxOrder));
  }

  ReductionGraph r;
  r.num_vars = n;
  r.num_clauses = m;
  r.graph = Graph(4 * n + m + 3);
  for (int i = 1; i <= n; ++i) {
    r.roles.push_back({RoleKind::PosLiteral, i});
    r.roles.push_back({RoleKind::NegLiteral, i});
    r.roles.push_back({RoleKind::Filler, i, 1});
    r.roles.push_back({RoleKind::Filler, i, 2});
    const int x = r.pos_literal(i);
    const int nx = r.neg_literal(i);
    r.graph.add_edge(x, nx);
    for (int slot = 1; slot <= 2; ++slot) {
      r.graph.add_edge(x, r.filler(i, slot));
      r.graph.add_edge(nx, r.filler(i, slot));
    }
  }
  for (int j = 1; j <= m; ++j) {
    r.roles.push_back({RoleKind::Clause, j});
    for (Literal l : f.clauses[j - 1]) r.graph.add_edge(r.clause_vertex(j), r.literal_vertex(l));
  }
  r.roles.push_back({RoleKind::U});
  r.roles.push_back({RoleKind::V});
  r.roles.push_back({RoleKind::W});
  r.graph.add_edge(r.u(), r.v());
  r.graph.add_edge(r.v(), r.w());
  for (int j = 1; j <= m; ++j) {
    r.graph.add_edge(r.u(), r.clause_vertex(j));
    r.graph.add_edge(r.w(), r.clause_vertex(j));
  }

  std::vector<std::string> names;
  for (const auto& role : r.roles) names.push_back(role.name());
  r.graph.set_vertex_names(std::move(names));
  return r;
}

RainbowAssignment rainbow_certificate(const ReductionGraph& r) {
  RainbowAssignment f(r.graph.order());
  for (int i = 1; i <= r.num_vars; ++i) {
    f[r.pos_literal(i)] = Label::One;
    f[r.neg_literal(i)] = Label::Two;
  }
  f[r.u()] = Label::One;
  f[r.w()] = Label::Two;
  return f;
}

RomanAssignment roman_from_assignment(const ReductionGraph& r, const TruthAssignment& a) {
  if (static_cast<int>(a.size()) != r.num_vars) {
    throw DomainError("assignment size does not match variable count");
  }
  RomanAssignment g(r.graph.order());
  for (int i = 1; i <= r.num_vars; ++i) g.set(a[i - 1] ? r.pos_literal(i) : r.neg_literal(i), 2);
  g.set(r.v(), 2);
  return g;
}

RomanAssignment roman_upper_certificate(const ReductionGraph& r) {
  RomanAssignment g(r.graph.order());
  for (int i = 1; i <= r.num_vars; ++i) g.set(r.pos_literal(i), 2);
  g.set(r.u(), 2);
  g.set(r.w(), 1);
  return g;
}

TruthAssignment extract_assignment(const ReductionGraph& r, const RomanAssignment& g) {
  if (!is_roman_dominating(r.graph, g)) {
    throw DomainError("extraction needs a Roman dominating function");
  }
  if (g.weight() != 2 * r.num_vars + 2) {
    throw DomainError("extraction needs weight " + std::to_string(2 * r.num_vars + 2) +
                      ", got " + std::to_string(g.weight()));
  }
  TruthAssignment a(static_cast<std::size_t>(r.num_vars), false);
  for (int i = 1; i <= r.num_vars; ++i) a[i - 1] = g[r.pos_literal(i)] == 2;
  return a;
}

bool check_gadget_structure(const CnfFormula& f, const ReductionGraph& r) {
  const int n = f.num_vars;
  const int m = f.num_clauses();
  const Graph& g = r.graph;
  if (r.num_vars != n || r.num_clauses != m || g.order() != 4 * n + m + 3) return false;
  if (static_cast<int>(r.roles.size()) != g.order()) return false;

  VertexSet clauses;
  for (int j = 1; j <= m; ++j) clauses.insert(r.clause_vertex(j));

  for (int i = 1; i <= n; ++i) {
    const int x = r.pos_literal(i);
    const int nx = r.neg_literal(i);
    const int a = r.filler(i, 1);
    const int b = r.filler(i, 2);
    VertexSet gadget;
    for (int v : {x, nx, a, b}) gadget.insert(v);
    const Graph d = induced_subgraph(g, gadget);
    if (d.edge_count() != 5 || !g.adjacent(x, nx) || g.adjacent(a, b)) return false;
    if (g.neighbors(a) != (VertexSet::single(x) | VertexSet::single(nx))) return false;
    if (g.neighbors(b) != (VertexSet::single(x) | VertexSet::single(nx))) return false;
    if (!(g.neighbors(x) - gadget - clauses).empty()) return false;
    if (!(g.neighbors(nx) - gadget - clauses).empty()) return false;
  }
  for (int j = 1; j <= m; ++j) {
    VertexSet expect = VertexSet::single(r.u()) | VertexSet::single(r.w());
    for (Literal l : f.clauses[j - 1]) expect.insert(r.literal_vertex(l));
    if (g.neighbors(r.clause_vertex(j)) != expect) return false;
  }
  const VertexSet uw = VertexSet::single(r.u()) | VertexSet::single(r.w());
  if (g.neighbors(r.v()) != uw) return false;
  if (g.neighbors(r.u()) != (clauses | VertexSet::single(r.v()))) return false;
  if (g.neighbors(r.w()) != (clauses | VertexSet::single(r.v()))) return false;
  return is_connected(g) && is_k4_free(g);
}

ReductionReport verify_reduction(const CnfFormula& f) {
  const ReductionGraph r = build_reduction(f);
  const int n = f.num_vars;
  const int target = 2 * n + 2;

  ReductionReport rep;
  rep.n = n;
  rep.m = f.num_clauses();
  rep.order = r.graph.order();
  const auto r2 = gamma_r2(r.graph);
  const auto roman = gamma_roman(r.graph);
  rep.gamma_r2 = r2.value;
  rep.gamma_roman = roman.value;
  rep.gap = roman.value - r2.value;
  const auto oracle = sat_brute_force(f);
  rep.satisfiable = oracle.has_value();

  bool ok = check_gadget_structure(f, r);
  const auto cert = rainbow_certificate(r);
  ok = ok && is_2rainbow_dominating(r.graph, cert) && cert.weight() == target;
  const auto upper = roman_upper_certificate(r);
  ok = ok && is_roman_dominating(r.graph, upper) && upper.weight() == target + 1;
  ok = ok && rep.gamma_r2 == target;
  ok = ok && (rep.gamma_roman == target || rep.gamma_roman == target + 1);
  ok = ok && ((rep.gamma_roman == target) == rep.satisfiable);
  if (oracle) {
    const auto from_sat = roman_from_assignment(r, *oracle);
    ok = ok && is_roman_dominating(r.graph, from_sat) && from_sat.weight() == target;
  }
  if (rep.gamma_roman == target) {
    rep.assignment = extract_assignment(r, roman.witness);
    ok = ok && satisfies(f, *rep.assignment);
  }
  rep.consistent = ok;
  return rep;
}

std::string to_json(const ReductionReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["order"] = report.order;
  j["gamma_r2"] = report.gamma_r2;
  j["gamma_R"] = report.gamma_roman;
  j["gap"] = report.gap;
  j["satisfiable"] = report.satisfiable;
  if (report.assignment) {
    j["assignment"] = nlohmann::ordered_json::array();
    for (bool b : *report.assignment) j["assignment"].push_back(b);
  } else {
    j["assignment"] = nullptr;
  }
  j["consistent"] = report.consistent;
  return j.dump();
}

}  // namespace rdom
