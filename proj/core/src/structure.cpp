#include "rdom/structure.hpp"

#include <algorithm>

#include "json.hpp"
#include "rdom/domination.hpp"
#include "rdom/error.hpp"

namespace rdom {

bool StructureAudit::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](bool b) { return b; });
}

bool is_extremal(const Graph& g) {
  return 2 * gamma_roman(g).value == 3 * gamma_r2(g).value;
}

StructureAudit audit_function(const Graph& g, const RainbowAssignment& f) {
  if (f.size() != g.order()) throw DomainError("assignment not sized to graph");
  StructureAudit a;
  a.function = f;
  a.none = f.vertices_with(Label::None);
  a.one = f.vertices_with(Label::One);
  a.two = f.vertices_with(Label::Two);
  a.both = f.vertices_with(Label::Both);
  const std::array<VertexSet, 2> cls = {a.one, a.two};

  a.properties[0] = a.one.size() == a.two.size() && a.both.empty();

  bool cross = false;
  a.one.for_each([&](int v) { cross = cross || !(g.neighbors(v) & a.two).empty(); });
  a.properties[1] = !cross;

  bool low_degree = true;
  for (const VertexSet& c : cls) {
    c.for_each([&](int v) { low_degree = low_degree && (g.neighbors(v) & c).size() <= 1; });
  }
  a.properties[2] = low_degree;

  bool one_or_two = true;
  a.none.for_each([&](int v) {
    for (const VertexSet& c : cls) {
      const int k = (g.neighbors(v) & c).size();
      one_or_two = one_or_two && k >= 1 && k <= 2;
    }
  });
  a.properties[3] = one_or_two;

  a.private_counts.assign(static_cast<std::size_t>(g.order()), -1);
  bool private_pairs = true;
  for (const VertexSet& c : cls) {
    c.for_each([&](int u) {
      int count = 0;
      (g.neighbors(u) & a.none).for_each([&](int v) {
        if ((g.neighbors(v) & c) == VertexSet::single(u)) ++count;
      });
      a.private_counts[u] = count;
      private_pairs = private_pairs && count >= 2;
    });
  }
  a.properties[4] = private_pairs;
  return a;
}

std::vector<StructureAudit> audit_theorem4(const Graph& g) {
  if (g.order() > kEnumerationMaxOrder) {
    throw DomainError("audit supports order <= " + std::to_string(kEnumerationMaxOrder));
  }
  if (!is_extremal(g)) {
    throw DomainError("audit requires 2 gamma_R = 3 gamma_r2; the graph is not extremal");
  }
  std::vector<StructureAudit> out;
  for (const auto& f : all_min_2rdf(g)) out.push_back(audit_function(g, f));
  return out;
}

std::string structure_json(const Graph& g) {
  using nlohmann::ordered_json;
  ordered_json j;
  ordered_json graph;
  graph["order"] = g.order();
  graph["edges"] = ordered_json::array();
  for (auto [u, v] : g.edges()) graph["edges"].push_back({u, v});
  j["graph"] = graph;
  const int r2 = gamma_r2(g).value;
  const int roman = gamma_roman(g).value;
  j["gamma_r2"] = r2;
  j["gamma_R"] = roman;
  const bool extremal = 2 * roman == 3 * r2;
  j["extremal"] = extremal;
  if (!extremal) {
    j["functions"] = nullptr;
    return j.dump();
  }
  j["functions"] = ordered_json::array();
  static constexpr const char* kNames[] = {"i", "ii", "iii", "iv", "v"};
  for (const auto& a : audit_theorem4(g)) {
    ordered_json fj;
    fj["assignment"] = format_assignment(a.function);
    ordered_json props;
    for (int p = 0; p < 5; ++p) props[kNames[p]] = a.properties[p];
    fj["properties"] = props;
    ordered_json counts = ordered_json::array();
    for (int c : a.private_counts) {
      if (c < 0) counts.push_back(nullptr);
      else counts.push_back(c);
    }
    fj["private_counts"] = counts;
    j["functions"].push_back(fj);
  }
  return j.dump();
}

}  // namespace rdom
