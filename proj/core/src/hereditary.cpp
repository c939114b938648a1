#include "rdom/hereditary.hpp"

#include <algorithm>

#include "rdom/canonical.hpp"
#include "rdom/domination.hpp"
#include "rdom/error.hpp"

namespace rdom {

Family equality_family() {
  return {{"P5", path_graph(5)}, {"C5", cycle_graph(5)}, {"C4", cycle_graph(4)}};
}

Family extremal3_family() {
  return {{"coK3", empty_graph(3)}, {"K2+K1", disjoint_union(complete_graph(2), complete_graph(1))}};
}

Family preset_family(std::string_view name) {
  if (name == "theorem2") return equality_family();
  if (name == "theorem3") return extremal3_family();
  throw DomainError("unknown family preset '" + std::string(name) + "'");
}

std::optional<VertexSet> find_induced(const Graph& g, const Graph& h) {
  const int k = h.order();
  if (k > kInducedPatternMaxOrder) {
    throw DomainError("induced-subgraph patterns support order <= " +
                      std::to_string(kInducedPatternMaxOrder));
  }
  const int n = g.order();
  if (k > n) return std::nullopt;
  if (k == 0) return VertexSet{};
  const std::string target = canonical_form(h);
  const int edges = h.edge_count();

  // k-subsets of {0..n-1} in lexicographic order of their sorted members.
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int v : idx) s.insert(v);
    int e = 0;
    for (int v : idx) e += (g.neighbors(v) & s).size();
    if (e / 2 == edges && canonical_form(induced_subgraph(g, s)) == target) return s;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

bool has_induced(const Graph& g, const Graph& h) { return find_induced(g, h).has_value(); }

std::optional<std::string> first_induced_member(const Graph& g, const Family& family) {
  for (const auto& member : family) {
    if (has_induced(g, member.graph)) return member.name;
  }
  return std::nullopt;
}

bool is_free(const Graph& g, const Family& family) {
  return !first_induced_member(g, family).has_value();
}

namespace {

void check_hereditary_cap(const Graph& g) {
  if (g.order() > kHereditaryMaxOrder) {
    throw DomainError("hereditary checks support order <= " +
                      std::to_string(kHereditaryMaxOrder));
  }
}

template <class Fn>
bool all_subsets(const Graph& g, Fn&& pred) {
  const std::uint64_t count = std::uint64_t{1} << g.order();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (!pred(induced_subgraph(g, VertexSet{mask}))) return false;
  }
  return true;
}

}  // namespace

bool hereditary_equality_direct(const Graph& g) {
  check_hereditary_cap(g);
  return all_subsets(g, [](const Graph& h) { return gamma_r2(h).value == gamma_roman(h).value; });
}

bool in_Gk_direct(const Graph& g, int k) {
  check_hereditary_cap(g);
  if (k < 1) throw DomainError("k must be positive");
  return all_subsets(g, [k](const Graph& h) {
    const int r2 = gamma_r2(h).value;
    return r2 < k || 2 * gamma_roman(h).value == 3 * r2;
  });
}

namespace {

// {1,2} < {1} < {2} < {}
int branch_rank(Label l) {
  switch (l) {
    case Label::Both: return 0;
    case Label::One: return 1;
    case Label::Two: return 2;
    case Label::None: return 3;
  }
  return 3;
}

bool branch_less(const RainbowAssignment& a, const RainbowAssignment& b) {
  return std::lexicographical_compare(
      a.labels().begin(), a.labels().end(), b.labels().begin(), b.labels().end(),
      [](Label x, Label y) { return branch_rank(x) < branch_rank(y); });
}

}  // namespace

RainbowAssignment canonical_min_2rdf(const Graph& g) {
  const auto all = all_min_2rdf(g);
  const RainbowAssignment* best = &all.front();
  for (const auto& f : all) {
    const int a = f.count(Label::Both);
    const int b = best->count(Label::Both);
    if (a > b || (a == b && branch_less(f, *best))) best = &f;
  }
  return *best;
}

RomanAssignment merge_colors(const RainbowAssignment& f) {
  RomanAssignment r(f.size());
  for (int v = 0; v < f.size(); ++v) {
    r.set(v, f[v] == Label::None ? 0 : (f[v] == Label::Both ? 2 : 1));
  }
  return r;
}

}  // namespace rdom
