#include "rdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "rdom/error.hpp"

namespace rdom {

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw DomainError("graph order " + std::to_string(order) + " outside [0, " +
                      std::to_string(kMaxOrder) + "]");
  }
  rows_.assign(static_cast<std::size_t>(order), VertexSet{});
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& row : rows_) twice += row.size();
  return twice / 2;
}

VertexSet Graph::neighbors(VertexSet s) const {
  VertexSet out;
  s.for_each([&](int v) { out |= rows_[v]; });
  return out;
}

VertexSet Graph::closed_neighbors(VertexSet s) const { return neighbors(s) | s; }

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) {
    throw DomainError("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                      "} has an endpoint outside the graph");
  }
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  rows_[u].insert(v);
  rows_[v].insert(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u) {
    (rows_[u] - VertexSet::range(u + 1)).for_each([&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

void Graph::set_vertex_names(std::vector<std::string> names) {
  if (!names.empty() && static_cast<int>(names.size()) != order_) {
    throw DomainError("vertex name count does not match graph order");
  }
  names_ = std::move(names);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

/// Splits into exactly two non-negative decimal integers.
std::optional<std::pair<long long, long long>> two_ints(std::string_view line) {
  long long vals[2];
  std::size_t pos = 0;
  for (int k = 0; k < 2; ++k) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    if (first == last || *first < '0' || *first > '9') return std::nullopt;
    auto [ptr, ec] = std::from_chars(first, last, vals[k]);
    if (ec != std::errc{}) return std::nullopt;
    pos = static_cast<std::size_t>(ptr - line.data());
    if (k == 0 && (pos == line.size() || (line[pos] != ' ' && line[pos] != '\t'))) {
      return std::nullopt;
    }
  }
  if (!trim(line.substr(pos)).empty()) return std::nullopt;
  return std::pair{vals[0], vals[1]};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  long long expected = 0;
  long long seen = 0;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;

    const auto ints = two_ints(line);
    if (!g) {
      if (!ints) {
        throw ParseError(ParseErrorKind::MalformedHeader, line_no,
                         "expected header \"n m\"");
      }
      const auto [n, m] = *ints;
      if (n > kMaxOrder) {
        throw ParseError(ParseErrorKind::MalformedHeader, line_no,
                         "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
      }
      if (m > n * (n - 1) / 2) {
        throw ParseError(ParseErrorKind::MalformedHeader, line_no,
                         "edge count " + std::to_string(m) + " impossible for order " +
                             std::to_string(n));
      }
      g.emplace(static_cast<int>(n));
      expected = m;
      continue;
    }
    if (!ints) {
      throw ParseError(ParseErrorKind::MalformedLine, line_no, "expected edge \"u v\"");
    }
    const auto [u, v] = *ints;
    if (u >= g->order() || v >= g->order()) {
      throw ParseError(ParseErrorKind::VertexOutOfRange, line_no,
                       "vertex index out of range for order " + std::to_string(g->order()));
    }
    if (u == v) {
      throw ParseError(ParseErrorKind::SelfLoop, line_no,
                       "self-loop at vertex " + std::to_string(u));
    }
    if (g->adjacent(static_cast<int>(u), static_cast<int>(v))) {
      throw ParseError(ParseErrorKind::DuplicateEdge, line_no,
                       "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    if (++seen > expected) {
      throw ParseError(ParseErrorKind::CountMismatch, line_no,
                       "more edges than the header's " + std::to_string(expected));
    }
    g->add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!g) throw ParseError(ParseErrorKind::MalformedHeader, 0, "missing header \"n m\"");
  if (seen != expected) {
    throw ParseError(ParseErrorKind::CountMismatch, 0,
                     "header promises " + std::to_string(expected) + " edges, found " +
                         std::to_string(seen));
  }
  return std::move(*g);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  const auto es = g.edges();
  os << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) os << u << ' ' << v << '\n';
  return os.str();
}

Graph path_graph(int n) {
  if (n < 1) throw DomainError("path needs at least 1 vertex");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph star_graph(int leaves) {
  if (leaves < 1) throw DomainError("star needs at least 1 leaf");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph diamond_graph() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  return g;
}

Graph make_named(std::string_view name, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw DomainError(std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (name == "diamond") {
    need(0);
    return diamond_graph();
  }
  if (name == "path") { need(1); return path_graph(params[0]); }
  if (name == "cycle") { need(1); return cycle_graph(params[0]); }
  if (name == "complete") {
    need(1);
    if (params[0] < 0) throw DomainError("complete graph order must be non-negative");
    return complete_graph(params[0]);
  }
  if (name == "empty") {
    need(1);
    if (params[0] < 0) throw DomainError("empty graph order must be non-negative");
    return empty_graph(params[0]);
  }
  if (name == "star") { need(1); return star_graph(params[0]); }
  throw DomainError("unknown graph constructor '" + std::string(name) + "'");
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  const auto keep = s.members();
  if (!keep.empty() && keep.back() >= g.order()) {
    throw DomainError("vertex set exceeds graph order");
  }
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    (g.neighbors(keep[i]) & s).for_each([&](int w) {
      if (index[w] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), index[w]);
    });
  }
  return h;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + g.order(), v + g.order());
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      frontier = g.neighbors(frontier) - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() >= 1 && components(g).size() == 1; }

bool is_k4_free(const Graph& g) {
  for (int a = 0; a < g.order(); ++a) {
    const VertexSet na = g.neighbors(a) - VertexSet::range(a + 1);
    bool found = false;
    na.for_each([&](int b) {
      if (found) return;
      const VertexSet common = na & (g.neighbors(b) - VertexSet::range(b + 1));
      common.for_each([&](int c) {
        if (!(common & g.neighbors(c)).empty()) found = true;
      });
    });
    if (found) return false;
  }
  return true;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw DomainError("permutation size does not match graph order");
  }
  VertexSet image;
  for (int p : perm) {
    if (p < 0 || p >= g.order() || image.contains(p)) throw DomainError("not a permutation");
    image.insert(p);
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace rdom
