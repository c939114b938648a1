#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rdom {

inline constexpr int kMaxOrder = 64;

/// Subset of the vertices 0..63 of some graph, stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  template <class Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  std::vector<int> members() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Finite simple undirected graph on vertices 0..order-1, order <= 64.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of the given order.
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const std::pair<int, int>> edges);

  int order() const { return order_; }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::range(order_); }

  VertexSet neighbors(int v) const { return rows_[v]; }
  VertexSet closed_neighbors(int v) const { return rows_[v] | VertexSet::single(v); }
  VertexSet neighbors(VertexSet s) const;
  VertexSet closed_neighbors(VertexSet s) const;
  int degree(int v) const { return rows_[v].size(); }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }

  /// Adds the edge uv; throws DomainError on a loop or an index out of range.
  /// Adding an existing edge is a no-op.
  void add_edge(int u, int v);

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Display labels; empty unless set. Not part of graph equality.
  const std::vector<std::string>& vertex_names() const { return names_; }
  void set_vertex_names(std::vector<std::string> names);

  bool operator==(const Graph& other) const {
    return order_ == other.order_ && rows_ == other.rows_;
  }

 private:
  int order_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::string> names_;
};

/// Reads the edge-list text format:
///   optional '#' comment lines, a header "n m", then m lines "u v".
/// Blank lines are ignored. Throws ParseError naming the offending line.
Graph parse_edge_list(std::string_view text);

/// Writes the header and the edges sorted lexicographically, one per line.
std::string to_edge_list(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
/// K_{1,leaves}; vertex 0 is the center.
Graph star_graph(int leaves);
/// K4 - e: vertices 0,1 are the adjacent degree-3 pair, 2,3 the nonadjacent pair.
Graph diamond_graph();

/// Dispatches on {path, cycle, complete, empty, star, diamond}.
Graph make_named(std::string_view name, std::span<const int> params);

/// G[S], relabelled 0..|S|-1 in ascending order of S.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Vertices of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Connected components, ascending by their minimum vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

bool is_k4_free(const Graph& g);

/// Applies a vertex permutation: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace rdom
