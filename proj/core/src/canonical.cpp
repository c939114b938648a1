#include "rdom/canonical.hpp"

#include <algorithm>
#include <array>

#include "rdom/error.hpp"

namespace rdom {
namespace {

struct CanonicalSearch {
  const Graph& g;
  int n;
  std::array<int, kMaxCanonicalOrder> degree_of_cell{};
  std::array<int, kMaxCanonicalOrder> perm{};
  std::array<int, kMaxCanonicalOrder> best_perm{};
  // column p of the encoding packed as bits q = 0..p-1 (bit q = a(perm[q], perm[p]))
  std::array<std::uint32_t, kMaxCanonicalOrder> column{};
  std::array<std::uint32_t, kMaxCanonicalOrder> best_column{};
  bool have_best = false;
  VertexSet used;

  explicit CanonicalSearch(const Graph& graph) : g(graph), n(graph.order()) {
    std::vector<int> degrees;
    for (int v = 0; v < n; ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    for (int p = 0; p < n; ++p) degree_of_cell[p] = degrees[p];
  }

  // Columns compare as bit strings read from q = 0 upward, so the first
  // differing bit decides; a smaller first differing bit means '0' first.
  static int compare_column(std::uint32_t a, std::uint32_t b) {
    if (a == b) return 0;
    const std::uint32_t diff = a ^ b;
    const int q = std::countr_zero(diff);
    return ((a >> q) & 1U) ? 1 : -1;
  }

  // Returns true when the best encoding was replaced inside this subtree; the
  // current prefix then equals the best prefix.
  bool run(int p, bool strictly_less) {
    if (p == n) {
      if (have_best && !strictly_less) return false;
      best_column = column;
      best_perm = perm;
      have_best = true;
      return true;
    }
    bool updated = false;
    const int want = degree_of_cell[p];
    for (int v = 0; v < n; ++v) {
      if (used.contains(v) || g.degree(v) != want) continue;
      std::uint32_t col = 0;
      for (int q = 0; q < p; ++q) {
        if (g.adjacent(perm[q], v)) col |= std::uint32_t{1} << q;
      }
      bool less = strictly_less;
      if (have_best && !strictly_less) {
        const int c = compare_column(col, best_column[p]);
        if (c > 0) continue;
        less = c < 0;
      }
      perm[p] = v;
      column[p] = col;
      used.insert(v);
      if (run(p + 1, less)) {
        updated = true;
        strictly_less = false;
      }
      used.erase(v);
    }
    return updated;
  }
};

void check_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw DomainError("canonical form supports order <= " +
                      std::to_string(kMaxCanonicalOrder) + ", got " +
                      std::to_string(g.order()));
  }
}

std::string encode(int n, const std::array<std::uint32_t, kMaxCanonicalOrder>& cols) {
  std::string out;
  out += static_cast<char>('0' + n / 10);
  out += static_cast<char>('0' + n % 10);
  out += ':';
  for (int p = 1; p < n; ++p)
    for (int q = 0; q < p; ++q) out += ((cols[p] >> q) & 1U) ? '1' : '0';
  return out;
}

}  // namespace

std::vector<int> canonical_order(const Graph& g) {
  check_order(g);
  CanonicalSearch search(g);
  search.run(0, false);
  return {search.best_perm.begin(), search.best_perm.begin() + g.order()};
}

std::string canonical_form(const Graph& g) {
  check_order(g);
  CanonicalSearch search(g);
  search.run(0, false);
  return encode(g.order(), search.best_column);
}

Graph from_canonical_form(std::string_view form) {
  if (form.size() < 3 || form[2] != ':' || form[0] < '0' || form[0] > '9' || form[1] < '0' ||
      form[1] > '9') {
    throw DomainError("malformed canonical form");
  }
  const int n = (form[0] - '0') * 10 + (form[1] - '0');
  if (n > kMaxCanonicalOrder || form.size() != 3 + static_cast<std::size_t>(n * (n - 1) / 2)) {
    throw DomainError("malformed canonical form");
  }
  Graph g(n);
  std::size_t i = 3;
  for (int p = 1; p < n; ++p) {
    for (int q = 0; q < p; ++q, ++i) {
      if (form[i] == '1') {
        g.add_edge(q, p);
      } else if (form[i] != '0') {
        throw DomainError("malformed canonical form");
      }
    }
  }
  return g;
}

Graph canonical_graph(const Graph& g) {
  const auto order = canonical_order(g);
  std::vector<int> position(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = static_cast<int>(p);
  return relabel(g, position);
}

}  // namespace rdom
