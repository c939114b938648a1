#include "rdom/domination.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "rdom/error.hpp"

namespace rdom {
namespace {

using Mask = std::uint64_t;

void check_size(const Graph& g, int size, const char* what) {
  if (size != g.order()) {
    throw DomainError(std::string(what) + " has " + std::to_string(size) +
                      " entries for a graph of order " + std::to_string(g.order()));
  }
}

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap) {
    throw DomainError(std::string(what) + " supports order <= " + std::to_string(cap) +
                      ", got " + std::to_string(g.order()));
  }
}

int popcount(Mask m) { return std::popcount(m); }

/// Smallest k such that the k largest entries of vals sum to at least need;
/// -1 when even all of them fall short. Sorts vals in place.
int cover_count(std::span<int> vals, int need) {
  if (need <= 0) return 0;
  std::sort(vals.begin(), vals.end(), std::greater<>());
  int sum = 0;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (vals[k] <= 0) break;
    sum += vals[k];
    if (sum >= need) return static_cast<int>(k) + 1;
  }
  return -1;
}

constexpr std::array<Label, 4> kBranchLabels = {Label::Both, Label::One, Label::Two, Label::None};

class RainbowSearch {
 public:
  enum class Mode { Minimize, Enumerate };

  RainbowSearch(const Graph& g, std::vector<int> order, Mode mode, int bound)
      : n_(g.order()), order_(std::move(order)), mode_(mode), bound_(bound) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).bits();
    labels_.assign(static_cast<std::size_t>(n_), Label::None);
    undecided_ = VertexSet::range(n_).bits();
  }

  void run() { visit(0); }

  bool found() const { return found_; }
  int best() const { return bound_; }
  const std::vector<Label>& best_labels() const { return best_labels_; }
  std::vector<RainbowAssignment>& solutions() { return solutions_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void visit(std::size_t depth) {
    ++nodes_;
    const Mask nonempty = c1_ | c2_;
    Mask pending1 = 0;  // x with (x, 1) of the prism undominated
    Mask pending2 = 0;
    for (Mask rest = VertexSet::range(n_).bits() & ~nonempty; rest != 0; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      if ((adj_[x] & c1_) == 0) pending1 |= Mask{1} << x;
      if ((adj_[x] & c2_) == 0) pending2 |= Mask{1} << x;
    }
    for (Mask stuck = (pending1 | pending2) & none_; stuck != 0; stuck &= stuck - 1) {
      if ((adj_[std::countr_zero(stuck)] & undecided_) == 0) return;
    }
    const int need = popcount(pending1) + popcount(pending2);
    if (need == 0) {
      // Labelling every undecided vertex None completes the cheapest function below here.
      complete_with_none();
      return;
    }

    std::array<int, 2 * kMaxOrder> cov{};
    std::size_t k = 0;
    for (Mask rest = undecided_; rest != 0; rest &= rest - 1) {
      const int y = std::countr_zero(rest);
      const int self = static_cast<int>((pending1 >> y) & 1U) + static_cast<int>((pending2 >> y) & 1U);
      cov[k++] = self + popcount(adj_[y] & pending1);
      cov[k++] = self + popcount(adj_[y] & pending2);
    }
    const int extra = cover_count(std::span<int>(cov.data(), k), need);
    if (extra < 0) return;
    if (!admissible(weight_ + extra)) return;

    const int v = order_[depth];
    const Mask bit = Mask{1} << v;
    undecided_ &= ~bit;
    for (Label l : kBranchLabels) {
      labels_[v] = l;
      weight_ += label_weight(l);
      if (has_color(l, 1)) c1_ |= bit;
      if (has_color(l, 2)) c2_ |= bit;
      if (l == Label::None) none_ |= bit;
      if (admissible(weight_)) visit(depth + 1);
      c1_ &= ~bit;
      c2_ &= ~bit;
      none_ &= ~bit;
      weight_ -= label_weight(l);
    }
    labels_[v] = Label::None;
    undecided_ |= bit;
  }

  bool admissible(int lower_bound) const {
    return mode_ == Mode::Minimize ? lower_bound < bound_ : lower_bound <= bound_;
  }

  void complete_with_none() {
    if (mode_ == Mode::Minimize) {
      if (weight_ < bound_) {
        bound_ = weight_;
        best_labels_ = labels_;
        for (Mask rest = undecided_; rest != 0; rest &= rest - 1) {
          best_labels_[std::countr_zero(rest)] = Label::None;
        }
        found_ = true;
      }
    } else if (weight_ == bound_) {
      std::vector<Label> full = labels_;
      for (Mask rest = undecided_; rest != 0; rest &= rest - 1) {
        full[std::countr_zero(rest)] = Label::None;
      }
      solutions_.emplace_back(std::move(full));
    }
  }

  int n_;
  std::array<Mask, kMaxOrder> adj_{};
  std::vector<int> order_;
  Mode mode_;
  int bound_;
  Mask c1_ = 0;
  Mask c2_ = 0;
  Mask none_ = 0;
  Mask undecided_ = 0;
  int weight_ = 0;
  std::vector<Label> labels_;
  std::vector<Label> best_labels_;
  bool found_ = false;
  std::vector<RainbowAssignment> solutions_;
  std::uint64_t nodes_ = 0;
};

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

/// Size of a greedy dominating set (maximum new coverage first, ties by index).
int greedy_domination(const Graph& g) {
  VertexSet left = g.vertices();
  int picked = 0;
  while (!left.empty()) {
    int best_v = -1;
    int best_cov = -1;
    for (int v = 0; v < g.order(); ++v) {
      const int cov = (g.closed_neighbors(v) & left).size();
      if (cov > best_cov) {
        best_cov = cov;
        best_v = v;
      }
    }
    left -= g.closed_neighbors(best_v);
    ++picked;
  }
  return picked;
}

class RomanSearch {
 public:
  RomanSearch(const Graph& g, int bound) : n_(g.order()), bound_(bound) {
    for (int v = 0; v < n_; ++v) closed_[v] = g.closed_neighbors(v).bits();
  }

  void run() { visit(); }

  bool found() const { return found_; }
  int best() const { return bound_; }
  RomanAssignment witness() const {
    RomanAssignment r(n_);
    for (int v = 0; v < n_; ++v) {
      if ((best_v2_ >> v) & 1U) r.set(v, 2);
      else if (((best_dominated_ >> v) & 1U) == 0) r.set(v, 1);
    }
    return r;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void visit() {
    ++nodes_;
    const Mask all = VertexSet::range(n_).bits();
    const Mask open = all & ~dominated_ & ~ones_;
    if (open == 0) {
      if (cost_ < bound_) {
        bound_ = cost_;
        best_v2_ = v2_;
        best_dominated_ = dominated_;
        found_ = true;
      }
      return;
    }
    const Mask allowed = all & ~excluded_ & ~v2_;
    const int need = popcount(open);

    std::array<int, kMaxOrder> cov{};
    std::size_t k = 0;
    for (Mask rest = allowed; rest != 0; rest &= rest - 1) {
      const int c = popcount(closed_[std::countr_zero(rest)] & open);
      if (c > 0) cov[k++] = c;
    }
    std::sort(cov.begin(), cov.begin() + static_cast<std::ptrdiff_t>(k), std::greater<>());
    // Each vertex joining V2 costs 2 and covers at most its coverage; every
    // other open vertex costs at least 1.
    int lower = need;
    int covered = 0;
    for (std::size_t t = 0; t < k; ++t) {
      covered += cov[t];
      lower = std::min(lower, 2 * static_cast<int>(t + 1) + std::max(0, need - covered));
      if (covered >= need) break;
    }
    if (cost_ + lower >= bound_) return;

    int pick = -1;
    int fewest = kMaxOrder + 1;
    for (Mask rest = open; rest != 0; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      const int options = popcount(closed_[x] & allowed);
      if (options < fewest) {
        fewest = options;
        pick = x;
      }
    }

    std::array<int, kMaxOrder> choices{};
    std::size_t c = 0;
    for (Mask rest = closed_[pick] & allowed; rest != 0; rest &= rest - 1) {
      choices[c++] = std::countr_zero(rest);
    }
    std::stable_sort(choices.begin(), choices.begin() + static_cast<std::ptrdiff_t>(c),
                     [&](int a, int b) {
                       return popcount(closed_[a] & open) > popcount(closed_[b] & open);
                     });

    const Mask saved_excluded = excluded_;
    const Mask saved_dominated = dominated_;
    for (std::size_t i = 0; i < c; ++i) {
      const int y = choices[i];
      v2_ |= Mask{1} << y;
      dominated_ |= closed_[y];
      cost_ += 2;
      visit();
      cost_ -= 2;
      dominated_ = saved_dominated;
      v2_ &= ~(Mask{1} << y);
      excluded_ |= Mask{1} << y;
    }
    ones_ |= Mask{1} << pick;
    cost_ += 1;
    visit();
    cost_ -= 1;
    ones_ &= ~(Mask{1} << pick);
    excluded_ = saved_excluded;
  }

  int n_;
  std::array<Mask, kMaxOrder> closed_{};
  int bound_;
  Mask v2_ = 0;
  Mask ones_ = 0;
  Mask excluded_ = 0;
  Mask dominated_ = 0;
  int cost_ = 0;
  Mask best_v2_ = 0;
  Mask best_dominated_ = 0;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
};

/// Greedy Roman upper bound: add the vertex covering most undominated
/// vertices to V2 while it covers at least three, then value the rest 1.
int greedy_roman(const Graph& g) {
  VertexSet left = g.vertices();
  int cost = 0;
  while (true) {
    int best_v = -1;
    int best_cov = 2;
    for (int v = 0; v < g.order(); ++v) {
      const int cov = (g.closed_neighbors(v) & left).size();
      if (cov > best_cov) {
        best_cov = cov;
        best_v = v;
      }
    }
    if (best_v < 0) break;
    left -= g.closed_neighbors(best_v);
    cost += 2;
  }
  return cost + left.size();
}

}  // namespace

bool is_2rainbow_dominating(const Graph& g, const RainbowAssignment& f) {
  check_size(g, f.size(), "rainbow assignment");
  const VertexSet c1 = f.vertices_with_color(1);
  const VertexSet c2 = f.vertices_with_color(2);
  bool ok = true;
  f.vertices_with(Label::None).for_each([&](int v) {
    if ((g.neighbors(v) & c1).empty() || (g.neighbors(v) & c2).empty()) ok = false;
  });
  return ok;
}

bool is_roman_dominating(const Graph& g, const RomanAssignment& r) {
  check_size(g, r.size(), "Roman assignment");
  const VertexSet twos = r.vertices_with(2);
  bool ok = true;
  r.vertices_with(0).for_each([&](int v) {
    if ((g.neighbors(v) & twos).empty()) ok = false;
  });
  return ok;
}

RainbowResult gamma_r2(const Graph& g) {
  check_cap(g, kSolverMaxOrder, "gamma_r2");
  if (g.order() == 0) return {};
  const int upper = std::min(g.order(), 2 * greedy_domination(g));
  RainbowSearch search(g, degree_order(g), RainbowSearch::Mode::Minimize, upper + 1);
  search.run();
  if (!search.found()) throw InconsistencyError("gamma_r2 search found no function");
  return {search.best(), RainbowAssignment(search.best_labels()), search.nodes()};
}

RomanResult gamma_roman(const Graph& g) {
  check_cap(g, kSolverMaxOrder, "gamma_roman");
  if (g.order() == 0) return {};
  RomanSearch search(g, greedy_roman(g) + 1);
  search.run();
  if (!search.found()) throw InconsistencyError("gamma_roman search found no function");
  return {search.best(), search.witness(), search.nodes()};
}

std::vector<RainbowAssignment> all_min_2rdf(const Graph& g, int max_order) {
  check_cap(g, std::min(max_order, kSolverMaxOrder), "all_min_2rdf");
  if (g.order() == 0) return {RainbowAssignment{}};
  const int target = gamma_r2(g).value;
  RainbowSearch search(g, degree_order(g), RainbowSearch::Mode::Enumerate, target);
  search.run();
  auto out = std::move(search.solutions());
  std::sort(out.begin(), out.end());
  return out;
}

Graph prism(const Graph& g) {
  const int n = g.order();
  Graph p(2 * n);
  for (auto [u, v] : g.edges()) {
    p.add_edge(u, v);
    p.add_edge(u + n, v + n);
  }
  for (int v = 0; v < n; ++v) p.add_edge(v, v + n);
  return p;
}

int gamma_r2_product_check(const Graph& g) {
  check_cap(g, kPrismCheckMaxOrder, "gamma_r2_product_check");
  const Graph p = prism(g);
  const int n = p.order();
  if (n == 0) return 0;
  std::array<Mask, kMaxOrder> closed{};
  for (int v = 0; v < n; ++v) closed[v] = p.closed_neighbors(v).bits();
  const Mask all = VertexSet::range(n).bits();
  for (int k = 1; k <= n; ++k) {
    // Gosper's hack walks the k-subsets of {0..n-1} in increasing order.
    Mask s = (Mask{1} << k) - 1;
    while (s <= all) {
      Mask covered = 0;
      for (Mask rest = s; rest != 0; rest &= rest - 1) covered |= closed[std::countr_zero(rest)];
      if (covered == all) return k;
      const Mask low = s & (~s + 1);
      const Mask ripple = s + low;
      if (ripple == 0) break;
      s = (((ripple ^ s) >> 2) / low) | ripple;
    }
  }
  return n;
}

}  // namespace rdom
