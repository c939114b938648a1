#include "rdom/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "rdom/canonical.hpp"
#include "rdom/domination.hpp"
#include "rdom/error.hpp"
#include "rdom/hereditary.hpp"
#include "rdom/structure.hpp"
#include "rdom/transfer.hpp"

namespace rdom {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_graph(int n, SplitMix64& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin()) g.add_edge(u, v);
  return g;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > kLabeledMaxOrder) {
    throw DomainError("labelled enumeration supports 0 <= n <= " +
                      std::to_string(kLabeledMaxOrder));
  }
  const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < count; ++mask) fn(graph_from_edge_mask(n, mask));
}

namespace {

/// Canonical forms of all graphs of order n, grown one vertex at a time:
/// every graph on n vertices is some graph on n - 1 vertices plus a vertex.
std::set<std::string> isomorphism_classes(int n) {
  std::set<std::string> level = {canonical_form(Graph(0))};
  for (int k = 1; k <= n; ++k) {
    std::set<std::string> next;
    for (const auto& form : level) {
      const Graph base = from_canonical_form(form);
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
        Graph g(k);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        VertexSet{nb}.for_each([&](int u) { g.add_edge(u, k - 1); });
        next.insert(canonical_form(g));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, EnumerationOptions options) {
  std::vector<Graph> out;
  if (options.dedup) {
    if (n < 0 || n > kDedupMaxOrder) {
      throw DomainError("deduplicated enumeration supports 0 <= n <= " +
                        std::to_string(kDedupMaxOrder));
    }
    for (const auto& form : isomorphism_classes(n)) {
      Graph g = from_canonical_form(form);
      if (!options.connected_only || is_connected(g)) out.push_back(std::move(g));
    }
    return out;
  }
  for_each_labeled_graph(n, [&](const Graph& g) {
    if (!options.connected_only || is_connected(g)) out.push_back(g);
  });
  return out;
}

bool ScanAggregate::clean() const {
  return sandwich_violations == 0 && conversion_violations == 0 && theorem2_mismatches == 0 &&
         theorem3_mismatches == 0 && merged_roman_failures == 0 && audit_failures == 0;
}

ScanRow evaluate_graph(const Graph& g, bool exhaustive) {
  ScanRow row;
  row.canonical = canonical_form(g);
  row.order = g.order();
  row.connected = is_connected(g);
  const auto r2 = gamma_r2(g);
  const auto roman = gamma_roman(g);
  row.gamma_r2 = r2.value;
  row.gamma_roman = roman.value;
  row.gap = roman.value - r2.value;
  row.theorem2_free = is_free(g, equality_family());
  row.theorem3_free = is_free(g, extremal3_family());
  row.extremal = 2 * roman.value == 3 * r2.value;
  if (exhaustive) {
    row.hereditary_equal = hereditary_equality_direct(g);
    row.in_g3 = in_Gk_direct(g, 3);
  }

  const auto rainbow_from_roman = roman_to_rainbow(g, roman.witness);
  const auto roman_from_rainbow = rainbow_to_roman(g, r2.witness);
  row.conversions_ok = is_2rainbow_dominating(g, rainbow_from_roman) &&
                       rainbow_from_roman.weight() == roman.value &&
                       is_roman_dominating(g, roman_from_rainbow) &&
                       roman_from_rainbow.weight() <= 3 * r2.value / 2;

  const auto minima = all_min_2rdf(g);
  int failures = 0;
  for (const auto& f : minima) failures += audit_function(g, f).passed() ? 0 : 1;
  row.properties_hold = failures == 0;
  if (row.extremal) row.audit = AuditSummary{static_cast<int>(minima.size()), failures};

  if (row.theorem2_free) {
    const auto merged = merge_colors(canonical_min_2rdf(g));
    row.merged_roman_ok = is_roman_dominating(g, merged) && merged.weight() == r2.value;
  }
  return row;
}

namespace {

std::vector<ScanRow> evaluate_all(const std::vector<Graph>& graphs, bool exhaustive, int jobs) {
  std::vector<ScanRow> rows(graphs.size());
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < graphs.size(); i = next++) {
        rows[i] = evaluate_graph(graphs[i], exhaustive);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = graphs.size();
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace

GapReport scan(const ScanOptions& options) {
  if (options.max_order < 0 || options.max_order > kScanExhaustiveMaxOrder) {
    throw DomainError("scan max_order must lie in [0, " +
                      std::to_string(kScanExhaustiveMaxOrder) + "]");
  }
  std::vector<Graph> exhaustive;
  for (int n = 1; n <= options.max_order; ++n) {
    auto level = enumerate_graphs(n, {.dedup = true});
    exhaustive.insert(exhaustive.end(), level.begin(), level.end());
  }
  std::vector<Graph> sample;
  if (options.sample) {
    const auto& s = *options.sample;
    if (s.order < 1 || s.order > kScanSampleMaxOrder || s.count < 0) {
      throw DomainError("sample order must lie in [1, " + std::to_string(kScanSampleMaxOrder) +
                        "] and count must be non-negative");
    }
    SplitMix64 rng(s.seed);
    for (int i = 0; i < s.count; ++i) sample.push_back(random_graph(s.order, rng));
  }

  GapReport report;
  report.rows = evaluate_all(exhaustive, true, options.jobs);
  auto sampled = evaluate_all(sample, false, options.jobs);
  for (auto& r : sampled) r.sampled = true;
  report.rows.insert(report.rows.end(), sampled.begin(), sampled.end());
  std::sort(report.rows.begin(), report.rows.end(), [](const ScanRow& a, const ScanRow& b) {
    return std::tie(a.order, a.canonical, a.sampled) < std::tie(b.order, b.canonical, b.sampled);
  });

  auto& agg = report.aggregate;
  for (const auto& r : report.rows) {
    ++agg.rows;
    ++(r.sampled ? agg.sample_rows : agg.exhaustive_rows);
    if (r.gamma_r2 > r.gamma_roman || 2 * r.gamma_roman > 3 * r.gamma_r2) ++agg.sandwich_violations;
    if (!r.conversions_ok) ++agg.conversion_violations;
    if (r.hereditary_equal && *r.hereditary_equal != r.theorem2_free) ++agg.theorem2_mismatches;
    if (r.in_g3 && *r.in_g3 != r.theorem3_free) ++agg.theorem3_mismatches;
    if (r.merged_roman_ok && !*r.merged_roman_ok) ++agg.merged_roman_failures;
    if (r.extremal) {
      ++agg.extremal_graphs;
      if (r.audit->failures > 0) ++agg.audit_failures;
    } else if (r.properties_hold) {
      ++agg.nonextremal_with_properties;
    }
    ++agg.gap_histogram[r.order][r.gap];
  }
  return report;
}

namespace {

using nlohmann::ordered_json;

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json row_json(const ScanRow& r) {
  ordered_json j;
  j["canonical"] = r.canonical;
  j["order"] = r.order;
  j["connected"] = r.connected;
  j["gamma_r2"] = r.gamma_r2;
  j["gamma_R"] = r.gamma_roman;
  j["gap"] = r.gap;
  j["theorem2_free"] = r.theorem2_free;
  j["theorem3_free"] = r.theorem3_free;
  j["hereditary_equal"] = optional_json(r.hereditary_equal);
  j["in_G3"] = optional_json(r.in_g3);
  j["extremal"] = r.extremal;
  if (r.audit) {
    j["audit"] = {{"functions", r.audit->functions}, {"failures", r.audit->failures}};
  } else {
    j["audit"] = nullptr;
  }
  j["properties_hold"] = r.properties_hold;
  j["conversions_ok"] = r.conversions_ok;
  j["merged_roman_ok"] = optional_json(r.merged_roman_ok);
  j["source"] = r.sampled ? "sample" : "exhaustive";
  return j;
}

ordered_json aggregate_json(const ScanAggregate& a) {
  ordered_json j;
  j["rows"] = a.rows;
  j["exhaustive_rows"] = a.exhaustive_rows;
  j["sample_rows"] = a.sample_rows;
  j["sandwich_violations"] = a.sandwich_violations;
  j["conversion_violations"] = a.conversion_violations;
  j["theorem2_mismatches"] = a.theorem2_mismatches;
  j["theorem3_mismatches"] = a.theorem3_mismatches;
  j["merged_roman_failures"] = a.merged_roman_failures;
  j["extremal_graphs"] = a.extremal_graphs;
  j["audit_failures"] = a.audit_failures;
  j["nonextremal_with_properties"] = a.nonextremal_with_properties;
  ordered_json hist = ordered_json::object();
  for (const auto& [order, gaps] : a.gap_histogram) {
    ordered_json per = ordered_json::object();
    for (const auto& [gap, count] : gaps) per[std::to_string(gap)] = count;
    hist[std::to_string(order)] = per;
  }
  j["gap_histogram"] = hist;
  return j;
}

std::string csv_optional(const std::optional<bool>& v) {
  return v ? (*v ? "1" : "0") : "";
}

}  // namespace

std::string to_jsonl(const GapReport& report) {
  std::string out;
  for (const auto& r : report.rows) {
    out += row_json(r).dump();
    out += '\n';
  }
  ordered_json tail;
  tail["aggregate"] = aggregate_json(report.aggregate);
  out += tail.dump();
  out += '\n';
  return out;
}

std::string to_csv(const GapReport& report) {
  std::ostringstream os;
  os << "canonical,order,connected,gamma_r2,gamma_R,gap,theorem2_free,theorem3_free,"
        "hereditary_equal,in_G3,extremal,audit_functions,audit_failures,properties_hold,"
        "conversions_ok,merged_roman_ok,source\n";
  for (const auto& r : report.rows) {
    os << r.canonical << ',' << r.order << ',' << r.connected << ',' << r.gamma_r2 << ','
       << r.gamma_roman << ',' << r.gap << ',' << r.theorem2_free << ',' << r.theorem3_free
       << ',' << csv_optional(r.hereditary_equal) << ',' << csv_optional(r.in_g3) << ','
       << r.extremal << ',' << (r.audit ? std::to_string(r.audit->functions) : "") << ','
       << (r.audit ? std::to_string(r.audit->failures) : "") << ',' << r.properties_hold << ','
       << r.conversions_ok << ',' << csv_optional(r.merged_roman_ok) << ','
       << (r.sampled ? "sample" : "exhaustive") << '\n';
  }
  os << "# aggregate: " << aggregate_json(report.aggregate).dump() << '\n';
  return os.str();
}

}  // namespace rdom
