#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdom/graph.hpp"
#include "rdom/random.hpp"

namespace rdom {

inline constexpr int kLabeledMaxOrder = 6;
inline constexpr int kDedupMaxOrder = 7;
inline constexpr int kScanExhaustiveMaxOrder = 6;
inline constexpr int kScanSampleMaxOrder = 10;

/// Labelled graph whose edge set is `mask`, bit i standing for the i-th pair
/// (u, v), u < v, in lexicographic order.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// Each of the n(n-1)/2 pairs, in lexicographic order, becomes an edge when
/// the top bit of the next generator output is set.
Graph random_graph(int n, SplitMix64& rng);

struct EnumerationOptions {
  bool dedup = false;
  bool connected_only = false;
};

/// Without dedup: all labelled graphs on n <= 6 vertices in increasing
/// edge-mask order. With dedup (n <= 7): one canonically labelled
/// representative per isomorphism class, ascending by canonical form.
std::vector<Graph> enumerate_graphs(int n, EnumerationOptions options = {});

/// Streams the labelled graphs on n <= 6 vertices in edge-mask order.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

struct SampleSpec {
  int order = 0;
  int count = 0;
  std::uint64_t seed = 0;
};

struct ScanOptions {
  int max_order = 0;
  std::optional<SampleSpec> sample;
  int jobs = 1;
};

struct AuditSummary {
  int functions = 0;
  int failures = 0;
};

struct ScanRow {
  std::string canonical;
  int order = 0;
  bool connected = false;
  int gamma_r2 = 0;
  int gamma_roman = 0;
  int gap = 0;
  bool theorem2_free = false;
  bool theorem3_free = false;
  bool extremal = false;
  /// Definition-level class checks; computed for exhaustive rows only.
  std::optional<bool> hereditary_equal;
  std::optional<bool> in_g3;
  /// Present for extremal graphs.
  std::optional<AuditSummary> audit;
  /// Every minimum 2-rainbow function satisfies the five extremal properties
  /// (recorded for non-extremal graphs too).
  bool properties_hold = false;
  bool conversions_ok = false;
  /// merge_colors(canonical_min_2rdf) is Roman dominating with weight
  /// gamma_r2; only evaluated on {P5, C5, C4}-free graphs.
  std::optional<bool> merged_roman_ok;
  bool sampled = false;
};

struct ScanAggregate {
  int rows = 0;
  int exhaustive_rows = 0;
  int sample_rows = 0;
  int sandwich_violations = 0;
  int conversion_violations = 0;
  int theorem2_mismatches = 0;
  int theorem3_mismatches = 0;
  int merged_roman_failures = 0;
  int extremal_graphs = 0;
  int audit_failures = 0;
  int nonextremal_with_properties = 0;
  /// order -> gap -> row count
  std::map<int, std::map<int, int>> gap_histogram;

  /// True when none of the checked identities failed.
  bool clean() const;
};

struct GapReport {
  std::vector<ScanRow> rows;  ///< sorted by (order, canonical form, source)
  ScanAggregate aggregate;
};

/// Evaluates one graph; `exhaustive` selects the definition-level checks.
ScanRow evaluate_graph(const Graph& g, bool exhaustive);

/// Exhaustive pass over the isomorphism classes of orders 1..max_order
/// (max_order <= 6) plus an optional seeded random sample. Deterministic:
/// the same options give byte-identical serializations for any job count.
GapReport scan(const ScanOptions& options);

/// One JSON object per row, then a trailing {"aggregate": {...}} line.
std::string to_jsonl(const GapReport& report);
/// Header plus one line per row, then "# aggregate: {...}".
std::string to_csv(const GapReport& report);

}  // namespace rdom
