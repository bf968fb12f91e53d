#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dimspan/canonical.hpp"
#include "dimspan/dictionary.hpp"
#include "dimspan/embedding_store.hpp"
#include "dimspan/graph_model.hpp"

namespace dimspan {

/// Where false positives (non-minimal codes) are removed.
enum class VerificationPosition { pre_report, post_combine, post_filter };

/// How partitions are driven: one after another on the calling thread (the
/// reference) or concurrently with OpenMP.
enum class Execution { serial, parallel };

struct MiningConfig {
  std::optional<double> min_support;
  std::optional<std::size_t> min_frequency;
  Mode mode = Mode::directed;
  std::size_t workers = 1;
  VerificationPosition verification = VerificationPosition::post_combine;
  Packing compress{true, true, true};
  bool branch_check = true;
  std::optional<std::size_t> max_edge_count;
  Execution execution = Execution::parallel;

  /// Throws ParameterError for an invalid configuration.
  void validate() const;
  /// f_min = ceil(min_support * |𝓖|), or min_frequency when given.
  std::size_t resolve_min_frequency(std::size_t collection_size) const;
};

struct IterationMetrics {
  std::size_t edge_count = 0;               // k
  std::size_t active_graphs = 0;            // graphs entering the iteration
  std::size_t reported = 0;                 // (graph, pattern) reports
  std::size_t distinct_reported = 0;
  std::size_t shuffled_tuples = 0;          // partition-count tuples sent to reduce
  std::size_t isomorphism_resolutions = 0;  // min-DFS-code searches
  std::size_t passing_frequency = 0;        // global counts >= f_min, before post-filter checks
  std::size_t frequent = 0;
  std::size_t surviving_graphs = 0;         // after the obsolescence filter
};

struct Metrics {
  std::size_t workers = 0;
  std::size_t min_frequency = 0;
  std::size_t input_graphs = 0;
  std::size_t preprocessed_graphs = 0;
  std::vector<IterationMetrics> iterations;
  /// Simple16 ratio over the frequent patterns' flat codes; 0 if none.
  double pattern_compression_ratio = 0;
  /// Simple16 ratio over the preprocessed graphs' edge sequences; 0 if none.
  double graph_compression_ratio = 0;

  IterationMetrics totals() const;
};

struct FrequentPattern {
  DfsCode code;
  std::size_t frequency = 0;
  double support = 0;

  friend bool operator==(const FrequentPattern&, const FrequentPattern&) = default;
};

struct MiningResult {
  std::vector<FrequentPattern> frequent;  // ascending by code
  Dictionary vertex_dict;
  Dictionary edge_dict;
  Mode mode = Mode::directed;
  std::size_t min_frequency = 0;
  Metrics metrics;
};

MiningResult mine(const GraphCollection& c, const MiningConfig& cfg);

/// Round-robin split of `count` items into n index sets.
std::vector<std::vector<std::size_t>> partition(std::size_t count, std::size_t n);

using PatternCounts = std::unordered_map<PatternKey, std::size_t, PatternKeyHash>;

/// Per-partition count of reported keys.
PatternCounts combine(std::span<const PatternKey> reported);

/// Global sums over partition counts. Tuples are routed to n_reducers
/// destinations by key hash; `shuffled` receives the number of tuples moved.
PatternCounts reduce(std::span<const PatternCounts> partials, std::size_t n_reducers,
                     std::size_t* shuffled = nullptr);

/// One line per pattern: `<code>\t<frequency>\t<support>`.
void write_result(std::ostream& out, std::span<const FrequentPattern> patterns,
                  const Dictionary& vertex_dict, const Dictionary& edge_dict);
void write_result(std::ostream& out, const MiningResult& result);

/// JSON report with per-iteration rows and totals.
void write_metrics(std::ostream& out, const Metrics& metrics);

}  // namespace dimspan
