#include "dimspan/engine.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dimspan/error.hpp"
#include "dimspan/growth.hpp"
#include "dimspan/intcompress.hpp"
#include "dimspan/preprocess.hpp"

namespace dimspan {

void MiningConfig::validate() const {
  if (min_support.has_value() == min_frequency.has_value()) {
    throw ParameterError("exactly one of min_support and min_frequency must be set");
  }
  if (min_support && !(*min_support > 0.0 && *min_support <= 1.0)) {
    throw ParameterError("min_support must lie in (0, 1]");
  }
  if (min_frequency && *min_frequency < 1) throw ParameterError("min_frequency must be >= 1");
  if (workers < 1) throw ParameterError("workers must be >= 1");
  if (max_edge_count && *max_edge_count < 1) throw ParameterError("max_edge_count must be >= 1");
}

std::size_t MiningConfig::resolve_min_frequency(std::size_t collection_size) const {
  validate();
  if (min_frequency) return *min_frequency;
  // The epsilon keeps products like 0.1 * 1000 from rounding up past 100.
  const double raw = *min_support * static_cast<double>(collection_size);
  const auto f = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return std::max<std::size_t>(f, 1);
}

IterationMetrics Metrics::totals() const {
  IterationMetrics t;
  for (const auto& it : iterations) {
    t.edge_count = std::max(t.edge_count, it.edge_count);
    t.active_graphs += it.active_graphs;
    t.reported += it.reported;
    t.distinct_reported += it.distinct_reported;
    t.shuffled_tuples += it.shuffled_tuples;
    t.isomorphism_resolutions += it.isomorphism_resolutions;
    t.passing_frequency += it.passing_frequency;
    t.frequent += it.frequent;
    t.surviving_graphs += it.surviving_graphs;
  }
  return t;
}

std::vector<std::vector<std::size_t>> partition(std::size_t count, std::size_t n) {
  if (n < 1) throw ParameterError("partition count must be >= 1");
  std::vector<std::vector<std::size_t>> parts(n);
  for (std::size_t i = 0; i < count; ++i) parts[i % n].push_back(i);
  return parts;
}

PatternCounts combine(std::span<const PatternKey> reported) {
  PatternCounts counts;
  for (const auto& key : reported) ++counts[key];
  return counts;
}

PatternCounts reduce(std::span<const PatternCounts> partials, std::size_t n_reducers,
                     std::size_t* shuffled) {
  if (n_reducers < 1) throw ParameterError("reducer count must be >= 1");
  // Shuffle: route every partition tuple to the reducer owning its key.
  std::vector<std::vector<std::pair<const PatternKey*, std::size_t>>> inbox(n_reducers);
  std::size_t moved = 0;
  for (const auto& part : partials) {
    for (const auto& [key, count] : part) {
      inbox[key.hash() % n_reducers].push_back({&key, count});
      ++moved;
    }
  }
  if (shuffled) *shuffled = moved;
  PatternCounts global;
  for (const auto& box : inbox) {
    PatternCounts local;
    for (const auto& [key, count] : box) local[*key] += count;
    // Reducers own disjoint key ranges, so the union is a plain merge.
    global.merge(local);
  }
  return global;
}

namespace {

struct GraphState {
  std::uint64_t id = 0;
  intcompress::PackedSeq edges;
  EmbeddingMap mu;
};

struct Partition {
  std::vector<GraphState> graphs;
  PatternCounts counts;
  std::size_t reported = 0;
  std::size_t resolutions = 0;
};

bool verify(const PatternKey& key, Mode mode) { return is_minimal(decode_key(key), mode); }

template <class Fn>
void for_each_partition(std::vector<Partition>& parts, Execution execution, Fn&& fn) {
  if (execution == Execution::serial || parts.size() <= 1) {
    for (auto& p : parts) fn(p);
    return;
  }
  std::vector<std::exception_ptr> errors(parts.size());
  const auto n = static_cast<long>(parts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      fn(parts[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Report (line 4) and combine (line 5) for one partition, with the two
// early verification positions applied in place.
void report_and_combine(Partition& part, VerificationPosition position, Mode mode) {
  part.counts.clear();
  part.reported = 0;
  part.resolutions = 0;
  for (auto& g : part.graphs) {
    if (position == VerificationPosition::pre_report) {
      std::vector<PatternKey> minimal;
      for (const auto& entry : g.mu.entries()) {
        ++part.resolutions;
        if (verify(entry.pattern, mode)) minimal.push_back(entry.pattern);
      }
      if (minimal.size() != g.mu.size()) g.mu = g.mu.filter_to_frequent(minimal);
    }
    for (const auto& entry : g.mu.entries()) {
      ++part.counts[entry.pattern];
      ++part.reported;
    }
  }
}

void verify_partition_counts(Partition& part, Mode mode) {
  for (auto it = part.counts.begin(); it != part.counts.end();) {
    ++part.resolutions;
    it = verify(it->first, mode) ? std::next(it) : part.counts.erase(it);
  }
}

void grow_partition(Partition& part, std::span<const DfsCode> broadcast, const MiningConfig& cfg) {
  // Broadcast reception: rightmost paths and keys are derived once per
  // worker and pattern.
  const auto received = receive_broadcast(broadcast, cfg.mode, cfg.compress.patterns);
  std::vector<PatternKey> keys;
  keys.reserve(received.size());
  for (const auto& p : received) keys.push_back(p.key);

  for (auto& g : part.graphs) {
    const EmbeddingMap supported = g.mu.filter_to_frequent(std::span<const PatternKey>(keys));
    const auto edges = g.edges.unpack();
    g.mu = grow(edges, supported, std::span<const BroadcastPattern>(received), cfg.mode,
                cfg.branch_check);
  }
  // Obsolescence filter (line 10).
  std::erase_if(part.graphs, [](const GraphState& g) { return g.mu.empty(); });
}

}  // namespace

MiningResult mine(const GraphCollection& c, const MiningConfig& cfg) {
  cfg.validate();
  const std::size_t f_min = cfg.resolve_min_frequency(c.size());
  PreprocessedCollection pre = preprocess(c, f_min, cfg.mode, cfg.compress);

  MiningResult result;
  result.mode = cfg.mode;
  result.min_frequency = f_min;
  result.metrics.workers = cfg.workers;
  result.metrics.min_frequency = f_min;
  result.metrics.input_graphs = c.size();
  result.metrics.preprocessed_graphs = pre.graphs.size();

  std::vector<intcompress::CompressedBlock> graph_blocks;
  std::vector<Partition> parts(cfg.workers);
  const auto assignment = partition(pre.graphs.size(), cfg.workers);
  for (std::size_t w = 0; w < cfg.workers; ++w) {
    for (const std::size_t i : assignment[w]) {
      auto& pg = pre.graphs[i];
      graph_blocks.push_back(intcompress::compress(pg.graph.edges));
      parts[w].graphs.push_back(
          {pg.graph.id, intcompress::PackedSeq::pack(pg.graph.edges, cfg.compress.graphs),
           std::move(pg.initial)});
    }
  }
  if (!graph_blocks.empty()) {
    try {
      result.metrics.graph_compression_ratio = intcompress::compression_ratio(graph_blocks);
    } catch (const ParameterError&) {
    }
  }

  for (std::size_t k = 1;; ++k) {
    IterationMetrics it;
    it.edge_count = k;
    for (const auto& p : parts) it.active_graphs += p.graphs.size();
    try {
      // Lines 4-5: report and combine.
      for_each_partition(parts, cfg.execution, [&](Partition& p) {
        report_and_combine(p, cfg.verification, cfg.mode);
      });
      std::unordered_set<PatternKey, PatternKeyHash> distinct;
      for (const auto& p : parts) {
        it.reported += p.reported;
        for (const auto& kv : p.counts) distinct.insert(kv.first);
      }
      it.distinct_reported = distinct.size();
      if (cfg.verification == VerificationPosition::post_combine) {
        for_each_partition(parts, cfg.execution,
                           [&](Partition& p) { verify_partition_counts(p, cfg.mode); });
      }
      for (const auto& p : parts) it.isomorphism_resolutions += p.resolutions;

      // Line 6: shuffle and reduce.
      std::vector<PatternCounts> partials;
      partials.reserve(parts.size());
      for (auto& p : parts) partials.push_back(std::move(p.counts));
      const PatternCounts global = reduce(partials, cfg.workers, &it.shuffled_tuples);

      // Line 7: frequency filter.
      std::vector<FrequentPattern> level;
      for (const auto& [key, count] : global) {
        if (count < f_min) continue;
        ++it.passing_frequency;
        if (cfg.verification == VerificationPosition::post_filter) {
          ++it.isomorphism_resolutions;
          if (!verify(key, cfg.mode)) continue;
        }
        level.push_back({decode_key(key), count,
                         static_cast<double>(count) / static_cast<double>(c.size())});
      }
      std::sort(level.begin(), level.end(), [&](const auto& a, const auto& b) {
        return compare_code(a.code, b.code, cfg.mode) < 0;
      });
      it.frequent = level.size();

      // Line 11: union into the result.
      std::vector<DfsCode> broadcast;
      broadcast.reserve(level.size());
      for (auto& fp : level) {
        broadcast.push_back(fp.code);
        result.frequent.push_back(std::move(fp));
      }

      const bool last = broadcast.empty() || (cfg.max_edge_count && k >= *cfg.max_edge_count);
      if (!last) {
        // Lines 8-10: broadcast, growth, obsolescence filter.
        for_each_partition(parts, cfg.execution, [&](Partition& p) {
          grow_partition(p, std::span<const DfsCode>(broadcast), cfg);
        });
      }
      for (const auto& p : parts) it.surviving_graphs += p.graphs.size();
      result.metrics.iterations.push_back(it);
      if (last) break;
    } catch (const ContractViolation& e) {
      throw ContractViolation("iteration k=" + std::to_string(k) + ": " + e.what());
    }
  }

  // Levels are appended in order of k, and a shorter code can sort after a
  // longer one, so the union needs a final sort.
  std::sort(result.frequent.begin(), result.frequent.end(), [&](const auto& a, const auto& b) {
    return compare_code(a.code, b.code, cfg.mode) < 0;
  });
  if (!result.frequent.empty()) {
    std::vector<intcompress::CompressedBlock> blocks;
    blocks.reserve(result.frequent.size());
    for (const auto& fp : result.frequent) blocks.push_back(intcompress::compress(fp.code.flatten()));
    result.metrics.pattern_compression_ratio = intcompress::compression_ratio(blocks);
  }
  result.vertex_dict = std::move(pre.vertex_dict);
  result.edge_dict = std::move(pre.edge_dict);
  return result;
}

void write_result(std::ostream& out, std::span<const FrequentPattern> patterns,
                  const Dictionary& vertex_dict, const Dictionary& edge_dict) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::fixed << std::setprecision(6);
  for (const auto& fp : patterns) {
    out << format_code(fp.code, vertex_dict.labels(), edge_dict.labels()) << '\t' << fp.frequency
        << '\t' << fp.support << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

void write_result(std::ostream& out, const MiningResult& result) {
  write_result(out, result.frequent, result.vertex_dict, result.edge_dict);
}

void write_metrics(std::ostream& out, const Metrics& metrics) {
  auto row = [](const IterationMetrics& it) {
    return nlohmann::ordered_json{
        {"k", it.edge_count},
        {"active_graphs", it.active_graphs},
        {"patterns_reported", it.reported},
        {"distinct_patterns_reported", it.distinct_reported},
        {"shuffled_tuples", it.shuffled_tuples},
        {"isomorphism_resolutions", it.isomorphism_resolutions},
        {"passing_frequency", it.passing_frequency},
        {"frequent_patterns", it.frequent},
        {"surviving_graphs", it.surviving_graphs},
    };
  };
  nlohmann::ordered_json doc;
  doc["workers"] = metrics.workers;
  doc["min_frequency"] = metrics.min_frequency;
  doc["input_graphs"] = metrics.input_graphs;
  doc["preprocessed_graphs"] = metrics.preprocessed_graphs;
  doc["pattern_compression_ratio"] = metrics.pattern_compression_ratio;
  doc["graph_compression_ratio"] = metrics.graph_compression_ratio;
  doc["iterations"] = nlohmann::ordered_json::array();
  for (const auto& it : metrics.iterations) doc["iterations"].push_back(row(it));
  auto totals = row(metrics.totals());
  totals.erase("k");
  totals["iterations"] = metrics.iterations.size();
  doc["totals"] = totals;
  out << doc.dump(2) << '\n';
}

}  // namespace dimspan
