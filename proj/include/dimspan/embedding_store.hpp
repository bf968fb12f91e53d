#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "dimspan/canonical.hpp"
#include "dimspan/intcompress.hpp"

namespace dimspan {

/// Identity of a pattern inside maps and counters: its flattened DFS code,
/// optionally Simple16-compressed.
using PatternKey = intcompress::PackedSeq;
using PatternKeyHash = intcompress::PackedSeqHash;

PatternKey make_key(const DfsCode& code, bool compressed);
DfsCode decode_key(const PatternKey& key);

/// Which artifacts are stored compressed.
struct Packing {
  bool patterns = false;
  bool embeddings = false;
  bool graphs = false;

  friend bool operator==(const Packing&, const Packing&) = default;
};

/// One embedding: vertex ids indexed by discovery time, edge ids indexed by
/// extension number.
struct Embedding {
  std::vector<std::uint32_t> vertices;
  std::vector<std::uint32_t> edges;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Per-graph pattern -> embeddings map. Entry i holds pattern i and a single
/// multiplexed integer sequence of all its embeddings, each occupying
/// |V(P)| + |E(P)| consecutive slots.
class EmbeddingMap {
 public:
  struct Entry {
    PatternKey pattern;
    intcompress::PackedSeq embeddings;
    std::uint32_t vertex_count = 0;
    std::uint32_t edge_count = 0;

    std::uint32_t width() const noexcept { return vertex_count + edge_count; }
    std::size_t embedding_count() const noexcept {
      return width() ? embeddings.size() / width() : 0;
    }
  };

  explicit EmbeddingMap(Packing packing = {}) : packing_(packing) {}

  /// Appends one embedding under `pattern`, creating the entry if absent.
  /// Throws ContractViolation if the arities do not match the pattern.
  void add_embedding(const DfsCode& pattern, std::span<const std::uint32_t> vertex_times,
                     std::span<const std::uint32_t> edge_exts);

  /// Adds a whole multiplexed sequence for a pattern not yet in the map.
  void insert(const DfsCode& pattern, std::span<const std::uint32_t> multiplexed);

  /// Entries whose pattern is in `frequent`, in the order of `frequent`.
  EmbeddingMap filter_to_frequent(std::span<const PatternKey> frequent) const;
  EmbeddingMap filter_to_frequent(std::span<const DfsCode> frequent) const;

  /// Embeddings of `pattern` in insertion order; empty if absent.
  std::vector<Embedding> enumerate(const DfsCode& pattern) const;

  const Entry* find(const PatternKey& key) const;
  std::vector<std::uint32_t> multiplexed(const Entry& entry) const { return entry.embeddings.unpack(); }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Packing packing() const noexcept { return packing_; }

 private:
  Entry& entry_for(const DfsCode& pattern);

  Packing packing_;
  std::vector<Entry> entries_;
  std::unordered_map<PatternKey, std::size_t, PatternKeyHash> index_;
};

/// Splits a multiplexed sequence into embeddings of the given shape.
std::vector<Embedding> demultiplex(std::span<const std::uint32_t> multiplexed,
                                   std::uint32_t vertex_count, std::uint32_t edge_count);

}  // namespace dimspan
