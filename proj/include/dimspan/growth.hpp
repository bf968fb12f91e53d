#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dimspan/canonical.hpp"
#include "dimspan/embedding_store.hpp"

namespace dimspan {

/// A frequent pattern as a worker holds it after broadcast reception, with
/// the per-pattern data growth needs computed once.
struct BroadcastPattern {
  DfsCode code;
  PatternKey key;
  Branch branch;
  RightmostPath path;
};

/// Builds the worker-side view of a broadcast frequent set. Throws
/// ContractViolation unless `sorted_codes` is strictly ascending.
std::vector<BroadcastPattern> receive_broadcast(std::span<const DfsCode> sorted_codes, Mode mode,
                                                bool compressed_keys);

/// Branch constraint bookkeeping: the largest branch seen so far and the
/// first sorted edge whose 1-edge code is not below it.
struct GrowthState {
  bool has_branch = false;
  Branch current_min_branch{};
  std::size_t candidate_edge_floor = 0;

  /// Advances the floor if `branch` exceeds the current minimum branch.
  void observe(const Branch& branch, std::span<const std::uint32_t> edges, Mode mode);
};

/// Pattern growth for one graph. `edges` is the graph's sorted sextuple
/// sequence, `mu` its current embedding map and `frequent` the broadcast
/// k-edge frequent set. Returns μ^{k+1} packed like `mu`.
EmbeddingMap grow(std::span<const std::uint32_t> edges, const EmbeddingMap& mu,
                  std::span<const BroadcastPattern> frequent, Mode mode, bool branch_check);

/// Convenience form taking plain codes.
EmbeddingMap grow(std::span<const std::uint32_t> edges, const EmbeddingMap& mu,
                  std::span<const DfsCode> frequent, Mode mode, bool branch_check);

}  // namespace dimspan
