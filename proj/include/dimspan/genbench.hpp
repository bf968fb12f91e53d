#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dimspan/dictionary.hpp"
#include "dimspan/engine.hpp"
#include "dimspan/graph_model.hpp"

namespace dimspan {

struct GeneratorConfig {
  std::size_t graph_count = 10;
  std::uint64_t seed = 0;
};

/// Synthetic directed multigraphs. Graph i has size class i mod 10, ranging
/// from |V|=10, |E|=14 to |V|=91, |E|=140. Every graph contains a fixed
/// family over labels V0/V1 and E0/E1 (a directed 3-cycle, a mirrored pair of
/// out-edges, a loop, parallel edges both ways). Size class c adds tiers
/// 1..c, tier t being a V(t+1) vertex hung off the family by an E2 edge and
/// carrying an E2 loop, so tier t occurs in (10 - t) of every 10 graphs. All
/// remaining edges carry a per-graph filler label E(3 + i mod F).
GraphCollection generate(const GeneratorConfig& cfg);

struct OracleResult {
  std::vector<FrequentPattern> frequent;  // ascending by code
  Dictionary vertex_dict;
  Dictionary edge_dict;
};

/// Brute-force miner: per graph, every connected edge subset is
/// canonicalized and counted once. Elements with infrequent labels are
/// dropped first; any graph still above `guard` edges is refused with
/// GuardExceeded. Label integers are assigned exactly as the engine does, so
/// both produce the same codes for the same input.
OracleResult oracle_mine(const GraphCollection& c, std::size_t min_frequency, Mode mode,
                         std::size_t guard = 10);

}  // namespace dimspan
