#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dimspan/canonical.hpp"
#include "dimspan/dictionary.hpp"
#include "dimspan/error.hpp"

namespace dimspan {

/// Edge references an undeclared vertex.
class ReferentialError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Directed labeled multigraph with string labels. Edge endpoints are indices
/// into `vertices`; vertex and edge ids equal their indices for parsed graphs
/// and keep the original ids in pruned copies.
struct LabeledGraph {
  struct Vertex {
    std::uint32_t id;
    std::string label;
  };
  struct Edge {
    std::uint32_t id;
    std::uint32_t source;
    std::uint32_t target;
    std::string label;
  };

  std::uint64_t id = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

struct GraphCollection {
  std::vector<LabeledGraph> graphs;

  std::size_t size() const noexcept { return graphs.size(); }
  bool empty() const noexcept { return graphs.empty(); }
};

/// A graph as a flat sequence of per-edge sextuples ⟨v_a, v_b, l_a, d, l_e, l_b⟩,
/// each in its minimum 1-edge orientation and sorted ascending by that code.
struct EncodedGraph {
  static constexpr std::size_t kFields = 6;

  std::uint64_t id = 0;
  std::vector<std::uint32_t> edges;
  /// Local vertex index -> vertex id of the source LabeledGraph.
  std::vector<std::uint32_t> vertex_ids;
  /// Local edge index (sorted position) -> edge id of the source LabeledGraph.
  std::vector<std::uint32_t> edge_ids;

  std::size_t edge_count() const noexcept { return edges.size() / kFields; }
};

/// 1-edge code of sextuple `i` of a flat encoded edge sequence.
Branch edge_branch(std::span<const std::uint32_t> edges, std::size_t i);

/// Parses the line format
///   t # <graph-id>
///   v <vertex-id> <label>
///   e <source-id> <target-id> <label>
/// Blank lines are ignored. Vertex ids inside a block are renumbered densely
/// in declaration order.
GraphCollection parse_tlf(std::istream& in);
GraphCollection parse_tlf(std::string_view text);

void write_tlf(std::ostream& out, const GraphCollection& collection);
std::string write_tlf(const GraphCollection& collection);

EncodedGraph encode_graph(const LabeledGraph& g, const Dictionary& vertex_dict,
                          const Dictionary& edge_dict, Mode mode);

/// Pattern graph view of a labeled graph under the given dictionaries.
PatternGraph to_pattern_graph(const LabeledGraph& g, const Dictionary& vertex_dict,
                              const Dictionary& edge_dict);

}  // namespace dimspan
