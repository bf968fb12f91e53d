#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dimspan/dictionary.hpp"
#include "dimspan/embedding_store.hpp"
#include "dimspan/graph_model.hpp"

namespace dimspan {

enum class LabelKind { vertex, edge };

/// label -> number of graphs holding at least one element with that label.
std::map<std::string, std::size_t> label_frequencies(const GraphCollection& c, LabelKind kind);

/// Result of label-frequency pruning: graphs with infrequent-label vertices
/// (and their incident edges) removed, then infrequent-label edges removed,
/// plus the dictionaries over the surviving labels.
struct PrunedCollection {
  GraphCollection graphs;
  Dictionary vertex_dict;
  Dictionary edge_dict;
};

PrunedCollection prune_infrequent_labels(const GraphCollection& c, std::size_t min_frequency);

struct PreprocessedGraph {
  EncodedGraph graph;
  EmbeddingMap initial;  // μ¹
};

struct PreprocessedCollection {
  std::vector<PreprocessedGraph> graphs;
  Dictionary vertex_dict;
  Dictionary edge_dict;
  Mode mode = Mode::directed;
  /// |𝓖| of the raw input, including graphs dropped as empty.
  std::size_t input_size = 0;
};

/// μ¹ of an encoded graph: one embedding per edge under its 1-edge code, and
/// a second, reversed one for undirected non-loop edges with equal endpoint
/// labels.
EmbeddingMap initial_embeddings(const EncodedGraph& g, Mode mode, Packing packing = {});

/// Label pruning, dictionary coding, edge sorting and μ¹ construction. Graphs
/// left without edges are dropped. Throws ParameterError if min_frequency < 1.
PreprocessedCollection preprocess(const GraphCollection& c, std::size_t min_frequency, Mode mode,
                                  Packing packing = {});

}  // namespace dimspan
