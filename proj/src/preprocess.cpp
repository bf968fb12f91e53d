#include "dimspan/preprocess.hpp"

#include <set>

#include "dimspan/error.hpp"

namespace dimspan {

std::map<std::string, std::size_t> label_frequencies(const GraphCollection& c, LabelKind kind) {
  std::map<std::string, std::size_t> counts;
  for (const auto& g : c.graphs) {
    std::set<std::string_view> seen;
    if (kind == LabelKind::vertex) {
      for (const auto& v : g.vertices) seen.insert(v.label);
    } else {
      for (const auto& e : g.edges) seen.insert(e.label);
    }
    for (const auto label : seen) ++counts[std::string(label)];
  }
  return counts;
}

namespace {

std::map<std::string, std::size_t> frequent_only(std::map<std::string, std::size_t> counts,
                                                  std::size_t min_frequency) {
  std::erase_if(counts, [&](const auto& kv) { return kv.second < min_frequency; });
  return counts;
}

}  // namespace

PrunedCollection prune_infrequent_labels(const GraphCollection& c, std::size_t min_frequency) {
  if (min_frequency < 1) throw ParameterError("minimum frequency must be >= 1");
  PrunedCollection out;

  const auto vertex_counts =
      frequent_only(label_frequencies(c, LabelKind::vertex), min_frequency);
  out.graphs.graphs.reserve(c.size());
  for (const auto& g : c.graphs) {
    LabeledGraph kept{g.id, {}, {}};
    std::vector<std::int64_t> index(g.vertices.size(), -1);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (vertex_counts.contains(g.vertices[i].label)) {
        index[i] = static_cast<std::int64_t>(kept.vertices.size());
        kept.vertices.push_back(g.vertices[i]);
      }
    }
    for (const auto& e : g.edges) {
      if (index[e.source] < 0 || index[e.target] < 0) continue;
      kept.edges.push_back({e.id, static_cast<std::uint32_t>(index[e.source]),
                            static_cast<std::uint32_t>(index[e.target]), e.label});
    }
    out.graphs.graphs.push_back(std::move(kept));
  }

  // Edge labels are counted only on edges that survived vertex pruning.
  const auto edge_counts =
      frequent_only(label_frequencies(out.graphs, LabelKind::edge), min_frequency);
  for (auto& g : out.graphs.graphs) {
    std::erase_if(g.edges, [&](const auto& e) { return !edge_counts.contains(e.label); });
  }

  out.vertex_dict = Dictionary::from_counts(vertex_counts);
  out.edge_dict = Dictionary::from_counts(edge_counts);
  return out;
}

EmbeddingMap initial_embeddings(const EncodedGraph& g, Mode mode, Packing packing) {
  // Collect raw multiplexed sequences first; the map may store them packed.
  std::vector<std::pair<DfsCode, std::vector<std::uint32_t>>> grouped;
  std::map<std::vector<std::uint32_t>, std::size_t> slot;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto* s = g.edges.data() + i * EncodedGraph::kFields;
    DfsCode code({edge_branch(g.edges, i)});
    auto [it, inserted] = slot.try_emplace(code.flatten(), grouped.size());
    if (inserted) grouped.push_back({std::move(code), {}});
    auto& flat = grouped[it->second].second;
    const auto edge = static_cast<std::uint32_t>(i);
    if (s[0] == s[1]) {
      flat.insert(flat.end(), {s[0], edge});
      continue;
    }
    flat.insert(flat.end(), {s[0], s[1], edge});
    if (mode == Mode::undirected && s[2] == s[5]) flat.insert(flat.end(), {s[1], s[0], edge});
  }
  EmbeddingMap mu(packing);
  for (const auto& [code, flat] : grouped) mu.insert(code, flat);
  return mu;
}

PreprocessedCollection preprocess(const GraphCollection& c, std::size_t min_frequency, Mode mode,
                                  Packing packing) {
  auto pruned = prune_infrequent_labels(c, min_frequency);
  PreprocessedCollection out;
  out.mode = mode;
  out.input_size = c.size();
  for (const auto& g : pruned.graphs.graphs) {
    if (g.edges.empty()) continue;
    auto encoded = encode_graph(g, pruned.vertex_dict, pruned.edge_dict, mode);
    auto mu = initial_embeddings(encoded, mode, packing);
    out.graphs.push_back({std::move(encoded), std::move(mu)});
  }
  out.vertex_dict = std::move(pruned.vertex_dict);
  out.edge_dict = std::move(pruned.edge_dict);
  return out;
}

}  // namespace dimspan
