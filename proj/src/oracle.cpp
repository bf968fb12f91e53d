#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "dimspan/error.hpp"
#include "dimspan/genbench.hpp"

namespace dimspan {

namespace {

using Counts = std::map<std::string, std::size_t>;

void keep_frequent(Counts& counts, std::size_t f_min) {
  std::erase_if(counts, [&](const auto& kv) { return kv.second < f_min; });
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

// Every connected edge subset of `g`, canonicalized.
std::set<std::vector<std::uint32_t>> patterns_of(const PatternGraph& g, Mode mode) {
  std::set<std::vector<std::uint32_t>> found;
  const std::size_t m = g.edges.size();
  const std::size_t n = g.vertex_labels.size();
  std::vector<std::int64_t> local(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    UnionFind uf(n);
    std::fill(local.begin(), local.end(), -1);
    PatternGraph sub;
    for (std::size_t e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      const auto& edge = g.edges[e];
      uf.unite(edge.source, edge.target);
      for (const auto v : {edge.source, edge.target}) {
        if (local[v] < 0) {
          local[v] = static_cast<std::int64_t>(sub.vertex_labels.size());
          sub.vertex_labels.push_back(g.vertex_labels[v]);
        }
      }
      sub.edges.push_back({static_cast<std::uint32_t>(local[edge.source]),
                           static_cast<std::uint32_t>(local[edge.target]), edge.label});
    }
    std::set<std::uint32_t> roots;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (local[v] >= 0) roots.insert(uf.find(v));
    }
    if (roots.size() != 1) continue;
    found.insert(min_dfs_code(sub, mode).flatten());
  }
  return found;
}

}  // namespace

OracleResult oracle_mine(const GraphCollection& c, std::size_t min_frequency, Mode mode,
                         std::size_t guard) {
  if (min_frequency < 1) throw ParameterError("minimum frequency must be >= 1");
  if (guard >= 63) throw ParameterError("oracle guard must be below 63 edges");

  // Graph-count label frequencies: vertex labels over all vertices, edge
  // labels over edges whose endpoints both kept their labels.
  Counts vertex_counts;
  for (const auto& g : c.graphs) {
    std::set<std::string> seen;
    for (const auto& v : g.vertices) seen.insert(v.label);
    for (const auto& l : seen) ++vertex_counts[l];
  }
  keep_frequent(vertex_counts, min_frequency);
  auto endpoints_kept = [&](const LabeledGraph& g, const LabeledGraph::Edge& e) {
    return vertex_counts.contains(g.vertices[e.source].label) &&
           vertex_counts.contains(g.vertices[e.target].label);
  };
  Counts edge_counts;
  for (const auto& g : c.graphs) {
    std::set<std::string> seen;
    for (const auto& e : g.edges) {
      if (endpoints_kept(g, e)) seen.insert(e.label);
    }
    for (const auto& l : seen) ++edge_counts[l];
  }
  keep_frequent(edge_counts, min_frequency);

  OracleResult out;
  out.vertex_dict = Dictionary::from_counts(vertex_counts);
  out.edge_dict = Dictionary::from_counts(edge_counts);

  std::map<std::vector<std::uint32_t>, std::size_t> frequency;
  for (const auto& g : c.graphs) {
    PatternGraph pg;
    for (const auto& v : g.vertices) {
      const auto code = out.vertex_dict.find(v.label);
      pg.vertex_labels.push_back(code ? *code : 0);
    }
    for (const auto& e : g.edges) {
      if (!endpoints_kept(g, e) || !edge_counts.contains(e.label)) continue;
      pg.edges.push_back({e.source, e.target, out.edge_dict.encode(e.label)});
    }
    if (pg.edges.size() > guard) {
      throw GuardExceeded("graph " + std::to_string(g.id) + " has " +
                          std::to_string(pg.edges.size()) +
                          " edges after label filtering, above the oracle guard of " +
                          std::to_string(guard));
    }
    for (const auto& flat : patterns_of(pg, mode)) ++frequency[flat];
  }

  for (const auto& [flat, count] : frequency) {
    if (count < min_frequency) continue;
    out.frequent.push_back({DfsCode::from_flat(flat), count,
                            static_cast<double>(count) / static_cast<double>(c.size())});
  }
  std::sort(out.frequent.begin(), out.frequent.end(), [&](const auto& a, const auto& b) {
    return compare_code(a.code, b.code, mode) < 0;
  });
  return out;
}

}  // namespace dimspan
