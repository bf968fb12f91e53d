#pragma once

// Shared fixtures and reference implementations for the test suites. The
// reference pieces here deliberately avoid the library's own search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "dimspan/canonical.hpp"
#include "dimspan/engine.hpp"
#include "dimspan/graph_model.hpp"

namespace dimspan::testing {

// Triangle i, ii, iii of A vertices joined by a-edges; pendant B attached by
// a b-edge to ii in G1 and to iii in G2.
inline const char* kPendantTrianglesTlf =
    "t # 1\n"
    "v 1 A\nv 2 A\nv 3 A\nv 4 B\n"
    "e 1 2 a\ne 2 3 a\ne 3 1 a\ne 2 4 b\n"
    "t # 2\n"
    "v 1 A\nv 2 A\nv 3 A\nv 4 B\n"
    "e 1 2 a\ne 2 3 a\ne 3 1 a\ne 3 4 b\n";

inline GraphCollection pendant_triangles() { return parse_tlf(std::string_view(kPendantTrianglesTlf)); }

// With A=0, B=1, a=0, b=1 (both graphs hold every label, ties break by name).
inline DfsCode c3_min() {
  return DfsCode({{0, 1, 0, Direction::out, 0, 0},
                  {1, 2, 0, Direction::out, 0, 0},
                  {2, 0, 0, Direction::out, 0, 0}});
}

inline DfsCode c4_min() {
  auto c = c3_min();
  c.push_back({2, 3, 0, Direction::out, 1, 1});
  return c;
}

struct RandomSpec {
  std::size_t min_graphs = 3, max_graphs = 12;
  std::size_t min_edges = 2, max_edges = 8;
  std::size_t min_vlabels = 2, max_vlabels = 4;
  std::size_t min_elabels = 1, max_elabels = 3;
};

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng));
}

// Random multigraph with loops and parallel edges; not necessarily connected.
inline LabeledGraph random_graph(std::mt19937_64& rng, std::uint64_t id, std::size_t edges,
                                 std::size_t vlabels, std::size_t elabels) {
  LabeledGraph g;
  g.id = id;
  const std::size_t n = uniform(rng, 1, edges + 1);
  for (std::uint32_t v = 0; v < n; ++v) {
    g.vertices.push_back({v, std::string(1, static_cast<char>('A' + uniform(rng, 0, vlabels - 1)))});
  }
  for (std::uint32_t e = 0; e < edges; ++e) {
    const auto s = static_cast<std::uint32_t>(uniform(rng, 0, n - 1));
    const auto t = static_cast<std::uint32_t>(uniform(rng, 0, n - 1));
    g.edges.push_back({e, s, t, std::string(1, static_cast<char>('a' + uniform(rng, 0, elabels - 1)))});
  }
  return g;
}

inline GraphCollection random_collection(std::mt19937_64& rng, const RandomSpec& spec = {}) {
  GraphCollection c;
  const std::size_t graphs = uniform(rng, spec.min_graphs, spec.max_graphs);
  const std::size_t vlabels = uniform(rng, spec.min_vlabels, spec.max_vlabels);
  const std::size_t elabels = uniform(rng, spec.min_elabels, spec.max_elabels);
  for (std::size_t i = 0; i < graphs; ++i) {
    c.graphs.push_back(
        random_graph(rng, i, uniform(rng, spec.min_edges, spec.max_edges), vlabels, elabels));
  }
  return c;
}

// Random connected pattern graph with integer labels.
inline PatternGraph random_pattern(std::mt19937_64& rng, std::size_t edges, std::size_t vlabels,
                                   std::size_t elabels, bool loops = true) {
  PatternGraph g;
  const std::size_t n = uniform(rng, 1, edges + 1);
  const std::size_t vertices = (!loops && n == 1) ? 2 : n;
  for (std::size_t v = 0; v < vertices; ++v) {
    g.vertex_labels.push_back(static_cast<std::uint32_t>(uniform(rng, 0, vlabels - 1)));
  }
  // Spanning tree first so the result is connected.
  for (std::uint32_t v = 1; v < vertices; ++v) {
    const auto u = static_cast<std::uint32_t>(uniform(rng, 0, v - 1));
    const bool flip = uniform(rng, 0, 1) == 1;
    g.edges.push_back({flip ? v : u, flip ? u : v,
                       static_cast<std::uint32_t>(uniform(rng, 0, elabels - 1))});
  }
  while (g.edges.size() < std::max(edges, vertices - 1)) {
    const auto s = static_cast<std::uint32_t>(uniform(rng, 0, vertices - 1));
    auto t = static_cast<std::uint32_t>(uniform(rng, 0, vertices - 1));
    if (!loops && s == t) t = (t + 1) % static_cast<std::uint32_t>(vertices);
    g.edges.push_back({s, t, static_cast<std::uint32_t>(uniform(rng, 0, elabels - 1))});
  }
  return g;
}

inline PatternGraph permuted(const PatternGraph& g, std::mt19937_64& rng) {
  std::vector<std::uint32_t> perm(g.vertex_labels.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  PatternGraph out;
  out.vertex_labels.resize(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) out.vertex_labels[perm[v]] = g.vertex_labels[v];
  for (const auto& e : g.edges) out.edges.push_back({perm[e.source], perm[e.target], e.label});
  std::shuffle(out.edges.begin(), out.edges.end(), rng);
  return out;
}

// Reference order: each extension becomes an integer tuple. Backward steps
// sort by target time then source time, forward steps by target time then
// source time descending; labels afterwards, direction omitted when
// undirected.
inline std::vector<std::int64_t> reference_key(const DfsCode& code, Mode mode) {
  std::vector<std::int64_t> key;
  for (const auto& x : code.extensions()) {
    const bool forward = x.to_time > x.from_time;
    key.push_back(forward ? 1 : 0);
    key.push_back(x.to_time);
    key.push_back(forward ? -static_cast<std::int64_t>(x.from_time) : x.from_time);
    key.push_back(x.from_label);
    key.push_back(mode == Mode::directed ? static_cast<std::int64_t>(x.direction) : 0);
    key.push_back(x.edge_label);
    key.push_back(x.to_label);
  }
  return key;
}

inline bool reference_less(const DfsCode& a, const DfsCode& b, Mode mode) {
  return reference_key(a, mode) < reference_key(b, mode);
}

// Every DFS code of `g` obtainable by rightmost extension, with no pruning at
// all: any root, any legal next edge.
inline std::vector<DfsCode> all_dfs_codes(const PatternGraph& g, Mode mode) {
  std::vector<DfsCode> out;
  const std::size_t m = g.edges.size();
  const std::size_t n = g.vertex_labels.size();
  std::vector<int> time_of(n, -1);
  std::vector<std::uint32_t> vertex_at;
  std::vector<int> parent_time;  // discovering time of each time, -1 for root
  std::vector<bool> used(m, false);
  DfsCode code;

  std::function<void()> rec = [&]() {
    if (code.edge_count() == m) {
      out.push_back(code);
      return;
    }
    const auto rightmost = static_cast<std::uint32_t>(vertex_at.size() - 1);
    std::vector<bool> on_path(vertex_at.size(), false);
    for (int t = static_cast<int>(rightmost); t >= 0; t = parent_time[t]) on_path[t] = true;
    for (std::size_t e = 0; e < m; ++e) {
      if (used[e]) continue;
      const auto& edge = g.edges[e];
      for (int side = 0; side < 2; ++side) {
        if (side == 1 && edge.source == edge.target) break;
        const std::uint32_t a = side == 0 ? edge.source : edge.target;
        const std::uint32_t b = side == 0 ? edge.target : edge.source;
        const Direction d = (side == 0 || mode == Mode::undirected) ? Direction::out : Direction::in;
        const int ta = time_of[a];
        const int tb = time_of[b];
        if (ta < 0) continue;
        if (tb >= 0) {
          if (static_cast<std::uint32_t>(ta) != rightmost || !on_path[tb]) continue;
          used[e] = true;
          code.push_back({rightmost, static_cast<std::uint32_t>(tb), g.vertex_labels[a], d,
                          edge.label, g.vertex_labels[b]});
          rec();
          code.pop_back();
          used[e] = false;
        } else {
          if (!on_path[ta]) continue;
          const auto nt = static_cast<std::uint32_t>(vertex_at.size());
          used[e] = true;
          time_of[b] = static_cast<int>(nt);
          vertex_at.push_back(b);
          parent_time.push_back(ta);
          code.push_back({static_cast<std::uint32_t>(ta), nt, g.vertex_labels[a], d, edge.label,
                          g.vertex_labels[b]});
          rec();
          code.pop_back();
          parent_time.pop_back();
          vertex_at.pop_back();
          time_of[b] = -1;
          used[e] = false;
        }
      }
    }
  };

  for (std::uint32_t root = 0; root < n; ++root) {
    time_of[root] = 0;
    vertex_at = {root};
    parent_time = {-1};
    rec();
    time_of[root] = -1;
  }
  return out;
}

inline DfsCode reference_min_code(const PatternGraph& g, Mode mode) {
  const auto codes = all_dfs_codes(g, mode);
  return *std::min_element(codes.begin(), codes.end(), [&](const auto& a, const auto& b) {
    return reference_less(a, b, mode);
  });
}

inline bool same_patterns(const std::vector<FrequentPattern>& a,
                          const std::vector<FrequentPattern>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].code == b[i].code) || a[i].frequency != b[i].frequency) return false;
  }
  return true;
}

}  // namespace dimspan::testing
