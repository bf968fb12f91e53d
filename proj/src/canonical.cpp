#include "dimspan/canonical.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

#include "dimspan/error.hpp"

namespace dimspan {

DfsCode DfsCode::from_flat(std::span<const std::uint32_t> flat) {
  if (flat.size() % kFieldsPerExtension != 0) {
    throw ContractViolation("flat DFS code length " + std::to_string(flat.size()) +
                            " is not a multiple of 6");
  }
  std::vector<Extension> xs;
  xs.reserve(flat.size() / kFieldsPerExtension);
  for (std::size_t i = 0; i < flat.size(); i += kFieldsPerExtension) {
    if (flat[i + 3] > 1) throw ContractViolation("direction field must be 0 or 1");
    xs.push_back({flat[i], flat[i + 1], flat[i + 2], static_cast<Direction>(flat[i + 3]),
                  flat[i + 4], flat[i + 5]});
  }
  return DfsCode(std::move(xs));
}

std::vector<std::uint32_t> DfsCode::flatten() const {
  std::vector<std::uint32_t> flat;
  flat.reserve(extensions_.size() * kFieldsPerExtension);
  for (const auto& x : extensions_) {
    flat.insert(flat.end(), {x.from_time, x.to_time, x.from_label,
                             static_cast<std::uint32_t>(x.direction), x.edge_label, x.to_label});
  }
  return flat;
}

std::size_t DfsCode::vertex_count() const noexcept {
  if (extensions_.empty()) return 0;
  std::uint32_t max_time = 0;
  for (const auto& x : extensions_) max_time = std::max({max_time, x.from_time, x.to_time});
  return max_time + 1;
}

DfsCode DfsCode::parent() const {
  if (extensions_.empty()) throw ContractViolation("empty code has no parent");
  return DfsCode(std::vector<Extension>(extensions_.begin(), extensions_.end() - 1));
}

int RightmostPath::position_of(std::uint32_t time) const {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] == time) return static_cast<int>(i);
  }
  return -1;
}

std::strong_ordering compare_extension(const Extension& x, const Extension& y, Mode mode) {
  auto structure = [](const Extension& e) {
    // (class, primary, secondary): backward = 0 keyed by (from, to);
    // forward = 1 keyed by (to, -from), encoded as (to, ~from).
    if (e.is_forward()) return std::tuple{1u, e.to_time, ~e.from_time};
    return std::tuple{0u, e.from_time, e.to_time};
  };
  if (auto c = structure(x) <=> structure(y); c != 0) return c;
  if (auto c = x.from_label <=> y.from_label; c != 0) return c;
  if (mode == Mode::directed) {
    if (auto c = static_cast<std::uint32_t>(x.direction) <=> static_cast<std::uint32_t>(y.direction);
        c != 0) {
      return c;
    }
  }
  if (auto c = x.edge_label <=> y.edge_label; c != 0) return c;
  return x.to_label <=> y.to_label;
}

std::strong_ordering compare_code(const DfsCode& a, const DfsCode& b, Mode mode) {
  const std::size_t n = std::min(a.edge_count(), b.edge_count());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare_extension(a[i], b[i], mode); c != 0) return c;
  }
  return a.edge_count() <=> b.edge_count();
}

Branch edge_min_code(std::uint32_t source_label, std::uint32_t target_label,
                     std::uint32_t edge_label, bool is_loop, Mode mode) {
  if (is_loop) return {0, 0, source_label, Direction::out, edge_label, source_label};
  const Extension along{0, 1, source_label, Direction::out, edge_label, target_label};
  const Extension against{0, 1, target_label,
                          mode == Mode::directed ? Direction::in : Direction::out, edge_label,
                          source_label};
  return compare_extension(against, along, mode) < 0 ? against : along;
}

Branch branch_of(const DfsCode& code) {
  if (code.empty()) throw ContractViolation("branch of an empty code");
  Branch b = code[0];
  b.from_time = 0;
  b.to_time = std::min<std::uint32_t>(1, b.to_time);
  return b;
}

RightmostPath rightmost_path(const DfsCode& code) {
  if (code.empty()) throw ContractViolation("rightmost path of an empty code");
  const std::size_t n = code.vertex_count();
  // discovered_by[t] = index of the forward extension that discovered time t.
  std::vector<int> discovered_by(n, -1);
  std::vector<std::uint32_t> parent(n, 0);
  for (std::size_t i = 0; i < code.edge_count(); ++i) {
    const auto& x = code[i];
    if (x.is_forward() && discovered_by[x.to_time] < 0) {
      discovered_by[x.to_time] = static_cast<int>(i);
      parent[x.to_time] = x.from_time;
    }
  }
  RightmostPath path;
  std::uint32_t t = static_cast<std::uint32_t>(n - 1);
  while (true) {
    path.times.push_back(t);
    path.discovered_by.push_back(discovered_by[t]);
    if (discovered_by[t] < 0) break;
    t = parent[t];
  }
  std::reverse(path.times.begin(), path.times.end());
  std::reverse(path.discovered_by.begin(), path.discovered_by.end());
  return path;
}

PatternGraph graph_of(const DfsCode& code, Mode mode) {
  PatternGraph g;
  g.vertex_labels.assign(code.vertex_count(), 0);
  for (const auto& x : code.extensions()) {
    g.vertex_labels[x.from_time] = x.from_label;
    g.vertex_labels[x.to_time] = x.to_label;
    if (mode == Mode::directed && x.direction == Direction::in) {
      g.edges.push_back({x.to_time, x.from_time, x.edge_label});
    } else {
      g.edges.push_back({x.from_time, x.to_time, x.edge_label});
    }
  }
  return g;
}

namespace {

struct Incidence {
  std::uint32_t edge;
  std::uint32_t other;
  Direction direction;  // relative to the vertex owning this entry
};

std::vector<std::vector<Incidence>> incidence_lists(const PatternGraph& g, Mode mode) {
  std::vector<std::vector<Incidence>> adj(g.vertex_labels.size());
  for (std::uint32_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    if (edge.source >= adj.size() || edge.target >= adj.size()) {
      throw ContractViolation("pattern edge references an unknown vertex");
    }
    adj[edge.source].push_back({e, edge.target, Direction::out});
    if (edge.source != edge.target) {
      adj[edge.target].push_back(
          {e, edge.source, mode == Mode::directed ? Direction::in : Direction::out});
    }
  }
  return adj;
}

void require_connected(const PatternGraph& g, const std::vector<std::vector<Incidence>>& adj) {
  if (g.edges.empty()) throw ContractViolation("pattern has no edges");
  std::vector<char> seen(g.vertex_labels.size(), 0);
  std::vector<std::uint32_t> stack{g.edges[0].source};
  seen[g.edges[0].source] = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& inc : adj[v]) {
      if (!seen[inc.other]) {
        seen[inc.other] = 1;
        stack.push_back(inc.other);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw ContractViolation("pattern graph is not connected");
  }
}

// One partial DFS traversal consistent with the best code prefix so far.
struct Traversal {
  std::vector<int> time_of;                 // vertex -> discovery time or -1
  std::vector<std::uint32_t> vertex_at;     // time -> vertex
  std::vector<char> used;                   // edge -> traversed
  std::vector<std::uint32_t> path;          // rightmost path as times
};

struct Candidate {
  Extension ext;
  std::uint32_t edge;
  std::uint32_t vertex;  // newly discovered vertex for forward steps
};

// Breadth-wise search over all traversals sharing the lexicographically
// smallest prefix. Keeping every tied traversal makes the result exact;
// traversals with the same used-edge set and the same rightmost path have the
// same future and are merged.
class MinCodeSearch {
 public:
  MinCodeSearch(const PatternGraph& g, Mode mode)
      : g_(g), mode_(mode), adj_(incidence_lists(g, mode)) {
    require_connected(g_, adj_);
  }

  // Runs the search; with `target`, stops early and returns nullopt as soon
  // as a smaller extension than target's is found.
  std::optional<DfsCode> run(const DfsCode* target) {
    DfsCode code;
    std::vector<Traversal> states = initial_states();
    const std::size_t total = g_.edges.size();
    std::vector<std::pair<std::size_t, Candidate>> ties;
    while (true) {
      // Smallest next extension over all states.
      std::optional<Extension> best;
      ties.clear();
      for (std::size_t s = 0; s < states.size(); ++s) {
        for (const Candidate& c : candidates(states[s], code.vertex_count())) {
          if (!best) {
            best = c.ext;
            ties.push_back({s, c});
            continue;
          }
          const auto cmp = compare_extension(c.ext, *best, mode_);
          if (cmp < 0) {
            best = c.ext;
            ties.clear();
          }
          if (cmp <= 0) ties.push_back({s, c});
        }
      }
      if (!best) break;
      if (target) {
        if (code.edge_count() >= target->edge_count()) return std::nullopt;
        if (compare_extension(*best, (*target)[code.edge_count()], mode_) != 0) {
          return std::nullopt;
        }
      }
      code.push_back(*best);
      std::vector<Traversal> next;
      std::set<std::vector<std::uint32_t>> seen;
      for (const auto& [s, c] : ties) {
        Traversal t = advance(states[s], c);
        if (seen.insert(signature(t)).second) next.push_back(std::move(t));
      }
      states = std::move(next);
      if (code.edge_count() == total) break;
    }
    if (code.edge_count() != total) {
      throw ContractViolation("DFS search did not cover every pattern edge");
    }
    if (target && code.edge_count() != target->edge_count()) return std::nullopt;
    return code;
  }

 private:
  // One root-only traversal per vertex; the first extension is produced by
  // candidates() like every later one.
  std::vector<Traversal> initial_states() const {
    std::vector<Traversal> states;
    for (std::uint32_t root = 0; root < g_.vertex_labels.size(); ++root) {
      Traversal t;
      t.time_of.assign(g_.vertex_labels.size(), -1);
      t.used.assign(g_.edges.size(), 0);
      t.time_of[root] = 0;
      t.vertex_at.push_back(root);
      t.path.push_back(0);
      states.push_back(std::move(t));
    }
    return states;
  }

  std::vector<Candidate> candidates(const Traversal& t, std::size_t vertex_count) const {
    std::vector<Candidate> out;
    const std::uint32_t rightmost = t.path.back();
    const std::uint32_t rv = t.vertex_at[rightmost];
    // Before the first extension vertex_count is 0 but the root already holds
    // time 0, so the next new vertex gets time 1.
    const auto next_time = static_cast<std::uint32_t>(std::max<std::size_t>(vertex_count, 1));
    for (const auto& inc : adj_[rv]) {
      if (t.used[inc.edge]) continue;
      const int ot = t.time_of[inc.other];
      if (ot < 0) continue;
      const auto other_time = static_cast<std::uint32_t>(ot);
      if (std::find(t.path.begin(), t.path.end(), other_time) == t.path.end()) continue;
      out.push_back({{rightmost, other_time, g_.vertex_labels[rv], inc.direction,
                      g_.edges[inc.edge].label, g_.vertex_labels[inc.other]},
                     inc.edge,
                     inc.other});
    }
    for (const std::uint32_t time : t.path) {
      const std::uint32_t v = t.vertex_at[time];
      for (const auto& inc : adj_[v]) {
        if (t.used[inc.edge] || t.time_of[inc.other] >= 0) continue;
        out.push_back({{time, next_time, g_.vertex_labels[v], inc.direction,
                        g_.edges[inc.edge].label, g_.vertex_labels[inc.other]},
                       inc.edge,
                       inc.other});
      }
    }
    return out;
  }

  static Traversal advance(const Traversal& from, const Candidate& c) {
    Traversal t = from;
    t.used[c.edge] = 1;
    if (c.ext.is_forward()) {
      t.time_of[c.vertex] = static_cast<int>(c.ext.to_time);
      t.vertex_at.push_back(c.vertex);
      while (t.path.back() != c.ext.from_time) t.path.pop_back();
      t.path.push_back(c.ext.to_time);
    }
    return t;
  }

  static std::vector<std::uint32_t> signature(const Traversal& t) {
    std::vector<std::uint32_t> key;
    key.reserve(t.used.size() + 2 * t.path.size());
    for (const char u : t.used) key.push_back(static_cast<std::uint32_t>(u));
    for (const std::uint32_t time : t.path) {
      key.push_back(time);
      key.push_back(t.vertex_at[time]);
    }
    return key;
  }

  const PatternGraph& g_;
  Mode mode_;
  std::vector<std::vector<Incidence>> adj_;
};

}  // namespace

DfsCode min_dfs_code(const PatternGraph& g, Mode mode) {
  return *MinCodeSearch(g, mode).run(nullptr);
}

bool is_minimal(const DfsCode& code, Mode mode) {
  if (code.empty()) return false;
  const PatternGraph g = graph_of(code, mode);
  return MinCodeSearch(g, mode).run(&code).has_value();
}

std::string format_code(const DfsCode& code, std::span<const std::string> vertex_labels,
                        std::span<const std::string> edge_labels) {
  auto name = [](std::span<const std::string> names, std::uint32_t id) {
    return id < names.size() ? names[id] : std::to_string(id);
  };
  std::string out;
  for (std::size_t i = 0; i < code.edge_count(); ++i) {
    const auto& x = code[i];
    if (i) out += ';';
    out += std::to_string(x.from_time);
    out += ',';
    out += std::to_string(x.to_time);
    out += ',';
    out += name(vertex_labels, x.from_label);
    out += x.direction == Direction::out ? ",out," : ",in,";
    out += name(edge_labels, x.edge_label);
    out += ',';
    out += name(vertex_labels, x.to_label);
  }
  return out;
}

}  // namespace dimspan
