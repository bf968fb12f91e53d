#include "dimspan/growth.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "dimspan/error.hpp"
#include "dimspan/graph_model.hpp"

namespace dimspan {

std::vector<BroadcastPattern> receive_broadcast(std::span<const DfsCode> sorted_codes, Mode mode,
                                                bool compressed_keys) {
  std::vector<BroadcastPattern> out;
  out.reserve(sorted_codes.size());
  for (std::size_t i = 0; i < sorted_codes.size(); ++i) {
    if (i > 0 && compare_code(sorted_codes[i - 1], sorted_codes[i], mode) >= 0) {
      throw ContractViolation("frequent patterns are not sorted ascending at index " +
                              std::to_string(i));
    }
    const auto& code = sorted_codes[i];
    out.push_back({code, make_key(code, compressed_keys), branch_of(code), rightmost_path(code)});
  }
  return out;
}

void GrowthState::observe(const Branch& branch, std::span<const std::uint32_t> edges, Mode mode) {
  if (has_branch && compare_extension(branch, current_min_branch, mode) <= 0) return;
  has_branch = true;
  current_min_branch = branch;
  const std::size_t m = edges.size() / EncodedGraph::kFields;
  while (candidate_edge_floor < m &&
         compare_extension(edge_branch(edges, candidate_edge_floor), current_min_branch, mode) < 0) {
    ++candidate_edge_floor;
  }
}

namespace {

Direction reverse(Direction d, Mode mode) {
  return mode == Mode::directed ? flip(d) : Direction::out;
}

// Children of one parent are keyed by the appended extension.
struct ChildKey {
  std::size_t parent;
  Extension ext;
  friend bool operator==(const ChildKey&, const ChildKey&) = default;
};

struct ChildKeyHash {
  std::size_t operator()(const ChildKey& k) const noexcept {
    std::size_t h = k.parent * 0x9e3779b97f4a7c15ull;
    for (const std::uint32_t f : {k.ext.from_time, k.ext.to_time, k.ext.from_label,
                                  static_cast<std::uint32_t>(k.ext.direction), k.ext.edge_label,
                                  k.ext.to_label}) {
      h ^= f + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// A backward step r -> t is redundant if, back when t's rightmost-path child
// was discovered, going from t over the same edge would have given a smaller
// forward extension; such codes cannot be minimal.
bool backward_is_redundant(const Extension& back, const BroadcastPattern& parent, Mode mode) {
  if (back.is_loop()) return false;
  const int pos = parent.path.position_of(back.to_time);
  const auto& forward = parent.code[static_cast<std::size_t>(parent.path.discovered_by[pos + 1])];
  const Extension alternative{forward.from_time, forward.to_time, forward.from_label,
                              reverse(back.direction, mode), back.edge_label, back.from_label};
  return compare_extension(alternative, forward, mode) < 0;
}

}  // namespace

EmbeddingMap grow(std::span<const std::uint32_t> edges, const EmbeddingMap& mu,
                  std::span<const BroadcastPattern> frequent, Mode mode, bool branch_check) {
  const std::size_t m = edges.size() / EncodedGraph::kFields;
  GrowthState state;

  std::vector<std::pair<DfsCode, std::vector<std::uint32_t>>> children;
  std::unordered_map<ChildKey, std::size_t, ChildKeyHash> child_index;

  for (std::size_t p = 0; p < frequent.size(); ++p) {
    const BroadcastPattern& parent = frequent[p];
    const EmbeddingMap::Entry* entry = mu.find(parent.key);
    if (!entry || entry->embeddings.empty()) continue;
    if (entry->vertex_count != parent.code.vertex_count() ||
        entry->edge_count != parent.code.edge_count()) {
      throw ContractViolation("embedding arity does not match pattern");
    }
    if (branch_check) state.observe(parent.branch, edges, mode);

    const auto flat = entry->embeddings.unpack();
    const std::size_t j = entry->vertex_count;
    const std::size_t k = entry->edge_count;
    const std::size_t width = j + k;
    const auto new_time = static_cast<std::uint32_t>(j);
    const std::uint32_t rightmost = parent.path.rightmost();
    auto on_path = [&](int t) {
      return t >= 0 && parent.path.position_of(static_cast<std::uint32_t>(t)) >= 0;
    };

    for (std::size_t off = 0; off < flat.size(); off += width) {
      const std::span<const std::uint32_t> vertices(flat.data() + off, j);
      const std::span<const std::uint32_t> mapped_edges(flat.data() + off + j, k);
      auto time_of = [&](std::uint32_t v) {
        auto it = std::find(vertices.begin(), vertices.end(), v);
        return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
      };

      for (std::size_t e = state.candidate_edge_floor; e < m; ++e) {
        const auto id = static_cast<std::uint32_t>(e);
        if (std::find(mapped_edges.begin(), mapped_edges.end(), id) != mapped_edges.end()) {
          continue;
        }
        const auto* s = edges.data() + e * EncodedGraph::kFields;
        const std::uint32_t va = s[0], vb = s[1], la = s[2], le = s[4], lb = s[5];
        const auto d = static_cast<Direction>(s[3]);
        const int ta = time_of(va);
        const int tb = time_of(vb);
        if (ta < 0 && tb < 0) continue;

        Extension ext;
        std::optional<std::uint32_t> discovered;
        if (va == vb) {
          if (ta != static_cast<int>(rightmost)) continue;
          ext = {rightmost, rightmost, la, Direction::out, le, la};
        } else if (ta >= 0 && tb >= 0) {
          if (ta == static_cast<int>(rightmost) && on_path(tb)) {
            ext = {rightmost, static_cast<std::uint32_t>(tb), la, d, le, lb};
          } else if (tb == static_cast<int>(rightmost) && on_path(ta)) {
            ext = {rightmost, static_cast<std::uint32_t>(ta), lb, reverse(d, mode), le, la};
          } else {
            continue;
          }
          if (backward_is_redundant(ext, parent, mode)) continue;
        } else if (ta >= 0) {
          if (!on_path(ta)) continue;
          ext = {static_cast<std::uint32_t>(ta), new_time, la, d, le, lb};
          discovered = vb;
        } else {
          if (!on_path(tb)) continue;
          ext = {static_cast<std::uint32_t>(tb), new_time, lb, reverse(d, mode), le, la};
          discovered = va;
        }

        auto [it, inserted] = child_index.try_emplace(ChildKey{p, ext}, children.size());
        if (inserted) {
          DfsCode child = parent.code;
          child.push_back(ext);
          children.push_back({std::move(child), {}});
        }
        auto& out = children[it->second].second;
        out.insert(out.end(), vertices.begin(), vertices.end());
        if (discovered) out.push_back(*discovered);
        out.insert(out.end(), mapped_edges.begin(), mapped_edges.end());
        out.push_back(id);
      }
    }
  }

  EmbeddingMap next(mu.packing());
  for (const auto& [code, flat] : children) next.insert(code, flat);
  return next;
}

EmbeddingMap grow(std::span<const std::uint32_t> edges, const EmbeddingMap& mu,
                  std::span<const DfsCode> frequent, Mode mode, bool branch_check) {
  const auto received = receive_broadcast(frequent, mode, mu.packing().patterns);
  return grow(edges, mu, std::span<const BroadcastPattern>(received), mode, branch_check);
}

}  // namespace dimspan
