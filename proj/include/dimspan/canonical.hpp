#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dimspan {

enum class Mode : std::uint8_t { directed, undirected };

/// Traversal direction of an edge relative to its start vertex.
enum class Direction : std::uint32_t { out = 0, in = 1 };

inline Direction flip(Direction d) { return d == Direction::out ? Direction::in : Direction::out; }

/// One DFS traversal step: from the vertex discovered at `from_time` over an
/// edge to the vertex discovered at `to_time`. Forward iff to_time > from_time;
/// loops are backward steps with to_time == from_time.
struct Extension {
  std::uint32_t from_time = 0;
  std::uint32_t to_time = 0;
  std::uint32_t from_label = 0;
  Direction direction = Direction::out;
  std::uint32_t edge_label = 0;
  std::uint32_t to_label = 0;

  bool is_forward() const noexcept { return to_time > from_time; }
  bool is_loop() const noexcept { return to_time == from_time; }

  friend bool operator==(const Extension&, const Extension&) = default;
};

/// A 1-edge code ⟨0, 0|1, ...⟩; the first extension of a minimum DFS code.
using Branch = Extension;

/// Sequence of extensions describing a connected pattern.
class DfsCode {
 public:
  static constexpr std::size_t kFieldsPerExtension = 6;

  DfsCode() = default;
  explicit DfsCode(std::vector<Extension> extensions) : extensions_(std::move(extensions)) {}

  /// Inverse of flatten(); throws ContractViolation if the length is not a
  /// multiple of 6 or a direction field is not 0/1.
  static DfsCode from_flat(std::span<const std::uint32_t> flat);
  std::vector<std::uint32_t> flatten() const;

  const std::vector<Extension>& extensions() const noexcept { return extensions_; }
  std::size_t edge_count() const noexcept { return extensions_.size(); }
  std::size_t vertex_count() const noexcept;
  bool empty() const noexcept { return extensions_.empty(); }
  const Extension& operator[](std::size_t i) const { return extensions_[i]; }
  const Extension& back() const { return extensions_.back(); }

  void push_back(const Extension& x) { extensions_.push_back(x); }
  void pop_back() { extensions_.pop_back(); }
  DfsCode parent() const;

  friend bool operator==(const DfsCode&, const DfsCode&) = default;

 private:
  std::vector<Extension> extensions_;
};

/// Small labeled multigraph used to (re)canonicalize patterns.
struct PatternGraph {
  struct Edge {
    std::uint32_t source;
    std::uint32_t target;
    std::uint32_t label;
  };
  std::vector<std::uint32_t> vertex_labels;
  std::vector<Edge> edges;
};

/// Discovery times from the root to the rightmost vertex along forward
/// extensions, plus for each entry the index of the extension that
/// discovered it (-1 for the root).
struct RightmostPath {
  std::vector<std::uint32_t> times;
  std::vector<int> discovered_by;

  std::uint32_t rightmost() const { return times.back(); }
  /// Position of `time` on the path, or -1.
  int position_of(std::uint32_t time) const;
};

/// Total order on extensions: backward steps before forward steps; backward
/// by (from, to) ascending; forward by to ascending then from descending;
/// then labels over from_label × direction × edge_label × to_label with
/// out < in. Undirected mode ignores the direction.
std::strong_ordering compare_extension(const Extension& x, const Extension& y, Mode mode);

/// Lexicographic over extensions; a proper prefix is smaller.
std::strong_ordering compare_code(const DfsCode& a, const DfsCode& b, Mode mode);

/// Strict-weak-order adaptor over compare_code.
struct CodeLess {
  Mode mode;
  bool operator()(const DfsCode& a, const DfsCode& b) const {
    return compare_code(a, b, mode) < 0;
  }
};

/// Minimum DFS code of a connected pattern with at least one edge. Throws
/// ContractViolation for an empty or disconnected graph.
DfsCode min_dfs_code(const PatternGraph& g, Mode mode);

/// True iff `code` equals the minimum DFS code of the graph it describes.
bool is_minimal(const DfsCode& code, Mode mode);

/// Minimum 1-edge code of an edge with the given endpoint labels.
Branch edge_min_code(std::uint32_t source_label, std::uint32_t target_label,
                     std::uint32_t edge_label, bool is_loop, Mode mode);

Branch branch_of(const DfsCode& code);

RightmostPath rightmost_path(const DfsCode& code);

/// Graph described by a DFS code; vertex i is the vertex discovered at time i.
PatternGraph graph_of(const DfsCode& code, Mode mode);

/// Text form `t_a,t_b,l_a,out|in,l_e,l_b;...` with labels decoded by index.
std::string format_code(const DfsCode& code, std::span<const std::string> vertex_labels,
                        std::span<const std::string> edge_labels);

}  // namespace dimspan
