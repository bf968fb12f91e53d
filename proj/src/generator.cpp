#include <random>
#include <string>

#include "dimspan/error.hpp"
#include "dimspan/genbench.hpp"

namespace dimspan {

namespace {

constexpr std::size_t kSizeClasses = 10;
constexpr std::size_t kVertexLabels = 11;
constexpr std::size_t kFamilyVertices = 6;

class Builder {
 public:
  explicit Builder(std::uint64_t id) { g_.id = id; }

  std::uint32_t vertex(std::size_t label) {
    const auto v = static_cast<std::uint32_t>(g_.vertices.size());
    g_.vertices.push_back({v, "V" + std::to_string(label)});
    return v;
  }
  void edge(std::uint32_t s, std::uint32_t t, std::size_t label) {
    const auto e = static_cast<std::uint32_t>(g_.edges.size());
    g_.edges.push_back({e, s, t, "E" + std::to_string(label)});
  }
  std::size_t vertex_count() const { return g_.vertices.size(); }
  std::size_t edge_count() const { return g_.edges.size(); }
  LabeledGraph take() { return std::move(g_); }

 private:
  LabeledGraph g_;
};

}  // namespace

GraphCollection generate(const GeneratorConfig& cfg) {
  if (cfg.graph_count < 1) throw ParameterError("graph_count must be >= 1");
  const std::size_t edge_labels = 5 + cfg.graph_count / 1000;
  const std::size_t filler_labels = edge_labels - 3;
  std::mt19937_64 rng(cfg.seed);
  auto pick = [&](std::size_t n) {
    return static_cast<std::size_t>(std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng));
  };

  GraphCollection out;
  out.graphs.reserve(cfg.graph_count);
  for (std::size_t i = 0; i < cfg.graph_count; ++i) {
    const std::size_t c = i % kSizeClasses;
    const std::size_t target_vertices = 10 + 9 * c;
    const std::size_t target_edges = 14 + 14 * c;
    Builder b(i);

    std::uint32_t f[kFamilyVertices];
    for (std::size_t k = 0; k < 3; ++k) f[k] = b.vertex(0);
    for (std::size_t k = 3; k < kFamilyVertices; ++k) f[k] = b.vertex(1);
    b.edge(f[0], f[1], 0);
    b.edge(f[1], f[2], 0);
    b.edge(f[2], f[0], 0);
    b.edge(f[0], f[3], 1);
    b.edge(f[0], f[4], 1);
    b.edge(f[3], f[3], 0);
    b.edge(f[4], f[5], 0);
    b.edge(f[4], f[5], 0);
    b.edge(f[5], f[4], 0);

    for (std::size_t t = 1; t <= c; ++t) {
      const auto v = b.vertex(t + 1);
      b.edge(f[(t - 1) % kFamilyVertices], v, 2);
      b.edge(v, v, 2);
    }

    const std::size_t filler = 3 + i % filler_labels;
    while (b.vertex_count() < target_vertices) {
      const auto anchor = static_cast<std::uint32_t>(pick(b.vertex_count()));
      const auto v = b.vertex(pick(kVertexLabels));
      if (pick(2) == 0) {
        b.edge(anchor, v, filler);
      } else {
        b.edge(v, anchor, filler);
      }
    }
    while (b.edge_count() < target_edges) {
      const auto s = static_cast<std::uint32_t>(pick(b.vertex_count()));
      const auto t = static_cast<std::uint32_t>(pick(b.vertex_count()));
      b.edge(s, t, filler);
    }
    out.graphs.push_back(b.take());
  }
  return out;
}

}  // namespace dimspan
