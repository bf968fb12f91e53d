#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "dimspan/error.hpp"
#include "dimspan/genbench.hpp"
#include "dimspan/preprocess.hpp"
#include "support.hpp"

using namespace dimspan;
using namespace dimspan::testing;

namespace {

bool connected(const LabeledGraph& g) {
  std::vector<std::uint32_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) parent[find(e.source)] = find(e.target);
  std::set<std::uint32_t> roots;
  for (std::uint32_t v = 0; v < g.vertices.size(); ++v) roots.insert(find(v));
  return roots.size() == 1;
}

}  // namespace

TEST(Generator, SizeClassesAndConnectivity) {
  const auto c = generate({20, 5});
  ASSERT_EQ(c.size(), 20u);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& g = c.graphs[i];
    const std::size_t cls = i % 10;
    EXPECT_EQ(g.vertices.size(), 10 + 9 * cls);
    EXPECT_EQ(g.edges.size(), 14 + 14 * cls);
    EXPECT_TRUE(connected(g)) << "graph " << i;
  }
  EXPECT_EQ(c.graphs[9].vertices.size(), 91u);
  EXPECT_EQ(c.graphs[9].edges.size(), 140u);
}

TEST(Generator, LabelCounts) {
  for (const std::size_t n : {10, 100, 2500}) {
    const auto c = generate({n, 1});
    EXPECT_EQ(label_frequencies(c, LabelKind::vertex).size(), 11u);
    EXPECT_EQ(label_frequencies(c, LabelKind::edge).size(), 5 + n / 1000);
  }
}

TEST(Generator, LoopsAndParallelEdges) {
  const auto c = generate({10, 2});
  for (const auto& g : c.graphs) {
    bool loop = false, parallel = false, antiparallel = false;
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const auto& e : g.edges) {
      loop |= e.source == e.target;
      parallel |= !pairs.insert({e.source, e.target}).second;
    }
    for (const auto& [s, t] : pairs) antiparallel |= s != t && pairs.contains({t, s});
    EXPECT_TRUE(loop && parallel && antiparallel);
  }
}

TEST(Generator, Deterministic) {
  EXPECT_EQ(write_tlf(generate({50, 9})), write_tlf(generate({50, 9})));
  EXPECT_NE(write_tlf(generate({50, 9})), write_tlf(generate({50, 10})));
  EXPECT_THROW(generate({0, 1}), ParameterError);
}

TEST(Generator, FullSupportMatchesOracle) {
  const auto c = generate({100, 4});
  MiningConfig cfg;
  cfg.min_frequency = 100;
  const auto r = mine(c, cfg);
  const auto truth = oracle_mine(c, 100, Mode::directed);
  EXPECT_FALSE(r.frequent.empty());
  EXPECT_TRUE(same_patterns(r.frequent, truth.frequent));
}

TEST(Generator, DuplicationDoublesFrequencies) {
  const auto c = generate({40, 6});
  GraphCollection twice = c;
  for (auto g : c.graphs) {
    g.id += c.size();
    twice.graphs.push_back(std::move(g));
  }
  MiningConfig cfg;
  cfg.min_support = 0.8;
  const auto one = mine(c, cfg).frequent;
  const auto two = mine(twice, cfg).frequent;
  ASSERT_EQ(one.size(), two.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].code, two[i].code);
    EXPECT_EQ(2 * one[i].frequency, two[i].frequency);
  }
}

TEST(Oracle, SingleEdge) {
  const auto c = parse_tlf(std::string_view("t # 0\nv 0 A\nv 1 B\ne 0 1 a\n"));
  const auto r = oracle_mine(c, 1, Mode::directed);
  ASSERT_EQ(r.frequent.size(), 1u);
  EXPECT_EQ(r.frequent[0].frequency, 1u);
}

TEST(Oracle, PendantTriangles) {
  const auto r = oracle_mine(pendant_triangles(), 2, Mode::undirected);
  std::size_t found = 0;
  for (const auto& fp : r.frequent) {
    if (fp.code == c3_min() || fp.code == c4_min()) {
      EXPECT_EQ(fp.frequency, 2u);
      ++found;
    }
  }
  EXPECT_EQ(found, 2u);
}

TEST(Oracle, CountsGraphsNotEmbeddings) {
  // One graph full of automorphic triangles still counts once.
  const auto c = parse_tlf(std::string_view(
      "t # 0\nv 0 A\nv 1 A\nv 2 A\ne 0 1 a\ne 1 2 a\ne 2 0 a\ne 1 0 a\ne 2 1 a\ne 0 2 a\n"));
  for (const Mode mode : {Mode::directed, Mode::undirected}) {
    for (const auto& fp : oracle_mine(c, 1, mode).frequent) EXPECT_EQ(fp.frequency, 1u);
  }
}

TEST(Oracle, GuardNamesGraph) {
  const auto c = generate({10, 3});
  try {
    oracle_mine(c, 1, Mode::directed);
    FAIL();
  } catch (const GuardExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("graph 0"), std::string::npos);
  }
}

TEST(Oracle, RandomCrossCheck) {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 40; ++i) {
    const auto c = random_collection(rng, {5, 5, 2, 8, 2, 4, 1, 3});
    const Mode mode = i % 2 ? Mode::undirected : Mode::directed;
    const std::size_t f = uniform(rng, 1, 3);
    MiningConfig cfg;
    cfg.min_frequency = f;
    cfg.mode = mode;
    const auto engine = mine(c, cfg);
    const auto oracle = oracle_mine(c, f, mode);
    // Both directions: every engine pattern is in the oracle and vice versa.
    std::set<std::pair<std::vector<std::uint32_t>, std::size_t>> a, b;
    for (const auto& fp : engine.frequent) a.insert({fp.code.flatten(), fp.frequency});
    for (const auto& fp : oracle.frequent) b.insert({fp.code.flatten(), fp.frequency});
    ASSERT_TRUE(std::includes(a.begin(), a.end(), b.begin(), b.end()));
    ASSERT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}
