#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dimspan/error.hpp"
#include "dimspan/intcompress.hpp"

using namespace dimspan;
using namespace dimspan::intcompress;

namespace {

std::vector<std::uint32_t> random_seq(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 64);
  std::uniform_int_distribution<int> width(0, 28);
  std::vector<std::uint32_t> v(static_cast<std::size_t>(len(rng)));
  // Mixed magnitudes exercise every layout.
  for (auto& x : v) {
    const int w = width(rng);
    x = w == 0 ? 0 : static_cast<std::uint32_t>(rng() & ((1ull << w) - 1));
  }
  return v;
}

}  // namespace

TEST(Simple16, EmptySequence) {
  const auto b = compress(std::vector<std::uint32_t>{});
  EXPECT_TRUE(b.words.empty());
  EXPECT_EQ(b.original_length, 0u);
  EXPECT_TRUE(decompress(b).empty());
}

TEST(Simple16, TwentyEightBitsFitOneWord) {
  std::vector<std::uint32_t> v(28);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (i * 7 + 3) % 2;
  const auto b = compress(v);
  EXPECT_EQ(b.words.size(), 1u);
  EXPECT_EQ(decompress(b), v);
  EXPECT_DOUBLE_EQ(compression_ratio(std::vector<CompressedBlock>{b}), 28.0);
}

TEST(Simple16, MaxRangeValuesTakeOneWordEach) {
  std::vector<std::uint32_t> v(10, kMaxValue);
  const auto b = compress(v);
  EXPECT_EQ(b.words.size(), 10u);
  EXPECT_LE(compression_ratio(std::vector<CompressedBlock>{b}), 1.0);
  EXPECT_EQ(decompress(b), v);
}

TEST(Simple16, OutOfRangeValueIsRejected) {
  std::vector<std::uint32_t> v{1, 2, kMaxValue + 1};
  EXPECT_THROW(compress(v), RangeError);
}

TEST(Simple16, CorruptBlocksAreRejected) {
  std::vector<std::uint32_t> v{5, 6, 7, 8, 9, 10};
  auto b = compress(v);

  auto longer = b;
  longer.original_length += 40;
  EXPECT_THROW(decompress(longer), CorruptionError);

  auto trailing = b;
  trailing.words.push_back(0);
  EXPECT_THROW(decompress(trailing), CorruptionError);

  auto padded = b;
  padded.original_length = 1;
  EXPECT_THROW(decompress(padded), CorruptionError);
}

TEST(Simple16, RatioNeedsInput) {
  EXPECT_THROW(compression_ratio(std::vector<CompressedBlock>{}), ParameterError);
  EXPECT_THROW(compression_ratio(std::vector<CompressedBlock>{CompressedBlock{}}), ParameterError);
}

TEST(Simple16, RoundtripProperty) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100000; ++i) {
    const auto v = random_seq(rng);
    const auto b = compress(v);
    ASSERT_EQ(b.original_length, v.size());
    ASSERT_EQ(decompress(b), v);
  }
}

TEST(Simple16, Deterministic) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    const auto v = random_seq(rng);
    EXPECT_EQ(compress(v), compress(v));
  }
}

TEST(Simple16, EqualityPreservation) {
  // Small alphabet so equal sequences actually occur.
  std::mt19937_64 rng(13);
  std::vector<std::vector<std::uint32_t>> seqs;
  for (int i = 0; i < 600; ++i) {
    std::vector<std::uint32_t> v(rng() % 5);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng() % 3) * ((rng() % 2) ? 1u : 1000u);
    seqs.push_back(v);
  }
  std::size_t equal_pairs = 0;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    const auto bi = compress(seqs[i]);
    for (std::size_t j = i; j < seqs.size(); ++j) {
      const auto bj = compress(seqs[j]);
      ASSERT_EQ(seqs[i] == seqs[j], bi == bj);
      equal_pairs += seqs[i] == seqs[j];
    }
  }
  EXPECT_GT(equal_pairs, seqs.size());
}

TEST(PackedSeq, BothFormsRoundtripAndCompare) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 2000; ++i) {
    const auto v = random_seq(rng);
    for (const bool c : {false, true}) {
      const auto p = PackedSeq::pack(v, c);
      EXPECT_EQ(p.unpack(), v);
      EXPECT_EQ(p.size(), v.size());
      EXPECT_EQ(p.compressed(), c);
      EXPECT_EQ(p, PackedSeq::pack(v, c));
      EXPECT_EQ(p.hash(), PackedSeq::pack(v, c).hash());
    }
  }
  const std::vector<std::uint32_t> a{1, 2, 3}, b{1, 2, 4};
  EXPECT_NE(PackedSeq::pack(a, true), PackedSeq::pack(b, true));
  EXPECT_NE(PackedSeq::pack(a, false), PackedSeq::pack(b, false));
}
