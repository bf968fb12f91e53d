#include "dimspan/intcompress.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "dimspan/error.hpp"

namespace dimspan::intcompress {

namespace {

// The 16 Simple16 layouts (Zhang, Long, Suel 2008). Each layout is a list of
// (count, bit width) runs filling exactly 28 payload bits, low bits first.
struct Run {
  std::uint8_t count;
  std::uint8_t bits;
};

struct Layout {
  std::array<Run, 3> runs;
  std::uint8_t run_count;
  std::uint8_t slots;
};

constexpr std::array<Layout, 16> kLayouts = {{
    {{{{28, 1}, {0, 0}, {0, 0}}}, 1, 28},
    {{{{7, 2}, {14, 1}, {0, 0}}}, 2, 21},
    {{{{7, 1}, {7, 2}, {7, 1}}}, 3, 21},
    {{{{14, 1}, {7, 2}, {0, 0}}}, 2, 21},
    {{{{14, 2}, {0, 0}, {0, 0}}}, 1, 14},
    {{{{1, 4}, {8, 3}, {0, 0}}}, 2, 9},
    {{{{1, 3}, {4, 4}, {3, 3}}}, 3, 8},
    {{{{7, 4}, {0, 0}, {0, 0}}}, 1, 7},
    {{{{4, 5}, {2, 4}, {0, 0}}}, 2, 6},
    {{{{2, 4}, {4, 5}, {0, 0}}}, 2, 6},
    {{{{3, 6}, {2, 5}, {0, 0}}}, 2, 5},
    {{{{2, 5}, {3, 6}, {0, 0}}}, 2, 5},
    {{{{4, 7}, {0, 0}, {0, 0}}}, 1, 4},
    {{{{1, 10}, {2, 9}, {0, 0}}}, 2, 3},
    {{{{2, 14}, {0, 0}, {0, 0}}}, 1, 2},
    {{{{1, 28}, {0, 0}, {0, 0}}}, 1, 1},
}};

// Bit width of slot `slot` in `layout`.
constexpr std::uint32_t slot_bits(const Layout& layout, std::size_t slot) {
  for (std::size_t r = 0; r < layout.run_count; ++r) {
    if (slot < layout.runs[r].count) return layout.runs[r].bits;
    slot -= layout.runs[r].count;
  }
  return 0;
}

// True if values[0..n) fit into the layout, n = min(slots, values.size()).
bool fits(const Layout& layout, std::span<const std::uint32_t> values) {
  const std::size_t n = std::min<std::size_t>(layout.slots, values.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] >> slot_bits(layout, i)) return false;
  }
  return true;
}

}  // namespace

CompressedBlock compress(std::span<const std::uint32_t> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > kMaxValue) {
      throw RangeError("value " + std::to_string(values[i]) + " at index " + std::to_string(i) +
                       " exceeds 28 bits");
    }
  }
  CompressedBlock block;
  block.original_length = values.size();
  std::size_t pos = 0;
  while (pos < values.size()) {
    auto rest = values.subspan(pos);
    // Layout 15 (1 x 28 bits) always fits, so the loop terminates.
    for (std::uint32_t sel = 0; sel < kLayouts.size(); ++sel) {
      const Layout& layout = kLayouts[sel];
      if (!fits(layout, rest)) continue;
      const std::size_t n = std::min<std::size_t>(layout.slots, rest.size());
      std::uint32_t word = sel << 28;
      std::uint32_t shift = 0;
      for (std::size_t i = 0; i < n; ++i) {
        word |= rest[i] << shift;
        shift += slot_bits(layout, i);
      }
      block.words.push_back(word);
      pos += n;
      break;
    }
  }
  return block;
}

std::vector<std::uint32_t> decompress(const CompressedBlock& block) {
  std::vector<std::uint32_t> out;
  out.reserve(block.original_length);
  for (const std::uint32_t word : block.words) {
    if (out.size() >= block.original_length) {
      throw CorruptionError("trailing words after " + std::to_string(block.original_length) +
                            " values");
    }
    const Layout& layout = kLayouts[word >> 28];
    const std::size_t n =
        std::min<std::size_t>(layout.slots, block.original_length - out.size());
    std::uint32_t shift = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t bits = slot_bits(layout, i);
      out.push_back((word >> shift) & ((1u << bits) - 1));
      shift += bits;
    }
    // Unused slots of a tail word must be zero; anything else is not a
    // block this encoder produced.
    if (shift < 28 && ((word & kMaxValue) >> shift) != 0) {
      throw CorruptionError("non-zero padding in tail word");
    }
  }
  if (out.size() != block.original_length) {
    throw CorruptionError("truncated block: decoded " + std::to_string(out.size()) + " of " +
                          std::to_string(block.original_length) + " values");
  }
  return out;
}

double compression_ratio(std::span<const CompressedBlock> blocks) {
  if (blocks.empty()) throw ParameterError("compression ratio of an empty block set");
  std::size_t values = 0;
  std::size_t words = 0;
  for (const auto& b : blocks) {
    values += b.original_length;
    words += b.words.size();
  }
  if (words == 0) throw ParameterError("compression ratio undefined for zero words");
  return static_cast<double>(values) / static_cast<double>(words);
}

PackedSeq PackedSeq::pack(std::span<const std::uint32_t> values, bool compressed) {
  PackedSeq s;
  s.length_ = static_cast<std::uint32_t>(values.size());
  s.compressed_ = compressed;
  if (compressed) {
    s.words_ = compress(values).words;
  } else {
    s.words_.assign(values.begin(), values.end());
  }
  return s;
}

std::vector<std::uint32_t> PackedSeq::unpack() const {
  if (!compressed_) return words_;
  return decompress(CompressedBlock{words_, length_});
}

std::size_t PackedSeq::hash() const noexcept {
  // FNV-1a over the stored words and the length.
  std::uint64_t h = 1469598103934665603ull ^ length_;
  for (const std::uint32_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace dimspan::intcompress
