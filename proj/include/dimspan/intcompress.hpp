#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace dimspan::intcompress {

/// Largest value a Simple16 payload slot can hold.
inline constexpr std::uint32_t kMaxValue = (1u << 28) - 1;

/// A Simple16-coded integer sequence. Every word carries a 4-bit selector in
/// its high nibble and 28 payload bits. Two blocks are equal iff their
/// decoded sequences are equal.
struct CompressedBlock {
  std::vector<std::uint32_t> words;
  std::size_t original_length = 0;

  friend bool operator==(const CompressedBlock&, const CompressedBlock&) = default;
};

CompressedBlock compress(std::span<const std::uint32_t> values);
std::vector<std::uint32_t> decompress(const CompressedBlock& block);

/// (sum of decoded lengths) / (sum of word counts). Throws ParameterError on
/// an empty set or a set with zero words in total.
double compression_ratio(std::span<const CompressedBlock> blocks);

/// Integer sequence stored either verbatim or Simple16-compressed. Equality
/// and hashing work on the stored form; mixing forms within one keyed
/// container is a caller error.
class PackedSeq {
 public:
  PackedSeq() = default;

  static PackedSeq pack(std::span<const std::uint32_t> values, bool compressed);

  std::vector<std::uint32_t> unpack() const;
  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  bool compressed() const noexcept { return compressed_; }
  /// Stored 32-bit words (payload words when compressed, raw values otherwise).
  std::span<const std::uint32_t> words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const PackedSeq&, const PackedSeq&) = default;

 private:
  std::vector<std::uint32_t> words_;
  std::uint32_t length_ = 0;
  bool compressed_ = false;
};

struct PackedSeqHash {
  std::size_t operator()(const PackedSeq& s) const noexcept { return s.hash(); }
};

}  // namespace dimspan::intcompress
