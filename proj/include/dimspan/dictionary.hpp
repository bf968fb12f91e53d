#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace dimspan {

/// Bijective label <-> dense integer mapping.
class Dictionary {
 public:
  Dictionary() = default;

  /// Integers are assigned by descending count, ties by ascending string.
  static Dictionary from_counts(const std::map<std::string, std::size_t>& counts);
  /// Integers are assigned in the given order; duplicates are rejected.
  static Dictionary from_labels(std::vector<std::string> labels);

  std::optional<std::uint32_t> find(const std::string& label) const;
  /// Throws DictionaryMiss for an unknown label.
  std::uint32_t encode(const std::string& label) const;
  const std::string& decode(std::uint32_t code) const;

  std::size_t size() const noexcept { return to_str_.size(); }
  std::span<const std::string> labels() const noexcept { return to_str_; }

  friend bool operator==(const Dictionary& a, const Dictionary& b) { return a.to_str_ == b.to_str_; }

 private:
  std::unordered_map<std::string, std::uint32_t> to_int_;
  std::vector<std::string> to_str_;
};

}  // namespace dimspan
