#include "dimspan/dictionary.hpp"

#include <algorithm>

#include "dimspan/error.hpp"

namespace dimspan {

Dictionary Dictionary::from_counts(const std::map<std::string, std::size_t>& counts) {
  std::vector<std::pair<std::string, std::size_t>> entries(counts.begin(), counts.end());
  // std::map iterates by ascending string, so a stable sort on count keeps
  // the string tie-break.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> labels;
  labels.reserve(entries.size());
  for (auto& [label, count] : entries) labels.push_back(std::move(label));
  return from_labels(std::move(labels));
}

Dictionary Dictionary::from_labels(std::vector<std::string> labels) {
  Dictionary d;
  d.to_int_.reserve(labels.size());
  for (std::uint32_t i = 0; i < labels.size(); ++i) {
    if (!d.to_int_.emplace(labels[i], i).second) {
      throw ParameterError("duplicate dictionary label '" + labels[i] + "'");
    }
  }
  d.to_str_ = std::move(labels);
  return d;
}

std::optional<std::uint32_t> Dictionary::find(const std::string& label) const {
  auto it = to_int_.find(label);
  if (it == to_int_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Dictionary::encode(const std::string& label) const {
  auto it = to_int_.find(label);
  if (it == to_int_.end()) throw DictionaryMiss("label '" + label + "' not in dictionary");
  return it->second;
}

const std::string& Dictionary::decode(std::uint32_t code) const {
  if (code >= to_str_.size()) {
    throw DictionaryMiss("code " + std::to_string(code) + " not in dictionary");
  }
  return to_str_[code];
}

}  // namespace dimspan
