#include "dimspan/embedding_store.hpp"

#include <string>

#include "dimspan/error.hpp"

namespace dimspan {

PatternKey make_key(const DfsCode& code, bool compressed) {
  const auto flat = code.flatten();
  return PatternKey::pack(flat, compressed);
}

DfsCode decode_key(const PatternKey& key) {
  const auto flat = key.unpack();
  return DfsCode::from_flat(flat);
}

EmbeddingMap::Entry& EmbeddingMap::entry_for(const DfsCode& pattern) {
  auto key = make_key(pattern, packing_.patterns);
  auto [it, inserted] = index_.try_emplace(key, entries_.size());
  if (inserted) {
    Entry e;
    e.pattern = std::move(key);
    e.embeddings = intcompress::PackedSeq::pack({}, packing_.embeddings);
    e.vertex_count = static_cast<std::uint32_t>(pattern.vertex_count());
    e.edge_count = static_cast<std::uint32_t>(pattern.edge_count());
    entries_.push_back(std::move(e));
  }
  return entries_[it->second];
}

void EmbeddingMap::add_embedding(const DfsCode& pattern,
                                 std::span<const std::uint32_t> vertex_times,
                                 std::span<const std::uint32_t> edge_exts) {
  if (vertex_times.size() != pattern.vertex_count() || edge_exts.size() != pattern.edge_count()) {
    throw ContractViolation("embedding arity (" + std::to_string(vertex_times.size()) + ", " +
                            std::to_string(edge_exts.size()) + ") does not match pattern (" +
                            std::to_string(pattern.vertex_count()) + ", " +
                            std::to_string(pattern.edge_count()) + ")");
  }
  Entry& e = entry_for(pattern);
  auto flat = e.embeddings.unpack();
  flat.insert(flat.end(), vertex_times.begin(), vertex_times.end());
  flat.insert(flat.end(), edge_exts.begin(), edge_exts.end());
  e.embeddings = intcompress::PackedSeq::pack(flat, packing_.embeddings);
}

void EmbeddingMap::insert(const DfsCode& pattern, std::span<const std::uint32_t> multiplexed) {
  const auto width = pattern.vertex_count() + pattern.edge_count();
  if (width == 0 || multiplexed.size() % width != 0) {
    throw ContractViolation("multiplexed length " + std::to_string(multiplexed.size()) +
                            " is not a multiple of the embedding width " + std::to_string(width));
  }
  const auto before = entries_.size();
  Entry& e = entry_for(pattern);
  if (entries_.size() == before) throw ContractViolation("pattern already present in map");
  e.embeddings = intcompress::PackedSeq::pack(multiplexed, packing_.embeddings);
}

const EmbeddingMap::Entry* EmbeddingMap::find(const PatternKey& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

EmbeddingMap EmbeddingMap::filter_to_frequent(std::span<const PatternKey> frequent) const {
  EmbeddingMap out(packing_);
  for (const auto& key : frequent) {
    if (const Entry* e = find(key)) {
      out.index_.emplace(e->pattern, out.entries_.size());
      out.entries_.push_back(*e);
    }
  }
  return out;
}

EmbeddingMap EmbeddingMap::filter_to_frequent(std::span<const DfsCode> frequent) const {
  std::vector<PatternKey> keys;
  keys.reserve(frequent.size());
  for (const auto& code : frequent) keys.push_back(make_key(code, packing_.patterns));
  return filter_to_frequent(std::span<const PatternKey>(keys));
}

std::vector<Embedding> EmbeddingMap::enumerate(const DfsCode& pattern) const {
  const Entry* e = find(make_key(pattern, packing_.patterns));
  if (!e) return {};
  const auto flat = e->embeddings.unpack();
  return demultiplex(flat, e->vertex_count, e->edge_count);
}

std::vector<Embedding> demultiplex(std::span<const std::uint32_t> multiplexed,
                                   std::uint32_t vertex_count, std::uint32_t edge_count) {
  const std::size_t width = vertex_count + edge_count;
  std::vector<Embedding> out;
  if (width == 0) return out;
  out.reserve(multiplexed.size() / width);
  for (std::size_t off = 0; off + width <= multiplexed.size(); off += width) {
    const auto slice = multiplexed.subspan(off, width);
    out.push_back({{slice.begin(), slice.begin() + vertex_count},
                   {slice.begin() + vertex_count, slice.end()}});
  }
  return out;
}

}  // namespace dimspan
