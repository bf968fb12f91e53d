#include "dimspan/graph_model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace dimspan {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_id(std::string_view token, std::size_t line, const char* what) {
  if (token.empty() || token.size() > 19 ||
      !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return std::stoull(std::string(token));
}

}  // namespace

Branch edge_branch(std::span<const std::uint32_t> edges, std::size_t i) {
  const auto* s = edges.data() + i * EncodedGraph::kFields;
  return {0, s[0] == s[1] ? 0u : 1u, s[2], static_cast<Direction>(s[3]), s[4], s[5]};
}

GraphCollection parse_tlf(std::istream& in) {
  GraphCollection c;
  std::unordered_set<std::uint64_t> graph_ids;
  // File vertex id -> dense index, for the current block.
  std::unordered_map<std::uint64_t, std::uint32_t> vertex_index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const std::string_view tag = tokens[0];
    if (tag == "t") {
      if (tokens.size() != 3 || tokens[1] != "#") {
        throw ParseError(line_no, "expected 't # <graph-id>'");
      }
      const auto id = parse_id(tokens[2], line_no, "graph id");
      if (!graph_ids.insert(id).second) {
        throw ParseError(line_no, "duplicate graph id " + std::to_string(id));
      }
      c.graphs.push_back({id, {}, {}});
      vertex_index.clear();
    } else if (tag == "v") {
      if (c.graphs.empty()) throw ParseError(line_no, "vertex outside of a graph block");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'v <vertex-id> <label>'");
      auto& g = c.graphs.back();
      const auto file_id = parse_id(tokens[1], line_no, "vertex id");
      const auto index = static_cast<std::uint32_t>(g.vertices.size());
      if (!vertex_index.emplace(file_id, index).second) {
        throw ParseError(line_no, "duplicate vertex id " + std::to_string(file_id));
      }
      g.vertices.push_back({index, std::string(tokens[2])});
    } else if (tag == "e") {
      if (c.graphs.empty()) throw ParseError(line_no, "edge outside of a graph block");
      if (tokens.size() != 4) {
        throw ParseError(line_no, "expected 'e <source-id> <target-id> <label>'");
      }
      auto& g = c.graphs.back();
      auto resolve = [&](std::string_view token) {
        const auto file_id = parse_id(token, line_no, "vertex id");
        auto it = vertex_index.find(file_id);
        if (it == vertex_index.end()) {
          throw ReferentialError(line_no, "edge references undeclared vertex " +
                                              std::to_string(file_id));
        }
        return it->second;
      };
      const auto source = resolve(tokens[1]);
      const auto target = resolve(tokens[2]);
      g.edges.push_back({static_cast<std::uint32_t>(g.edges.size()), source, target,
                         std::string(tokens[3])});
    } else {
      throw ParseError(line_no, "unknown record type '" + std::string(tag) + "'");
    }
  }
  return c;
}

GraphCollection parse_tlf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tlf(in);
}

void write_tlf(std::ostream& out, const GraphCollection& collection) {
  for (const auto& g : collection.graphs) {
    out << "t # " << g.id << '\n';
    for (const auto& v : g.vertices) out << "v " << v.id << ' ' << v.label << '\n';
    for (const auto& e : g.edges) {
      out << "e " << g.vertices[e.source].id << ' ' << g.vertices[e.target].id << ' ' << e.label
          << '\n';
    }
  }
}

std::string write_tlf(const GraphCollection& collection) {
  std::ostringstream out;
  write_tlf(out, collection);
  return out.str();
}

EncodedGraph encode_graph(const LabeledGraph& g, const Dictionary& vertex_dict,
                          const Dictionary& edge_dict, Mode mode) {
  EncodedGraph enc;
  enc.id = g.id;
  enc.vertex_ids.reserve(g.vertices.size());
  std::vector<std::uint32_t> vlabel(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    enc.vertex_ids.push_back(g.vertices[i].id);
    vlabel[i] = vertex_dict.encode(g.vertices[i].label);
  }

  struct Oriented {
    std::array<std::uint32_t, EncodedGraph::kFields> fields;
    Branch code;
    std::uint32_t original;
  };
  std::vector<Oriented> oriented;
  oriented.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    const std::uint32_t le = edge_dict.encode(e.label);
    const bool loop = e.source == e.target;
    const Branch b = edge_min_code(vlabel[e.source], vlabel[e.target], le, loop, mode);
    // The minimum orientation starts at the source unless its start label or
    // direction says otherwise.
    const bool reversed = !loop && !(b.from_label == vlabel[e.source] &&
                                     b.direction == Direction::out && b.to_label == vlabel[e.target]);
    const std::uint32_t va = reversed ? e.target : e.source;
    const std::uint32_t vb = reversed ? e.source : e.target;
    oriented.push_back({{va, vb, b.from_label, static_cast<std::uint32_t>(b.direction), le,
                         b.to_label},
                        b,
                        e.id});
  }
  std::stable_sort(oriented.begin(), oriented.end(), [mode](const Oriented& a, const Oriented& b) {
    return compare_extension(a.code, b.code, mode) < 0;
  });
  enc.edges.reserve(oriented.size() * EncodedGraph::kFields);
  enc.edge_ids.reserve(oriented.size());
  for (const auto& o : oriented) {
    enc.edges.insert(enc.edges.end(), o.fields.begin(), o.fields.end());
    enc.edge_ids.push_back(o.original);
  }
  return enc;
}

PatternGraph to_pattern_graph(const LabeledGraph& g, const Dictionary& vertex_dict,
                              const Dictionary& edge_dict) {
  PatternGraph p;
  p.vertex_labels.reserve(g.vertices.size());
  for (const auto& v : g.vertices) p.vertex_labels.push_back(vertex_dict.encode(v.label));
  for (const auto& e : g.edges) {
    p.edges.push_back({e.source, e.target, edge_dict.encode(e.label)});
  }
  return p;
}

}  // namespace dimspan
