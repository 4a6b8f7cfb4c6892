// Copyright 2026 The GBM Motif Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "gbm/error.hpp"

namespace gbm {
namespace {

constexpr std::string_view kBlank = " \t\r\v\f";

// Splits a line into whitespace-separated tokens; returns false for blank or
// comment lines.
bool tokenize(std::string_view line, std::vector<std::string_view>& tokens) {
  tokens.clear();
  const auto first = line.find_first_not_of(kBlank);
  if (first == std::string_view::npos || line[first] == '#') return false;
  std::size_t pos = first;
  while (pos < line.size()) {
    const auto end = std::min(line.find_first_of(kBlank, pos), line.size());
    tokens.push_back(line.substr(pos, end - pos));
    pos = line.find_first_not_of(kBlank, end);
    if (pos == std::string_view::npos) break;
  }
  return true;
}

std::uint64_t parse_id(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, std::string("expected a non-negative integer ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

}  // namespace

LoadedGraph read_edge_list(std::istream& in, const EdgeListOptions& options) {
  std::string line;
  std::vector<std::string_view> tokens;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::optional<std::uint64_t> header_n;
  std::size_t line_no = 0;
  bool seen_content = false;
  std::uint64_t max_id = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!tokenize(line, tokens)) continue;
    if (!seen_content && tokens.size() == 2 && tokens[0] == "n") {
      header_n = parse_id(tokens[1], line_no, "vertex count");
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected \"u v\", got " + std::to_string(tokens.size()) + " fields");
    }
    const auto u = parse_id(tokens[0], line_no, "vertex id");
    const auto v = parse_id(tokens[1], line_no, "vertex id");
    if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
    max_id = std::max({max_id, u, v});
    raw.emplace_back(u, v);
  }
  if (!seen_content) throw DataError("edge list is empty");

  LoadedGraph result;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  if (options.remap_ids) {
    auto& ids = result.original_ids;
    ids.reserve(raw.size() * 2);
    for (const auto& [u, v] : raw) {
      ids.push_back(u);
      ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.size() > UINT32_MAX) throw DataError("too many distinct vertex ids");
    auto dense = [&](std::uint64_t id) {
      return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    for (const auto& [u, v] : raw) edges.push_back({dense(u), dense(v)});
    result.graph = Graph::from_edges(ids.size(), edges);
    return result;
  }

  std::uint64_t n = raw.empty() ? 0 : max_id + 1;
  if (header_n) {
    if (*header_n < n) {
      throw DataError("header declares n = " + std::to_string(*header_n) + " but vertex id " +
                      std::to_string(max_id) + " appears");
    }
    n = *header_n;
  }
  if (n > UINT32_MAX) throw DataError("vertex ids exceed 32-bit range");
  for (const auto& [u, v] : raw) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  result.graph = Graph::from_edges(static_cast<std::size_t>(n), edges);
  return result;
}

Graph load_edge_list(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_edge_list(in).graph;
}

LoadedGraph load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options) {
  auto in = open_in(path);
  return read_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  out << "n " << graph.num_vertices() << '\n';
  graph.for_each_edge([&](Vertex u, Vertex v) { out << u << ' ' << v << '\n'; });
}

void save_edge_list(const Graph& graph, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_edge_list(out, graph);
}

Partition read_labels(std::istream& in, std::optional<std::size_t> expected_n) {
  std::string line;
  std::vector<std::string_view> tokens;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!tokenize(line, tokens)) continue;
    if (tokens.size() != 2) throw ParseError(line_no, "expected \"vertex label\"");
    const auto v = parse_id(tokens[0], line_no, "vertex id");
    const auto label = parse_id(tokens[1], line_no, "label");
    if (label > 1) {
      throw ParseError(line_no, "invalid label " + std::to_string(label) + " (expected 0 or 1)");
    }
    entries.emplace_back(v, label);
  }

  std::size_t n = 0;
  if (expected_n) {
    n = *expected_n;
  } else {
    for (const auto& e : entries) n = std::max<std::size_t>(n, e.first + 1);
  }
  constexpr std::uint8_t kMissing = 0xff;
  std::vector<std::uint8_t> labels(n, kMissing);
  for (const auto& [v, label] : entries) {
    if (v >= n) throw DataError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    if (labels[v] != kMissing) throw DataError("vertex " + std::to_string(v) + " labelled twice");
    labels[v] = static_cast<std::uint8_t>(label);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (labels[v] == kMissing) throw DataError("missing label for vertex " + std::to_string(v));
  }
  return Partition(std::move(labels));
}

Partition load_labels(const std::filesystem::path& path, std::optional<std::size_t> expected_n) {
  auto in = open_in(path);
  return read_labels(in, expected_n);
}

void write_labels(std::ostream& out, const Partition& partition,
                  const std::vector<std::uint64_t>& ids) {
  for (std::size_t v = 0; v < partition.size(); ++v) {
    out << (ids.empty() ? std::uint64_t{v} : ids[v]) << ' '
        << static_cast<int>(partition[static_cast<Vertex>(v)]) << '\n';
  }
}

void save_partition(const Partition& partition, const std::filesystem::path& path,
                    const std::vector<std::uint64_t>& ids) {
  auto out = open_out(path);
  write_labels(out, partition, ids);
}

void write_positions(std::ostream& out, const LatentPositions& positions) {
  char buf[32];
  for (std::size_t v = 0; v < positions.size(); ++v) {
    out << v;
    const auto coords = positions.is_circle()
                            ? std::span<const double>(positions.values().data() + v, 1)
                            : positions.sphere_position(static_cast<Vertex>(v));
    for (double c : coords) {
      std::snprintf(buf, sizeof buf, "%.17g", c);
      out << ' ' << buf;
    }
    out << '\n';
  }
}

}  // namespace gbm
