// Copyright 2026 The hyperee Authors
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

#include "hyperee/hypergraph_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace hyperee {
namespace {

HypergraphError ParseError(std::size_t line, const std::string& what) {
  return HypergraphError(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::size_t> ParseIndices(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos == line.size()) break;
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    const std::size_t stop = static_cast<std::size_t>(end - line.data());
    if (ec != std::errc() ||
        (stop < line.size() && line[stop] != ' ' && line[stop] != '\t' && line[stop] != '\r')) {
      throw ParseError(line_no, "expected a non-negative integer at column " +
                                    std::to_string(pos + 1));
    }
    out.push_back(value);
    pos = stop;
  }
  return out;
}

// Re-raises validation failures with the source line of the offending edge.
Hypergraph CreateWithLines(std::size_t n, std::vector<std::vector<Vertex>> edges,
                           const std::vector<std::size_t>& lines) {
  try {
    return Hypergraph::Create(n, edges);
  } catch (const HypergraphError& err) {
    // Locate the first edge that fails on its own or duplicates an earlier one.
    std::vector<std::vector<Vertex>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      try {
        seen.push_back(edges[i]);
        Hypergraph::Create(n, seen);
      } catch (const HypergraphError& local) {
        throw HypergraphError(local.code(),
                              "line " + std::to_string(lines[i]) + ": " + local.what());
      }
    }
    throw;
  }
}

}  // namespace

Hypergraph ParseText(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<std::vector<Vertex>> edges;
  std::vector<std::size_t> lines;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto values = ParseIndices(line, line_no);
    if (!n) {
      if (values.size() != 1) throw ParseError(line_no, "first line must hold only n");
      n = values.front();
      continue;
    }
    edges.push_back(std::move(values));
    lines.push_back(line_no);
  }
  if (!n) throw ParseError(line_no, "missing vertex count");
  return CreateWithLines(*n, std::move(edges), lines);
}

std::string ToText(const Hypergraph& h) {
  std::string out = std::to_string(h.order()) + "\n";
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

Hypergraph ParseJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw HypergraphError(ErrorCode::kParse, std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw HypergraphError(ErrorCode::kParse, "JSON hypergraph needs a non-negative integer \"n\"");
  }
  std::vector<std::vector<Vertex>> edges;
  if (doc.contains("edges")) {
    const auto& list = doc["edges"];
    if (!list.is_array()) throw HypergraphError(ErrorCode::kParse, "\"edges\" must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& item = list[i];
      bool ok = item.is_array();
      std::vector<Vertex> edge;
      for (const auto& v : item) {
        ok = ok && v.is_number_unsigned();
        if (ok) edge.push_back(v.get<Vertex>());
      }
      if (!ok) {
        throw HypergraphError(ErrorCode::kParse,
                              "edge #" + std::to_string(i) + " must be an array of vertex indices");
      }
      edges.push_back(std::move(edge));
    }
  }
  return Hypergraph::Create(doc["n"].get<std::size_t>(), std::move(edges));
}

std::string ToJson(const Hypergraph& h) {
  nlohmann::ordered_json doc;
  doc["n"] = h.order();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : h.edges()) doc["edges"].push_back(e);
  return doc.dump();
}

Hypergraph ReadHypergraphFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw HypergraphError(ErrorCode::kParse, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return path.extension() == ".json" ? ParseJson(buffer.str()) : ParseText(buffer.str());
}

void WriteHypergraphFile(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw HypergraphError(ErrorCode::kParse, "cannot write " + path.string());
  out << (path.extension() == ".json" ? ToJson(h) + "\n" : ToText(h));
}

}  // namespace hyperee
