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

#ifndef HYPEREE_HYPERGRAPH_IO_H_
#define HYPEREE_HYPERGRAPH_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperee/hypergraph.h"

namespace hyperee {

// Text format: the first non-comment line holds n; each later non-empty line
// is one edge given as whitespace-separated 0-based vertex indices. Lines
// starting with '#' are comments. Errors report the 1-based line number.
Hypergraph ParseText(std::string_view text);
std::string ToText(const Hypergraph& h);

// JSON format: {"n": <int>, "edges": [[<int>, ...], ...]}, written on one line.
Hypergraph ParseJson(std::string_view text);
std::string ToJson(const Hypergraph& h);

// Chooses the format by extension: ".json" is JSON, anything else is text.
Hypergraph ReadHypergraphFile(const std::filesystem::path& path);
void WriteHypergraphFile(const std::filesystem::path& path, const Hypergraph& h);

}  // namespace hyperee

#endif  // HYPEREE_HYPERGRAPH_IO_H_
