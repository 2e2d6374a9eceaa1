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

#ifndef HYPEREE_REPORT_H_
#define HYPEREE_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperee/families.h"
#include "hyperee/spectral.h"
#include "hyperee/theorems.h"

namespace hyperee {

enum class OutputFormat { kJson, kCsv, kText };
std::optional<OutputFormat> ParseOutputFormat(std::string_view name);

// Twelve significant digits, trailing zeros kept: 5 -> "5.00000000000".
// Non-finite values print as "inf", "-inf" or "nan".
std::string FormatReal(double x);

// x rounded to twelve significant digits, for JSON numbers.
double Round12(double x);

// Eigenvalues (descending, near-zero values printed as 0), the summary
// statistics, and the exact closed-walk totals tr(A^s) for s <= walk_max.
std::string FormatSpectrum(const Hypergraph& h, OutputFormat format, std::size_t walk_max = 0);

std::string FormatBoundReports(const std::vector<BoundReport>& reports, OutputFormat format);
std::string FormatOrderingReports(const std::vector<OrderingReport>& reports, OutputFormat format);
std::string FormatExtremalReport(const ExtremalReport& report, OutputFormat format);
std::string FormatSweep(const BoundSweepResult& result, std::uint64_t seed, OutputFormat format);
std::string FormatCatalog(const std::vector<CatalogEntry>& catalog, OutputFormat format);

}  // namespace hyperee

#endif  // HYPEREE_REPORT_H_
