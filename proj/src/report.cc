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

#include "hyperee/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace hyperee {
namespace {

using Json = nlohmann::ordered_json;

Json Real(double x) { return std::isfinite(x) ? Json(Round12(x)) : Json(nullptr); }

template <typename T>
Json Maybe(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::string MaybeCsv(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Bool(bool b) { return b ? "true" : "false"; }

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

double SnapZero(double x, double tol) { return std::abs(x) <= tol ? 0.0 : x; }

// Moments that cancel to rounding noise print as 0.
std::vector<std::pair<std::size_t, double>> SnappedMoments(const Spectrum& s,
                                                            const SpectralSummary& summary) {
  auto out = summary.moments;
  for (auto& [t, value] : out) {
    double scale = 0.0;
    for (double x : s.eigenvalues) scale += std::pow(std::abs(x), static_cast<double>(t));
    value = SnapZero(value, s.zero_tolerance * std::max(1.0, scale));
  }
  return out;
}

Json BoundJson(const BoundReport& r) {
  Json j;
  j["bound_id"] = r.bound_id;
  j["direction"] = r.direction == BoundDirection::kUpper ? "upper" : "lower";
  j["strict"] = r.strict;
  j["n"] = r.inputs.n;
  j["m"] = Maybe(r.inputs.m);
  j["k"] = Maybe(r.inputs.k);
  j["t"] = Maybe(r.inputs.t);
  j["lhs"] = Real(r.lhs);
  j["rhs"] = Real(r.rhs);
  j["slack"] = Real(r.slack);
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  Json details = Json::object();
  for (const auto& [name, value] : r.details) details[name] = Real(value);
  j["details"] = details;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace

std::optional<OutputFormat> ParseOutputFormat(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  return std::nullopt;
}

std::string FormatReal(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", x);
  return buf;
}

double Round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string FormatSpectrum(const Hypergraph& h, OutputFormat format, std::size_t walk_max) {
  const Spectrum s = ComputeSpectrum(h);
  const SpectralSummary summary = Summarize(s);
  const auto moments = SnappedMoments(s, summary);
  std::vector<std::pair<std::size_t, std::string>> walks;
  for (std::size_t t = 1; t <= walk_max; ++t) walks.emplace_back(t, WideToString(TracePower(h, t)));

  if (format == OutputFormat::kCsv) {
    std::string out = "eigenvalue\n";
    for (double x : s.eigenvalues) out += FormatReal(SnapZero(x, s.zero_tolerance)) + "\n";
    return out;
  }
  if (format == OutputFormat::kJson) {
    Json j;
    j["n"] = h.order();
    j["m"] = h.size();
    j["lambda1"] = Real(summary.lambda1);
    j["estrada_index"] = Real(summary.estrada);
    j["energy"] = Real(summary.energy);
    j["theta"] = summary.negative_count;
    j["distinct_count"] = summary.distinct_count;
    Json eig = Json::array();
    for (double x : s.eigenvalues) eig.push_back(Real(SnapZero(x, s.zero_tolerance)));
    j["eigenvalues"] = eig;
    Json moment_json = Json::object();
    for (const auto& [t, value] : moments) moment_json[std::to_string(t)] = Real(value);
    j["moments"] = moment_json;
    if (!walks.empty()) {
      // Exact counts can exceed 64 bits, so they are strings.
      Json w = Json::object();
      for (const auto& [t, value] : walks) w[std::to_string(t)] = value;
      j["closed_walks"] = w;
    }
    return Dump(j);
  }
  std::ostringstream out;
  out << "n " << h.order() << "\nm " << h.size() << "\nlambda1 " << FormatReal(summary.lambda1)
      << "\nestrada_index " << FormatReal(summary.estrada) << "\nenergy "
      << FormatReal(summary.energy) << "\ntheta " << summary.negative_count
      << "\ndistinct_count " << summary.distinct_count << "\neigenvalues";
  for (double x : s.eigenvalues) out << ' ' << FormatReal(SnapZero(x, s.zero_tolerance));
  out << '\n';
  for (const auto& [t, value] : moments) out << "moment " << t << ' ' << FormatReal(value) << '\n';
  for (const auto& [t, value] : walks) out << "closed_walks " << t << ' ' << value << '\n';
  return out.str();
}

std::string FormatBoundReports(const std::vector<BoundReport>& reports, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(BoundJson(r));
    return Dump(arr);
  }
  std::ostringstream out;
  if (format == OutputFormat::kCsv) {
    out << "bound_id,n,m,k,t,lhs,rhs,slack,holds,equality\n";
    for (const auto& r : reports) {
      out << r.bound_id << ',' << r.inputs.n << ',' << MaybeCsv(r.inputs.m) << ','
          << MaybeCsv(r.inputs.k) << ',' << MaybeCsv(r.inputs.t) << ',' << FormatReal(r.lhs)
          << ',' << FormatReal(r.rhs) << ',' << FormatReal(r.slack) << ',' << Bool(r.holds)
          << ',' << Bool(r.equality) << '\n';
    }
    return out.str();
  }
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out << r.bound_id;
    if (r.inputs.t) out << " t=" << *r.inputs.t;
    out << "  lhs " << FormatReal(r.lhs) << (r.direction == BoundDirection::kUpper ? " <= " : " >= ")
        << "rhs " << FormatReal(r.rhs) << "  " << (r.holds ? "holds" : "FAILS");
    if (r.equality) out << " (equality)";
    out << '\n';
    if (!r.holds) ++failed;
  }
  out << reports.size() << " reports, " << failed << " failed\n";
  return out.str();
}

std::string FormatOrderingReports(const std::vector<OrderingReport>& reports,
                                  OutputFormat format) {
  if (format == OutputFormat::kJson) {
    Json arr = Json::array();
    for (const auto& r : reports) {
      Json j;
      j["lemma_id"] = r.lemma_id;
      j["description"] = r.description;
      j["all_strict"] = r.AllStrict();
      Json instances = Json::array();
      for (const auto& i : r.instances) {
        instances.push_back({{"left", i.left},
                             {"right", i.right},
                             {"ee_left", Real(i.ee_left)},
                             {"ee_right", Real(i.ee_right)},
                             {"gap", Real(i.gap)},
                             {"strict_holds", i.strict_holds}});
      }
      j["instances"] = instances;
      arr.push_back(j);
    }
    return Dump(arr);
  }
  std::ostringstream out;
  if (format == OutputFormat::kCsv) {
    out << "lemma_id,left,right,ee_left,ee_right,gap,strict_holds\n";
    for (const auto& r : reports) {
      for (const auto& i : r.instances) {
        out << r.lemma_id << ',' << CsvField(i.left) << ',' << CsvField(i.right) << ','
            << FormatReal(i.ee_left) << ',' << FormatReal(i.ee_right) << ',' << FormatReal(i.gap)
            << ',' << Bool(i.strict_holds) << '\n';
      }
    }
    return out.str();
  }
  for (const auto& r : reports) {
    std::size_t failed = 0;
    for (const auto& i : r.instances) failed += i.strict_holds ? 0 : 1;
    if (r.instances.empty()) {
      out << r.lemma_id << ": no instances within the size budget\n";
      continue;
    }
    out << r.lemma_id << ": " << r.instances.size() << " instances, "
        << (failed == 0 ? "all strict" : std::to_string(failed) + " not strict") << '\n';
    for (const auto& i : r.instances) {
      if (!i.strict_holds) {
        out << "  " << i.left << " " << FormatReal(i.ee_left) << " vs " << i.right << " "
            << FormatReal(i.ee_right) << '\n';
      }
    }
  }
  return out.str();
}

std::string FormatExtremalReport(const ExtremalReport& r, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    Json j;
    j["n_over"] = r.n_over;
    j["k"] = r.k;
    j["n"] = r.n_over * (r.k - 1);
    j["catalog_size"] = r.catalog_size;
    j["max"] = {{"label", r.ranking.empty() ? "" : r.ranking[0].label},
                {"expected", r.expected_max_label},
                {"ee", Real(r.expected_max_ee)},
                {"is_expected", r.max_is_expected},
                {"diameter", r.max_diameter}};
    j["second"] = {{"label", r.ranking.size() < 2 ? "" : r.ranking[1].label},
                   {"expected", r.expected_second_label},
                   {"ee", Real(r.expected_second_ee)},
                   {"is_expected", r.second_is_expected},
                   {"diameter", r.second_diameter}};
    j["separation"] = Real(r.separation);
    j["diameters_ok"] = r.diameters_ok;
    j["passed"] = r.passed;
    Json ranking = Json::array();
    for (const auto& s : r.ranking) {
      ranking.push_back({{"label", s.label}, {"ee", Real(s.ee)}, {"multiplicity", s.multiplicity}});
    }
    j["ranking"] = ranking;
    j["scope"] = r.scope_note;
    j["failures"] = r.failures;
    return Dump(j);
  }
  std::ostringstream out;
  if (format == OutputFormat::kCsv) {
    out << "rank,label,ee,multiplicity\n";
    for (std::size_t i = 0; i < r.ranking.size(); ++i) {
      out << i + 1 << ',' << CsvField(r.ranking[i].label) << ',' << FormatReal(r.ranking[i].ee)
          << ',' << r.ranking[i].multiplicity << '\n';
    }
    return out.str();
  }
  out << "n_over " << r.n_over << ", k " << r.k << ", n " << r.n_over * (r.k - 1) << ", "
      << r.catalog_size << " catalog entries, " << r.ranking.size() << " distinct EE values\n";
  if (r.ranking.size() >= 2) {
    out << "max    " << r.ranking[0].label << " EE " << FormatReal(r.ranking[0].ee) << " diameter "
        << r.max_diameter << (r.max_is_expected ? "" : "  (expected " + r.expected_max_label + ")")
        << '\n';
    out << "second " << r.ranking[1].label << " EE " << FormatReal(r.ranking[1].ee)
        << " diameter " << r.second_diameter
        << (r.second_is_expected ? "" : "  (expected " + r.expected_second_label + ")") << '\n';
  }
  out << "scope: " << r.scope_note << '\n';
  for (const auto& f : r.failures) out << "failure: " << f << '\n';
  out << (r.passed ? "passed" : "FAILED") << '\n';
  return out.str();
}

std::string FormatSweep(const BoundSweepResult& result, std::uint64_t seed, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    Json j;
    j["seed"] = seed;
    j["instances"] = result.instances;
    j["edgeless_instances"] = result.edgeless_instances;
    j["reports"] = result.reports;
    j["failures"] = result.failures;
    j["passed"] = result.failures.empty();
    return Dump(j);
  }
  std::ostringstream out;
  if (format == OutputFormat::kCsv) {
    out << "seed,instances,edgeless_instances,reports,failures\n"
        << seed << ',' << result.instances << ',' << result.edgeless_instances << ','
        << result.reports << ',' << result.failures.size() << '\n';
    return out.str();
  }
  out << "seed " << seed << ": " << result.instances << " hypergraphs (" << result.edgeless_instances
      << " edgeless), " << result.reports << " reports, " << result.failures.size()
      << " failures\n";
  for (const auto& f : result.failures) out << "failure: " << f << '\n';
  return out.str();
}

std::string FormatCatalog(const std::vector<CatalogEntry>& catalog, OutputFormat format) {
  Json arr = Json::array();
  std::ostringstream out;
  if (format == OutputFormat::kCsv) out << "label,cycle_length,n,m,ee\n";
  for (const auto& e : catalog) {
    const double ee = EstradaIndex(ComputeSpectrum(e.graph));
    switch (format) {
      case OutputFormat::kJson:
        arr.push_back({{"label", e.label},
                       {"cycle_length", e.cycle_length},
                       {"n", e.graph.order()},
                       {"m", e.graph.size()},
                       {"ee", Real(ee)}});
        break;
      case OutputFormat::kCsv:
        out << CsvField(e.label) << ',' << e.cycle_length << ',' << e.graph.order() << ','
            << e.graph.size() << ',' << FormatReal(ee) << '\n';
        break;
      case OutputFormat::kText:
        out << e.label << "  EE " << FormatReal(ee) << '\n';
        break;
    }
  }
  if (format == OutputFormat::kJson) return Dump(arr);
  if (format == OutputFormat::kText) out << catalog.size() << " entries\n";
  return out.str();
}

}  // namespace hyperee
