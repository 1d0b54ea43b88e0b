// End-to-end analysis of one complex, serialized as a versioned JSON report.
//
// Key order is fixed and no field depends on wall-clock time unless timing is
// requested, so equal inputs and options give byte-identical reports.
#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "toric/cone.hpp"
#include "toric/graph.hpp"
#include "toric/grobner.hpp"

namespace toric {

inline constexpr int kReportSchema = 1;

struct AnalysisOptions {
  int max_normality_height = 0;  ///< 0 means n
  int radical_bound = kDefaultRadicalBound;
  int kernel_bound = kDefaultKernelBound;
  int perfect_cap = kDefaultPerfectCap;
  std::size_t point_budget = kDefaultPointBudget;
  bool timing = false;
};

/// Options with defaults taken from TORIC_MAX_NORMALITY_HEIGHT, TORIC_RADICAL_BOUND,
/// TORIC_KERNEL_BOUND, TORIC_PERFECT_CAP and TORIC_POINT_BUDGET when set.
AnalysisOptions options_from_environment();

using Json = nlohmann::ordered_json;

/// Full report. Every verification appears under "checks" as PASS, FAIL or
/// SKIPPED; "status" is FAIL if any check failed.
Json analyze(const SimplicialComplex& c, const AnalysisOptions& options = {});

/// Face order, binomials and verification verdicts. Throws `NotQuasiForest`.
Json gb_report(const SimplicialComplex& c, const AnalysisOptions& options = {});

/// Line-oriented rendering of a report object.
std::string render_text(const Json& report);

bool passed(const Json& report);

}  // namespace toric
