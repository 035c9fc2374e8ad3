#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cocharlab/engine.hpp"
#include "cocharlab/oracle.hpp"
#include "cocharlab/published_tables.hpp"

namespace cocharlab {

enum class OutputFormat { json, csv, latex };

struct ReportRow {
  std::string key;
  std::optional<Int> engine;
  std::vector<PublishedValue> published;
  std::optional<Int> oracle;
  std::string verdict;
};

// Engine / published / oracle side by side; the oracle column is the
// authoritative one and verdicts are phrased relative to it.
struct DiscrepancyReport {
  int m = 0;
  std::string grading;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;  // degenerate-shape normalizations etc.
};

// Verdict of one row given which columns are present and equal.
std::string row_verdict(const std::optional<Int>& engine,
                        const std::vector<PublishedValue>& published,
                        const std::optional<Int>& oracle);

// gamma row plus one row per lambda |- n, (UT_m, phi) only.
DiscrepancyReport build_verify_report(int m, int n, int cap);

// Deterministic serialization; JSON carries {"schema":1,"m":...,
// "grading":...,"rows":[...],"notes":[...]}.
std::string emit_report(const DiscrepancyReport& r, OutputFormat format);

}  // namespace cocharlab
