#pragma once

// Plain-text run reports.

#include <string>
#include <vector>

#include "strip/pipeline.hpp"

namespace strip {

// "key: value" lines for one guided run.
std::string FormatGuidedReport(const GuidedResult& result);
std::string FormatHeuristicReport(const HeuristicResult& result);

struct ReportRow {
  std::string instance;
  std::string mode;
  int64_t height = 0;
  LowerBounds lower;
  Rational ratio;
  double wall_ms = 0;
  std::string stats;  // free-form per-stage summary
};

struct RunReport {
  std::vector<ReportRow> rows;

  // Aligned table sorted by instance name, followed by a summary line.
  std::string Table() const;
  // One "key=value ..." line per row.
  std::string Lines() const;
};

}  // namespace strip
