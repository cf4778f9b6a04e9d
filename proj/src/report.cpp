#include "strip/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace strip {

namespace {

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string FormatGuidedReport(const GuidedResult& r) {
  std::ostringstream out;
  const ClassParams& p = r.params;
  out << "mode: guided\n";
  out << "height: " << r.height << '\n';
  out << "opt: " << r.cert.opt << '\n';
  out << "opt_prime: " << r.cert.opt_prime << '\n';
  out << "eps: " << ToString(p.eps) << '\n';
  out << "alpha: " << ToString(p.alpha) << '\n';
  out << "k: " << p.k << '\n';
  out << "ladder_index: " << p.ladder_index << '\n';
  out << "delta_h: " << ToString(p.delta_h) << '\n';
  out << "mu_h: " << ToString(p.mu_h) << '\n';
  out << "gamma: " << ToString(p.gamma) << '\n';
  static const char* kNames[] = {"large", "tall", "vertical", "horizontal", "small", "medium"};
  for (size_t i = 0; i < r.class_counts.size(); ++i) {
    out << "count_" << kNames[i] << ": " << r.class_counts[i] << '\n';
  }
  out << "containers: " << r.containers.size() << '\n';
  out << "vertical_boxes: " << r.vertical_boxes.size() << '\n';
  for (size_t i = 0; i < r.vertical_boxes.size(); ++i) {
    const VerticalBoxStats& v = r.vertical_boxes[i];
    out << "vertical_box_" << i << ": w=" << v.width << " h=" << v.height << " good=" << v.good
        << " subboxes=" << v.subboxes << " discarded_slices=" << v.discarded_slices << '\n';
  }
  out << "knapsack_components: " << r.knapsack.components << '\n';
  out << "knapsack_fallback_components: " << r.knapsack.fallback_components << '\n';
  out << "small_in_grid: " << r.in_grid_small << '\n';
  for (const CertTerm& t : r.cert.terms) {
    out << "term " << t.name << ": " << t.height << " (budget " << ToString(t.budget)
        << (t.within ? ", within" : ", exceeded") << ")\n";
  }
  out << "certificate_c: " << ToString(r.cert.c) << " (~" << Fixed(ToDouble(r.cert.c), 3)
      << ")\n";
  out << "certificate_bound: " << ToString(r.cert.bound) << '\n';
  out << "certificate_holds: " << (r.cert.holds ? "yes" : "no") << '\n';
  out << "asymptotic_regime: " << (r.cert.in_regime ? "yes" : "no (outside asymptotic regime)")
      << '\n';
  for (const ConstraintRow& row : r.constraints.rows) {
    out << "constraint " << row.name << ": " << (row.satisfied ? "ok" : "violated") << '\n';
  }
  for (const std::string& w : r.warnings) out << "warning: " << w << '\n';
  return out.str();
}

std::string FormatHeuristicReport(const HeuristicResult& r) {
  std::ostringstream out;
  out << "mode: heuristic\n";
  out << "algorithm: " << r.algorithm << '\n';
  out << "height: " << r.height << '\n';
  out << "lower_bound_height: " << r.lower.height << '\n';
  out << "lower_bound_area: " << r.lower.area << '\n';
  out << "ratio: " << ToString(r.ratio) << " (~" << Fixed(ToDouble(r.ratio), 4) << ")\n";
  return out.str();
}

std::string RunReport::Table() const {
  std::vector<ReportRow> sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.instance < b.instance; });
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %-9s %8s %8s %8s %8s %10s  %s\n", "instance", "mode",
                "height", "lb_h", "lb_area", "ratio", "ms", "stats");
  out << line;
  double worst = 0;
  double sum = 0;
  for (const ReportRow& r : sorted) {
    const double ratio = ToDouble(r.ratio);
    worst = std::max(worst, ratio);
    sum += ratio;
    std::snprintf(line, sizeof line, "%-24s %-9s %8lld %8lld %8lld %8.4f %10.2f  %s\n",
                  r.instance.c_str(), r.mode.c_str(), static_cast<long long>(r.height),
                  static_cast<long long>(r.lower.height), static_cast<long long>(r.lower.area),
                  ratio, r.wall_ms, r.stats.c_str());
    out << line;
  }
  out << "summary: rows=" << sorted.size();
  if (!sorted.empty()) {
    out << " mean_ratio=" << Fixed(sum / static_cast<double>(sorted.size()), 4)
        << " max_ratio=" << Fixed(worst, 4);
  }
  out << '\n';
  return out.str();
}

std::string RunReport::Lines() const {
  std::vector<ReportRow> sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.instance < b.instance; });
  std::ostringstream out;
  for (const ReportRow& r : sorted) {
    out << "instance=" << r.instance << " mode=" << r.mode << " height=" << r.height
        << " lb_height=" << r.lower.height << " lb_area=" << r.lower.area
        << " ratio=" << ToString(r.ratio) << " ms=" << Fixed(r.wall_ms, 2) << '\n';
  }
  return out.str();
}

}  // namespace strip
