#include "doctest.h"
#include "strip/instances.hpp"
#include "strip/oracle.hpp"
#include "strip/pipeline.hpp"
#include "strip/report.hpp"
#include "strip/svg.hpp"

using namespace strip;

TEST_CASE("svg flips the y axis") {
  const Instance inst(10, {Rect{0, 4, 2}, Rect{1, 3, 5}});
  const Packing p{{{0, 0, 0, false}, {1, 0, 2, false}}};
  RenderOptions opt;
  opt.cell = 2;
  const std::string svg = RenderSvg(inst, p, opt);
  // height 7: the bottom rect ends at the image bottom
  CHECK(svg.find("<rect id=\"r0\" x=\"0\" y=\"10\" width=\"8\" height=\"4\"") != std::string::npos);
  CHECK(svg.find("<rect id=\"r1\" x=\"0\" y=\"0\" width=\"6\" height=\"10\"") != std::string::npos);
  CHECK(svg.find("width=\"20\" height=\"14\"") != std::string::npos);
  opt.cell = 0;
  CHECK_THROWS_AS(RenderSvg(inst, p, opt), Error);
}

TEST_CASE("svg colors by class and outlines containers") {
  const Instance inst(100, {Rect{0, 100, 60}, Rect{1, 2, 2}});
  const Packing p{{{0, 0, 0, false}, {1, 0, 60, false}}};
  RenderOptions opt;
  opt.params = ClassParams::FromHeights(R(1, 4), R(1, 3), 1, R(1, 4), R(1, 8), 100, 100);
  opt.containers.push_back(Container{Box{0, 0, 100, 60}, Orientation::kHorizontal});
  opt.regions.push_back(BoxRegion{Box{0, 60, 100, 10}, BoxKind::kAuxiliary, "B_S"});
  const std::string svg = RenderSvg(inst, p, opt);
  CHECK(svg.find("#4e79a7") != std::string::npos);  // large
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find(">B_S</text>") != std::string::npos);
  CHECK(svg == RenderSvg(inst, p, opt));
}

TEST_CASE("run reports") {
  const GuillotineWitness w = GenGuillotine(100, 100, 1, 30, 2, {CutStyle::kStructured, 1});
  PipelineConfig cfg;
  cfg.mode = Mode::kGuided;
  const ClassParams params = ChooseParams(w.instance, w.opt, cfg);
  const BoxPartitionOracle o = DeriveOracleFromWitness(w, params);
  const GuidedResult g = RunGuided(w.instance, w.packing, w.opt, o, cfg);
  const std::string text = FormatGuidedReport(g);
  for (const char* key : {"height: ", "opt: ", "c: ", "holds: "}) {
    CHECK(text.find(key) != std::string::npos);
  }
  CHECK(text.find("height: " + std::to_string(g.height) + "\n") != std::string::npos);

  const HeuristicResult h = RunHeuristic(w.instance);
  CHECK(FormatHeuristicReport(h).find("ratio: ") != std::string::npos);

  RunReport rep;
  rep.rows.push_back(ReportRow{"b", "heuristic", 12, {10, 11}, R(12, 11), 1.5, ""});
  rep.rows.push_back(ReportRow{"a", "guided", 15, {10, 11}, R(15, 11), 2.5, "c=1"});
  const std::string table = rep.Table();
  CHECK(table.find("a ") < table.find("b "));
  const std::string lines = rep.Lines();
  CHECK(lines.find("instance=a") < lines.find("instance=b"));
  CHECK(lines.find("ratio=15/11") != std::string::npos);
}
