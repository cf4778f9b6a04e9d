// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "oracles.hpp"
#include "strip/containers.hpp"
#include "strip/instances.hpp"
#include "strip/knapsack.hpp"
#include "strip/oracle.hpp"
#include "strip/pipeline.hpp"
#include "strip/shelf.hpp"
#include "strip/vertical_box.hpp"

using namespace strip;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int64_t trials = 0;
  int64_t violations = 0;
  std::string detail;
  std::string first_failure;

  void Fail(const std::string& what) {
    if (violations++ == 0) first_failure = what;
  }
};

double Seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string Fmt(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// 1. Height <= h_max + 2a/W for every generated instance.
Outcome NfdhHeight() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(1001);
  for (int t = 0; t < 10'000; ++t) {
    const int64_t W = rng.Uniform(1, 1000);
    const int n = static_cast<int>(rng.Uniform(1, 200));
    const int64_t hmax_gen = rng.Uniform(1, 1000);
    const Instance inst = GenUniform(n, W, {1, W}, {1, hmax_gen}, static_cast<uint64_t>(t));
    const StripResult r = NfdhStrip(inst.rects(), W);
    int64_t hmax = 0, area = 0;
    for (const Rect& x : inst.rects()) {
      hmax = std::max(hmax, x.h);
      area += x.w * x.h;
    }
    ++o.trials;
    const bool feasible = oracle::PairwiseFeasible(inst, r.packing);
    if (!feasible || Rational(r.height) > hmax + Rational(2 * area, W)) {
      o.Fail("instance " + std::to_string(t));
    }
  }
  const double s = Seconds(t0);
  if (s >= 60) o.Fail("runtime " + Fmt(s) + " s");
  o.detail = Fmt(s) + " s";
  return o;
}

// 2. Leftovers imply packed area >= (a - w)(b - h).
Outcome NfdhArea() {
  Outcome o;
  Rng rng(2002);
  int64_t with_leftovers = 0;
  for (int t = 0; t < 10'000; ++t) {
    const int64_t a = rng.Uniform(1, 200);
    const int64_t b = rng.Uniform(1, 200);
    const int64_t wmax = rng.Uniform(1, a);
    const int64_t hmax = rng.Uniform(1, b);
    const int n = static_cast<int>(rng.Uniform(1, 150));
    std::vector<Rect> rects;
    int64_t w = 0, h = 0;
    for (int i = 0; i < n; ++i) {
      rects.push_back(Rect{i, rng.Uniform(1, wmax), rng.Uniform(1, hmax)});
      w = std::max(w, rects.back().w);
      h = std::max(h, rects.back().h);
    }
    const ShelfLayout l = NfdhIntoBox(rects, a, b);
    ++o.trials;
    int64_t placed = 0;
    for (const Placement& p : l.Placements()) placed += rects[static_cast<size_t>(p.rect_id)].Area();
    if (placed != l.packed_area) o.Fail("packed area mismatch in trial " + std::to_string(t));
    if (l.leftover.empty()) continue;
    ++with_leftovers;
    if (placed < (a - w) * (b - h)) o.Fail("trial " + std::to_string(t));
  }
  o.detail = std::to_string(with_leftovers) + " trials with leftovers";
  return o;
}

// 3. Repacking: sum f = sum g and |G| >= gamma*w/(1+eps-2alpha+gamma).
Outcome Repack() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Rational alpha = R(1, 3);
  const Rational epss[] = {R(1, 4), R(1, 8), R(1, 16)};
  Rational min_slack = 1000;
  for (int t = 0; t < 12'000; ++t) {
    const Rational eps = epss[t % 3];
    const Rational delta_h = eps / (1 + (t / 3) % 3);
    const VerticalBoxSample s = GenVerticalBox(500, eps, alpha, delta_h, static_cast<uint64_t>(t));
    const BoxProcessing bp = ProcessVerticalBox(s.state);
    const StripeProfile& p = bp.repacked.profile;
    ++o.trials;
    const int64_t sf = std::accumulate(p.f.begin(), p.f.end(), int64_t{0});
    const int64_t sg = std::accumulate(p.g.begin(), p.g.end(), int64_t{0});
    const Rational gamma = eps * delta_h / 2;
    const Rational bound = gamma * s.state.width / (1 + eps - 2 * alpha + gamma);
    const Rational good(static_cast<int64_t>(p.good.size()));
    if (sf != sg) o.Fail("sum f != sum g in state " + std::to_string(t));
    if (good < bound) o.Fail("|G| below bound in state " + std::to_string(t));
    min_slack = std::min<Rational>(min_slack, good / s.state.width - bound / s.state.width);
  }
  const double sec = Seconds(t0);
  if (sec >= 300) o.Fail("runtime " + Fmt(sec) + " s");
  o.detail = Fmt(sec) + " s, min (|G|-bound)/w = " + Fmt(ToDouble(min_slack), 4);
  return o;
}

// 4. Unit-slice containers: count <= d(q+1)^d, area preserved.
Outcome UnitSlices() {
  Outcome o;
  Rng rng(4004);
  for (int t = 0; t < 1000; ++t) {
    const int64_t d = rng.Uniform(1, 3);
    const int64_t q = rng.Uniform(1, 3);
    const int64_t box_h = d * rng.Uniform(1, 10);
    const int64_t box_w = rng.Uniform(1, 40);
    std::vector<int64_t> heights;
    for (int64_t i = 0; i < q; ++i) heights.push_back(rng.Uniform((box_h + d - 1) / d, box_h));
    std::vector<Slice> slices;
    int64_t area = 0;
    for (int64_t c = 0; c < box_w; ++c) {
      int64_t used = 0;
      for (int k = 0; k < 5; ++k) {
        const int64_t h = heights[static_cast<size_t>(rng.Uniform(0, q - 1))];
        if (used + h > box_h) continue;
        slices.push_back(Slice{static_cast<int64_t>(slices.size()), c, used, h});
        used += h;
        area += h;
      }
    }
    const SliceContainers r = RearrangeUnitSlices(slices, box_w, box_h, d, q);
    ++o.trials;
    int64_t bound = d;
    for (int64_t i = 0; i < d; ++i) bound *= q + 1;
    int64_t carea = 0;
    for (const Container& c : r.containers) carea += c.region.w * c.region.h;
    if (static_cast<int64_t>(r.containers.size()) > bound) o.Fail("count in box " + std::to_string(t));
    if (carea != area) o.Fail("area in box " + std::to_string(t));
  }
  return o;
}

// 5. Greedy integralization discards at most one item per container.
Outcome IntegralDiscards() {
  Outcome o;
  Rng rng(5005);
  for (int t = 0; t < 1000; ++t) {
    const int nb = static_cast<int>(rng.Uniform(1, 8));
    std::vector<GreedyBin> bins;
    for (int b = 0; b < nb; ++b) bins.push_back(GreedyBin{rng.Uniform(1, 50), rng.Uniform(1, 60)});
    std::sort(bins.begin(), bins.end(),
              [](const GreedyBin& a, const GreedyBin& b) { return a.key > b.key; });
    // A sliced packing first: items may straddle a bin boundary, keys never
    // exceed the key of any bin they occupy.
    std::vector<GreedyItem> items;
    int64_t key = bins[0].key;
    int64_t carry = 0;
    for (size_t b = 0; b < bins.size(); ++b) {
      key = std::min(key, bins[b].key);
      int64_t room = bins[b].capacity;
      const int64_t part = std::min(carry, room);
      room -= part;
      carry -= part;
      while (room > 0) {
        const int64_t spill = b + 1 < bins.size() ? bins[b + 1].capacity : 0;
        const int64_t size = std::min(rng.Uniform(1, 15), room + spill);
        if (size > room && b + 1 < bins.size()) key = std::min(key, bins[b + 1].key);
        items.push_back(GreedyItem{static_cast<int64_t>(items.size()), key, size});
        carry = size - std::min(size, room);
        room -= std::min(size, room);
        if (rng.Coin(1, 4)) key = std::max<int64_t>(1, key - rng.Uniform(0, 3));
      }
    }
    ++o.trials;
    try {
      const IntegralResult r = Integralize(items, bins);
      if (static_cast<int64_t>(r.discarded.size()) > nb) o.Fail("input " + std::to_string(t));
    } catch (const Error& e) {
      o.Fail("input " + std::to_string(t) + ": " + e.what());
    }
  }
  return o;
}

// 6. DP feasibility verdict against exhaustive assignment.
Outcome Knapsacks() {
  Outcome o;
  Rng rng(6006);
  int64_t feasible = 0;
  for (int t = 0; t < 5000; ++t) {
    const int m = static_cast<int>(rng.Uniform(1, 4));
    const int n = static_cast<int>(rng.Uniform(0, 12));
    KnapsackInstance ki;
    std::vector<int64_t> caps;
    for (int j = 0; j < m; ++j) {
      caps.push_back(rng.Uniform(0, 20));
      ki.knapsacks.push_back(Knapsack{caps.back(), j});
    }
    std::vector<std::vector<int64_t>> ref;
    for (int i = 0; i < n; ++i) {
      ki.items.push_back(i);
      std::vector<int64_t> row, ref_row;
      for (int j = 0; j < m; ++j) {
        const bool inf = rng.Coin(1, 6);
        const int64_t s = rng.Uniform(1, 10);
        row.push_back(inf ? kInfinite : s);
        ref_row.push_back(inf ? -1 : s);
      }
      ki.size.push_back(row);
      ki.rotated.emplace_back(static_cast<size_t>(m), false);
      ref.push_back(ref_row);
    }
    ++o.trials;
    const auto got = SolveAssignment(ki);
    const bool expect = oracle::ExhaustiveAssign(ref, caps);
    feasible += expect;
    if (got.has_value() != expect) o.Fail("instance " + std::to_string(t));
    if (got && !AssignmentValid(ki, *got)) o.Fail("invalid assignment " + std::to_string(t));
  }
  o.detail = std::to_string(feasible) + " feasible";
  return o;
}

// 7. Guided pipeline on structured guillotine witnesses.
Outcome Guided() {
  Outcome o;
  const Rational eps = R(1, 4);
  Rational max_c = -1000;
  double max_ratio = 0;
  for (uint64_t seed = 1; seed <= 120; ++seed) {
    const GuillotineWitness w =
        GenGuillotine(100, 100, 1, 40, seed, {CutStyle::kStructured, 1});
    PipelineConfig cfg;
    cfg.mode = Mode::kGuided;
    cfg.eps = eps;
    cfg.alpha = R(1, 3);
    cfg.strictness = Strictness::kRelaxed;
    ++o.trials;
    try {
      const ClassParams p = ChooseParams(w.instance, w.opt, cfg);
      const BoxPartitionOracle bo = DeriveOracleFromWitness(w, p);
      cfg.params = p;
      const GuidedResult r = RunGuided(w.instance, w.packing, w.opt, bo, cfg);
      const bool feasible = oracle::PairwiseFeasible(w.instance, r.packing);
      int64_t height = 0;
      for (const Placement& pl : r.packing.placements) {
        const Rect& x = w.instance.rect(pl.rect_id);
        height = std::max(height, pl.y + (pl.rotated ? x.w : x.h));
      }
      const Rational bound = (1 + R(1, 3) + r.cert.c * eps) * w.opt;
      if (!feasible) o.Fail("witness " + std::to_string(seed) + " infeasible");
      if (height != r.height) o.Fail("witness " + std::to_string(seed) + " height mismatch");
      if (Rational(height) > bound || !r.cert.holds) {
        o.Fail("witness " + std::to_string(seed) + " certificate");
      }
      max_c = std::max<Rational>(max_c, r.cert.c);
      max_ratio = std::max(max_ratio, static_cast<double>(height) / static_cast<double>(w.opt));
    } catch (const std::exception& e) {
      o.Fail("witness " + std::to_string(seed) + ": " + e.what());
    }
  }
  o.detail = "max c = " + Fmt(ToDouble(max_c), 3) + ", max height/OPT = " + Fmt(max_ratio, 3);
  return o;
}

// 8. max{a, 1-2a} over the candidate alphas is smallest at 1/3.
Outcome AlphaChoice() {
  Outcome o;
  const std::vector<Rational> alphas{R(1, 3), R(2, 5), R(45, 100)};
  std::string detail;
  Rational best = 10;
  Rational arg = 0;
  for (const Rational& a : alphas) {
    const Rational v = std::max<Rational>(a, 1 - 2 * a);
    ++o.trials;
    if (v != BandFactor(a)) o.Fail("band factor mismatch");
    if (v < best) {
      best = v;
      arg = a;
    }
    detail += ToString(a) + "->" + ToString(v) + " ";
  }
  if (arg != R(1, 3) || best != R(1, 3)) o.Fail("minimizer " + ToString(arg));
  o.detail = detail + "min at " + ToString(arg);
  return o;
}

// 9. Sizes with rotations against sizes without.
Outcome RotationSizes() {
  Outcome o;
  std::vector<Container> grid;
  const int64_t side[] = {4, 9, 15, 23, 40};
  int64_t x = 0;
  for (int64_t cw : side) {
    int64_t y = 0;
    for (int64_t ch : side) {
      grid.push_back(Container{Box{x, y, cw, ch},
                               (cw + ch) % 2 ? Orientation::kHorizontal : Orientation::kVertical});
      y += ch;
    }
    x += cw;
  }
  const ClassParams p = ClassParams::FromHeights(R(1, 4), R(1, 3), 1, R(1, 4), R(1, 8), 100, x);
  Rng rng(9009);
  std::vector<Rect> rects;
  for (int i = 0; i < 1000; ++i) rects.push_back(Rect{i, rng.Uniform(1, 45), rng.Uniform(1, 45)});
  const KnapsackInstance plain = BuildSizes(rects, grid, false, p, 0);
  const KnapsackInstance rot = BuildSizes(rects, grid, true, p, 0);
  int64_t both = 0;
  for (size_t i = 0; i < rects.size(); ++i) {
    for (size_t j = 0; j < grid.size(); ++j) {
      ++o.trials;
      const Rect& r = rects[i];
      const Box& c = grid[j].region;
      const int64_t b0 = plain.size[i][j];
      const int64_t b1 = rot.size[i][j];
      if (b0 != kInfinite && b1 > b0) o.Fail("monotonicity at rect " + std::to_string(i));
      const bool fits = r.w <= c.w && r.h <= c.h;
      const bool fits_rot = r.h <= c.w && r.w <= c.h;
      if (fits && fits_rot) {
        ++both;
        if (b1 != std::min(r.w, r.h)) o.Fail("min(w,h) at rect " + std::to_string(i));
      } else if (fits != fits_rot) {
        // Capacity runs along the height of horizontal containers.
        const bool hor = grid[j].orientation == Orientation::kHorizontal;
        const int64_t expect = fits ? (hor ? r.h : r.w) : (hor ? r.w : r.h);
        if (b1 != expect) o.Fail("single orientation at rect " + std::to_string(i));
      }
      if (!fits && !fits_rot && b1 != kInfinite) o.Fail("finite size at rect " + std::to_string(i));
    }
  }
  o.detail = std::to_string(both) + " pairs fit both ways";
  return o;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 10. gen/pack/render twice with the same flags.
Outcome Determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("stripack_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::ostringstream sink;
  std::string runs[2];
  for (int run = 0; run < 2; ++run) {
    const std::string tag = std::to_string(run);
    std::string all;
    for (const std::string kind : {"guillotine", "uniform", "partition"}) {
      stripack::GenFlags g;
      g.kind = kind;
      g.structured = kind == "guillotine";
      g.width = 100;
      g.height = 100;
      g.seed = 42;
      g.out = (dir / (kind + tag + ".inst")).string();
      if (kind == "guillotine") {
        g.witness_out = (dir / ("w" + tag)).string();
        g.oracle_out = (dir / ("o" + tag)).string();
      }
      stripack::PackFlags pk;
      pk.in = g.out;
      pk.out = (dir / (kind + tag + ".pack")).string();
      stripack::RenderFlags rf;
      rf.in = pk.out;
      rf.out = (dir / (kind + tag + ".svg")).string();
      rf.opt = 100;
      const int codes = stripack::CmdGen(g, sink, sink) + stripack::CmdPack(pk, sink, sink) +
                        stripack::CmdRender(rf, sink, sink);
      if (codes != 0) o.Fail(kind + " commands failed");
      all += Slurp(g.out) + Slurp(pk.out) + Slurp(rf.out);
      if (kind == "guillotine") {
        stripack::PackFlags gp = pk;
        gp.mode = "guided";
        gp.witness = g.witness_out;
        gp.oracle = g.oracle_out;
        gp.out = (dir / ("guided" + tag + ".pack")).string();
        if (stripack::CmdPack(gp, sink, sink) != 0) o.Fail("guided pack failed");
        all += Slurp(g.witness_out) + Slurp(g.oracle_out) + Slurp(gp.out);
      }
      ++o.trials;
    }
    runs[run] = all;
  }
  if (runs[0] != runs[1]) o.Fail("outputs differ");
  o.detail = std::to_string(runs[0].size()) + " bytes compared";
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "NFDH height <= h_max + 2a/W", NfdhHeight},
      {2, "NFDH box area >= (a-w)(b-h) with leftovers", NfdhArea},
      {3, "repacking conservation and |G| bound", Repack},
      {4, "unit-slice container count and area", UnitSlices},
      {5, "integralization discards <= t", IntegralDiscards},
      {6, "knapsack DP matches exhaustive oracle", Knapsacks},
      {7, "guided pipeline verifies and certifies", Guided},
      {8, "alpha = 1/3 minimizes max{alpha, 1-2alpha}", AlphaChoice},
      {9, "rotation size matrix", RotationSizes},
      {10, "byte-identical gen/pack/render", Determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    const bool ok = o.violations == 0 && o.trials > 0;
    failed += !ok;
    std::printf("%s criterion %d: %s (trials=%lld violations=%lld%s%s)%s%s\n", ok ? "PASS" : "FAIL",
                c.id, c.name.c_str(), static_cast<long long>(o.trials),
                static_cast<long long>(o.violations), o.detail.empty() ? "" : ", ",
                o.detail.c_str(), o.first_failure.empty() ? "" : " first: ",
                o.first_failure.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
