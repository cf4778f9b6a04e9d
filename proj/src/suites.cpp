#include "strip/suites.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "strip/containers.hpp"
#include "strip/instances.hpp"
#include "strip/shelf.hpp"
#include "strip/vertical_box.hpp"

namespace strip {

namespace {

constexpr size_t kMaxFailures = 5;

void Fail(SuiteResult& res, const std::string& what) {
  ++res.violations;
  if (res.failures.size() < kMaxFailures) res.failures.push_back(what);
}

uint64_t TrialSeed(uint64_t seed, int64_t trial) {
  return seed * 0x9E3779B97F4A7C15ull + static_cast<uint64_t>(trial);
}

}  // namespace

SuiteResult SuiteNfdhHeight(int64_t trials, uint64_t seed) {
  SuiteResult res;
  res.name = "nfdh-height";
  Rng rng(seed);
  for (int64_t t = 0; t < trials; ++t) {
    const int64_t W = rng.Uniform(1, 1000);
    const int n = static_cast<int>(rng.Uniform(1, 200));
    const int64_t hmax = rng.Uniform(1, 1000);
    const Instance inst =
        GenUniform(n, W, Range{1, W}, Range{1, hmax}, TrialSeed(seed, t));
    ++res.trials;
    const StripResult sr = NfdhStrip(inst.rects(), W);
    const VerificationReport vr = VerifyPacking(inst, sr.packing);
    if (!vr.ok || !vr.complete) {
      Fail(res, "trial " + std::to_string(t) + ": infeasible packing");
      continue;
    }
    const Rational bound =
        Rational(MaxHeight(inst.rects())) + Rational(2 * TotalArea(inst.rects()), W);
    if (Rational(vr.height) > bound) {
      Fail(res, "trial " + std::to_string(t) + ": height " + std::to_string(vr.height) +
                    " > " + ToString(bound));
    }
  }
  return res;
}

SuiteResult SuiteNfdhArea(int64_t trials, uint64_t seed) {
  SuiteResult res;
  res.name = "nfdh-area";
  Rng rng(seed);
  int64_t with_leftover = 0;
  for (int64_t t = 0; t < trials; ++t) {
    const int64_t wmax = rng.Uniform(1, 60);
    const int64_t hmax = rng.Uniform(1, 60);
    const int64_t a = rng.Uniform(wmax, 4 * wmax + 20);
    const int64_t b = rng.Uniform(hmax, 4 * hmax + 20);
    const int n = static_cast<int>(rng.Uniform(1, 150));
    const Instance inst =
        GenUniform(n, a, Range{1, wmax}, Range{1, hmax}, TrialSeed(seed, t));
    ++res.trials;
    const ShelfLayout layout = NfdhIntoBox(inst.rects(), a, b);
    Packing packing{layout.Placements()};
    Instance placed(a, inst.rects());
    const VerificationReport vr = VerifyPacking(placed, packing);
    std::set<int64_t> missing;
    for (const Rect& r : layout.leftover) missing.insert(r.id);
    if (!vr.ok || vr.height > b ||
        packing.placements.size() + missing.size() != inst.size()) {
      Fail(res, "trial " + std::to_string(t) + ": infeasible box packing");
      continue;
    }
    if (layout.leftover.empty()) continue;
    ++with_leftover;
    const int64_t w = MaxWidth(inst.rects());
    const int64_t h = MaxHeight(inst.rects());
    if (layout.packed_area < (a - w) * (b - h)) {
      Fail(res, "trial " + std::to_string(t) + ": packed area " +
                    std::to_string(layout.packed_area) + " < " +
                    std::to_string((a - w) * (b - h)));
    }
  }
  res.notes.push_back("trials with leftovers: " + std::to_string(with_leftover));
  return res;
}

SuiteResult SuiteRepack(int64_t trials, uint64_t seed, const Rational& eps,
                        const Rational& alpha, int64_t max_width) {
  SuiteResult res;
  res.name = "repack";
  Rational min_ratio = 1;
  Rational min_bound = 1;
  int64_t bad_columns = 0;
  for (int64_t t = 0; t < trials; ++t) {
    const Rational delta_h = eps / (int64_t{1} << (t % 3));
    ++res.trials;
    try {
      const VerticalBoxSample s =
          GenVerticalBox(max_width, eps, alpha, delta_h, TrialSeed(seed, t));
      const BoxProcessing bp = ProcessVerticalBox(s.state);
      const StripeProfile& pf = bp.repacked.profile;
      const int64_t sf = std::accumulate(pf.f.begin(), pf.f.end(), int64_t{0});
      const int64_t sg = std::accumulate(pf.g.begin(), pf.g.end(), int64_t{0});
      if (sf != sg) {
        Fail(res, "trial " + std::to_string(t) + ": sum f " + std::to_string(sf) +
                      " != sum g " + std::to_string(sg));
      }
      const int64_t w = s.state.width;
      const Rational ratio(static_cast<int64_t>(pf.good.size()), w);
      const Rational bound = s.gamma / (1 + eps - 2 * alpha + s.gamma);
      if (ratio < bound) {
        Fail(res, "trial " + std::to_string(t) + ": |G|/w = " + ToString(ratio) + " < " +
                      ToString(bound));
      }
      for (size_t i = 0; i < pf.f.size(); ++i) {
        if (pf.g[i] >= pf.f[i]) continue;
        ++bad_columns;
        if (pf.f[i] - pf.g[i] < s.state.step) {
          Fail(res, "trial " + std::to_string(t) + ": bad column " + std::to_string(i) +
                        " misses the step");
        }
      }
      if (ratio < min_ratio) {
        min_ratio = ratio;
        min_bound = bound;
      }
    } catch (const Error& e) {
      Fail(res, "trial " + std::to_string(t) + ": " + e.what());
    }
  }
  res.notes.push_back("min |G|/w observed: " + ToString(min_ratio) + " (~" +
                      std::to_string(ToDouble(min_ratio)) + "), bound there " +
                      ToString(min_bound));
  res.notes.push_back("bad columns: " + std::to_string(bad_columns));
  return res;
}

SuiteResult SuiteUnitSlices(int64_t trials, uint64_t seed) {
  SuiteResult res;
  res.name = "slices";
  Rng rng(seed);
  for (int64_t t = 0; t < trials; ++t) {
    const int64_t d = rng.Uniform(1, 3);
    const int64_t q = rng.Uniform(1, 3);
    const int64_t box_h = rng.Uniform(d, 60);
    const int64_t box_w = rng.Uniform(1, 40);
    const int64_t min_h = (box_h + d - 1) / d;
    std::set<int64_t> heights;
    while (static_cast<int64_t>(heights.size()) < q && heights.size() < size_t(box_h - min_h + 1)) {
      heights.insert(rng.Uniform(min_h, box_h));
    }
    const std::vector<int64_t> hs(heights.begin(), heights.end());
    std::vector<Slice> slices;
    int64_t area = 0;
    for (int64_t c = 0; c < box_w; ++c) {
      int64_t y = 0;
      for (int tries = 0; tries < 4; ++tries) {
        const int64_t h = hs[static_cast<size_t>(rng.Uniform(0, int64_t(hs.size()) - 1))];
        if (y + h > box_h || rng.Coin(1, 5)) continue;
        slices.push_back(Slice{static_cast<int64_t>(slices.size()), c, y, h});
        y += h;
        area += h;
      }
    }
    ++res.trials;
    const std::string tag = "trial " + std::to_string(t) + ": ";
    try {
      const SliceContainers sc = RearrangeUnitSlices(slices, box_w, box_h, d, q);
      int64_t limit = d;
      for (int64_t i = 0; i < d; ++i) limit *= q + 1;
      if (static_cast<int64_t>(sc.containers.size()) > limit) {
        Fail(res, tag + std::to_string(sc.containers.size()) + " containers > " +
                      std::to_string(limit));
      }
      int64_t carea = 0;
      const Box box{0, 0, box_w, box_h};
      for (size_t i = 0; i < sc.containers.size(); ++i) {
        const Box& ci = sc.containers[i].region;
        carea += ci.w * ci.h;
        if (!box.Contains(ci)) Fail(res, tag + "container outside the box");
        for (size_t j = 0; j < i; ++j) {
          if (InteriorsOverlap(ci, sc.containers[j].region)) {
            Fail(res, tag + "containers overlap");
          }
        }
      }
      if (carea != area) {
        Fail(res, tag + "container area " + std::to_string(carea) + " != slice area " +
                      std::to_string(area));
      }
      if (sc.placed.size() != slices.size()) Fail(res, tag + "slices lost");
      for (const Slice& s : sc.placed) {
        const bool inside = std::any_of(sc.containers.begin(), sc.containers.end(),
                                        [&](const Container& c) { return c.region.Contains(s.box()); });
        if (!inside) Fail(res, tag + "slice outside every container");
      }
    } catch (const Error& e) {
      Fail(res, tag + e.what());
    }
  }
  return res;
}

SuiteResult SuiteIntegralize(int64_t trials, uint64_t seed) {
  SuiteResult res;
  res.name = "integral";
  Rng rng(seed);
  int64_t max_discards = 0;
  for (int64_t t = 0; t < trials; ++t) {
    const int nb = static_cast<int>(rng.Uniform(1, 8));
    std::vector<GreedyBin> bins;
    for (int i = 0; i < nb; ++i) bins.push_back(GreedyBin{rng.Uniform(1, 50), rng.Uniform(1, 40)});
    std::sort(bins.begin(), bins.end(),
              [](const GreedyBin& a, const GreedyBin& b) { return a.key > b.key; });
    // Walk the bins in key order and cut items that may be sliced across a
    // bin boundary; an item spanning bins takes the smallest key it meets.
    std::vector<GreedyItem> items;
    size_t bin = 0;
    int64_t room = bins[0].capacity;
    while (bin < bins.size()) {
      if (rng.Coin(1, 6)) {
        // leave some capacity unused
        const int64_t skip = rng.Uniform(1, room);
        room -= skip;
      } else {
        int64_t size = rng.Uniform(1, 15);
        int64_t key = bins[bin].key;
        int64_t left = size;
        size_t b = bin;
        int64_t r = room;
        while (left > r && b + 1 < bins.size()) {
          left -= r;
          ++b;
          r = bins[b].capacity;
          key = std::min(key, bins[b].key);
        }
        if (left > r) size -= left - r, left = r;
        if (size > 0) {
          items.push_back(GreedyItem{static_cast<int64_t>(items.size()), rng.Uniform(1, key), size});
        }
        bin = b;
        room = r - left;
      }
      if (room == 0 && ++bin < bins.size()) room = bins[bin].capacity;
    }
    ++res.trials;
    const std::string tag = "trial " + std::to_string(t) + ": ";
    try {
      const IntegralResult ir = Integralize(items, bins);
      if (ir.discarded.size() > bins.size()) {
        Fail(res, tag + std::to_string(ir.discarded.size()) + " discards > " +
                      std::to_string(bins.size()) + " bins");
      }
      if (ir.assigned.size() + ir.discarded.size() != items.size()) {
        Fail(res, tag + "items lost");
      }
      std::vector<int64_t> used(bins.size(), 0);
      for (const GreedyAssignment& a : ir.assigned) {
        const GreedyItem& it = items[static_cast<size_t>(a.id)];
        const size_t bi = static_cast<size_t>(a.bin);
        used[bi] += it.size;
        if (it.key > bins[bi].key) Fail(res, tag + "key exceeds its bin");
      }
      for (size_t i = 0; i < bins.size(); ++i) {
        if (used[i] > bins[i].capacity) Fail(res, tag + "bin overfilled");
      }
      max_discards = std::max<int64_t>(max_discards, static_cast<int64_t>(ir.discarded.size()));
    } catch (const Error& e) {
      Fail(res, tag + e.what());
    }
  }
  res.notes.push_back("max discards in a trial: " + std::to_string(max_discards));
  return res;
}

std::vector<std::string> SuiteNames() {
  return {"nfdh-height", "nfdh-area", "repack", "slices", "integral"};
}

SuiteResult RunSuite(const std::string& name, int64_t trials, uint64_t seed,
                     const Rational& eps, const Rational& alpha) {
  if (name == "nfdh-height") return SuiteNfdhHeight(trials, seed);
  if (name == "nfdh-area") return SuiteNfdhArea(trials, seed);
  if (name == "repack") return SuiteRepack(trials, seed, eps, alpha);
  if (name == "slices") return SuiteUnitSlices(trials, seed);
  if (name == "integral") return SuiteIntegralize(trials, seed);
  throw Error("unknown suite: " + name);
}

}  // namespace strip
