#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "strip/geometry.hpp"
#include "strip/instances.hpp"

using namespace strip;

namespace {

Instance Two(int64_t W, Rect a, Rect b) { return Instance(W, {a, b}); }

}  // namespace

TEST_CASE("empty packing verifies at height 0") {
  const Instance inst(10, {});
  const VerificationReport r = VerifyPacking(inst, Packing{});
  CHECK(r.ok);
  CHECK(r.complete);
  CHECK(r.height == 0);
}

TEST_CASE("overlapping interiors are reported") {
  const Instance inst = Two(10, Rect{0, 4, 5}, Rect{1, 4, 5});
  const Packing p{{{0, 0, 0, false}, {1, 3, 0, false}}};
  const VerificationReport r = VerifyPacking(inst, p);
  CHECK_FALSE(r.ok);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == ViolationKind::kOverlap);
  CHECK_FALSE(oracle::PairwiseFeasible(inst, p));
}

TEST_CASE("touching rects are fine") {
  const Instance inst = Two(10, Rect{0, 4, 5}, Rect{1, 6, 3});
  const Packing p{{{0, 0, 0, false}, {1, 4, 0, false}}};
  const VerificationReport r = VerifyPacking(inst, p);
  CHECK(r.ok);
  CHECK(r.height == 5);
  CHECK(oracle::PairwiseFeasible(inst, p));
}

TEST_CASE("structural violations are all listed") {
  const Instance inst = Two(10, Rect{0, 4, 5}, Rect{1, 6, 3});
  const Packing p{{{0, 8, 0, false}, {7, 0, 0, false}, {0, 0, 9, false}, {1, 0, 0, true}}};
  const VerificationReport r = VerifyPacking(inst, p);
  CHECK_FALSE(r.ok);
  int unknown = 0, dup = 0, out = 0, rot = 0;
  for (const Violation& v : r.violations) {
    unknown += v.kind == ViolationKind::kUnknownRect;
    dup += v.kind == ViolationKind::kDuplicatePlacement;
    out += v.kind == ViolationKind::kOutOfStrip;
    rot += v.kind == ViolationKind::kIllegalRotation;
  }
  CHECK(unknown == 1);
  CHECK(dup == 1);
  CHECK(out >= 1);
  CHECK(rot == 1);
}

TEST_CASE("container discipline") {
  const Instance inst(10, {Rect{0, 3, 4}, Rect{1, 3, 2}, Rect{2, 10, 4}});
  const Container vert{Box{0, 0, 6, 4}, Orientation::kVertical};
  SUBCASE("single rect filling it") {
    const Instance one(10, {Rect{0, 6, 4}});
    const Packing p{{{0, 0, 0, false}}};
    const std::vector<int64_t> m{0};
    CHECK(VerifyContainerDiscipline(one, p, vert, m).ok);
  }
  SUBCASE("side by side") {
    const Packing p{{{0, 0, 0, false}, {1, 3, 0, false}}};
    const std::vector<int64_t> m{0, 1};
    CHECK(VerifyContainerDiscipline(inst, p, vert, m).ok);
  }
  SUBCASE("stacked") {
    const Packing p{{{0, 0, 0, false}, {1, 0, 4, false}}};
    const std::vector<int64_t> m{0, 1};
    const Container tall{Box{0, 0, 6, 8}, Orientation::kVertical};
    CHECK_FALSE(VerifyContainerDiscipline(inst, p, tall, m).ok);
    const Container hor{Box{0, 0, 6, 8}, Orientation::kHorizontal};
    CHECK(VerifyContainerDiscipline(inst, p, hor, m).ok);
  }
  SUBCASE("member outside") {
    const Packing p{{{2, 0, 0, false}}};
    const std::vector<int64_t> m{2};
    const DisciplineCheck c = VerifyContainerDiscipline(inst, p, vert, m);
    CHECK_FALSE(c.ok);
    CHECK_FALSE(c.reason.empty());
  }
}

TEST_CASE("lower bounds") {
  CHECK(ComputeLowerBounds(Instance(10, {Rect{0, 3, 7}})).height == 7);
  CHECK(ComputeLowerBounds(Instance(10, {Rect{0, 3, 7}})).area == 3);
  const LowerBounds e = ComputeLowerBounds(Instance(10, {}));
  CHECK(e.height == 0);
  CHECK(e.area == 0);
  const LowerBounds two = ComputeLowerBounds(Instance(10, {Rect{0, 10, 4}, Rect{1, 10, 4}}));
  CHECK(two.height == 4);
  CHECK(two.area == 8);
  // With rotations a 2x9 rect can lie down.
  const LowerBounds rot = ComputeLowerBounds(Instance(10, {Rect{0, 2, 9}}, true));
  CHECK(rot.height == 2);
  // ...but a rect wider than the strip must stand up.
  const LowerBounds forced = ComputeLowerBounds(Instance(10, {Rect{0, 12, 3}}, true));
  CHECK(forced.height == 12);
}

TEST_CASE("instance invariants") {
  CHECK_THROWS_AS(Instance(5, {Rect{0, 6, 1}}), Error);
  CHECK_NOTHROW(Instance(5, {Rect{0, 6, 1}}, true));
  CHECK_THROWS_AS(Instance(5, {Rect{0, 6, 7}}, true), Error);
  CHECK_THROWS_AS(Instance(5, {Rect{0, 0, 1}}), Error);
  CHECK_THROWS_AS(Instance(5, {Rect{1, 1, 1}}), Error);
}

TEST_CASE("verifier agrees with the pairwise and raster oracles") {
  Rng rng(99);
  int feasible = 0;
  for (int t = 0; t < 1000; ++t) {
    const int64_t W = rng.Uniform(1, 30);
    const int n = static_cast<int>(rng.Uniform(0, 8));
    const bool rot = rng.Coin(1, 3);
    std::vector<Rect> rects;
    Packing p;
    for (int i = 0; i < n; ++i) {
      const int64_t w = rng.Uniform(1, W);
      const int64_t h = rng.Uniform(1, 10);
      rects.push_back(Rect{i, w, h});
      const bool r = rot && w <= 10 && h <= W && rng.Coin(1, 2);
      const int64_t ew = r ? h : w;
      p.placements.push_back(Placement{i, rng.Uniform(0, W - ew), rng.Uniform(0, 20), r});
    }
    const Instance inst(W, rects, rot);
    const VerificationReport vr = VerifyPacking(inst, p);
    const bool ok = vr.ok && vr.complete;
    CHECK(ok == oracle::PairwiseFeasible(inst, p));
    CHECK(ok == oracle::RasterFeasible(inst, p));
    feasible += ok;
  }
  CHECK(feasible > 50);
}
