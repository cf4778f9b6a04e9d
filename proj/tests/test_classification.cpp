#include <array>

#include "doctest.h"
#include "oracles.hpp"
#include "strip/classification.hpp"
#include "strip/instances.hpp"

using namespace strip;

namespace {

int64_t Num(const Rational& r) { return static_cast<int64_t>(numerator(r)); }
int64_t Den(const Rational& r) { return static_cast<int64_t>(denominator(r)); }

oracle::Thresholds Ref(const ClassParams& p) {
  return {Num(p.delta_h), Den(p.delta_h), Num(p.mu_h), Den(p.mu_h), Num(p.delta_w),
          Den(p.delta_w), Num(p.mu_w),    Den(p.mu_w), Num(p.alpha), Den(p.alpha)};
}

ClassLabel FromRef(oracle::Label l) { return static_cast<ClassLabel>(static_cast<int>(l)); }

}  // namespace

TEST_CASE("dependent thresholds") {
  const ClassParams p = ClassParams::FromHeights(R(1, 4), R(1, 3), 1, R(1, 8), R(1, 16), 100, 200);
  CHECK(p.delta_w == R(1, 4) * R(1, 8) / 12);
  CHECK(p.mu_w == R(1, 4) * R(1, 16) / 12);
  CHECK(p.gamma == R(1, 64));
  CHECK_NOTHROW(p.Validate());
  ClassParams bad = p;
  bad.mu_h = R(1, 4);
  CHECK_THROWS_AS(bad.Validate(), Error);
  ClassParams uncoupled = p;
  uncoupled.mu_w = R(1, 1000);
  CHECK_THROWS_AS(uncoupled.Validate(), Error);
}

TEST_CASE("narrow tall rect at desk scale is large") {
  const ClassParams p = ClassParams::FromHeights(R(1, 5), R(1, 3), 1, R(1, 10), R(1, 100), 100, 100);
  CHECK(p.delta_w == R(1, 600));
  CHECK(Classify(1, 50, p) == ClassLabel::kLarge);
}

TEST_CASE("definition cases") {
  // W = OPT = 1200 keeps every threshold integral.
  const ClassParams p = ClassParams::FromHeights(R(1, 4), R(1, 3), 1, R(1, 4), R(1, 8), 1200, 1200);
  // delta_h*OPT = 300, mu_h*OPT = 150, alpha*OPT = 400, delta_w*W = 6.25, mu_w*W = 3.125
  CHECK(Classify(7, 300, p) == ClassLabel::kLarge);
  CHECK(Classify(6, 401, p) == ClassLabel::kTall);
  CHECK(Classify(6, 400, p) == ClassLabel::kMedium);
  CHECK(Classify(3, 300, p) == ClassLabel::kVertical);
  CHECK(Classify(3, 400, p) == ClassLabel::kVertical);
  CHECK(Classify(7, 150, p) == ClassLabel::kHorizontal);
  CHECK(Classify(3, 150, p) == ClassLabel::kSmall);
  CHECK(Classify(4, 150, p) == ClassLabel::kMedium);
  for (int64_t w : {1, 3, 4, 7, 600, 1200}) {
    CHECK(Classify(w, 151, p) == ClassLabel::kMedium);
    CHECK(Classify(w, 299, p) == ClassLabel::kMedium);
  }
}

TEST_CASE("classification is total and matches the reference on a full grid") {
  const std::array<std::array<Rational, 2>, 3> heights{{{R(1, 4), R(1, 8)},
                                                        {R(1, 5), R(1, 50)},
                                                        {R(1, 8), R(1, 9)}}};
  for (const auto& [dh, mh] : heights) {
    for (int64_t W : {60, 240, 1000}) {
      const int64_t opt = 90;
      const Rational eps = dh == R(1, 8) ? R(1, 8) : R(1, 4);
      const ClassParams p = ClassParams::FromHeights(eps, R(1, 3), 1, dh, mh, opt, W);
      std::array<int, 6> seen{};
      for (int64_t w = 1; w <= W; w += (W > 240 ? 3 : 1)) {
        for (int64_t h = 1; h <= opt; ++h) {
          const ClassLabel got = Classify(w, h, p);
          CHECK(got == FromRef(oracle::ClassifyRef(w, h, W, opt, Ref(p))));
          ++seen[static_cast<size_t>(got)];
        }
      }
      CHECK(seen[static_cast<size_t>(ClassLabel::kLarge)] > 0);
      CHECK(seen[static_cast<size_t>(ClassLabel::kMedium)] > 0);
    }
  }
}

TEST_CASE("power ladder values") {
  const LadderMap f = PowerLadder(R(1, 2), 1, 0);
  CHECK(f(R(1, 2)) == R(1, 256));
  const std::vector<Rational> ladder = Ladder(R(1, 2), f, 2);
  REQUIRE(ladder.size() == 2);
  CHECK(ladder[0] == R(1, 2));
  CHECK(ladder[1] == R(1, 256));
  // Clamped: values below the floor stay positive and decreasing.
  const LadderMap g = PowerLadder(R(1, 4), 5, R(1, 10000));
  const std::vector<Rational> deep = Ladder(R(1, 4), g, 5);
  for (size_t i = 1; i < deep.size(); ++i) {
    CHECK(deep[i] > 0);
    CHECK(deep[i] < deep[i - 1]);
  }
  const LadderMap geo = GeometricLadder(2);
  CHECK(geo(R(1, 4)) == R(1, 8));
}

TEST_CASE("select_params") {
  SUBCASE("identical full-size rects") {
    const Instance inst(50, {Rect{0, 50, 40}});
    const ParamCandidate c =
        SelectParams(inst, 40, R(1, 4), R(1, 3), 1, PowerLadder(R(1, 4), 5, R(1, 2000)));
    CHECK(c.params.ladder_index == 1);
    CHECK(c.medium_area == 0);
  }
  SUBCASE("spread rects satisfy the medium budget") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
      const GuillotineWitness w = GenGuillotine(400, 200, 1, 60, seed, {CutStyle::kStructured, 1});
      const Rational eps = R(1, 4);
      const ParamCandidate c = SelectParams(w.instance, w.opt, eps, R(1, 3), 1, GeometricLadder(2));
      int64_t medium = 0;
      for (const Rect& r : w.instance.rects()) {
        if (oracle::ClassifyRef(r.w, r.h, 400, w.opt, Ref(c.params)) == oracle::Label::kMedium) {
          medium += r.Area();
        }
      }
      CHECK(medium == c.medium_area);
      CHECK(Rational(medium) <= eps * w.opt * 400);
    }
  }
  SUBCASE("cap exhausted") {
    // Medium for the first candidate: 25 < h < 50 at OPT = 200.
    std::vector<Rect> rects;
    for (int i = 0; i < 3; ++i) rects.push_back(Rect{i, 100, 40});
    const Instance inst(100, rects);
    SelectOptions opt;
    opt.max_candidates = 1;
    CHECK_THROWS_AS(SelectParams(inst, 200, R(1, 4), R(1, 3), 1, GeometricLadder(2), opt),
                    SelectParamsError);
  }
}

TEST_CASE("rounding grid") {
  ClassParams p = ClassParams::FromHeights(R(1, 4), R(1, 3), 1, R(1, 4), R(1, 8), 128, 100);
  // gamma = 1/32, gamma*OPT = 4
  const RoundingGrid g = ComputeRoundingGrid(p);
  CHECK(g.step == 4);
  CHECK(RoundUpTo(7, 4) == 8);
  CHECK(RoundUpTo(8, 4) == 8);
  p = ClassParams::FromHeights(R(1, 4), R(1, 3), 1, R(1, 4), R(1, 8), 80, 100);
  const RoundingGrid g2 = ComputeRoundingGrid(p);
  CHECK(g2.gamma_opt == R(5, 2));
  CHECK(g2.step == 2);
  CHECK(RoundUpTo(5, 2) == 6);
  CHECK(g2.budget == R(100));
  p = ClassParams::FromHeights(R(1, 4), R(1, 3), 1, R(1, 4), R(1, 8), 10, 100);
  CHECK(ComputeRoundingGrid(p).step == 1);

  const std::vector<Rect> rects{{0, 10, 7}, {1, 10, 2}, {2, 1, 5}};
  const ClassParams q = ClassParams::FromHeights(R(1, 4), R(1, 3), 1, R(1, 4), R(1, 16), 20, 20);
  const auto labels = ClassifyAll(rects, q);
  const auto rounded = RoundHeights(rects, labels, RoundingGrid{3, R(0), R(0)});
  for (const Rect& r : rounded) {
    const ClassLabel l = labels[static_cast<size_t>(r.id)];
    CHECK((l == ClassLabel::kLarge || l == ClassLabel::kTall || l == ClassLabel::kVertical));
    CHECK(r.h % 3 == 0);
    CHECK(r.h >= rects[static_cast<size_t>(r.id)].h);
    CHECK(r.h - rects[static_cast<size_t>(r.id)].h < 3);
  }
}

TEST_CASE("constraint audit") {
  const ClassParams desk = ClassParams::FromHeights(R(1, 4), R(1, 3), 1, R(1, 4), R(1, 8), 100, 100);
  const ConstraintReport r = AuditConstraints(desk, 10, 100);
  CHECK(r.rows.size() == 6);
  CHECK_FALSE(r.AllSatisfied());
  CHECK_FALSE(r.Violations().empty());
  // medium-area row: 6*eps^k vs gamma/6, evaluated exactly
  CHECK(r.rows[0].lhs == R(6, 4));
  CHECK(r.rows[0].rhs == desk.gamma / 6);
  CHECK_THROWS_AS(AuditConstraints(desk, 10, 100, Strictness::kStrict), Error);

  // A large k with a vanishing mu_h meets every row.
  const Rational tiny = R(1, 1'000'000'000) * R(1, 1'000'000'000);
  const ClassParams asym =
      ClassParams::FromHeights(R(1, 4), R(1, 3), 8, R(1, 4), tiny, 100, 100);
  const ConstraintReport ok = AuditConstraints(asym, 10, 100, Strictness::kStrict);
  CHECK(ok.AllSatisfied());
}
