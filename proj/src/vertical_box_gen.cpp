#include <algorithm>

#include "strip/instances.hpp"
#include "strip/vertical_box.hpp"

namespace strip {

namespace {

struct Lane {
  int64_t x = 0;
  int64_t w = 0;
  int64_t h = 0;
};

}  // namespace

VerticalBoxSample GenVerticalBox(int64_t max_width, const Rational& eps, const Rational& alpha,
                                 const Rational& delta_h, uint64_t seed) {
  if (max_width < 1) throw Error("vertical box width must be positive");
  Rng rng(seed);
  VerticalBoxSample out;
  out.eps = eps;
  out.alpha = alpha;
  out.gamma = eps * delta_h / 2;
  const BigInt den = denominator(out.gamma);
  if (den > 1'000'000) throw Error("gamma denominator too large for sampling");
  const int64_t base = static_cast<int64_t>(den);
  const int64_t r = rng.Uniform(1, std::max<int64_t>(1, 4096 / base));
  out.opt = base * r;
  const int64_t opt = out.opt;

  // Talls need height > alpha*OPT; the box holds at most (1+eps)*OPT.
  const int64_t tall_min = (FloorToInt(alpha * opt) / r + 1) * r;
  const int64_t box_max = FloorToInt((1 + eps) * opt) / r * r;
  const int64_t box_min = std::min(box_max, tall_min);
  const int64_t hbar = box_min + r * rng.Uniform(0, (box_max - box_min) / r);
  const int64_t W = rng.Uniform(1, max_width);
  const int max_run = static_cast<int>(std::max<int64_t>(1, W / 6));
  // Dense boxes put talls almost everywhere, so most columns get free stripes.
  const int64_t fill = rng.Coin(1, 2) ? 19 : 12;

  VerticalBoxState& st = out.state;
  st.width = W;
  st.height = hbar;
  st.step = r;
  auto tall_height = [&](int64_t cap) {
    // Multiple of r in [tall_min, cap]; 0 when none exists.
    if (cap < tall_min) return int64_t{0};
    return tall_min + r * rng.Uniform(0, (cap - tall_min) / r);
  };

  // Bottom lane, then a top lane that fits over it.
  std::vector<int64_t> bottom(static_cast<size_t>(W), 0);
  std::vector<Lane> low;
  std::vector<Lane> high;
  for (int64_t x = 0; x < W;) {
    const int64_t w = std::min<int64_t>(W - x, rng.Uniform(1, max_run));
    if (rng.Coin(fill, 20)) {
      const int64_t h = tall_height(hbar);
      if (h > 0) {
        low.push_back(Lane{x, w, h});
        for (int64_t c = x; c < x + w; ++c) bottom[static_cast<size_t>(c)] = h;
      }
    }
    x += w;
  }
  for (int64_t x = 0; x < W;) {
    const int64_t w = std::min<int64_t>(W - x, rng.Uniform(1, max_run));
    if (rng.Coin(fill, 20)) {
      int64_t below = 0;
      for (int64_t c = x; c < x + w; ++c) below = std::max(below, bottom[static_cast<size_t>(c)]);
      const int64_t h = tall_height(hbar - below);
      if (h > 0) high.push_back(Lane{x, w, h});
    }
    x += w;
  }

  // Lift bottom talls and drop top talls by random amounts that keep the
  // pair in every column disjoint.
  std::vector<int64_t> top_floor(static_cast<size_t>(W), hbar);
  std::vector<int64_t> lifted_top(static_cast<size_t>(W), 0);
  for (const Lane& t : high) {
    for (int64_t c = t.x; c < t.x + t.w; ++c) top_floor[static_cast<size_t>(c)] = hbar - t.h;
  }
  int64_t next_id = 1;
  const bool cut_left = W > 2 && rng.Coin(1, 3);
  const bool cut_right = W > 2 && rng.Coin(1, 3);
  for (const Lane& t : low) {
    int64_t slack = hbar;
    for (int64_t c = t.x; c < t.x + t.w; ++c) {
      slack = std::min(slack, top_floor[static_cast<size_t>(c)] - t.h);
    }
    const int64_t y = rng.Coin(1, 2) ? 0 : rng.Uniform(0, std::max<int64_t>(0, slack));
    const bool cut = (cut_left && t.x == 0) || (cut_right && t.x + t.w == W);
    st.talls.push_back(TallItem{next_id++, Box{t.x, y, t.w, t.h}, cut});
    for (int64_t c = t.x; c < t.x + t.w; ++c) lifted_top[static_cast<size_t>(c)] = y + t.h;
  }
  for (const Lane& t : high) {
    int64_t slack = hbar;
    for (int64_t c = t.x; c < t.x + t.w; ++c) {
      slack = std::min(slack, hbar - t.h - lifted_top[static_cast<size_t>(c)]);
    }
    const int64_t drop = rng.Coin(1, 2) ? 0 : rng.Uniform(0, std::max<int64_t>(0, slack));
    const bool cut = (cut_left && t.x == 0) || (cut_right && t.x + t.w == W);
    st.talls.push_back(TallItem{next_id++, Box{t.x, hbar - t.h - drop, t.w, t.h}, cut});
  }

  // Fill the gaps of every column with unit slices, leaving random holes.
  for (int64_t c = 0; c < W; ++c) {
    std::vector<std::pair<int64_t, int64_t>> used;
    for (const TallItem& t : st.talls) {
      if (t.box.x <= c && c < t.box.right()) used.emplace_back(t.box.y, t.box.top());
    }
    std::sort(used.begin(), used.end());
    used.emplace_back(hbar, hbar);
    int64_t y = 0;
    for (const auto& [lo, hi] : used) {
      while (y < lo) {
        const int64_t room = lo - y;
        if (rng.Coin(1, 4)) {
          y += rng.Uniform(1, room);
          continue;
        }
        const int64_t h = rng.Uniform(1, std::min<int64_t>(room, std::max<int64_t>(1, hbar / 4)));
        st.slices.push_back(Slice{next_id++, c, y, h});
        y += h;
      }
      y = std::max(y, hi);
    }
  }
  if (CountStateViolations(st) != 0) throw Error("generated vertical box is inconsistent");
  return out;
}

}  // namespace strip
