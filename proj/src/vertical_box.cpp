#include "strip/vertical_box.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace strip {

std::vector<Slice> SliceVertical(std::span<const LocalRect> members) {
  std::vector<Slice> out;
  for (const LocalRect& m : members) {
    for (int64_t c = 0; c < m.rect.w; ++c) {
      out.push_back(Slice{m.rect.id, m.x + c, m.y, m.rect.h});
    }
  }
  return out;
}

std::vector<Box> OccupiedBoxes(const VerticalBoxState& state) {
  std::vector<Box> out;
  for (const TallItem& t : state.talls) out.push_back(t.box);
  for (const Slice& s : state.slices) out.push_back(s.box());
  return out;
}

namespace {

struct Interval {
  int64_t lo;
  int64_t hi;
};

// Vertical extents of everything covering each column.
std::vector<std::vector<Interval>> ColumnIntervals(const VerticalBoxState& state,
                                                   bool talls_only) {
  std::vector<std::vector<Interval>> cols(static_cast<size_t>(state.width));
  auto add = [&](const Box& b) {
    for (int64_t c = std::max<int64_t>(0, b.x); c < std::min(b.right(), state.width); ++c) {
      cols[static_cast<size_t>(c)].push_back(Interval{b.y, b.top()});
    }
  };
  for (const TallItem& t : state.talls) add(t.box);
  if (!talls_only) {
    for (const Slice& s : state.slices) add(s.box());
  }
  for (auto& col : cols) {
    std::sort(col.begin(), col.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  }
  return cols;
}

// Indexes of talls covering column c, bottom to top.
std::vector<size_t> TallsInColumn(const VerticalBoxState& state, int64_t c) {
  std::vector<size_t> out;
  for (size_t i = 0; i < state.talls.size(); ++i) {
    const Box& b = state.talls[i].box;
    if (b.x <= c && c < b.right()) out.push_back(i);
  }
  std::sort(out.begin(), out.end(), [&](size_t a, size_t b) {
    return state.talls[a].box.y < state.talls[b].box.y;
  });
  return out;
}

bool ColumnsOverlap(const Box& a, const Box& b) { return a.x < b.right() && b.x < a.right(); }

}  // namespace

int CountStateViolations(const VerticalBoxState& state) {
  int bad = 0;
  const Box frame{0, 0, state.width, state.height};
  for (const Box& b : OccupiedBoxes(state)) {
    if (!frame.Contains(b) || b.w <= 0 || b.h <= 0) ++bad;
  }
  for (const auto& col : ColumnIntervals(state, false)) {
    int64_t reach = INT64_MIN;
    for (const Interval& iv : col) {
      if (iv.lo < reach) ++bad;
      reach = std::max(reach, iv.hi);
    }
  }
  return bad;
}

VerticalBoxState NormalizeTall(VerticalBoxState state) {
  for (int64_t c = 0; c < state.width; ++c) {
    if (TallsInColumn(state, c).size() > 2) {
      throw Error("column " + std::to_string(c) + " meets more than two tall rects");
    }
  }
  std::vector<size_t> order;
  for (size_t i = 0; i < state.talls.size(); ++i) {
    if (!state.talls[i].cut) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const TallItem& ta = state.talls[a];
    const TallItem& tb = state.talls[b];
    if (ta.box.h != tb.box.h) return ta.box.h > tb.box.h;
    return ta.rect_id < tb.rect_id;
  });

  for (size_t idx : order) {
    TallItem& r = state.talls[idx];
    bool above = false;
    bool below = false;
    for (size_t j = 0; j < state.talls.size(); ++j) {
      if (j == idx || !ColumnsOverlap(state.talls[j].box, r.box)) continue;
      (state.talls[j].box.y >= r.box.top() ? above : below) = true;
    }
    if (above && below) {
      throw Error("tall rect " + std::to_string(r.rect_id) +
                  " has tall rects both above and below");
    }
    const int64_t h = r.box.h;
    if (!above) {
      if (r.box.top() == state.height) continue;
      for (Slice& s : state.slices) {
        if (s.column >= r.box.x && s.column < r.box.right() && s.y >= r.box.top()) s.y -= h;
      }
      r.box.y = state.height - h;
    } else {
      if (r.box.y == 0) continue;
      for (Slice& s : state.slices) {
        if (s.column >= r.box.x && s.column < r.box.right() && s.y + s.h <= r.box.y) s.y += h;
      }
      r.box.y = 0;
    }
  }
  return state;
}

bool TallsTouchEdges(const VerticalBoxState& state) {
  return std::all_of(state.talls.begin(), state.talls.end(), [&](const TallItem& t) {
    return t.cut || t.box.y == 0 || t.box.top() == state.height;
  });
}

StripeInfo DeriveStripes(const VerticalBoxState& state) {
  StripeInfo info;
  info.free_height.assign(static_cast<size_t>(state.width), 0);
  // Per column: stripe indexes plus the cut tall bounding the bottom/top gap.
  struct EdgeGap {
    int64_t stripe = -1;
    int64_t hi_or_lo = 0;
    bool by_cut = false;
  };
  std::vector<EdgeGap> bottom(static_cast<size_t>(state.width));
  std::vector<EdgeGap> top(static_cast<size_t>(state.width));

  for (int64_t c = 0; c < state.width; ++c) {
    const auto talls = TallsInColumn(state, c);
    int64_t cursor = 0;
    const TallItem* prev = nullptr;
    auto emit = [&](int64_t lo, int64_t hi, const TallItem* next) {
      const bool bounded_below = prev != nullptr;
      const bool bounded_above = next != nullptr;
      const StripeKind kind =
          bounded_below && bounded_above ? StripeKind::kFree : StripeKind::kPseudo;
      if (kind == StripeKind::kFree) {
        info.free_height[static_cast<size_t>(c)] += hi - lo;
        if (hi > lo) info.stripes.push_back(Stripe{c, lo, hi, kind, false});
        return;
      }
      if (hi <= lo) return;
      info.stripes.push_back(Stripe{c, lo, hi, kind, false});
      const int64_t s = static_cast<int64_t>(info.stripes.size()) - 1;
      if (lo == 0 && next) bottom[static_cast<size_t>(c)] = EdgeGap{s, hi, next->cut};
      if (hi == state.height && prev) top[static_cast<size_t>(c)] = EdgeGap{s, lo, prev->cut};
    };
    for (size_t t : talls) {
      const TallItem& item = state.talls[t];
      emit(cursor, item.box.y, &item);
      cursor = item.box.top();
      prev = &item;
    }
    emit(cursor, state.height, nullptr);
  }

  // Corner sub-boxes: pseudo stripes against a cut tall, extended from each
  // corner across columns with the same stripe extent.
  auto scan = [&](std::vector<EdgeGap>& gaps, bool from_left, bool at_bottom) {
    const int64_t start = from_left ? 0 : state.width - 1;
    const int64_t dir = from_left ? 1 : -1;
    const EdgeGap first = gaps[static_cast<size_t>(start)];
    if (first.stripe < 0 || !first.by_cut) return;
    if (info.stripes[static_cast<size_t>(first.stripe)].corner) return;
    int64_t c = start;
    while (c >= 0 && c < state.width) {
      const EdgeGap g = gaps[static_cast<size_t>(c)];
      if (g.stripe < 0 || !g.by_cut || g.hi_or_lo != first.hi_or_lo) break;
      Stripe& s = info.stripes[static_cast<size_t>(g.stripe)];
      if (s.corner) break;
      s.corner = true;
      c += dir;
    }
    const int64_t x0 = from_left ? 0 : c + 1;
    const int64_t x1 = from_left ? c : state.width;
    const int64_t y0 = at_bottom ? 0 : first.hi_or_lo;
    const int64_t y1 = at_bottom ? first.hi_or_lo : state.height;
    info.corner_boxes.push_back(Box{x0, y0, x1 - x0, y1 - y0});
  };
  scan(bottom, true, true);
  scan(top, true, false);
  scan(bottom, false, true);
  scan(top, false, false);
  return info;
}

namespace {

enum class ItemKind { kTall = 0, kPseudo = 1, kEmpty = 2 };

struct ColumnItem {
  ItemKind kind;
  int64_t height;
  int64_t width;
  int64_t orig_x;
  int64_t tall = -1;  // index into talls when kind == kTall
};

// Per column lookup of the stripe containing a slice.
const Stripe* FindStripe(const std::vector<std::vector<const Stripe*>>& by_col,
                         const Slice& s) {
  for (const Stripe* st : by_col[static_cast<size_t>(s.column)]) {
    if (st->lo <= s.y && s.y + s.h <= st->hi) return st;
  }
  return nullptr;
}

std::vector<std::vector<const Stripe*>> StripesByColumn(const StripeInfo& info,
                                                        int64_t width) {
  std::vector<std::vector<const Stripe*>> by_col(static_cast<size_t>(width));
  for (const Stripe& s : info.stripes) by_col[static_cast<size_t>(s.column)].push_back(&s);
  return by_col;
}

// Merges runs of consecutive equal (kind, height) items into sub-boxes.
void EmitRuns(const std::vector<ColumnItem>& items, int64_t start, int64_t box_h,
              bool at_bottom, std::vector<SubBox>& out) {
  int64_t x = start;
  size_t i = 0;
  while (i < items.size()) {
    size_t j = i;
    int64_t w = 0;
    while (j < items.size() && items[j].kind == items[i].kind &&
           items[j].height == items[i].height) {
      w += items[j].width;
      ++j;
    }
    const int64_t h = items[i].height;
    if (h > 0 && items[i].kind != ItemKind::kEmpty) {
      const SubBoxKind kind =
          items[i].kind == ItemKind::kTall ? SubBoxKind::kTallRun : SubBoxKind::kPseudoRun;
      out.push_back(SubBox{Box{x, at_bottom ? 0 : box_h - h, w, h}, kind});
    }
    x += w;
    i = j;
  }
}

}  // namespace

Rearrangement RearrangeSubboxes(const VerticalBoxState& normalized,
                                const StripeInfo& stripes) {
  if (!TallsTouchEdges(normalized)) throw Error("rearrangement needs a normalized box");
  const int64_t W = normalized.width;
  const int64_t H = normalized.height;
  const auto by_col = StripesByColumn(stripes, W);

  Rearrangement out;
  out.state = normalized;
  out.state.slices.clear();
  out.pinned.assign(static_cast<size_t>(W), false);
  out.free_lo.assign(static_cast<size_t>(W), 0);
  out.new_free.assign(static_cast<size_t>(W), 0);

  // Pinned: columns under cut talls, closed under overlapping talls.
  for (const TallItem& t : normalized.talls) {
    if (!t.cut) continue;
    for (int64_t c = std::max<int64_t>(0, t.box.x); c < std::min(t.box.right(), W); ++c) {
      out.pinned[static_cast<size_t>(c)] = true;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const TallItem& t : normalized.talls) {
      bool touches = false;
      bool all = true;
      for (int64_t c = t.box.x; c < t.box.right(); ++c) {
        touches = touches || out.pinned[static_cast<size_t>(c)];
        all = all && out.pinned[static_cast<size_t>(c)];
      }
      if (touches && !all) {
        for (int64_t c = t.box.x; c < t.box.right(); ++c) out.pinned[static_cast<size_t>(c)] = true;
        changed = true;
      }
    }
  }

  // Column destination for pseudo slices: (old column, stripe) -> new column.
  std::map<const Stripe*, int64_t> stripe_dest;

  // Pinned columns: everything stays.
  std::vector<const Stripe*> pinned_pseudo;
  for (int64_t c = 0; c < W; ++c) {
    if (!out.pinned[static_cast<size_t>(c)]) continue;
    for (const Stripe* s : by_col[static_cast<size_t>(c)]) {
      if (s->kind == StripeKind::kFree) {
        out.free_lo[static_cast<size_t>(c)] = s->lo;
      } else {
        stripe_dest[s] = c;
        pinned_pseudo.push_back(s);
      }
    }
    out.new_free[static_cast<size_t>(c)] = stripes.free_height[static_cast<size_t>(c)];
  }
  for (const TallItem& t : normalized.talls) {
    if (!t.cut && out.pinned[static_cast<size_t>(t.box.x)]) {
      out.subboxes.push_back(SubBox{t.box, SubBoxKind::kTallRun});
    }
  }
  std::sort(pinned_pseudo.begin(), pinned_pseudo.end(), [](const Stripe* a, const Stripe* b) {
    return std::tie(a->lo, a->hi, a->corner, a->column) <
           std::tie(b->lo, b->hi, b->corner, b->column);
  });
  for (size_t i = 0; i < pinned_pseudo.size();) {
    size_t j = i + 1;
    while (j < pinned_pseudo.size() && pinned_pseudo[j]->lo == pinned_pseudo[i]->lo &&
           pinned_pseudo[j]->hi == pinned_pseudo[i]->hi &&
           pinned_pseudo[j]->corner == pinned_pseudo[i]->corner &&
           pinned_pseudo[j]->column == pinned_pseudo[j - 1]->column + 1) {
      ++j;
    }
    const Stripe* s = pinned_pseudo[i];
    out.subboxes.push_back(
        SubBox{Box{s->column, s->lo, static_cast<int64_t>(j - i), s->hi - s->lo},
               s->corner ? SubBoxKind::kCorner : SubBoxKind::kPseudoRun});
    i = j;
  }

  // Movable segments: maximal runs of unpinned columns.
  for (int64_t s = 0; s < W;) {
    if (out.pinned[static_cast<size_t>(s)]) {
      ++s;
      continue;
    }
    int64_t e = s;
    while (e < W && !out.pinned[static_cast<size_t>(e)]) ++e;

    std::vector<ColumnItem> bottoms;
    std::vector<ColumnItem> tops;
    std::vector<bool> has_bottom_tall(static_cast<size_t>(e - s), false);
    std::vector<bool> has_top_tall(static_cast<size_t>(e - s), false);
    for (size_t t = 0; t < normalized.talls.size(); ++t) {
      const Box& b = normalized.talls[t].box;
      if (b.x < s || b.x >= e) continue;
      const bool at_bottom = b.y == 0;
      ColumnItem item{ItemKind::kTall, b.h, b.w, b.x, static_cast<int64_t>(t)};
      (at_bottom ? bottoms : tops).push_back(item);
      for (int64_t c = b.x; c < b.right(); ++c) {
        (at_bottom ? has_bottom_tall : has_top_tall)[static_cast<size_t>(c - s)] = true;
      }
    }
    // Pseudo (or empty) items fill the columns without a tall on that side.
    std::map<int64_t, const Stripe*> bottom_pseudo;
    std::map<int64_t, const Stripe*> top_pseudo;
    for (int64_t c = s; c < e; ++c) {
      const Stripe* lower = nullptr;
      const Stripe* upper = nullptr;
      for (const Stripe* st : by_col[static_cast<size_t>(c)]) {
        if (st->kind != StripeKind::kPseudo) continue;
        if (st->lo == 0) lower = st;
        else if (st->hi == H) upper = st;
      }
      if (lower && lower->hi == H) {
        // Empty column: one bottom pseudo of full height, nothing on top.
        bottoms.push_back(ColumnItem{ItemKind::kPseudo, H, 1, c});
        bottom_pseudo[c] = lower;
        tops.push_back(ColumnItem{ItemKind::kEmpty, 0, 1, c});
        continue;
      }
      if (!has_bottom_tall[static_cast<size_t>(c - s)]) {
        if (lower) {
          bottoms.push_back(ColumnItem{ItemKind::kPseudo, lower->hi, 1, c});
          bottom_pseudo[c] = lower;
        } else {
          bottoms.push_back(ColumnItem{ItemKind::kEmpty, 0, 1, c});
        }
      }
      if (!has_top_tall[static_cast<size_t>(c - s)]) {
        if (upper) {
          tops.push_back(ColumnItem{ItemKind::kPseudo, H - upper->lo, 1, c});
          top_pseudo[c] = upper;
        } else {
          tops.push_back(ColumnItem{ItemKind::kEmpty, 0, 1, c});
        }
      }
    }
    // A column holding a full-height tall has neither pseudo nor top.
    auto by_kind = [](const ColumnItem& a) {
      return a.kind == ItemKind::kEmpty ? 0 : static_cast<int>(a.kind);
    };
    std::stable_sort(bottoms.begin(), bottoms.end(), [&](const ColumnItem& a, const ColumnItem& b) {
      return std::make_tuple(-a.height, by_kind(a), a.orig_x) <
             std::make_tuple(-b.height, by_kind(b), b.orig_x);
    });
    std::stable_sort(tops.begin(), tops.end(), [&](const ColumnItem& a, const ColumnItem& b) {
      return std::make_tuple(a.height, by_kind(a), a.orig_x) <
             std::make_tuple(b.height, by_kind(b), b.orig_x);
    });

    std::vector<int64_t> bottom_h(static_cast<size_t>(e - s), 0);
    std::vector<int64_t> top_h(static_cast<size_t>(e - s), 0);
    auto place = [&](const std::vector<ColumnItem>& items, std::vector<int64_t>& heights,
                     std::map<int64_t, const Stripe*>& pseudo) {
      int64_t x = s;
      for (const ColumnItem& it : items) {
        if (it.kind == ItemKind::kTall) {
          out.state.talls[static_cast<size_t>(it.tall)].box.x = x;
        } else if (it.kind == ItemKind::kPseudo) {
          stripe_dest[pseudo.at(it.orig_x)] = x;
        }
        for (int64_t c = x; c < x + it.width; ++c) heights[static_cast<size_t>(c - s)] = it.height;
        x += it.width;
      }
      if (x != e) throw Error("rearrangement lost columns");
    };
    place(bottoms, bottom_h, bottom_pseudo);
    place(tops, top_h, top_pseudo);
    for (int64_t c = s; c < e; ++c) {
      const int64_t g = H - bottom_h[static_cast<size_t>(c - s)] - top_h[static_cast<size_t>(c - s)];
      if (g < 0) throw Error("rearrangement produced overlapping items");
      out.free_lo[static_cast<size_t>(c)] = bottom_h[static_cast<size_t>(c - s)];
      out.new_free[static_cast<size_t>(c)] = g;
    }
    EmitRuns(bottoms, s, H, true, out.subboxes);
    EmitRuns(tops, s, H, false, out.subboxes);
    s = e;
  }

  for (const Slice& sl : normalized.slices) {
    const Stripe* st = FindStripe(by_col, sl);
    if (!st) throw Error("slice of rect " + std::to_string(sl.rect_id) + " overlaps a tall");
    if (st->kind == StripeKind::kFree) {
      out.lifted.push_back(sl);
      continue;
    }
    Slice moved = sl;
    moved.column = stripe_dest.at(st);
    out.state.slices.push_back(moved);
  }
  return out;
}

BigInt SubBoxBound(const Rational& eps, const Rational& gamma) {
  const Rational ratio = (1 + eps) / gamma;
  const int64_t e = FloorToInt(ratio);
  BigInt six = 1;
  for (int64_t i = 0; i < e; ++i) six *= 6;
  const Rational bound = 2 * ratio * Rational(six) + 4;
  return BigInt(numerator(bound) / denominator(bound));
}

bool SubBoxCountWithin(int64_t count, const Rational& eps, const Rational& gamma) {
  // 6^25 already exceeds any int64 count.
  if ((1 + eps) / gamma >= 25) return true;
  return BigInt(count) <= SubBoxBound(eps, gamma);
}

RepackResult RepackGoodStripes(const VerticalBoxState& normalized, const StripeInfo& stripes,
                               const Rearrangement& arranged) {
  const int64_t W = normalized.width;
  RepackResult out;
  out.state = arranged.state;
  out.profile.f = stripes.free_height;
  out.profile.g = arranged.new_free;
  const auto sum = [](const std::vector<int64_t>& v) {
    return std::accumulate(v.begin(), v.end(), int64_t{0});
  };
  if (sum(out.profile.f) != sum(out.profile.g)) {
    throw Error("free area not conserved: sum f = " + std::to_string(sum(out.profile.f)) +
                ", sum g = " + std::to_string(sum(out.profile.g)));
  }
  std::vector<int64_t> discard_col(static_cast<size_t>(W), -1);
  for (int64_t c = 0; c < W; ++c) {
    const size_t i = static_cast<size_t>(c);
    if (out.profile.g[i] >= out.profile.f[i]) {
      out.profile.good.push_back(c);
    } else {
      discard_col[i] = out.discard_width++;
      out.discard_height = std::max(out.discard_height, out.profile.f[i]);
    }
  }

  std::vector<int64_t> free_base(static_cast<size_t>(W), 0);
  for (const Stripe& s : stripes.stripes) {
    if (s.kind == StripeKind::kFree) free_base[static_cast<size_t>(s.column)] = s.lo;
  }
  for (const Slice& sl : arranged.lifted) {
    const size_t i = static_cast<size_t>(sl.column);
    Slice moved = sl;
    moved.y = sl.y - free_base[i];
    if (discard_col[i] < 0) {
      moved.y += arranged.free_lo[i];
      out.state.slices.push_back(moved);
    } else {
      moved.column = discard_col[i];
      out.discarded.push_back(moved);
    }
  }

  // Empty regions: split at every vertical line through a sub-box or cut
  // tall edge, and wherever the gap changes.
  std::set<int64_t> cuts{0, W};
  for (const SubBox& b : arranged.subboxes) {
    cuts.insert(b.region.x);
    cuts.insert(b.region.right());
  }
  for (const TallItem& t : arranged.state.talls) {
    cuts.insert(std::clamp<int64_t>(t.box.x, 0, W));
    cuts.insert(std::clamp<int64_t>(t.box.right(), 0, W));
  }
  int64_t c = 0;
  while (c < W) {
    const size_t i = static_cast<size_t>(c);
    int64_t e = c + 1;
    while (e < W && !cuts.contains(e) &&
           arranged.free_lo[static_cast<size_t>(e)] == arranged.free_lo[i] &&
           arranged.new_free[static_cast<size_t>(e)] == arranged.new_free[i]) {
      ++e;
    }
    if (arranged.new_free[i] > 0) {
      out.empty_boxes.push_back(
          SubBox{Box{c, arranged.free_lo[i], e - c, arranged.new_free[i]}, SubBoxKind::kEmpty});
    }
    c = e;
  }
  return out;
}

BoxProcessing ProcessVerticalBox(const VerticalBoxState& state) {
  BoxProcessing p;
  p.normalized = NormalizeTall(state);
  p.stripes = DeriveStripes(p.normalized);
  p.arranged = RearrangeSubboxes(p.normalized, p.stripes);
  p.repacked = RepackGoodStripes(p.normalized, p.stripes, p.arranged);
  return p;
}

}  // namespace strip
