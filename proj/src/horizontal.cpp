#include "strip/horizontal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace strip {

namespace {

struct Row {
  int64_t x;
  int64_t y;
  int64_t w;
};

int64_t BoxOf(const std::vector<Box>& boxes, const Box& b) {
  for (size_t i = 0; i < boxes.size(); ++i) {
    if (boxes[i].Contains(b)) return static_cast<int64_t>(i);
  }
  return -1;
}

}  // namespace

HorizontalGrouping GroupHorizontal(const HorizontalInput& in) {
  HorizontalGrouping out;
  out.group_height = CeilToInt(in.eps * in.opt);
  if (in.rects.size() != in.positions.size()) throw Error("rects and positions differ in size");
  int64_t total_h = 0;
  for (const Rect& r : in.rects) {
    out.original_area += r.Area();
    total_h += r.h;
  }
  if (in.rects.empty()) return out;

  if (Rational(in.opt) <= 1 / in.eps) {
    out.per_rect = true;
    for (size_t i = 0; i < in.rects.size(); ++i) {
      const Placement& p = in.positions[i];
      out.containers.push_back(
          Container{Box{p.x, p.y, in.rects[i].w, in.rects[i].h}, Orientation::kHorizontal});
      out.assigned.push_back(GreedyAssignment{in.rects[i].id, static_cast<int64_t>(i), 0});
    }
    out.rounded_area = out.original_area;
    return out;
  }
  if (total_h <= out.group_height) {
    out.piled_all = true;
    out.round_pile = in.rects;
    return out;
  }

  // Width-descending order; each rect contributes h unit rows.
  std::vector<size_t> order(in.rects.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (in.rects[a].w != in.rects[b].w) return in.rects[a].w > in.rects[b].w;
    return in.rects[a].id < in.rects[b].id;
  });
  std::vector<Row> slots;
  for (size_t i : order) {
    const Placement& p = in.positions[i];
    for (int64_t k = 0; k < in.rects[i].h; ++k) slots.push_back(Row{p.x, p.y + k, in.rects[i].w});
  }
  size_t split = 0;
  int64_t long_h = 0;
  while (long_h < out.group_height) {
    out.h_long.push_back(in.rects[order[split]]);
    long_h += in.rects[order[split]].h;
    ++split;
  }
  std::vector<size_t> rest(order.begin() + static_cast<std::ptrdiff_t>(split), order.end());
  const int64_t g = out.group_height;

  // Row j of the remainder (global row long_h + j) takes slot j if j < g,
  // otherwise the slot of remainder row j - g; widths round up to the
  // widest row of the group.
  std::vector<int64_t> row_width;
  for (size_t i : rest) {
    for (int64_t k = 0; k < in.rects[i].h; ++k) row_width.push_back(in.rects[i].w);
  }
  const int64_t rows = static_cast<int64_t>(row_width.size());
  out.groups = (rows + g - 1) / g;
  std::map<int64_t, std::vector<Slice>> per_box;
  for (int64_t j = 0; j < rows; ++j) {
    const int64_t rounded = row_width[static_cast<size_t>(j / g * g)];
    out.rounded_area += rounded;
    const Row& slot = slots[static_cast<size_t>(j < g ? j : long_h + j - g)];
    if (slot.w < rounded) throw Error("grouped row wider than its slot");
    const int64_t b = BoxOf(in.boxes, Box{slot.x, slot.y, slot.w, 1});
    if (b < 0) throw Error("horizontal row outside every horizontal box");
    const Box& box = in.boxes[static_cast<size_t>(b)];
    per_box[b].push_back(Slice{-1, slot.y - box.y, slot.x - box.x, rounded});
  }

  std::vector<GreedyBin> bins;
  for (const auto& [b, slices] : per_box) {
    const Box& box = in.boxes[static_cast<size_t>(b)];
    std::set<int64_t> widths;
    int64_t min_w = box.w;
    for (const Slice& s : slices) {
      widths.insert(s.h);
      min_w = std::min(min_w, s.h);
    }
    const int64_t d = (box.w + min_w - 1) / min_w;
    const SliceContainers made = RearrangeUnitSlicesHorizontal(
        slices, box.w, box.h, d, static_cast<int64_t>(widths.size()));
    for (const Container& c : made.containers) {
      Box r = c.region;
      r.x += box.x;
      r.y += box.y;
      out.containers.push_back(Container{r, Orientation::kHorizontal});
      bins.push_back(GreedyBin{r.w, r.h});
    }
  }
  std::vector<GreedyItem> items;
  for (size_t i : rest) items.push_back(GreedyItem{in.rects[i].id, in.rects[i].w, in.rects[i].h});
  IntegralResult integral = Integralize(items, bins);
  out.assigned = std::move(integral.assigned);
  out.discards = static_cast<int64_t>(integral.discarded.size());
  out.round_pile = out.h_long;
  for (int64_t id : integral.discarded) {
    for (size_t i : rest) {
      if (in.rects[i].id == id) out.round_pile.push_back(in.rects[i]);
    }
  }
  return out;
}

}  // namespace strip
