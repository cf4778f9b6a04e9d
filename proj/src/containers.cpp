#include "strip/containers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace strip {

SliceContainers RearrangeUnitSlices(std::span<const Slice> slices, int64_t box_w,
                                    int64_t box_h, int64_t d, int64_t q) {
  if (d < 1 || q < 1) throw Error("d and q must be positive");
  std::set<int64_t> heights;
  std::vector<std::vector<Slice>> columns(static_cast<size_t>(box_w));
  for (const Slice& s : slices) {
    if (s.column < 0 || s.column >= box_w) throw Error("slice outside the box");
    if (s.h * d < box_h) {
      throw Error("slice of rect " + std::to_string(s.rect_id) + " is lower than box_h/d");
    }
    heights.insert(s.h);
    columns[static_cast<size_t>(s.column)].push_back(s);
  }
  if (static_cast<int64_t>(heights.size()) > q) {
    throw Error(std::to_string(heights.size()) + " distinct heights exceed q = " +
                std::to_string(q));
  }
  std::map<std::vector<int64_t>, std::vector<size_t>> by_type;
  for (size_t c = 0; c < columns.size(); ++c) {
    auto& col = columns[c];
    std::stable_sort(col.begin(), col.end(),
                     [](const Slice& a, const Slice& b) { return a.h > b.h; });
    std::vector<int64_t> type;
    int64_t total = 0;
    for (const Slice& s : col) {
      type.push_back(s.h);
      total += s.h;
    }
    if (total > box_h) throw Error("column " + std::to_string(c) + " exceeds the box height");
    if (!type.empty()) by_type[type].push_back(c);
  }

  SliceContainers out;
  out.types = static_cast<int64_t>(by_type.size());
  // Largest types first so the layout does not depend on map order quirks.
  std::vector<std::pair<std::vector<int64_t>, std::vector<size_t>>> groups(by_type.rbegin(),
                                                                          by_type.rend());
  int64_t x = 0;
  for (const auto& [type, cols] : groups) {
    const int64_t w = static_cast<int64_t>(cols.size());
    int64_t y = 0;
    for (int64_t h : type) {
      out.containers.push_back(Container{Box{x, y, w, h}, Orientation::kVertical});
      y += h;
    }
    for (size_t k = 0; k < cols.size(); ++k) {
      int64_t offset = 0;
      for (Slice s : columns[cols[k]]) {
        s.column = x + static_cast<int64_t>(k);
        s.y = offset;
        offset += s.h;
        out.placed.push_back(s);
      }
    }
    x += w;
  }
  return out;
}

SliceContainers RearrangeUnitSlicesHorizontal(std::span<const Slice> slices, int64_t box_w,
                                              int64_t box_h, int64_t d, int64_t q) {
  SliceContainers t = RearrangeUnitSlices(slices, box_h, box_w, d, q);
  for (Container& c : t.containers) {
    const Box b = c.region;
    c = Container{Box{b.y, b.x, b.h, b.w}, Orientation::kHorizontal};
  }
  return t;
}

IntegralResult Integralize(std::span<const GreedyItem> items, std::span<const GreedyBin> bins) {
  std::vector<GreedyItem> sorted(items.begin(), items.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const GreedyItem& a, const GreedyItem& b) {
    if (a.key != b.key) return a.key > b.key;
    return a.id < b.id;
  });
  std::vector<size_t> order(bins.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return bins[a].key > bins[b].key; });

  IntegralResult out;
  size_t next = 0;
  for (size_t b : order) {
    int64_t used = 0;
    while (next < sorted.size() && used < bins[b].capacity) {
      const GreedyItem& it = sorted[next++];
      if (used + it.size > bins[b].capacity) {
        out.discarded.push_back(it.id);
        break;
      }
      if (it.key > bins[b].key) {
        throw Error("item " + std::to_string(it.id) + " is wider than its container");
      }
      out.assigned.push_back(GreedyAssignment{it.id, static_cast<int64_t>(b), used});
      used += it.size;
    }
  }
  if (next < sorted.size()) {
    throw Error(std::to_string(sorted.size() - next) +
                " items left after all containers; no sliced packing exists");
  }
  return out;
}

}  // namespace strip
