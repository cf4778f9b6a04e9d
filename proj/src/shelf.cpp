#include "strip/shelf.hpp"

#include <algorithm>
#include <limits>

namespace strip {

std::vector<Placement> ShelfLayout::Placements(int64_t origin_x, int64_t origin_y) const {
  std::vector<Placement> out;
  for (const Shelf& shelf : shelves) {
    for (Placement p : shelf.members) {
      p.x += origin_x;
      p.y += origin_y;
      out.push_back(p);
    }
  }
  return out;
}

std::vector<Rect> NfdhOrder(std::span<const Rect> rects) {
  std::vector<Rect> sorted(rects.begin(), rects.end());
  std::sort(sorted.begin(), sorted.end(), [](const Rect& a, const Rect& b) {
    if (a.h != b.h) return a.h > b.h;
    if (a.w != b.w) return a.w > b.w;
    return a.id < b.id;
  });
  return sorted;
}

namespace {

void CheckWidths(std::span<const Rect> rects, int64_t width) {
  for (const Rect& r : rects) {
    if (r.w > width) {
      throw Error("rect " + std::to_string(r.id) + " (w=" + std::to_string(r.w) +
                  ") is wider than " + std::to_string(width));
    }
  }
}

// Next-fit over already sorted rects. Stops when a new shelf would exceed
// max_height; the remaining rects become leftover.
ShelfLayout NextFit(const std::vector<Rect>& sorted, int64_t width, int64_t max_height) {
  ShelfLayout layout;
  int64_t base = 0;
  int64_t cursor = 0;
  size_t i = 0;
  for (; i < sorted.size(); ++i) {
    const Rect& r = sorted[i];
    const bool need_shelf = layout.shelves.empty() || cursor + r.w > width;
    if (need_shelf) {
      const int64_t next_base = layout.shelves.empty()
                                    ? 0
                                    : base + layout.shelves.back().region.region.h;
      if (next_base + r.h > max_height) break;
      base = next_base;
      cursor = 0;
      layout.shelves.push_back(
          Shelf{Container{Box{0, base, width, r.h}, Orientation::kVertical}, {}});
    }
    layout.shelves.back().members.push_back(Placement{r.id, cursor, base, false});
    cursor += r.w;
    layout.packed_area += r.Area();
  }
  layout.leftover.assign(sorted.begin() + static_cast<std::ptrdiff_t>(i), sorted.end());
  if (!layout.shelves.empty()) {
    layout.used_extent = base + layout.shelves.back().region.region.h;
  }
  return layout;
}

std::vector<Rect> Swapped(std::span<const Rect> rects) {
  std::vector<Rect> out;
  out.reserve(rects.size());
  for (const Rect& r : rects) out.push_back(Rect{r.id, r.h, r.w});
  return out;
}

// Maps a layout computed on swapped rects back to the real frame.
ShelfLayout Untranspose(ShelfLayout layout, std::span<const Rect> originals) {
  for (Shelf& shelf : layout.shelves) {
    const Box b = shelf.region.region;
    shelf.region = Container{Box{b.y, b.x, b.h, b.w}, Orientation::kHorizontal};
    for (Placement& p : shelf.members) std::swap(p.x, p.y);
  }
  for (Rect& r : layout.leftover) {
    auto it = std::find_if(originals.begin(), originals.end(),
                           [&](const Rect& o) { return o.id == r.id; });
    r = *it;
  }
  return layout;
}

}  // namespace

StripResult NfdhStrip(std::span<const Rect> rects, int64_t width) {
  CheckWidths(rects, width);
  StripResult result;
  result.layout = NextFit(NfdhOrder(rects), width, std::numeric_limits<int64_t>::max());
  result.packing.placements = result.layout.Placements();
  result.height = result.layout.used_extent;
  return result;
}

StripResult FfdhStrip(std::span<const Rect> rects, int64_t width) {
  CheckWidths(rects, width);
  StripResult result;
  ShelfLayout& layout = result.layout;
  std::vector<int64_t> fill;
  int64_t top = 0;
  for (const Rect& r : NfdhOrder(rects)) {
    size_t s = 0;
    while (s < fill.size() && fill[s] + r.w > width) ++s;
    if (s == fill.size()) {
      layout.shelves.push_back(
          Shelf{Container{Box{0, top, width, r.h}, Orientation::kVertical}, {}});
      fill.push_back(0);
      top += r.h;
    }
    Shelf& shelf = layout.shelves[s];
    shelf.members.push_back(Placement{r.id, fill[s], shelf.region.region.y, false});
    fill[s] += r.w;
    layout.packed_area += r.Area();
  }
  layout.used_extent = top;
  result.packing.placements = layout.Placements();
  result.height = top;
  return result;
}

ShelfLayout NfdhIntoBox(std::span<const Rect> rects, int64_t box_w, int64_t box_h) {
  for (const Rect& r : rects) {
    if (r.w > box_w || r.h > box_h) {
      throw Error("rect " + std::to_string(r.id) + " does not fit a " +
                  std::to_string(box_w) + "x" + std::to_string(box_h) + " box");
    }
  }
  return NextFit(NfdhOrder(rects), box_w, box_h);
}

ShelfLayout NfdhIntoBoxTransposed(std::span<const Rect> rects, int64_t box_w,
                                  int64_t box_h) {
  return Untranspose(NfdhIntoBox(Swapped(rects), box_h, box_w), rects);
}

ShelfLayout NfdhColumns(std::span<const Rect> rects, int64_t height) {
  auto swapped = Swapped(rects);
  CheckWidths(swapped, height);
  return Untranspose(
      NextFit(NfdhOrder(swapped), height, std::numeric_limits<int64_t>::max()), rects);
}

}  // namespace strip
