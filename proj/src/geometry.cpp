#include "strip/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace strip {

Instance::Instance(int64_t width, std::vector<Rect> rects, bool allow_rotations)
    : width_(width), rects_(std::move(rects)), allow_rotations_(allow_rotations) {
  if (width_ < 1) throw Error("strip width must be >= 1");
  std::sort(rects_.begin(), rects_.end(),
            [](const Rect& a, const Rect& b) { return a.id < b.id; });
  for (size_t i = 0; i < rects_.size(); ++i) {
    const Rect& r = rects_[i];
    if (r.id != static_cast<int64_t>(i)) {
      std::ostringstream msg;
      if (i > 0 && rects_[i - 1].id == r.id) {
        msg << "duplicate rect id " << r.id;
      } else {
        msg << "rect ids must be dense 0..n-1; expected " << i << ", got " << r.id;
      }
      throw Error(msg.str());
    }
    if (r.w < 1 || r.h < 1) {
      throw Error("rect " + std::to_string(r.id) + " has a non-positive side");
    }
    const int64_t fit = allow_rotations_ ? std::min(r.w, r.h) : r.w;
    if (fit > width_) {
      throw Error("rect " + std::to_string(r.id) + " does not fit the strip width");
    }
  }
}

bool InteriorsOverlap(const Box& a, const Box& b) {
  return a.x < b.right() && b.x < a.right() && a.y < b.top() && b.y < a.top();
}

int64_t EffectiveWidth(const Rect& r, bool rotated) { return rotated ? r.h : r.w; }
int64_t EffectiveHeight(const Rect& r, bool rotated) { return rotated ? r.w : r.h; }

Box Footprint(const Rect& r, const Placement& p) {
  return Box{p.x, p.y, EffectiveWidth(r, p.rotated), EffectiveHeight(r, p.rotated)};
}

VerificationReport VerifyPacking(const Instance& inst, const Packing& packing) {
  VerificationReport report;
  std::vector<int> seen(inst.size(), 0);
  struct Item {
    Box box;
    int64_t id;
  };
  std::vector<Item> items;
  items.reserve(packing.placements.size());

  auto add = [&](ViolationKind kind, int64_t a, int64_t b, std::string msg) {
    report.ok = false;
    report.violations.push_back(Violation{kind, a, b, std::move(msg)});
  };

  for (const Placement& p : packing.placements) {
    if (!inst.HasRect(p.rect_id)) {
      add(ViolationKind::kUnknownRect, p.rect_id, -1,
          "placement references unknown rect " + std::to_string(p.rect_id));
      continue;
    }
    if (seen[p.rect_id]++ > 0) {
      add(ViolationKind::kDuplicatePlacement, p.rect_id, -1,
          "rect " + std::to_string(p.rect_id) + " placed more than once");
    }
    if (p.rotated && !inst.allow_rotations()) {
      add(ViolationKind::kIllegalRotation, p.rect_id, -1,
          "rect " + std::to_string(p.rect_id) + " rotated but rotations are disabled");
    }
    const Box box = Footprint(inst.rect(p.rect_id), p);
    if (box.x < 0 || box.y < 0 || box.right() > inst.width()) {
      add(ViolationKind::kOutOfStrip, p.rect_id, -1,
          "rect " + std::to_string(p.rect_id) + " leaves the strip");
    }
    report.height = std::max(report.height, box.top());
    items.push_back(Item{box, p.rect_id});
  }

  // Sweep over x: only rects whose x-spans intersect can overlap.
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.box.x != b.box.x ? a.box.x < b.box.x : a.id < b.id;
  });
  std::vector<size_t> active;
  for (size_t i = 0; i < items.size(); ++i) {
    const Box& cur = items[i].box;
    std::erase_if(active, [&](size_t j) { return items[j].box.right() <= cur.x; });
    for (size_t j : active) {
      if (InteriorsOverlap(items[j].box, cur)) {
        add(ViolationKind::kOverlap, std::min(items[j].id, items[i].id),
            std::max(items[j].id, items[i].id),
            "rects " + std::to_string(items[j].id) + " and " +
                std::to_string(items[i].id) + " overlap");
      }
    }
    active.push_back(i);
  }

  report.complete = std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
  return report;
}

DisciplineCheck VerifyContainerDiscipline(const Instance& inst,
                                          const Packing& packing,
                                          const Container& container,
                                          std::span<const int64_t> members) {
  std::vector<Box> boxes;
  for (int64_t id : members) {
    auto it = std::find_if(packing.placements.begin(), packing.placements.end(),
                           [id](const Placement& p) { return p.rect_id == id; });
    if (it == packing.placements.end() || !inst.HasRect(id)) {
      return {false, "member " + std::to_string(id) + " is not placed"};
    }
    Box box = Footprint(inst.rect(id), *it);
    if (!container.region.Contains(box)) {
      return {false, "member " + std::to_string(id) + " lies outside the container"};
    }
    boxes.push_back(box);
  }
  const bool vertical = container.orientation == Orientation::kVertical;
  for (size_t i = 0; i < boxes.size(); ++i) {
    for (size_t j = i + 1; j < boxes.size(); ++j) {
      const Box& a = boxes[i];
      const Box& b = boxes[j];
      const bool share = vertical ? (a.x < b.right() && b.x < a.right())
                                  : (a.y < b.top() && b.y < a.top());
      if (share) {
        return {false, std::string(vertical ? "a vertical" : "a horizontal") +
                           " line meets members " + std::to_string(members[i]) +
                           " and " + std::to_string(members[j])};
      }
    }
  }
  return {};
}

int64_t TotalArea(std::span<const Rect> rects) {
  int64_t total = 0;
  for (const Rect& r : rects) total += r.Area();
  return total;
}

int64_t MaxHeight(std::span<const Rect> rects) {
  int64_t best = 0;
  for (const Rect& r : rects) best = std::max(best, r.h);
  return best;
}

int64_t MaxWidth(std::span<const Rect> rects) {
  int64_t best = 0;
  for (const Rect& r : rects) best = std::max(best, r.w);
  return best;
}

int64_t PackingHeight(const Instance& inst, const Packing& packing) {
  int64_t height = 0;
  for (const Placement& p : packing.placements) {
    height = std::max(height, Footprint(inst.rect(p.rect_id), p).top());
  }
  return height;
}

LowerBounds ComputeLowerBounds(const Instance& inst) {
  const int64_t area = TotalArea(inst.rects());
  int64_t tallest = 0;
  for (const Rect& r : inst.rects()) {
    int64_t h = r.h;
    // With rotations a rect only forces its lowest orientation that fits.
    if (inst.allow_rotations()) h = r.w > inst.width() ? r.w : (r.h <= inst.width() ? std::min(r.w, r.h) : r.h);
    tallest = std::max(tallest, h);
  }
  return LowerBounds{tallest, (area + inst.width() - 1) / inst.width()};
}

}  // namespace strip
