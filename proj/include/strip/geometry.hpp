#pragma once

// Exact integer geometry for strip packing: rectangles, placements, packings,
// containers and the feasibility verifier.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strip/rational.hpp"

namespace strip {

struct Rect {
  int64_t id = 0;
  int64_t w = 1;
  int64_t h = 1;

  int64_t Area() const { return w * h; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// A strip packing instance. Rect ids are dense 0..n-1 and rects[i].id == i.
class Instance {
 public:
  Instance() = default;
  // Validates and reorders `rects` by id. Throws Error on any invariant
  // violation (non-positive side, non-dense ids, rect wider than the strip).
  Instance(int64_t width, std::vector<Rect> rects, bool allow_rotations = false);

  int64_t width() const { return width_; }
  bool allow_rotations() const { return allow_rotations_; }
  const std::vector<Rect>& rects() const { return rects_; }
  const Rect& rect(int64_t id) const { return rects_.at(static_cast<size_t>(id)); }
  size_t size() const { return rects_.size(); }
  bool HasRect(int64_t id) const {
    return id >= 0 && static_cast<size_t>(id) < rects_.size();
  }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int64_t width_ = 1;
  std::vector<Rect> rects_;
  bool allow_rotations_ = false;
};

struct Placement {
  int64_t rect_id = 0;
  int64_t x = 0;
  int64_t y = 0;
  bool rotated = false;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Packing {
  std::vector<Placement> placements;

  friend bool operator==(const Packing&, const Packing&) = default;
};

// Axis-aligned integer region [x, x+w] x [y, y+h].
struct Box {
  int64_t x = 0;
  int64_t y = 0;
  int64_t w = 0;
  int64_t h = 0;

  int64_t right() const { return x + w; }
  int64_t top() const { return y + h; }
  int64_t Area() const { return w * h; }
  bool Contains(const Box& other) const {
    return other.x >= x && other.y >= y && other.right() <= right() &&
           other.top() <= top();
  }
  friend bool operator==(const Box&, const Box&) = default;
};

// Open interiors intersect. Shared edges are legal.
bool InteriorsOverlap(const Box& a, const Box& b);

enum class Orientation { kHorizontal, kVertical };

// Vertical: members side by side, every vertical line meets at most one.
// Horizontal: members stacked, every horizontal line meets at most one.
struct Container {
  Box region;
  Orientation orientation = Orientation::kVertical;

  friend bool operator==(const Container&, const Container&) = default;
};

enum class BoxKind { kLarge, kHorizontal, kVertical, kAuxiliary };

struct BoxRegion {
  Box region;
  BoxKind kind = BoxKind::kAuxiliary;
  std::string name;
};

int64_t EffectiveWidth(const Rect& r, bool rotated);
int64_t EffectiveHeight(const Rect& r, bool rotated);
Box Footprint(const Rect& r, const Placement& p);

enum class ViolationKind {
  kUnknownRect,
  kDuplicatePlacement,
  kOutOfStrip,
  kIllegalRotation,
  kOverlap,
};

struct Violation {
  ViolationKind kind;
  int64_t first = -1;
  int64_t second = -1;
  std::string message;
};

struct VerificationReport {
  bool ok = true;
  // Every instance rect placed exactly once.
  bool complete = false;
  int64_t height = 0;
  std::vector<Violation> violations;
};

// Lists every violation, not only the first.
VerificationReport VerifyPacking(const Instance& inst, const Packing& packing);

struct DisciplineCheck {
  bool ok = true;
  std::string reason;
};

DisciplineCheck VerifyContainerDiscipline(const Instance& inst,
                                          const Packing& packing,
                                          const Container& container,
                                          std::span<const int64_t> members);

int64_t TotalArea(std::span<const Rect> rects);
int64_t MaxHeight(std::span<const Rect> rects);
int64_t MaxWidth(std::span<const Rect> rects);
int64_t PackingHeight(const Instance& inst, const Packing& packing);

struct LowerBounds {
  int64_t height = 0;  // h_max, over the lowest fitting orientation with rotations
  int64_t area = 0;    // ceil(total area / W)
  int64_t Best() const { return height > area ? height : area; }
};

LowerBounds ComputeLowerBounds(const Instance& inst);

}  // namespace strip
