#pragma once

// Next-Fit and First-Fit Decreasing Height shelf packing.
//
// Rects are ordered by height descending, ties by width descending, then id
// ascending. A shelf is opened at the height of its first rect; rects are
// placed left to right touching the shelf floor.

#include <span>
#include <vector>

#include "strip/geometry.hpp"

namespace strip {

struct Shelf {
  // In box-local coordinates. For a normal shelf this is the full-width band
  // [0, box_w] x [base, base + height] and acts as a vertical container; a
  // transposed shelf is a full-height column and acts as a horizontal one.
  Container region;
  std::vector<Placement> members;  // box-local
};

struct ShelfLayout {
  std::vector<Shelf> shelves;
  std::vector<Rect> leftover;  // NFDH order
  // Extent along the stacking axis: height for normal layouts, width for
  // transposed ones.
  int64_t used_extent = 0;
  int64_t packed_area = 0;

  std::vector<Placement> Placements(int64_t origin_x = 0, int64_t origin_y = 0) const;
};

std::vector<Rect> NfdhOrder(std::span<const Rect> rects);

struct StripResult {
  Packing packing;
  ShelfLayout layout;
  int64_t height = 0;
};

// Throws Error naming the first rect wider than `width`.
StripResult NfdhStrip(std::span<const Rect> rects, int64_t width);
StripResult FfdhStrip(std::span<const Rect> rects, int64_t width);

// Packs the longest NFDH-order prefix that fits; stops at the first shelf
// that would overflow box_h. Requires every rect to fit the box.
ShelfLayout NfdhIntoBox(std::span<const Rect> rects, int64_t box_w, int64_t box_h);

// Same algorithm with the box and rects rotated by 90 degrees; rects keep
// their orientation in the output. Shelves become columns of height box_h.
ShelfLayout NfdhIntoBoxTransposed(std::span<const Rect> rects, int64_t box_w,
                                  int64_t box_h);

// Unbounded-width transposed NFDH: columns of height `height` are opened
// left to right until everything is packed. used_extent is the total width.
ShelfLayout NfdhColumns(std::span<const Rect> rects, int64_t height);

}  // namespace strip
