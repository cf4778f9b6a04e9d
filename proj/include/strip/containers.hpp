#pragma once

// Container formation from unit slices, and the greedy conversion of a
// sliced packing into an integral one.

#include <cstdint>
#include <span>
#include <vector>

#include "strip/geometry.hpp"
#include "strip/vertical_box.hpp"

namespace strip {

struct SliceContainers {
  std::vector<Container> containers;  // box-local
  std::vector<Slice> placed;          // slices at their new column/offset
  int64_t types = 0;                  // distinct column types
};

// Box of width box_w and height box_h whose content is unit-width slices
// (Slice::y is ignored). Every slice must be at least box_h/d high, at most
// q distinct heights may occur and a column may not exceed box_h. Columns
// are stacked in descending order, grouped by their height multiset, and
// each level of a group becomes one vertical container. Throws Error on a
// violated precondition.
SliceContainers RearrangeUnitSlices(std::span<const Slice> slices, int64_t box_w,
                                    int64_t box_h, int64_t d, int64_t q);

// Same with the axes exchanged: Slice::column is the row index and Slice::h
// the slice width. Containers are horizontal and `placed` uses the same
// transposed convention (column = row, y = x offset).
SliceContainers RearrangeUnitSlicesHorizontal(std::span<const Slice> slices, int64_t box_w,
                                              int64_t box_h, int64_t d, int64_t q);

// An item to integralize: `key` must not exceed the container key (the
// cross dimension), `size` is consumed from the container capacity.
struct GreedyItem {
  int64_t id = 0;
  int64_t key = 0;
  int64_t size = 0;
};

struct GreedyBin {
  int64_t key = 0;
  int64_t capacity = 0;
};

struct GreedyAssignment {
  int64_t id = 0;
  int64_t bin = 0;     // index into the bins as passed
  int64_t offset = 0;  // along the stacking axis
};

struct IntegralResult {
  std::vector<GreedyAssignment> assigned;
  std::vector<int64_t> discarded;  // item ids
};

// Items by key descending fill bins by key descending; the item that first
// overflows a bin is discarded and the next bin opened (an exactly full bin
// discards nothing). Throws Error when items remain after the last bin or an
// item lands in a bin with a smaller key, both of which rule out a sliced
// packing.
IntegralResult Integralize(std::span<const GreedyItem> items, std::span<const GreedyBin> bins);

}  // namespace strip
