#pragma once

// Linear grouping of horizontal rects inside their horizontal boxes.

#include <cstdint>
#include <vector>

#include "strip/containers.hpp"
#include "strip/geometry.hpp"
#include "strip/rational.hpp"

namespace strip {

struct HorizontalInput {
  std::vector<Rect> rects;            // horizontal rects that are not cut
  std::vector<Placement> positions;   // same order; unrotated, inside `boxes`
  std::vector<Box> boxes;             // horizontal boxes
  Rational eps;
  int64_t opt = 1;
};

struct HorizontalGrouping {
  std::vector<Container> containers;       // global coordinates, horizontal
  std::vector<GreedyAssignment> assigned;  // bin = index into containers
  std::vector<Rect> round_pile;            // H_long plus greedy discards
  std::vector<Rect> h_long;
  int64_t group_height = 0;  // ceil(eps*OPT)
  int64_t groups = 0;        // t
  int64_t discards = 0;
  int64_t original_area = 0;
  int64_t rounded_area = 0;  // rows of the grouped rects at their rounded widths
  bool per_rect = false;     // OPT <= 1/eps: one container per rect
  bool piled_all = false;    // h(H) <= ceil(eps*OPT)
};

// Throws Error if a rect is not inside one of the boxes.
HorizontalGrouping GroupHorizontal(const HorizontalInput& input);

}  // namespace strip
