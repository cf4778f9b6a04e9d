#pragma once

// Assignment of rects to containers as a multiple knapsack problem, solved
// exactly by a memoized DP over residual capacity vectors.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "strip/classification.hpp"
#include "strip/geometry.hpp"

namespace strip {

inline constexpr int64_t kInfinite = std::numeric_limits<int64_t>::max();

struct Knapsack {
  int64_t capacity = 0;
  int64_t container = -1;  // index into the container list; -1 for the area knapsack
};

struct KnapsackInstance {
  std::vector<int64_t> items;  // rect ids
  std::vector<Knapsack> knapsacks;
  std::vector<std::vector<int64_t>> size;   // size[i][j], kInfinite if it cannot go there
  std::vector<std::vector<bool>> rotated;   // orientation realizing size[i][j]
};

// Horizontal containers have capacity = height, vertical ones = width.
// With rotations the smaller feasible orientation is used and an area
// knapsack of capacity free_area is appended that accepts exactly the rects
// that are small in some orientation (size = area).
KnapsackInstance BuildSizes(std::span<const Rect> rects, std::span<const Container> containers,
                            bool rotations, const ClassParams& params, int64_t free_area);

struct SolveOptions {
  int64_t state_cap = 10'000'000;
};

// Knapsack index per item, or nullopt if no total assignment exists. Items
// are branched on in a fixed order (fewest usable knapsacks first), each
// trying knapsacks in increasing index. Throws ResourceError past the state
// cap.
std::optional<std::vector<int64_t>> SolveAssignment(const KnapsackInstance& ki,
                                                    SolveOptions options = {});

struct ComponentSolution {
  std::optional<std::vector<int64_t>> assignment;
  int64_t components = 0;
  int64_t fallback_components = 0;  // solved by the supplied fallback
};

// Solves each connected component of the item/knapsack compatibility graph
// separately. When a component hits the state cap and `fallback` is a valid
// assignment on it, the fallback is used for that component; otherwise the
// ResourceError propagates.
ComponentSolution SolveByComponents(const KnapsackInstance& ki,
                                    const std::vector<int64_t>* fallback = nullptr,
                                    SolveOptions options = {});

// True if every item has a finite size in its knapsack and no capacity is
// exceeded.
bool AssignmentValid(const KnapsackInstance& ki, std::span<const int64_t> assignment);

struct Realized {
  std::vector<Placement> placements;  // items in containers, global coordinates
  std::vector<int64_t> area_items;    // ids sent to the area knapsack
  std::vector<bool> area_rotated;     // orientation making each of them small
};

// Stacks items in item order: bottom to top in horizontal containers, left
// to right in vertical ones.
Realized RealizeAssignment(const KnapsackInstance& ki, std::span<const int64_t> assignment,
                           std::span<const Rect> rects, std::span<const Container> containers);

}  // namespace strip
