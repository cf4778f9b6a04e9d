#pragma once

// Deterministic SVG rendering of a packing. The strip bottom is drawn at the
// image bottom.

#include <optional>
#include <string>
#include <vector>

#include "strip/classification.hpp"
#include "strip/geometry.hpp"

namespace strip {

struct RenderOptions {
  int64_t cell = 4;                       // pixels per unit
  std::optional<ClassParams> params;      // colors by class when set
  std::vector<Container> containers;      // outlined
  std::vector<BoxRegion> regions;         // outlined and labelled
};

std::string RenderSvg(const Instance& inst, const Packing& packing,
                      const RenderOptions& options = {});

}  // namespace strip
