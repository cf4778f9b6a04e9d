#pragma once

// Packing of the medium rects into two thin auxiliary boxes, and of the
// small rects into the free grid cells left between containers.

#include <cstdint>
#include <span>
#include <vector>

#include "strip/classification.hpp"
#include "strip/geometry.hpp"
#include "strip/shelf.hpp"

namespace strip {

struct MediumPacking {
  ShelfLayout horizontal;  // B_M,hor, box-local, shelves are vertical containers
  ShelfLayout vertical;    // B_M,ver, box-local, columns are horizontal containers
  int64_t hor_height = 0;
  int64_t ver_width = 0;
  int64_t ver_height = 0;  // floor(alpha*OPT)
  // Bounds for the two boxes and whether they hold.
  Rational hor_height_bound;   // 3*eps*OPT
  Rational hor_shelf_bound;    // 3*eps/mu_h
  Rational ver_width_bound;    // gamma*W/3
  Rational ver_shelf_bound;    // gamma/(3*mu_w)
  bool hor_height_ok = true;
  bool hor_shelves_ok = true;
  bool ver_width_ok = true;
  bool ver_shelves_ok = true;
};

// Rects with mu_h*OPT < h < delta_h*OPT go to B_M,hor (NFDH, width W), all
// others to B_M,ver (transposed NFDH with column height floor(alpha*OPT)).
// Throws Error if the medium area exceeds eps^k*OPT*W.
MediumPacking PackMedium(std::span<const Rect> medium, const ClassParams& params);

struct SmallPacking {
  std::vector<Placement> in_grid;  // global coordinates
  ShelfLayout overflow;            // B_S, box-local
  int64_t cells = 0;               // free grid cells
  int64_t usable_cells = 0;        // cells at least mu_w*W by mu_h*OPT
  int64_t unpacked_area = 0;       // area of rects sent to B_S
  int64_t strip_height = 0;        // height of B_S
  Rational unpacked_bound;         // 15*K_F^2*mu_h*OPT'*W
  Rational height_bound;           // mu_h*OPT + 30*K_F^2*mu_h*OPT'
};

// `frame` is B_OPT'; `containers` must lie inside it and be disjoint.
// k_containers is K_F, used only for the reported bounds.
SmallPacking PackSmall(std::span<const Rect> small, std::span<const Container> containers,
                       const Box& frame, const ClassParams& params, int64_t opt_prime,
                       const Rational& k_containers);

}  // namespace strip
