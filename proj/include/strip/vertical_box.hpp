#pragma once

// Processing of one vertical box: unit slicing of vertical rects, pushing
// tall rects to the top or bottom edge, free/pseudo stripe profiles, the
// horizontal rearrangement into homogeneous sub-boxes, and repacking of free
// stripes into the space the rearrangement opens up.
//
// Everything is in box-local coordinates: the box is [0, width] x [0, height]
// and column i is the unit stripe [i, i+1].

#include <cstdint>
#include <span>
#include <vector>

#include "strip/geometry.hpp"
#include "strip/rational.hpp"

namespace strip {

struct Slice {
  int64_t rect_id = 0;
  int64_t column = 0;
  int64_t y = 0;
  int64_t h = 0;

  Box box() const { return Box{column, y, 1, h}; }
  friend bool operator==(const Slice&, const Slice&) = default;
};

struct TallItem {
  int64_t rect_id = 0;
  Box box;           // clipped to the box for cut items
  bool cut = false;  // crosses a vertical edge of the box; never moves
};

struct VerticalBoxState {
  int64_t width = 0;
  int64_t height = 0;
  int64_t step = 1;  // rounding step every tall height and the box height obey
  std::vector<TallItem> talls;
  std::vector<Slice> slices;
};

// A rect positioned in box-local coordinates.
struct LocalRect {
  Rect rect;
  int64_t x = 0;
  int64_t y = 0;
};

std::vector<Slice> SliceVertical(std::span<const LocalRect> members);

// Boxes of all talls and slices; used for overlap checks.
std::vector<Box> OccupiedBoxes(const VerticalBoxState& state);
// Number of overlapping pairs or items leaving the box; 0 for a valid state.
int CountStateViolations(const VerticalBoxState& state);

// Moves every non-cut tall rect against the top or bottom edge, in
// descending height order. Slices in the columns it passes are shifted to
// the vacated side and keep their column. Throws Error when a column holds
// more than two talls or a tall has talls both above and below it.
VerticalBoxState NormalizeTall(VerticalBoxState state);

// True when every non-cut tall touches the top or bottom edge.
bool TallsTouchEdges(const VerticalBoxState& state);

enum class StripeKind { kFree, kPseudo };

struct Stripe {
  int64_t column = 0;
  int64_t lo = 0;
  int64_t hi = 0;
  StripeKind kind = StripeKind::kPseudo;
  bool corner = false;  // part of a corner sub-box
};

struct StripeInfo {
  std::vector<Stripe> stripes;
  std::vector<int64_t> free_height;  // f(i), 0 when the column has no free stripe
  std::vector<Box> corner_boxes;     // at most four
};

// Requires a normalized state.
StripeInfo DeriveStripes(const VerticalBoxState& state);

enum class SubBoxKind { kTallRun, kPseudoRun, kCorner, kEmpty };

struct SubBox {
  Box region;
  SubBoxKind kind = SubBoxKind::kPseudoRun;
};

struct Rearrangement {
  VerticalBoxState state;              // talls and pseudo slices moved; no free slices
  std::vector<Slice> lifted;           // free-stripe slices at their old position
  std::vector<SubBox> subboxes;        // tall, pseudo and corner sub-boxes
  std::vector<int64_t> free_lo;        // per column, start of the newly free gap
  std::vector<int64_t> new_free;       // g(i)
  std::vector<bool> pinned;            // columns that never move
};

// Permutes movable columns so equal-height tall/pseudo runs touching the
// same edge become contiguous: bottom items by height descending, top items
// by height ascending, ties by kind then original x. Columns touching cut
// talls (and any tall overlapping them) stay in place. Free-stripe slices
// are lifted out of the state; RepackGoodStripes puts them back.
Rearrangement RearrangeSubboxes(const VerticalBoxState& normalized,
                                const StripeInfo& stripes);

// Upper bound on the sub-box count: 2(1+eps)/gamma * 6^floor((1+eps)/gamma) + 4.
// Exact, so only call it when floor((1+eps)/gamma) is modest.
BigInt SubBoxBound(const Rational& eps, const Rational& gamma);
// count <= SubBoxBound(eps, gamma) without materializing huge powers.
bool SubBoxCountWithin(int64_t count, const Rational& eps, const Rational& gamma);

struct StripeProfile {
  std::vector<int64_t> f;
  std::vector<int64_t> g;
  std::vector<int64_t> good;  // columns with g(i) >= f(i)
};

struct RepackResult {
  VerticalBoxState state;       // after repacking good stripes
  StripeProfile profile;
  // Newly free gaps between the vertical lines through sub-box edges.
  std::vector<SubBox> empty_boxes;
  std::vector<Slice> discarded;     // residual slices, columns left-justified
  int64_t discard_width = 0;
  int64_t discard_height = 0;
};

// Moves the i-th free stripe's slices into the i-th newly free gap whenever
// g(i) >= f(i); the rest go to the discard box. Throws Error if the free
// area is not conserved by the rearrangement.
RepackResult RepackGoodStripes(const VerticalBoxState& normalized,
                               const StripeInfo& stripes, const Rearrangement& arranged);

// Whole chain for one box.
struct BoxProcessing {
  VerticalBoxState normalized;
  StripeInfo stripes;
  Rearrangement arranged;
  RepackResult repacked;
};

BoxProcessing ProcessVerticalBox(const VerticalBoxState& state);

// Random vertical-box states for property suites. OPT is a multiple of the
// denominator of gamma = eps*delta_h/2, so the step r = gamma*OPT is an
// integer; every tall height and the box height are multiples of r, talls
// are taller than alpha*OPT and the box is at most (1+eps)*OPT high.
struct VerticalBoxSample {
  VerticalBoxState state;
  int64_t opt = 0;
  Rational eps;
  Rational alpha;
  Rational gamma;
};

VerticalBoxSample GenVerticalBox(int64_t max_width, const Rational& eps, const Rational& alpha,
                                 const Rational& delta_h, uint64_t seed);

}  // namespace strip
