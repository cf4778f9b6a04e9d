#pragma once

// Rectangle classification relative to the optimum height and strip width.
//
// With thresholds mu_h < delta_h <= eps (heights, fractions of OPT) and
// mu_w < delta_w <= eps (widths, fractions of W), a rect is
//   Large       h >= delta_h*OPT and w >= delta_w*W
//   Tall        h >  alpha*OPT   and w <  delta_w*W
//   Vertical    h in [delta_h*OPT, alpha*OPT] and w <= mu_w*W
//   Horizontal  h <= mu_h*OPT and w >= delta_w*W
//   Small       h <= mu_h*OPT and w <= mu_w*W
//   Medium      otherwise.
// Every comparison is exact.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "strip/geometry.hpp"
#include "strip/rational.hpp"

namespace strip {

enum class ClassLabel { kLarge, kTall, kVertical, kHorizontal, kSmall, kMedium };

const char* ToString(ClassLabel label);

struct ClassParams {
  Rational eps;
  Rational alpha = Rational(1, 3);
  int k = 1;
  Rational delta_h;
  Rational mu_h;
  Rational delta_w;
  Rational mu_w;
  Rational gamma;
  int64_t opt = 1;
  int64_t width = 1;
  int ladder_index = 1;  // 1-based position of delta_h in the ladder

  // Builds the dependent thresholds from (eps, delta_h, mu_h):
  // delta_w = eps*delta_h/12, mu_w = eps*mu_h/12, gamma = eps*delta_h/2.
  static ClassParams FromHeights(Rational eps, Rational alpha, int k, Rational delta_h,
                                 Rational mu_h, int64_t opt, int64_t width);

  // Throws Error if an ordering or coupling invariant fails.
  void Validate() const;
};

ClassLabel Classify(const Rect& rect, const ClassParams& params);
ClassLabel Classify(int64_t w, int64_t h, const ClassParams& params);
std::vector<ClassLabel> ClassifyAll(std::span<const Rect> rects, const ClassParams& params);

// Strictly decreasing map used to build the threshold ladder.
using LadderMap = std::function<Rational(const Rational&)>;

// x -> (eps*x)^ceil(C/(eps*x)). The power stops early once it drops below
// `floor_value`: heights under 1/(W*OPT) separate nothing, so deeper values
// only need to stay positive and decreasing. floor_value = 0 disables it.
LadderMap PowerLadder(Rational eps, Rational c, Rational floor_value);
// x -> x / ratio, ratio > 1.
LadderMap GeometricLadder(Rational ratio);

struct SelectOptions {
  int max_candidates = 64;
};

struct ParamCandidate {
  ClassParams params;
  int64_t medium_area = 0;
};

class SelectParamsError : public Error {
 public:
  SelectParamsError(const std::string& what, ParamCandidate best)
      : Error(what), best_(std::move(best)) {}
  const ParamCandidate& best() const { return best_; }

 private:
  ParamCandidate best_;
};

// Scans y_1 = eps, y_{j+1} = f(y_j) and returns the first candidate
// (delta_h, mu_h) = (y_j, y_{j+1}) whose medium class has area at most
// eps^k * OPT * W. Scans at most min(2*(1/eps)^k, max_candidates) candidates.
ParamCandidate SelectParams(const Instance& inst, int64_t opt, const Rational& eps,
                            const Rational& alpha, int k, const LadderMap& f,
                            SelectOptions options = {});

std::vector<Rational> Ladder(const Rational& eps, const LadderMap& f, int count);

int64_t MediumArea(std::span<const Rect> rects, const ClassParams& params);

struct RoundingGrid {
  int64_t step = 1;        // r = max(1, floor(gamma*OPT))
  Rational gamma_opt;      // exact gamma*OPT
  Rational budget;         // (1+eps)*OPT, the rounded-height allowance
};

RoundingGrid ComputeRoundingGrid(const ClassParams& params);
int64_t RoundUpTo(int64_t value, int64_t step);

// Rounded copies of the Large, Tall and Vertical rects (height rounded up to
// a multiple of the step); everything else is omitted.
std::vector<Rect> RoundHeights(std::span<const Rect> rects,
                               std::span<const ClassLabel> labels,
                               const RoundingGrid& grid);

struct ConstraintRow {
  std::string name;
  std::string expression;
  Rational lhs;
  Rational rhs;
  bool satisfied = false;
};

struct ConstraintReport {
  std::vector<ConstraintRow> rows;
  bool AllSatisfied() const;
  std::vector<std::string> Violations() const;
};

enum class Strictness { kRelaxed, kStrict };

// Evaluates the six parameter inequalities the construction relies on, for
// box count bound k_boxes and container count k_containers. Strict mode
// throws Error on any violated row.
ConstraintReport AuditConstraints(const ClassParams& params, const Rational& k_boxes,
                                  const Rational& k_containers,
                                  Strictness strictness = Strictness::kRelaxed);

}  // namespace strip
