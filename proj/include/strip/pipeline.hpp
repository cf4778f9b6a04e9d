#pragma once

// End-to-end runs. Guided mode takes a packing of height OPT together with a
// box partition of it and rebuilds it into the final layout:
//
//   [0, OPT']             rounded optimal region, containers + small rects
//   then, full width      B_M,hor, B_H,round, B_H,cut, B_S
//   then a top band       B_M,ver | B_V,cut | B_V,round  ...  B_disc
//
// and certifies the achieved height term by term. Heuristic mode is the
// best of NFDH and FFDH.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strip/classification.hpp"
#include "strip/geometry.hpp"
#include "strip/knapsack.hpp"
#include "strip/oracle.hpp"

namespace strip {

enum class Mode { kHeuristic, kGuided };
enum class LadderKind { kPower, kGeometric };

struct PipelineConfig {
  Rational eps = Rational(1, 4);
  Rational alpha = Rational(1, 3);
  int k = 1;
  LadderKind ladder = LadderKind::kPower;
  Rational ladder_c = 5;      // exponent constant of the power ladder
  Rational ladder_ratio = 2;  // ratio of the geometric ladder
  int max_candidates = 64;
  Mode mode = Mode::kHeuristic;
  Strictness strictness = Strictness::kRelaxed;
  int64_t knapsack_state_cap = 10'000'000;
  uint64_t seed = 0;
  // Skips the ladder search when set.
  std::optional<ClassParams> params;

  // Throws Error unless alpha in [1/3, 1/2) and 0 < eps < alpha.
  void Validate() const;
  LadderMap MakeLadder(int64_t width, int64_t opt) const;
};

// max{alpha, 1 - 2*alpha}.
Rational BandFactor(const Rational& alpha);

struct CertTerm {
  std::string name;
  int64_t height = 0;
  Rational budget;       // allowance for this term
  bool within = true;    // height <= budget
};

struct Certificate {
  int64_t opt = 0;
  int64_t opt_prime = 0;
  int64_t achieved = 0;
  std::vector<CertTerm> terms;  // rounding slack, strips and the top band
  Rational c;                   // itemized excess over (1 + band factor)*OPT, in units of eps*OPT
  Rational bound;               // (1 + max{alpha, 1-2alpha} + c*eps) * OPT
  bool holds = false;           // achieved <= bound
  bool in_regime = false;       // every term within its budget
};

struct VerticalBoxStats {
  int64_t width = 0;
  int64_t height = 0;
  int64_t good = 0;  // |G|
  int64_t subboxes = 0;
  int64_t discarded_slices = 0;
};

struct GuidedResult {
  Packing packing;
  int64_t height = 0;
  ClassParams params;
  ConstraintReport constraints;
  Certificate cert;
  std::vector<int64_t> class_counts;  // indexed by ClassLabel
  std::vector<VerticalBoxStats> vertical_boxes;
  std::vector<Container> containers;  // global, including discard containers
  std::vector<BoxRegion> regions;     // B_OPT' and the auxiliary boxes, global
  ComponentSolution knapsack;
  int64_t in_grid_small = 0;
  std::vector<std::string> warnings;
};

// `witness` must be a complete feasible packing of height <= opt.
GuidedResult RunGuided(const Instance& inst, const Packing& witness, int64_t opt,
                       const BoxPartitionOracle& oracle, const PipelineConfig& cfg);

// Picks parameters for (inst, opt) per the config.
ClassParams ChooseParams(const Instance& inst, int64_t opt, const PipelineConfig& cfg);

struct HeuristicResult {
  Packing packing;
  int64_t height = 0;
  std::string algorithm;  // "nfdh" or "ffdh"
  LowerBounds lower;
  Rational ratio;  // height / max lower bound
};

// With rotations every rect is first turned to its lower orientation that
// fits the strip.
HeuristicResult RunHeuristic(const Instance& inst);

}  // namespace strip
