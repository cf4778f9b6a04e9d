#pragma once

// Randomized property suites behind `stripack certify`. Every suite is
// deterministic in its seed and counts violations instead of throwing.

#include <cstdint>
#include <string>
#include <vector>

#include "strip/rational.hpp"

namespace strip {

struct SuiteResult {
  std::string name;
  int64_t trials = 0;
  int64_t violations = 0;
  std::vector<std::string> failures;  // first few, for the report
  std::vector<std::string> notes;     // summary statistics
  bool ok() const { return violations == 0; }
};

// NFDH into a strip: height <= h_max + 2a/W.
SuiteResult SuiteNfdhHeight(int64_t trials, uint64_t seed);
// NFDH into a box: when rects are left over, packed area >= (a-w)(b-h).
SuiteResult SuiteNfdhArea(int64_t trials, uint64_t seed);
// Vertical-box processing: sum f = sum g and |G| >= gamma*w/(1+eps-2alpha+gamma).
// delta_h cycles through eps, eps/2, eps/4.
SuiteResult SuiteRepack(int64_t trials, uint64_t seed, const Rational& eps,
                        const Rational& alpha, int64_t max_width = 500);
// Unit-slice containers: count <= d(q+1)^d, area preserved, disjoint, inside.
SuiteResult SuiteUnitSlices(int64_t trials, uint64_t seed);
// Greedy integralization of a sliceable assignment: discards <= bins.
SuiteResult SuiteIntegralize(int64_t trials, uint64_t seed);

// Names accepted by RunSuite: nfdh-height, nfdh-area, repack, slices, integral.
std::vector<std::string> SuiteNames();
SuiteResult RunSuite(const std::string& name, int64_t trials, uint64_t seed,
                     const Rational& eps, const Rational& alpha);

}  // namespace strip
