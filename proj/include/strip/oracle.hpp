#pragma once

// Box partitions of the optimal region [0,W] x [0,OPT] into large,
// horizontal and vertical boxes, their text format, derivation from a
// guillotine cut tree and the conformance check.
//
// Text format:
//   oracle <W> <OPT> <count>
//   box <x> <y> <w> <h> <L|H|V>      (count lines)

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "strip/classification.hpp"
#include "strip/geometry.hpp"
#include "strip/instances.hpp"

namespace strip {

struct BoxPartitionOracle {
  int64_t width = 0;
  int64_t opt = 0;
  std::vector<BoxRegion> boxes;
};

void WriteOracle(std::ostream& out, const BoxPartitionOracle& oracle);
BoxPartitionOracle ReadOracle(std::istream& in);
std::string OracleToString(const BoxPartitionOracle& oracle);
BoxPartitionOracle ReadOracleFile(const std::filesystem::path& path);
void WriteOracleFile(const std::filesystem::path& path, const BoxPartitionOracle& oracle);

struct RectStatus {
  int64_t box = -1;            // containing box, -1 when cut
  std::vector<int64_t> cut_by;  // boxes it crosses when cut
};

struct ConformanceReport {
  bool ok = true;
  std::vector<std::string> problems;
  std::vector<RectStatus> status;  // by rect id
  int64_t h_cut_area = 0;
  Rational h_cut_bound;  // 3*eps*OPT*W
};

// Checks the partition against the witness packing: the boxes tile the
// region; large boxes match a large rect; horizontal boxes are at most
// delta_h*OPT high and vertical ones at most delta_w*W wide; large rects sit
// in an equal large box; horizontal rects are inside horizontal boxes or
// cut, with bounded cut area; tall and vertical rects are inside vertical
// boxes or nicely cut by vertical boxes only.
ConformanceReport CheckOracle(const Instance& inst, const Packing& packing,
                              const BoxPartitionOracle& oracle, const ClassParams& params);

// Coarsens the cut tree top down: a node becomes a horizontal box if it is
// low enough and holds no large, tall or vertical rect, a vertical box if it
// is narrow enough and holds no large or horizontal rect, a large box if it
// is a large leaf, and is split otherwise. Throws Error (with the failing
// node) if a leaf fits none of these, or if the result does not conform.
BoxPartitionOracle DeriveOracleFromWitness(const GuillotineWitness& witness,
                                           const ClassParams& params);

}  // namespace strip
