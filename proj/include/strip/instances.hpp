#pragma once

// Instance generators (including instances with known optimum) and the
// line-oriented text format:
//
//   strip <W> <n> <rot:0|1>
//   <id> <w> <h>            (n lines)
//   place <id> <x> <y> <rot:0|1>   (packing files only)

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "strip/geometry.hpp"

namespace strip {

// Deterministic, platform-independent integer draws on top of mt19937_64.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  // Uniform in [lo, hi]; requires lo <= hi.
  int64_t Uniform(int64_t lo, int64_t hi);
  bool Coin(int64_t num, int64_t den) { return Uniform(0, den - 1) < num; }

 private:
  std::mt19937_64 engine_;
};

struct GuillotineNode {
  Box region;
  int first = -1;   // child index, -1 for a leaf
  int second = -1;
  bool vertical_cut = false;
  int64_t rect_id = -1;  // leaves only
};

struct GuillotineWitness {
  Instance instance;
  Packing packing;  // perfect cover of [0,W] x [0,opt]
  int64_t opt = 0;
  std::vector<GuillotineNode> tree;  // root at index 0
};

enum class CutStyle {
  kUniform,
  // Biases cuts toward thin slabs and snaps horizontal cuts to `y_grid`, so
  // witnesses mix tall-narrow and wide-thin pieces.
  kStructured,
};

struct GuillotineOptions {
  CutStyle style = CutStyle::kUniform;
  int64_t y_grid = 1;
};

GuillotineWitness GenGuillotine(int64_t width, int64_t height, int64_t min_side,
                                int max_splits, uint64_t seed,
                                GuillotineOptions options = {});

struct PartitionInstance {
  Instance instance;
  // Side (0/1) of every element in a perfect partition, when the constructor
  // knows one.
  std::optional<std::vector<int>> hidden_partition;
};

// Rects (a_i, 1) in a strip of width sum(A)/2. A height-2 packing exists iff
// A admits a perfect partition.
PartitionInstance GenPartitionReduction(const std::vector<int64_t>& values);
// Plants a perfect partition of `n` values drawn from [1, max_value].
PartitionInstance GenPlantedPartition(int n, int64_t max_value, uint64_t seed);

struct Range {
  int64_t lo = 1;
  int64_t hi = 1;
};

Instance GenUniform(int n, int64_t width, Range w_range, Range h_range,
                    uint64_t seed, bool allow_rotations = false);

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct PackingFile {
  Instance instance;
  Packing packing;
};

void WriteInstance(std::ostream& out, const Instance& inst);
void WritePacking(std::ostream& out, const Instance& inst, const Packing& packing);
// Reads the header and rect lines; any `place` lines are returned too.
PackingFile ReadPackingFile(std::istream& in);
Instance ReadInstance(std::istream& in);

std::string InstanceToString(const Instance& inst);
std::string PackingToString(const Instance& inst, const Packing& packing);

Instance ReadInstanceFile(const std::filesystem::path& path);
PackingFile ReadPackingFile(const std::filesystem::path& path);
void WriteInstanceFile(const std::filesystem::path& path, const Instance& inst);
void WritePackingFile(const std::filesystem::path& path, const Instance& inst,
                      const Packing& packing);

}  // namespace strip
