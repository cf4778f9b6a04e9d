#include "strip/instances.hpp"

#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

namespace strip {

int64_t Rng::Uniform(int64_t lo, int64_t hi) {
  if (lo > hi) throw Error("empty range in Rng::Uniform");
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<int64_t>(engine_());
  // Rejection sampling keeps draws unbiased and identical on every platform.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<int64_t>(draw % span);
}

namespace {

// Smallest multiple of `grid` that is >= value.
int64_t CeilTo(int64_t value, int64_t grid) { return (value + grid - 1) / grid * grid; }

// Candidate offset for a cut across a side of length `len`; nullopt when the
// side cannot be split.
std::optional<int64_t> PickCut(Rng& rng, int64_t len, int64_t min_side, int64_t grid,
                               bool structured) {
  const int64_t lo = CeilTo(min_side, grid);
  const int64_t hi = (len - min_side) / grid * grid;
  if (lo > hi) return std::nullopt;
  if (structured && rng.Coin(1, 3)) {
    return rng.Coin(1, 2) ? lo : hi;
  }
  return rng.Uniform(lo / grid, hi / grid) * grid;
}

}  // namespace

GuillotineWitness GenGuillotine(int64_t width, int64_t height, int64_t min_side,
                                int max_splits, uint64_t seed,
                                GuillotineOptions options) {
  if (min_side < 1 || width < min_side || height < min_side) {
    throw Error("guillotine generator needs W, H >= min_side >= 1");
  }
  if (options.y_grid < 1) throw Error("y_grid must be >= 1");
  const bool structured = options.style == CutStyle::kStructured;
  Rng rng(seed);
  GuillotineWitness witness;
  witness.opt = height;
  witness.tree.push_back(GuillotineNode{Box{0, 0, width, height}});

  std::deque<std::pair<int, int>> queue{{0, 0}};
  int splits = 0;
  while (!queue.empty() && splits < max_splits) {
    auto [index, depth] = queue.front();
    queue.pop_front();
    const Box region = witness.tree[index].region;
    const bool prefer_vertical = depth % 2 == 0;
    std::optional<int64_t> cut;
    bool vertical = prefer_vertical;
    for (int attempt = 0; attempt < 2 && !cut; ++attempt) {
      vertical = attempt == 0 ? prefer_vertical : !prefer_vertical;
      cut = vertical ? PickCut(rng, region.w, min_side, 1, structured)
                     : PickCut(rng, region.h, min_side, options.y_grid, structured);
    }
    if (!cut) continue;
    Box a = region;
    Box b = region;
    if (vertical) {
      a.w = *cut;
      b.x += *cut;
      b.w -= *cut;
    } else {
      a.h = *cut;
      b.y += *cut;
      b.h -= *cut;
    }
    const int ia = static_cast<int>(witness.tree.size());
    witness.tree.push_back(GuillotineNode{a});
    witness.tree.push_back(GuillotineNode{b});
    witness.tree[index].first = ia;
    witness.tree[index].second = ia + 1;
    witness.tree[index].vertical_cut = vertical;
    queue.emplace_back(ia, depth + 1);
    queue.emplace_back(ia + 1, depth + 1);
    ++splits;
  }

  std::vector<Rect> rects;
  for (GuillotineNode& node : witness.tree) {
    if (node.first >= 0) continue;
    node.rect_id = static_cast<int64_t>(rects.size());
    rects.push_back(Rect{node.rect_id, node.region.w, node.region.h});
    witness.packing.placements.push_back(
        Placement{node.rect_id, node.region.x, node.region.y, false});
  }
  witness.instance = Instance(width, std::move(rects), false);
  return witness;
}

PartitionInstance GenPartitionReduction(const std::vector<int64_t>& values) {
  if (values.size() < 2) throw Error("partition reduction needs at least two values");
  int64_t sum = 0;
  for (int64_t v : values) {
    if (v < 1) throw Error("partition values must be positive");
    sum += v;
  }
  if (sum % 2 != 0) {
    throw Error("partition reduction needs an even total; sum is " + std::to_string(sum));
  }
  const int64_t width = sum / 2;
  std::vector<Rect> rects;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] > width) {
      throw Error("value " + std::to_string(values[i]) +
                  " exceeds half the total, no partition and no valid strip");
    }
    rects.push_back(Rect{static_cast<int64_t>(i), values[i], 1});
  }
  return PartitionInstance{Instance(width, std::move(rects), false), std::nullopt};
}

PartitionInstance GenPlantedPartition(int n, int64_t max_value, uint64_t seed) {
  if (n < 2 || max_value < 1) throw Error("planted partition needs n >= 2, max >= 1");
  Rng rng(seed);
  std::vector<int64_t> values;
  std::vector<int> side;
  int64_t left = 0;
  int64_t right = 0;
  for (int i = 0; i < n - 1; ++i) {
    const int64_t v = rng.Uniform(1, max_value);
    values.push_back(v);
    // Greedy keeps the running difference within max_value.
    if (left <= right) {
      left += v;
      side.push_back(0);
    } else {
      right += v;
      side.push_back(1);
    }
  }
  // The last element balances the two sides exactly.
  int64_t diff = left - right;
  if (diff == 0) {
    // Split one unit pair so the balancing element stays positive.
    values.push_back(1);
    side.push_back(0);
    values.push_back(1);
    side.push_back(1);
  } else {
    values.push_back(diff > 0 ? diff : -diff);
    side.push_back(diff > 0 ? 1 : 0);
  }
  PartitionInstance out = GenPartitionReduction(values);
  out.hidden_partition = side;
  return out;
}

Instance GenUniform(int n, int64_t width, Range w_range, Range h_range, uint64_t seed,
                    bool allow_rotations) {
  if (w_range.lo > w_range.hi || h_range.lo > h_range.hi || w_range.lo < 1 ||
      h_range.lo < 1) {
    throw Error("uniform generator needs non-empty positive side ranges");
  }
  if (width < 1) throw Error("strip width must be >= 1");
  Rng rng(seed);
  std::vector<Rect> rects;
  rects.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int64_t w = std::min(rng.Uniform(w_range.lo, w_range.hi), width);
    const int64_t h = rng.Uniform(h_range.lo, h_range.hi);
    rects.push_back(Rect{i, w, h});
  }
  return Instance(width, std::move(rects), allow_rotations);
}

void WriteInstance(std::ostream& out, const Instance& inst) {
  out << "strip " << inst.width() << ' ' << inst.size() << ' '
      << (inst.allow_rotations() ? 1 : 0) << '\n';
  for (const Rect& r : inst.rects()) out << r.id << ' ' << r.w << ' ' << r.h << '\n';
}

void WritePacking(std::ostream& out, const Instance& inst, const Packing& packing) {
  WriteInstance(out, inst);
  for (const Placement& p : packing.placements) {
    out << "place " << p.rect_id << ' ' << p.x << ' ' << p.y << ' '
        << (p.rotated ? 1 : 0) << '\n';
  }
}

namespace {

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int64_t ToInt(const std::string& tok, int line) {
  size_t used = 0;
  int64_t value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

bool ToFlag(const std::string& tok, int line) {
  if (tok == "0") return false;
  if (tok == "1") return true;
  throw ParseError(line, "expected 0 or 1, got '" + tok + "'");
}

}  // namespace

PackingFile ReadPackingFile(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next = [&]() -> std::optional<std::vector<std::string>> {
    while (std::getline(in, line)) {
      ++line_no;
      auto toks = Tokens(line);
      if (toks.empty() || toks[0][0] == '#') continue;
      return toks;
    }
    return std::nullopt;
  };

  auto header = next();
  if (!header) throw ParseError(line_no + 1, "missing 'strip' header");
  if (header->size() != 4 || (*header)[0] != "strip") {
    throw ParseError(line_no, "header must be 'strip <W> <n> <rot>'");
  }
  const int header_line = line_no;
  const int64_t width = ToInt((*header)[1], line_no);
  const int64_t n = ToInt((*header)[2], line_no);
  const bool rot = ToFlag((*header)[3], line_no);
  if (width < 1) throw ParseError(line_no, "strip width must be >= 1");
  if (n < 0) throw ParseError(line_no, "rect count must be >= 0");

  std::vector<Rect> rects;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int64_t i = 0; i < n; ++i) {
    auto toks = next();
    if (!toks) throw ParseError(line_no + 1, "expected " + std::to_string(n) + " rect lines");
    if (toks->size() != 3) throw ParseError(line_no, "rect line must be '<id> <w> <h>'");
    Rect r{ToInt((*toks)[0], line_no), ToInt((*toks)[1], line_no),
           ToInt((*toks)[2], line_no)};
    if (r.id < 0 || r.id >= n) throw ParseError(line_no, "rect id out of range 0..n-1");
    if (seen[r.id]) throw ParseError(line_no, "duplicate id " + std::to_string(r.id));
    seen[r.id] = true;
    if (r.w < 1 || r.h < 1) throw ParseError(line_no, "sides must be >= 1");
    if ((rot ? std::min(r.w, r.h) : r.w) > width) {
      throw ParseError(line_no, "rect " + std::to_string(r.id) + " wider than the strip");
    }
    rects.push_back(r);
  }
  PackingFile file;
  try {
    file.instance = Instance(width, std::move(rects), rot);
  } catch (const Error& e) {
    throw ParseError(header_line, e.what());
  }
  while (auto toks = next()) {
    if ((*toks)[0] != "place" || toks->size() != 5) {
      throw ParseError(line_no, "expected 'place <id> <x> <y> <rot>'");
    }
    file.packing.placements.push_back(Placement{ToInt((*toks)[1], line_no),
                                                ToInt((*toks)[2], line_no),
                                                ToInt((*toks)[3], line_no),
                                                ToFlag((*toks)[4], line_no)});
  }
  return file;
}

Instance ReadInstance(std::istream& in) { return ReadPackingFile(in).instance; }

std::string InstanceToString(const Instance& inst) {
  std::ostringstream out;
  WriteInstance(out, inst);
  return out.str();
}

std::string PackingToString(const Instance& inst, const Packing& packing) {
  std::ostringstream out;
  WritePacking(out, inst, packing);
  return out.str();
}

namespace {

std::ifstream OpenIn(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

std::ofstream OpenOut(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

}  // namespace

Instance ReadInstanceFile(const std::filesystem::path& path) {
  auto in = OpenIn(path);
  return ReadInstance(in);
}

PackingFile ReadPackingFile(const std::filesystem::path& path) {
  auto in = OpenIn(path);
  return ReadPackingFile(in);
}

void WriteInstanceFile(const std::filesystem::path& path, const Instance& inst) {
  auto out = OpenOut(path);
  WriteInstance(out, inst);
}

void WritePackingFile(const std::filesystem::path& path, const Instance& inst,
                      const Packing& packing) {
  auto out = OpenOut(path);
  WritePacking(out, inst, packing);
}

}  // namespace strip
