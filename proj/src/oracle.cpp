#include "strip/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace strip {

namespace {

char KindLetter(BoxKind kind) {
  switch (kind) {
    case BoxKind::kLarge: return 'L';
    case BoxKind::kHorizontal: return 'H';
    case BoxKind::kVertical: return 'V';
    case BoxKind::kAuxiliary: break;
  }
  throw Error("auxiliary boxes cannot appear in an oracle");
}

Box Intersection(const Box& a, const Box& b) {
  const int64_t x0 = std::max(a.x, b.x);
  const int64_t y0 = std::max(a.y, b.y);
  const int64_t x1 = std::min(a.right(), b.right());
  const int64_t y1 = std::min(a.top(), b.top());
  return Box{x0, y0, std::max<int64_t>(0, x1 - x0), std::max<int64_t>(0, y1 - y0)};
}

}  // namespace

void WriteOracle(std::ostream& out, const BoxPartitionOracle& oracle) {
  out << "oracle " << oracle.width << ' ' << oracle.opt << ' ' << oracle.boxes.size() << '\n';
  for (const BoxRegion& b : oracle.boxes) {
    out << "box " << b.region.x << ' ' << b.region.y << ' ' << b.region.w << ' ' << b.region.h
        << ' ' << KindLetter(b.kind) << '\n';
  }
}

BoxPartitionOracle ReadOracle(std::istream& in) {
  BoxPartitionOracle oracle;
  std::string line;
  int lineno = 0;
  bool header = false;
  size_t expected = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (!header) {
      if (tag != "oracle" || !(ss >> oracle.width >> oracle.opt >> expected)) {
        throw ParseError(lineno, "expected 'oracle <W> <OPT> <count>'");
      }
      header = true;
      continue;
    }
    Box b;
    std::string kind;
    if (tag != "box" || !(ss >> b.x >> b.y >> b.w >> b.h >> kind)) {
      throw ParseError(lineno, "expected 'box <x> <y> <w> <h> <L|H|V>'");
    }
    BoxKind k;
    if (kind == "L") k = BoxKind::kLarge;
    else if (kind == "H") k = BoxKind::kHorizontal;
    else if (kind == "V") k = BoxKind::kVertical;
    else throw ParseError(lineno, "unknown box kind '" + kind + "'");
    if (b.w <= 0 || b.h <= 0) throw ParseError(lineno, "box sides must be positive");
    oracle.boxes.push_back(BoxRegion{b, k, kind + std::to_string(oracle.boxes.size())});
  }
  if (!header) throw ParseError(lineno, "missing oracle header");
  if (oracle.boxes.size() != expected) {
    throw ParseError(lineno, "expected " + std::to_string(expected) + " boxes, found " +
                                 std::to_string(oracle.boxes.size()));
  }
  return oracle;
}

std::string OracleToString(const BoxPartitionOracle& oracle) {
  std::ostringstream ss;
  WriteOracle(ss, oracle);
  return ss.str();
}

BoxPartitionOracle ReadOracleFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return ReadOracle(in);
}

void WriteOracleFile(const std::filesystem::path& path, const BoxPartitionOracle& oracle) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  WriteOracle(out, oracle);
}

ConformanceReport CheckOracle(const Instance& inst, const Packing& packing,
                              const BoxPartitionOracle& oracle, const ClassParams& p) {
  ConformanceReport rep;
  rep.h_cut_bound = 3 * p.eps * p.opt * p.width;
  rep.status.resize(inst.size());
  auto fail = [&](std::string what) {
    rep.ok = false;
    rep.problems.push_back(std::move(what));
  };
  const Box frame{0, 0, inst.width(), p.opt};
  const auto& boxes = oracle.boxes;

  int64_t area = 0;
  for (size_t i = 0; i < boxes.size(); ++i) {
    const Box& b = boxes[i].region;
    area += b.Area();
    if (!frame.Contains(b)) fail("box " + std::to_string(i) + " leaves [0,W]x[0,OPT]");
    for (size_t j = i + 1; j < boxes.size(); ++j) {
      if (InteriorsOverlap(b, boxes[j].region)) {
        fail("boxes " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
    }
    if (boxes[i].kind == BoxKind::kHorizontal && Rational(b.h) > p.delta_h * p.opt) {
      fail("horizontal box " + std::to_string(i) + " is higher than delta_h*OPT");
    }
    if (boxes[i].kind == BoxKind::kVertical && Rational(b.w) > p.delta_w * p.width) {
      fail("vertical box " + std::to_string(i) + " is wider than delta_w*W");
    }
  }
  if (area != frame.Area()) fail("boxes do not tile [0,W]x[0,OPT]");

  for (const Placement& pl : packing.placements) {
    const Rect& r = inst.rect(pl.rect_id);
    const Box fp = Footprint(r, pl);
    const ClassLabel label = Classify(EffectiveWidth(r, pl.rotated),
                                      EffectiveHeight(r, pl.rotated), p);
    RectStatus& st = rep.status[static_cast<size_t>(pl.rect_id)];
    for (size_t i = 0; i < boxes.size(); ++i) {
      const Box& b = boxes[i].region;
      if (b.Contains(fp)) {
        st.box = static_cast<int64_t>(i);
      } else if (InteriorsOverlap(b, fp)) {
        st.cut_by.push_back(static_cast<int64_t>(i));
      }
    }
    const std::string name = "rect " + std::to_string(r.id);
    const BoxKind in_kind =
        st.box >= 0 ? boxes[static_cast<size_t>(st.box)].kind : BoxKind::kAuxiliary;
    switch (label) {
      case ClassLabel::kLarge:
        if (st.box < 0 || in_kind != BoxKind::kLarge ||
            !(boxes[static_cast<size_t>(st.box)].region == fp)) {
          fail(name + " (large) is not alone in an equal large box");
        }
        break;
      case ClassLabel::kHorizontal:
        if (st.box >= 0 && in_kind != BoxKind::kHorizontal) {
          fail(name + " (horizontal) lies in a non-horizontal box");
        }
        if (st.box < 0) rep.h_cut_area += r.Area();
        break;
      case ClassLabel::kTall:
      case ClassLabel::kVertical:
        if (st.box >= 0 && in_kind != BoxKind::kVertical) {
          fail(name + " lies in a non-vertical box");
        }
        for (int64_t b : st.cut_by) {
          const BoxRegion& br = boxes[static_cast<size_t>(b)];
          if (br.kind != BoxKind::kVertical || Intersection(br.region, fp).h != fp.h) {
            fail(name + " is not nicely cut by vertical box " + std::to_string(b));
          }
        }
        break;
      case ClassLabel::kSmall:
      case ClassLabel::kMedium:
        break;
    }
  }
  for (const BoxRegion& br : boxes) {
    if (br.kind != BoxKind::kLarge) continue;
    bool matched = false;
    for (const Placement& pl : packing.placements) {
      matched = matched || Footprint(inst.rect(pl.rect_id), pl) == br.region;
    }
    if (!matched) fail("large box " + br.name + " matches no rect");
  }
  if (Rational(rep.h_cut_area) > rep.h_cut_bound) {
    fail("horizontal cut area " + std::to_string(rep.h_cut_area) + " exceeds 3*eps*OPT*W");
  }
  return rep;
}

BoxPartitionOracle DeriveOracleFromWitness(const GuillotineWitness& witness,
                                           const ClassParams& p) {
  const Instance& inst = witness.instance;
  BoxPartitionOracle oracle{inst.width(), witness.opt, {}};
  std::vector<ClassLabel> leaf_label(inst.size());
  for (const Rect& r : inst.rects()) leaf_label[static_cast<size_t>(r.id)] = Classify(r, p);

  // Class mask of the leaves below each node, computed bottom up.
  std::vector<unsigned> mask(witness.tree.size(), 0);
  for (size_t i = witness.tree.size(); i-- > 0;) {
    const GuillotineNode& n = witness.tree[i];
    if (n.first < 0) {
      mask[i] = 1u << static_cast<unsigned>(leaf_label[static_cast<size_t>(n.rect_id)]);
    } else {
      mask[i] = mask[static_cast<size_t>(n.first)] | mask[static_cast<size_t>(n.second)];
    }
  }
  auto bit = [](ClassLabel l) { return 1u << static_cast<unsigned>(l); };
  const unsigned horizontal_ok = bit(ClassLabel::kHorizontal) | bit(ClassLabel::kSmall) |
                                 bit(ClassLabel::kMedium);
  const unsigned vertical_ok = bit(ClassLabel::kTall) | bit(ClassLabel::kVertical) |
                               bit(ClassLabel::kSmall) | bit(ClassLabel::kMedium);

  std::vector<size_t> stack{0};
  while (!stack.empty()) {
    const size_t i = stack.back();
    stack.pop_back();
    const GuillotineNode& n = witness.tree[i];
    const Box& b = n.region;
    const std::string name = std::to_string(oracle.boxes.size());
    if ((mask[i] & ~horizontal_ok) == 0 && Rational(b.h) <= p.delta_h * p.opt) {
      oracle.boxes.push_back(BoxRegion{b, BoxKind::kHorizontal, "H" + name});
    } else if ((mask[i] & ~vertical_ok) == 0 && Rational(b.w) <= p.delta_w * p.width) {
      oracle.boxes.push_back(BoxRegion{b, BoxKind::kVertical, "V" + name});
    } else if (n.first < 0 && mask[i] == bit(ClassLabel::kLarge)) {
      oracle.boxes.push_back(BoxRegion{b, BoxKind::kLarge, "L" + name});
    } else if (n.first < 0) {
      throw Error("guillotine leaf " + std::to_string(n.rect_id) +
                  " fits no box kind (" + ToString(leaf_label[static_cast<size_t>(n.rect_id)]) +
                  ")");
    } else {
      stack.push_back(static_cast<size_t>(n.second));
      stack.push_back(static_cast<size_t>(n.first));
    }
  }
  const ConformanceReport rep = CheckOracle(inst, witness.packing, oracle, p);
  if (!rep.ok) throw Error("derived oracle does not conform: " + rep.problems.front());
  return oracle;
}

}  // namespace strip
