#include "strip/pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strip/containers.hpp"
#include "strip/horizontal.hpp"
#include "strip/medium_small.hpp"
#include "strip/shelf.hpp"
#include "strip/vertical_box.hpp"

namespace strip {

void PipelineConfig::Validate() const {
  if (!(alpha >= Rational(1, 3) && alpha < Rational(1, 2))) {
    throw Error("alpha must lie in [1/3, 1/2)");
  }
  if (!(eps > 0 && eps < alpha)) throw Error("eps must lie in (0, alpha)");
  if (k < 1) throw Error("k must be positive");
}

LadderMap PipelineConfig::MakeLadder(int64_t width, int64_t opt) const {
  if (ladder == LadderKind::kGeometric) return GeometricLadder(ladder_ratio);
  return PowerLadder(eps, ladder_c, Rational(1) / (Rational(width) * opt));
}

Rational BandFactor(const Rational& alpha) { return std::max<Rational>(alpha, 1 - 2 * alpha); }

ClassParams ChooseParams(const Instance& inst, int64_t opt, const PipelineConfig& cfg) {
  if (cfg.params) return *cfg.params;
  return SelectParams(inst, opt, cfg.eps, cfg.alpha, cfg.k, cfg.MakeLadder(inst.width(), opt),
                      SelectOptions{cfg.max_candidates})
      .params;
}

namespace {

// Monotone map of y-coordinates: the gap between consecutive events is
// stretched to the next multiple of `step`, positions inside a gap keep
// their offset from the gap's lower event.
class YMap {
 public:
  YMap(std::vector<int64_t> events, int64_t step) : from_(std::move(events)) {
    std::sort(from_.begin(), from_.end());
    from_.erase(std::unique(from_.begin(), from_.end()), from_.end());
    to_.push_back(from_.front());
    for (size_t i = 1; i < from_.size(); ++i) {
      to_.push_back(to_.back() + RoundUpTo(from_[i] - from_[i - 1], step));
    }
  }
  int64_t operator()(int64_t y) const {
    auto it = std::upper_bound(from_.begin(), from_.end(), y);
    const size_t k = it == from_.begin() ? 0 : static_cast<size_t>(it - from_.begin()) - 1;
    return to_[k] + (y - from_[k]);
  }

 private:
  std::vector<int64_t> from_;
  std::vector<int64_t> to_;
};

Box Offset(Box b, int64_t dx, int64_t dy) {
  b.x += dx;
  b.y += dy;
  return b;
}

bool Has(ClassLabel l, std::initializer_list<ClassLabel> set) {
  return std::find(set.begin(), set.end(), l) != set.end();
}

// Containers whose final position is only known after assembly: the
// per-box discard boxes. Stored box-local; fixed up later.
struct FloatingGroup {
  int64_t w = 0;
  int64_t h = 0;
  std::vector<size_t> containers;  // indexes into the global container list
  std::vector<Box> local;
};

}  // namespace

GuidedResult RunGuided(const Instance& inst, const Packing& witness, int64_t opt,
                       const BoxPartitionOracle& oracle, const PipelineConfig& cfg) {
  cfg.Validate();
  const VerificationReport vr = VerifyPacking(inst, witness);
  if (!vr.ok || !vr.complete) throw Error("witness is not a complete feasible packing");
  if (vr.height > opt) throw Error("witness is higher than OPT");
  if (oracle.width != inst.width() || oracle.opt != opt) {
    throw Error("oracle frame does not match the instance");
  }
  const int64_t W = inst.width();
  const size_t n = inst.size();

  GuidedResult res;
  res.params = ChooseParams(inst, opt, cfg);
  const ClassParams& p = res.params;
  p.Validate();
  const ConformanceReport conf = CheckOracle(inst, witness, oracle, p);
  if (!conf.ok) throw Error("oracle rejected: " + conf.problems.front());

  std::vector<Placement> at(n);
  std::vector<Rect> eff(n);
  std::vector<ClassLabel> label(n);
  res.class_counts.assign(6, 0);
  for (const Placement& pl : witness.placements) {
    const Rect& r = inst.rect(pl.rect_id);
    const size_t i = static_cast<size_t>(r.id);
    at[i] = pl;
    eff[i] = Rect{r.id, EffectiveWidth(r, pl.rotated), EffectiveHeight(r, pl.rotated)};
    label[i] = Classify(eff[i], p);
    ++res.class_counts[static_cast<size_t>(label[i])];
  }
  auto is = [&](size_t i, std::initializer_list<ClassLabel> set) { return Has(label[i], set); };
  const auto ltv = {ClassLabel::kLarge, ClassLabel::kTall, ClassLabel::kVertical};

  // Rounded frame.
  const int64_t r = ComputeRoundingGrid(p).step;
  std::vector<int64_t> events{0, opt};
  for (const BoxRegion& b : oracle.boxes) {
    events.push_back(b.region.y);
    events.push_back(b.region.top());
  }
  for (size_t i = 0; i < n; ++i) {
    if (!is(i, ltv)) continue;
    events.push_back(at[i].y);
    events.push_back(at[i].y + eff[i].h);
  }
  const YMap phi(events, r);
  const int64_t opt_prime = phi(opt);
  std::vector<int64_t> ypos(n);
  std::vector<int64_t> hround(n);
  for (size_t i = 0; i < n; ++i) {
    ypos[i] = phi(at[i].y);
    hround[i] = is(i, ltv) ? RoundUpTo(eff[i].h, r) : eff[i].h;
  }
  std::vector<Box> boxes;
  for (const BoxRegion& b : oracle.boxes) {
    const int64_t y0 = phi(b.region.y);
    boxes.push_back(Box{b.region.x, y0, b.region.w, phi(b.region.top()) - y0});
  }
  if (Rational(opt_prime) > (1 + p.eps) * opt) {
    res.warnings.push_back("rounded height " + std::to_string(opt_prime) +
                           " exceeds (1+eps)*OPT");
  }

  std::vector<Container> containers;
  std::vector<int64_t> home(n, -1);  // container index of every container item
  std::vector<Rect> h_cut;
  std::vector<Rect> v_cut;
  std::vector<Rect> v_round;
  std::vector<FloatingGroup> floating;
  auto status = [&](size_t i) { return conf.status[i]; };

  // Large rects and cut talls are containers of their own.
  for (size_t i = 0; i < n; ++i) {
    if (label[i] == ClassLabel::kLarge) {
      home[i] = static_cast<int64_t>(containers.size());
      containers.push_back(
          Container{boxes[static_cast<size_t>(status(i).box)], Orientation::kVertical});
    } else if (label[i] == ClassLabel::kTall && status(i).box < 0) {
      home[i] = static_cast<int64_t>(containers.size());
      containers.push_back(
          Container{Box{at[i].x, ypos[i], eff[i].w, hround[i]}, Orientation::kVertical});
    } else if (label[i] == ClassLabel::kVertical && status(i).box < 0) {
      v_cut.push_back(eff[i]);
    } else if (label[i] == ClassLabel::kHorizontal && status(i).box < 0) {
      h_cut.push_back(eff[i]);
    }
  }

  // Vertical boxes.
  for (size_t b = 0; b < oracle.boxes.size(); ++b) {
    if (oracle.boxes[b].kind != BoxKind::kVertical) continue;
    const Box& B = boxes[b];
    VerticalBoxState st;
    st.width = B.w;
    st.height = B.h;
    st.step = r;
    std::vector<LocalRect> verticals;
    for (size_t i = 0; i < n; ++i) {
      if (label[i] == ClassLabel::kTall) {
        const Box fp{at[i].x, ypos[i], eff[i].w, hround[i]};
        if (status(i).box == static_cast<int64_t>(b)) {
          st.talls.push_back(TallItem{eff[i].id, Offset(fp, -B.x, -B.y), false});
        } else if (status(i).box < 0 && InteriorsOverlap(fp, B)) {
          const int64_t x0 = std::max(fp.x, B.x);
          const int64_t x1 = std::min(fp.right(), B.right());
          st.talls.push_back(
              TallItem{eff[i].id, Box{x0 - B.x, fp.y - B.y, x1 - x0, fp.h}, true});
        }
      } else if (label[i] == ClassLabel::kVertical && status(i).box == static_cast<int64_t>(b)) {
        verticals.push_back(
            LocalRect{Rect{eff[i].id, eff[i].w, hround[i]}, at[i].x - B.x, ypos[i] - B.y});
      }
    }
    st.slices = SliceVertical(verticals);
    if (CountStateViolations(st) != 0) throw Error("vertical box content overlaps");
    const BoxProcessing bp = ProcessVerticalBox(st);
    const RepackResult& rp = bp.repacked;
    res.vertical_boxes.push_back(VerticalBoxStats{
        B.w, B.h, static_cast<int64_t>(rp.profile.good.size()),
        static_cast<int64_t>(bp.arranged.subboxes.size()),
        static_cast<int64_t>(rp.discarded.size())});
    if (!SubBoxCountWithin(static_cast<int64_t>(bp.arranged.subboxes.size()), p.eps, p.gamma)) {
      res.warnings.push_back("vertical box exceeds the sub-box bound");
    }

    // Talls: one container per tall run.
    for (const SubBox& sb : bp.arranged.subboxes) {
      if (sb.kind != SubBoxKind::kTallRun) continue;
      const size_t c = containers.size();
      containers.push_back(Container{Offset(sb.region, B.x, B.y), Orientation::kVertical});
      for (const TallItem& t : rp.state.talls) {
        if (!t.cut && sb.region.Contains(t.box)) home[static_cast<size_t>(t.rect_id)] = static_cast<int64_t>(c);
      }
    }
    // Slices: unit-slice containers per region, then the greedy conversion.
    std::vector<Box> regions;
    for (const SubBox& sb : bp.arranged.subboxes) {
      if (sb.kind == SubBoxKind::kPseudoRun || sb.kind == SubBoxKind::kCorner) {
        regions.push_back(sb.region);
      }
    }
    for (const SubBox& sb : rp.empty_boxes) regions.push_back(sb.region);
    std::vector<std::vector<Slice>> in_region(regions.size());
    for (const Slice& s : rp.state.slices) {
      size_t k = 0;
      while (k < regions.size() && !regions[k].Contains(s.box())) ++k;
      if (k == regions.size()) throw Error("slice outside every sub-box");
      Slice local = s;
      local.column -= regions[k].x;
      in_region[k].push_back(local);
    }
    std::vector<GreedyBin> bins;
    std::vector<size_t> bin_container;
    auto add_slice_containers = [&](const std::vector<Slice>& slices, int64_t w, int64_t h,
                                    std::optional<Box> place, FloatingGroup* group) {
      if (slices.empty()) return;
      int64_t min_h = h;
      std::set<int64_t> heights;
      for (const Slice& s : slices) {
        min_h = std::min(min_h, s.h);
        heights.insert(s.h);
      }
      const int64_t d = (h + min_h - 1) / min_h;
      const SliceContainers made = RearrangeUnitSlices(slices, w, h, d,
                                                       static_cast<int64_t>(heights.size()));
      for (const Container& c : made.containers) {
        bins.push_back(GreedyBin{c.region.h, c.region.w});
        bin_container.push_back(containers.size());
        if (place) {
          containers.push_back(Container{Offset(c.region, place->x, place->y), c.orientation});
        } else {
          group->containers.push_back(containers.size());
          group->local.push_back(c.region);
          containers.push_back(c);
        }
      }
    };
    for (size_t k = 0; k < regions.size(); ++k) {
      add_slice_containers(in_region[k], regions[k].w, regions[k].h,
                           Offset(regions[k], B.x, B.y), nullptr);
    }
    if (!rp.discarded.empty()) {
      FloatingGroup group{rp.discard_width, rp.discard_height, {}, {}};
      add_slice_containers(rp.discarded, rp.discard_width, rp.discard_height, std::nullopt,
                           &group);
      floating.push_back(std::move(group));
    }
    std::vector<GreedyItem> items;
    for (const LocalRect& v : verticals) items.push_back(GreedyItem{v.rect.id, v.rect.h, v.rect.w});
    const IntegralResult integral = Integralize(items, bins);
    for (const GreedyAssignment& a : integral.assigned) {
      home[static_cast<size_t>(a.id)] =
          static_cast<int64_t>(bin_container[static_cast<size_t>(a.bin)]);
    }
    for (int64_t id : integral.discarded) v_round.push_back(eff[static_cast<size_t>(id)]);
  }

  // Horizontal rects.
  HorizontalInput hin;
  hin.eps = p.eps;
  hin.opt = opt;
  for (size_t b = 0; b < oracle.boxes.size(); ++b) {
    if (oracle.boxes[b].kind == BoxKind::kHorizontal) hin.boxes.push_back(boxes[b]);
  }
  for (size_t i = 0; i < n; ++i) {
    if (label[i] == ClassLabel::kHorizontal && status(i).box >= 0) {
      hin.rects.push_back(eff[i]);
      hin.positions.push_back(Placement{eff[i].id, at[i].x, ypos[i], false});
    }
  }
  const HorizontalGrouping hg = GroupHorizontal(hin);
  const size_t h_base = containers.size();
  for (const Container& c : hg.containers) containers.push_back(c);
  for (const GreedyAssignment& a : hg.assigned) {
    home[static_cast<size_t>(a.id)] = static_cast<int64_t>(h_base + static_cast<size_t>(a.bin));
  }

  // Medium rects.
  std::vector<Rect> medium;
  std::vector<Rect> small;
  for (size_t i = 0; i < n; ++i) {
    if (label[i] == ClassLabel::kMedium) medium.push_back(eff[i]);
    if (label[i] == ClassLabel::kSmall) small.push_back(eff[i]);
  }
  const MediumPacking mp = PackMedium(medium, p);

  // Knapsack over every container rect.
  std::set<size_t> floating_set;
  for (const FloatingGroup& g : floating) floating_set.insert(g.containers.begin(), g.containers.end());
  int64_t container_area = 0;
  for (size_t c = 0; c < containers.size(); ++c) {
    if (!floating_set.contains(c)) container_area += containers[c].region.Area();
  }
  std::vector<Rect> items;
  std::vector<int64_t> fallback;
  for (size_t i = 0; i < n; ++i) {
    if (home[i] >= 0) {
      items.push_back(eff[i]);
      fallback.push_back(home[i]);
    }
  }
  const KnapsackInstance ki = BuildSizes(items, containers, inst.allow_rotations(), p,
                                         opt_prime * W - container_area);
  res.knapsack = SolveByComponents(ki, &fallback, SolveOptions{cfg.knapsack_state_cap});
  if (!res.knapsack.assignment) throw Error("container assignment infeasible");
  const std::vector<int64_t>& assignment = *res.knapsack.assignment;

  // Small rects, plus whatever the area knapsack took.
  std::map<int64_t, bool> turned;  // relative to the witness orientation
  std::vector<Rect> small_items;
  auto add_small = [&](const Rect& rect, bool rot) {
    turned[rect.id] = rot;
    small_items.push_back(rot ? Rect{rect.id, rect.h, rect.w} : rect);
  };
  for (const Rect& s : small) {
    const bool rot = inst.allow_rotations() && s.w < s.h && s.h <= W &&
                     Classify(s.h, s.w, p) == ClassLabel::kSmall;
    add_small(s, rot);
  }
  for (size_t i = 0; i < items.size(); ++i) {
    const size_t j = static_cast<size_t>(assignment[i]);
    if (ki.knapsacks[j].container < 0) add_small(items[i], ki.rotated[i][j]);
  }
  std::vector<Container> frame_containers;
  for (size_t c = 0; c < containers.size(); ++c) {
    if (!floating_set.contains(c)) frame_containers.push_back(containers[c]);
  }
  const Rational k_f = std::max<int64_t>(1, static_cast<int64_t>(containers.size()));
  const SmallPacking sp =
      PackSmall(small_items, frame_containers, Box{0, 0, W, opt_prime}, p, opt_prime, k_f);
  res.in_grid_small = static_cast<int64_t>(sp.in_grid.size());

  res.constraints = AuditConstraints(
      p, std::max<int64_t>(1, static_cast<int64_t>(oracle.boxes.size())), k_f, cfg.strictness);
  for (const std::string& v : res.constraints.Violations()) res.warnings.push_back("constraint " + v);

  // Assembly.
  std::vector<Placement> out;
  auto emit = [&](int64_t id, int64_t x, int64_t y, bool rot_rel) {
    const size_t i = static_cast<size_t>(id);
    out.push_back(Placement{id, x, y, at[i].rotated != rot_rel});
  };
  res.regions.push_back(BoxRegion{Box{0, 0, W, opt_prime}, BoxKind::kAuxiliary, "B_OPT'"});
  int64_t y = opt_prime;
  auto strip_box = [&](const std::string& name, const ShelfLayout& layout, int64_t height,
                       const std::map<int64_t, bool>* rot) {
    for (const Placement& pl : layout.Placements(0, y)) {
      emit(pl.rect_id, pl.x, pl.y, rot && rot->contains(pl.rect_id) && rot->at(pl.rect_id));
    }
    if (height > 0) res.regions.push_back(BoxRegion{Box{0, y, W, height}, BoxKind::kAuxiliary, name});
    y += height;
  };
  strip_box("B_M,hor", mp.horizontal, mp.hor_height, nullptr);
  const StripResult round_strip = NfdhStrip(hg.round_pile, W);
  strip_box("B_H,round", round_strip.layout, round_strip.height, nullptr);
  const StripResult cut_strip = NfdhStrip(h_cut, W);
  strip_box("B_H,cut", cut_strip.layout, cut_strip.height, nullptr);
  strip_box("B_S", sp.overflow, sp.strip_height, &turned);
  const int64_t strips_top = y;

  // Top band: medium columns, cut verticals and discarded verticals on the
  // left, discard boxes on the right.
  int64_t x = 0;
  int64_t left_h = 0;
  if (mp.ver_width > 0) {
    for (const Placement& pl : mp.vertical.Placements(0, y)) emit(pl.rect_id, pl.x, pl.y, false);
    res.regions.push_back(
        BoxRegion{Box{0, y, mp.ver_width, mp.ver_height}, BoxKind::kAuxiliary, "B_M,ver"});
    x = mp.ver_width;
    left_h = mp.ver_height;
  }
  auto side_by_side = [&](const std::string& name, const std::vector<Rect>& rects) {
    if (rects.empty()) return;
    const int64_t x0 = x;
    int64_t h = 0;
    for (const Rect& rect : rects) {
      emit(rect.id, x, y, false);
      x += rect.w;
      h = std::max(h, rect.h);
    }
    res.regions.push_back(BoxRegion{Box{x0, y, x - x0, h}, BoxKind::kAuxiliary, name});
    left_h = std::max(left_h, h);
  };
  side_by_side("B_V,cut", v_cut);
  side_by_side("B_V,round", v_round);
  const int64_t left_w = x;
  if (Rational(left_w) > p.gamma * W) {
    res.warnings.push_back("left group of the top band is wider than gamma*W");
  }
  int64_t band_h = left_h;
  if (!floating.empty()) {
    std::vector<Rect> group_rects;
    int64_t widest = 0;
    for (size_t g = 0; g < floating.size(); ++g) {
      group_rects.push_back(Rect{static_cast<int64_t>(g), floating[g].w, floating[g].h});
      widest = std::max(widest, floating[g].w);
    }
    const bool beside = left_w < W && widest <= W - left_w;
    const int64_t disc_x = beside ? left_w : 0;
    const int64_t disc_y = beside ? y : y + left_h;
    const StripResult disc = NfdhStrip(group_rects, beside ? W - left_w : W);
    for (const Placement& pl : disc.packing.placements) {
      const FloatingGroup& g = floating[static_cast<size_t>(pl.rect_id)];
      for (size_t k = 0; k < g.containers.size(); ++k) {
        containers[g.containers[k]].region = Offset(g.local[k], disc_x + pl.x, disc_y + pl.y);
      }
    }
    res.regions.push_back(BoxRegion{Box{disc_x, disc_y, beside ? W - left_w : W, disc.height},
                                    BoxKind::kAuxiliary, "B_disc"});
    if (beside) {
      band_h = std::max(left_h, disc.height);
    } else {
      band_h = left_h + disc.height;
      res.warnings.push_back("discard boxes do not fit beside the left group; stacked above");
    }
  }

  // Container contents, now that every container has its final position.
  const Realized realized = RealizeAssignment(ki, assignment, items, containers);
  for (const Placement& pl : realized.placements) emit(pl.rect_id, pl.x, pl.y, pl.rotated);
  for (const Placement& pl : sp.in_grid) emit(pl.rect_id, pl.x, pl.y, turned.at(pl.rect_id));

  res.packing.placements = std::move(out);
  std::sort(res.packing.placements.begin(), res.packing.placements.end(),
            [](const Placement& a, const Placement& b) { return a.rect_id < b.rect_id; });
  res.containers = containers;
  const VerificationReport fin = VerifyPacking(inst, res.packing);
  if (!fin.ok || !fin.complete) {
    throw Error("final packing failed verification: " +
                (fin.violations.empty() ? std::string("incomplete") : fin.violations.front().message));
  }
  res.height = fin.height;

  // Certificate.
  Certificate& cert = res.cert;
  cert.opt = opt;
  cert.opt_prime = opt_prime;
  cert.achieved = res.height;
  const Rational eps_opt = p.eps * opt;
  const Rational band_allow = BandFactor(p.alpha) * opt;
  auto term = [&](std::string name, int64_t h, Rational budget) {
    cert.terms.push_back(CertTerm{std::move(name), h, budget, Rational(h) <= budget});
  };
  term("rounding", opt_prime - opt, eps_opt);
  term("B_M,hor", mp.hor_height, 3 * eps_opt);
  term("B_H,round", round_strip.height, 4 * eps_opt);
  term("B_H,cut", cut_strip.height, p.mu_h * opt + 6 * p.eps * opt_prime);
  term("B_S", sp.strip_height, p.eps * opt_prime);
  term("top band", band_h,
       std::max<Rational>(p.alpha, 1 + p.eps - 2 * p.alpha) * opt_prime);
  Rational excess = 0;
  for (size_t t = 0; t + 1 < cert.terms.size(); ++t) excess += cert.terms[t].height;
  excess += std::max(Rational(0), Rational(band_h) - band_allow);
  cert.c = excess / eps_opt;
  cert.bound = (1 + BandFactor(p.alpha) + cert.c * p.eps) * opt;
  cert.holds = Rational(cert.achieved) <= cert.bound &&
               cert.achieved <= strips_top + band_h;
  cert.in_regime = std::all_of(cert.terms.begin(), cert.terms.end(),
                               [](const CertTerm& t) { return t.within; });
  return res;
}

HeuristicResult RunHeuristic(const Instance& inst) {
  std::vector<Rect> rects;
  std::vector<bool> rotated(inst.size(), false);
  for (const Rect& r : inst.rects()) {
    const bool turn = inst.allow_rotations() &&
                      (r.w > inst.width() || (r.w < r.h && r.h <= inst.width()));
    rotated[static_cast<size_t>(r.id)] = turn;
    rects.push_back(turn ? Rect{r.id, r.h, r.w} : r);
  }
  StripResult nf = NfdhStrip(rects, inst.width());
  StripResult ff = FfdhStrip(rects, inst.width());
  HeuristicResult out;
  const bool use_ff = ff.height < nf.height;
  out.algorithm = use_ff ? "ffdh" : "nfdh";
  out.packing = use_ff ? std::move(ff.packing) : std::move(nf.packing);
  for (Placement& pl : out.packing.placements) pl.rotated = rotated[static_cast<size_t>(pl.rect_id)];
  std::sort(out.packing.placements.begin(), out.packing.placements.end(),
            [](const Placement& a, const Placement& b) { return a.rect_id < b.rect_id; });
  out.height = PackingHeight(inst, out.packing);
  out.lower = ComputeLowerBounds(inst);
  out.ratio = out.lower.Best() > 0 ? Rational(out.height) / out.lower.Best() : Rational(0);
  return out;
}

}  // namespace strip
