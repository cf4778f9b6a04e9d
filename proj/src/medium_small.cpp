#include "strip/medium_small.hpp"

#include <algorithm>
#include <set>

namespace strip {

MediumPacking PackMedium(std::span<const Rect> medium, const ClassParams& p) {
  Rational eps_pow = 1;
  for (int i = 0; i < p.k; ++i) eps_pow *= p.eps;
  if (Rational(TotalArea(medium)) > eps_pow * p.opt * p.width) {
    throw Error("medium area " + std::to_string(TotalArea(medium)) +
                " exceeds eps^k*OPT*W");
  }
  std::vector<Rect> band;
  std::vector<Rect> rest;
  for (const Rect& r : medium) {
    const Rational h(r.h);
    (h > p.mu_h * p.opt && h < p.delta_h * p.opt ? band : rest).push_back(r);
  }
  MediumPacking out;
  out.ver_height = FloorToInt(p.alpha * p.opt);
  if (!band.empty()) {
    out.horizontal = NfdhStrip(band, p.width).layout;
    out.hor_height = out.horizontal.used_extent;
  }
  if (!rest.empty()) {
    out.vertical = NfdhColumns(rest, out.ver_height);
    out.ver_width = out.vertical.used_extent;
  }
  out.hor_height_bound = 3 * p.eps * p.opt;
  out.hor_shelf_bound = 3 * p.eps / p.mu_h;
  out.ver_width_bound = p.gamma * p.width / 3;
  out.ver_shelf_bound = p.gamma / (3 * p.mu_w);
  out.hor_height_ok = Rational(out.hor_height) <= out.hor_height_bound;
  out.hor_shelves_ok = Rational(out.horizontal.shelves.size()) <= out.hor_shelf_bound;
  out.ver_width_ok = Rational(out.ver_width) <= out.ver_width_bound;
  out.ver_shelves_ok = Rational(out.vertical.shelves.size()) <= out.ver_shelf_bound;
  return out;
}

SmallPacking PackSmall(std::span<const Rect> small, std::span<const Container> containers,
                       const Box& frame, const ClassParams& p, int64_t opt_prime,
                       const Rational& k_containers) {
  SmallPacking out;
  const Rational k2 = k_containers * k_containers;
  out.unpacked_bound = 15 * k2 * p.mu_h * opt_prime * p.width;
  out.height_bound = p.mu_h * p.opt + 30 * k2 * p.mu_h * opt_prime;

  std::set<int64_t> xs{frame.x, frame.right()};
  std::set<int64_t> ys{frame.y, frame.top()};
  for (const Container& c : containers) {
    xs.insert(c.region.x);
    xs.insert(c.region.right());
    ys.insert(c.region.y);
    ys.insert(c.region.top());
  }
  const std::vector<int64_t> gx(xs.begin(), xs.end());
  const std::vector<int64_t> gy(ys.begin(), ys.end());
  std::vector<Box> usable;
  for (size_t j = 0; j + 1 < gy.size(); ++j) {
    for (size_t i = 0; i + 1 < gx.size(); ++i) {
      const Box cell{gx[i], gy[j], gx[i + 1] - gx[i], gy[j + 1] - gy[j]};
      if (!frame.Contains(cell)) continue;
      const bool covered = std::any_of(containers.begin(), containers.end(),
                                       [&](const Container& c) { return InteriorsOverlap(c.region, cell); });
      if (covered) continue;
      ++out.cells;
      if (Rational(cell.w) >= p.mu_w * p.width && Rational(cell.h) >= p.mu_h * p.opt) {
        usable.push_back(cell);
      }
    }
  }
  out.usable_cells = static_cast<int64_t>(usable.size());

  std::vector<Rect> pending(small.begin(), small.end());
  for (const Box& cell : usable) {
    if (pending.empty()) break;
    std::vector<Rect> fits;
    std::vector<Rect> skip;
    for (const Rect& r : pending) (r.w <= cell.w && r.h <= cell.h ? fits : skip).push_back(r);
    if (fits.empty()) continue;
    ShelfLayout layout = NfdhIntoBox(fits, cell.w, cell.h);
    for (const Placement& pl : layout.Placements(cell.x, cell.y)) out.in_grid.push_back(pl);
    pending = std::move(skip);
    pending.insert(pending.end(), layout.leftover.begin(), layout.leftover.end());
  }
  if (!pending.empty()) {
    out.overflow = NfdhStrip(pending, p.width).layout;
    out.strip_height = out.overflow.used_extent;
    out.unpacked_area = TotalArea(pending);
  }
  return out;
}

}  // namespace strip
