#include "strip/classification.hpp"

#include <algorithm>
#include <optional>

namespace strip {

const char* ToString(ClassLabel label) {
  switch (label) {
    case ClassLabel::kLarge: return "large";
    case ClassLabel::kTall: return "tall";
    case ClassLabel::kVertical: return "vertical";
    case ClassLabel::kHorizontal: return "horizontal";
    case ClassLabel::kSmall: return "small";
    case ClassLabel::kMedium: return "medium";
  }
  return "?";
}

ClassParams ClassParams::FromHeights(Rational eps, Rational alpha, int k,
                                     Rational delta_h, Rational mu_h, int64_t opt,
                                     int64_t width) {
  ClassParams p;
  p.eps = eps;
  p.alpha = alpha;
  p.k = k;
  p.delta_h = delta_h;
  p.mu_h = mu_h;
  p.delta_w = eps * delta_h / 12;
  p.mu_w = eps * mu_h / 12;
  p.gamma = eps * delta_h / 2;
  p.opt = opt;
  p.width = width;
  return p;
}

void ClassParams::Validate() const {
  auto fail = [](const std::string& what) { throw Error("invalid params: " + what); };
  if (!(eps > 0 && eps < 1)) fail("eps must lie in (0,1)");
  if (!(eps < alpha)) fail("eps must be smaller than alpha");
  if (!(eps >= delta_h && delta_h > mu_h && mu_h > 0)) fail("need eps >= delta_h > mu_h > 0");
  if (!(eps >= delta_w && delta_w > mu_w && mu_w > 0)) fail("need eps >= delta_w > mu_w > 0");
  if (mu_w != eps * mu_h / 12 || delta_w != eps * delta_h / 12) {
    fail("width thresholds must equal eps/12 times the height thresholds");
  }
  if (gamma != eps * delta_h / 2) fail("gamma must equal eps*delta_h/2");
  if (k < 1) fail("k must be positive");
  if (opt < 1 || width < 1) fail("OPT and W must be positive");
}

ClassLabel Classify(int64_t w, int64_t h, const ClassParams& p) {
  const Rational hr(h);
  const Rational wr(w);
  const Rational opt(p.opt);
  const Rational width(p.width);
  const bool h_ge_delta = hr >= p.delta_h * opt;
  const bool h_le_mu = hr <= p.mu_h * opt;
  const bool h_gt_alpha = hr > p.alpha * opt;
  const bool w_ge_delta = wr >= p.delta_w * width;
  const bool w_le_mu = wr <= p.mu_w * width;
  if (h_ge_delta && w_ge_delta) return ClassLabel::kLarge;
  if (h_gt_alpha && !w_ge_delta) return ClassLabel::kTall;
  if (h_ge_delta && !h_gt_alpha && w_le_mu) return ClassLabel::kVertical;
  if (h_le_mu && w_ge_delta) return ClassLabel::kHorizontal;
  if (h_le_mu && w_le_mu) return ClassLabel::kSmall;
  return ClassLabel::kMedium;
}

ClassLabel Classify(const Rect& rect, const ClassParams& params) {
  return Classify(rect.w, rect.h, params);
}

std::vector<ClassLabel> ClassifyAll(std::span<const Rect> rects, const ClassParams& params) {
  std::vector<ClassLabel> out;
  out.reserve(rects.size());
  for (const Rect& r : rects) out.push_back(Classify(r, params));
  return out;
}

LadderMap PowerLadder(Rational eps, Rational c, Rational floor_value) {
  return [eps, c, floor_value](const Rational& x) {
    const Rational base = eps * x;
    const int64_t exponent = std::max<int64_t>(1, CeilToInt(c / base));
    Rational value = 1;
    for (int64_t m = 0; m < exponent; ++m) {
      value *= base;
      if (floor_value > 0 && value < floor_value) break;
    }
    return value;
  };
}

LadderMap GeometricLadder(Rational ratio) {
  if (!(ratio > 1)) throw Error("geometric ladder ratio must exceed 1");
  return [ratio](const Rational& x) { return x / ratio; };
}

std::vector<Rational> Ladder(const Rational& eps, const LadderMap& f, int count) {
  std::vector<Rational> ys;
  if (count <= 0) return ys;
  ys.push_back(eps);
  while (static_cast<int>(ys.size()) < count) {
    Rational next = f(ys.back());
    if (!(next > 0 && next < ys.back())) {
      throw Error("ladder map must be strictly decreasing into (0, x)");
    }
    ys.push_back(std::move(next));
  }
  return ys;
}

int64_t MediumArea(std::span<const Rect> rects, const ClassParams& params) {
  int64_t area = 0;
  for (const Rect& r : rects) {
    if (Classify(r, params) == ClassLabel::kMedium) area += r.Area();
  }
  return area;
}

ParamCandidate SelectParams(const Instance& inst, int64_t opt, const Rational& eps,
                            const Rational& alpha, int k, const LadderMap& f,
                            SelectOptions options) {
  if (!(eps > 0 && eps < 1)) throw Error("eps must lie in (0,1)");
  if (k < 1) throw Error("k must be positive");
  if (opt < MaxHeight(inst.rects())) throw Error("OPT must be at least h_max");

  Rational inv_pow = 1;
  for (int i = 0; i < k; ++i) inv_pow /= eps;  // (1/eps)^k
  const Rational total = 2 * inv_pow;
  const int64_t scan =
      total >= options.max_candidates ? options.max_candidates : FloorToInt(total);
  Rational eps_pow = 1;
  for (int i = 0; i < k; ++i) eps_pow *= eps;
  const Rational budget = eps_pow * opt * inst.width();

  const std::vector<Rational> ys = Ladder(eps, f, static_cast<int>(scan) + 1);
  std::optional<ParamCandidate> best;
  for (int j = 0; j < scan; ++j) {
    ParamCandidate cand{ClassParams::FromHeights(eps, alpha, k, ys[j], ys[j + 1], opt,
                                                 inst.width()),
                        0};
    cand.params.ladder_index = j + 1;
    cand.medium_area = MediumArea(inst.rects(), cand.params);
    if (Rational(cand.medium_area) <= budget) return cand;
    if (!best || cand.medium_area < best->medium_area) best = cand;
  }
  throw SelectParamsError("no ladder candidate within " + std::to_string(scan) +
                              " keeps the medium area below eps^k*OPT*W (best " +
                              std::to_string(best ? best->medium_area : 0) + ")",
                          best.value_or(ParamCandidate{}));
}

RoundingGrid ComputeRoundingGrid(const ClassParams& params) {
  RoundingGrid grid;
  grid.gamma_opt = params.gamma * params.opt;
  grid.step = std::max<int64_t>(1, FloorToInt(grid.gamma_opt));
  grid.budget = (1 + params.eps) * params.opt;
  return grid;
}

int64_t RoundUpTo(int64_t value, int64_t step) { return (value + step - 1) / step * step; }

std::vector<Rect> RoundHeights(std::span<const Rect> rects,
                               std::span<const ClassLabel> labels,
                               const RoundingGrid& grid) {
  std::vector<Rect> out;
  for (size_t i = 0; i < rects.size(); ++i) {
    const ClassLabel l = labels[i];
    if (l == ClassLabel::kLarge || l == ClassLabel::kTall || l == ClassLabel::kVertical) {
      Rect r = rects[i];
      r.h = RoundUpTo(r.h, grid.step);
      out.push_back(r);
    }
  }
  return out;
}

bool ConstraintReport::AllSatisfied() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ConstraintRow& r) { return r.satisfied; });
}

std::vector<std::string> ConstraintReport::Violations() const {
  std::vector<std::string> out;
  for (const ConstraintRow& r : rows) {
    if (!r.satisfied) out.push_back(r.name + ": " + r.expression);
  }
  return out;
}

ConstraintReport AuditConstraints(const ClassParams& p, const Rational& k_boxes,
                                  const Rational& k_containers, Strictness strictness) {
  if (!(k_boxes > 0 && k_containers > 0)) throw Error("K_B and K_F must be positive");
  Rational eps_pow = 1;
  for (int i = 0; i < p.k; ++i) eps_pow *= p.eps;
  ConstraintReport report;
  auto row = [&](std::string name, std::string expr, Rational lhs, Rational rhs) {
    const bool ok = lhs <= rhs;
    report.rows.push_back(
        ConstraintRow{std::move(name), std::move(expr), std::move(lhs), std::move(rhs), ok});
  };
  row("medium-area", "6*eps^k <= gamma/6", 6 * eps_pow, p.gamma / 6);
  row("box-partition", "mu_h <= eps*delta_w/K_B", p.mu_h, p.eps * p.delta_w / k_boxes);
  row("cut-vertical", "mu_w <= gamma*delta_h/(6*K_B*(1+eps))", p.mu_w,
      p.gamma * p.delta_h / (6 * k_boxes * (1 + p.eps)));
  row("container-width", "mu_w <= gamma/(3*K_F)", p.mu_w, p.gamma / (3 * k_containers));
  row("container-height", "mu_h <= eps/K_F", p.mu_h, p.eps / k_containers);
  row("small-packing", "mu_h <= 1/(31*K_F^2)", p.mu_h,
      Rational(1) / (31 * k_containers * k_containers));
  if (strictness == Strictness::kStrict && !report.AllSatisfied()) {
    std::string msg = "parameter constraints violated:";
    for (const auto& v : report.Violations()) msg += " [" + v + "]";
    throw Error(msg);
  }
  return report;
}

}  // namespace strip
