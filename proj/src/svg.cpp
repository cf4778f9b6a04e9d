#include "strip/svg.hpp"

#include <sstream>

namespace strip {

namespace {

const char* Fill(ClassLabel label) {
  switch (label) {
    case ClassLabel::kLarge: return "#4e79a7";
    case ClassLabel::kTall: return "#e15759";
    case ClassLabel::kVertical: return "#f28e2b";
    case ClassLabel::kHorizontal: return "#59a14f";
    case ClassLabel::kSmall: return "#b07aa1";
    case ClassLabel::kMedium: return "#edc948";
  }
  return "#bab0ac";
}

}  // namespace

std::string RenderSvg(const Instance& inst, const Packing& packing, const RenderOptions& opt) {
  if (opt.cell < 1) throw Error("cell size must be positive");
  int64_t height = PackingHeight(inst, packing);
  for (const BoxRegion& r : opt.regions) height = std::max(height, r.region.top());
  const int64_t c = opt.cell;
  const int64_t px_w = inst.width() * c;
  const int64_t px_h = std::max<int64_t>(1, height) * c;
  // Strip y grows upward, SVG y downward.
  auto flip = [&](const Box& b) {
    std::ostringstream s;
    s << "x=\"" << b.x * c << "\" y=\"" << (height - b.top()) * c << "\" width=\"" << b.w * c
      << "\" height=\"" << b.h * c << "\"";
    return s.str();
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px_w << "\" height=\"" << px_h
      << "\" viewBox=\"0 0 " << px_w << ' ' << px_h << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << px_w << "\" height=\"" << px_h
      << "\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
  for (const Placement& p : packing.placements) {
    if (!inst.HasRect(p.rect_id)) continue;
    const Rect& r = inst.rect(p.rect_id);
    const char* fill = "#bab0ac";
    if (opt.params) {
      fill = Fill(Classify(EffectiveWidth(r, p.rotated), EffectiveHeight(r, p.rotated), *opt.params));
    }
    out << "<rect id=\"r" << r.id << "\" " << flip(Footprint(r, p)) << " fill=\"" << fill
        << "\" stroke=\"#333333\" stroke-width=\"0.5\"/>\n";
  }
  for (const Container& ct : opt.containers) {
    out << "<rect " << flip(ct.region) << " fill=\"none\" stroke=\""
        << (ct.orientation == Orientation::kVertical ? "#1f77b4" : "#2ca02c")
        << "\" stroke-dasharray=\"3,2\" stroke-width=\"1\"/>\n";
  }
  for (const BoxRegion& br : opt.regions) {
    out << "<rect " << flip(br.region) << " fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << br.region.x * c + 2 << "\" y=\"" << (height - br.region.top()) * c + 10
        << "\" font-size=\"9\" font-family=\"monospace\">" << br.name << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace strip
