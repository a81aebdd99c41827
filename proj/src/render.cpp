#include "arcforge/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "arcforge/layout.hpp"

namespace arcforge {

namespace {

constexpr double kScale = 220.0;
constexpr double kMargin = 30.0;
constexpr double kPitch = 1.4;    // triangle-to-triangle spacing
constexpr double kHeight = 0.8660254037844386;

struct XY {
  double x = 0, y = 0;
};

XY corner_xy(int tri, int c) {
  const double ox = tri * kPitch;
  XY p;
  switch (c) {
    case 0: p = {ox, 0.0}; break;
    case 1: p = {ox + 1.0, 0.0}; break;
    default: p = {ox + 0.5, kHeight}; break;
  }
  return {kMargin + kScale * p.x, kMargin + kScale * p.y};
}

XY port_xy(const Layout& L, const PortRef& p) {
  if (!p.side_port) return corner_xy(p.corner.tri, p.corner.corner);
  const XY a = corner_xy(p.slot.tri, mod3(p.slot.side + 1));
  const XY b = corner_xy(p.slot.tri, mod3(p.slot.side + 2));
  const double m =
      static_cast<double>(L.side_events[p.slot.tri][p.slot.side].size());
  const double u = (p.index + 1.0) / (m + 1.0);
  return {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

XY segment_meet(XY p1, XY p2, XY p3, XY p4) {
  const double dx1 = p2.x - p1.x, dy1 = p2.y - p1.y;
  const double dx2 = p4.x - p3.x, dy2 = p4.y - p3.y;
  const double den = dx1 * dy2 - dy1 * dx2;
  if (std::fabs(den) < 1e-12)
    throw std::logic_error("crossing chords drawn parallel");
  const double s = ((p3.x - p1.x) * dy2 - (p3.y - p1.y) * dx2) / den;
  return {p1.x + s * dx1, p1.y + s * dy1};
}

}  // namespace

std::string render_svg(const IdealTriangulation& T, const ArcSystem& s) {
  if (s.surface != T.name)
    throw std::invalid_argument("system recorded for surface '" + s.surface +
                                "' does not match fixture '" + T.name + "'");
  const Layout L = make_layout(T, s.members);

  const double w = 2 * kMargin + kScale * (kPitch * (T.ntri - 1) + 1.0);
  const double h = 2 * kMargin + kScale * kHeight;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) +
         " " + num(h) + "\">\n";
  svg += "<style>.t{fill:none;stroke:#999;stroke-width:1}"
         ".a{fill:none;stroke:#1f4e9c;stroke-width:1.5}"
         ".p{fill:#c0392b}.x{fill:#222}</style>\n";

  for (int t = 0; t < T.ntri; ++t) {
    svg += "<polygon class=\"t\" points=\"";
    for (int c = 0; c < 3; ++c) {
      const XY p = corner_xy(t, c);
      if (c) svg += " ";
      svg += num(p.x) + "," + num(p.y);
    }
    svg += "\"/>\n";
  }

  for (int v = 0; v < T.nvertices; ++v) {
    bool drawn = false;
    for (int t = 0; t < T.ntri && !drawn; ++t)
      for (int c = 0; c < 3 && !drawn; ++c)
        if (T.vertex_at({t, c}) == v) {
          const XY p = corner_xy(t, c);
          svg += "<circle class=\"p\" cx=\"" + num(p.x) + "\" cy=\"" +
                 num(p.y) + "\" r=\"5\"/>\n";
          drawn = true;
        }
  }

  for (size_t a = 0; a < L.arcs.size(); ++a) {
    const int begin = L.arc_chord_begin[a];
    const int legs = L.arcs[a].edge_arc ? 1 : L.arcs[a].crossings() + 1;
    svg += "<path class=\"a\" d=\"";
    for (int leg = 0; leg < legs; ++leg) {
      const LayoutChord& c = L.chords[begin + leg];
      const XY p = port_xy(L, c.entry);
      const XY q = port_xy(L, c.exit);
      if (leg) svg += " ";
      svg += "M" + num(p.x) + " " + num(p.y) + " L" + num(q.x) + " " +
             num(q.y);
    }
    svg += "\"/>\n";
  }

  for (const auto& X : L.crossings) {
    const LayoutChord& c1 = L.chords[X.chord_lo];
    const LayoutChord& c2 = L.chords[X.chord_hi];
    const XY m = segment_meet(port_xy(L, c1.entry), port_xy(L, c1.exit),
                              port_xy(L, c2.entry), port_xy(L, c2.exit));
    svg += "<circle class=\"x\" cx=\"" + num(m.x) + "\" cy=\"" + num(m.y) +
           "\" r=\"2.5\"/>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace arcforge
