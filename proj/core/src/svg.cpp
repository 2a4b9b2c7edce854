#include "boxdim/svg.hpp"

#include <algorithm>
#include <sstream>

namespace boxdim {

namespace {

double approx(const Rational& x) { return mpq_get_d(x.get_mpq_t()); }

}  // namespace

std::string render_svg(const TouchingRep& r, int ax, int ay) {
  int n = r.graph.vertex_count();
  const double canvas = 720.0, margin = 24.0;
  bool one_dim = r.dim == 1;
  if (!one_dim && (ax < 0 || ay < 0 || ax >= r.dim || ay >= r.dim || ax == ay))
    throw std::invalid_argument("render_svg: bad projection axes");

  struct Rect {
    double x0, y0, x1, y1;
  };
  std::vector<Rect> rects(static_cast<size_t>(n));
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  for (int v = 0; v < n; ++v) {
    const BoxNd& b = r.boxes[static_cast<size_t>(v)];
    Rect rc;
    rc.x0 = approx(b[one_dim ? 0 : ax].lo);
    rc.x1 = approx(b[one_dim ? 0 : ax].hi);
    if (one_dim) {
      rc.y0 = v;
      rc.y1 = v + 0.8;
    } else {
      rc.y0 = approx(b[ay].lo);
      rc.y1 = approx(b[ay].hi);
    }
    if (v == 0) {
      min_x = rc.x0;
      max_x = rc.x1;
      min_y = rc.y0;
      max_y = rc.y1;
    }
    min_x = std::min(min_x, rc.x0);
    max_x = std::max(max_x, rc.x1);
    min_y = std::min(min_y, rc.y0);
    max_y = std::max(max_y, rc.y1);
    rects[static_cast<size_t>(v)] = rc;
  }
  double span_x = std::max(max_x - min_x, 1e-9);
  double span_y = std::max(max_y - min_y, 1e-9);
  double scale = std::min((canvas - 2 * margin) / span_x, (canvas - 2 * margin) / span_y);
  auto X = [&](double x) { return margin + (x - min_x) * scale; };
  auto Y = [&](double y) { return canvas - margin - (y - min_y) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas << "\" height=\""
      << canvas << "\" viewBox=\"0 0 " << canvas << " " << canvas << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int v = 0; v < n; ++v) {
    const Rect& rc = rects[static_cast<size_t>(v)];
    double hue = n ? 360.0 * v / n : 0.0;
    svg << "  <rect x=\"" << X(rc.x0) << "\" y=\"" << Y(rc.y1) << "\" width=\""
        << (rc.x1 - rc.x0) * scale << "\" height=\"" << (rc.y1 - rc.y0) * scale
        << "\" fill=\"hsl(" << hue << ",60%,80%)\" fill-opacity=\"0.6\" stroke=\"hsl(" << hue
        << ",60%,35%)\" stroke-width=\"1\"/>\n";
  }
  for (auto [u, v] : r.graph.edges()) {
    const Rect& a = rects[static_cast<size_t>(u)];
    const Rect& b = rects[static_cast<size_t>(v)];
    svg << "  <line x1=\"" << X((a.x0 + a.x1) / 2) << "\" y1=\"" << Y((a.y0 + a.y1) / 2)
        << "\" x2=\"" << X((b.x0 + b.x1) / 2) << "\" y2=\"" << Y((b.y0 + b.y1) / 2)
        << "\" stroke=\"#555\" stroke-width=\"0.8\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (int v = 0; v < n; ++v) {
    const Rect& rc = rects[static_cast<size_t>(v)];
    svg << "  <text x=\"" << X((rc.x0 + rc.x1) / 2) << "\" y=\"" << Y((rc.y0 + rc.y1) / 2)
        << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#222\">" << v << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace boxdim
