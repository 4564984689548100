#include "plot_output.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace spiralkit::cli {

namespace {

constexpr double kCanvas = 1024.0;

struct Viewport {
  double x_min, y_max, span;

  double x(double re) const { return (re - x_min) / span * kCanvas; }
  double y(double im) const { return (y_max - im) / span * kCanvas; }
};

Viewport fit(const Scene& scene) {
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = -lo_x;
  auto include = [&](Complex p) {
    lo_x = std::min(lo_x, p.real());
    hi_x = std::max(hi_x, p.real());
    lo_y = std::min(lo_y, p.imag());
    hi_y = std::max(hi_y, p.imag());
  };
  for (const auto& styled : scene.curves) {
    for (Complex p : styled.curve.points()) include(p);
  }
  if (scene.disk) {
    include(scene.disk->center + Complex{scene.disk->radius, scene.disk->radius});
    include(scene.disk->center - Complex{scene.disk->radius, scene.disk->radius});
  }
  if (!(lo_x <= hi_x)) {
    lo_x = lo_y = -1.0;
    hi_x = hi_y = 1.0;
  }
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double cx = 0.5 * (lo_x + hi_x);
  const double cy = 0.5 * (lo_y + hi_y);
  span *= 1.1;  // 5% margin on each side
  return {cx - span / 2, cy + span / 2, span};
}

void write_path(std::ostringstream& out, const StyledCurve& styled, const Viewport& view) {
  out << "<path d=\"";
  const auto points = styled.curve.points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << (i == 0 ? "M" : " L") << format_number(view.x(points[i].real())) << ','
        << format_number(view.y(points[i].imag()));
  }
  if (styled.curve.closed()) out << " Z";
  out << "\" fill=\"none\" stroke=\"" << styled.color << "\" stroke-width=\"1.5\"";
  if (styled.dashed) out << " stroke-dasharray=\"6,4\"";
  out << "><title>" << styled.label << "</title></path>\n";
}

}  // namespace

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string render_svg(const Scene& scene) {
  const Viewport view = fit(scene);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- spiralkit 0.1.0 -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1024\" height=\"1024\" viewBox=\"0 0 1024 1024\">\n";
  out << "<defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"1024\" height=\"1024\"/></clipPath></defs>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"1024\" height=\"1024\" fill=\"white\"/>\n";
  out << "<g clip-path=\"url(#view)\">\n";

  // Coordinate axes through the origin when it is in view.
  const double ox = view.x(0.0);
  const double oy = view.y(0.0);
  if (ox >= 0.0 && ox <= kCanvas) {
    out << "<line x1=\"" << format_number(ox) << "\" y1=\"0\" x2=\"" << format_number(ox)
        << "\" y2=\"1024\" stroke=\"#bbbbbb\" stroke-width=\"0.75\"/>\n";
  }
  if (oy >= 0.0 && oy <= kCanvas) {
    out << "<line x1=\"0\" y1=\"" << format_number(oy) << "\" x2=\"1024\" y2=\"" << format_number(oy)
        << "\" stroke=\"#bbbbbb\" stroke-width=\"0.75\"/>\n";
  }

  if (scene.disk) {
    out << "<circle cx=\"" << format_number(view.x(scene.disk->center.real())) << "\" cy=\""
        << format_number(view.y(scene.disk->center.imag())) << "\" r=\""
        << format_number(scene.disk->radius / view.span * kCanvas)
        << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\" stroke-dasharray=\"3,3\"><title>covering disk</title></circle>\n";
  }
  for (const auto& styled : scene.overlays) write_path(out, styled, view);
  for (const auto& styled : scene.curves) write_path(out, styled, view);
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string polyline_csv(const PolyLine& poly) {
  std::ostringstream out;
  out << "re,im\n";
  for (Complex p : poly.points()) out << format_number(p.real()) << ',' << format_number(p.imag()) << '\n';
  return out.str();
}

}  // namespace spiralkit::cli
