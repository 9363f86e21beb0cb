#include "orthocircles/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace orthocircles {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Arrangement& arr, const std::optional<Classification>& cls) {
  double xmin = 0, ymin = 0, xmax = 1, ymax = 1;
  if (!arr.empty()) {
    xmin = ymin = std::numeric_limits<double>::infinity();
    xmax = ymax = -std::numeric_limits<double>::infinity();
    for (const auto& c : arr.circles()) {
      xmin = std::min(xmin, c.center.x() - c.radius);
      xmax = std::max(xmax, c.center.x() + c.radius);
      ymin = std::min(ymin, c.center.y() - c.radius);
      ymax = std::max(ymax, c.center.y() + c.radius);
    }
  }
  const double w = xmax - xmin, h = ymax - ymin;
  const double diag = std::hypot(w, h);
  const double mx = 0.05 * w, my = 0.05 * h;
  const double stroke = 0.005 * diag;

  std::vector<std::string> color(arr.size(), "#7f7f7f");
  if (cls) {
    for (int g : cls->green) color[std::size_t(g)] = "#2ca02c";
    for (int b : cls->black) color[std::size_t(b)] = "#000000";
    color[std::size_t(cls->red_index)] = "#d62728";
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(xmin - mx) << ' '
      << num(ymin - my) << ' ' << num(w + 2 * mx) << ' ' << num(h + 2 * my) << "\">\n";
  out << "  <g fill=\"none\" stroke-width=\"" << num(stroke) << "\" transform=\"matrix(1 0 0 -1 0 "
      << num(ymin + ymax) << ")\">\n";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Circle& c = arr[i];
    out << "    <circle id=\"" << escape(c.id) << "\" cx=\"" << num(c.center.x()) << "\" cy=\"" << num(c.center.y())
        << "\" r=\"" << num(c.radius) << "\" stroke=\"" << color[i] << "\"/>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace orthocircles
