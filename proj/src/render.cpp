#include "toricfold/render.hpp"

#include <algorithm>
#include <sstream>

namespace toricfold {

std::string render_svg(const Fan2D& f) {
  std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto& u : f.rays()) {
    xmin = std::min(xmin, u[0]);
    xmax = std::max(xmax, u[0]);
    ymin = std::min(ymin, u[1]);
    ymax = std::max(ymax, u[1]);
  }
  --xmin, --ymin, ++xmax, ++ymax;
  const std::int64_t unit = kSvgUnit, pad = kSvgUnit / 2;
  const std::int64_t width = (xmax - xmin) * unit + 2 * pad, height = (ymax - ymin) * unit + 2 * pad;
  // SVG y grows downwards.
  auto px = [&](std::int64_t x) { return (x - xmin) * unit + pad; };
  auto py = [&](std::int64_t y) { return (ymax - y) * unit + pad; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"8\" "
        "markerHeight=\"8\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 Z\" fill=\"black\"/></marker></defs>\n";
  if (!f.name().empty()) os << "<!-- " << f.name() << " -->\n";
  os << "<g class=\"lattice\" fill=\"gray\">\n";
  for (std::int64_t y = ymax; y >= ymin; --y)
    for (std::int64_t x = xmin; x <= xmax; ++x)
      os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\"/>\n";
  os << "</g>\n<g class=\"rays\" stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  for (const auto& u : f.rays())
    os << "<path class=\"ray\" d=\"M " << px(0) << " " << py(0) << " L " << px(u[0]) << " " << py(u[1])
       << "\" marker-end=\"url(#head)\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace toricfold
