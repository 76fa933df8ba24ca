#include "slope_svg.hpp"

#include <klrw/envelope.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace klrw {

namespace {

constexpr double kUnit = 40;
constexpr double kMargin = 30;

struct Canvas {
  int xmin, xmax;
  double ymin, ymax;
  double px(double x) const { return kMargin + (x - xmin) * kUnit; }
  double py(double y) const { return kMargin + (ymax - y) * kUnit; }
};

double to_double(const Rational& q) { return q.get_d(); }

std::string polyline(const Canvas& c, const std::vector<std::pair<double, double>>& pts, const char* colour,
                     double width) {
  std::ostringstream s;
  s << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << width << "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i)
    s << (i ? " " : "") << c.px(pts[i].first) << ',' << c.py(pts[i].second);
  s << "\"/>\n";
  return s.str();
}

// Breakpoints of f on [0, reach], x multiplied by sign.
std::vector<std::pair<double, double>> trace(const PLFunction& f, int reach, int sign) {
  std::vector<std::pair<double, double>> out;
  for (const auto& p : f.points())
    if (p.x <= reach) out.emplace_back(sign * to_double(p.x), to_double(p.y));
  out.emplace_back(sign * reach, to_double(f(Rational(reach))));
  return out;
}

}  // namespace

std::string slope_svg(const Pressure& chi, const Idem& idem) {
  auto left = path_function(chi, idem.left);
  auto right = path_function(chi, idem.right);
  auto fl = lower_envelope_f(left);
  auto fr = upper_envelope_f(right);
  int reach = std::max(static_cast<int>(idem.left.size()), static_cast<int>(idem.right.size())) + 2;

  std::vector<std::pair<double, double>> path_pts, red_l = trace(fl, reach, -1), red_r = trace(fr, reach, 1);
  for (int i = static_cast<int>(idem.left.size()); i >= 0; --i) path_pts.emplace_back(-i, to_double(left(i)));
  for (int i = 1; i <= static_cast<int>(idem.right.size()); ++i) path_pts.emplace_back(i, to_double(right(i)));

  double lo = 0, hi = 0;
  for (const auto* v : {&path_pts, &red_l, &red_r})
    for (const auto& [x, y] : *v) {
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
  Canvas c{-reach, reach, std::floor(lo) - 1, std::ceil(hi) + 1};
  double w = 2 * kMargin + 2 * reach * kUnit, h = 2 * kMargin + (c.ymax - c.ymin) * kUnit;

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  s << "<title>" << to_string(idem) << " chi=" << to_string(chi) << "</title>\n";
  for (int x = c.xmin; x <= c.xmax; ++x)
    for (int y = static_cast<int>(c.ymin); y <= static_cast<int>(c.ymax); ++y)
      s << "<circle cx=\"" << c.px(x) << "\" cy=\"" << c.py(y) << "\" r=\"1.5\" fill=\"#999\"/>\n";
  s << "<line x1=\"" << c.px(c.xmin) << "\" y1=\"" << c.py(0) << "\" x2=\"" << c.px(c.xmax) << "\" y2=\"" << c.py(0)
    << "\" stroke=\"#bbb\"/>\n";
  s << "<line x1=\"" << c.px(0) << "\" y1=\"" << c.py(c.ymin) << "\" x2=\"" << c.px(0) << "\" y2=\"" << c.py(c.ymax)
    << "\" stroke=\"#bbb\"/>\n";
  std::reverse(red_l.begin(), red_l.end());
  s << polyline(c, red_l, "red", 2) << polyline(c, red_r, "red", 2) << polyline(c, path_pts, "purple", 2);
  s << "</svg>\n";
  return s.str();
}

}  // namespace klrw
