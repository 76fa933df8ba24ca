#include "klrw/envelope.hpp"

#include <stdexcept>

namespace klrw {

PLFunction::PLFunction(std::vector<Point> points, Rational tail_slope) : pts_(std::move(points)), tail_(tail_slope) {
  if (pts_.empty()) throw std::invalid_argument("PLFunction needs at least one breakpoint");
  for (std::size_t i = 1; i < pts_.size(); ++i)
    if (!(pts_[i - 1].x < pts_[i].x)) throw std::invalid_argument("PLFunction breakpoints must increase in x");
}

Rational PLFunction::operator()(const Rational& x) const {
  if (x <= pts_.front().x) return pts_.front().y;
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    if (x <= pts_[i].x) {
      const Point& a = pts_[i - 1];
      const Point& b = pts_[i];
      return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    }
  }
  return pts_.back().y + tail_ * (x - pts_.back().x);
}

PLFunction PLFunction::negated() const {
  std::vector<Point> p = pts_;
  for (auto& q : p) q.y = -q.y;
  return PLFunction(std::move(p), -tail_);
}

namespace {

std::vector<Rational> slopes_with_tail(const std::vector<Point>& p, const Rational& tail) {
  std::vector<Rational> s;
  for (std::size_t i = 1; i < p.size(); ++i) s.push_back((p[i].y - p[i - 1].y) / (p[i].x - p[i - 1].x));
  s.push_back(tail);
  return s;
}

}  // namespace

bool PLFunction::is_concave() const {
  auto s = slopes_with_tail(pts_, tail_);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] > s[i - 1]) return false;
  return true;
}

bool PLFunction::is_convex() const { return negated().is_concave(); }

bool PLFunction::is_weakly_increasing() const {
  for (auto& s : slopes_with_tail(pts_, tail_))
    if (s < 0) return false;
  return true;
}

bool PLFunction::is_weakly_decreasing() const { return negated().is_weakly_increasing(); }

bool pointwise_leq(const PLFunction& a, const PLFunction& b) {
  std::vector<Rational> xs;
  for (auto& p : a.points()) xs.push_back(p.x);
  for (auto& p : b.points()) xs.push_back(p.x);
  xs.push_back(0);
  for (auto& x : xs)
    if (x >= 0 && a(x) > b(x)) return false;
  // Both are linear past the last common breakpoint.
  return a.tail_slope() <= b.tail_slope();
}

PLFunction path_function(const Pressure& chi, const std::vector<int>& word) {
  std::vector<Point> pts{{0, 0}};
  Rational y = 0;
  for (std::size_t m = 0; m < word.size(); ++m) {
    y += chi[word[m]];
    pts.push_back({static_cast<long>(m + 1), y});
  }
  return PLFunction(std::move(pts), 0);
}

PLFunction upper_envelope_f(const PLFunction& path) {
  const auto& p = path.points();
  std::vector<Point> out{p.front()};
  std::size_t cur = 0;
  for (;;) {
    std::size_t best = cur;
    Rational best_slope = 0;
    for (std::size_t j = cur + 1; j < p.size(); ++j) {
      Rational s = (p[j].y - p[cur].y) / (p[j].x - p[cur].x);
      if (s > 0 && (best == cur || s >= best_slope)) {
        best = j;
        best_slope = s;
      }
    }
    if (best == cur) break;
    out.push_back(p[best]);
    cur = best;
  }
  return PLFunction(std::move(out), 0);
}

PLFunction lower_envelope_f(const PLFunction& path) { return upper_envelope_f(path.negated()).negated(); }

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Upper hull of x-sorted points (keeps only strict corners).
std::vector<Point> upper_hull(const std::vector<Point>& p) {
  std::vector<Point> h;
  for (const auto& q : p) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), q) >= 0) h.pop_back();
    h.push_back(q);
  }
  return h;
}

}  // namespace

std::pair<PLFunction, PLFunction> envelopes_g(const PLFunction& path, const RootVec& total, const Pressure& chi) {
  const auto& p = path.points();
  Rational k = path.last_x();
  Rational tail = k > 0 ? chi.eval(total) / k : Rational(0);
  PLFunction upper(upper_hull(p), tail);
  std::vector<Point> neg = p;
  for (auto& q : neg) q.y = -q.y;
  auto lower_pts = upper_hull(neg);
  for (auto& q : lower_pts) q.y = -q.y;
  return {upper, PLFunction(std::move(lower_pts), tail)};
}

}  // namespace klrw
