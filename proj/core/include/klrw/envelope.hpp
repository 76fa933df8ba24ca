#pragma once

#include <utility>
#include <vector>

#include "klrw/pressure.hpp"
#include "klrw/rational.hpp"

namespace klrw {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Piecewise-linear interpolation of breakpoints; beyond the last breakpoint the
// function continues with slope tail_slope.
class PLFunction {
 public:
  PLFunction() = default;
  explicit PLFunction(std::vector<Point> points, Rational tail_slope = 0);

  const std::vector<Point>& points() const { return pts_; }
  const Rational& tail_slope() const { return tail_; }
  const Rational& last_x() const { return pts_.back().x; }

  Rational operator()(const Rational& x) const;
  PLFunction negated() const;
  // Checks on the breakpoint sequence including the tail.
  bool is_concave() const;
  bool is_convex() const;
  bool is_weakly_increasing() const;
  bool is_weakly_decreasing() const;

  friend bool operator==(const PLFunction&, const PLFunction&) = default;

 private:
  std::vector<Point> pts_;
  Rational tail_;
};

// a(x) <= b(x) for every x >= 0.
bool pointwise_leq(const PLFunction& a, const PLFunction& b);

// Breakpoints (m, chi(first m letters)).
PLFunction path_function(const Pressure& chi, const std::vector<int>& word);

// f+: least concave weakly increasing majorant, via rays of greatest positive slope.
PLFunction upper_envelope_f(const PLFunction& path);
// f-: greatest convex weakly decreasing minorant, via rays of least negative slope.
PLFunction lower_envelope_f(const PLFunction& path);

// (g+, g-): upper and lower hulls of the path on [0, k], continued by the chord
// from the origin through (k, chi(total)).
std::pair<PLFunction, PLFunction> envelopes_g(const PLFunction& path, const RootVec& total, const Pressure& chi);

}  // namespace klrw
