#include "klrw/slope_datum.hpp"

#include <stdexcept>

namespace klrw {

std::vector<RootVec> SlopeDatum::gammas() const {
  std::vector<RootVec> out = negative;
  out.push_back(zero);
  out.insert(out.end(), positive.begin(), positive.end());
  return out;
}

RootVec SlopeDatum::total() const {
  RootVec t = zero;
  for (auto& g : negative) t += g;
  for (auto& g : positive) t += g;
  return t;
}

namespace {

void require_generic(const Pressure& chi, const std::vector<int>& seq, const char* side) {
  Rational s = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    s += chi[seq[i]];
    if (s == 0)
      throw std::invalid_argument(std::string("pressure is not generic: ") + side + " prefix of length " +
                                  std::to_string(i + 1) + " has pressure 0");
  }
}

// Contents of the letter groups between consecutive envelope breakpoints, outermost first.
std::vector<RootVec> pieces(int e, const std::vector<int>& seq, const PLFunction& env) {
  std::vector<RootVec> out;
  const auto& pts = env.points();
  for (std::size_t j = 1; j < pts.size(); ++j) {
    long from = pts[j - 1].x.get_num().get_si();
    long to = pts[j].x.get_num().get_si();
    RootVec g = RootVec::zero(e);
    for (long m = from; m < to; ++m) g[seq[m]] += 1;
    out.push_back(g);
  }
  return out;
}

PLFunction cumulative(const Pressure& chi, const std::vector<RootVec>& outer_first) {
  std::vector<Point> pts{{0, 0}};
  Rational x = 0, y = 0;
  for (auto& g : outer_first) {
    x += g.height();
    y += chi.eval(g);
    pts.push_back({x, y});
  }
  return PLFunction(std::move(pts), 0);
}

}  // namespace

SlopeDatum slope_datum(const Pressure& chi, const Idem& idem) {
  require_generic(chi, idem.left, "left");
  require_generic(chi, idem.right, "right");
  int e = chi.e();
  SlopeDatum g;
  g.negative = pieces(e, idem.left, lower_envelope_f(path_function(chi, idem.left)));
  auto outer = pieces(e, idem.right, upper_envelope_f(path_function(chi, idem.right)));
  g.positive.assign(outer.rbegin(), outer.rend());
  g.zero = idem.content(e);
  for (auto& x : g.negative) g.zero -= x;
  for (auto& x : g.positive) g.zero -= x;
  return g;
}

PLFunction slope_upper(const Pressure& chi, const SlopeDatum& g) {
  return cumulative(chi, std::vector<RootVec>(g.positive.rbegin(), g.positive.rend()));
}

PLFunction slope_lower(const Pressure& chi, const SlopeDatum& g) { return cumulative(chi, g.negative); }

bool slope_preorder_leq(const Pressure& chi, const SlopeDatum& a, const SlopeDatum& b) {
  if (a.total() != b.total()) throw std::invalid_argument("slope data have different totals");
  return pointwise_leq(slope_upper(chi, a), slope_upper(chi, b)) &&
         pointwise_leq(slope_lower(chi, b), slope_lower(chi, a));
}

}  // namespace klrw
