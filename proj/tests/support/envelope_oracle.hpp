#pragma once

#include <klrw/rational.hpp>

#include <algorithm>
#include <vector>

namespace oracle {

// max over i <= x <= j of the chord between (i, v_i) and (j, v_j): the least concave majorant at x.
inline klrw::Rational hull_at(const std::vector<klrw::Rational>& v, int x) {
  klrw::Rational best = v[x];
  for (int i = 0; i <= x; ++i)
    for (int j = x; j < static_cast<int>(v.size()); ++j) {
      if (i == j) continue;
      klrw::Rational t(x - i, j - i);
      t.canonicalize();
      klrw::Rational c = v[i] + (v[j] - v[i]) * t;
      if (c > best) best = c;
    }
  return best;
}

// Least concave weakly increasing majorant at integer points: hull of the running maximum.
inline std::vector<klrw::Rational> f_plus(const std::vector<klrw::Rational>& path) {
  std::vector<klrw::Rational> run(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) run[i] = i ? std::max(run[i - 1], path[i]) : path[i];
  std::vector<klrw::Rational> out;
  for (int x = 0; x < static_cast<int>(path.size()); ++x) out.push_back(hull_at(run, x));
  return out;
}

inline std::vector<klrw::Rational> f_minus(std::vector<klrw::Rational> path) {
  for (auto& v : path) v = -v;
  auto out = f_plus(path);
  for (auto& v : out) v = -v;
  return out;
}

}  // namespace oracle
