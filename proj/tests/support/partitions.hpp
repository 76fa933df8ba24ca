#pragma once

#include <klrw/cartan.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

// Every partition of n, largest parts first.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(parts);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline klrw::RootVec residue_content(int e, const std::vector<int>& parts) {
  klrw::RootVec c = klrw::RootVec::zero(e);
  for (int r = 0; r < static_cast<int>(parts.size()); ++r)
    for (int col = 0; col < parts[r]; ++col) c[((col - r) % e + e) % e] += 1;
  return c;
}

// Lambda_0 - alpha is a weight of the basic representation iff some partition has residue content alpha.
inline std::set<klrw::RootVec> basic_rep_contents(int e, int max_size) {
  std::set<klrw::RootVec> out;
  for (int n = 0; n <= max_size; ++n)
    for (const auto& p : partitions(n)) out.insert(residue_content(e, p));
  return out;
}

// Degrees of the standard tableaux of shape `parts` (Lambda_0 residues), via the
// addable/removable count below each added node.
inline std::vector<int> tableau_degrees(int e, const std::vector<int>& parts) {
  std::vector<int> out;
  std::vector<int> cur(parts.size() + 1, 0);
  int total = 0;
  for (int p : parts) total += p;
  auto res = [e](int r, int c) { return ((c - r) % e + e) % e; };
  std::function<void(int, int)> rec = [&](int placed, int deg) {
    if (placed == total) {
      out.push_back(deg);
      return;
    }
    int rows = static_cast<int>(parts.size());
    for (int r = 0; r < rows; ++r) {
      int c = cur[r];
      if (c >= parts[r] || (r > 0 && cur[r - 1] <= c)) continue;
      int i = res(r, c), d = 0;
      for (int s = r + 1; s <= rows; ++s) {
        int cs = cur[s];
        bool addable = (s == 0 || cur[s - 1] > cs) && res(s, cs) == i;
        bool removable = cs > 0 && (s + 1 > rows || cur[s + 1] < cs) && res(s, cs - 1) == i;
        d += addable - removable;
      }
      ++cur[r];
      rec(placed + 1, deg + d);
      --cur[r];
    }
  };
  rec(0, 0);
  return out;
}

// Graded dimension of the level-one cyclotomic quotient: sum over shapes of (sum_t q^deg t)^2.
inline std::map<int, long long> cyclotomic_graded_dim(int e, const klrw::RootVec& alpha) {
  std::map<int, long long> out;
  for (const auto& p : partitions(alpha.height())) {
    if (residue_content(e, p) != alpha) continue;
    auto degs = tableau_degrees(e, p);
    for (int a : degs)
      for (int b : degs) out[a + b] += 1;
  }
  return out;
}

}  // namespace oracle
