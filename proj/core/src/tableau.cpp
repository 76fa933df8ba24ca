#include "klrw/tableau.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace klrw {

namespace {
int mod(int a, int e) { return ((a % e) + e) % e; }
}  // namespace

int Multipartition::size() const {
  int n = 0;
  for (auto& p : components) n += std::accumulate(p.begin(), p.end(), 0);
  return n;
}

std::vector<int> residue_word(int e, const Multipartition& shape, const Tableau& t) {
  if (shape.charges.size() != shape.components.size() || t.size() != shape.components.size())
    throw std::invalid_argument("tableau and multipartition disagree on component count");
  int n = shape.size();
  std::vector<int> word(n, -1);
  for (std::size_t c = 0; c < t.size(); ++c) {
    const auto& lambda = shape.components[c];
    if (t[c].size() != lambda.size()) throw std::invalid_argument("tableau row count does not match shape");
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      if (r && lambda[r] > lambda[r - 1]) throw std::invalid_argument("shape rows must weakly decrease");
      if (static_cast<int>(t[c][r].size()) != lambda[r]) throw std::invalid_argument("tableau row length does not match shape");
      for (int col = 0; col < lambda[r]; ++col) {
        int m = t[c][r][col];
        if (m < 1 || m > n || word[m - 1] != -1) throw std::invalid_argument("tableau entries must be 1..n once each");
        if (col && t[c][r][col - 1] >= m) throw std::invalid_argument("tableau rows must increase");
        if (r && t[c][r - 1][col] >= m) throw std::invalid_argument("tableau columns must increase");
        word[m - 1] = mod(col - static_cast<int>(r) + shape.charges[c], e);
      }
    }
  }
  return word;
}

RootVec residue_content(int e, const Multipartition& shape) {
  RootVec v = RootVec::zero(e);
  for (std::size_t c = 0; c < shape.components.size(); ++c)
    for (std::size_t r = 0; r < shape.components[c].size(); ++r)
      for (int col = 0; col < shape.components[c][r]; ++col)
        v[mod(col - static_cast<int>(r) + shape.charges[c], e)] += 1;
  return v;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Tableau row_reading_tableau(const Multipartition& shape) {
  Tableau t;
  int next = 1;
  for (auto& lambda : shape.components) {
    t.emplace_back();
    for (int len : lambda) {
      t.back().emplace_back();
      for (int i = 0; i < len; ++i) t.back().back().push_back(next++);
    }
  }
  return t;
}

}  // namespace klrw
