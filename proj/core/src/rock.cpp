#include "klrw/rock.hpp"

#include <stdexcept>

namespace klrw {

Pressure rock_pressure(int e, int d) {
  if (e < 2 || d < 1) throw std::invalid_argument("RoCK pressure needs e >= 2 and d >= 1");
  std::vector<Rational> v(e, Rational(1 - d) - Rational(1, e));
  v[0] = Rational((e - 1) * (d - 1)) - Rational(1, e);
  return Pressure(v);
}

bool in_rock_chamber(const Pressure& chi, int d) {
  for (int i = 1; i < chi.e(); ++i)
    if (!(chi[i] < 1 - d)) return false;
  return true;
}

std::vector<int> gg_word(int i, int e) {
  if (i < 0 || i >= e) throw std::invalid_argument("label out of range");
  std::vector<int> w;
  for (int j = i; j < e; ++j) w.push_back(j);
  for (int j = i - 1; j >= 0; --j) w.push_back(j);
  return w;
}

std::vector<Idem> delta_idempotents(int e, int d) {
  if (e < 2 || d < 0) throw std::invalid_argument("delta idempotents need e >= 2 and d >= 0");
  std::vector<Idem> out;
  std::vector<int> q(d, 0);
  while (true) {
    Idem x;
    for (int qi : q)
      for (int l : gg_word(qi, e)) x.right.push_back(l);
    out.push_back(std::move(x));
    int k = d - 1;
    while (k >= 0 && q[k] == e - 1) q[k--] = 0;
    if (k < 0) break;
    ++q[k];
  }
  return out;
}

bool is_eplus(const Idem& idem) { return idem.left.empty(); }

std::vector<Idem> eplus_idempotents(int e, const Weight& lambda, const RootVec& alpha) {
  return enumerate_idempotents(e, lambda, alpha, RedPositions::LeftmostOnly);
}

GradedDims wreath_reference_dims(int e, int d, int max_degree) {
  if (e == 2)
    throw std::invalid_argument("no zigzag reference for e = 2: the doubled bond of the affine A_1 diagram is a separate case");
  if (e < 3 || d < 1) throw std::invalid_argument("wreath reference needs e >= 3 and d >= 1");
  const long long m = e - 1;
  // Hilbert series of Z in its own grading: m + 2(m-1) t + m t^2.
  std::vector<long long> z{m, 2 * (m - 1), m};
  std::vector<long long> acc{1};
  for (int k = 0; k < d; ++k) {
    std::vector<long long> next(acc.size() + 2, 0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < 3; ++j) next[i + j] += acc[i] * z[j];
    acc = std::move(next);
  }
  long long fact = 1;
  for (int k = 2; k <= d; ++k) fact *= k;
  GradedDims g;
  g.complete = true;
  g.computed_to = max_degree;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    int deg = 2 * static_cast<int>(i);
    if (deg <= max_degree && acc[i]) g.dims[deg] = acc[i] * fact;
    if (deg > max_degree && acc[i]) g.complete = false;
  }
  return g;
}

}  // namespace klrw
