#include "klrw/finite_algebra.hpp"

#include <algorithm>

namespace klrw::detail {

namespace {

Rational eval(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

using Poly = std::vector<Rational>;  // low to high

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

Poly remainder(Poly a, const Poly& b) {
  while (a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly quotient(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& monic) {
  std::vector<Rational> c = monic;
  std::vector<Rational> roots;
  if (c.size() > 1 && sgn(c.front()) == 0) roots.push_back(0);
  while (c.size() > 1 && sgn(c.front()) == 0) c.erase(c.begin());
  if (c.size() <= 1) return roots;

  mpz_class denom = 1;
  for (const auto& x : c) denom = lcm(denom, mpz_class(x.get_den()));
  // A rational root of the monic c is k / denom for an integer k.
  Poly p = c;
  Poly g = gcd(p, derivative(p));
  if (g.size() > 1) p = quotient(p, g);
  std::vector<Poly> chain{p, derivative(p)};
  while (chain.back().size() > 1) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    chain.push_back(std::move(r));
  }
  Rational bound = 1;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max(bound, Rational(1 + abs(p[i] / p.back())));
  const Rational width = Rational(1) / Rational(denom);
  // Bisect (lo, hi] until each piece holding a root is narrower than 1 / denom.
  std::vector<std::pair<Rational, Rational>> todo{{-bound, bound}};
  while (!todo.empty()) {
    auto [lo, hi] = todo.back();
    todo.pop_back();
    if (sign_changes(chain, lo) - sign_changes(chain, hi) == 0) continue;
    if (hi - lo >= width) {
      Rational mid = (lo + hi) / 2;
      todo.emplace_back(lo, mid);
      todo.emplace_back(mid, hi);
      continue;
    }
    Rational scaled = lo * Rational(denom);
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    ++k;
    for (; Rational(k, denom) <= hi; ++k) {
      Rational cand(k, denom);
      cand.canonicalize();
      if (sgn(eval(c, cand)) == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace klrw::detail
