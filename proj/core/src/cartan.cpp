#include "klrw/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace klrw {

RootVec RootVec::simple(int e, int i) {
  RootVec v = zero(e);
  v.c_.at(i) = 1;
  return v;
}

int RootVec::height() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool RootVec::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}
bool RootVec::is_nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}
bool RootVec::is_nonpositive() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x <= 0; });
}

bool RootVec::leq(const RootVec& o) const {
  if (o.size() != size()) throw std::invalid_argument("RootVec rank mismatch");
  for (int i = 0; i < size(); ++i)
    if (c_[i] > o.c_[i]) return false;
  return true;
}

RootVec& RootVec::operator+=(const RootVec& o) {
  if (o.size() != size()) throw std::invalid_argument("RootVec rank mismatch");
  for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
  return *this;
}
RootVec& RootVec::operator-=(const RootVec& o) {
  if (o.size() != size()) throw std::invalid_argument("RootVec rank mismatch");
  for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
  return *this;
}
RootVec operator-(RootVec a) {
  for (auto& x : a.c_) x = -x;
  return a;
}
RootVec operator*(int k, RootVec a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

std::string to_string(const RootVec& v) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    int c = v[i];
    if (c == 0) continue;
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "a" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Weight Weight::fundamental(int e, int i) {
  Weight w{std::vector<int>(e, 0)};
  w.fund.at(i) = 1;
  return w;
}

int Weight::level() const { return std::accumulate(fund.begin(), fund.end(), 0); }

LatticeWeight LatticeWeight::minus(const Weight& lambda, const RootVec& alpha) {
  return {lambda.fund, -alpha};
}

CartanDatum::CartanDatum(int e, CartanKind kind) : e_(e), kind_(kind), c_(e * e, 0) {
  if (e < 2) throw std::invalid_argument("e must be at least 2");
  for (int i = 0; i < e; ++i) {
    c_[i * e + i] = 2;
    if (kind == CartanKind::Affine) {
      c_[i * e + (i + 1) % e] -= 1;
      c_[i * e + (i + e - 1) % e] -= 1;
    } else {
      if (i + 1 < e) c_[i * e + i + 1] -= 1;
      if (i > 0) c_[i * e + i - 1] -= 1;
    }
  }
}

void CartanDatum::check_rootvec(const RootVec& v) const {
  if (v.size() != e_)
    throw std::invalid_argument("root vector has " + std::to_string(v.size()) + " entries, expected " +
                                std::to_string(e_));
}

void CartanDatum::check_weight(const Weight& w) const {
  if (static_cast<int>(w.fund.size()) != e_) throw std::invalid_argument("weight has wrong rank");
}

int CartanDatum::form(const RootVec& a, const RootVec& b) const {
  check_rootvec(a);
  check_rootvec(b);
  int s = 0;
  for (int i = 0; i < e_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < e_; ++j) s += a[i] * entry(i, j) * b[j];
  }
  return s;
}

int CartanDatum::form(const LatticeWeight& g, const RootVec& b) const {
  int s = form(g.root, b);
  for (int i = 0; i < e_; ++i) s += g.fund[i] * b[i];
  return s;
}

int CartanDatum::pair_simple(const LatticeWeight& mu, int i) const {
  int s = mu.fund[i];
  for (int j = 0; j < e_; ++j) s += mu.root[j] * entry(j, i);
  return s;
}

int CartanDatum::pair_simple(const RootVec& v, int i) const {
  int s = 0;
  for (int j = 0; j < e_; ++j) s += v[j] * entry(j, i);
  return s;
}

int CartanDatum::pair_coroot(const RootVec& gamma, const RootVec& beta) const {
  if (!is_real_root(beta)) throw std::invalid_argument("pair_coroot: " + to_string(beta) + " is not a real root");
  return form(gamma, beta);
}

int CartanDatum::pair_coroot(const LatticeWeight& gamma, const RootVec& beta) const {
  if (!is_real_root(beta)) throw std::invalid_argument("pair_coroot: " + to_string(beta) + " is not a real root");
  return form(gamma, beta);
}

RootKind CartanDatum::classify_positive_root(const RootVec& beta) const {
  check_rootvec(beta);
  if (!beta.is_nonnegative() || beta.is_zero()) return RootKind::NotARoot;
  if (affine() && std::all_of(beta.coeffs().begin(), beta.coeffs().end(), [&](int x) { return x == beta[0]; }))
    return RootKind::Imaginary;
  return form(beta, beta) == 2 ? RootKind::Real : RootKind::NotARoot;
}

bool CartanDatum::is_real_root(const RootVec& beta) const {
  if (beta.is_nonnegative()) return classify_positive_root(beta) == RootKind::Real;
  if (beta.is_nonpositive()) return classify_positive_root(-beta) == RootKind::Real;
  return false;
}

std::vector<RootVec> CartanDatum::positive_roots(int max_height) const {
  std::vector<RootVec> out;
  if (max_height <= 0) return out;
  // Roots of the finite sub-diagram, as intervals [a, b] of nodes.
  int lo = affine() ? 1 : 0;
  std::vector<RootVec> finite;
  for (int a = lo; a < e_; ++a)
    for (int b = a; b < e_; ++b) {
      RootVec v = RootVec::zero(e_);
      for (int k = a; k <= b; ++k) v[k] = 1;
      finite.push_back(v);
    }
  if (!affine()) {
    for (auto& v : finite)
      if (v.height() <= max_height) out.push_back(v);
  } else {
    RootVec d = RootVec::delta(e_);
    for (const auto& v : finite) {
      for (int n = 0; v.height() + n * e_ <= max_height; ++n) out.push_back(v + n * d);
      for (int n = 1; -v.height() + n * e_ <= max_height; ++n) out.push_back(-v + n * d);
    }
    for (int n = 1; n * e_ <= max_height; ++n) out.push_back(n * d);
  }
  std::sort(out.begin(), out.end(), [](const RootVec& a, const RootVec& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a < b;
  });
  return out;
}

std::vector<RootVec> CartanDatum::positive_roots_below(const RootVec& bound) const {
  check_rootvec(bound);
  std::vector<RootVec> out;
  for (auto& r : positive_roots(bound.height()))
    if (r.leq(bound)) out.push_back(r);
  return out;
}

RootVec CartanDatum::reflect(RootVec v, int i) const {
  v[i] -= pair_simple(v, i);
  return v;
}

LatticeWeight CartanDatum::reflect(LatticeWeight mu, int i) const {
  mu.root[i] -= pair_simple(mu, i);
  return mu;
}

bool CartanDatum::is_dominant(const LatticeWeight& mu) const {
  for (int i = 0; i < e_; ++i)
    if (pair_simple(mu, i) < 0) return false;
  return true;
}

LatticeWeight CartanDatum::dominant_conjugate(LatticeWeight mu) const {
  int level = std::accumulate(mu.fund.begin(), mu.fund.end(), 0);
  if (affine() && level < 1) throw std::invalid_argument("dominant conjugation needs level >= 1");
  for (long step = 0; step < 1'000'000; ++step) {
    int i = 0;
    while (i < e_ && pair_simple(mu, i) >= 0) ++i;
    if (i == e_) return mu;
    mu = reflect(std::move(mu), i);
  }
  throw std::runtime_error("dominant conjugation did not terminate");
}

bool CartanDatum::is_weight_of(const Weight& lambda, const LatticeWeight& mu) const {
  check_weight(lambda);
  if (std::any_of(lambda.fund.begin(), lambda.fund.end(), [](int x) { return x < 0; }) || lambda.level() < 1)
    throw std::invalid_argument("is_weight_of: highest weight must be dominant of level >= 1");
  if (mu.fund != lambda.fund) return false;
  LatticeWeight plus = dominant_conjugate(mu);
  // Lambda - mu+ = -plus.root
  return plus.root.is_nonpositive();
}

}  // namespace klrw
