#include "klrw/pressure.hpp"

#include <stdexcept>

namespace klrw {

Pressure::Pressure(std::vector<Rational> values) : v_(std::move(values)) {
  if (v_.size() < 2) throw std::invalid_argument("pressure needs at least two values");
  Rational s = 0;
  for (auto& x : v_) {
    x.canonicalize();
    s += x;
  }
  if (s != -1) throw std::invalid_argument("pressure values must sum to -1, got " + to_string(s));
}

Pressure Pressure::parse(std::string_view text) { return Pressure(parse_rational_list(text)); }

Rational Pressure::eval(const RootVec& v) const {
  if (v.size() != e()) throw std::invalid_argument("pressure/root rank mismatch");
  Rational s = 0;
  for (int i = 0; i < e(); ++i)
    if (v[i]) s += v_[i] * v[i];
  return s;
}

Rational Pressure::eval_word(const std::vector<int>& labels) const {
  Rational s = 0;
  for (int i : labels) s += v_.at(i);
  return s;
}

Rational Pressure::slope(const RootVec& v) const {
  int h = v.height();
  if (h <= 0) throw std::invalid_argument("slope needs positive height");
  return eval(v) / h;
}

std::string to_string(const Pressure& chi) { return join_rationals(chi.values()); }

Pressure standard_pressure(int e) { return Pressure(std::vector<Rational>(e, Rational(-1, e))); }

Pressure generic_pressure(int e) {
  // Distinct powers of two over 7 keep every finite-root sum strictly inside (0, 1).
  std::vector<Rational> v(e);
  Rational rest = -1;
  for (int i = 1; i < e; ++i) {
    mpz_class den = mpz_class(7) << i;
    v[i] = Rational(1, den);
    rest -= v[i];
  }
  v[0] = rest;
  return Pressure(std::move(v));
}

bool is_rock(const CartanDatum& cd, const Pressure& chi, const RootVec& alpha) {
  cd.check_rootvec(alpha);
  if (!alpha.is_nonnegative()) throw std::invalid_argument("is_rock needs alpha >= 0");
  RootVec d = RootVec::delta(cd.e());
  for (const auto& beta : cd.positive_roots_below(alpha)) {
    if (cd.classify_positive_root(beta) != RootKind::Real) continue;
    int s = sign(chi.eval(beta));
    for (RootVec shifted = beta + d; shifted.leq(alpha); shifted += d)
      if (sign(chi.eval(shifted)) != s) return false;
  }
  return true;
}

std::vector<RootVec> scopes_walls(const CartanDatum& cd, const Weight& lambda, const RootVec& alpha) {
  cd.check_weight(lambda);
  cd.check_rootvec(alpha);
  LatticeWeight mu = LatticeWeight::minus(lambda, alpha);
  if (!cd.is_dominant(mu)) throw std::invalid_argument("scopes_walls: Lambda - alpha is not dominant");
  auto collect = [&](int bound) {
    std::vector<RootVec> out;
    for (auto& beta : cd.positive_roots(bound)) {
      LatticeWeight nu{mu.fund, mu.root + beta};
      if (cd.is_weight_of(lambda, nu)) out.push_back(beta);
    }
    return out;
  };
  int bound = alpha.height() + cd.e() * lambda.level();
  auto walls = collect(bound);
  if (collect(bound + 1).size() != walls.size())
    throw std::logic_error("scopes_walls: height bound not stable for " + to_string(alpha));
  return walls;
}

bool ChamberSignature::generic() const {
  for (auto& [beta, s] : signs)
    if (s == 0) return false;
  return true;
}

ChamberSignature chamber_signature(const Pressure& chi, const std::vector<RootVec>& walls) {
  ChamberSignature sig;
  for (auto& beta : walls) sig.signs.emplace_back(beta, sign(chi.eval(beta)));
  return sig;
}

ChamberSignature chamber_signature(const CartanDatum& cd, const Pressure& chi, const Weight& lambda,
                                   const RootVec& alpha) {
  return chamber_signature(chi, scopes_walls(cd, lambda, alpha));
}

}  // namespace klrw
