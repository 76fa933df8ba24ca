#include "klrw/algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace klrw {

Rational reduce_coefficient(const Rational& q, const FieldSpec& field) {
  if (field.rational()) return q;
  return Rational(static_cast<long>(PrimeField(field.p).from_rational(q)));
}

KlrwAlgebra::KlrwAlgebra(int e, Weight lambda, RootVec alpha)
    : e_(e), lambda_(std::move(lambda)), alpha_(std::move(alpha)) {
  CartanDatum cd(e);
  cd.check_weight(lambda_);
  cd.check_rootvec(alpha_);
  if (lambda_.level() != 1) throw std::invalid_argument("algebra builds need a level-1 weight (one red strand)");
  if (!alpha_.is_nonnegative()) throw std::invalid_argument("alpha must be nonnegative");
  if (alpha_.height() + 1 > kMaxSlots) throw std::invalid_argument("too many strands for the engine");
  rw_ = std::make_unique<Rewriter>(e, lambda_.fund);
  idems_ = enumerate_idempotents(e, lambda_, alpha_);
}

std::vector<Perm> KlrwAlgebra::matchings(const Idem& bottom, const Idem& top) const {
  Labels x = Labels::of(bottom), z = Labels::of(top);
  if (x.n != z.n) return {};
  std::vector<Perm> out;
  Perm p;
  p.n = x.n;
  std::vector<bool> used(x.n, false);
  std::function<void(int)> rec = [&](int i) {
    if (i == x.n) {
      out.push_back(p);
      return;
    }
    for (int j = 0; j < z.n; ++j) {
      if (used[j] || z[j] != x[i]) continue;
      used[j] = true;
      p.top[i] = static_cast<std::int8_t>(j);
      rec(i + 1);
      used[j] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Term> KlrwAlgebra::block_basis(const Idem& bottom, const Idem& top, int degree) const {
  Labels x = Labels::of(bottom);
  std::vector<int> black;
  for (int i = 0; i < x.n; ++i)
    if (x[i] != kRed) black.push_back(i);
  std::vector<Term> out;
  for (const Perm& p : matchings(bottom, top)) {
    int rest = degree - rw_->perm_degree(x, p);
    if (rest < 0 || rest % 2) continue;
    int dots = rest / 2;
    Monomial m;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
      if (idx + 1 == black.size() || black.empty()) {
        if (black.empty()) {
          if (left == 0) out.push_back(Term{m, p});
          return;
        }
        m.exp[black[idx]] = static_cast<std::uint8_t>(left);
        out.push_back(Term{m, p});
        m.exp[black[idx]] = 0;
        return;
      }
      for (int k = left; k >= 0; --k) {
        m.exp[black[idx]] = static_cast<std::uint8_t>(k);
        rec(idx + 1, left - k);
      }
      m.exp[black[idx]] = 0;
    };
    rec(0, dots);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> KlrwAlgebra::min_degree(const Idem& bottom, const Idem& top) const {
  Labels x = Labels::of(bottom);
  std::optional<int> best;
  for (const Perm& p : matchings(bottom, top)) {
    int d = rw_->perm_degree(x, p);
    if (!best || d < *best) best = d;
  }
  return best;
}

int KlrwAlgebra::degree(const Idem& bottom, const Term& t) const { return rw_->degree(Labels::of(bottom), t); }

AlgebraElement KlrwAlgebra::identity(const Idem& idem, FieldSpec field) const {
  AlgebraElement a{idem, idem, field, {}};
  a.coeffs.emplace(Term{Monomial{}, Perm::identity(idem.strands() + 1)}, 1);
  return a;
}

AlgebraElement KlrwAlgebra::from_z(const Idem& bottom, const ZElement& z, FieldSpec field) const {
  AlgebraElement a{bottom, bottom, field, {}};
  bool first = true;
  Labels x = Labels::of(bottom);
  for (const auto& [t, c] : z) {
    Rational q = reduce_coefficient(Rational(static_cast<long>(c)), field);
    if (first) {
      a.top = t.perm.apply(x).idem();
      first = false;
    }
    if (sgn(q) != 0) a.coeffs.emplace(t, q);
  }
  return a;
}

AlgebraElement KlrwAlgebra::diagram(const Idem& bottom, const Word& w, const Monomial& dots, FieldSpec field) {
  Labels x = Labels::of(bottom);
  for (int i = 0; i < x.n; ++i)
    if (dots.exp[i] && x[i] == kRed) throw std::invalid_argument("dot placed on the red strand");
  ZElement z = rw_->word(x, w);
  ZElement shifted;
  add_scaled(shifted, z, 1, dots);
  AlgebraElement a = from_z(bottom, shifted, field);
  a.top = Perm::of_word(x.n, w).apply(x).idem();
  return a;
}

AlgebraElement KlrwAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.top != b.bottom) throw std::invalid_argument("multiply: top of the first factor differs from bottom of the second");
  if (!(a.field == b.field)) throw std::invalid_argument("multiply: coefficient fields differ");
  Labels x = Labels::of(a.bottom);
  AlgebraElement out{a.bottom, b.top, a.field, {}};
  for (const auto& [ta, ca] : a.coeffs)
    for (const auto& [tb, cb] : b.coeffs) {
      Rational k = ca * cb;
      for (const auto& [t, c] : rw_->multiply_terms(x, ta, tb)) {
        Rational& slot = out.coeffs[t];
        slot = reduce_coefficient(slot + k * Rational(static_cast<long>(c)), a.field);
        if (sgn(slot) == 0) out.coeffs.erase(t);
      }
    }
  return out;
}

AlgebraElement KlrwAlgebra::add(const AlgebraElement& a, const AlgebraElement& b, const Rational& scale) const {
  if (a.bottom != b.bottom || a.top != b.top) throw std::invalid_argument("add: idempotents differ");
  AlgebraElement out = a;
  for (const auto& [t, c] : b.coeffs) {
    Rational& slot = out.coeffs[t];
    slot = reduce_coefficient(slot + scale * c, a.field);
    if (sgn(slot) == 0) out.coeffs.erase(t);
  }
  return out;
}

}  // namespace klrw
