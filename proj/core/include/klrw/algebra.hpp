#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "klrw/cartan.hpp"
#include "klrw/field.hpp"
#include "klrw/idempotent.hpp"
#include "klrw/rewriter.hpp"

namespace klrw {

// Combination of basis diagrams from `bottom` to `top`; coefficients live in `field`
// (stored reduced into [0, p) for a prime field).
struct AlgebraElement {
  Idem bottom;
  Idem top;
  FieldSpec field;
  std::map<Term, Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

// R_0(Lambda, alpha): KLRW algebra with one red strand, before any quotient.
class KlrwAlgebra {
 public:
  KlrwAlgebra(int e, Weight lambda, RootVec alpha);

  int e() const { return e_; }
  const Weight& lambda() const { return lambda_; }
  const RootVec& alpha() const { return alpha_; }
  Rewriter& rewriter() { return *rw_; }
  const std::vector<Idem>& idempotents() const { return idems_; }

  std::vector<Perm> matchings(const Idem& bottom, const Idem& top) const;
  std::vector<Term> block_basis(const Idem& bottom, const Idem& top, int degree) const;
  std::optional<int> min_degree(const Idem& bottom, const Idem& top) const;
  int degree(const Idem& bottom, const Term& t) const;

  AlgebraElement identity(const Idem& idem, FieldSpec field = {}) const;
  // Crossings w (bottom to top) applied to `bottom`, with dots `dots` at the bottom.
  AlgebraElement diagram(const Idem& bottom, const Word& w, const Monomial& dots = {}, FieldSpec field = {});
  AlgebraElement from_z(const Idem& bottom, const ZElement& z, FieldSpec field) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b, const Rational& scale = 1) const;

 private:
  int e_;
  Weight lambda_;
  RootVec alpha_;
  std::unique_ptr<Rewriter> rw_;
  std::vector<Idem> idems_;
};

Rational reduce_coefficient(const Rational& q, const FieldSpec& field);

}  // namespace klrw
