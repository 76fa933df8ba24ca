#pragma once

#include <utility>
#include <vector>

#include "klrw/cartan.hpp"
#include "klrw/rational.hpp"

namespace klrw {

// Values chi(alpha_i); chi(delta) = -1.
class Pressure {
 public:
  explicit Pressure(std::vector<Rational> values);
  static Pressure parse(std::string_view text);

  int e() const { return static_cast<int>(v_.size()); }
  const Rational& operator[](int i) const { return v_[i]; }
  const std::vector<Rational>& values() const { return v_; }

  Rational eval(const RootVec& v) const;
  Rational eval_word(const std::vector<int>& labels) const;
  Rational slope(const RootVec& v) const;

  friend bool operator==(const Pressure& a, const Pressure& b) { return a.v_ == b.v_; }

 private:
  std::vector<Rational> v_;
};

std::string to_string(const Pressure& chi);

// -1/e everywhere.
Pressure standard_pressure(int e);
// A point off every affine wall; used for equality of Weyl group elements.
Pressure generic_pressure(int e);

bool is_rock(const CartanDatum& cd, const Pressure& chi, const RootVec& alpha);

// N_{Lambda - alpha}: positive roots beta with Lambda - alpha + beta a weight of V(Lambda).
std::vector<RootVec> scopes_walls(const CartanDatum& cd, const Weight& lambda, const RootVec& alpha);

struct ChamberSignature {
  std::vector<std::pair<RootVec, int>> signs;

  bool generic() const;
  friend bool operator==(const ChamberSignature&, const ChamberSignature&) = default;
};

ChamberSignature chamber_signature(const CartanDatum& cd, const Pressure& chi, const Weight& lambda,
                                   const RootVec& alpha);
ChamberSignature chamber_signature(const Pressure& chi, const std::vector<RootVec>& walls);

}  // namespace klrw
