#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace klrw {

enum class CartanKind { Affine, Finite };
enum class RootKind { Real, Imaginary, NotARoot };

// Integer combination of the simple roots alpha_0..alpha_{e-1}.
class RootVec {
 public:
  RootVec() = default;
  explicit RootVec(std::vector<int> coeffs) : c_(std::move(coeffs)) {}

  static RootVec zero(int e) { return RootVec(std::vector<int>(e, 0)); }
  static RootVec simple(int e, int i);
  static RootVec delta(int e) { return RootVec(std::vector<int>(e, 1)); }

  int size() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  const std::vector<int>& coeffs() const { return c_; }

  int height() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_nonpositive() const;
  // componentwise <=
  bool leq(const RootVec& other) const;

  RootVec& operator+=(const RootVec& o);
  RootVec& operator-=(const RootVec& o);
  friend RootVec operator+(RootVec a, const RootVec& b) { return a += b; }
  friend RootVec operator-(RootVec a, const RootVec& b) { return a -= b; }
  friend RootVec operator-(RootVec a);
  friend RootVec operator*(int k, RootVec a);

  friend bool operator==(const RootVec&, const RootVec&) = default;
  friend auto operator<=>(const RootVec&, const RootVec&) = default;

 private:
  std::vector<int> c_;
};

std::string to_string(const RootVec& v);  // "2a0+a1", "0"

// Dominant integral weight sum_i fund[i] * Lambda_i.
struct Weight {
  std::vector<int> fund;

  static Weight fundamental(int e, int i);
  int level() const;
  int operator[](int i) const { return fund[i]; }
  friend bool operator==(const Weight&, const Weight&) = default;
};

// sum_i fund[i] Lambda_i + sum_i root[i] alpha_i; Lambda - alpha is {Lambda.fund, -alpha}.
struct LatticeWeight {
  std::vector<int> fund;
  RootVec root;

  static LatticeWeight minus(const Weight& lambda, const RootVec& alpha);
  friend bool operator==(const LatticeWeight&, const LatticeWeight&) = default;
};

class CartanDatum {
 public:
  explicit CartanDatum(int e, CartanKind kind = CartanKind::Affine);

  int e() const { return e_; }
  CartanKind kind() const { return kind_; }
  bool affine() const { return kind_ == CartanKind::Affine; }

  // <alpha_i, alpha_j^vee>, symmetric.
  int entry(int i, int j) const { return c_[i * e_ + j]; }
  bool adjacent(int i, int j) const { return i != j && entry(i, j) < 0; }

  int form(const RootVec& a, const RootVec& b) const;
  int form(const LatticeWeight& g, const RootVec& b) const;
  // <mu, alpha_i^vee>
  int pair_simple(const LatticeWeight& mu, int i) const;
  int pair_simple(const RootVec& v, int i) const;
  // <gamma, beta^vee> for a real root beta; throws std::invalid_argument otherwise.
  int pair_coroot(const RootVec& gamma, const RootVec& beta) const;
  int pair_coroot(const LatticeWeight& gamma, const RootVec& beta) const;

  RootKind classify_positive_root(const RootVec& beta) const;
  bool is_real_root(const RootVec& beta) const;  // either sign

  // Positive roots of height <= max_height, imaginary ones included, ordered by
  // height then coefficient vector.
  std::vector<RootVec> positive_roots(int max_height) const;
  std::vector<RootVec> positive_roots_below(const RootVec& bound) const;

  RootVec reflect(RootVec v, int i) const;
  LatticeWeight reflect(LatticeWeight mu, int i) const;
  bool is_dominant(const LatticeWeight& mu) const;
  LatticeWeight dominant_conjugate(LatticeWeight mu) const;
  bool is_weight_of(const Weight& lambda, const LatticeWeight& mu) const;

  void check_rootvec(const RootVec& v) const;
  void check_weight(const Weight& w) const;

 private:
  int e_;
  CartanKind kind_;
  std::vector<int> c_;
};

}  // namespace klrw
