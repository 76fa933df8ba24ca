#pragma once

#include <string>
#include <vector>

#include "klrw/cartan.hpp"
#include "klrw/pressure.hpp"

namespace klrw {

// s_{letters[0]} s_{letters[1]} ... ; the rightmost letter acts first.
struct WeylWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  WeylWord inverse() const;
  friend WeylWord operator*(const WeylWord& a, const WeylWord& b);
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

std::string to_string(const WeylWord& w);  // "s1s0", "id"
WeylWord parse_weyl_word(std::string_view text);  // "1,0" or "s1s0" or "id"

RootVec act_root(const CartanDatum& cd, const WeylWord& w, RootVec v);
LatticeWeight act_weight(const CartanDatum& cd, const WeylWord& w, LatticeWeight mu);
Pressure act_pressure(const CartanDatum& cd, const WeylWord& w, const Pressure& chi);
// w(alpha - Lambda) + Lambda
RootVec act_dotted(const CartanDatum& cd, const WeylWord& w, const Weight& lambda, const RootVec& alpha);

bool same_element(const CartanDatum& cd, const WeylWord& a, const WeylWord& b);
bool is_left_descent(const CartanDatum& cd, const WeylWord& w, int i);
bool is_right_descent(const CartanDatum& cd, const WeylWord& w, int i);
WeylWord reduce(const CartanDatum& cd, const WeylWord& w);
int length(const CartanDatum& cd, const WeylWord& w);

// Generators of W_alpha: simple reflections fixing Lambda - alpha.
std::vector<int> stabilizer_generators(const CartanDatum& cd, const Weight& lambda, const RootVec& alpha);
WeylWord min_coset_rep(const CartanDatum& cd, const WeylWord& w, const Weight& lambda, const RootVec& alpha);

}  // namespace klrw
