#pragma once

#include <compare>
#include <string>
#include <vector>

#include "klrw/cartan.hpp"

namespace klrw {

inline constexpr int kRed = -1;

// e(l, r): black labels left and right of the single red strand, each read outside-in.
struct Idem {
  std::vector<int> left;   // leftmost strand first
  std::vector<int> right;  // rightmost strand first

  static Idem from_word(const std::vector<int>& word, int red_index);
  static Idem from_slots(const std::vector<int>& slots);

  std::vector<int> word() const;   // left-to-right black labels
  std::vector<int> slots() const;  // left-to-right, kRed for the red strand
  int red_index() const { return static_cast<int>(left.size()); }
  int strands() const { return static_cast<int>(left.size() + right.size()); }
  RootVec content(int e) const;

  friend bool operator==(const Idem&, const Idem&) = default;
  friend auto operator<=>(const Idem&, const Idem&) = default;
};

// "0R101" when every label is a single digit, otherwise "0,R,10,1".
std::string to_string(const Idem& idem);
Idem parse_idem(std::string_view text);

enum class RedPositions { All, LeftmostOnly };

// Every arrangement of alpha's letters, each with every admissible red position;
// ordered by word, then by red index.
std::vector<Idem> enumerate_idempotents(int e, const Weight& lambda, const RootVec& alpha,
                                        RedPositions mode = RedPositions::All);

}  // namespace klrw
