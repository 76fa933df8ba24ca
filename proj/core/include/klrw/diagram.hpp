#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "klrw/idempotent.hpp"

namespace klrw {

inline constexpr int kMaxSlots = 16;

// Slot labels of an idempotent, left to right; kRed marks the red strand.
struct Labels {
  std::array<std::int8_t, kMaxSlots> v{};
  std::int8_t n = 0;

  static Labels of(const Idem& idem);
  Idem idem() const;
  int operator[](int i) const { return v[i]; }
  int size() const { return n; }
  Labels swapped(int k) const;

  friend bool operator==(const Labels&, const Labels&) = default;
  friend auto operator<=>(const Labels&, const Labels&) = default;
};

using Word = std::vector<std::int8_t>;

// top[i] is the top slot reached by the strand starting at bottom slot i.
struct Perm {
  std::array<std::int8_t, kMaxSlots> top{};
  std::int8_t n = 0;

  static Perm identity(int n);
  static Perm of_word(int n, const Word& w);
  Perm then(int k) const;  // followed by a crossing of top slots k, k+1
  Perm inverse() const;
  bool is_identity() const;
  int length() const;
  Labels apply(const Labels& bottom) const;  // labels at the top

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

// Dot exponents per slot.
struct Monomial {
  std::array<std::uint8_t, kMaxSlots> exp{};

  int total() const;
  bool is_one() const;
  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// y^dots (at the bottom) followed by psi_w for the canonical word w of perm.
struct Term {
  Monomial dots;
  Perm perm;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

using ZElement = std::map<Term, std::int64_t>;
using Poly = std::map<Monomial, std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
void add_term(ZElement& into, const Term& t, std::int64_t c);
void add_scaled(ZElement& into, const ZElement& from, std::int64_t c, const Monomial& shift);
void add_poly(Poly& into, const Monomial& m, std::int64_t c);

Word canonical_word(const Perm& p);  // lexicographically least reduced word

std::string to_string(const Term& t, const Labels& bottom);

}  // namespace klrw
