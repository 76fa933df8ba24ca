#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "klrw/rational.hpp"

namespace klrw {

// p == 0 means the rationals.
struct FieldSpec {
  int p = 0;

  bool rational() const { return p == 0; }
  std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
  static FieldSpec parse(std::string_view text);
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct RationalField {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long x) const { return Rational(static_cast<long>(x)); }
  value_type from_rational(const Rational& q) const { return q; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    return 1 / a;
  }
  Rational to_rational(const value_type& a) const { return a; }
  int characteristic() const { return 0; }
  FieldSpec spec() const { return {0}; }
};

struct PrimeField {
  using value_type = std::int64_t;
  std::int64_t p;

  explicit PrimeField(std::int64_t prime);
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long x) const { return ((x % p) + p) % p; }
  value_type from_rational(const Rational& q) const;
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a - b + p) % p; }
  value_type mul(value_type a, value_type b) const { return static_cast<value_type>((__int128)a * b % p); }
  value_type neg(value_type a) const { return a ? p - a : 0; }
  value_type inv(value_type a) const;
  Rational to_rational(value_type a) const { return Rational(static_cast<long>(a)); }
  int characteristic() const { return static_cast<int>(p); }
  FieldSpec spec() const { return {static_cast<int>(p)}; }
};

bool is_prime(long long n);

// Calls f(field) with a RationalField or PrimeField, according to spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& f) {
  if (spec.rational()) return f(RationalField{});
  return f(PrimeField(spec.p));
}

}  // namespace klrw
