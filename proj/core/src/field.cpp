#include "klrw/field.hpp"

#include <string>
#include <tuple>
#include <utility>

namespace klrw {

bool is_prime(long long n) {
  if (n < 2) return false;
  mpz_class m(std::to_string(n));
  return mpz_probab_prime_p(m.get_mpz_t(), 30) > 0;  // BPSW; exact below 2^64
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q" || text == "0") return {0};
  std::string_view digits = text;
  if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'f')) digits.remove_prefix(1);
  if (!digits.empty() && (digits[0] == 'p' || digits[0] == 'P')) digits.remove_prefix(1);
  int p = 0;
  try {
    p = std::stoi(std::string(digits));
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown coefficient field '" + std::string(text) + "' (use Q or Fp, e.g. F2)");
  }
  if (!is_prime(p)) throw std::invalid_argument("coefficient field characteristic " + std::to_string(p) + " is not prime");
  return {p};
}

PrimeField::PrimeField(std::int64_t prime) : p(prime) {
  if (!is_prime(prime)) throw std::invalid_argument("PrimeField needs a prime");
}

PrimeField::value_type PrimeField::from_rational(const Rational& q) const {
  mpz_class m(p);
  mpz_class num = q.get_num() % m, den = q.get_den() % m;
  if (num < 0) num += m;
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  mpz_class di;
  mpz_invert(di.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class r = (num * di) % m;
  return r.get_si();
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("division by zero");
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::pair(nt, t - q * nt);
    std::tie(r, nr) = std::pair(nr, r - q * nr);
  }
  return t < 0 ? t + p : t;
}

}  // namespace klrw
