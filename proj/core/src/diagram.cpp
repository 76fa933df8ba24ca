#include "klrw/diagram.hpp"

#include <stdexcept>

namespace klrw {

Labels Labels::of(const Idem& idem) {
  auto s = idem.slots();
  if (static_cast<int>(s.size()) > kMaxSlots) throw std::invalid_argument("too many strands for the engine");
  Labels l;
  l.n = static_cast<std::int8_t>(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) l.v[i] = static_cast<std::int8_t>(s[i]);
  return l;
}

Idem Labels::idem() const {
  std::vector<int> s(v.begin(), v.begin() + n);
  return Idem::from_slots(s);
}

Labels Labels::swapped(int k) const {
  Labels l = *this;
  std::swap(l.v[k], l.v[k + 1]);
  return l;
}

Perm Perm::identity(int n) {
  Perm p;
  p.n = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) p.top[i] = static_cast<std::int8_t>(i);
  return p;
}

Perm Perm::of_word(int n, const Word& w) {
  Perm p = identity(n);
  for (auto k : w) p = p.then(k);
  return p;
}

Perm Perm::then(int k) const {
  Perm p = *this;
  for (int i = 0; i < n; ++i) {
    if (p.top[i] == k) p.top[i] = static_cast<std::int8_t>(k + 1);
    else if (p.top[i] == k + 1) p.top[i] = static_cast<std::int8_t>(k);
  }
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.n = n;
  for (int i = 0; i < n; ++i) p.top[top[i]] = static_cast<std::int8_t>(i);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n; ++i)
    if (top[i] != i) return false;
  return true;
}

int Perm::length() const {
  int l = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (top[i] > top[j]) ++l;
  return l;
}

Labels Perm::apply(const Labels& bottom) const {
  Labels t;
  t.n = bottom.n;
  for (int i = 0; i < n; ++i) t.v[top[i]] = bottom.v[i];
  return t;
}

int Monomial::total() const {
  int s = 0;
  for (auto x : exp) s += x;
  return s;
}

bool Monomial::is_one() const {
  for (auto x : exp)
    if (x) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (int i = 0; i < kMaxSlots; ++i) {
    int s = exp[i] + o.exp[i];
    if (s > 255) throw std::overflow_error("dot exponent overflow");
    m.exp[i] = static_cast<std::uint8_t>(s);
  }
  return m;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

void add_term(ZElement& into, const Term& t, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = into.emplace(t, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) into.erase(it);
  }
}

void add_scaled(ZElement& into, const ZElement& from, std::int64_t c, const Monomial& shift) {
  if (c == 0) return;
  bool plain = shift.is_one();
  for (const auto& [t, x] : from) {
    if (plain) {
      add_term(into, t, checked_mul(c, x));
    } else {
      add_term(into, Term{t.dots * shift, t.perm}, checked_mul(c, x));
    }
  }
}

void add_poly(Poly& into, const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = into.emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) into.erase(it);
  }
}

Word canonical_word(const Perm& p) {
  Word w;
  std::array<std::int8_t, kMaxSlots> cur{};
  for (int i = 0; i < p.n; ++i) cur[i] = static_cast<std::int8_t>(i);
  for (;;) {
    int k = 0;
    while (k + 1 < p.n && p.top[cur[k]] < p.top[cur[k + 1]]) ++k;
    if (k + 1 >= p.n) return w;
    w.push_back(static_cast<std::int8_t>(k));
    std::swap(cur[k], cur[k + 1]);
  }
}

std::string to_string(const Term& t, const Labels& bottom) {
  std::string out;
  for (int i = 0; i < bottom.n; ++i) {
    if (!t.dots.exp[i]) continue;
    out += "y" + std::to_string(i);
    if (t.dots.exp[i] > 1) out += "^" + std::to_string(t.dots.exp[i]);
    out += " ";
  }
  auto w = canonical_word(t.perm);
  if (w.empty() && out.empty()) return "e";
  for (auto k : w) out += "p" + std::to_string(k) + " ";
  out.pop_back();
  return out;
}

}  // namespace klrw
