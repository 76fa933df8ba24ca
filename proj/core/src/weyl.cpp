#include "klrw/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace klrw {

WeylWord WeylWord::inverse() const {
  WeylWord w{letters};
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

WeylWord operator*(const WeylWord& a, const WeylWord& b) {
  WeylWord w{a.letters};
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

std::string to_string(const WeylWord& w) {
  if (w.empty()) return "id";
  std::string out;
  for (int i : w.letters) out += "s" + std::to_string(i);
  return out;
}

WeylWord parse_weyl_word(std::string_view text) {
  WeylWord w;
  if (text.empty() || text == "id" || text == "e") return w;
  auto bad = [&] { return std::invalid_argument("malformed Weyl word: '" + std::string(text) + "'"); };
  // Either "s1s0" or a comma separated list "1,0".
  const bool prefixed = text.front() == 's';
  std::size_t i = 0;
  while (i < text.size()) {
    if (prefixed && text[i++] != 's') throw bad();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw bad();
    w.letters.push_back(std::stoi(std::string(text.substr(start, i - start))));
    if (!prefixed && i < text.size() && (text[i++] != ',' || i == text.size())) throw bad();
  }
  return w;
}

namespace {
void check_letters(const CartanDatum& cd, const WeylWord& w) {
  for (int i : w.letters)
    if (i < 0 || i >= cd.e()) throw std::invalid_argument("Weyl letter out of range: " + std::to_string(i));
}
}  // namespace

RootVec act_root(const CartanDatum& cd, const WeylWord& w, RootVec v) {
  check_letters(cd, w);
  cd.check_rootvec(v);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = cd.reflect(std::move(v), *it);
  return v;
}

LatticeWeight act_weight(const CartanDatum& cd, const WeylWord& w, LatticeWeight mu) {
  check_letters(cd, w);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) mu = cd.reflect(std::move(mu), *it);
  return mu;
}

Pressure act_pressure(const CartanDatum& cd, const WeylWord& w, const Pressure& chi) {
  check_letters(cd, w);
  std::vector<Rational> v = chi.values();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int i = *it;
    Rational ci = v[i];
    for (int j = 0; j < cd.e(); ++j) v[j] -= cd.entry(i, j) * ci;
  }
  return Pressure(std::move(v));
}

RootVec act_dotted(const CartanDatum& cd, const WeylWord& w, const Weight& lambda, const RootVec& alpha) {
  cd.check_weight(lambda);
  LatticeWeight mu = act_weight(cd, w, LatticeWeight::minus(lambda, alpha));
  return -mu.root;
}

bool same_element(const CartanDatum& cd, const WeylWord& a, const WeylWord& b) {
  Pressure g = generic_pressure(cd.e());
  return act_pressure(cd, a, g) == act_pressure(cd, b, g);
}

bool is_left_descent(const CartanDatum& cd, const WeylWord& w, int i) {
  return act_root(cd, w.inverse(), RootVec::simple(cd.e(), i)).is_nonpositive();
}

bool is_right_descent(const CartanDatum& cd, const WeylWord& w, int i) {
  return act_root(cd, w, RootVec::simple(cd.e(), i)).is_nonpositive();
}

WeylWord reduce(const CartanDatum& cd, const WeylWord& w) {
  check_letters(cd, w);
  WeylWord out;
  WeylWord cur = w;
  // Strip left descents until cur is the identity.
  for (;;) {
    int found = -1;
    for (int i = 0; i < cd.e() && found < 0; ++i)
      if (is_left_descent(cd, cur, i)) found = i;
    if (found < 0) break;
    out.letters.push_back(found);
    cur.letters.insert(cur.letters.begin(), found);
  }
  return out;
}

int length(const CartanDatum& cd, const WeylWord& w) { return static_cast<int>(reduce(cd, w).size()); }

std::vector<int> stabilizer_generators(const CartanDatum& cd, const Weight& lambda, const RootVec& alpha) {
  LatticeWeight mu = LatticeWeight::minus(lambda, alpha);
  std::vector<int> out;
  for (int i = 0; i < cd.e(); ++i)
    if (cd.pair_simple(mu, i) == 0) out.push_back(i);
  return out;
}

WeylWord min_coset_rep(const CartanDatum& cd, const WeylWord& w, const Weight& lambda, const RootVec& alpha) {
  cd.check_weight(lambda);
  if (!cd.is_dominant(LatticeWeight::minus(lambda, alpha)))
    throw std::invalid_argument("min_coset_rep: Lambda - alpha is not dominant");
  auto gens = stabilizer_generators(cd, lambda, alpha);
  WeylWord cur = reduce(cd, w);
  for (;;) {
    auto it = std::find_if(gens.begin(), gens.end(), [&](int i) { return is_right_descent(cd, cur, i); });
    if (it == gens.end()) return cur;
    cur.letters.push_back(*it);
    cur = reduce(cd, cur);
  }
}

}  // namespace klrw
