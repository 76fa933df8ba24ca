#include "klrw/idempotent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace klrw {

Idem Idem::from_word(const std::vector<int>& word, int red_index) {
  if (red_index < 0 || red_index > static_cast<int>(word.size()))
    throw std::invalid_argument("red index out of range");
  Idem idem;
  idem.left.assign(word.begin(), word.begin() + red_index);
  idem.right.assign(word.rbegin(), word.rend() - red_index);
  return idem;
}

Idem Idem::from_slots(const std::vector<int>& slots) {
  auto it = std::find(slots.begin(), slots.end(), kRed);
  if (it == slots.end() || std::count(slots.begin(), slots.end(), kRed) != 1)
    throw std::invalid_argument("slot sequence needs exactly one red strand");
  std::vector<int> word;
  for (int s : slots)
    if (s != kRed) word.push_back(s);
  return from_word(word, static_cast<int>(it - slots.begin()));
}

std::vector<int> Idem::word() const {
  std::vector<int> w = left;
  w.insert(w.end(), right.rbegin(), right.rend());
  return w;
}

std::vector<int> Idem::slots() const {
  std::vector<int> s = left;
  s.push_back(kRed);
  s.insert(s.end(), right.rbegin(), right.rend());
  return s;
}

RootVec Idem::content(int e) const {
  RootVec v = RootVec::zero(e);
  for (int i : left) v[i] += 1;
  for (int i : right) v[i] += 1;
  return v;
}

std::string to_string(const Idem& idem) {
  auto slots = idem.slots();
  bool compact = std::all_of(slots.begin(), slots.end(), [](int s) { return s < 10; });
  std::string out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!compact && i) out += ',';
    out += slots[i] == kRed ? std::string("R") : std::to_string(slots[i]);
  }
  return out;
}

Idem parse_idem(std::string_view text) {
  std::vector<int> slots;
  bool has_comma = text.find(',') != std::string_view::npos;
  std::string digits;
  auto flush = [&] {
    if (!digits.empty()) slots.push_back(std::stoi(digits));
    digits.clear();
  };
  for (char ch : text) {
    if (ch == 'R' || ch == 'r') {
      flush();
      slots.push_back(kRed);
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
      if (!has_comma) flush();
    } else if (ch == ',' || ch == '|' || ch == ' ') {
      flush();
    } else {
      throw std::invalid_argument("malformed idempotent: '" + std::string(text) + "'");
    }
  }
  flush();
  return Idem::from_slots(slots);
}

std::vector<Idem> enumerate_idempotents(int e, const Weight& lambda, const RootVec& alpha, RedPositions mode) {
  if (lambda.level() != 1) throw std::invalid_argument("idempotent enumeration needs a level-1 weight");
  if (alpha.size() != e || !alpha.is_nonnegative()) throw std::invalid_argument("alpha must be a nonnegative root vector");
  std::vector<int> letters;
  for (int i = 0; i < e; ++i) letters.insert(letters.end(), alpha[i], i);
  std::vector<Idem> out;
  do {
    int last = mode == RedPositions::All ? static_cast<int>(letters.size()) : 0;
    for (int red = 0; red <= last; ++red) out.push_back(Idem::from_word(letters, red));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

}  // namespace klrw
