#include "klrw/rewriter.hpp"

#include <mutex>
#include <stdexcept>

namespace klrw {

namespace {

Monomial unit(int pos, int power = 1) {
  Monomial m;
  m.exp[pos] = static_cast<std::uint8_t>(power);
  return m;
}

Monomial pair(int a, int pa, int b, int pb) {
  Monomial m;
  m.exp[a] = static_cast<std::uint8_t>(pa);
  m.exp[b] = static_cast<std::uint8_t>(m.exp[b] + pb);
  return m;
}

Word slice(const Word& w, std::size_t from, std::size_t to) { return Word(w.begin() + from, w.begin() + to); }

}  // namespace

Rewriter::Rewriter(int e, std::vector<int> lambda) : e_(e), lambda_(std::move(lambda)) {
  if (e < 2) throw std::invalid_argument("e must be at least 2");
  if (static_cast<int>(lambda_.size()) != e) throw std::invalid_argument("weight has wrong rank");
}

bool Rewriter::adjacent(int a, int b) const {
  int d = ((a - b) % e_ + e_) % e_;
  return a != b && (d == 1 || d == e_ - 1);
}

int Rewriter::crossing_degree(int a, int b) const {
  if (a == kRed) return lambda_[b];
  if (b == kRed) return lambda_[a];
  if (a == b) return -2;
  if (adjacent(a, b)) return e_ == 2 ? 2 : 1;
  return 0;
}

int Rewriter::perm_degree(const Labels& x, const Perm& p) const {
  int d = 0;
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      if (p.top[i] > p.top[j]) d += crossing_degree(x[i], x[j]);
  return d;
}

int Rewriter::degree(const Labels& x, const Term& t) const { return 2 * t.dots.total() + perm_degree(x, t.perm); }

Poly Rewriter::bigon(int a, int b, int k) const {
  Poly p;
  if (a == kRed) {
    add_poly(p, unit(k + 1, lambda_[b]), 1);
  } else if (b == kRed) {
    add_poly(p, unit(k, lambda_[a]), 1);
  } else if (a == b) {
    // zero
  } else if (!adjacent(a, b)) {
    add_poly(p, Monomial{}, 1);
  } else if (e_ == 2) {
    add_poly(p, unit(k, 2), -1);
    add_poly(p, pair(k, 1, k + 1, 1), 2);
    add_poly(p, unit(k + 1, 2), -1);
  } else if ((a - b + e_) % e_ == 1) {
    add_poly(p, unit(k), 1);
    add_poly(p, unit(k + 1), -1);
  } else {
    add_poly(p, unit(k + 1), 1);
    add_poly(p, unit(k), -1);
  }
  return p;
}

Poly Rewriter::braid_defect(int l0, int l1, int l2, int k) const {
  Poly p;
  if (l0 != l2 || l0 == kRed) return p;
  if (l1 == kRed) {
    int lam = lambda_[l0];
    for (int a = 0; a < lam; ++a) add_poly(p, pair(k, a, k + 2, lam - 1 - a), 1);
    return p;
  }
  if (!adjacent(l0, l1)) return p;
  if (e_ == 2) {
    add_poly(p, unit(k), -1);
    add_poly(p, unit(k + 1), 2);
    add_poly(p, unit(k + 2), -1);
  } else {
    add_poly(p, Monomial{}, (l0 - l1 + e_) % e_ == 1 ? 1 : -1);
  }
  return p;
}

template <class C>
const ZElement* Rewriter::lookup(const C& cache, const typename C::key_type& key) const {
  std::shared_lock lock(mu_);
  auto it = cache.find(key);
  return it == cache.end() ? nullptr : &it->second;
}

template <class C>
const ZElement& Rewriter::store(C& cache, const typename C::key_type& key, ZElement value) {
  std::unique_lock lock(mu_);
  return cache.emplace(key, std::move(value)).first->second;
}

std::size_t Rewriter::cache_size() const {
  std::shared_lock lock(mu_);
  return append_.size() + dot_.size() + canon_.size() + perms_.size() + dots_.size();
}

void Rewriter::bring_to_front(Word& u, int lo, int s, const BraidHook& hook) {
  if (lo >= static_cast<int>(u.size())) throw std::logic_error("bring_to_front: letter is not a descent");
  int t = u[lo];
  if (t == s) return;
  if (std::abs(t - s) >= 2) {
    bring_to_front(u, lo + 1, s, hook);
    std::swap(u[lo], u[lo + 1]);
    return;
  }
  bring_to_front(u, lo + 1, s, hook);
  bring_to_front(u, lo + 2, t, hook);
  hook(u, lo);
  u[lo] = static_cast<std::int8_t>(s);
  u[lo + 1] = static_cast<std::int8_t>(t);
  u[lo + 2] = static_cast<std::int8_t>(s);
}

void Rewriter::bring_to_back(Word& u, int s, const BraidHook& hook) {
  Word r(u.rbegin(), u.rend());
  int len = static_cast<int>(u.size());
  bring_to_front(r, 0, s, [&](const Word& cur_r, int p) {
    Word cur(cur_r.rbegin(), cur_r.rend());
    hook(cur, len - 3 - p);
  });
  u.assign(r.rbegin(), r.rend());
}

void Rewriter::braid_correction(const Labels& x, const Word& cur, int p, const Word& tail, ZElement& acc) {
  Labels lab = Perm::of_word(x.n, slice(cur, 0, p)).apply(x);
  int t = cur[p], s = cur[p + 1];
  int k = std::min(t, s);
  Poly r = braid_defect(lab[k], lab[k + 1], lab[k + 2], k);
  if (r.empty()) return;
  std::vector<Layer> layers;
  for (int i = 0; i < p; ++i) layers.push_back(Layer::cross(cur[i]));
  layers.push_back(Layer::dots(std::move(r)));
  for (std::size_t i = p + 3; i < cur.size(); ++i) layers.push_back(Layer::cross(cur[i]));
  for (auto k2 : tail) layers.push_back(Layer::cross(k2));
  add_scaled(acc, stack(x, layers), t == k ? 1 : -1, Monomial{});
}

ZElement Rewriter::times_crossing(const Labels& x, const ZElement& a, int k) {
  ZElement out;
  for (const auto& [t, c] : a) add_scaled(out, append(x, t.perm, k), c, t.dots);
  return out;
}

ZElement Rewriter::times_poly(const Labels& x, const ZElement& a, const Poly& p) {
  ZElement out;
  for (const auto& [t, c] : a)
    for (const auto& [m, pc] : p) add_scaled(out, mul_dots_top(x, t.perm, m), checked_mul(c, pc), t.dots);
  return out;
}

ZElement Rewriter::stack(const Labels& x, const std::vector<Layer>& layers) {
  ZElement cur;
  cur.emplace(Term{Monomial{}, Perm::identity(x.n)}, 1);
  for (const auto& layer : layers) {
    if (cur.empty()) break;
    cur = layer.crossing >= 0 ? times_crossing(x, cur, layer.crossing) : times_poly(x, cur, layer.poly);
  }
  return cur;
}

ZElement Rewriter::word(const Labels& x, const Word& w) {
  std::vector<Layer> layers;
  for (auto k : w) layers.push_back(Layer::cross(k));
  return stack(x, layers);
}

const ZElement& Rewriter::append(const Labels& x, const Perm& c, int k) {
  if (k < 0 || k + 1 >= x.n) throw std::out_of_range("crossing position out of range");
  Key key{x, c, Perm{}, Monomial{}, k};
  if (auto* hit = lookup(append_, key)) return *hit;

  ZElement out;
  Perm inv = c.inverse();
  if (inv.top[k] < inv.top[k + 1]) {
    Perm next = c.then(k);
    Word u = canonical_word(c);
    u.push_back(static_cast<std::int8_t>(k));
    if (canonical_word(next) == u) {
      out.emplace(Term{Monomial{}, next}, 1);
    } else {
      out = canon_reduced(x, u);
    }
  } else {
    Word u = canonical_word(c);
    const Word tail{static_cast<std::int8_t>(k)};
    bring_to_back(u, k, [&](const Word& cur, int p) { braid_correction(x, cur, p, tail, out); });
    u.pop_back();
    Labels top = Perm::of_word(x.n, u).apply(x);
    std::vector<Layer> layers;
    for (auto l : u) layers.push_back(Layer::cross(l));
    Poly q = bigon(top[k], top[k + 1], k);
    if (!q.empty()) {
      layers.push_back(Layer::dots(std::move(q)));
      add_scaled(out, stack(x, layers), 1, Monomial{});
    }
  }
  return store(append_, key, std::move(out));
}

const ZElement& Rewriter::canon_reduced(const Labels& x, const Word& u) {
  auto key = std::make_pair(x, u);
  if (auto* hit = lookup(canon_, key)) return *hit;

  Perm p = Perm::of_word(x.n, u);
  Word v = canonical_word(p);
  ZElement out;
  if (u == v) {
    out.emplace(Term{Monomial{}, p}, 1);
    return store(canon_, key, std::move(out));
  }
  Word w = u;
  const Word none;
  bring_to_front(w, 0, v[0], [&](const Word& cur, int pos) { braid_correction(x, cur, pos, none, out); });
  Labels x1 = x.swapped(v[0]);
  Word rest = slice(w, 1, w.size());
  Perm lead = Perm::of_word(x.n, slice(v, 1, v.size()));
  const ZElement& tail = canon_reduced(x1, rest);
  for (const auto& [t, c] : tail) {
    if (t.perm == lead && t.dots.is_one()) {
      add_term(out, Term{Monomial{}, p}, c);
      continue;
    }
    std::vector<Layer> layers{Layer::cross(v[0])};
    if (!t.dots.is_one()) layers.push_back(Layer::dots(Poly{{t.dots, 1}}));
    for (auto l : canonical_word(t.perm)) layers.push_back(Layer::cross(l));
    add_scaled(out, stack(x, layers), c, Monomial{});
  }
  return store(canon_, key, std::move(out));
}

const ZElement& Rewriter::mul_dot(const Labels& x, const Perm& c, int pos) {
  Key key{x, c, Perm{}, Monomial{}, pos};
  if (auto* hit = lookup(dot_, key)) return *hit;

  ZElement out;
  if (x[c.inverse().top[pos]] == kRed) throw std::logic_error("dot placed on the red strand");
  if (c.is_identity()) {
    out.emplace(Term{unit(pos), c}, 1);
    return store(dot_, key, std::move(out));
  }
  Word w = canonical_word(c);
  int j = w.back();
  w.pop_back();
  Perm prev = Perm::of_word(x.n, w);
  Labels mid = prev.apply(x);
  int below = pos == j ? j + 1 : pos == j + 1 ? j : pos;
  out = times_crossing(x, mul_dot(x, prev, below), j);
  if (mid[j] == mid[j + 1] && mid[j] != kRed && (pos == j || pos == j + 1))
    add_term(out, Term{Monomial{}, prev}, pos == j ? 1 : -1);
  return store(dot_, key, std::move(out));
}

const ZElement& Rewriter::mul_dots_top(const Labels& x, const Perm& c, const Monomial& m) {
  Key key{x, c, Perm{}, m, 0};
  if (auto* hit = lookup(dots_, key)) return *hit;

  ZElement out;
  int pos = 0;
  while (pos < kMaxSlots && m.exp[pos] == 0) ++pos;
  if (pos == kMaxSlots) {
    out.emplace(Term{Monomial{}, c}, 1);
  } else {
    Monomial rest = m;
    rest.exp[pos] -= 1;
    for (const auto& [t, k] : mul_dots_top(x, c, rest)) add_scaled(out, mul_dot(x, t.perm, pos), k, t.dots);
  }
  return store(dots_, key, std::move(out));
}

const ZElement& Rewriter::mul_perms(const Labels& x, const Perm& c, const Perm& d) {
  Key key{x, c, d, Monomial{}, 0};
  if (auto* hit = lookup(perms_, key)) return *hit;

  ZElement cur;
  cur.emplace(Term{Monomial{}, c}, 1);
  for (auto k : canonical_word(d)) cur = times_crossing(x, cur, k);
  return store(perms_, key, std::move(cur));
}

ZElement Rewriter::multiply_terms(const Labels& x, const Term& a, const Term& b) {
  ZElement out;
  for (const auto& [t, c] : mul_dots_top(x, a.perm, b.dots))
    add_scaled(out, mul_perms(x, t.perm, b.perm), c, t.dots * a.dots);
  return out;
}

ZElement Rewriter::multiply(const Labels& x, const ZElement& a, const ZElement& b) {
  ZElement out;
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) add_scaled(out, multiply_terms(x, ta, tb), checked_mul(ca, cb), Monomial{});
  return out;
}

}  // namespace klrw
