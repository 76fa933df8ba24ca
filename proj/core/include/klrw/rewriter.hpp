#pragma once

#include <functional>
#include <map>
#include <shared_mutex>
#include <vector>

#include "klrw/diagram.hpp"

namespace klrw {

// One layer of a stacked diagram: a crossing of slots k, k+1, or a polynomial in the dots.
struct Layer {
  int crossing = -1;
  Poly poly;

  static Layer cross(int k) { return Layer{k, {}}; }
  static Layer dots(Poly p) { return Layer{-1, std::move(p)}; }
};

// Normal forms in the KLRW algebra with one red strand of weight lambda, over the integers.
// Caches are shared; concurrent callers are safe.
class Rewriter {
 public:
  Rewriter(int e, std::vector<int> lambda);

  int e() const { return e_; }
  const std::vector<int>& lambda() const { return lambda_; }
  bool adjacent(int a, int b) const;

  int crossing_degree(int a, int b) const;
  int perm_degree(const Labels& bottom, const Perm& p) const;
  int degree(const Labels& bottom, const Term& t) const;

  // psi_k psi_k on bottom labels (a, b) at slots k, k+1.
  Poly bigon(int a, int b, int k) const;
  // psi_k psi_{k+1} psi_k - psi_{k+1} psi_k psi_{k+1} on bottom labels (l0, l1, l2) at k, k+1, k+2.
  Poly braid_defect(int l0, int l1, int l2, int k) const;

  ZElement stack(const Labels& bottom, const std::vector<Layer>& layers);
  ZElement word(const Labels& bottom, const Word& w);
  // psi_C psi_D
  const ZElement& mul_perms(const Labels& bottom, const Perm& c, const Perm& d);
  // psi_C y^m with the dots at the top
  const ZElement& mul_dots_top(const Labels& bottom, const Perm& c, const Monomial& m);
  ZElement multiply_terms(const Labels& bottom, const Term& a, const Term& b);
  ZElement multiply(const Labels& bottom, const ZElement& a, const ZElement& b);

  std::size_t cache_size() const;

 private:
  struct Key {
    Labels x;
    Perm c;
    Perm d;
    Monomial m;
    int k = 0;
    auto operator<=>(const Key&) const = default;
  };
  using Cache = std::map<Key, ZElement>;
  using WordCache = std::map<std::pair<Labels, Word>, ZElement>;
  using BraidHook = std::function<void(const Word&, int)>;

  template <class C>
  const ZElement* lookup(const C& cache, const typename C::key_type& key) const;
  template <class C>
  const ZElement& store(C& cache, const typename C::key_type& key, ZElement value);

  const ZElement& append(const Labels& x, const Perm& c, int k);
  const ZElement& mul_dot(const Labels& x, const Perm& c, int pos);
  const ZElement& canon_reduced(const Labels& x, const Word& u);
  ZElement times_crossing(const Labels& x, const ZElement& a, int k);
  ZElement times_poly(const Labels& x, const ZElement& a, const Poly& p);
  void braid_correction(const Labels& x, const Word& cur, int p, const Word& tail, ZElement& acc);

  static void bring_to_front(Word& u, int lo, int s, const BraidHook& hook);
  static void bring_to_back(Word& u, int s, const BraidHook& hook);

  int e_;
  std::vector<int> lambda_;
  mutable std::shared_mutex mu_;
  Cache append_, dot_, perms_, dots_;
  WordCache canon_;
};

}  // namespace klrw
