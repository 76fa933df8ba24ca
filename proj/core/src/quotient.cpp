#include "klrw/quotient.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <type_traits>

namespace klrw {

long long GradedDims::total() const {
  long long t = 0;
  for (const auto& [d, n] : dims) t += n;
  return t;
}

long long GradedDims::at(int d) const {
  auto it = dims.find(d);
  return it == dims.end() ? 0 : it->second;
}

std::string to_string(const GradedDims& g) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [d, n] : g.dims) {
    os << (first ? "" : ", ") << d << ": " << n;
    first = false;
  }
  os << "} total " << g.total() << " over " << g.field.name() << ", " << g.status();
  return os.str();
}

namespace {

constexpr std::int64_t kSievePrime = 2305843009213693951LL;  // 2^61 - 1

const PrimeField& sieve_prime() {
  static const PrimeField f(kSievePrime);
  return f;
}

// r/s with |r|, s <= sqrt(p/2) and r = a s mod p, if one exists.
std::optional<Rational> rational_reconstruct(std::int64_t a, std::int64_t p) {
  __int128 r0 = p, r1 = a, s0 = 0, s1 = 1;
  const __int128 bound = 1518500249;  // floor(sqrt(2^61 / 2))
  while (r1 > bound) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0) return std::nullopt;
  __int128 num = r1, den = s1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den > bound) return std::nullopt;
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

template <class G>
SparseVec<G> to_field(const G& f, const IntRow& row) {
  SparseVec<G> v;
  for (const auto& [j, c] : row) {
    auto x = f.from_int(c);
    if (!f.is_zero(x)) v.emplace_back(j, x);
  }
  return v;
}

}  // namespace

template <class F>
SteadiedQuotient<F>::SteadiedQuotient(KlrwAlgebra& alg, std::vector<Idem> generators, F field, QuotientOptions opts)
    : alg_(alg), gens_(std::move(generators)), f_(std::move(field)), opts_(opts) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  gen_set_.insert(gens_.begin(), gens_.end());
  if (opts_.threads < 1) opts_.threads = 1;
  if (opts_.window < 1) throw std::invalid_argument("window must be positive");
}

template <class F>
SparseVec<F> SteadiedQuotient<F>::coordinates(const Idem& bottom, const Idem& top, int degree, const ZElement& z) {
  const Slice& s = slice(bottom, top, degree);
  SparseVec<F> v;
  for (const auto& [t, c] : z) {
    auto it = s.index.find(t);
    if (it == s.index.end()) throw std::logic_error("term outside its degree cell: " + to_string(t, Labels::of(bottom)));
    auto x = f_.from_int(c);
    if (!f_.is_zero(x)) v.emplace_back(it->second, x);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

template <class F>
std::vector<typename F::value_type> SteadiedQuotient<F>::Slice::project(const F& f, const SparseVec<F>& v) const {
  std::vector<typename F::value_type> out(annihilator.size(), f.zero());
  for (std::size_t j = 0; j < annihilator.size(); ++j)
    for (const auto& [i, x] : v) out[j] = f.add(out[j], f.mul(x, annihilator[j][i]));
  return out;
}

template <class F>
bool SteadiedQuotient<F>::Slice::in_ideal(const F& f, const SparseVec<F>& v) const {
  for (const auto& x : project(f, v))
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
std::unique_ptr<typename SteadiedQuotient<F>::Slice> SteadiedQuotient<F>::compute(const Idem& x, const Idem& z,
                                                                                   int d) {
  auto s = std::make_unique<Slice>();
  s->basis = alg_.block_basis(x, z, d);
  const int n = s->dim();
  for (int i = 0; i < n; ++i) s->index.emplace(s->basis[i], i);
  if (n == 0) return s;
  if (gen_set_.count(x) || gen_set_.count(z)) {
    s->ideal_rank = n;
    return s;
  }
  Rewriter& rw = alg_.rewriter();
  Labels lx = Labels::of(x);
  // Rows are selected modulo a prime: the field's own, or a large one standing in for Q.
  const PrimeField sieve_field = [&] {
    if constexpr (std::is_same_v<F, PrimeField>)
      return f_;
    else
      return sieve_prime();
  }();
  Echelon<PrimeField> sieve(sieve_field, n);
  std::vector<IntRow> kept, rest;
  bool full = false;
  for (const Idem& g : gens_) {
    if (full) break;
    Labels lg = Labels::of(g);
    for (const Perm& w : alg_.matchings(g, z)) {
      if (full) break;
      int rest_deg = d - rw.perm_degree(lg, w);
      for (const Term& a : alg_.block_basis(x, g, rest_deg)) {
        ZElement prod;
        add_scaled(prod, rw.mul_perms(lx, a.perm, w), 1, a.dots);
        IntRow row;
        for (const auto& [t, c] : prod) {
          auto it = s->index.find(t);
          if (it == s->index.end()) throw std::logic_error("ideal product left its degree cell");
          row.emplace_back(it->second, c);
        }
        if (row.empty()) continue;
        std::sort(row.begin(), row.end());
        if (sieve.insert(to_field(sieve_field, row)))
          kept.push_back(std::move(row));
        else if constexpr (!std::is_same_v<F, PrimeField>)
          rest.push_back(std::move(row));
        if ((full = sieve.rank() == n)) break;
      }
    }
  }
  if (full) {
    s->ideal_rank = n;
    return s;
  }
  s->annihilator = annihilator_of(std::move(kept), rest, n);
  s->ideal_rank = n - s->quotient_dim();
  // Each kernel row ends with a unit in its own free column, which no other row touches.
  for (const auto& k : s->annihilator) {
    int last = n - 1;
    while (f_.is_zero(k[last])) --last;
    s->reps.push_back(last);
  }
  for (std::size_t j = 0; j < s->reps.size(); ++j)
    for (std::size_t i = 0; i < s->annihilator.size(); ++i)
      if (!f_.is_zero(f_.sub(s->annihilator[i][s->reps[j]], i == j ? f_.one() : f_.zero())))
        throw std::logic_error("quotient representatives are not dual to the annihilator");
  return s;
}

template <class F>
DenseMatrix<F> SteadiedQuotient<F>::annihilator_of(std::vector<IntRow> kept, const std::vector<IntRow>& rest, int n) {
  auto dense = [&](const auto& field) {
    using G = std::decay_t<decltype(field)>;
    DenseMatrix<G> m;
    for (const auto& row : kept) {
      Dense<G> v(n, field.zero());
      for (const auto& [j, c] : row) v[j] = field.add(v[j], field.from_int(c));
      m.push_back(std::move(v));
    }
    return m;
  };
  auto orthogonal = [&](const DenseMatrix<F>& ker, const IntRow& row) {
    for (const auto& k : ker) {
      auto acc = f_.zero();
      for (const auto& [j, c] : row) acc = f_.add(acc, f_.mul(f_.from_int(c), k[j]));
      if (!f_.is_zero(acc)) return false;
    }
    return true;
  };
  if constexpr (std::is_same_v<F, PrimeField>) {
    return nullspace(f_, dense(f_), n);
  } else {
    // Kernel modulo a large prime, lifted by rational reconstruction and checked exactly.
    const PrimeField big = sieve_prime();
    auto modk = nullspace(big, dense(big), n);
    DenseMatrix<F> ker;
    bool ok = true;
    for (const auto& v : modk) {
      Dense<F> q(n, f_.zero());
      for (int j = 0; j < n && ok; ++j) {
        auto r = rational_reconstruct(v[j], big.p);
        if (!r) ok = false;
        else q[j] = *r;
      }
      if (!ok) break;
      ker.push_back(std::move(q));
    }
    if (ok)
      for (const std::vector<IntRow>* rows : {static_cast<const std::vector<IntRow>*>(&kept), &rest})
        for (const auto& row : *rows)
          if (ok && !orthogonal(ker, row)) ok = false;
    if (ok) return ker;
    // Exact fallback.
    ker = nullspace(f_, dense(f_), n);
    for (const auto& row : rest) {
      if (orthogonal(ker, row)) continue;
      kept.push_back(row);
      ker = nullspace(f_, dense(f_), n);
    }
    return ker;
  }
}

template <class F>
const typename SteadiedQuotient<F>::Slice& SteadiedQuotient<F>::slice(const Idem& bottom, const Idem& top, int d) {
  CellKey key{bottom, top, d};
  {
    std::lock_guard lock(mu_);
    auto it = cells_.find(key);
    if (it != cells_.end()) return *it->second;
  }
  auto s = compute(bottom, top, d);
  std::lock_guard lock(mu_);
  return *cells_.emplace(key, std::move(s)).first->second;
}

template <class F>
void SteadiedQuotient<F>::precompute(const std::vector<CellKey>& cells) {
  std::vector<CellKey> todo;
  {
    std::lock_guard lock(mu_);
    for (const auto& c : cells)
      if (!cells_.count(c)) todo.push_back(c);
  }
  if (opts_.threads == 1 || todo.size() < 2) {
    for (const auto& [x, z, d] : todo) slice(x, z, d);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) {
      const auto& [x, z, d] = todo[i];
      slice(x, z, d);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < opts_.threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

template <class F>
bool SteadiedQuotient<F>::idem_in_ideal(const Idem& idem) {
  if (gen_set_.count(idem)) return true;
  const Slice& s = slice(idem, idem, 0);
  Term one{Monomial{}, Perm::identity(idem.strands() + 1)};
  auto it = s.index.find(one);
  if (it == s.index.end()) throw std::logic_error("identity missing from its own cell");
  return s.in_ideal(f_, SparseVec<F>{{it->second, f_.one()}});
}

template <class F>
std::vector<Idem> SteadiedQuotient<F>::survivors(const std::vector<Idem>& candidates) {
  std::vector<CellKey> cells;
  for (const Idem& x : candidates)
    if (!gen_set_.count(x)) cells.emplace_back(x, x, 0);
  precompute(cells);
  std::vector<Idem> out;
  for (const Idem& x : candidates)
    if (!idem_in_ideal(x)) out.push_back(x);
  return out;
}

template <class F>
GradedDims SteadiedQuotient<F>::graded_dims(const std::vector<Idem>& idems, int max_degree) {
  GradedDims g;
  g.field = f_.spec();
  std::vector<Idem> active = survivors(idems);
  std::vector<std::pair<Idem, Idem>> pairs;
  std::optional<int> lo;
  for (const Idem& x : active)
    for (const Idem& z : active) {
      auto m = alg_.min_degree(x, z);
      if (!m) continue;
      pairs.emplace_back(x, z);
      if (!lo || *m < *lo) lo = *m;
    }
  if (!lo) {
    g.complete = true;
    g.computed_to = 0;
    return g;
  }
  std::optional<int> last_nonzero;
  int zeros = 0;
  for (int d = *lo; d <= max_degree; ++d) {
    std::vector<CellKey> cells;
    for (const auto& [x, z] : pairs) cells.emplace_back(x, z, d);
    precompute(cells);
    long long n = 0;
    for (const auto& [x, z] : pairs) n += slice(x, z, d).quotient_dim();
    g.computed_to = d;
    if (n) {
      g.dims[d] = n;
      last_nonzero = d;
      zeros = 0;
    } else if (last_nonzero || d >= 0) {
      ++zeros;
    }
    if (zeros >= opts_.window && d >= 0) {
      g.complete = true;
      break;
    }
  }
  return g;
}

template <class F>
FiniteAlgebra<F> SteadiedQuotient<F>::finite_algebra(const std::vector<Idem>& idems, int max_degree) {
  GradedDims g = graded_dims(idems, max_degree);
  if (!g.complete) throw std::runtime_error("graded dimensions are not complete by degree " + std::to_string(max_degree));
  std::vector<Idem> active = survivors(idems);

  struct Elem {
    Idem x, z;
    int d;
    int col;
  };
  std::vector<Elem> elems;
  std::map<std::tuple<Idem, Idem, int, int>, int> where;
  for (const Idem& x : active)
    for (const Idem& z : active) {
      auto m = alg_.min_degree(x, z);
      if (!m) continue;
      for (int d = *m; d <= g.computed_to; ++d) {
        const Slice& s = slice(x, z, d);
        for (int col : s.reps) {
          where.emplace(std::make_tuple(x, z, d, col), static_cast<int>(elems.size()));
          elems.push_back({x, z, d, col});
        }
      }
    }
  if (static_cast<long long>(elems.size()) != g.total()) throw std::logic_error("basis size differs from graded total");

  FiniteAlgebra<F> A{f_, static_cast<int>(elems.size()), {}, {}, {}, {}, {}};
  Rewriter& rw = alg_.rewriter();
  auto idem_index = [&](const Idem& x) {
    return static_cast<int>(std::find(active.begin(), active.end(), x) - active.begin());
  };
  for (const auto& el : elems) {
    A.tags.push_back({idem_index(el.x), idem_index(el.z), el.d});
    const Slice& s = slice(el.x, el.z, el.d);
    A.names.push_back(to_string(el.x) + ":" + to_string(s.basis[el.col], Labels::of(el.x)));
    A.degrees.push_back(el.d);
  }

  auto to_global = [&](const Idem& x, const Idem& z, int d, const SparseVec<F>& v) {
    const Slice& s = slice(x, z, d);
    auto coords = s.project(f_, v);
    SparseVec<F> out;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (f_.is_zero(coords[j])) continue;
      const auto& val = coords[j];
      auto it = where.find(std::make_tuple(x, z, d, s.reps[j]));
      if (it == where.end()) throw std::runtime_error("product outside the computed degree range");
      out.emplace_back(it->second, val);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };

  A.table.resize(static_cast<std::size_t>(A.n) * A.n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      const Elem& a = elems[i];
      const Elem& b = elems[j];
      if (a.z != b.x) continue;
      const Term& ta = slice(a.x, a.z, a.d).basis[a.col];
      const Term& tb = slice(b.x, b.z, b.d).basis[b.col];
      ZElement prod = rw.multiply_terms(Labels::of(a.x), ta, tb);
      int d = a.d + b.d;
      if (prod.empty()) continue;
      A.table[static_cast<std::size_t>(i) * A.n + j] = to_global(a.x, b.z, d, coordinates(a.x, b.z, d, prod));
    }

  A.unit = A.zero();
  for (const Idem& x : active) {
    ZElement one;
    one.emplace(Term{Monomial{}, Perm::identity(x.strands() + 1)}, 1);
    for (const auto& [k, val] : to_global(x, x, 0, coordinates(x, x, 0, one))) A.unit[k] = f_.add(A.unit[k], val);
  }
  return A;
}

template class SteadiedQuotient<RationalField>;
template class SteadiedQuotient<PrimeField>;

std::vector<Idem> steadying_generators(const KlrwAlgebra& alg, const Pressure& chi) {
  std::vector<Idem> out;
  for (const Idem& x : alg.idempotents())
    if (is_generator_zero(chi, x)) out.push_back(x);
  return out;
}

namespace {

void check_spec(const AlgebraSpec& spec) {
  if (spec.chi.e() != spec.e) throw std::invalid_argument("pressure has the wrong rank");
  if (spec.lambda.level() != 1) throw std::invalid_argument("algebra builds need a level-1 weight (one red strand)");
  if (!spec.field.rational() && !is_prime(spec.field.p)) throw std::invalid_argument("coefficient field must be Q or F_p");
  root_generators(CartanDatum(spec.e), spec.chi, spec.alpha);  // rejects non-generic pressures
}

template <class Fn>
auto with_quotient(const AlgebraSpec& spec, QuotientOptions opts, Fn&& fn) {
  check_spec(spec);
  KlrwAlgebra alg(spec.e, spec.lambda, spec.alpha);
  auto gens = steadying_generators(alg, spec.chi);
  return with_field(spec.field, [&](auto f) {
    SteadiedQuotient<decltype(f)> q(alg, gens, f, opts);
    return fn(q);
  });
}

}  // namespace

bool idem_in_ideal(const AlgebraSpec& spec, const Idem& idem) {
  if (idem.content(spec.e) != spec.alpha) throw std::invalid_argument("idempotent content differs from alpha");
  return with_quotient(spec, {}, [&](auto& q) { return q.idem_in_ideal(idem); });
}

std::vector<Idem> survivors(const AlgebraSpec& spec, QuotientOptions opts) {
  return with_quotient(spec, opts, [&](auto& q) { return q.survivors(q.algebra().idempotents()); });
}

GradedDims quotient_graded_dims(const AlgebraSpec& spec, int max_degree, QuotientOptions opts) {
  return with_quotient(spec, opts, [&](auto& q) { return q.graded_dims(q.algebra().idempotents(), max_degree); });
}

GradedDims truncation_graded_dims(const AlgebraSpec& spec, const std::vector<Idem>& idems, int max_degree,
                                  QuotientOptions opts) {
  for (const Idem& x : idems)
    if (x.content(spec.e) != spec.alpha) throw std::invalid_argument("idempotent content differs from alpha");
  std::vector<Idem> sorted = idems;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return with_quotient(spec, opts, [&](auto& q) { return q.graded_dims(sorted, max_degree); });
}

SimpleCount count_simple_factors(const AlgebraSpec& spec, const std::vector<Idem>& idems, int max_degree,
                                 QuotientOptions opts) {
  return with_quotient(spec, opts, [&](auto& q) {
    const auto& use = idems.empty() ? q.algebra().idempotents() : idems;
    return count_simples(q.finite_algebra(use, max_degree));
  });
}

SimpleCount count_simple_factors_Q(const Pressure& chi, const Weight& lambda, const RootVec& alpha, int max_degree,
                                   QuotientOptions opts) {
  AlgebraSpec spec{chi.e(), lambda, alpha, chi, FieldSpec{}};
  return count_simple_factors(spec, {}, max_degree, opts);
}

Chart build_chart(int e, const Weight& lambda, const RootVec& alpha, const std::vector<Idem>& columns,
                  const std::vector<std::pair<std::string, Pressure>>& rows, QuotientOptions opts) {
  KlrwAlgebra alg(e, lambda, alpha);
  for (const Idem& c : columns)
    if (c.content(e) != alpha) throw std::invalid_argument("chart column " + to_string(c) + " has the wrong content");
  std::map<std::vector<Idem>, std::unique_ptr<SteadiedQuotient<RationalField>>> by_gens;
  Chart chart{columns, {}};
  for (const auto& [label, chi] : rows) {
    AlgebraSpec spec{e, lambda, alpha, chi, FieldSpec{}};
    check_spec(spec);
    auto gens = steadying_generators(alg, chi);
    auto& q = by_gens[gens];
    if (!q) q = std::make_unique<SteadiedQuotient<RationalField>>(alg, gens, RationalField{}, opts);
    auto alive = q->survivors(columns);
    ChartRow row{label, chi, {}};
    for (const Idem& c : columns) row.marks.push_back(std::find(alive.begin(), alive.end(), c) != alive.end());
    chart.rows.push_back(std::move(row));
  }
  return chart;
}

}  // namespace klrw
