#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "klrw/linalg.hpp"

namespace klrw {

// Associative unital algebra given by structure constants in a fixed basis.
template <class F>
struct FiniteAlgebra {
  F field;
  int n = 0;
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<SparseVec<F>> table;  // table[i * n + j] = b_i b_j
  Dense<F> unit;
  // Optional (source idempotent, target idempotent, degree) per basis element. Products
  // respect them, which lets the radical and quotients be computed cell by cell.
  std::vector<std::array<int, 3>> tags;

  const SparseVec<F>& product(int i, int j) const { return table[static_cast<std::size_t>(i) * n + j]; }

  Dense<F> zero() const { return Dense<F>(n, field.zero()); }
  Dense<F> basis_vector(int i) const {
    Dense<F> v = zero();
    v[i] = field.one();
    return v;
  }

  Dense<F> mul(const Dense<F>& a, const Dense<F>& b) const {
    Dense<F> out = zero();
    std::vector<int> nb;
    for (int j = 0; j < n; ++j)
      if (!field.is_zero(b[j])) nb.push_back(j);
    for (int i = 0; i < n; ++i) {
      if (field.is_zero(a[i])) continue;
      for (int j : nb) {
        auto c = field.mul(a[i], b[j]);
        for (const auto& [k, x] : product(i, j)) out[k] = field.add(out[k], field.mul(c, x));
      }
    }
    return out;
  }

  // Matrix of x -> a x in the basis; column j is a b_j.
  DenseMatrix<F> left_matrix(const Dense<F>& a) const {
    DenseMatrix<F> m(n, zero());
    for (int j = 0; j < n; ++j) {
      Dense<F> col = mul(a, basis_vector(j));
      for (int k = 0; k < n; ++k) m[k][j] = col[k];
    }
    return m;
  }

  bool is_associative_on_basis() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          auto ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
          if (mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek))) return false;
        }
    return true;
  }
};

namespace detail {

template <class F>
typename F::value_type trace_of(const FiniteAlgebra<F>& A, const Dense<F>& a) {
  auto t = A.field.zero();
  for (int j = 0; j < A.n; ++j) {
    Dense<F> col = A.mul(a, A.basis_vector(j));
    t = A.field.add(t, col[j]);
  }
  return t;
}

// Rows of m transposed.
template <class F>
DenseMatrix<F> transpose(const F& f, const DenseMatrix<F>& m, int rows, int cols) {
  DenseMatrix<F> t(cols, Dense<F>(rows, f.zero()));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

// Combination sum_c x_c basis[c] for each x in coeffs.
template <class F>
DenseMatrix<F> combine(const F& f, const DenseMatrix<F>& basis, const DenseMatrix<F>& coeffs, int n) {
  DenseMatrix<F> out;
  for (const auto& x : coeffs) {
    Dense<F> v(n, f.zero());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      if (f.is_zero(x[c])) continue;
      for (int k = 0; k < n; ++k) v[k] = f.add(v[k], f.mul(x[c], basis[c][k]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline long long mod_pow_trace(std::vector<std::vector<long long>> m, long long power, long long q) {
  int n = static_cast<int>(m.size());
  auto mul = [&](const std::vector<std::vector<long long>>& a, const std::vector<std::vector<long long>>& b) {
    std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (!a[i][k]) continue;
        for (int j = 0; j < n; ++j) c[i][j] = static_cast<long long>((c[i][j] + (__int128)a[i][k] * b[k][j]) % q);
      }
    return c;
  };
  std::vector<std::vector<long long>> r(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) r[i][i] = 1 % q;
  while (power) {
    if (power & 1) r = mul(r, m);
    m = mul(m, m);
    power >>= 1;
  }
  long long t = 0;
  for (int i = 0; i < n; ++i) t = (t + r[i][i]) % q;
  return t;
}

}  // namespace detail

namespace detail {

// Basis indices grouped by tag; a single group when the algebra carries no tags.
template <class F>
std::map<std::array<int, 3>, std::vector<int>> cells_of(const FiniteAlgebra<F>& A) {
  std::map<std::array<int, 3>, std::vector<int>> cells;
  for (int i = 0; i < A.n; ++i) cells[A.tags.empty() ? std::array<int, 3>{0, 0, 0} : A.tags[i]].push_back(i);
  return cells;
}

// Characteristic 0: kernel of the trace form tau(ab) = tr(L_{ab}), cell by cell. The
// form pairs the cell (x, z, d) only with (z, x, -d).
template <class F>
DenseMatrix<F> radical_trace_form(const FiniteAlgebra<F>& A) {
  const F& f = A.field;
  const int n = A.n;
  const bool tagged = !A.tags.empty();
  std::vector<typename F::value_type> t(n, f.zero());
  for (int k = 0; k < n; ++k) {
    if (tagged && (A.tags[k][0] != A.tags[k][1] || A.tags[k][2] != 0)) continue;
    for (int j = 0; j < n; ++j)
      for (const auto& [idx, x] : A.product(k, j))
        if (idx == j) t[k] = f.add(t[k], x);
  }
  auto tau = [&](int i, int j) {
    auto acc = f.zero();
    for (const auto& [k, x] : A.product(i, j)) acc = f.add(acc, f.mul(x, t[k]));
    return acc;
  };
  auto cells = cells_of(A);
  DenseMatrix<F> out;
  for (const auto& [tag, members] : cells) {
    std::array<int, 3> partner = tagged ? std::array<int, 3>{tag[1], tag[0], -tag[2]} : tag;
    auto it = cells.find(partner);
    const int m = static_cast<int>(members.size());
    DenseMatrix<F> eqs;  // one row per partner element, unknowns are the cell coordinates
    if (it != cells.end())
      for (int j : it->second) {
        Dense<F> row(m, f.zero());
        for (int a = 0; a < m; ++a) row[a] = tau(members[a], j);
        eqs.push_back(std::move(row));
      }
    DenseMatrix<F> ker;
    if (eqs.empty()) {
      for (int a = 0; a < m; ++a) {
        Dense<F> v(m, f.zero());
        v[a] = f.one();
        ker.push_back(std::move(v));
      }
    } else {
      ker = nullspace(f, eqs, m);
    }
    for (const auto& v : ker) {
      Dense<F> full(n, f.zero());
      for (int a = 0; a < m; ++a) full[members[a]] = v[a];
      out.push_back(std::move(full));
    }
  }
  return out;
}

// Characteristic p: the iterated trace conditions on integer lifts of the left regular
// representation, on a dense basis.
template <class F>
DenseMatrix<F> radical_modular(const FiniteAlgebra<F>& A) {
  const F& f = A.field;
  const int n = A.n;
  std::vector<typename F::value_type> t(n);
  for (int k = 0; k < n; ++k) t[k] = trace_of(A, A.basis_vector(k));
  auto tau = [&](const Dense<F>& a, int j) {
    Dense<F> ab = A.mul(a, A.basis_vector(j));
    auto s = f.zero();
    for (int k = 0; k < n; ++k) s = f.add(s, f.mul(ab[k], t[k]));
    return s;
  };
  DenseMatrix<F> ideal;
  for (int i = 0; i < n; ++i) ideal.push_back(A.basis_vector(i));
  const long long p = f.characteristic();
  int levels = 0;
  for (long long pw = p; pw <= n; pw *= p) ++levels;
  for (int level = 0; level <= levels && !ideal.empty(); ++level) {
    long long pw = 1;
    for (int s = 0; s < level; ++s) pw *= p;
    const long long q = pw * p;
    DenseMatrix<F> g(ideal.size(), Dense<F>(n, f.zero()));
    for (std::size_t c = 0; c < ideal.size(); ++c)
      for (int j = 0; j < n; ++j) {
        if (level == 0) {
          g[c][j] = tau(ideal[c], j);
          continue;
        }
        if constexpr (std::is_same_v<typename F::value_type, std::int64_t>) {
          DenseMatrix<F> m = A.left_matrix(A.mul(ideal[c], A.basis_vector(j)));
          std::vector<std::vector<long long>> lifted(n, std::vector<long long>(n));
          for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) lifted[r][s] = m[r][s];
          long long tr = mod_pow_trace(lifted, pw, q);
          if (tr % pw) throw std::logic_error("radical: trace lift not divisible");
          g[c][j] = f.from_int(tr / pw);
        }
      }
    DenseMatrix<F> kernel = nullspace(f, transpose(f, g, static_cast<int>(ideal.size()), n),
                                      static_cast<int>(ideal.size()));
    ideal = combine(f, ideal, kernel, n);
  }
  return ideal;
}

}  // namespace detail

// Jacobson radical as a list of basis vectors.
template <class F>
DenseMatrix<F> radical(const FiniteAlgebra<F>& A) {
  if (A.n == 0) return {};
  if (A.field.characteristic() == 0) return detail::radical_trace_form(A);
  return detail::radical_modular(A);
}

// A / I for a two-sided ideal I spanned by `ideal`. When every spanning vector lives in
// one tagged cell the reduction is done cell by cell.
template <class F>
FiniteAlgebra<F> quotient_by(const FiniteAlgebra<F>& A, const DenseMatrix<F>& ideal) {
  const F& f = A.field;
  std::map<std::array<int, 3>, std::vector<int>> cells = detail::cells_of(A);
  std::vector<std::array<int, 3>> tag_of(A.n);
  bool cellwise = !A.tags.empty();
  for (const auto& [tag, members] : cells)
    for (int i : members) tag_of[i] = tag;
  std::map<std::array<int, 3>, std::vector<Dense<F>>> by_cell;
  for (const auto& v : ideal) {
    std::optional<std::array<int, 3>> where;
    for (int i = 0; i < A.n && cellwise; ++i) {
      if (f.is_zero(v[i])) continue;
      if (where && *where != tag_of[i]) cellwise = false;
      where = tag_of[i];
    }
    if (where) by_cell[*where].push_back(v);
  }
  if (!cellwise) {
    cells = {{std::array<int, 3>{0, 0, 0}, {}}};
    for (int i = 0; i < A.n; ++i) cells.begin()->second.push_back(i);
    for (auto& t : tag_of) t = {0, 0, 0};
    by_cell.clear();
    by_cell[{0, 0, 0}] = ideal;
  }

  struct Local {
    std::vector<int> members;
    std::map<int, int> pos;
    Echelon<F> ech;
  };
  std::map<std::array<int, 3>, Local> local;
  std::vector<int> keep;
  for (const auto& [tag, members] : cells) {
    Local L{members, {}, Echelon<F>(f, static_cast<int>(members.size()))};
    for (std::size_t a = 0; a < members.size(); ++a) L.pos[members[a]] = static_cast<int>(a);
    for (const auto& v : by_cell[tag]) {
      Dense<F> lv(members.size(), f.zero());
      for (std::size_t a = 0; a < members.size(); ++a) lv[a] = v[members[a]];
      L.ech.insert_dense(std::move(lv));
    }
    for (int c : L.ech.free_columns()) keep.push_back(members[c]);
    local.emplace(tag, std::move(L));
  }
  std::sort(keep.begin(), keep.end());
  std::vector<int> slot(A.n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) slot[keep[i]] = static_cast<int>(i);

  auto project = [&](const SparseVec<F>& v) {
    std::map<std::array<int, 3>, Dense<F>> parts;
    for (const auto& [i, x] : v) {
      auto& L = local.at(tag_of[i]);
      auto& d = parts[tag_of[i]];
      if (d.empty()) d.assign(L.members.size(), f.zero());
      d[L.pos.at(i)] = f.add(d[L.pos.at(i)], x);
    }
    SparseVec<F> out;
    for (auto& [tag, d] : parts) {
      auto& L = local.at(tag);
      Dense<F> r = L.ech.reduce_dense(std::move(d));
      for (std::size_t a = 0; a < r.size(); ++a)
        if (!f.is_zero(r[a])) out.emplace_back(slot[L.members[a]], r[a]);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  };

  FiniteAlgebra<F> Q{f, static_cast<int>(keep.size()), {}, {}, {}, {}, {}};
  for (int k : keep) {
    Q.names.push_back(A.names.empty() ? std::to_string(k) : A.names[k]);
    Q.degrees.push_back(A.degrees.empty() ? 0 : A.degrees[k]);
    if (!A.tags.empty()) Q.tags.push_back(A.tags[k]);
  }
  for (int i : keep)
    for (int j : keep) Q.table.push_back(project(A.product(i, j)));
  SparseVec<F> u;
  for (int i = 0; i < A.n; ++i)
    if (!f.is_zero(A.unit[i])) u.emplace_back(i, A.unit[i]);
  Q.unit = Q.zero();
  for (const auto& [i, x] : project(u)) Q.unit[i] = x;
  return Q;
}

template <class F>
DenseMatrix<F> center(const FiniteAlgebra<F>& A) {
  const F& f = A.field;
  const int n = A.n;
  DenseMatrix<F> eqs;
  for (int j = 0; j < n; ++j) {
    // sum_i x_i (b_i b_j - b_j b_i) = 0, one equation per output coordinate.
    DenseMatrix<F> block(n, Dense<F>(n, f.zero()));
    for (int i = 0; i < n; ++i) {
      for (const auto& [k, x] : A.product(i, j)) block[k][i] = f.add(block[k][i], x);
      for (const auto& [k, x] : A.product(j, i)) block[k][i] = f.sub(block[k][i], x);
    }
    for (auto& row : block) eqs.push_back(std::move(row));
  }
  if (eqs.empty()) return {};
  return nullspace(f, eqs, n);
}

struct SimpleCount {
  int count = 0;
  bool split = false;
  bool resolved = true;
  int dim_algebra = 0;
  int dim_radical = 0;
  int dim_semisimple = 0;
  int dim_center = 0;
  std::vector<int> block_dims;
  std::string field;
  std::string note;
};

namespace detail {

// Monic minimal polynomial of z (coefficients low to high) via powers of z.
template <class F>
std::vector<typename F::value_type> minimal_polynomial(const FiniteAlgebra<F>& A, const Dense<F>& z) {
  const F& f = A.field;
  DenseMatrix<F> powers{A.unit};
  while (true) {
    powers.push_back(A.mul(powers.back(), z));
    int k = static_cast<int>(powers.size());
    DenseMatrix<F> cols = transpose(f, powers, k, A.n);
    DenseMatrix<F> ker = nullspace(f, cols, k);
    if (ker.empty()) continue;
    auto c = ker.front();
    auto inv = f.inv(c[k - 1]);
    for (auto& x : c) x = f.mul(x, inv);
    return c;
  }
}

template <class F>
Dense<F> poly_eval_elem(const FiniteAlgebra<F>& A, const Dense<F>& z, const std::vector<Rational>& roots_to_kill,
                        const Rational& root) {
  // prod over other roots r of (z - r) / (root - r)
  const F& f = A.field;
  Dense<F> acc = A.unit;
  for (const auto& r : roots_to_kill) {
    if (r == root) continue;
    Dense<F> shifted = z;
    for (int k = 0; k < A.n; ++k) shifted[k] = f.sub(shifted[k], f.mul(f.from_rational(r), A.unit[k]));
    acc = A.mul(acc, shifted);
    auto inv = f.inv(f.from_rational(Rational(root - r)));
    for (auto& x : acc) x = f.mul(x, inv);
  }
  return acc;
}

// Distinct rational roots of a monic rational polynomial.
std::vector<Rational> rational_roots(const std::vector<Rational>& monic);

}  // namespace detail

// Count of simple factors of A / rad A. Over F_p the count is exact (Frobenius fixed
// points on the centre). Over Q a random central element's minimal polynomial decides
// whether the centre splits.
template <class F>
SimpleCount count_simples(const FiniteAlgebra<F>& A, unsigned seed = 12345) {
  const F& f = A.field;
  SimpleCount out;
  out.field = f.spec().name();
  out.dim_algebra = A.n;
  DenseMatrix<F> rad = radical(A);
  out.dim_radical = static_cast<int>(rad.size());
  FiniteAlgebra<F> S = quotient_by(A, rad);
  out.dim_semisimple = S.n;
  DenseMatrix<F> Z = center(S);
  out.dim_center = static_cast<int>(Z.size());
  if (S.n == 0) {
    out.split = true;
    return out;
  }

  if (f.characteristic() > 0) {
    const long long p = f.characteristic();
    // Frobenius z -> z^p on the centre, minus identity, in centre coordinates.
    DenseMatrix<F> images;
    for (const auto& z : Z) {
      Dense<F> acc = S.unit, base = z;
      for (long long e = p; e; e >>= 1) {
        if (e & 1) acc = S.mul(acc, base);
        base = S.mul(base, base);
      }
      for (int k = 0; k < S.n; ++k) acc[k] = f.sub(acc[k], z[k]);
      images.push_back(std::move(acc));
    }
    // Kernel of the map sum x_c Z[c] -> sum x_c images[c].
    DenseMatrix<F> m = detail::transpose(f, images, static_cast<int>(Z.size()), S.n);
    out.count = static_cast<int>(nullspace(f, m, static_cast<int>(Z.size())).size());
    out.split = out.count == out.dim_center;
    out.note = out.split ? "centre splits over " + out.field : "centre has non-prime-field components";
    return out;
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<typename F::value_type> mp;
    Dense<F> z;
    for (int attempt = 0; attempt < 8; ++attempt) {
      z = S.zero();
      for (const auto& basis : Z) {
        auto c = f.from_int(coeff(rng));
        for (int k = 0; k < S.n; ++k) z[k] = f.add(z[k], f.mul(c, basis[k]));
      }
      mp = detail::minimal_polynomial(S, z);
      if (static_cast<int>(mp.size()) - 1 == out.dim_center) break;
    }
    int degree = static_cast<int>(mp.size()) - 1;
    std::vector<Rational> coeffs;
    for (const auto& c : mp) coeffs.push_back(f.to_rational(c));
    std::vector<Rational> roots = detail::rational_roots(coeffs);
    int r = static_cast<int>(roots.size());
    if (degree != out.dim_center) {
      out.resolved = false;
      out.count = out.dim_center;
      out.note = "no primitive central element found";
      return out;
    }
    if (r == degree) {
      out.count = r;
      bool squares = true;
      for (const auto& root : roots) {
        Dense<F> e = detail::poly_eval_elem(S, z, roots, root);
        int dim = 0;
        {
          Echelon<F> ech(f, S.n);
          for (int j = 0; j < S.n; ++j) ech.insert_dense(S.mul(e, S.basis_vector(j)));
          dim = ech.rank();
        }
        out.block_dims.push_back(dim);
        int s = 0;
        while (s * s < dim) ++s;
        if (s * s != dim) squares = false;
      }
      out.split = squares;
      out.note = squares ? "centre splits over Q; block dimensions are squares"
                         : "centre splits over Q but some block is not a full matrix algebra";
      return out;
    }
    int rest = degree - r;
    out.split = false;
    out.count = r + 1;
    out.resolved = rest <= 3;
    out.note = out.resolved ? "centre does not split over Q" : "centre does not split over Q; count is a lower bound";
    return out;
  }
}

}  // namespace klrw
