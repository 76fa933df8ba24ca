#include <gtest/gtest.h>

#include <klrw/finite_algebra.hpp>

#include <random>

using namespace klrw;

namespace {

template <class F>
using Mat = std::vector<std::vector<typename F::value_type>>;

template <class F>
Mat<F> matmul(const F& f, const Mat<F>& a, const Mat<F>& b) {
  std::size_t n = a.size();
  Mat<F> c(n, std::vector<typename F::value_type>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = f.add(c[i][j], f.mul(a[i][k], b[k][j]));
  return c;
}

// Coordinates of m in the span of `basis`; the span must contain m.
template <class F>
Dense<F> solve(const F& f, const std::vector<Mat<F>>& basis, const Mat<F>& m) {
  std::size_t n = m.size(), k = basis.size();
  DenseMatrix<F> eqs;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Dense<F> row;
      for (const auto& b : basis) row.push_back(b[r][c]);
      row.push_back(f.neg(m[r][c]));
      eqs.push_back(std::move(row));
    }
  for (const auto& v : nullspace(f, eqs, static_cast<int>(k + 1)))
    if (!f.is_zero(v[k])) {
      auto inv = f.inv(v[k]);
      Dense<F> out;
      for (std::size_t i = 0; i < k; ++i) out.push_back(f.mul(v[i], inv));
      return out;
    }
  throw std::logic_error("product left the span");
}

// Structure constants of the subalgebra spanned by `basis` (which must contain a unit).
template <class F>
FiniteAlgebra<F> from_matrices(const F& f, const std::vector<Mat<F>>& basis) {
  int n = static_cast<int>(basis.size());
  FiniteAlgebra<F> A{f, n, {}, {}, {}, {}, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Dense<F> c = solve(f, basis, matmul(f, basis[i], basis[j]));
      SparseVec<F> s;
      for (int k = 0; k < n; ++k)
        if (!f.is_zero(c[k])) s.emplace_back(k, c[k]);
      A.table.push_back(std::move(s));
    }
  std::size_t d = basis[0].size();
  Mat<F> id(d, std::vector<typename F::value_type>(d, f.zero()));
  for (std::size_t i = 0; i < d; ++i) id[i][i] = f.one();
  A.unit = solve(f, basis, id);
  return A;
}

template <class F>
Mat<F> zeros(const F& f, int d) {
  return Mat<F>(d, std::vector<typename F::value_type>(d, f.zero()));
}

template <class F>
Mat<F> unit_at(const F& f, int d, int i, int j) {
  Mat<F> m = zeros(f, d);
  m[i][j] = f.one();
  return m;
}

// Powers 1, c, ..., c^(k-1) of the companion matrix of a monic polynomial (low to high).
template <class F>
std::vector<Mat<F>> truncated_polynomial(const F& f, const std::vector<long long>& monic) {
  int k = static_cast<int>(monic.size()) - 1;
  Mat<F> c = zeros(f, k);
  for (int i = 1; i < k; ++i) c[i][i - 1] = f.one();
  for (int i = 0; i < k; ++i) c[i][k - 1] = f.neg(f.from_int(monic[i]));
  std::vector<Mat<F>> out{zeros(f, k)};
  for (int i = 0; i < k; ++i) out[0][i][i] = f.one();
  for (int i = 1; i < k; ++i) out.push_back(matmul(f, out.back(), c));
  return out;
}

// Block diagonal algebra: full matrix blocks of the given sizes, plus a radical-square-zero
// local block k[x]/x^2 when `local` is set.
template <class F>
std::vector<Mat<F>> block_algebra(const F& f, const std::vector<int>& sizes, bool local) {
  int d = local ? 2 : 0;
  for (int s : sizes) d += s;
  std::vector<Mat<F>> out;
  int at = 0;
  for (int s : sizes) {
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) out.push_back(unit_at(f, d, at + i, at + j));
    at += s;
  }
  if (local) {
    Mat<F> one = unit_at(f, d, at, at);
    one[at + 1][at + 1] = f.one();
    out.push_back(one);
    out.push_back(unit_at(f, d, at, at + 1));
  }
  return out;
}

// Replaces the basis by random invertible combinations.
template <class F>
std::vector<Mat<F>> scramble(const F& f, const std::vector<Mat<F>>& basis, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  int n = static_cast<int>(basis.size());
  while (true) {
    DenseMatrix<F> p(n, Dense<F>(n));
    for (auto& row : p)
      for (auto& x : row) x = f.from_int(coeff(rng));
    if (matrix_rank(f, p, n) != n) continue;
    std::vector<Mat<F>> out;
    for (int i = 0; i < n; ++i) {
      Mat<F> m = zeros(f, static_cast<int>(basis[0].size()));
      for (int j = 0; j < n; ++j)
        for (std::size_t r = 0; r < m.size(); ++r)
          for (std::size_t c = 0; c < m.size(); ++c) m[r][c] = f.add(m[r][c], f.mul(p[i][j], basis[j][r][c]));
      out.push_back(std::move(m));
    }
    return out;
  }
}

template <class F>
void check_random_block_algebras(const F& f, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> nblocks(1, 3), size(1, 2), coin(0, 1);
  for (int it = 0; it < 12; ++it) {
    std::vector<int> sizes;
    for (int b = nblocks(rng); b > 0; --b) sizes.push_back(size(rng));
    bool local = coin(rng);
    auto A = from_matrices(f, scramble(f, block_algebra(f, sizes, local), rng));
    ASSERT_TRUE(A.is_associative_on_basis());
    auto s = count_simples(A);
    EXPECT_EQ(s.count, static_cast<int>(sizes.size()) + local) << f.spec().name();
    EXPECT_EQ(s.dim_radical, local ? 1 : 0);
    EXPECT_TRUE(s.split);
    EXPECT_EQ(s.dim_center, static_cast<int>(sizes.size()) + local);
  }
}

}  // namespace

TEST(FiniteAlgebra, MatrixAlgebraIsSimple) {
  RationalField q;
  std::vector<Mat<RationalField>> basis;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) basis.push_back(unit_at(q, 2, i, j));
  auto s = count_simples(from_matrices(q, basis));
  EXPECT_EQ(s.count, 1);
  EXPECT_TRUE(s.split);
  EXPECT_EQ(s.dim_radical, 0);
  EXPECT_EQ(s.block_dims, std::vector<int>{4});
}

TEST(FiniteAlgebra, UpperTriangular) {
  for (long long p : {2LL, 3LL}) {
    PrimeField f(p);
    auto A = from_matrices(f, {unit_at(f, 2, 0, 0), unit_at(f, 2, 0, 1), unit_at(f, 2, 1, 1)});
    auto s = count_simples(A);
    EXPECT_EQ(s.count, 2);
    EXPECT_EQ(s.dim_radical, 1);
    EXPECT_TRUE(s.split);
  }
  RationalField q;
  auto s = count_simples(from_matrices(q, {unit_at(q, 2, 0, 0), unit_at(q, 2, 0, 1), unit_at(q, 2, 1, 1)}));
  EXPECT_EQ(s.count, 2);
  EXPECT_EQ(s.dim_radical, 1);
}

TEST(FiniteAlgebra, LocalAlgebras) {
  RationalField q;
  auto s = count_simples(from_matrices(q, truncated_polynomial(q, {0, 0, 0, 1})));
  EXPECT_EQ(s.count, 1);
  EXPECT_EQ(s.dim_radical, 2);
  // k[C2] in characteristic 2 is k[x]/(x+1)^2
  PrimeField f2(2);
  auto g = count_simples(from_matrices(f2, truncated_polynomial(f2, {-1, 0, 1})));
  EXPECT_EQ(g.count, 1);
  EXPECT_EQ(g.dim_radical, 1);
  auto g3 = count_simples(from_matrices(PrimeField(3), truncated_polynomial(PrimeField(3), {-1, 0, 1})));
  EXPECT_EQ(g3.count, 2);
  EXPECT_EQ(g3.dim_radical, 0);
}

TEST(FiniteAlgebra, NonSplitFields) {
  RationalField q;
  auto gauss = count_simples(from_matrices(q, truncated_polynomial(q, {1, 0, 1})));
  EXPECT_EQ(gauss.count, 1);
  EXPECT_FALSE(gauss.split);
  auto cyc3 = count_simples(from_matrices(q, truncated_polynomial(q, {-1, 0, 0, 1})));
  EXPECT_EQ(cyc3.count, 2);
  EXPECT_FALSE(cyc3.split);
  EXPECT_TRUE(cyc3.resolved);

  PrimeField f3(3), f5(5), f2(2);
  auto i3 = count_simples(from_matrices(f3, truncated_polynomial(f3, {1, 0, 1})));
  EXPECT_EQ(i3.count, 1);
  EXPECT_FALSE(i3.split);
  auto i5 = count_simples(from_matrices(f5, truncated_polynomial(f5, {1, 0, 1})));
  EXPECT_EQ(i5.count, 2);
  EXPECT_TRUE(i5.split);
  // F2[C3] = F2 + F4
  auto c3 = count_simples(from_matrices(f2, truncated_polynomial(f2, {-1, 0, 0, 1})));
  EXPECT_EQ(c3.count, 2);
  EXPECT_FALSE(c3.split);
  EXPECT_EQ(c3.dim_center, 3);
}

TEST(FiniteAlgebra, RandomBlockAlgebrasOverQ) { check_random_block_algebras(RationalField{}, 1); }

TEST(FiniteAlgebra, RandomBlockAlgebrasOverPrimes) {
  check_random_block_algebras(PrimeField(2), 2);
  check_random_block_algebras(PrimeField(3), 3);
  check_random_block_algebras(PrimeField(7), 4);
}

TEST(FiniteAlgebra, QuotientByRadical) {
  PrimeField f(5);
  auto A = from_matrices(f, block_algebra(f, {2}, true));
  auto rad = radical(A);
  ASSERT_EQ(rad.size(), 1u);
  auto S = quotient_by(A, rad);
  EXPECT_EQ(S.n, 5);
  EXPECT_TRUE(S.is_associative_on_basis());
  EXPECT_EQ(radical(S).size(), 0u);
  EXPECT_EQ(S.mul(S.unit, S.basis_vector(2)), S.basis_vector(2));
  EXPECT_EQ(center(S).size(), 2u);
}

TEST(FiniteAlgebra, ZeroAlgebra) {
  FiniteAlgebra<RationalField> A{RationalField{}, 0, {}, {}, {}, {}, {}};
  auto s = count_simples(A);
  EXPECT_EQ(s.count, 0);
  EXPECT_TRUE(s.split);
}

TEST(FiniteAlgebra, RationalRootsOfRandomProducts) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12), count(0, 4), coin(0, 2);
  for (int it = 0; it < 1000; ++it) {
    std::vector<Rational> poly{1}, want;
    auto times = [&](const std::vector<Rational>& factor) {
      std::vector<Rational> out(poly.size() + factor.size() - 1, Rational(0));
      for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t j = 0; j < factor.size(); ++j) out[i + j] += poly[i] * factor[j];
      poly = out;
    };
    for (int k = count(rng); k > 0; --k) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      times({-r, 1});
      if (std::find(want.begin(), want.end(), r) == want.end()) want.push_back(r);
    }
    if (coin(rng) == 0) times({Rational(2 + den(rng)), 0, 1});  // no real roots
    if (coin(rng) == 0) times({-2, 0, 1});                       // irrational roots
    std::sort(want.begin(), want.end());
    EXPECT_EQ(detail::rational_roots(poly), want) << "case " << it;
  }
  EXPECT_EQ(detail::rational_roots({Rational(-2, 1000000), 0, 1}), std::vector<Rational>{});
  EXPECT_EQ(detail::rational_roots({Rational(-1, 1000000), 1}), std::vector<Rational>{Rational(1, 1000000)});
}
