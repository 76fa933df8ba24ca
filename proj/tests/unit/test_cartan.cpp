#include <gtest/gtest.h>

#include <klrw/cartan.hpp>

#include <functional>
#include <random>
#include <set>

#include "partitions.hpp"

using namespace klrw;

namespace {

// Positive real roots built directly as (finite root) + n delta.
std::set<RootVec> real_roots_oracle(int e, int max_height) {
  std::set<RootVec> out;
  RootVec d = RootVec::delta(e);
  for (int a = 1; a < e; ++a)
    for (int b = a; b < e; ++b) {
      RootVec bar = RootVec::zero(e);
      for (int i = a; i <= b; ++i) bar[i] = 1;
      for (int n = 0; n * e <= max_height + e; ++n) {
        RootVec pos = bar + n * d;
        if (pos.height() <= max_height) out.insert(pos);
        if (n >= 1) {
          RootVec neg = n * d - bar;
          if (neg.height() <= max_height) out.insert(neg);
        }
      }
    }
  return out;
}

void for_each_box(int e, int hi, const std::function<void(const RootVec&)>& f) {
  RootVec v = RootVec::zero(e);
  std::function<void(int)> rec = [&](int i) {
    if (i == e) return f(v);
    for (int x = 0; x <= hi; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

TEST(Cartan, MatrixEntries) {
  CartanDatum c2(2), c3(3);
  EXPECT_EQ(c2.entry(0, 1), -2);
  EXPECT_EQ(c2.entry(0, 0), 2);
  EXPECT_EQ(c3.entry(0, 2), -1);
  EXPECT_EQ(c3.entry(1, 1), 2);
  CartanDatum f3(3, CartanKind::Finite);
  EXPECT_EQ(f3.entry(0, 2), 0);
  EXPECT_EQ(f3.entry(0, 1), -1);
}

TEST(Cartan, Pairings) {
  CartanDatum cd(2);
  EXPECT_EQ(cd.pair_coroot(RootVec::simple(2, 0), RootVec::simple(2, 1)), -2);
  EXPECT_EQ(cd.pair_coroot(LatticeWeight{{1, 0}, RootVec::zero(2)}, RootVec::simple(2, 0)), 1);
  EXPECT_EQ(cd.pair_coroot(RootVec({2, 2}), RootVec::simple(2, 0)), 0);
  EXPECT_THROW(cd.pair_coroot(RootVec::simple(2, 0), RootVec({1, 1})), std::invalid_argument);
}

TEST(Cartan, RootClassificationExamples) {
  EXPECT_EQ(CartanDatum(2).classify_positive_root(RootVec({1, 2})), RootKind::Real);
  EXPECT_EQ(CartanDatum(2).classify_positive_root(RootVec({2, 2})), RootKind::Imaginary);
  EXPECT_EQ(CartanDatum(3).classify_positive_root(RootVec({1, 2, 0})), RootKind::NotARoot);
  EXPECT_EQ(CartanDatum(3).classify_positive_root(RootVec::zero(3)), RootKind::NotARoot);
}

TEST(Cartan, RealRootsMatchFiniteRootShifts) {
  for (int e : {2, 3, 4}) {
    CartanDatum cd(e);
    auto expected = real_roots_oracle(e, 3 * e);
    for_each_box(e, 3, [&](const RootVec& v) {
      bool real = expected.count(v) > 0;
      bool imag = !v.is_zero() && std::all_of(v.coeffs().begin(), v.coeffs().end(), [&](int x) { return x == v[0]; });
      RootKind want = real ? RootKind::Real : imag ? RootKind::Imaginary : RootKind::NotARoot;
      EXPECT_EQ(cd.classify_positive_root(v), want) << to_string(v);
      if (real) EXPECT_EQ(cd.form(v, v), 2);
      if (imag) EXPECT_EQ(cd.form(v, v), 0);
    });
    std::set<RootVec> listed;
    for (const auto& r : cd.positive_roots(2 * e))
      if (cd.classify_positive_root(r) == RootKind::Real) listed.insert(r);
    std::set<RootVec> capped;
    for (const auto& r : expected)
      if (r.height() <= 2 * e) capped.insert(r);
    EXPECT_EQ(listed, capped);
  }
}

TEST(Cartan, WeightMembershipExamples) {
  CartanDatum cd(2);
  Weight l0 = Weight::fundamental(2, 0);
  EXPECT_TRUE(cd.is_weight_of(l0, LatticeWeight::minus(l0, RootVec::zero(2))));
  EXPECT_FALSE(cd.is_weight_of(l0, LatticeWeight{{1, 0}, RootVec::simple(2, 0)}));
  EXPECT_TRUE(cd.is_weight_of(l0, LatticeWeight::minus(l0, RootVec::delta(2))));
}

TEST(Cartan, WeightMembershipMatchesPartitionContents) {
  for (int e : {2, 3}) {
    CartanDatum cd(e);
    Weight l0 = Weight::fundamental(e, 0);
    auto contents = oracle::basic_rep_contents(e, 8);
    for (int n = 0; n <= 8; ++n) {
      for_each_box(e, n, [&](const RootVec& a) {
        if (a.height() != n) return;
        EXPECT_EQ(cd.is_weight_of(l0, LatticeWeight::minus(l0, a)), contents.count(a) > 0) << to_string(a);
      });
    }
  }
}

TEST(Cartan, WeightMembershipIsWeylInvariant) {
  std::mt19937 rng(11);
  for (int e : {2, 3}) {
    CartanDatum cd(e);
    Weight l0 = Weight::fundamental(e, 0);
    std::uniform_int_distribution<int> coeff(0, 4), letter(0, e - 1);
    for (int t = 0; t < 1000; ++t) {
      RootVec a = RootVec::zero(e);
      for (int i = 0; i < e; ++i) a[i] = coeff(rng);
      LatticeWeight mu = LatticeWeight::minus(l0, a);
      EXPECT_EQ(cd.is_weight_of(l0, mu), cd.is_weight_of(l0, cd.reflect(mu, letter(rng))));
    }
  }
}

TEST(Cartan, ReflectionsPermuteRealRoots) {
  for (int e : {2, 3}) {
    CartanDatum cd(e);
    for (const auto& r : cd.positive_roots(3 * e)) {
      if (cd.classify_positive_root(r) != RootKind::Real) continue;
      for (int i = 0; i < e; ++i) EXPECT_TRUE(cd.is_real_root(cd.reflect(r, i))) << to_string(r);
    }
  }
}

TEST(Cartan, RejectsBadInput) {
  EXPECT_THROW(CartanDatum(1), std::invalid_argument);
  CartanDatum cd(2);
  EXPECT_THROW(cd.check_rootvec(RootVec({1, 2, 3})), std::invalid_argument);
  EXPECT_THROW(cd.is_weight_of(Weight{{0, 0}}, LatticeWeight{{0, 0}, RootVec::zero(2)}), std::invalid_argument);
}
