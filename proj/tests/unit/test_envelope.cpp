#include <gtest/gtest.h>

#include <klrw/envelope.hpp>

#include <random>

#include "envelope_oracle.hpp"

using namespace klrw;

namespace {

const Pressure kChi = Pressure::parse("-3/2,1/2");

std::vector<Rational> heights(const PLFunction& f, int upto) {
  std::vector<Rational> out;
  for (int x = 0; x <= upto; ++x) out.push_back(f(x));
  return out;
}

std::vector<Rational> qs(std::initializer_list<const char*> s) {
  std::vector<Rational> out;
  for (auto* t : s) out.push_back(parse_rational(t));
  return out;
}

std::vector<int> random_word(std::mt19937& rng, int e, int max_len) {
  std::vector<int> w(std::uniform_int_distribution<int>(0, max_len)(rng));
  for (auto& v : w) v = std::uniform_int_distribution<int>(0, e - 1)(rng);
  return w;
}

Pressure random_pressure(std::mt19937& rng, int e) {
  std::vector<Rational> v(e);
  Rational rest = -1;
  for (int i = 1; i < e; ++i) {
    v[i] = Rational(std::uniform_int_distribution<int>(-30, 30)(rng), 8);
    v[i].canonicalize();
    rest -= v[i];
  }
  v[0] = rest;
  return Pressure(v);
}

}  // namespace

TEST(Envelope, PathHeights) {
  EXPECT_EQ(path_function(kChi, {}).points().size(), 1u);
  EXPECT_EQ(heights(path_function(kChi, {0, 1, 0, 0}), 4), qs({"0", "-3/2", "-1", "-5/2", "-4"}));
  EXPECT_EQ(heights(path_function(kChi, {1, 1}), 2), qs({"0", "1/2", "1"}));
}

TEST(Envelope, UpperExamples) {
  auto flat = upper_envelope_f(path_function(kChi, {0, 0, 1, 0}));
  EXPECT_EQ(flat.points().size(), 1u);
  EXPECT_EQ(flat(Rational(7)), 0);
  auto rise = upper_envelope_f(path_function(kChi, {1, 0, 1, 0, 0}));
  EXPECT_EQ(rise.points(), (std::vector<Point>{{0, 0}, {1, Rational(1, 2)}}));
  EXPECT_EQ(rise(Rational(5)), Rational(1, 2));
}

TEST(Envelope, LowerExamples) {
  EXPECT_EQ(lower_envelope_f(path_function(kChi, {1, 1})).points().size(), 1u);
  auto f = lower_envelope_f(path_function(kChi, {0, 1, 0}));
  EXPECT_EQ(f.points(), (std::vector<Point>{{0, 0}, {1, Rational(-3, 2)}, {3, Rational(-5, 2)}}));
  EXPECT_TRUE(f.is_convex());
  EXPECT_TRUE(f.is_weakly_decreasing());
}

TEST(Envelope, UpperIsLeastConcaveIncreasingMajorant) {
  std::mt19937 rng(31);
  for (int t = 0; t < 1000; ++t) {
    int e = 2 + t % 2;
    Pressure chi = random_pressure(rng, e);
    auto word = random_word(rng, e, 6);
    auto path = path_function(chi, word);
    auto up = upper_envelope_f(path);
    int k = static_cast<int>(word.size());
    EXPECT_EQ(heights(up, k), oracle::f_plus(heights(path, k)));
    EXPECT_TRUE(up.is_concave());
    EXPECT_TRUE(up.is_weakly_increasing());
    EXPECT_TRUE(pointwise_leq(path, up));
  }
}

TEST(Envelope, LowerMirrorsUpper) {
  std::mt19937 rng(32);
  for (int t = 0; t < 1000; ++t) {
    int e = 2 + t % 2;
    Pressure chi = random_pressure(rng, e);
    auto word = random_word(rng, e, 6);
    auto path = path_function(chi, word);
    auto low = lower_envelope_f(path);
    int k = static_cast<int>(word.size());
    auto neg = heights(path, k);
    for (auto& v : neg) v = -v;
    auto want = oracle::f_plus(neg);
    for (auto& v : want) v = -v;
    EXPECT_EQ(heights(low, k), want);
    EXPECT_TRUE(low.is_convex());
    EXPECT_TRUE(low.is_weakly_decreasing());
    EXPECT_TRUE(pointwise_leq(low, path));
  }
}

TEST(Envelope, GEnvelopesAreHullsWithChordTail) {
  std::mt19937 rng(33);
  for (int t = 0; t < 1000; ++t) {
    int e = 2 + t % 2;
    Pressure chi = random_pressure(rng, e);
    auto word = random_word(rng, e, 6);
    RootVec total = RootVec::zero(e);
    for (int i : word) total[i] += 1;
    auto path = path_function(chi, word);
    auto [gp, gm] = envelopes_g(path, total, chi);
    int k = static_cast<int>(word.size());
    auto v = heights(path, k);
    auto neg = v;
    for (auto& x : neg) x = -x;
    // A rational grid between the integers catches any breakpoint off the lattice.
    for (int x = 0; x <= k; ++x) {
      EXPECT_EQ(gp(x), oracle::hull_at(v, x));
      EXPECT_EQ(gm(x), -oracle::hull_at(neg, x));
      if (x < k) {
        Rational mid(2 * x + 1, 2);
        EXPECT_GE(gp(mid), path(mid));
        EXPECT_LE(gm(mid), path(mid));
      }
    }
    // Concave on [0, k]; the chord tail need not continue the last slope.
    EXPECT_TRUE(PLFunction(gp.points(), Rational(-1000)).is_concave());
    EXPECT_TRUE(PLFunction(gm.points(), Rational(1000)).is_convex());
    if (k > 0) {
      Rational far(k + 3);
      EXPECT_EQ(gp(far), chi.eval(total) / k * far);
      EXPECT_EQ(gm(far), chi.eval(total) / k * far);
    }
  }
}

TEST(Envelope, LinearPathIsItsOwnHull) {
  auto path = path_function(kChi, {1, 1, 1});
  auto [gp, gm] = envelopes_g(path, RootVec({0, 3}), kChi);
  for (int x = 0; x <= 3; ++x) {
    EXPECT_EQ(gp(x), path(x));
    EXPECT_EQ(gm(x), path(x));
  }
}

TEST(Envelope, PointwiseComparisonUsesTails) {
  PLFunction a({{0, 0}, {2, 1}}, 0), b({{0, 0}, {1, 1}}, Rational(-1, 4));
  EXPECT_FALSE(pointwise_leq(a, b));
  EXPECT_TRUE(pointwise_leq(PLFunction({{0, 0}}, -1), PLFunction({{0, 0}}, 0)));
  EXPECT_THROW(PLFunction({{1, 0}, {1, 2}}), std::invalid_argument);
}
