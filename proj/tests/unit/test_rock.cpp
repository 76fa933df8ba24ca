#include <gtest/gtest.h>

#include <klrw/rock.hpp>

#include <functional>
#include <set>

using namespace klrw;

namespace {

// Degrees of a basis of the zigzag algebra of A_m: m vertices, 2(m-1) arrows, m loops.
std::vector<int> zigzag_degrees(int m) {
  std::vector<int> out(m, 0);
  out.insert(out.end(), 2 * (m - 1), 2);
  out.insert(out.end(), m, 4);
  return out;
}

std::map<int, long long> wreath_by_enumeration(int e, int d) {
  auto z = zigzag_degrees(e - 1);
  long long fact = 1;
  for (int k = 2; k <= d; ++k) fact *= k;
  std::map<int, long long> out;
  std::function<void(int, int)> rec = [&](int k, int deg) {
    if (k == d) {
      out[deg] += fact;
      return;
    }
    for (int x : z) rec(k + 1, deg + x);
  };
  rec(0, 0);
  return out;
}

long long multinomial(const RootVec& a) {
  long long r = 1;
  int n = 0;
  for (int c : a.coeffs())
    for (int k = 1; k <= c; ++k) r = r * ++n / k;
  return r;
}

}  // namespace

TEST(Rock, PressureValues) {
  EXPECT_EQ(rock_pressure(3, 1), standard_pressure(3));
  Pressure p = rock_pressure(2, 2);
  EXPECT_EQ(p[0], Rational(1, 2));
  EXPECT_EQ(p[1], Rational(-3, 2));
  for (int e = 2; e <= 5; ++e)
    for (int d = 1; d <= 4; ++d) {
      Pressure r = rock_pressure(e, d);
      EXPECT_EQ(r.eval(RootVec::delta(e)), -1);
      EXPECT_TRUE(in_rock_chamber(r, d));
      EXPECT_FALSE(in_rock_chamber(r, d + 1));
    }
  EXPECT_THROW(rock_pressure(1, 1), std::invalid_argument);
  EXPECT_THROW(rock_pressure(3, 0), std::invalid_argument);
}

TEST(Rock, GGWords) {
  EXPECT_EQ(gg_word(0, 3), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(gg_word(1, 3), (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(gg_word(2, 3), (std::vector<int>{2, 1, 0}));
  for (int e = 2; e <= 6; ++e)
    for (int i = 0; i < e; ++i) {
      auto w = gg_word(i, e);
      EXPECT_EQ(std::set<int>(w.begin(), w.end()).size(), static_cast<std::size_t>(e));
      EXPECT_EQ(w.front(), i);
    }
  EXPECT_THROW(gg_word(3, 3), std::invalid_argument);
}

TEST(Rock, DeltaIdempotents) {
  for (int e = 2; e <= 4; ++e)
    for (int d = 0; d <= 3; ++d) {
      auto ids = delta_idempotents(e, d);
      long long want = 1;
      for (int k = 0; k < d; ++k) want *= e;
      EXPECT_EQ(static_cast<long long>(ids.size()), want);
      std::set<Idem> distinct(ids.begin(), ids.end());
      EXPECT_EQ(distinct.size(), ids.size());
      for (const Idem& x : ids) {
        EXPECT_TRUE(is_eplus(x));
        EXPECT_EQ(x.content(e), d * RootVec::delta(e));
      }
    }
  auto ids = delta_idempotents(3, 2);
  EXPECT_EQ(to_string(ids[0]), "R210210");
  EXPECT_EQ(to_string(ids[1]), "R021210");
}

TEST(Rock, EplusIdempotents) {
  for (int e = 2; e <= 3; ++e)
    for (int d = 1; d <= 2; ++d) {
      RootVec alpha = d * RootVec::delta(e);
      auto ids = eplus_idempotents(e, Weight::fundamental(e, 0), alpha);
      EXPECT_EQ(static_cast<long long>(ids.size()), multinomial(alpha));
      for (const Idem& x : ids) EXPECT_TRUE(is_eplus(x));
      for (const Idem& x : delta_idempotents(e, d)) EXPECT_NE(std::find(ids.begin(), ids.end(), x), ids.end());
    }
  EXPECT_FALSE(is_eplus(parse_idem("0R1")));
}

TEST(Rock, WreathReference) {
  auto g = wreath_reference_dims(3, 1, 8);
  EXPECT_EQ(g.dims, (std::map<int, long long>{{0, 2}, {2, 2}, {4, 2}}));
  EXPECT_TRUE(g.complete);
  EXPECT_EQ(wreath_reference_dims(3, 2, 16).total(), 72);
  for (int e = 3; e <= 5; ++e)
    for (int d = 1; d <= 3; ++d) EXPECT_EQ(wreath_reference_dims(e, d, 100).dims, wreath_by_enumeration(e, d));
  EXPECT_FALSE(wreath_reference_dims(3, 2, 4).complete);
  EXPECT_THROW(wreath_reference_dims(2, 1, 8), std::invalid_argument);
}
