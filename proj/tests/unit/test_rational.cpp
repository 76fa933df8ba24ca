#include <gtest/gtest.h>

#include <klrw/rational.hpp>

#include <stdexcept>

using namespace klrw;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-7/2"), Rational(-7, 2));
  EXPECT_EQ(parse_rational(" 4/6 "), Rational(2, 3));
  EXPECT_EQ(parse_rational("+1/2"), Rational(1, 2));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/-2", "--1", "1/2/3"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, ListRoundTrip) {
  auto v = parse_rational_list("1/2,-3/2,0");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(join_rationals(v), "1/2,-3/2,0");
  EXPECT_THROW(parse_rational_list("1/2,,3"), std::invalid_argument);
}
