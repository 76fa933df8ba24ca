#include <gtest/gtest.h>

#include <klrw/idempotent.hpp>

#include <random>
#include <set>

using namespace klrw;

TEST(Idempotent, ReadsOutsideIn) {
  Idem x = parse_idem("11R0100");
  EXPECT_EQ(x.left, (std::vector<int>{1, 1}));
  EXPECT_EQ(x.right, (std::vector<int>{0, 0, 1, 0}));
  EXPECT_EQ(x.word(), (std::vector<int>{1, 1, 0, 1, 0, 0}));
  EXPECT_EQ(x.red_index(), 2);
  EXPECT_EQ(x.content(2), RootVec({3, 3}));
  EXPECT_EQ(to_string(x), "11R0100");
}

TEST(Idempotent, ParsesAlternativeSpellings) {
  EXPECT_EQ(parse_idem("R|0,1"), parse_idem("R01"));
  EXPECT_EQ(parse_idem("1,R,10"), Idem::from_slots({1, kRed, 10}));
  EXPECT_EQ(to_string(Idem::from_slots({1, kRed, 10})), "1,R,10");
  EXPECT_EQ(to_string(parse_idem("R")), "R");
  EXPECT_THROW(parse_idem("0101"), std::invalid_argument);
  EXPECT_THROW(parse_idem("R0R1"), std::invalid_argument);
  EXPECT_THROW(parse_idem("R0x"), std::invalid_argument);
}

TEST(Idempotent, RoundTripsRandomSlots) {
  std::mt19937 rng(8);
  for (int t = 0; t < 1000; ++t) {
    std::uniform_int_distribution<int> len(0, 7), lab(0, 4);
    std::vector<int> word(len(rng));
    for (auto& v : word) v = lab(rng);
    int red = std::uniform_int_distribution<int>(0, static_cast<int>(word.size()))(rng);
    Idem x = Idem::from_word(word, red);
    EXPECT_EQ(x.word(), word);
    EXPECT_EQ(parse_idem(to_string(x)), x);
    EXPECT_EQ(Idem::from_slots(x.slots()), x);
  }
}

TEST(Idempotent, EnumerationCounts) {
  Weight l0 = Weight::fundamental(2, 0);
  auto small = enumerate_idempotents(2, l0, RootVec({2, 1}));
  EXPECT_EQ(small.size(), 12u);
  auto block = enumerate_idempotents(2, l0, RootVec({2, 2}));
  EXPECT_EQ(block.size(), 30u);
  EXPECT_EQ(std::set<Idem>(block.begin(), block.end()).size(), 30u);
  for (const auto& x : block) EXPECT_EQ(x.content(2), RootVec({2, 2}));
  auto empty = enumerate_idempotents(2, l0, RootVec::zero(2));
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(to_string(empty[0]), "R");
  EXPECT_EQ(enumerate_idempotents(2, l0, RootVec({2, 2}), RedPositions::LeftmostOnly).size(), 6u);
  EXPECT_THROW(enumerate_idempotents(2, Weight{{1, 1}}, RootVec({1, 1})), std::invalid_argument);
}
