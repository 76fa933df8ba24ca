#include <gtest/gtest.h>

#include <klrw/quotient.hpp>
#include <klrw/steadying.hpp>
#include <klrw/weyl.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace klrw;

namespace {

Pressure chi_of(const char* word, int e = 2) {
  return act_pressure(CartanDatum(e), parse_weyl_word(word), standard_pressure(e));
}

std::vector<Idem> idems(std::initializer_list<const char*> names) {
  std::vector<Idem> out;
  for (const char* n : names) out.push_back(parse_idem(n));
  return out;
}

// Reference charts for Lambda_0, e = 2; one mark string per row.
struct ReferenceChart {
  RootVec alpha;
  std::vector<Idem> columns;
  std::vector<std::pair<const char*, const char*>> rows;
};

const ReferenceChart& chart_2a0_a1() {
  static const ReferenceChart c{RootVec({2, 1}),
                                idems({"R001", "R010", "R100", "0R01", "0R10", "1R00", "00R1"}),
                                {{"id", "0100000"},
                                 {"s0", "1001000"},
                                 {"s1", "0100000"},
                                 {"s1s0", "0100000"},
                                 {"s0s1", "0001001"},
                                 {"s0s1s0", "0001001"},
                                 {"s1s0s1", "0100000"},
                                 {"s0s1s0s1", "0001001"},
                                 {"s1s0s1s0", "0100000"}}};
  return c;
}

const ReferenceChart& chart_2delta() {
  static const ReferenceChart c{
      RootVec({2, 2}),
      idems({"R1100", "R1010", "R1001", "R0101", "R0011", "R0110", "0R101", "0R011", "0R110", "110R0"}),
      {{"id", "0001010000"},
       {"s0", "0001100100"},
       {"s1", "0100010000"},
       {"s1s0", "1100000001"},
       {"s0s1", "0001100100"},
       {"s0s1s0", "0001100100"},
       {"s1s0s1", "1100000001"},
       {"s0s1s0s1", "0001100100"},
       {"s1s0s1s0", "1100000001"}}};
  return c;
}

void expect_chart(const ReferenceChart& ref) {
  std::vector<std::pair<std::string, Pressure>> rows;
  for (const auto& [w, marks] : ref.rows) rows.emplace_back(w, chi_of(w));
  Chart got = build_chart(2, Weight::fundamental(2, 0), ref.alpha, ref.columns, rows);
  ASSERT_EQ(got.rows.size(), ref.rows.size());
  for (std::size_t r = 0; r < ref.rows.size(); ++r) {
    std::string marks;
    for (bool m : got.rows[r].marks) marks += m ? '1' : '0';
    EXPECT_EQ(marks, ref.rows[r].second) << "row " << ref.rows[r].first;
  }
}

Idem random_idem(std::mt19937& rng, int e) {
  std::uniform_int_distribution<int> len(0, 5), lab(0, e - 1);
  Idem x;
  for (int i = len(rng); i > 0; --i) x.left.push_back(lab(rng));
  for (int i = len(rng); i > 0; --i) x.right.push_back(lab(rng));
  return x;
}

Pressure random_pressure(std::mt19937& rng, int e) {
  std::uniform_int_distribution<int> num(-60, 60);
  std::vector<Rational> v(e);
  Rational rest = -1;
  for (int i = 1; i < e; ++i) {
    v[i] = Rational(num(rng), 11);
    v[i].canonicalize();
    rest -= v[i];
  }
  v[0] = rest;
  return Pressure(v);
}

}  // namespace

TEST(Steadying, GeneratorZeroExamples) {
  Pressure chi0 = standard_pressure(2);
  EXPECT_TRUE(is_generator_zero(chi0, parse_idem("1R0")));
  EXPECT_TRUE(is_generator_zero(chi0, parse_idem("0R1")));
  EXPECT_FALSE(is_generator_zero(chi0, parse_idem("R0101")));
  EXPECT_FALSE(is_generator_zero(chi_of("s0"), parse_idem("R0011")));
  // right prefix 0 then 01: values 1/2 > 0 with s0 chi
  EXPECT_TRUE(is_generator_zero(chi_of("s0"), parse_idem("R0110")));
  EXPECT_TRUE(is_generator_zero(chi_of("s1s0"), parse_idem("R0110")));
  EXPECT_FALSE(is_generator_zero(chi0, parse_idem("R")));
}

TEST(Steadying, RootGenerators) {
  CartanDatum cd(2);
  auto gens = root_generators(cd, standard_pressure(2), RootVec({1, 1}));
  ASSERT_EQ(gens.size(), 3u);
  for (const auto& g : gens) EXPECT_EQ(g.side, Side::Left) << to_string(g);

  auto s0 = root_generators(cd, chi_of("s0"), RootVec({2, 1}));
  std::vector<std::string> names;
  for (const auto& g : s0) names.push_back(to_string(g));
  EXPECT_EQ(names, (std::vector<std::string>{"L:a1", "L:a0+a1", "L:2a0+a1", "R:a0"}));

  Pressure flat = Pressure::parse("-1/2,-1/2");
  EXPECT_NO_THROW(root_generators(cd, flat, RootVec({2, 2})));
  Pressure wall = Pressure::parse("0,-1");
  EXPECT_THROW(root_generators(cd, wall, RootVec({1, 0})), std::invalid_argument);
}

TEST(Steadying, RootGeneratorsImplyGeneratorZero) {
  std::mt19937 rng(11);
  int checked = 0;
  for (int it = 0; it < 1000; ++it) {
    int e = 2 + it % 3;
    Pressure chi = random_pressure(rng, e);
    Idem x = random_idem(rng, e);
    std::vector<RootGenerator> gens;
    try {
      gens = root_generators(CartanDatum(e), chi, x.content(e));
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++checked;
    if (killed_by_root_generators(gens, x, e)) EXPECT_TRUE(is_generator_zero(chi, x)) << to_string(x);
  }
  EXPECT_GT(checked, 800);
}

TEST(Steadying, GeneratorZeroIdempotentsLieInRootIdeal) {
  CartanDatum cd(3);
  RootVec alpha({2, 2, 1});
  KlrwAlgebra alg(3, Weight::fundamental(3, 0), alpha);
  int beyond_roots = 0;
  for (const char* w : {"id", "s0", "s1s0", "s2s1s0"}) {
    Pressure chi = act_pressure(cd, parse_weyl_word(w), generic_pressure(3));
    auto gens = root_generators(cd, chi, alpha);
    std::vector<Idem> root_killed, zero;
    for (const Idem& x : alg.idempotents()) {
      if (killed_by_root_generators(gens, x, 3))
        root_killed.push_back(x);
      else if (is_generator_zero(chi, x))
        zero.push_back(x);
    }
    beyond_roots += static_cast<int>(zero.size());
    SteadiedQuotient<PrimeField> q(alg, root_killed, PrimeField(2147483647));
    for (const Idem& x : zero) EXPECT_TRUE(q.idem_in_ideal(x)) << w << " " << to_string(x);
  }
  EXPECT_GT(beyond_roots, 0);
}

TEST(Steadying, ClassificationWithoutEngine) {
  auto cls = classify_idempotents(standard_pressure(2), idems({"R0101", "1R010", "R1100"}));
  ASSERT_EQ(cls.size(), 3u);
  EXPECT_EQ(cls[0].status, IdemStatus::EngineRequired);
  EXPECT_TRUE(cls[0].survives());
  EXPECT_EQ(cls[1].status, IdemStatus::GeneratorZero);
  EXPECT_FALSE(cls[1].survives());
  EXPECT_EQ(to_string(IdemStatus::EngineZero), "engine-zero");
  EXPECT_THROW(classify_idempotents(standard_pressure(2), Weight{{1, 1}}, RootVec({1, 1})),
               std::invalid_argument);
}

TEST(Steadying, ClassificationWithEngine) {
  AlgebraSpec spec{2, Weight::fundamental(2, 0), RootVec({2, 2}), standard_pressure(2), {}};
  auto cls = classify_idempotents(spec.chi, spec.lambda, spec.alpha,
                                  [&](const Idem& x) { return idem_in_ideal(spec, x); });
  std::vector<Idem> alive;
  for (const auto& c : cls)
    if (c.survives()) alive.push_back(c.idem);
  auto engine = survivors(spec);
  EXPECT_EQ(std::set<Idem>(alive.begin(), alive.end()), std::set<Idem>(engine.begin(), engine.end()));
  for (const Idem& col : idems({"R0101", "R0110"})) EXPECT_NE(std::find(alive.begin(), alive.end(), col), alive.end());
  for (const Idem& col : idems({"R1100", "R1010", "R1001", "R0011"}))
    EXPECT_EQ(std::find(alive.begin(), alive.end(), col), alive.end());
}

TEST(Steadying, ChartFor2a0PlusA1) { expect_chart(chart_2a0_a1()); }

TEST(Steadying, ChartFor2Delta) { expect_chart(chart_2delta()); }

TEST(Steadying, ChartTsvRoundTrip) {
  Chart c;
  c.columns = idems({"R001", "0R01"});
  c.rows.push_back({"s0", chi_of("s0"), {true, false}});
  c.rows.push_back({"id", standard_pressure(2), {false, true}});
  std::string tsv = chart_tsv(c);
  EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "row\tchi\tR001\t0R01");
  Chart back = parse_chart_tsv(tsv);
  EXPECT_EQ(back.columns, c.columns);
  ASSERT_EQ(back.rows.size(), 2u);
  EXPECT_EQ(back.rows[0].chi, c.rows[0].chi);
  EXPECT_EQ(back.rows[1].marks, c.rows[1].marks);
  EXPECT_EQ(chart_tsv(back), tsv);
  EXPECT_THROW(parse_chart_tsv("row\tchi\tR0\nid\t-1/2,-1/2\tx\n"), std::invalid_argument);
  EXPECT_THROW(parse_chart_tsv("rows\tchi\n"), std::invalid_argument);
}
