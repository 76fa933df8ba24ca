#include "repro.hpp"

#include <klrw/envelope.hpp>
#include <klrw/quotient.hpp>
#include <klrw/rock.hpp>
#include <klrw/slope_datum.hpp>
#include <klrw/weyl.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "envelope_oracle.hpp"
#include "random_diagrams.hpp"

namespace klrw::repro {

namespace {

const Weight kL0 = Weight::fundamental(2, 0);
const RootVec k2Delta({2, 2});

Pressure chi_of(const std::string& word, int e = 2) {
  return act_pressure(CartanDatum(e), parse_weyl_word(word), standard_pressure(e));
}

std::vector<Idem> idems(std::initializer_list<const char*> names) {
  std::vector<Idem> out;
  for (const char* n : names) out.push_back(parse_idem(n));
  return out;
}

std::string join(const std::vector<Idem>& xs) {
  std::string out;
  for (const Idem& x : xs) out += (out.empty() ? "" : " ") + to_string(x);
  return out;
}

std::set<Idem> as_set(const std::vector<Idem>& xs) { return {xs.begin(), xs.end()}; }

}  // namespace

const std::vector<ReferenceChart>& reference_charts() {
  static const std::vector<ReferenceChart> refs = {
      {RootVec({2, 1}),
       idems({"R001", "R010", "R100", "0R01", "0R10", "1R00", "00R1"}),
       {{"id", "0100000"},
        {"s0", "1001000"},
        {"s1", "0100000"},
        {"s1s0", "0100000"},
        {"s0s1", "0001001"},
        {"s0s1s0", "0001001"},
        {"s1s0s1", "0100000"},
        {"s0s1s0s1", "0001001"},
        {"s1s0s1s0", "0100000"}}},
      {k2Delta,
       idems({"R1100", "R1010", "R1001", "R0101", "R0011", "R0110", "0R101", "0R011", "0R110", "110R0"}),
       {{"id", "0001010000"},
        {"s0", "0001100100"},
        {"s1", "0100010000"},
        {"s1s0", "1100000001"},
        {"s0s1", "0001100100"},
        {"s0s1s0", "0001100100"},
        {"s1s0s1", "1100000001"},
        {"s0s1s0s1", "0001100100"},
        {"s1s0s1s0", "1100000001"}}}};
  return refs;
}

Chart to_chart(const ReferenceChart& ref) {
  Chart c;
  c.columns = ref.columns;
  for (const auto& [w, marks] : ref.rows) {
    ChartRow row{w, chi_of(w), {}};
    for (char m : std::string_view(marks)) row.marks.push_back(m == '1');
    c.rows.push_back(std::move(row));
  }
  return c;
}

Chart engine_chart(const ReferenceChart& ref, QuotientOptions opts) {
  std::vector<std::pair<std::string, Pressure>> rows;
  for (const auto& [w, marks] : ref.rows) rows.emplace_back(w, chi_of(w));
  return build_chart(2, kL0, ref.alpha, ref.columns, rows, opts);
}

namespace {

Outcome charts() {
  Outcome v{true, ""};
  for (const auto& ref : reference_charts()) {
    std::string got = chart_tsv(engine_chart(ref, {}));
    std::string want = chart_tsv(to_chart(ref));
    std::istringstream gs(got), ws(want);
    std::string gl, wl;
    int rows = -1, bad = 0;
    while (std::getline(ws, wl)) {
      std::getline(gs, gl);
      if (rows++ < 0) continue;
      if (gl != wl) {
        ++bad;
        v.detail += " row " + wl.substr(0, wl.find('\t')) + " differs;";
      }
    }
    v.pass = v.pass && bad == 0 && got == want;
    v.detail += " " + to_string(ref.alpha) + ": " + std::to_string(rows - bad) + "/" + std::to_string(rows) + " rows";
  }
  return v;
}

Outcome id_sq() {
  AlgebraSpec spec{2, kL0, k2Delta, standard_pressure(2), {}};
  auto alive = survivors(spec);
  bool surv_ok = as_set(alive) == as_set(idems({"R0101", "R0110"}));

  KlrwAlgebra alg(2, kL0, k2Delta);
  Rewriter& rw = alg.rewriter();
  Idem idem = parse_idem("R0011");
  Labels x = Labels::of(idem);
  auto dot = [](int k) {
    Monomial m;
    m.exp[k] = 1;
    return Poly{{m, 1}};
  };
  ZElement h = rw.stack(x, {Layer::cross(1), Layer::dots(dot(1))});
  add_scaled(h, rw.stack(x, {Layer::dots(dot(2)), Layer::cross(1)}), -1, Monomial{});
  ZElement hh = rw.multiply(x, h, h);
  if (hh.empty()) return {false, "h^2 already vanishes before the quotient"};
  int deg = rw.degree(x, hh.begin()->first);
  SteadiedQuotient<RationalField> q(alg, steadying_generators(alg, spec.chi), RationalField{});
  bool generator = is_generator_zero(spec.chi, idem);
  auto coords = q.coordinates(idem, idem, deg, hh);
  bool vanishes = q.slice(idem, idem, deg).in_ideal(q.field(), coords);
  std::ostringstream d;
  d << "survivors {" << join(alive) << "}; h^2 on R0011 has " << hh.size()
    << " terms in R_0, normal form in the quotient " << (vanishes ? "0" : "nonzero")
    << (generator ? " (R0011 is itself a generator)" : "");
  return {surv_ok && vanishes && !generator, d.str()};
}

// Moves the strand next to red across it when its label pairs to zero with lambda.
std::vector<Idem> free_moves(const Idem& x, const Weight& lambda) {
  std::vector<Idem> out;
  if (!x.left.empty() && lambda[x.left.back()] == 0) {
    Idem y = x;
    y.right.push_back(y.left.back());
    y.left.pop_back();
    out.push_back(y);
  }
  if (!x.right.empty() && lambda[x.right.back()] == 0) {
    Idem y = x;
    y.left.push_back(y.right.back());
    y.right.pop_back();
    out.push_back(y);
  }
  return out;
}

Outcome listed_survivors() {
  struct Example {
    const char* name;
    const char* word;
    std::vector<Idem> listed;
  };
  const Example examples[] = {{"act0", "s0", idems({"R0011", "R0101", "0R011"})},
                              {"act1", "s1", idems({"R1010", "R0110", "1R010"})},
                              {"act10", "s1s0", idems({"R1100", "R1010", "1R100", "1R010", "110R0"})}};
  Outcome v{true, ""};
  for (const auto& ex : examples) {
    AlgebraSpec spec{2, kL0, k2Delta, chi_of(ex.word), {}};
    auto got = survivors(spec);
    auto want = as_set(ex.listed);
    bool ok = as_set(got) == want;
    v.pass = v.pass && ok;
    v.detail += std::string(v.detail.empty() ? "" : "; ") + ex.name + (ok ? " exact" : " differs");
    if (ok) continue;
    for (const Idem& g : got) {
      if (want.count(g)) continue;
      v.detail += ", extra " + to_string(g);
      for (const Idem& m : free_moves(g, kL0))
        if (want.count(m)) v.detail += " (free move of " + to_string(m) + ")";
    }
    for (const Idem& w : ex.listed)
      if (!as_set(got).count(w)) v.detail += ", missing " + to_string(w);
  }
  return v;
}

Outcome weyl_table() {
  const std::pair<const char*, const char*> rows[] = {
      {"id", "-1/2,-1/2"},    {"s0", "1/2,-3/2"},     {"s1", "-3/2,1/2"},
      {"s1s0", "-5/2,3/2"},   {"s0s1", "3/2,-5/2"},   {"s0s1s0", "5/2,-7/2"},
      {"s1s0s1", "-7/2,5/2"}, {"s0s1s0s1", "7/2,-9/2"}, {"s1s0s1s0", "-9/2,7/2"}};
  int ok = 0;
  std::string bad;
  for (const auto& [w, want] : rows) {
    if (chi_of(w) == Pressure::parse(want))
      ++ok;
    else
      bad += std::string(" ") + w + "=" + to_string(chi_of(w));
  }
  return {ok == 9, std::to_string(ok) + "/9 rows" + bad};
}

Outcome dotted_action() {
  CartanDatum cd(2);
  const std::pair<const char*, RootVec> rows[] = {
      {"s0", RootVec({3, 2})}, {"s1", k2Delta}, {"s1s0", RootVec({3, 4})}};
  Outcome v{true, ""};
  for (const auto& [w, want] : rows) {
    RootVec got = act_dotted(cd, parse_weyl_word(w), kL0, k2Delta);
    v.pass = v.pass && got == want;
    v.detail += std::string(v.detail.empty() ? "" : ", ") + w + ".2d = " + to_string(got);
  }
  return v;
}

// Breakpoints with collinear points removed, including a last point on the tail ray.
std::vector<Point> corners(const PLFunction& f) {
  std::vector<Point> pts = f.points();
  std::vector<Point> out;
  auto slope = [](const Point& a, const Point& b) { return Rational((b.y - a.y) / (b.x - a.x)); };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational out_slope = i + 1 < pts.size() ? slope(pts[i], pts[i + 1]) : f.tail_slope();
    if (!out.empty() && slope(out.back(), pts[i]) == out_slope) continue;
    out.push_back(pts[i]);
  }
  return out;
}

std::vector<Point> pts(std::initializer_list<std::pair<const char*, const char*>> xy) {
  std::vector<Point> out;
  for (auto [x, y] : xy) out.push_back({parse_rational(x), parse_rational(y)});
  return out;
}

Outcome four_graphs() {
  Pressure chi = Pressure::parse("-3/2,1/2");
  RootVec d = RootVec::delta(2), a0 = RootVec::simple(2, 0), a1 = RootVec::simple(2, 1);
  struct Graph {
    const char* idem;
    std::vector<RootVec> gammas;
    std::vector<Point> left;   // f- of the left path, drawn mirrored at -x
    std::vector<Point> right;  // f+ of the right path
  };
  const Graph graphs[] = {
      {"11R0100", {3 * d}, pts({{"0", "0"}}), pts({{"0", "0"}})},
      {"110R100", {a1 + d, a0 + d}, pts({{"0", "0"}, {"3", "-1/2"}}), pts({{"0", "0"}})},
      {"1R00101", {a0 + 2 * d, a1}, pts({{"0", "0"}}), pts({{"0", "0"}, {"1", "1/2"}})},
      {"010R101", {a0, d, d, a1}, pts({{"0", "0"}, {"1", "-3/2"}, {"3", "-5/2"}}), pts({{"0", "0"}, {"1", "1/2"}})}};
  Outcome v{true, ""};
  for (const auto& g : graphs) {
    Idem x = parse_idem(g.idem);
    SlopeDatum sd = slope_datum(chi, x);
    auto left = lower_envelope_f(path_function(chi, x.left));
    auto right = upper_envelope_f(path_function(chi, x.right));
    bool ok_g = sd.gammas() == g.gammas;
    bool ok_e = corners(left) == g.left && corners(right) == g.right && left.tail_slope() == 0 &&
                right.tail_slope() == 0;
    v.pass = v.pass && ok_g && ok_e;
    std::string seq;
    for (const auto& r : sd.gammas()) seq += (seq.empty() ? "" : ",") + to_string(r);
    v.detail += std::string(v.detail.empty() ? "" : "; ") + g.idem + " (" + seq + ")" + (ok_g ? "" : " gammas differ") +
                (ok_e ? "" : " envelopes differ");
  }
  return v;
}

Outcome morita_desk() {
  Outcome v{true, ""};
  for (const char* w : {"id", "s1s0"}) {
    SimpleCount c = count_simple_factors_Q(chi_of(w), kL0, k2Delta);
    v.pass = v.pass && c.resolved && c.split && c.count == 2;
    v.detail += std::string(v.detail.empty() ? "" : ", ") + w + ": " + std::to_string(c.count) + " simples" +
                (c.split ? " split" : " not split") + " (dim " + std::to_string(c.dim_algebra) + ")";
  }
  return v;
}

Outcome wreath_truncation() {
  AlgebraSpec spec{2, kL0, k2Delta, chi_of("s0"), {}};
  Idem e2 = parse_idem("R0101");
  GradedDims got = truncation_graded_dims(spec, {e2}, 30);
  // {1, s} x {1, y1} x {1, y2} with s in degree 0 and dots in degree 2.
  std::map<int, long long> want{{0, 1}};
  for (int g : {0, 2, 2}) {
    std::map<int, long long> next;
    for (auto [deg, n] : want) {
      next[deg] += n;
      next[deg + g] += n;
    }
    want = next;
  }
  spec.field = FieldSpec{2};
  SimpleCount c = count_simple_factors(spec, {e2}, 30);
  bool ok = got.complete && got.dims == want && c.dim_semisimple == 1 && c.count == 1;
  return {ok, "e2Re2 " + to_string(got) + "; over F2 semisimple quotient of dim " + std::to_string(c.dim_semisimple)};
}

Outcome rock_zigzag() {
  AlgebraSpec spec{3, Weight::fundamental(3, 0), RootVec::delta(3), rock_pressure(3, 1), {}};
  GradedDims got = truncation_graded_dims(spec, delta_idempotents(3, 1), 20);
  GradedDims ref = wreath_reference_dims(3, 1, 20);
  bool ok = got.complete && got.dims == ref.dims;
  std::string detail = "1_D R 1_D " + to_string(got) + " vs reference " + to_string(ref);
  if (!ok) {
    std::map<int, long long> doubled;
    for (auto [deg, n] : got.dims) doubled[2 * deg] = n;
    if (doubled == ref.dims) detail += "; equal after doubling degrees";
  }
  return {ok, detail};
}

Pressure random_pressure(std::mt19937& rng, int e, int range, int denom) {
  std::uniform_int_distribution<int> num(-range, range);
  std::vector<Rational> v(e);
  Rational rest = -1;
  for (int i = 1; i < e; ++i) {
    v[i] = Rational(num(rng), denom);
    v[i].canonicalize();
    rest -= v[i];
  }
  v[0] = rest;
  return Pressure(v);
}

// Each check runs 1000 cases and returns the number that failed.
using Property = std::function<int(std::mt19937&)>;

int homogeneity(std::mt19937& rng) {
  int bad = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    int e = 2 + iter % 2;
    std::vector<int> lambda(e, 0);
    lambda[iter % e] = 1;
    Rewriter rw(e, lambda);
    Labels x = testing_support::random_labels(rng, e, 1 + iter % 4);
    auto layers = testing_support::random_layers(rng, x, 2 + iter % 6);
    int expected = 0;
    Labels cur = x;
    for (const auto& l : layers) {
      if (l.crossing >= 0) {
        expected += rw.crossing_degree(cur[l.crossing], cur[l.crossing + 1]);
        cur = cur.swapped(l.crossing);
      } else {
        expected += 2;
      }
    }
    for (const auto& [t, c] : rw.stack(x, layers))
      if (rw.degree(x, t) != expected) {
        ++bad;
        break;
      }
  }
  return bad;
}

int associativity(std::mt19937& rng) {
  int bad = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    int e = 2 + iter % 2;
    std::vector<int> lambda(e, 0);
    lambda[0] = 1;
    Rewriter rw(e, lambda);
    Labels x = testing_support::random_labels(rng, e, 1 + iter % 4);
    auto l1 = testing_support::random_layers(rng, x, 1 + iter % 4);
    Labels y = testing_support::top_of(x, l1);
    auto l2 = testing_support::random_layers(rng, y, 1 + iter % 3);
    Labels z = testing_support::top_of(y, l2);
    auto l3 = testing_support::random_layers(rng, z, 1 + iter % 3);
    ZElement a = rw.stack(x, l1), b = rw.stack(y, l2), c = rw.stack(z, l3);
    bad += rw.multiply(x, rw.multiply(x, a, b), c) != rw.multiply(x, a, rw.multiply(y, b, c));
  }
  return bad;
}

int envelopes(std::mt19937& rng) {
  int bad = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    int e = 2 + iter % 2;
    Pressure chi = random_pressure(rng, e, 30, 8);
    std::vector<int> word(std::uniform_int_distribution<int>(0, 6)(rng));
    for (auto& l : word) l = std::uniform_int_distribution<int>(0, e - 1)(rng);
    auto path = path_function(chi, word);
    std::vector<Rational> h;
    for (int x = 0; x <= static_cast<int>(word.size()); ++x) h.push_back(path(x));
    auto up = upper_envelope_f(path), low = lower_envelope_f(path);
    std::vector<Rational> hu, hl;
    for (int x = 0; x <= static_cast<int>(word.size()); ++x) {
      hu.push_back(up(x));
      hl.push_back(low(x));
    }
    bool ok = hu == oracle::f_plus(h) && hl == oracle::f_minus(h) && up.is_concave() && up.is_weakly_increasing() &&
              low.is_convex() && low.is_weakly_decreasing();
    bad += !ok;
  }
  return bad;
}

// The ideal is generated by the idempotents the root prefix test kills; every
// idempotent with a vanishing prefix of any content must already lie in it.
int generator_zero_in_ideal(std::mt19937& rng) {
  struct Block {
    int e;
    RootVec alpha;
  };
  const Block blocks[] = {{2, RootVec({2, 1})}, {2, k2Delta}, {3, RootVec({2, 1, 1})}, {3, RootVec({2, 2, 1})}};
  std::vector<std::unique_ptr<KlrwAlgebra>> algs;
  for (const auto& b : blocks) algs.push_back(std::make_unique<KlrwAlgebra>(b.e, Weight::fundamental(b.e, 0), b.alpha));
  std::map<std::pair<int, std::vector<Idem>>, std::unique_ptr<SteadiedQuotient<PrimeField>>> cache;
  int bad = 0, done = 0;
  while (done < 1000) {
    int bi = std::uniform_int_distribution<int>(0, 3)(rng);
    const Block& b = blocks[bi];
    CartanDatum cd(b.e);
    Pressure chi = random_pressure(rng, b.e, 24, 7);
    std::vector<RootGenerator> gens;
    try {
      gens = root_generators(cd, chi, b.alpha);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const auto& ids = algs[bi]->idempotents();
    const Idem& x = ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
    ++done;
    if (!is_generator_zero(chi, x)) continue;
    std::vector<Idem> killed;
    for (const Idem& y : ids)
      if (killed_by_root_generators(gens, y, b.e)) killed.push_back(y);
    auto& q = cache[{bi, killed}];
    if (!q) q = std::make_unique<SteadiedQuotient<PrimeField>>(*algs[bi], killed, PrimeField(2147483647));
    bad += !q->idem_in_ideal(x);
  }
  return bad;
}

int dual_action(std::mt19937& rng) {
  int bad = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    int e = 2 + iter % 2;
    CartanDatum cd(e);
    WeylWord w;
    for (int i = std::uniform_int_distribution<int>(0, 5)(rng); i > 0; --i)
      w.letters.push_back(std::uniform_int_distribution<int>(0, e - 1)(rng));
    std::vector<int> c(e);
    for (auto& v : c) v = std::uniform_int_distribution<int>(-4, 4)(rng);
    RootVec v(c);
    Pressure chi = random_pressure(rng, e, 20, 3);
    bad += act_pressure(cd, w, chi).eval(act_root(cd, w, v)) != chi.eval(v);
  }
  return bad;
}

// Cases whose root_generators differ from the first pressure sampled in the same
// chamber. Each differing pair is also compared as ideals; the count of pairs whose
// ideals still agree goes into the note.
int chamber_root_generators(std::mt19937& rng, std::string& note) {
  struct Block {
    int e;
    RootVec alpha;
  };
  // Walls need Lambda - alpha dominant, so only multiples of delta.
  const Block blocks[] = {{2, k2Delta}, {2, RootVec({3, 3})}, {3, RootVec({1, 1, 1})}, {3, RootVec({2, 2, 2})}};
  std::vector<std::unique_ptr<KlrwAlgebra>> algs(4);
  std::map<std::pair<int, std::vector<Idem>>, std::unique_ptr<SteadiedQuotient<PrimeField>>> quotients;
  auto killed = [&](int bi, const std::vector<RootGenerator>& gens) {
    if (!algs[bi]) algs[bi] = std::make_unique<KlrwAlgebra>(blocks[bi].e, Weight::fundamental(blocks[bi].e, 0),
                                                           blocks[bi].alpha);
    std::vector<Idem> out;
    for (const Idem& y : algs[bi]->idempotents())
      if (killed_by_root_generators(gens, y, blocks[bi].e)) out.push_back(y);
    return out;
  };
  auto contains = [&](int bi, const std::vector<Idem>& gens, const std::vector<Idem>& others) {
    auto& q = quotients[{bi, gens}];
    if (!q) q = std::make_unique<SteadiedQuotient<PrimeField>>(*algs[bi], gens, PrimeField(2147483647));
    for (const Idem& y : others)
      if (!q->idem_in_ideal(y)) return false;
    return true;
  };
  std::map<std::pair<int, std::vector<std::pair<RootVec, int>>>, std::vector<RootGenerator>> first;
  std::map<std::pair<std::vector<RootGenerator>, std::vector<RootGenerator>>, bool> same_ideal;
  int bad = 0, done = 0, agree = 0;
  std::string example;
  while (done < 1000) {
    int bi = done % 4;
    const Block& b = blocks[bi];
    CartanDatum cd(b.e);
    Pressure chi = random_pressure(rng, b.e, 36, 12);
    auto sig = chamber_signature(cd, chi, Weight::fundamental(b.e, 0), b.alpha);
    if (!sig.generic()) continue;
    std::vector<RootGenerator> gens;
    try {
      gens = root_generators(cd, chi, b.alpha);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++done;
    auto [it, fresh] = first.emplace(std::make_pair(bi, sig.signs), gens);
    if (fresh || it->second == gens) continue;
    ++bad;
    auto key = std::make_pair(it->second, gens);
    if (!same_ideal.count(key)) {
      auto ka = killed(bi, it->second), kb = killed(bi, gens);
      same_ideal[key] = contains(bi, ka, kb) && contains(bi, kb, ka);
    }
    agree += same_ideal[key];
    if (example.empty()) {
      std::set<RootGenerator> a(it->second.begin(), it->second.end()), c(gens.begin(), gens.end());
      for (const auto& g : c)
        if (!a.count(g)) example += " " + to_string(g);
      example = "e=" + std::to_string(b.e) + " " + to_string(b.alpha) + " chi=" + to_string(chi) + " adds" + example;
    }
  }
  if (bad) note = example + "; generated ideals agree in " + std::to_string(agree) + "/" + std::to_string(bad) + " mismatches";
  return bad;
}

Outcome properties() {
  Outcome v{true, ""};
  auto run = [&](const char* name, int bad) {
    v.pass = v.pass && bad == 0;
    v.detail += std::string(v.detail.empty() ? "" : ", ") + name + " " + std::to_string(1000 - bad) + "/1000";
  };
  std::mt19937 rng(2024);
  run("homogeneity", homogeneity(rng));
  run("associativity", associativity(rng));
  run("envelopes", envelopes(rng));
  run("generator-zero in ideal", generator_zero_in_ideal(rng));
  run("dual action", dual_action(rng));
  std::string note;
  run("chamber root_generators", chamber_root_generators(rng, note));
  if (!note.empty()) v.detail += "; first mismatch " + note;
  return v;
}

}  // namespace

std::vector<int> suite(std::string_view name) {
  if (name == "charts") return {1};
  if (name == "examples") return {2, 3, 4, 5, 6};
  if (name == "invariants") return {7, 8, 9};
  if (name == "properties") return {10};
  if (name == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw std::invalid_argument("unknown suite '" + std::string(name) + "' (charts, examples, invariants, properties, all)");
}

Outcome run(int criterion) {
  static const std::map<int, std::function<Outcome()>> checks = {
      {1, charts},      {2, id_sq},       {3, listed_survivors},  {4, weyl_table},  {5, dotted_action},
      {6, four_graphs}, {7, morita_desk}, {8, wreath_truncation}, {9, rock_zigzag}, {10, properties}};
  auto it = checks.find(criterion);
  if (it == checks.end()) throw std::invalid_argument("no criterion " + std::to_string(criterion));
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = it->second();
  } catch (const std::exception& ex) {
    out = {false, std::string("error: ") + ex.what()};
  }
  out.criterion = criterion;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::string format(const Outcome& o) {
  std::ostringstream s;
  s << "criterion " << o.criterion << ": " << (o.pass ? "PASS" : "FAIL") << " [" << std::fixed << std::setprecision(1)
    << o.seconds << "s] " << o.detail;
  return s.str();
}

std::map<int, bool> read_expected(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::map<int, bool> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    int n;
    std::string verdict;
    if (!(ss >> n >> verdict) || (verdict != "PASS" && verdict != "FAIL"))
      throw std::runtime_error("bad line in " + path + ": " + line);
    out[n] = verdict == "PASS";
  }
  return out;
}

}  // namespace klrw::repro
