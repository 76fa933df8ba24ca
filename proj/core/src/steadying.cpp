#include "klrw/steadying.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klrw {

namespace {

const char* const kCheck = "\xE2\x9C\x93";

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

bool is_generator_zero(const Pressure& chi, const Idem& idem) {
  Rational acc = 0;
  for (int l : idem.left) {
    acc += chi[l];
    if (sgn(acc) < 0) return true;
  }
  acc = 0;
  for (int r : idem.right) {
    acc += chi[r];
    if (sgn(acc) > 0) return true;
  }
  return false;
}

std::string to_string(const RootGenerator& g) {
  return std::string(g.side == Side::Left ? "L:" : "R:") + to_string(g.root);
}

std::vector<RootGenerator> root_generators(const CartanDatum& cd, const Pressure& chi, const RootVec& alpha) {
  std::vector<RootGenerator> out;
  for (const RootVec& beta : cd.positive_roots_below(alpha)) {
    int s = sgn(chi.eval(beta));
    if (s == 0) throw std::invalid_argument("pressure is not generic on roots below " + to_string(alpha));
    out.push_back({s < 0 ? Side::Left : Side::Right, beta});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool killed_by_root_generators(const std::vector<RootGenerator>& gens, const Idem& idem, int e) {
  auto scan = [&](const std::vector<int>& labels, Side side) {
    RootVec acc = RootVec::zero(e);
    for (int l : labels) {
      acc[l] += 1;
      for (const auto& g : gens)
        if (g.side == side && g.root == acc) return true;
    }
    return false;
  };
  return scan(idem.left, Side::Left) || scan(idem.right, Side::Right);
}

std::string to_string(IdemStatus s) {
  switch (s) {
    case IdemStatus::GeneratorZero: return "generator-zero";
    case IdemStatus::EngineRequired: return "engine-required";
    case IdemStatus::Survivor: return "survivor";
    case IdemStatus::EngineZero: return "engine-zero";
  }
  return "?";
}

std::vector<IdemClass> classify_idempotents(const Pressure& chi, const std::vector<Idem>& idems,
                                            const IdealTest& in_ideal) {
  std::vector<IdemClass> out;
  for (const Idem& x : idems) {
    IdemStatus s;
    if (is_generator_zero(chi, x))
      s = IdemStatus::GeneratorZero;
    else if (!in_ideal)
      s = IdemStatus::EngineRequired;
    else
      s = in_ideal(x) ? IdemStatus::EngineZero : IdemStatus::Survivor;
    out.push_back({x, s});
  }
  return out;
}

std::vector<IdemClass> classify_idempotents(const Pressure& chi, const Weight& lambda, const RootVec& alpha,
                                            const IdealTest& in_ideal) {
  if (lambda.level() != 1) throw std::invalid_argument("classification needs a level-1 weight");
  CartanDatum cd(chi.e());
  root_generators(cd, chi, alpha);  // genericity check
  return classify_idempotents(chi, enumerate_idempotents(chi.e(), lambda, alpha), in_ideal);
}

std::string chart_tsv(const Chart& chart) {
  std::ostringstream os;
  os << "row\tchi";
  for (const auto& c : chart.columns) os << '\t' << to_string(c);
  os << '\n';
  for (const auto& r : chart.rows) {
    os << r.label << '\t' << join_rationals(r.chi.values());
    for (bool m : r.marks) os << '\t' << (m ? kCheck : "0");
    os << '\n';
  }
  return os.str();
}

Chart parse_chart_tsv(std::string_view text) {
  Chart chart;
  auto lines = split(text, '\n');
  if (lines.empty()) throw std::invalid_argument("empty chart");
  auto head = split(lines[0], '\t');
  if (head.size() < 2 || head[0] != "row" || head[1] != "chi") throw std::invalid_argument("bad chart header");
  for (std::size_t i = 2; i < head.size(); ++i) chart.columns.push_back(parse_idem(head[i]));
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (lines[li].empty()) continue;
    auto cells = split(lines[li], '\t');
    if (cells.size() != head.size()) throw std::invalid_argument("chart row has the wrong width");
    ChartRow row{cells[0], Pressure(parse_rational_list(cells[1])), {}};
    for (std::size_t i = 2; i < cells.size(); ++i) {
      if (cells[i] == kCheck)
        row.marks.push_back(true);
      else if (cells[i] == "0")
        row.marks.push_back(false);
      else
        throw std::invalid_argument("chart entry must be a check mark or 0");
    }
    chart.rows.push_back(std::move(row));
  }
  return chart;
}

}  // namespace klrw
