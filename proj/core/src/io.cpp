#include "klrw/io.hpp"

#include <json.hpp>
#include <stdexcept>

namespace klrw {

using nlohmann::json;

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto pos = text.find(',', start);
    std::string cell(text.substr(start, pos == std::string_view::npos ? text.npos : pos - start));
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(cell, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer list: " + std::string(text));
    }
    if (used != cell.size()) throw std::invalid_argument("malformed integer list: " + std::string(text));
    out.push_back(v);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Weight lambda_from_indices(int e, const std::vector<int>& idx) {
  Weight w{std::vector<int>(e, 0)};
  for (int i : idx) {
    if (i < 0 || i >= e) throw std::invalid_argument("Lambda index out of range");
    ++w.fund[i];
  }
  return w;
}

json points_json(const PLFunction& f) {
  json pts = json::array();
  for (const auto& p : f.points()) pts.push_back({to_string(p.x), to_string(p.y)});
  return {{"points", pts}, {"tail_slope", to_string(f.tail_slope())}};
}

json roots_json(const std::vector<RootVec>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.coeffs());
  return a;
}

}  // namespace

Weight parse_lambda(int e, std::string_view text) { return lambda_from_indices(e, parse_ints(text)); }

RootVec parse_alpha(int e, std::string_view text) {
  auto v = parse_ints(text);
  if (static_cast<int>(v.size()) != e) throw std::invalid_argument("alpha needs one coefficient per label");
  RootVec a(v);
  if (!a.is_nonnegative()) throw std::invalid_argument("alpha must be nonnegative");
  return a;
}

AlgebraSpec parse_algebra_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("malformed algebra spec: ") + err.what());
  }
  try {
    AlgebraSpec s;
    s.e = j.at("e").get<int>();
    if (s.e < 2) throw std::invalid_argument("e must be at least 2");
    s.lambda = lambda_from_indices(s.e, j.at("Lambda").get<std::vector<int>>());
    auto alpha = j.at("alpha").get<std::vector<int>>();
    if (static_cast<int>(alpha.size()) != s.e) throw std::invalid_argument("alpha needs one coefficient per label");
    s.alpha = RootVec(alpha);
    if (j.contains("chi")) {
      std::vector<Rational> chi;
      for (const auto& c : j.at("chi")) chi.push_back(parse_rational(c.is_string() ? c.get<std::string>() : c.dump()));
      if (static_cast<int>(chi.size()) != s.e) throw std::invalid_argument("chi needs one value per label");
      s.chi = Pressure(chi);
    } else {
      s.chi = standard_pressure(s.e);
    }
    s.field = FieldSpec::parse(j.value("coeffs", std::string("Q")));
    return s;
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("malformed algebra spec: ") + err.what());
  }
}

std::string to_json(const AlgebraSpec& s) {
  std::vector<int> idx;
  for (int i = 0; i < s.e; ++i)
    for (int k = 0; k < s.lambda.fund[i]; ++k) idx.push_back(i);
  json chi = json::array();
  for (const auto& c : s.chi.values()) chi.push_back(to_string(c));
  json j = {{"e", s.e}, {"Lambda", idx}, {"alpha", s.alpha.coeffs()}, {"chi", chi}, {"coeffs", s.field.name()}};
  return j.dump(2);
}

std::string to_json(const GradedDims& g) {
  json dims = json::object();
  for (const auto& [d, n] : g.dims) dims[std::to_string(d)] = n;
  json j = {{"field", g.field.name()},
            {"dims", dims},
            {"total", g.total()},
            {"computed_to", g.computed_to},
            {"status", g.status()}};
  return j.dump(2);
}

std::string to_json(const Chart& chart) {
  json cols = json::array();
  for (const auto& c : chart.columns) cols.push_back(to_string(c));
  json rows = json::array();
  for (const auto& r : chart.rows) {
    json chi = json::array();
    for (const auto& c : r.chi.values()) chi.push_back(to_string(c));
    json surv = json::array();
    for (std::size_t i = 0; i < r.marks.size(); ++i)
      if (r.marks[i]) surv.push_back(to_string(chart.columns[i]));
    rows.push_back({{"row", r.label}, {"chi", chi}, {"survivors", surv}});
  }
  return json{{"columns", cols}, {"rows", rows}}.dump(2);
}

std::string to_json(const SimpleCount& c) {
  json j = {{"field", c.field},
            {"count", c.count},
            {"split", c.split},
            {"resolved", c.resolved},
            {"dim_algebra", c.dim_algebra},
            {"dim_radical", c.dim_radical},
            {"dim_semisimple", c.dim_semisimple},
            {"dim_center", c.dim_center},
            {"block_dims", c.block_dims},
            {"note", c.note}};
  return j.dump(2);
}

std::string to_json(const std::vector<IdemClass>& classes) {
  json a = json::array();
  for (const auto& c : classes) a.push_back({{"idem", to_string(c.idem)}, {"status", to_string(c.status)}});
  return a.dump(2);
}

std::string slope_json(const Pressure& chi, const Idem& idem, const SlopeDatum& g) {
  auto path_l = path_function(chi, idem.left);
  auto path_r = path_function(chi, idem.right);
  json chij = json::array();
  for (const auto& c : chi.values()) chij.push_back(to_string(c));
  json j = {{"idem", to_string(idem)},
            {"chi", chij},
            {"gamma", roots_json(g.gammas())},
            {"negative", roots_json(g.negative)},
            {"zero", g.zero.coeffs()},
            {"positive", roots_json(g.positive)},
            {"left", {{"path", points_json(path_l)}, {"f", points_json(lower_envelope_f(path_l))}}},
            {"right", {{"path", points_json(path_r)}, {"f", points_json(upper_envelope_f(path_r))}}}};
  return j.dump(2);
}

bool json_equal(std::string_view a, std::string_view b) {
  try {
    return json::parse(a) == json::parse(b);
  } catch (const json::parse_error&) {
    return false;
  }
}

}  // namespace klrw
