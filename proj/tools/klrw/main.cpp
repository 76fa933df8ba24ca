#include <klrw/io.hpp>
#include <klrw/quotient.hpp>
#include <klrw/rock.hpp>
#include <klrw/slope_datum.hpp>
#include <klrw/weyl.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "repro.hpp"
#include "slope_svg.hpp"

#ifndef KLRW_GOLDENS_DIR
#define KLRW_GOLDENS_DIR "goldens"
#endif

using namespace klrw;

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Mismatch {
  int code = 0;
};

struct AlgebraArgs {
  int e = 2;
  std::string lambda = "0";
  std::string alpha;
  std::string chi;
  std::string word;
  std::string spec_file;
  std::string coeffs = "Q";
  int max_degree = 30;
  int threads = 1;
  std::string json;

  void add_pressure(CLI::App* cmd) {
    cmd->add_option("--e", e, "number of labels")->check(CLI::Range(2, 64));
    cmd->add_option("--chi", chi, "pressure values chi(alpha_0),...,chi(alpha_{e-1})");
    cmd->add_option("--word", word, "Weyl word applied to -1/e,...,-1/e, e.g. s1s0")->excludes("--chi");
  }
  void add_algebra(CLI::App* cmd) {
    add_pressure(cmd);
    cmd->add_option("--lambda", lambda, "fundamental weight indices, e.g. 0");
    cmd->add_option("--alpha", alpha, "root coefficients, e.g. 2,2");
    cmd->add_option("--spec", spec_file, "JSON algebra spec file; overrides the flags above");
    cmd->add_option("--coeffs", coeffs, "Q or Fp, e.g. F2");
    cmd->add_option("--max-degree", max_degree, "largest degree to compute")->check(CLI::NonNegativeNumber);
    cmd->add_option("--threads", threads, "worker threads inside engine cells")->check(CLI::PositiveNumber);
  }

  Pressure pressure() const {
    if (!chi.empty()) return Pressure(parse_rational_list(chi));
    if (!word.empty()) return act_pressure(CartanDatum(e), parse_weyl_word(word), standard_pressure(e));
    return standard_pressure(e);
  }

  AlgebraSpec spec() const {
    if (!spec_file.empty()) {
      std::ifstream in(spec_file);
      if (!in) throw UsageError("cannot read spec file " + spec_file);
      std::stringstream ss;
      ss << in.rdbuf();
      return parse_algebra_spec(ss.str());
    }
    if (alpha.empty()) throw UsageError("--alpha or --spec is required");
    AlgebraSpec s{e, parse_lambda(e, lambda), parse_alpha(e, alpha), pressure(), FieldSpec::parse(coeffs)};
    if (s.chi.e() != e) throw UsageError("--chi needs " + std::to_string(e) + " values");
    return s;
  }

  QuotientOptions options() const { return QuotientOptions{threads, 4}; }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(text);
  while (std::getline(in, cell, sep))
    if (!cell.empty()) out.push_back(cell);
  return out;
}

std::vector<Idem> parse_idems(const std::vector<std::string>& names) {
  std::vector<Idem> out;
  for (const auto& n : names) out.push_back(parse_idem(n));
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing golden " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* const kChartRows = "id,s0,s1,s1s0,s0s1,s0s1s0,s1s0s1,s0s1s0s1,s1s0s1s0";

// Golden files named after the reference data they hold.
std::string chart_golden_name(const RootVec& alpha) { return "chart_" + to_string(alpha) + ".tsv"; }

struct SlopeExample {
  const char* chi;
  const char* idem;
};
const SlopeExample kSlopeExamples[] = {
    {"-3/2,1/2", "11R0100"}, {"-3/2,1/2", "110R100"}, {"-3/2,1/2", "1R00101"}, {"-3/2,1/2", "010R101"}};

std::string slope_golden_name(const char* idem) { return "slope_" + std::string(idem) + ".json"; }

std::string slope_output(const Pressure& chi, const Idem& idem) {
  return slope_json(chi, idem, slope_datum(chi, idem)) + "\n";
}

// Compares engine output for the reference inputs with the stored goldens.
bool compare_goldens(const std::filesystem::path& dir, std::ostream& log) {
  bool ok = true;
  for (const auto& ref : repro::reference_charts()) {
    std::string got = chart_tsv(repro::engine_chart(ref, {}));
    bool same = got == read_file(dir / chart_golden_name(ref.alpha));
    log << "golden " << chart_golden_name(ref.alpha) << ": " << (same ? "identical" : "DIFFERS") << "\n";
    ok = ok && same;
  }
  for (const auto& ex : kSlopeExamples) {
    std::string got = slope_output(Pressure::parse(ex.chi), parse_idem(ex.idem));
    bool same = json_equal(got, read_file(dir / slope_golden_name(ex.idem)));
    log << "golden " << slope_golden_name(ex.idem) << ": " << (same ? "equal" : "DIFFERS") << "\n";
    ok = ok && same;
  }
  return ok;
}

void write_goldens(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  // Charts come from the reference marks, not from the engine.
  for (const auto& ref : repro::reference_charts())
    write_file((dir / chart_golden_name(ref.alpha)).string(), chart_tsv(repro::to_chart(ref)));
  for (const auto& ex : kSlopeExamples)
    write_file((dir / slope_golden_name(ex.idem)).string(), slope_output(Pressure::parse(ex.chi), parse_idem(ex.idem)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"KLRW steadied quotients: charts, slope data, graded dimensions and checks"};
  app.require_subcommand(1);
  AlgebraArgs a;

  auto* chart = app.add_subcommand("idem-chart", "survivor chart, one row per pressure, engine-confirmed");
  a.add_algebra(chart);
  std::string rows = kChartRows, columns, out_path = "-";
  chart->add_option("--rows", rows, "comma-separated Weyl words applied to -1/e,...,-1/e");
  chart->add_option("--columns", columns, "comma-separated idempotents; default every idempotent of the block");
  chart->add_option("--out", out_path, "TSV output path, - for stdout");
  chart->add_option("--json", a.json, "JSON output path");

  auto* slope = app.add_subcommand("slope", "slope datum and envelopes of an idempotent");
  a.add_pressure(slope);
  std::string idem_text, svg_path;
  slope->add_option("--idem", idem_text, "idempotent, e.g. 110R100")->required();
  slope->add_option("--svg", svg_path, "SVG output path");
  slope->add_option("--json", a.json, "JSON output path");

  auto* dims = app.add_subcommand("quotient-dims", "graded dimensions of the steadied quotient");
  a.add_algebra(dims);
  dims->add_option("--json", a.json, "JSON output path");

  std::string idem_list;
  auto* test = app.add_subcommand("idem-test", "classify idempotents: generator-zero, survivor or engine-zero");
  a.add_algebra(test);
  test->add_option("--idems", idem_list, "comma-separated idempotents; default every idempotent of the block");
  test->add_option("--json", a.json, "JSON output path");

  auto* trunc = app.add_subcommand("truncate", "graded dimensions of e R e for e a sum of idempotents");
  a.add_algebra(trunc);
  trunc->add_option("--idems", idem_list, "comma-separated idempotents")->required();
  trunc->add_option("--json", a.json, "JSON output path");

  auto* simples = app.add_subcommand("simples", "number of simple factors and splitting diagnostic");
  a.add_algebra(simples);
  simples->add_option("--idems", idem_list, "comma-separated idempotents; default all");
  simples->add_option("--json", a.json, "JSON output path");

  auto* chamber = app.add_subcommand("chamber", "walls, chamber signature and root generators");
  a.add_algebra(chamber);

  auto* weyl = app.add_subcommand("weyl-act", "Weyl group action on a pressure, root or dotted root");
  std::string word_text, root_text, dotted_text;
  weyl->add_option("--e", a.e, "number of labels")->check(CLI::Range(2, 64));
  weyl->add_option("--chi", a.chi, "pressure values");
  weyl->add_option("--word", word_text, "Weyl word, e.g. 0 or s1s0")->required();
  weyl->add_option("--root", root_text, "root coefficients to act on");
  weyl->add_option("--dotted", dotted_text, "root coefficients for the dotted action at --lambda");
  weyl->add_option("--lambda", a.lambda, "fundamental weight indices");

  auto* rock = app.add_subcommand("rock-check", "RoCK pressure and the 1_Delta truncation against the zigzag wreath");
  int rock_d = 1;
  rock->add_option("--e", a.e, "number of labels")->check(CLI::Range(2, 64));
  rock->add_option("--d", rock_d, "multiple of delta")->check(CLI::PositiveNumber);
  rock->add_option("--max-degree", a.max_degree, "largest degree to compute");
  rock->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* repro_cmd = app.add_subcommand("repro", "run bundled reproduction suites");
  std::string suite = "all", report, goldens = KLRW_GOLDENS_DIR, expected, write_goldens_dir;
  repro_cmd->add_option("--suite", suite, "charts, examples, invariants, properties or all");
  repro_cmd->add_option("--report", report, "report output path");
  repro_cmd->add_option("--goldens", goldens, "golden file directory");
  repro_cmd->add_option("--expected", expected, "verdict file; mismatch is judged against it instead of all-PASS");
  repro_cmd->add_option("--write-goldens", write_goldens_dir, "write reference goldens to this directory and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*chart) {
      AlgebraSpec s = a.spec();
      std::vector<Idem> cols = columns.empty() ? KlrwAlgebra(s.e, s.lambda, s.alpha).idempotents()
                                               : parse_idems(split(columns, ','));
      std::vector<std::pair<std::string, Pressure>> chart_rows;
      CartanDatum cd(s.e);
      for (const auto& w : split(rows, ','))
        chart_rows.emplace_back(w, act_pressure(cd, parse_weyl_word(w), standard_pressure(s.e)));
      Chart c = build_chart(s.e, s.lambda, s.alpha, cols, chart_rows, a.options());
      write_file(out_path, chart_tsv(c));
      if (!a.json.empty()) write_file(a.json, to_json(c) + "\n");
    } else if (*slope) {
      Pressure chi = a.pressure();
      Idem x = parse_idem(idem_text);
      SlopeDatum g = slope_datum(chi, x);
      std::string js = slope_output(chi, x);
      if (!a.json.empty()) write_file(a.json, js);
      if (!svg_path.empty()) write_file(svg_path, slope_svg(chi, x));
      if (a.json.empty()) {
        std::cout << "gamma";
        for (const auto& r : g.gammas()) std::cout << " " << to_string(r);
        std::cout << "\ns=" << g.s() << " t=" << g.t() << "\n";
      }
    } else if (*dims) {
      AlgebraSpec s = a.spec();
      GradedDims g = quotient_graded_dims(s, a.max_degree, a.options());
      std::cout << to_string(g) << "\n";
      if (!a.json.empty()) write_file(a.json, to_json(g) + "\n");
    } else if (*test) {
      AlgebraSpec s = a.spec();
      std::vector<Idem> xs = idem_list.empty() ? KlrwAlgebra(s.e, s.lambda, s.alpha).idempotents()
                                               : parse_idems(split(idem_list, ','));
      auto cls = classify_idempotents(s.chi, xs, [&](const Idem& x) { return idem_in_ideal(s, x); });
      for (const auto& c : cls) std::cout << to_string(c.idem) << "\t" << to_string(c.status) << "\n";
      if (!a.json.empty()) write_file(a.json, to_json(cls) + "\n");
    } else if (*trunc) {
      AlgebraSpec s = a.spec();
      GradedDims g = truncation_graded_dims(s, parse_idems(split(idem_list, ',')), a.max_degree, a.options());
      std::cout << to_string(g) << "\n";
      if (!a.json.empty()) write_file(a.json, to_json(g) + "\n");
    } else if (*simples) {
      AlgebraSpec s = a.spec();
      SimpleCount c = count_simple_factors(s, parse_idems(split(idem_list, ',')), a.max_degree, a.options());
      std::cout << c.count << " simple factors over " << c.field << (c.split ? ", split" : ", not split")
                << "; dim " << c.dim_algebra << ", radical " << c.dim_radical << ", center of semisimple part "
                << c.dim_center << (c.note.empty() ? "" : "; " + c.note) << "\n";
      if (!a.json.empty()) write_file(a.json, to_json(c) + "\n");
    } else if (*chamber) {
      AlgebraSpec s = a.spec();
      CartanDatum cd(s.e);
      auto sig = chamber_signature(cd, s.chi, s.lambda, s.alpha);
      std::cout << "walls";
      for (const auto& [root, sign] : sig.signs) std::cout << " " << to_string(root) << (sign > 0 ? ":+" : sign < 0 ? ":-" : ":0");
      std::cout << "\n" << (sig.generic() ? "generic" : "on a wall") << "\n";
      if (!sig.generic()) throw UsageError("pressure lies on a wall; root generators need a generic pressure");
      std::cout << "root generators";
      for (const auto& g : root_generators(cd, s.chi, s.alpha)) std::cout << " " << to_string(g);
      std::cout << "\n";
    } else if (*weyl) {
      CartanDatum cd(a.e);
      WeylWord w = parse_weyl_word(word_text);
      if (root_text.empty() && dotted_text.empty())
        std::cout << to_string(act_pressure(cd, w, a.pressure())) << "\n";
      if (!root_text.empty()) std::cout << to_string(act_root(cd, w, parse_alpha(a.e, root_text))) << "\n";
      if (!dotted_text.empty())
        std::cout << to_string(act_dotted(cd, w, parse_lambda(a.e, a.lambda), parse_alpha(a.e, dotted_text))) << "\n";
    } else if (*rock) {
      Pressure chi = rock_pressure(a.e, rock_d);
      CartanDatum cd(a.e);
      RootVec alpha = rock_d * RootVec::delta(a.e);
      std::cout << "chi " << to_string(chi) << "\nRoCK chamber " << (in_rock_chamber(chi, rock_d) ? "yes" : "no")
                << "\nis_rock " << (is_rock(cd, chi, alpha) ? "yes" : "no") << "\n";
      AlgebraSpec s{a.e, Weight::fundamental(a.e, 0), alpha, chi, {}};
      GradedDims got = truncation_graded_dims(s, delta_idempotents(a.e, rock_d), a.max_degree, a.options());
      GradedDims ref = wreath_reference_dims(a.e, rock_d, a.max_degree);
      std::cout << "1_Delta truncation " << to_string(got) << "\nzigzag wreath " << to_string(ref) << "\n";
      if (got.dims != ref.dims) throw Mismatch{kMismatch};
    } else if (*repro_cmd) {
      if (!write_goldens_dir.empty()) {
        write_goldens(write_goldens_dir);
        return 0;
      }
      std::vector<int> which = repro::suite(suite);
      std::map<int, bool> want;
      if (!expected.empty()) want = repro::read_expected(expected);
      std::ostringstream log;
      bool ok = true;
      if (suite == "charts" || suite == "all") ok = compare_goldens(goldens, log) && ok;
      for (int n : which) {
        auto o = repro::run(n);
        log << repro::format(o) << "\n";
        ok = ok && o.pass == (want.count(n) ? want[n] : true);
      }
      std::cout << log.str();
      if (!report.empty()) write_file(report, log.str());
      if (!ok) throw Mismatch{kMismatch};
    }
  } catch (const Mismatch& m) {
    return m.code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return 0;
}
