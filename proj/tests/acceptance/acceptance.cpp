#include <CLI11.hpp>

#include <iostream>

#include "repro.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria, one line each"};
  std::string expected_path;
  std::vector<int> only;
  app.add_option("--expected", expected_path, "verdict file; exit status compares against it instead of all-PASS");
  app.add_option("--only", only, "criterion numbers to run");
  CLI11_PARSE(app, argc, argv);

  std::map<int, bool> expected;
  if (!expected_path.empty()) expected = klrw::repro::read_expected(expected_path);
  if (only.empty()) only = klrw::repro::suite("all");
  bool ok = true;
  for (int n : only) {
    auto o = klrw::repro::run(n);
    std::cout << klrw::repro::format(o) << std::endl;
    ok = ok && o.pass == (expected.count(n) ? expected[n] : true);
  }
  return ok ? 0 : 1;
}
