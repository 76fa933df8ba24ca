#pragma once

#include <klrw/quotient.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace klrw::repro {

struct Outcome {
  bool pass = false;
  std::string detail;
  int criterion = 0;
  double seconds = 0;
};

// Lambda_0, e = 2; marks are '1' for a surviving column.
struct ReferenceChart {
  RootVec alpha;
  std::vector<Idem> columns;
  std::vector<std::pair<const char*, const char*>> rows;  // Weyl word applied to -1/2,-1/2; marks
};

const std::vector<ReferenceChart>& reference_charts();
Chart to_chart(const ReferenceChart& ref);
Chart engine_chart(const ReferenceChart& ref, QuotientOptions opts);

// charts, examples, invariants, properties, all
std::vector<int> suite(std::string_view name);
Outcome run(int criterion);
// "criterion N: PASS [1.2s] detail"
std::string format(const Outcome& o);
// Lines "N PASS" or "N FAIL"; '#' starts a comment line.
std::map<int, bool> read_expected(const std::string& path);

}  // namespace klrw::repro
