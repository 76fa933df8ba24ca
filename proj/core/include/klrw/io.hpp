#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "klrw/finite_algebra.hpp"
#include "klrw/quotient.hpp"
#include "klrw/slope_datum.hpp"
#include "klrw/steadying.hpp"

namespace klrw {

// {"e":2, "Lambda":[0], "alpha":[2,2], "chi":["-1/2","-1/2"], "coeffs":"Q"}
// "Lambda" lists fundamental weight indices with multiplicity; "chi" defaults to -1/e.
AlgebraSpec parse_algebra_spec(std::string_view json);
std::string to_json(const AlgebraSpec& spec);

// "0" or "0,0" -> fundamental weight indices
Weight parse_lambda(int e, std::string_view text);
RootVec parse_alpha(int e, std::string_view text);

std::string to_json(const GradedDims& g);
std::string to_json(const Chart& chart);
std::string to_json(const SimpleCount& c);
std::string to_json(const std::vector<IdemClass>& classes);
std::string slope_json(const Pressure& chi, const Idem& idem, const SlopeDatum& g);

// Same JSON value after parsing (object key order ignored).
bool json_equal(std::string_view a, std::string_view b);

}  // namespace klrw
