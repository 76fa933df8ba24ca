#pragma once

#include <klrw/idempotent.hpp>
#include <klrw/pressure.hpp>

#include <string>

namespace klrw {

// Lattice plot of the two paths (left path mirrored to negative x) in purple and
// the envelopes f- and f+ in red.
std::string slope_svg(const Pressure& chi, const Idem& idem);

}  // namespace klrw
