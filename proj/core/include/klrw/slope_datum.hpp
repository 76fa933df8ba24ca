#pragma once

#include <vector>

#include "klrw/envelope.hpp"
#include "klrw/idempotent.hpp"

namespace klrw {

struct SlopeDatum {
  std::vector<RootVec> negative;  // gamma_{-s}, ..., gamma_{-1}
  RootVec zero;                   // gamma_0
  std::vector<RootVec> positive;  // gamma_1, ..., gamma_t

  int s() const { return static_cast<int>(negative.size()); }
  int t() const { return static_cast<int>(positive.size()); }
  // gamma_{-s}, ..., gamma_0, ..., gamma_t
  std::vector<RootVec> gammas() const;
  RootVec total() const;

  friend bool operator==(const SlopeDatum&, const SlopeDatum&) = default;
};

// Throws std::invalid_argument when a nonempty prefix of l or r has pressure 0.
SlopeDatum slope_datum(const Pressure& chi, const Idem& idem);

// f+ and f- rebuilt from the pieces: cumulative sums from gamma_t inward and from gamma_{-s} inward.
PLFunction slope_upper(const Pressure& chi, const SlopeDatum& g);
PLFunction slope_lower(const Pressure& chi, const SlopeDatum& g);

bool slope_preorder_leq(const Pressure& chi, const SlopeDatum& a, const SlopeDatum& b);

}  // namespace klrw
