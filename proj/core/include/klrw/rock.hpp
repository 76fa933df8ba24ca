#pragma once

#include <vector>

#include "klrw/idempotent.hpp"
#include "klrw/pressure.hpp"
#include "klrw/quotient.hpp"

namespace klrw {

// chi(alpha_i) = 1 - d - 1/e for i != 0 and (e-1)(d-1) - 1/e for i = 0.
Pressure rock_pressure(int e, int d);

// chi(alpha_i) < 1 - d for every i != 0.
bool in_rock_chamber(const Pressure& chi, int d);

// (i, i+1, ..., e-1, i-1, ..., 0)
std::vector<int> gg_word(int i, int e);

// Every concatenation a_{q1} ... a_{qd}, read outside-in to the right of red, ordered by (q1, ..., qd).
std::vector<Idem> delta_idempotents(int e, int d);

// No black strand left of red.
bool is_eplus(const Idem& idem);
std::vector<Idem> eplus_idempotents(int e, const Weight& lambda, const RootVec& alpha);

// Graded dimensions of Z^{(x)d} # k S_d for the zigzag algebra Z of A_{e-1},
// vertices in degree 0, arrows 2, loops 4. Throws for e = 2.
GradedDims wreath_reference_dims(int e, int d, int max_degree);

}  // namespace klrw
