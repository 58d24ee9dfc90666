#pragma once

#include <vector>

#include "hermlat/field.hpp"

namespace hermlat {

// Coefficients of the Bernoulli polynomial B_j(X), ascending degree,
// with the convention B_1(0) = -1/2.
std::vector<Rat> bernoulli_poly(int j);

// B_j(1): equals the classical Bernoulli number for j >= 2, and +1/2 at j = 1.
Rat bernoulli_number_at_one(int j);

// Generalized Bernoulli number B_{j, chi^j} for the field character, under
// the convention chi^j = 1 for even j and chi^j = chi_K for odd j:
//
//   j even:  B_j(1)
//   j odd :  |d|^(j-1) * sum_{a=1}^{|d|} chi(a) B_j(a/|d|)
//
// Values are memoized per (disc, j); the cache is safe for concurrent use.
Rat gen_bernoulli(const Field& F, int j);

// |L(1-j, chi^j)| = |B_{j, chi^j}| / j.
Rat l_value_neg(const Field& F, int j);

}  // namespace hermlat
