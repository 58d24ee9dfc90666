#pragma once

#include <cstdint>

#include "hermlat/lattice.hpp"

namespace hermlat {

// Complete set of nonzero vectors v with v^T gram v <= bound, one
// representative per +/- pair, tagged with the exact norm.
struct ShortVectorSet {
    Int bound;
    std::vector<std::pair<std::vector<Int>, Int>> vectors;
};

ShortVectorSet short_vectors(const ZGram& Z, const Int& bound);

// Exact order of the unitary automorphism group of a definite integral
// lattice: Z-linear maps preserving the trace form and commuting with the
// omega action. Backtracks over images of the first Z-generator of each
// pseudo-component; the second one is forced by omega-linearity.
// Guards: rank <= 6 and |disc| <= 400.
std::int64_t unitary_aut_order(const HermLattice& L);

}  // namespace hermlat
