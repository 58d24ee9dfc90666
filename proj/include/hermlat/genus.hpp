#pragma once

#include "hermlat/bernoulli.hpp"
#include "hermlat/lattice.hpp"

namespace hermlat {

// A genus of definite unimodular lattices, keyed by parity, rank and the
// character vector of the ideal genus of the occurring Steinitz classes.
// The entries of eps follow field.ramified_primes and multiply to +1.
struct GenusSym {
    Field field;
    Parity parity = Parity::odd;
    int rank = 0;
    std::vector<int> eps;

    bool operator==(const GenusSym& o) const {
        return field == o.field && parity == o.parity && rank == o.rank && eps == o.eps;
    }
};

// Existence of a genus with the given invariants; always true for odd
// parity, and the three even-parity conditions otherwise.
bool exists_genus(const Field& F, Parity parity, int n, const std::vector<int>& eps);

// All genera of rank n: 2^(t-1) odd ones plus the even ones that exist.
std::vector<GenusSym> list_genera(const Field& F, int n);

// Local factor at a ramified prime in the unimodular local density.
Rat lambda_p(const GenusSym& G, long p);

// Exact partial mass
//   1/w * prod_{j=2}^{n} |B_{j,chi^j}| / (2j) * prod_{p | disc} lambda_p
//       * (|disc|^{n/2} for even rank)
Rat partial_mass(const GenusSym& G);

// Total mass = (h / 2^(t-1)) * partial mass, with h from the analytic
// class number formula h = w |B_{1,chi}| / 2.
Rat total_mass(const GenusSym& G);

// Analytic class number w |B_{1,chi}| / 2.
long analytic_class_number(const Field& F);

// The ideal-genus coset whose character vector matches eps.
std::vector<int> occurring_steinitz_classes(const GenusSym& G, const ClassGroup& CG);

// A lattice realizing the genus; postconditions (unimodular, parity,
// Steinitz coset, definiteness) are asserted.
HermLattice sample_lattice(const GenusSym& G, const ClassGroup& CG);

}  // namespace hermlat
