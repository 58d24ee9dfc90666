#pragma once

#include <map>

#include "hermlat/autgroup.hpp"
#include "hermlat/genus.hpp"

namespace hermlat {

// Certified rational lower bound on the partial mass of any rank-n genus
// over a field with |disc| = d. t_bound < 0 uses the generic bound
// t <= log2(d); a nonnegative t_bound substitutes the actual count of
// ramified primes. Rigorous: zeta factors and powers of pi are replaced by
// rational bounds rounded in the safe direction.
Rat mass_lower_bound(int n, long d, int t_bound = -1);

struct DmaxInfo {
    long crude = 0;    // largest d with mass_lower_bound(n, d) <= 1/w(d)
    long refined = 0;  // largest fundamental |disc| <= crude admitting a
                       // rank-n genus of partial mass 1/(2m); 3 if none
};

DmaxInfo d_max_info(int n);
long d_max(int n);  // the refined bound

struct Candidate {
    long abs_disc = 0;
    GenusSym genus;
    Rat mass;
};

// All genera of the given rank and parity over fundamental |disc| <= d_max(n)
// whose partial mass has the single-class shape 1/(2m).
std::vector<Candidate> candidates(int n, Parity parity);

// True iff partial_mass(G) * |U(sample)| == 1. Non-candidates are false
// without running the automorphism search.
bool certify(const GenusSym& G, const ClassGroup& CG);

struct SearchRow {
    long abs_disc = 0;
    Parity parity = Parity::odd;
    int rank = 0;
    std::vector<int> eps;
    Rat mass;                    // partial mass
    bool candidate = false;      // mass of the form 1/(2m)
    bool certified = false;
    std::int64_t aut_order = 0;  // 0 when the search was not run
};

struct SearchReport {
    std::vector<SearchRow> rows;          // every certification attempt, sorted
    std::map<int, DmaxInfo> d_max_used;   // seed bounds, keyed by rank
    std::vector<SearchRow> certified() const;
};

// Reproduces the classification of single-class partial genera of rank >= 2:
// rank-2 seeds for both parities (plus rank-4 even seeds), then rank ascent
// while certification succeeds. Ascent soundness comes from cancellation:
// L -> L _|_ M is injective on classes, so a failed rank prunes the line.
SearchReport full_search();

}  // namespace hermlat
