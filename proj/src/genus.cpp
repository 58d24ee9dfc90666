#include "hermlat/genus.hpp"

#include <algorithm>

namespace hermlat {

namespace {

int index_of_two(const Field& F) {
    auto it = std::find(F.ramified_primes.begin(), F.ramified_primes.end(), 2L);
    return it == F.ramified_primes.end() ? -1
                                         : static_cast<int>(it - F.ramified_primes.begin());
}

}  // namespace

bool exists_genus(const Field& F, Parity parity, int n, const std::vector<int>& eps) {
    if (n < 1) throw std::invalid_argument("exists_genus: rank must be positive");
    if (eps.size() != F.ramified_primes.size())
        throw std::invalid_argument("exists_genus: eps length mismatch");
    int prod = 1;
    for (int e : eps) prod *= e;
    if (prod != 1) throw std::invalid_argument("exists_genus: eps must multiply to +1");
    if (parity == Parity::odd) return true;
    if (F.disc % 2 != 0) return false;
    if (n % 2 != 0) return false;
    long Dmod4 = ((F.D % 4) + 4) % 4;
    if (Dmod4 == 3) {
        int required = (n / 2) % 2 == 0 ? 1 : -1;
        return eps[index_of_two(F)] == required;
    }
    return true;
}

std::vector<GenusSym> list_genera(const Field& F, int n) {
    if (n < 1) throw std::invalid_argument("list_genera: rank must be positive");
    int t = F.ramified_count;
    std::vector<GenusSym> out;
    for (long mask = 0; mask < (1L << t); ++mask) {
        std::vector<int> eps(t);
        int prod = 1;
        for (int i = 0; i < t; ++i) {
            eps[i] = (mask >> i) & 1 ? -1 : 1;
            prod *= eps[i];
        }
        if (prod != 1) continue;
        out.push_back({F, Parity::odd, n, eps});
        if (exists_genus(F, Parity::even, n, eps)) out.push_back({F, Parity::even, n, eps});
    }
    std::stable_sort(out.begin(), out.end(), [](const GenusSym& a, const GenusSym& b) {
        return (a.parity == Parity::odd) > (b.parity == Parity::odd);
    });
    return out;
}

Rat lambda_p(const GenusSym& G, long p) {
    const Field& F = G.field;
    auto it = std::find(F.ramified_primes.begin(), F.ramified_primes.end(), p);
    if (it == F.ramified_primes.end()) throw std::invalid_argument("lambda_p: p not ramified");
    int eps = G.eps[it - F.ramified_primes.begin()];
    int n = G.rank;
    if (n % 2 != 0) return Rat(1);

    if (p != 2) {
        // 1 + eps * ((-1)^((p-1)/2) * p)^(-n/2); the symbol is evaluated at p
        long sign = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
        Rat term = make_rat(Int(eps), int_pow(Int(sign * p), n / 2));
        return 1 + term;
    }
    if (G.parity == Parity::odd) return 1 - make_rat(Int(1), int_pow(Int(2), n));
    long disc_mod8 = ((F.disc % 8) + 8) % 8;
    if (disc_mod8 == 4) return make_rat(Int(2), int_pow(Int(2), n));  // 2^(1-n)
    // disc = 0 mod 8: 2^-n * (1 + eps * ((-1)^((D-2)/4) * 2)^(-n/2))
    long sign = ((F.D - 2) / 4) % 2 == 0 ? 1 : -1;
    Rat inner = 1 + make_rat(Int(eps), int_pow(Int(sign * 2), n / 2));
    return inner / Rat(int_pow(Int(2), n));
}

Rat partial_mass(const GenusSym& G) {
    const Field& F = G.field;
    if (!exists_genus(F, G.parity, G.rank, G.eps))
        throw std::domain_error("partial_mass: genus does not exist");
    Rat mass = make_rat(1, F.unit_count);
    for (int j = 2; j <= G.rank; ++j) mass *= rat_abs(gen_bernoulli(F, j)) / Rat(2 * j);
    for (long p : F.ramified_primes) mass *= lambda_p(G, p);
    if (G.rank % 2 == 0) mass *= Rat(int_pow(Int(F.abs_disc()), G.rank / 2));
    return mass;
}

long analytic_class_number(const Field& F) {
    Rat h = Rat(F.unit_count) * rat_abs(gen_bernoulli(F, 1)) / 2;
    if (den(h) != 1) throw std::logic_error("analytic_class_number: non-integer value");
    return num(h).get_si();
}

Rat total_mass(const GenusSym& G) {
    const Field& F = G.field;
    Rat ratio = make_rat(Int(analytic_class_number(F)), int_pow(Int(2), F.ramified_count - 1));
    return ratio * partial_mass(G);
}

std::vector<int> occurring_steinitz_classes(const GenusSym& G, const ClassGroup& CG) {
    std::vector<int> out;
    for (int c = 0; c < CG.h; ++c)
        if (CG.char_table[c] == G.eps) out.push_back(c);
    return out;
}

HermLattice sample_lattice(const GenusSym& G, const ClassGroup& CG) {
    auto classes = occurring_steinitz_classes(G, CG);
    if (classes.empty()) throw std::logic_error("sample_lattice: empty ideal genus coset");
    int cls = classes.front();
    HermLattice L = G.parity == Parity::odd ? construct_odd(CG, G.rank, cls)
                                            : construct_even(CG, G.rank, cls);
    if (!is_unimodular(L) || parity(L) != G.parity || !is_definite(L) ||
        steinitz_class(L, CG) != cls)
        throw std::logic_error("sample_lattice: constructed lattice fails its invariants");
    return L;
}

}  // namespace hermlat
