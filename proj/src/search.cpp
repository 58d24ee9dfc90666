#include "hermlat/search.hpp"

#include <algorithm>

namespace hermlat {

namespace {

// rational upper bound on pi, for the (2*pi)^j denominators
const Rat kPiHigh = make_rat(Int("314159265358979324"), Int("100000000000000000"));

// Certified zeta bounds from a partial sum plus the integral tail estimate:
// sum_{k<=K} k^-j  <=  zeta(j)  <=  sum_{k<=K} k^-j + K^(1-j)/(j-1).
Rat zeta_low(int j) {
    Rat s(0);
    for (long k = 1; k <= 24; ++k) s += make_rat(Int(1), int_pow(Int(k), j));
    return s;
}

Rat zeta_high(int j) {
    return zeta_low(j) + make_rat(Int(1), int_pow(Int(24), j - 1) * (j - 1));
}

int unit_count_for(long d) { return d == 3 ? 6 : d == 4 ? 4 : 2; }

// Rational lower bound on d^(e/4) with a millionth of headroom.
Rat fourth_root_power_low(long d, long e) {
    Int scaled = int_pow(Int(d), e) * int_pow(Int(10), 24);
    Int root = int_root(scaled, 4);
    return make_rat(root, int_pow(Int(10), 6));
}

long bit_length(long d) {
    long bits = 0;
    while (d > 0) {
        ++bits;
        d >>= 1;
    }
    return bits;
}

}  // namespace

Rat mass_lower_bound(int n, long d, int t_bound) {
    if (n < 2) throw std::invalid_argument("mass_lower_bound: rank must be >= 2");
    if (d < 3) throw std::invalid_argument("mass_lower_bound: d must be >= 3");
    Rat f = make_rat(1, unit_count_for(d));
    f *= fourth_root_power_low(d, n * (static_cast<long>(n) + 1) - 2);
    Int fact(1);
    for (int j = 2; j <= n; ++j) {
        fact *= (j - 1);
        f *= Rat(fact) / rat_pow(2 * kPiHigh, j);
    }
    // L(j, chi^j): even j contribute zeta(j) exactly (bounded below), odd j
    // are bounded below by 1/zeta(j).
    for (int j = 2; j <= n; ++j)
        f *= (j % 2 == 0) ? zeta_low(j) : 1 / zeta_high(j);
    if (n % 2 == 0) {
        // lambda product bound 2^-n (2^(n/2)-1) / (t+1)^(n/2)
        long t_plus_1 = t_bound >= 0 ? t_bound + 1 : bit_length(d) + 1;
        Rat lam = Rat(int_pow(Int(2), n / 2) - 1) / Rat(int_pow(Int(2), n));
        lam /= Rat(int_pow(Int(t_plus_1), n / 2));
        f *= lam;
    }
    return f;
}

namespace {

bool has_candidate_mass(long abs_disc, int n) {
    long D = abs_disc % 4 == 0 ? -abs_disc / 4 : -abs_disc;
    Field F = make_field(D);
    for (const GenusSym& G : list_genera(F, n))
        if (G.rank == n && is_one_over_even(partial_mass(G))) return true;
    return false;
}

}  // namespace

DmaxInfo d_max_info(int n) {
    DmaxInfo info;
    // the analytic bound is monotone apart from bit-length steps, so scan
    // until it stays above 1/w for a long stretch
    const long kCap = 1 << 14;
    long last_ok = 0;
    long misses = 0;
    for (long d = 3; d <= kCap && misses < 256; ++d) {
        Rat f = mass_lower_bound(n, d);
        if (f <= make_rat(1, unit_count_for(d))) {
            last_ok = d;
            misses = 0;
        } else {
            ++misses;
        }
    }
    info.crude = last_ok;
    info.refined = 3;
    for (long d = info.crude; d >= 3; --d) {
        if (!is_fundamental_discriminant(-d)) continue;
        if (has_candidate_mass(d, n)) {
            info.refined = d;
            break;
        }
    }
    return info;
}

long d_max(int n) { return d_max_info(n).refined; }

std::vector<Candidate> candidates(int n, Parity parity) {
    if (n < 2) throw std::invalid_argument("candidates: rank must be >= 2");
    long bound = d_max(n);
    std::vector<Candidate> out;
    for (long disc : fundamental_discriminants(bound)) {
        long D = disc % 4 == 0 ? disc / 4 : disc;
        Field F = make_field(D);
        for (const GenusSym& G : list_genera(F, n)) {
            if (G.parity != parity) continue;
            Rat m = partial_mass(G);
            if (is_one_over_even(m)) out.push_back({-disc, G, m});
        }
    }
    return out;
}

bool certify(const GenusSym& G, const ClassGroup& CG) {
    Rat m = partial_mass(G);
    if (!is_one_over_even(m)) return false;
    return m * Rat(unitary_aut_order(sample_lattice(G, CG))) == 1;
}

std::vector<SearchRow> SearchReport::certified() const {
    std::vector<SearchRow> out;
    for (const auto& r : rows)
        if (r.certified) out.push_back(r);
    return out;
}

namespace {

// One certification attempt; fills a report row. Returns whether the genus
// certified, so callers know to continue the rank ascent.
bool attempt(SearchReport& report, const GenusSym& G, const ClassGroup& CG) {
    SearchRow row;
    row.abs_disc = G.field.abs_disc();
    row.parity = G.parity;
    row.rank = G.rank;
    row.eps = G.eps;
    row.mass = partial_mass(G);
    row.candidate = is_one_over_even(row.mass);
    if (row.candidate) {
        row.aut_order = unitary_aut_order(sample_lattice(G, CG));
        row.certified = row.mass * Rat(row.aut_order) == 1;
    }
    report.rows.push_back(row);
    return row.certified;
}

}  // namespace

SearchReport full_search() {
    SearchReport report;
    report.d_max_used[2] = d_max_info(2);
    report.d_max_used[4] = d_max_info(4);

    for (long disc : fundamental_discriminants(
             std::max(report.d_max_used[2].refined, report.d_max_used[4].refined))) {
        long ad = -disc;
        long D = disc % 4 == 0 ? disc / 4 : disc;
        Field F = make_field(D);
        ClassGroup CG = enumerate_classes(F);
        bool in2 = ad <= report.d_max_used[2].refined;
        bool in4 = ad <= report.d_max_used[4].refined;

        for (const GenusSym& seed : list_genera(F, 2)) {
            // odd lines: seed at rank 2, ascend by a free <1> summand
            if (seed.parity == Parity::odd) {
                if (!in2) continue;
                for (int n = 2;; ++n) {
                    GenusSym G{F, Parity::odd, n, seed.eps};
                    if (!attempt(report, G, CG)) break;
                }
                continue;
            }
            // even lines seeded at rank 2. Over disc = 0 mod 8 every even
            // rank exists and the ascent steps by the principal even binary
            // lattice; over disc = 4 mod 8 the coset fixes the rank mod 4,
            // so the ascent steps by the free quaternary lattice.
            if (!in2) continue;
            int step = ((ad % 8) + 8) % 8 == 0 ? 2 : 4;
            for (int n = 2;; n += step) {
                GenusSym G{F, Parity::even, n, seed.eps};
                if (!attempt(report, G, CG)) break;
            }
        }

        // even lines over disc = 4 mod 8 move in steps of the free
        // quaternary even lattice; cosets split by the rank mod 4 they admit
        if (((ad % 8) + 8) % 8 == 4) {
            int t = F.ramified_count;
            for (long mask = 0; mask < (1L << t); ++mask) {
                std::vector<int> eps(t);
                int prod = 1;
                for (int i = 0; i < t; ++i) {
                    eps[i] = (mask >> i) & 1 ? -1 : 1;
                    prod *= eps[i];
                }
                if (prod != 1) continue;
                int start = exists_genus(F, Parity::even, 2, eps) ? 2 : 4;
                if (start == 2) continue;  // handled as a rank-2 seed above
                if (!in4 || !exists_genus(F, Parity::even, 4, eps)) continue;
                for (int n = 4;; n += 4) {
                    GenusSym G{F, Parity::even, n, eps};
                    if (!attempt(report, G, CG)) break;
                }
            }
        }
    }

    std::sort(report.rows.begin(), report.rows.end(), [](const SearchRow& a, const SearchRow& b) {
        if (a.abs_disc != b.abs_disc) return a.abs_disc < b.abs_disc;
        if (a.parity != b.parity) return a.parity == Parity::odd;
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.eps < b.eps;
    });
    return report;
}

}  // namespace hermlat
