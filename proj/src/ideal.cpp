#include "hermlat/ideal.hpp"

#include <utility>

namespace hermlat {

namespace {

// Coordinates of an element over the integral basis {1, omega}.
struct OmegaCoord {
    Rat u, v;
};

OmegaCoord to_omega_coords(const Field& F, const FieldElem& e) {
    if (F.omega_mode == OmegaMode::root) return {e.x, e.y};
    return {e.x - e.y, 2 * e.y};  // sqrt(D) = 2*omega - 1
}

FieldElem from_omega_coords(const Field& F, const Rat& u, const Rat& v) {
    if (F.omega_mode == OmegaMode::root) return {u, v};
    return {u + v / 2, v / 2};
}

// omega * (u + v*omega) in {1, omega} coordinates.
std::pair<Rat, Rat> omega_mul_coords(const Field& F, const Rat& u, const Rat& v) {
    if (F.omega_mode == OmegaMode::root) return {Rat(F.D) * v, u};
    Rat c0 = make_rat(1 - F.D, 4);
    return {-c0 * v, u + v};
}

Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int mod_pos(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Hermite form of the Z-span of integer pairs, as g1*Z*(1,0) + Z*(w1,g2).
void pair_hnf(std::vector<std::pair<Int, Int>> pairs, Int& g1, Int& w1, Int& g2) {
    Int s1(0), s2(0);  // running second-coordinate gcd vector (s1, s2)
    std::vector<Int> firsts;
    for (auto& [U, V] : pairs) {
        if (V == 0) {
            firsts.push_back(U);
            continue;
        }
        if (s2 == 0) {
            s1 = U;
            s2 = V;
            continue;
        }
        Int g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), s2.get_mpz_t(), V.get_mpz_t());
        Int n1 = x * s1 + y * U;
        // the combination killed off becomes a pure first coordinate
        firsts.push_back((V / g) * s1 - (s2 / g) * U);
        s1 = n1;
        s2 = g;
    }
    if (s2 == 0) throw std::domain_error("ideal: degenerate (rank < 2) module");
    if (s2 < 0) { s1 = -s1; s2 = -s2; }
    g1 = 0;
    for (auto& f : firsts) g1 = gcd_int(g1, f);
    if (g1 == 0) throw std::domain_error("ideal: degenerate (rank < 2) module");
    if (g1 < 0) g1 = -g1;
    w1 = s1;
    g2 = s2;
}

FracIdeal from_coord_list(const Field& F, const std::vector<OmegaCoord>& coords) {
    Int M(1);
    for (auto& c : coords) {
        M = lcm_int(M, den(c.u));
        M = lcm_int(M, den(c.v));
    }
    std::vector<std::pair<Int, Int>> pairs;
    pairs.reserve(coords.size());
    for (auto& c : coords) {
        Rat u = c.u * M, v = c.v * M;
        pairs.emplace_back(num(u), num(v));
    }
    Int g1, w1, g2;
    pair_hnf(std::move(pairs), g1, w1, g2);
    if (g1 % g2 != 0 || w1 % g2 != 0)
        throw std::logic_error("ideal: module is not omega-stable");
    FracIdeal I;
    I.a = g1 / g2;
    I.b = mod_pos(w1 / g2, I.a);
    I.s = make_rat(g2, M);
    if (omega_shift_norm(F, I.b) % I.a != 0)
        throw std::logic_error("ideal: normal form fails a | N(b + omega)");
    return I;
}

}  // namespace

FracIdeal unit_ideal(const Field&) { return {Rat(1), Int(1), Int(0)}; }

FracIdeal rational_ideal(const Field&, const Rat& r) {
    if (r == 0) throw std::domain_error("rational_ideal: zero");
    return {rat_abs(r), Int(1), Int(0)};
}

FracIdeal ideal_from_generators(const Field& F, const std::vector<FieldElem>& gens) {
    std::vector<OmegaCoord> coords;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        auto c = to_omega_coords(F, g);
        auto wc = omega_mul_coords(F, c.u, c.v);
        coords.push_back(c);
        coords.push_back({wc.first, wc.second});
    }
    if (coords.empty()) throw std::domain_error("ideal: zero module");
    return from_coord_list(F, coords);
}

FracIdeal ideal_from_two_generators(const Field& F, const FieldElem& u, const FieldElem& v) {
    return ideal_from_generators(F, {u, v});
}

FracIdeal principal_ideal(const Field& F, const FieldElem& u) {
    return ideal_from_generators(F, {u});
}

std::vector<FieldElem> ideal_z_generators(const Field& F, const FracIdeal& I) {
    FieldElem g1 = from_omega_coords(F, I.s * Rat(I.a), Rat(0));
    FieldElem g2 = from_omega_coords(F, I.s * Rat(I.b), I.s);
    return {g1, g2};
}

FracIdeal ideal_mul(const Field& F, const FracIdeal& I, const FracIdeal& J) {
    auto gi = ideal_z_generators(F, I);
    auto gj = ideal_z_generators(F, J);
    std::vector<FieldElem> prods;
    for (auto& u : gi)
        for (auto& v : gj) prods.push_back(elem_mul(F, u, v));
    return ideal_from_generators(F, prods);
}

FracIdeal ideal_add(const Field& F, const FracIdeal& I, const FracIdeal& J) {
    auto gi = ideal_z_generators(F, I);
    auto gj = ideal_z_generators(F, J);
    gi.insert(gi.end(), gj.begin(), gj.end());
    return ideal_from_generators(F, gi);
}

FracIdeal ideal_conj(const Field& F, const FracIdeal& I) {
    auto g = ideal_z_generators(F, I);
    return ideal_from_generators(F, {elem_conj(g[0]), elem_conj(g[1])});
}

FracIdeal ideal_inv(const Field& F, const FracIdeal& I) {
    return ideal_scale(F, ideal_conj(F, I), 1 / ideal_norm(I));
}

FracIdeal ideal_scale(const Field&, const FracIdeal& I, const Rat& r) {
    if (r == 0) throw std::domain_error("ideal_scale: zero");
    return {I.s * rat_abs(r), I.a, I.b};
}

Rat ideal_norm(const FracIdeal& I) { return I.s * I.s * Rat(I.a); }

bool ideal_is_integral(const FracIdeal& I) {
    // Both Z-generators have integer {1, omega} coordinates iff s in Z.
    return den(I.s) == 1;
}

bool ideal_contains(const Field& F, const FracIdeal& I, const FieldElem& u) {
    auto c = to_omega_coords(F, u);
    Rat q = c.v / I.s;
    if (den(q) != 1) return false;
    Rat p = (c.u / I.s - Rat(I.b) * q) / Rat(I.a);
    return den(p) == 1;
}

Rat ideal_trace_generator(const Field& F, const FracIdeal& I) {
    Int g = gcd_int(2 * I.a, 2 * I.b + omega_trace(F));
    return I.s * Rat(g);
}

FracIdeal ideal_normalize(const Field& F, const Rat& s, const Int& a, const Int& b) {
    if (s == 0 || a == 0) throw std::domain_error("ideal_normalize: degenerate");
    FieldElem g1 = from_omega_coords(F, rat_abs(s) * Rat(a), Rat(0));
    FieldElem g2 = from_omega_coords(F, rat_abs(s) * Rat(b), rat_abs(s));
    return ideal_from_generators(F, {g1, g2});
}

}  // namespace hermlat
