#include <doctest.h>

#include <set>

#include "hermlat/ideal.hpp"

using namespace hermlat;

namespace {

// Independent splitting oracle for odd unramified p: squares mod p.
int legendre_brute(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    for (long x = 1; x < p; ++x)
        if (x * x % p == a) return 1;
    return -1;
}

// Independent 2-adic Hilbert oracle: (a,b)_2 = 1 iff z^2 = a x^2 + b y^2 has
// a primitive 2-adic solution, decided mod 2^11 for small inputs.
int hilbert2_brute(long a, long b) {
    const long M = 1 << 11;
    std::vector<char> odd_square(M, 0), any_square(M, 0);
    for (long z = 0; z < M; ++z) {
        any_square[z * z % M] = 1;
        if (z % 2) odd_square[z * z % M] = 1;
    }
    auto form = [&](long x, long y) {
        long v = (a % M * (x * x % M) + b % M * (y * y % M)) % M;
        return v < 0 ? v + M : v;
    };
    for (long x = 0; x < M; ++x)
        for (long y = 0; y < M; ++y) {
            long v = form(x, y);
            if ((x % 2) || (y % 2) ? any_square[v] : odd_square[v]) return 1;
        }
    return -1;
}

}  // namespace

TEST_CASE("field construction") {
    Field F = make_field(-47);
    CHECK(F.disc == -47);
    CHECK(F.ramified_count == 1);
    CHECK(F.unit_count == 2);
    CHECK(F.omega_mode == OmegaMode::half);

    Field G = make_field(-1);
    CHECK(G.disc == -4);
    CHECK(G.ramified_count == 1);
    CHECK(G.unit_count == 4);

    Field H = make_field(-213);
    CHECK(H.disc == -852);
    CHECK(H.ramified_primes == std::vector<long>({2, 3, 71}));
    CHECK(H.ramified_count == 3);

    CHECK(make_field(-3).unit_count == 6);
    CHECK_THROWS_AS(make_field(-4), std::invalid_argument);  // not squarefree
    CHECK_THROWS_AS(make_field(-12), std::invalid_argument);
    CHECK_THROWS_AS(make_field(5), std::invalid_argument);
    CHECK_THROWS_AS(make_field(0), std::invalid_argument);
}

TEST_CASE("field character chi") {
    CHECK(chi(make_field(-1), 2) == 0);   // disc = 0 mod 4
    CHECK(chi(make_field(-7), 2) == 1);   // -7 = 1 mod 8
    CHECK(chi(make_field(-3), 2) == -1);  // -3 = 5 mod 8
}

TEST_CASE("splitting examples and chi agreement") {
    CHECK(splitting_type(make_field(-1), 2) == Splitting::ramified);
    Field F47 = make_field(-47);
    CHECK(splitting_type(F47, 2) == Splitting::split);  // -47 = 1 mod 8
    CHECK(splitting_type(F47, 5) == Splitting::inert);
    CHECK(legendre_brute(-47, 5) == -1);

    for (long a = 3; a <= 500; ++a) {
        if (!is_fundamental_discriminant(-a)) continue;
        long D = a % 4 == 0 ? -a / 4 : -a;
        Field F = make_field(D);
        for (long p = 2; p < 100; ++p) {
            if (!is_prime(p)) continue;
            int c = chi(F, p);
            Splitting s = splitting_type(F, p);
            CHECK(s ==
                  (c == 0 ? Splitting::ramified : c == -1 ? Splitting::inert : Splitting::split));
            if (p != 2 && c != 0) CHECK(c == legendre_brute(F.disc, p));
        }
    }
}

TEST_CASE("element arithmetic") {
    Field F = make_field(-5);
    FieldElem u{Rat(1), Rat(1)};  // 1 + sqrt(-5)
    CHECK(elem_conj(u) == FieldElem{Rat(1), Rat(-1)});
    CHECK(elem_norm(F, u) == 6);
    CHECK(elem_trace(u) == 2);
    CHECK(elem_mul(F, u, elem_inv(F, u)) == FieldElem(Rat(1)));

    Field H = make_field(-47);
    CHECK(elem_trace(omega(H)) == 1);
    CHECK(elem_is_integral(H, omega(H)));
    CHECK(!elem_is_integral(H, FieldElem{make_rat(1, 2), Rat(0)}));
    CHECK(elem_is_integral(H, FieldElem{make_rat(3, 2), make_rat(1, 2)}));

    CHECK(elem_is_integral(F, u));
    CHECK(!elem_is_integral(F, FieldElem{make_rat(1, 2), make_rat(1, 2)}));
}

TEST_CASE("hilbert symbol pinned values") {
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), 2) == -1);
    CHECK(hilbert_symbol(Rat(-1), Rat(3), 2) == -1);
    CHECK(hilbert_symbol(Rat(2), Rat(-5), 2) == -1);
    // -1 is not a 2-adic norm from Q(sqrt(-2)): x^2 + 2y^2 = -1 has no
    // solution mod 8, and the product formula forces the sign.
    CHECK(hilbert_symbol(Rat(-1), Rat(-2), 2) == -1);
    for (long p : {2L, 3L, 5L, 47L})
        for (long b : {-7L, -1L, 2L, 15L}) CHECK(hilbert_symbol(Rat(1), Rat(b), p) == 1);
    CHECK_THROWS_AS(hilbert_symbol(Rat(0), Rat(1), 2), std::invalid_argument);

    // cross-check the 2-adic case against solvability
    for (long a : {-1L, 2L, -2L, 3L, -5L, 6L})
        for (long b : {-1L, 2L, -2L, 3L, -5L, 7L})
            CHECK(hilbert_symbol(Rat(a), Rat(b), 2) == hilbert2_brute(a, b));
}

TEST_CASE("hilbert symbol bilinearity and product formula") {
    std::vector<long> vals = {-10, -5, -3, -2, -1, 2, 3, 5, 6, 7, 15};
    std::vector<long> ps = {2, 3, 5, 7, 11, 47};
    for (long a : vals)
        for (long a2 : vals)
            for (long b : vals)
                for (long p : ps)
                    CHECK(hilbert_symbol(Rat(a * a2), Rat(b), p) ==
                          hilbert_symbol(Rat(a), Rat(b), p) * hilbert_symbol(Rat(a2), Rat(b), p));
    // product over all places is +1; only primes dividing 2ab contribute
    for (long a : vals)
        for (long b : vals) {
            int prod = hilbert_symbol_infinity(Rat(a), Rat(b));
            for (long p = 2; p <= 200; ++p)
                if (is_prime(p)) prod *= hilbert_symbol(Rat(a), Rat(b), p);
            CHECK(prod == 1);
        }
}

TEST_CASE("norm residue symbol") {
    Field F5 = make_field(-5);
    CHECK(norm_residue_symbol(F5, Rat(2), 2) == -1);
    Field F2 = make_field(-2);
    CHECK(norm_residue_symbol(F2, Rat(-1), 2) == -1);
    for (long p : {2L, 3L, 5L, 7L}) {
        CHECK(norm_residue_symbol(F5, make_rat(9, 4), p) == 1);
        CHECK(norm_residue_symbol(F2, Rat(49), p) == 1);
    }
}

TEST_CASE("ideal arithmetic") {
    Field F = make_field(-5);
    FracIdeal o = unit_ideal(F);
    CHECK(ideal_mul(F, o, o) == o);

    // p2 = [2, 1 + sqrt(-5)] is the ramified prime above 2
    FracIdeal p2 = ideal_from_two_generators(F, FieldElem(Rat(2)), FieldElem{Rat(1), Rat(1)});
    CHECK(ideal_norm(p2) == 2);
    FracIdeal p2sq = ideal_mul(F, p2, p2);
    CHECK(p2sq == rational_ideal(F, Rat(2)));

    // membership oracle for the product
    CHECK(ideal_contains(F, p2sq, FieldElem(Rat(2))));
    CHECK(ideal_contains(F, p2sq, elem_scale(omega(F), Rat(2))));
    CHECK(!ideal_contains(F, p2sq, FieldElem(Rat(1))));
    CHECK(!ideal_contains(F, p2sq, FieldElem{Rat(1), Rat(1)}));

    CHECK(ideal_mul(F, p2, ideal_conj(F, p2)) == rational_ideal(F, ideal_norm(p2)));
    CHECK(ideal_mul(F, p2, ideal_inv(F, p2)) == o);
    CHECK_THROWS_AS(principal_ideal(F, FieldElem(Rat(0))), std::domain_error);
}

TEST_CASE("ideal properties on sampled inputs") {
    for (long D : {-1L, -2L, -5L, -23L, -47L, -213L}) {
        Field F = make_field(D);
        std::vector<FracIdeal> samples;
        for (long a = 1; a <= 40; ++a)
            for (Int b(0); b < a; ++b)
                if (omega_shift_norm(F, b) % a == 0) samples.push_back({Rat(1), Int(a), b});
        for (size_t i = 0; i < samples.size(); i += 7)
            for (size_t j = i; j < samples.size(); j += 11) {
                const FracIdeal& I = samples[i];
                const FracIdeal& J = samples[j];
                CHECK(ideal_mul(F, I, ideal_conj(F, I)) == rational_ideal(F, ideal_norm(I)));
                CHECK(ideal_norm(ideal_mul(F, I, J)) == ideal_norm(I) * ideal_norm(J));
                CHECK(ideal_normalize(F, I.s, I.a, I.b) == I);  // idempotent
            }
    }
}

TEST_CASE("trace ideal generator") {
    Field F = make_field(-47);  // Tr(o) = Z for odd disc
    CHECK(ideal_trace_generator(F, unit_ideal(F)) == 1);
    Field G = make_field(-2);  // Tr(o) = 2Z for even disc
    CHECK(ideal_trace_generator(G, unit_ideal(G)) == 2);
}
