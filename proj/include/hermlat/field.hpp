#pragma once

#include <vector>

#include "hermlat/rational.hpp"

namespace hermlat {

enum class OmegaMode {
    half,  // D = 1 mod 4, ring of integers Z[(1+sqrt(D))/2]
    root,  // D = 2,3 mod 4, ring of integers Z[sqrt(D)]
};

enum class Splitting { ramified, inert, split };

// An imaginary-quadratic field Q(sqrt(D)), D < 0 squarefree.
struct Field {
    long D = 0;          // squarefree radicand
    long disc = 0;       // fundamental discriminant: D or 4D
    OmegaMode omega_mode = OmegaMode::root;
    std::vector<long> ramified_primes;  // ascending, the prime divisors of disc
    int ramified_count = 0;             // t
    int unit_count = 0;                 // w = |o^*|: 6 at disc -3, 4 at -4, else 2

    long abs_disc() const { return -disc; }
    bool operator==(const Field& o) const { return D == o.D; }
};

Field make_field(long D);

bool is_square_free(long n);
bool is_prime(long n);
std::vector<long> prime_factors(long n);

// Enumerates fundamental discriminants d < 0 with |d| <= bound, by |d| ascending.
std::vector<long> fundamental_discriminants(long bound);
bool is_fundamental_discriminant(long d);

// The quadratic character attached to the field, on primes.
int chi(const Field& F, long p);
// Completely multiplicative extension chi_K(a) = Kronecker(disc | a), a >= 1.
int chi_ext(const Field& F, const Int& a);

Splitting splitting_type(const Field& F, long p);

// p-adic Hilbert symbol (a,b)_p for nonzero rationals, p prime.
int hilbert_symbol(const Rat& a, const Rat& b, long p);
// Hilbert symbol at the real place: -1 iff both arguments negative.
int hilbert_symbol_infinity(const Rat& a, const Rat& b);

// Local norm residue symbol (alpha, K/Q)_p = (alpha, D)_p.
int norm_residue_symbol(const Field& F, const Rat& alpha, long p);

// Element x + y*sqrt(D), stored over the basis {1, sqrt(D)} regardless of
// omega_mode; integrality is a predicate, not a representation constraint.
struct FieldElem {
    Rat x, y;

    FieldElem() : x(0), y(0) {}
    FieldElem(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
    explicit FieldElem(const Rat& r) : x(r), y(0) {}

    bool operator==(const FieldElem& o) const { return x == o.x && y == o.y; }
    bool is_zero() const { return x == 0 && y == 0; }
    bool is_rational() const { return y == 0; }
};

FieldElem elem_add(const FieldElem& u, const FieldElem& v);
FieldElem elem_sub(const FieldElem& u, const FieldElem& v);
FieldElem elem_mul(const Field& F, const FieldElem& u, const FieldElem& v);
FieldElem elem_conj(const FieldElem& u);
Rat elem_norm(const Field& F, const FieldElem& u);   // u * conj(u)
Rat elem_trace(const FieldElem& u);                  // u + conj(u)
FieldElem elem_inv(const Field& F, const FieldElem& u);
FieldElem elem_scale(const FieldElem& u, const Rat& r);
bool elem_is_integral(const Field& F, const FieldElem& u);

// The canonical integral generator: sqrt(D) or (1+sqrt(D))/2.
FieldElem omega(const Field& F);
// Tr(omega): 0 in root mode, 1 in half mode.
long omega_trace(const Field& F);
// N(b + omega) as an exact rational (integer for integer b).
Int omega_shift_norm(const Field& F, const Int& b);

}  // namespace hermlat
