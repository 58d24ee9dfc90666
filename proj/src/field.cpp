#include "hermlat/field.hpp"

#include <algorithm>
#include <cstdlib>

namespace hermlat {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

bool is_square_free(long n) {
    n = std::labs(n);
    if (n == 0) return false;
    for (long q = 2; q * q <= n; ++q) {
        if (n % (q * q) == 0) return false;
        while (n % q == 0) n /= q;
    }
    return true;
}

std::vector<long> prime_factors(long n) {
    n = std::labs(n);
    std::vector<long> out;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Field make_field(long D) {
    if (D >= 0) throw std::invalid_argument("make_field: D must be negative");
    if (!is_square_free(D)) throw std::invalid_argument("make_field: D must be squarefree");
    Field F;
    F.D = D;
    long Dmod4 = ((D % 4) + 4) % 4;
    if (Dmod4 == 1) {
        F.disc = D;
        F.omega_mode = OmegaMode::half;
    } else {
        F.disc = 4 * D;
        F.omega_mode = OmegaMode::root;
    }
    F.ramified_primes = prime_factors(F.disc);
    std::sort(F.ramified_primes.begin(), F.ramified_primes.end());
    F.ramified_count = static_cast<int>(F.ramified_primes.size());
    F.unit_count = (F.disc == -3) ? 6 : (F.disc == -4) ? 4 : 2;
    return F;
}

bool is_fundamental_discriminant(long d) {
    if (d >= 0) return false;
    long m = ((d % 4) + 4) % 4;
    if (m == 1) return is_square_free(d);
    if (m == 0) {
        long q = d / 4;
        long qm = ((q % 4) + 4) % 4;
        return (qm == 2 || qm == 3) && is_square_free(q);
    }
    return false;
}

std::vector<long> fundamental_discriminants(long bound) {
    std::vector<long> out;
    for (long a = 3; a <= bound; ++a)
        if (is_fundamental_discriminant(-a)) out.push_back(-a);
    return out;
}

int chi(const Field& F, long p) {
    if (!is_prime(p)) throw std::invalid_argument("chi: p must be prime");
    if (p == 2) {
        long m8 = ((F.disc % 8) + 8) % 8;
        if (m8 % 4 == 0) return 0;
        if (m8 == 1) return 1;
        return -1;  // disc = 5 mod 8
    }
    Int d(F.disc), q(p);
    return mpz_kronecker(d.get_mpz_t(), q.get_mpz_t());
}

int chi_ext(const Field& F, const Int& a) {
    Int d(F.disc);
    return mpz_kronecker(d.get_mpz_t(), a.get_mpz_t());
}

Splitting splitting_type(const Field& F, long p) {
    int c = chi(F, p);
    if (c == 0) return Splitting::ramified;
    return c == -1 ? Splitting::inert : Splitting::split;
}

namespace {

// a = p^val * unit with the unit returned as a pair (r, s) of p-free
// integers standing for r/s.
void split_valuation(const Rat& a, long p, long& val, Int& r, Int& s) {
    r = num(a);
    s = den(a);
    val = 0;
    Int P(p);
    while (r % P == 0) { r /= P; ++val; }
    while (s % P == 0) { s /= P; --val; }
}

int legendre_of_unit(const Int& r, const Int& s, long p) {
    Int rs = r * s;  // (1/s | p) = (s | p) for s prime to p
    Int P(p);
    return mpz_kronecker(rs.get_mpz_t(), P.get_mpz_t());
}

long mod8(const Int& x) { return mpz_fdiv_ui(x.get_mpz_t(), 8); }

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, long p) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    if (!is_prime(p)) throw std::invalid_argument("hilbert_symbol: p must be prime");
    long alpha, beta;
    Int ru, su, rv, sv;
    split_valuation(a, p, alpha, ru, su);
    split_valuation(b, p, beta, rv, sv);
    alpha &= 1;
    beta &= 1;
    if (p != 2) {
        int sign = 1;
        if (alpha && beta && (p % 4 == 3)) sign = -sign;
        if (beta) sign *= legendre_of_unit(ru, su, p);
        if (alpha) sign *= legendre_of_unit(rv, sv, p);
        return sign;
    }
    // p = 2: units mod 8 decide; for odd s, 1/s = s mod 8.
    long u = (mod8(ru) * mod8(su)) % 8;
    long v = (mod8(rv) * mod8(sv)) % 8;
    long eps_u = ((u - 1) / 2) & 1, eps_v = ((v - 1) / 2) & 1;
    long om_u = ((u * u - 1) / 8) & 1, om_v = ((v * v - 1) / 8) & 1;
    long e = eps_u * eps_v + alpha * om_v + beta * om_u;
    return (e & 1) ? -1 : 1;
}

int hilbert_symbol_infinity(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    return (a < 0 && b < 0) ? -1 : 1;
}

int norm_residue_symbol(const Field& F, const Rat& alpha, long p) {
    return hilbert_symbol(alpha, Rat(F.D), p);
}

FieldElem elem_add(const FieldElem& u, const FieldElem& v) { return {u.x + v.x, u.y + v.y}; }
FieldElem elem_sub(const FieldElem& u, const FieldElem& v) { return {u.x - v.x, u.y - v.y}; }

FieldElem elem_mul(const Field& F, const FieldElem& u, const FieldElem& v) {
    // (x1 + y1 s)(x2 + y2 s) = x1 x2 + D y1 y2 + (x1 y2 + x2 y1) s
    return {u.x * v.x + Rat(F.D) * u.y * v.y, u.x * v.y + u.y * v.x};
}

FieldElem elem_conj(const FieldElem& u) { return {u.x, -u.y}; }

Rat elem_norm(const Field& F, const FieldElem& u) { return u.x * u.x - Rat(F.D) * u.y * u.y; }

Rat elem_trace(const FieldElem& u) { return 2 * u.x; }

FieldElem elem_inv(const Field& F, const FieldElem& u) {
    Rat n = elem_norm(F, u);
    if (n == 0) throw std::domain_error("elem_inv: zero element");
    return {u.x / n, -u.y / n};
}

FieldElem elem_scale(const FieldElem& u, const Rat& r) { return {u.x * r, u.y * r}; }

bool elem_is_integral(const Field& F, const FieldElem& u) {
    if (F.omega_mode == OmegaMode::root)
        return den(u.x) == 1 && den(u.y) == 1;
    Rat tx = 2 * u.x, ty = 2 * u.y;
    if (den(tx) != 1 || den(ty) != 1) return false;
    return (num(tx) - num(ty)) % 2 == 0;
}

FieldElem omega(const Field& F) {
    if (F.omega_mode == OmegaMode::root) return {Rat(0), Rat(1)};
    return {make_rat(1, 2), make_rat(1, 2)};
}

long omega_trace(const Field& F) { return F.omega_mode == OmegaMode::root ? 0 : 1; }

Int omega_shift_norm(const Field& F, const Int& b) {
    if (F.omega_mode == OmegaMode::root) return b * b - F.D;
    return b * b + b + (1 - F.D) / 4;
}

}  // namespace hermlat
