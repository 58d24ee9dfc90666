#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermlat {

// Exact arithmetic carriers. Every mass, Bernoulli value and lattice
// invariant in this library is an Int or a Rat; no floating point is used
// on any correctness-critical path.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0^negative");
        return make_rat(int_pow(den(base), -e), int_pow(num(base), -e));
    }
    return make_rat(int_pow(num(base), e), int_pow(den(base), e));
}

// Floor of the k-th root.
inline Int int_root(const Int& x, unsigned long k) {
    if (x < 0) throw std::domain_error("int_root: negative radicand");
    Int r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

inline std::string rat_str(const Rat& r) {
    if (den(r) == 1) return num(r).get_str();
    return num(r).get_str() + "/" + den(r).get_str();
}

inline Rat rat_from_str(const std::string& s) {
    auto slash = s.find('/');
    Rat r;
    if (slash == std::string::npos) {
        r = Rat(Int(s));
    } else {
        r = make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }
    return r;
}

// Masses of single-class partial genera are reciprocals of even group
// orders, so the candidate filter below is "numerator 1, denominator even".
inline bool is_one_over_even(const Rat& r) {
    return r > 0 && num(r) == 1 && den(r) % 2 == 0;
}

}  // namespace hermlat
