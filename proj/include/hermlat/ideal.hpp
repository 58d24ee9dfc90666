#pragma once

#include <vector>

#include "hermlat/field.hpp"

namespace hermlat {

// Fractional ideal in two-generator Hermite normal form,
//
//     I = s * ( a Z + (b + omega) Z ),   s > 0 rational, 0 <= b < a,
//
// with a | N(b + omega) so the Z-module is an o-module. Primitive integral
// ideals have s = 1; a rational multiple r*o is (s=r, a=1, b=0). The scale
// has to be a full rational: an integer-denominator-only form cannot
// represent non-primitive ideals such as 2o. N(I) = s^2 * a.
struct FracIdeal {
    Rat s;
    Int a;
    Int b;

    bool operator==(const FracIdeal& o) const { return s == o.s && a == o.a && b == o.b; }
};

FracIdeal unit_ideal(const Field& F);
FracIdeal rational_ideal(const Field& F, const Rat& r);  // r * o

// o-module generated by a list of field elements (the module closure under
// multiplication by omega is taken internally). Throws on the zero module.
FracIdeal ideal_from_generators(const Field& F, const std::vector<FieldElem>& gens);
FracIdeal ideal_from_two_generators(const Field& F, const FieldElem& u, const FieldElem& v);
FracIdeal principal_ideal(const Field& F, const FieldElem& u);

FracIdeal ideal_mul(const Field& F, const FracIdeal& I, const FracIdeal& J);
FracIdeal ideal_add(const Field& F, const FracIdeal& I, const FracIdeal& J);  // I + J
FracIdeal ideal_conj(const Field& F, const FracIdeal& I);
FracIdeal ideal_inv(const Field& F, const FracIdeal& I);
FracIdeal ideal_scale(const Field& F, const FracIdeal& I, const Rat& r);
Rat ideal_norm(const FracIdeal& I);

bool ideal_is_integral(const FracIdeal& I);
bool ideal_contains(const Field& F, const FracIdeal& I, const FieldElem& u);

// The two canonical Z-generators s*a and s*(b + omega).
std::vector<FieldElem> ideal_z_generators(const Field& F, const FracIdeal& I);

// Positive generator g of the Z-ideal Tr(I) = g Z.
Rat ideal_trace_generator(const Field& F, const FracIdeal& I);

// Renormalizes a raw (s, a, b) triple; used by tests to check idempotence.
FracIdeal ideal_normalize(const Field& F, const Rat& s, const Int& a, const Int& b);

}  // namespace hermlat
