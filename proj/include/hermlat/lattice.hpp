#pragma once

#include <vector>

#include "hermlat/class_group.hpp"

namespace hermlat {

enum class Parity { odd, even };

inline const char* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

// Pseudo-basis hermitian lattice  L = a_1 x_1 + ... + a_n x_n  with
// hermitian Gram matrix G_ij = h(x_i, x_j) over the field.
struct HermLattice {
    Field field;
    int rank = 0;
    std::vector<FracIdeal> coeff_ideals;
    std::vector<std::vector<FieldElem>> gram;
};

// Throws unless the Gram matrix is hermitian and nondegenerate.
void check_lattice(const HermLattice& L);

FracIdeal scale_ideal(const HermLattice& L);
FracIdeal norm_ideal(const HermLattice& L);
FracIdeal volume_ideal(const HermLattice& L);

bool is_unimodular(const HermLattice& L);
Parity parity(const HermLattice& L);  // requires unimodularity
int steinitz_class(const HermLattice& L, const ClassGroup& CG);
bool is_definite(const HermLattice& L);
bool is_integral(const HermLattice& L);  // h(L, L) in o

HermLattice conjugate_lattice(const HermLattice& L);
// The twist c*L living on (V, h / N(c)); Steinitz class moves by [c]^n.
HermLattice twist_lattice(const HermLattice& L, const FracIdeal& c);
HermLattice direct_sum(const HermLattice& L1, const HermLattice& L2);

// Sample odd unimodular lattice <1>^(n-1) _|_ (a, <1/N(a)>) of the class.
HermLattice construct_odd(const ClassGroup& CG, int n, int cls);

// Sample even unimodular lattice, when one exists. The obstruction names
// the violated existence condition.
enum class EvenObstruction { even_needs_even_disc, even_needs_even_rank, symbol_obstruction };

struct EvenConstructError : std::domain_error {
    EvenObstruction kind;
    explicit EvenConstructError(EvenObstruction k)
        : std::domain_error(k == EvenObstruction::even_needs_even_disc ? "EVEN_NEEDS_EVEN_DISC"
                            : k == EvenObstruction::even_needs_even_rank
                                ? "EVEN_NEEDS_EVEN_RANK"
                                : "SYMBOL_OBSTRUCTION"),
          kind(k) {}
};

HermLattice construct_even(const ClassGroup& CG, int n, int cls);

// Integral symmetric trace form Tr(h(.,.)) on the underlying rank-2n
// Z-module, together with the matrix of multiplication by omega.
struct ZGram {
    int dim = 0;
    std::vector<std::vector<Int>> gram;
    std::vector<std::vector<Int>> omega_action;
};

ZGram trace_form(const HermLattice& L);  // throws on non-integral lattices

Rat gram_det(const HermLattice& L);  // determinant of the hermitian Gram matrix
Int zgram_det(const ZGram& Z);

}  // namespace hermlat
