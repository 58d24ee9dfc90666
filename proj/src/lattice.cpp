#include "hermlat/lattice.hpp"

#include <algorithm>

namespace hermlat {

void check_lattice(const HermLattice& L) {
    if (L.rank <= 0) throw std::invalid_argument("lattice: rank must be positive");
    if (static_cast<int>(L.coeff_ideals.size()) != L.rank ||
        static_cast<int>(L.gram.size()) != L.rank)
        throw std::invalid_argument("lattice: shape mismatch");
    for (int i = 0; i < L.rank; ++i)
        for (int j = 0; j < L.rank; ++j)
            if (!(L.gram[i][j] == elem_conj(L.gram[j][i])))
                throw std::invalid_argument("lattice: Gram matrix is not hermitian");
    if (gram_det(L) == 0) throw std::invalid_argument("lattice: degenerate hermitian space");
}

namespace {

// Determinant over K by fraction-free-ish Gaussian elimination.
FieldElem elem_det(const Field& F, std::vector<std::vector<FieldElem>> m) {
    int n = static_cast<int>(m.size());
    FieldElem det{Rat(1), Rat(0)};
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return FieldElem{Rat(0), Rat(0)};
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = elem_scale(det, Rat(-1));
        }
        det = elem_mul(F, det, m[col][col]);
        FieldElem inv = elem_inv(F, m[col][col]);
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            FieldElem factor = elem_mul(F, m[r][col], inv);
            for (int c = col; c < n; ++c)
                m[r][c] = elem_sub(m[r][c], elem_mul(F, factor, m[col][c]));
        }
    }
    return det;
}

}  // namespace

Rat gram_det(const HermLattice& L) {
    FieldElem d = elem_det(L.field, L.gram);
    if (!d.is_rational()) throw std::logic_error("gram_det: hermitian determinant not rational");
    return d.x;
}

FracIdeal scale_ideal(const HermLattice& L) {
    const Field& F = L.field;
    bool have = false;
    FracIdeal acc;
    for (int i = 0; i < L.rank; ++i)
        for (int j = 0; j < L.rank; ++j) {
            if (L.gram[i][j].is_zero()) continue;
            FracIdeal piece = ideal_mul(F, L.coeff_ideals[i], ideal_conj(F, L.coeff_ideals[j]));
            piece = ideal_mul(F, piece, principal_ideal(F, L.gram[i][j]));
            acc = have ? ideal_add(F, acc, piece) : piece;
            have = true;
        }
    if (!have) throw std::logic_error("scale_ideal: zero form");
    return acc;
}

FracIdeal norm_ideal(const HermLattice& L) {
    // Generated by h(g, g) over the canonical Z-generators plus Tr(sL)*o;
    // cross terms of arbitrary vectors land in the trace part.
    const Field& F = L.field;
    FracIdeal acc = rational_ideal(F, ideal_trace_generator(F, scale_ideal(L)));
    for (int i = 0; i < L.rank; ++i) {
        if (L.gram[i][i].is_zero()) continue;
        for (const FieldElem& g : ideal_z_generators(F, L.coeff_ideals[i])) {
            Rat v = elem_norm(F, g) * L.gram[i][i].x;
            if (v != 0) acc = ideal_add(F, acc, rational_ideal(F, v));
        }
    }
    return acc;
}

FracIdeal volume_ideal(const HermLattice& L) {
    const Field& F = L.field;
    FracIdeal acc = principal_ideal(F, FieldElem(gram_det(L)));
    for (int i = 0; i < L.rank; ++i) {
        acc = ideal_mul(F, acc, L.coeff_ideals[i]);
        acc = ideal_mul(F, acc, ideal_conj(F, L.coeff_ideals[i]));
    }
    return acc;
}

bool is_unimodular(const HermLattice& L) {
    const Field& F = L.field;
    FracIdeal o = unit_ideal(F);
    return scale_ideal(L) == o && volume_ideal(L) == o;
}

Parity parity(const HermLattice& L) {
    const Field& F = L.field;
    FracIdeal n = norm_ideal(L);
    if (n == unit_ideal(F)) return Parity::odd;
    if (n == rational_ideal(F, Rat(2))) return Parity::even;
    throw std::domain_error("parity: lattice is not unimodular");
}

int steinitz_class(const HermLattice& L, const ClassGroup& CG) {
    FracIdeal prod = L.coeff_ideals[0];
    for (int i = 1; i < L.rank; ++i) prod = ideal_mul(L.field, prod, L.coeff_ideals[i]);
    return class_of_ideal(CG, prod);
}

bool is_definite(const HermLattice& L) {
    // Leading principal minors are conjugation-fixed, hence rational.
    for (int k = 1; k <= L.rank; ++k) {
        std::vector<std::vector<FieldElem>> sub(k, std::vector<FieldElem>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = L.gram[i][j];
        FieldElem d = elem_det(L.field, sub);
        if (!d.is_rational() || d.x <= 0) return false;
    }
    return true;
}

bool is_integral(const HermLattice& L) {
    return ideal_is_integral(scale_ideal(L));
}

HermLattice conjugate_lattice(const HermLattice& L) {
    HermLattice out = L;
    for (auto& I : out.coeff_ideals) I = ideal_conj(L.field, I);
    for (auto& row : out.gram)
        for (auto& e : row) e = elem_conj(e);
    return out;
}

HermLattice twist_lattice(const HermLattice& L, const FracIdeal& c) {
    HermLattice out = L;
    Rat n = ideal_norm(c);
    for (auto& I : out.coeff_ideals) I = ideal_mul(L.field, I, c);
    for (auto& row : out.gram)
        for (auto& e : row) e = elem_scale(e, 1 / n);
    return out;
}

HermLattice direct_sum(const HermLattice& L1, const HermLattice& L2) {
    if (!(L1.field == L2.field)) throw std::invalid_argument("direct_sum: field mismatch");
    HermLattice out;
    out.field = L1.field;
    out.rank = L1.rank + L2.rank;
    out.coeff_ideals = L1.coeff_ideals;
    out.coeff_ideals.insert(out.coeff_ideals.end(), L2.coeff_ideals.begin(),
                            L2.coeff_ideals.end());
    out.gram.assign(out.rank, std::vector<FieldElem>(out.rank));
    for (int i = 0; i < L1.rank; ++i)
        for (int j = 0; j < L1.rank; ++j) out.gram[i][j] = L1.gram[i][j];
    for (int i = 0; i < L2.rank; ++i)
        for (int j = 0; j < L2.rank; ++j) out.gram[L1.rank + i][L1.rank + j] = L2.gram[i][j];
    return out;
}

HermLattice construct_odd(const ClassGroup& CG, int n, int cls) {
    if (n < 1) throw std::invalid_argument("construct_odd: rank must be positive");
    const Field& F = CG.field;
    HermLattice L;
    L.field = F;
    L.rank = n;
    L.coeff_ideals.assign(n, unit_ideal(F));
    L.gram.assign(n, std::vector<FieldElem>(n));
    for (int i = 0; i < n; ++i) L.gram[i][i] = FieldElem(Rat(1));
    FracIdeal a = ideal_of_form(F, CG.forms[cls]);
    L.coeff_ideals[n - 1] = a;
    L.gram[n - 1][n - 1] = FieldElem(1 / ideal_norm(a));
    return L;
}

namespace {

// Binary even unimodular block o x1 + a x2 with Gram [[2, alpha],[conj, 2*lambda/m]],
// m = N(a) odd. The lambda for N(a) = 1 mod 4 uses (1 - D); with the printed
// (1 + D) the block has negative determinant and fails unimodularity.
HermLattice even_binary_block(const ClassGroup& CG, int cls) {
    const Field& F = CG.field;
    FracIdeal a = odd_norm_ideal_in_class(CG, cls);
    Int m = num(ideal_norm(a));
    FieldElem alpha;
    Int lambda;
    if (mpz_fdiv_ui(m.get_mpz_t(), 4) == 3) {
        alpha = FieldElem(Rat(1));
        lambda = (1 + m) / 4;
    } else {
        alpha = FieldElem{Rat(1), Rat(1)};  // 1 + sqrt(D)
        Int four_lambda = 1 + (1 - F.D) * m;
        if (four_lambda % 4 != 0)
            throw std::logic_error("even_binary_block: lambda not integral");
        lambda = four_lambda / 4;
    }
    HermLattice L;
    L.field = F;
    L.rank = 2;
    L.coeff_ideals = {unit_ideal(F), a};
    L.gram = {{FieldElem(Rat(2)), alpha},
              {elem_conj(alpha), FieldElem(make_rat(2 * lambda, m))}};
    return L;
}

// The free quaternary even lattice over Q(i).
HermLattice even_quaternary_gaussian(const ClassGroup& CG) {
    const Field& F = CG.field;
    HermLattice L;
    L.field = F;
    L.rank = 4;
    L.coeff_ideals.assign(4, unit_ideal(F));
    FieldElem z(Rat(0)), one(Rat(1)), two(Rat(2));
    FieldElem opi{Rat(1), Rat(1)}, omi{Rat(1), Rat(-1)};  // 1 + i, 1 - i
    L.gram = {{two, one, z, z},
              {one, two, opi, opi},
              {z, omi, two, one},
              {z, omi, one, two}};
    return L;
}

}  // namespace

HermLattice construct_even(const ClassGroup& CG, int n, int cls) {
    const Field& F = CG.field;
    if (F.disc % 2 != 0) throw EvenConstructError(EvenObstruction::even_needs_even_disc);
    if (n < 1 || n % 2 != 0) throw EvenConstructError(EvenObstruction::even_needs_even_rank);
    int fi = static_cast<int>(std::find(F.ramified_primes.begin(), F.ramified_primes.end(), 2L) -
                              F.ramified_primes.begin());
    long Dmod4 = ((F.D % 4) + 4) % 4;
    if (Dmod4 == 3) {
        int required = (n / 2) % 2 == 0 ? 1 : -1;
        if (CG.char_table[cls][fi] != required)
            throw EvenConstructError(EvenObstruction::symbol_obstruction);
    }

    if (Dmod4 == 2) {
        // blocks of binary even lattices, last one carrying the class
        HermLattice L = even_binary_block(CG, cls);
        int id = CG.principal();
        for (int k = 2; k < n; k += 2) L = direct_sum(even_binary_block(CG, id), L);
        return L;
    }

    // D = 3 mod 4 (so disc = 4 mod 8)
    if (CG.char_table[cls][fi] == -1) {
        // n = 4m + 2: pairs (cls, cls^-1) topped off with one cls block
        HermLattice L = even_binary_block(CG, cls);
        int icls = CG.inv(cls);
        for (int k = 2; k < n; k += 4)
            L = direct_sum(direct_sum(even_binary_block(CG, cls), even_binary_block(CG, icls)), L);
        return L;
    }
    // chi_2(cls) = +1, n = 4m
    if (F.disc == -4) {
        HermLattice L = even_quaternary_gaussian(CG);
        for (int k = 4; k < n; k += 4) L = direct_sum(even_quaternary_gaussian(CG), L);
        return L;
    }
    // pick a class with chi_2 = -1; one exists since disc is even, t >= 2
    int b = -1;
    for (int c = 0; c < CG.h; ++c)
        if (CG.char_table[c][fi] == -1) {
            b = c;
            break;
        }
    if (b < 0) throw std::logic_error("construct_even: no class with chi_2 = -1");
    int binv = CG.inv(b);
    HermLattice L = direct_sum(even_binary_block(CG, b),
                               even_binary_block(CG, CG.mul(binv, cls)));
    for (int k = 4; k < n; k += 4)
        L = direct_sum(direct_sum(even_binary_block(CG, b), even_binary_block(CG, binv)), L);
    return L;
}

ZGram trace_form(const HermLattice& L) {
    const Field& F = L.field;
    if (!is_integral(L)) throw std::domain_error("trace_form: lattice is not integral");
    int n = L.rank;
    ZGram Z;
    Z.dim = 2 * n;
    Z.gram.assign(Z.dim, std::vector<Int>(Z.dim, Int(0)));
    Z.omega_action.assign(Z.dim, std::vector<Int>(Z.dim, Int(0)));

    std::vector<std::vector<FieldElem>> zgens(n);
    for (int i = 0; i < n; ++i) zgens[i] = ideal_z_generators(F, L.coeff_ideals[i]);

    for (int i = 0; i < n; ++i)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < 2; ++l) {
                    FieldElem v =
                        elem_mul(F, elem_mul(F, zgens[i][k], elem_conj(zgens[j][l])), L.gram[i][j]);
                    Rat t = elem_trace(v);
                    if (den(t) != 1) throw std::logic_error("trace_form: non-integer entry");
                    Z.gram[2 * i + k][2 * j + l] = num(t);
                }

    // omega * (s a x_i) = -b (s a x_i) + a (s (b + omega) x_i)
    // omega * (s (b+omega) x_i) = (-N/a) (s a x_i) + (b + Tr(omega)) (s (b+omega) x_i)
    for (int i = 0; i < n; ++i) {
        const FracIdeal& I = L.coeff_ideals[i];
        Int Nq = omega_shift_norm(F, I.b) / I.a;
        Z.omega_action[2 * i][2 * i] = -I.b;
        Z.omega_action[2 * i + 1][2 * i] = I.a;
        Z.omega_action[2 * i][2 * i + 1] = -Nq;
        Z.omega_action[2 * i + 1][2 * i + 1] = I.b + omega_trace(F);
    }
    return Z;
}

Int zgram_det(const ZGram& Z) {
    // rational Gaussian elimination; the result is an integer for integral input
    int n = Z.dim;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(Z.gram[i][j]);
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Int(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    if (den(det) != 1) throw std::logic_error("zgram_det: non-integer determinant");
    return num(det);
}

}  // namespace hermlat
