#include "hermlat/autgroup.hpp"

#include <algorithm>
#include <functional>

namespace hermlat {

namespace {

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num(r).get_mpz_t(), den(r).get_mpz_t());
    return q;
}

Int rat_round(const Rat& r) { return rat_floor(r + make_rat(1, 2)); }

}  // namespace

ShortVectorSet short_vectors(const ZGram& Z, const Int& bound) {
    int n = Z.dim;
    if (bound < 0) throw std::invalid_argument("short_vectors: negative bound");

    // A = R^T diag(d) R with R unit upper triangular (rational Cholesky).
    std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[i][j] = Rat(Z.gram[i][j]);
    std::vector<Rat> d(n);
    std::vector<std::vector<Rat>> R(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        d[i] = q[i][i];
        if (d[i] <= 0) throw std::invalid_argument("short_vectors: form is not positive definite");
        R[i][i] = 1;
        for (int j = i + 1; j < n; ++j) R[i][j] = q[i][j] / d[i];
        for (int k = i + 1; k < n; ++k)
            for (int l = i + 1; l < n; ++l) q[k][l] -= q[k][i] * q[i][l] / d[i];
    }

    ShortVectorSet out;
    out.bound = bound;
    std::vector<Int> x(n, Int(0));

    auto emit = [&]() {
        bool zero = true;
        int lead = 0;
        for (int i = 0; i < n; ++i)
            if (x[i] != 0) {
                zero = false;
                lead = sgn(x[i]);
                break;
            }
        if (zero || lead < 0) return;  // one representative per +/- pair
        Int norm(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) norm += x[i] * Z.gram[i][j] * x[j];
        out.vectors.emplace_back(x, norm);
    };

    // Coordinates are fixed from the last one down; each admissible window
    // is scanned outward from its real center, exactly.
    std::function<void(int, const Rat&)> descend = [&](int i, const Rat& budget) {
        if (i < 0) {
            emit();
            return;
        }
        Rat center(0);
        for (int j = i + 1; j < n; ++j) center += R[i][j] * Rat(x[j]);
        center = -center;
        auto weight = [&](const Int& v) -> Rat {
            Rat off = Rat(v) - center;
            return d[i] * off * off;
        };
        Int x0 = rat_floor(center);
        for (Int v = x0;; --v) {
            Rat w = weight(v);
            if (w > budget) break;
            x[i] = v;
            descend(i - 1, budget - w);
        }
        for (Int v = x0 + 1;; ++v) {
            Rat w = weight(v);
            if (w > budget) break;
            x[i] = v;
            descend(i - 1, budget - w);
        }
        x[i] = 0;
    };
    descend(n - 1, Rat(bound));
    std::sort(out.vectors.begin(), out.vectors.end());
    return out;
}

namespace {

using IMat = std::vector<std::vector<Int>>;
using IVec = std::vector<std::int64_t>;

IMat transform_gram(const IMat& G, const IMat& U) {
    int n = static_cast<int>(G.size());
    IMat out(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s(0);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) s += U[i][k] * G[k][l] * U[j][l];
            out[i][j] = s;
        }
    return out;
}

// Exact LLL (delta = 3/4) on an integral positive definite Gram matrix;
// returns the unimodular row transform. Gram-Schmidt data is recomputed
// from scratch per step, which is fine at these dimensions.
IMat lll_transform(const IMat& G) {
    int n = static_cast<int>(G.size());
    IMat U(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) U[i][i] = 1;

    std::vector<Rat> B(n);
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    auto recompute = [&]() {
        IMat C = transform_gram(G, U);
        for (int i = 0; i < n; ++i) {
            Rat b(C[i][i]);
            for (int j = 0; j < i; ++j) {
                Rat m(C[i][j]);
                for (int k = 0; k < j; ++k) m -= mu[i][k] * mu[j][k] * B[k];
                mu[i][j] = m / B[j];
                b -= mu[i][j] * mu[i][j] * B[j];
            }
            B[i] = b;
        }
    };

    recompute();
    int k = 1;
    while (k < n) {
        for (int j = k - 1; j >= 0; --j) {
            Int q = rat_round(mu[k][j]);
            if (q != 0) {
                for (int c = 0; c < n; ++c) U[k][c] -= q * U[j][c];
                recompute();
            }
        }
        if (B[k] + mu[k][k - 1] * mu[k][k - 1] * B[k - 1] >= make_rat(3, 4) * B[k - 1]) {
            ++k;
        } else {
            std::swap(U[k], U[k - 1]);
            recompute();
            k = std::max(k - 1, 1);
        }
    }
    return U;
}

std::vector<std::vector<Rat>> invert_unimodular(const IMat& U) {
    int n = static_cast<int>(U.size());
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n)), inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(U[i][j]);
        inv[i][i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (m[p][col] == 0) ++p;
        std::swap(m[p], m[col]);
        std::swap(inv[p], inv[col]);
        Rat piv = m[col][col];
        for (int j = 0; j < n; ++j) {
            m[col][j] /= piv;
            inv[col][j] /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::int64_t to_i64(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("unitary_aut_order: entry overflow");
    return x.get_si();
}

// Images of a K-basis subset of the Z-basis are searched; every other basis
// vector is a K-linear combination of those and its image is forced. The
// constructed maps are K-linear by definition, so they commute with the
// omega action; preserving the trace gram then makes them unitary.
struct AutSearch {
    int dim = 0;
    std::vector<IVec> T;  // reduced trace gram
    std::vector<IVec> J;  // omega action on the same basis

    struct Forcing {
        std::int64_t q = 1;       // q*f_k = sum coeff[p]*f_(free p) + jcoeff[p]*J f_(free p)
        IVec coeff, jcoeff;
    };
    std::vector<int> free_list;
    std::vector<char> is_free;
    std::vector<Forcing> forcing;
    std::vector<std::vector<IVec>> candidates;  // per free position

    std::vector<IVec> images;    // image of basis vector k, pushed in k order
    std::vector<IVec> t_images;  // T * image
    std::vector<IVec> j_images;  // J * image, for free positions only
    std::int64_t count = 0;

    IVec mat_apply(const std::vector<IVec>& M, const IVec& v) const {
        IVec r(dim, 0);
        for (int i = 0; i < dim; ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < dim; ++j) s += M[i][j] * v[j];
            r[i] = s;
        }
        return r;
    }

    static std::int64_t dot(const IVec& u, const IVec& v) {
        std::int64_t s = 0;
        for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
        return s;
    }

    bool push_image(int k, IVec w) {
        for (size_t idx = 0; idx < images.size(); ++idx)
            if (dot(w, t_images[idx]) != T[k][idx]) return false;
        IVec tw = mat_apply(T, w);
        if (dot(w, tw) != T[k][k]) return false;
        images.push_back(std::move(w));
        t_images.push_back(std::move(tw));
        return true;
    }

    void pop_image() {
        images.pop_back();
        t_images.pop_back();
    }

    void search(int k, int next_free) {
        if (k == dim) {
            ++count;
            return;
        }
        if (is_free[k]) {
            for (const IVec& cand : candidates[next_free]) {
                if (!push_image(k, cand)) continue;
                j_images.push_back(mat_apply(J, images.back()));
                search(k + 1, next_free + 1);
                j_images.pop_back();
                pop_image();
            }
            return;
        }
        const Forcing& fc = forcing[k];
        IVec w(dim, 0);
        for (int pos = 0; pos < next_free; ++pos) {
            const IVec& img = images[free_list[pos]];
            for (int c = 0; c < dim; ++c)
                w[c] += fc.coeff[pos] * img[c] + fc.jcoeff[pos] * j_images[pos][c];
        }
        for (int c = 0; c < dim; ++c) {
            if (w[c] % fc.q != 0) return;
            w[c] /= fc.q;
        }
        if (!push_image(k, std::move(w))) return;
        search(k + 1, next_free);
        pop_image();
    }
};

}  // namespace

std::int64_t unitary_aut_order(const HermLattice& L) {
    if (L.rank > 6 || L.field.abs_disc() > 400)
        throw std::domain_error("unitary_aut_order: guard exceeded (rank <= 6, |disc| <= 400)");
    if (!is_definite(L)) throw std::domain_error("unitary_aut_order: lattice is not definite");
    ZGram Z = trace_form(L);
    int dim = Z.dim;

    IMat U = lll_transform(Z.gram);
    IMat G = transform_gram(Z.gram, U);
    // omega action in coordinates of the new row basis: (U^T)^-1 J U^T
    auto Uinv = invert_unimodular(U);
    IMat Jr(dim, std::vector<Int>(dim, Int(0)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Rat s(0);
            for (int k = 0; k < dim; ++k)
                for (int l = 0; l < dim; ++l)
                    s += Uinv[k][i] * Rat(Z.omega_action[k][l]) * Rat(U[j][l]);
            if (den(s) != 1) throw std::logic_error("unitary_aut_order: omega transport failed");
            Jr[i][j] = num(s);
        }

    AutSearch S;
    S.dim = dim;
    S.T.assign(dim, IVec(dim));
    S.J.assign(dim, IVec(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            S.T[i][j] = to_i64(G[i][j]);
            S.J[i][j] = to_i64(Jr[i][j]);
        }

    // Greedy K-basis extraction: rows span the rational column space of
    // the chosen (f_i, J f_i); each row remembers its expansion.
    S.is_free.assign(dim, 0);
    S.forcing.assign(dim, {});
    std::vector<std::vector<Rat>> span, span_expr;
    auto eliminate = [&](std::vector<Rat> v, std::vector<Rat> expr, bool insert) {
        for (size_t r = 0; r < span.size(); ++r) {
            int lead = -1;
            for (int c = 0; c < dim; ++c)
                if (span[r][c] != 0) {
                    lead = c;
                    break;
                }
            if (lead < 0 || v[lead] == 0) continue;
            Rat f = v[lead] / span[r][lead];
            for (int c = 0; c < dim; ++c) v[c] -= f * span[r][c];
            expr.resize(std::max(expr.size(), span_expr[r].size()), Rat(0));
            for (size_t c = 0; c < span_expr[r].size(); ++c) expr[c] -= f * span_expr[r][c];
        }
        bool reduced_to_zero = true;
        for (int c = 0; c < dim; ++c)
            if (v[c] != 0) reduced_to_zero = false;
        if (insert && !reduced_to_zero) {
            span.push_back(std::move(v));
            span_expr.push_back(std::move(expr));
        }
        return std::make_pair(reduced_to_zero, expr);
    };
    for (int k = 0; k < dim; ++k) {
        std::vector<Rat> unit(dim, Rat(0));
        unit[k] = 1;
        size_t nf = S.free_list.size();
        auto [in_span, expr] = eliminate(unit, std::vector<Rat>(2 * nf, Rat(0)), false);
        if (in_span) {
            // f_k = -expr over the stored rows; clear denominators
            AutSearch::Forcing fc;
            fc.coeff.assign(nf, 0);
            fc.jcoeff.assign(nf, 0);
            expr.resize(2 * nf, Rat(0));
            Int q(1);
            for (auto& e : expr) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), den(e).get_mpz_t());
            fc.q = to_i64(q);
            for (size_t pos = 0; pos < nf; ++pos) {
                fc.coeff[pos] = to_i64(num(-expr[2 * pos] * Rat(q)));
                fc.jcoeff[pos] = to_i64(num(-expr[2 * pos + 1] * Rat(q)));
            }
            S.forcing[k] = std::move(fc);
            continue;
        }
        S.is_free[k] = 1;
        size_t pos = S.free_list.size();
        S.free_list.push_back(k);
        std::vector<Rat> e1(2 * (pos + 1), Rat(0)), e2(2 * (pos + 1), Rat(0));
        e1[2 * pos] = 1;
        e2[2 * pos + 1] = 1;
        eliminate(unit, std::move(e1), true);
        std::vector<Rat> jcol(dim);
        for (int c = 0; c < dim; ++c) jcol[c] = Rat(Jr[c][k]);
        eliminate(std::move(jcol), std::move(e2), true);
    }

    Int max_free_diag(0);
    for (int k : S.free_list) max_free_diag = std::max(max_free_diag, G[k][k]);
    ZGram reduced;
    reduced.dim = dim;
    reduced.gram = G;
    reduced.omega_action = Jr;
    ShortVectorSet svs = short_vectors(reduced, max_free_diag);

    S.candidates.assign(S.free_list.size(), {});
    for (size_t pos = 0; pos < S.free_list.size(); ++pos) {
        std::int64_t want = S.T[S.free_list[pos]][S.free_list[pos]];
        for (auto& [vec, norm] : svs.vectors) {
            if (norm != want) continue;
            IVec v(dim), neg(dim);
            for (int c = 0; c < dim; ++c) {
                v[c] = to_i64(vec[c]);
                neg[c] = -v[c];
            }
            S.candidates[pos].push_back(std::move(v));
            S.candidates[pos].push_back(std::move(neg));
        }
    }
    S.search(0, 0);
    return S.count;
}

}  // namespace hermlat
