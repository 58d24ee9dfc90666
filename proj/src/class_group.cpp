#include "hermlat/class_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hermlat {

namespace {

Int mod_pos(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int gcd3(const Int& a, const Int& b, const Int& c) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

Int form_disc(const QuadForm& f) { return f.b * f.b - 4 * f.a * f.c; }

void check_form(const Field& F, const QuadForm& f) {
    if (f.a <= 0) throw std::invalid_argument("form: leading coefficient must be positive");
    if (form_disc(f) != F.disc) throw std::invalid_argument("form: wrong discriminant");
    if (gcd3(f.a, f.b, f.c) != 1) throw std::invalid_argument("form: not primitive");
}

// b normalized into (-a, a].
void normalize_form(const Field& F, QuadForm& f) {
    Int two_a = 2 * f.a;
    Int b = mod_pos(f.b + f.a, two_a) - f.a;  // in [-a, a)
    if (b == -f.a) b = f.a;
    f.b = b;
    f.c = (f.b * f.b - F.disc) / (4 * f.a);
}

}  // namespace

bool form_is_reduced(const QuadForm& f) {
    Int ab = abs(f.b);
    if (!(f.a > 0 && ab <= f.a && f.a <= f.c)) return false;
    if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

QuadForm reduce_form(const Field& F, QuadForm f) {
    check_form(F, f);
    normalize_form(F, f);
    while (f.a > f.c || (f.a == f.c && f.b < 0)) {
        f = {f.c, -f.b, f.a};
        normalize_form(F, f);
    }
    return f;
}

QuadForm principal_form(const Field& F) {
    if (F.disc % 2 == 0) return {Int(1), Int(0), Int(-F.disc / 4)};
    return {Int(1), Int(1), Int((1 - F.disc) / 4)};
}

FracIdeal ideal_of_form(const Field& F, const QuadForm& f) {
    // inverse of form_of_ideal: beta + omega = (b + sqrt(disc))/2, so that
    // the two correspondence maps compose to the identity on classes
    Int beta = (F.omega_mode == OmegaMode::half) ? Int((f.b - 1) / 2) : Int(f.b / 2);
    return ideal_normalize(F, Rat(1), f.a, mod_pos(beta, f.a));
}

namespace {

QuadForm form_of_ideal(const Field& F, const FracIdeal& I) {
    Int a = I.a;
    Int b = 2 * I.b + omega_trace(F);
    Int c = omega_shift_norm(F, I.b) / I.a;
    return reduce_form(F, {a, b, c});
}

}  // namespace

QuadForm compose(const Field& F, const QuadForm& f, const QuadForm& g) {
    check_form(F, f);
    check_form(F, g);
    return form_of_ideal(F, ideal_mul(F, ideal_of_form(F, f), ideal_of_form(F, g)));
}

QuadForm form_inverse(const Field& F, const QuadForm& f) {
    return reduce_form(F, {f.a, -f.b, f.c});
}

int ClassGroup::principal() const {
    QuadForm p = principal_form(field);
    auto it = std::lower_bound(forms.begin(), forms.end(), p);
    return static_cast<int>(it - forms.begin());
}

int ClassGroup::inv(int i) const {
    QuadForm g = form_inverse(field, forms[i]);
    auto it = std::lower_bound(forms.begin(), forms.end(), g);
    return static_cast<int>(it - forms.begin());
}

int ClassGroup::pow(int i, long e) const {
    int id = principal();
    long m = e >= 0 ? e : -e;
    int base = e >= 0 ? i : inv(i);
    int acc = id;
    while (m > 0) {
        if (m & 1) acc = mul(acc, base);
        base = mul(base, base);
        m >>= 1;
    }
    return acc;
}

long ClassGroup::order_of(int i) const {
    int id = principal();
    int x = i;
    long k = 1;
    while (x != id) {
        x = mul(x, i);
        ++k;
    }
    return k;
}

long ClassGroup::exponent() const {
    long e = 1;
    for (int i = 0; i < static_cast<int>(forms.size()); ++i)
        e = std::lcm(e, order_of(i));
    return e;
}

bool ClassGroup::is_two_elementary() const {
    for (int i = 0; i < static_cast<int>(forms.size()); ++i)
        if (order_of(i) > 2) return false;
    return true;
}

int ClassGroup::class_by_name(const std::string& word) const {
    for (int i = 0; i < static_cast<int>(class_names.size()); ++i)
        if (class_names[i] == word) return i;
    return -1;
}

namespace {

std::vector<QuadForm> reduced_forms(const Field& F) {
    std::vector<QuadForm> out;
    long ad = F.abs_disc();
    for (long b = (ad % 2); 3 * b * b <= ad; b += 2) {
        Int ac = (Int(b) * b + ad) / 4;
        for (Int a = std::max<long>(b, 1); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            Int c = ac / a;
            QuadForm f{a, Int(b), c};
            if (gcd3(f.a, f.b, f.c) != 1) continue;
            out.push_back(f);
            if (b > 0 && b < a && a < c) out.push_back({a, Int(-b), c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string exponent_word(const std::vector<long>& exps) {
    static const char letters[] = "abcdefgh";
    std::string w;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!w.empty()) w += "*";
        w += letters[i];
        if (exps[i] > 1) w += "^" + std::to_string(exps[i]);
    }
    return w.empty() ? "1" : w;
}

}  // namespace

ClassGroup assemble_class_group(const Field& F, std::vector<QuadForm> forms) {
    ClassGroup CG;
    CG.field = F;
    CG.forms = std::move(forms);
    CG.h = static_cast<long>(CG.forms.size());

    std::map<QuadForm, int> index;
    for (int i = 0; i < CG.h; ++i) index[CG.forms[i]] = i;

    CG.mul_table.assign(CG.h, std::vector<int>(CG.h, 0));
    for (int i = 0; i < CG.h; ++i) {
        FracIdeal I = ideal_of_form(F, CG.forms[i]);
        for (int j = i; j < CG.h; ++j) {
            QuadForm p = form_of_ideal(F, ideal_mul(F, I, ideal_of_form(F, CG.forms[j])));
            int k = index.at(p);
            CG.mul_table[i][j] = k;
            CG.mul_table[j][i] = k;
        }
    }

    // Invariant factors by greedy maximal order in the successive quotients,
    // with generators corrected to stay independent of the part already built.
    int id = CG.principal();
    std::vector<int> subgroup = {id};
    std::vector<char> in_sub(CG.h, 0);
    in_sub[id] = 1;
    std::vector<long> divisors_desc;
    std::vector<int> gens_desc;
    while (static_cast<long>(subgroup.size()) < CG.h) {
        auto quot_order = [&](int c) {
            long k = 1;
            int x = c;
            while (!in_sub[x]) {
                x = CG.mul(x, c);
                ++k;
            }
            return k;
        };
        int best = -1;
        long best_ord = 0;
        for (int c = 0; c < CG.h; ++c) {
            long k = quot_order(c);
            if (k > best_ord) {
                best_ord = k;
                best = c;
            }
        }
        int adj = -1;
        for (int s : subgroup) {
            int cand = CG.mul(best, s);
            if (CG.order_of(cand) == best_ord) {
                adj = cand;
                break;
            }
        }
        if (adj < 0) throw std::logic_error("class group: generator adjustment failed");
        gens_desc.push_back(adj);
        divisors_desc.push_back(best_ord);
        std::vector<int> bigger;
        for (int s : subgroup)
            for (long e = 0; e < best_ord; ++e) bigger.push_back(CG.mul(s, CG.pow(adj, e)));
        std::sort(bigger.begin(), bigger.end());
        bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
        subgroup = std::move(bigger);
        for (int s : subgroup) in_sub[s] = 1;
    }
    CG.generators.assign(gens_desc.rbegin(), gens_desc.rend());
    CG.elementary_divisors.assign(divisors_desc.rbegin(), divisors_desc.rend());

    // Names are words in the generators, largest-order generator first.
    CG.class_names.assign(CG.h, "");
    size_t k = gens_desc.size();
    std::vector<long> exps(k, 0);
    for (;;) {
        int cls = id;
        for (size_t i = 0; i < k; ++i) cls = CG.mul(cls, CG.pow(gens_desc[i], exps[i]));
        if (!CG.class_names[cls].empty())
            throw std::logic_error("class group: generators not independent");
        CG.class_names[cls] = exponent_word(exps);
        size_t i = 0;
        while (i < k && ++exps[i] == divisors_desc[i]) exps[i++] = 0;
        if (i == k) break;
    }
    return CG;
}

ClassGroup enumerate_classes(const Field& F) {
    ClassGroup CG = assemble_class_group(F, reduced_forms(F));
    CG.char_table.assign(CG.h, {});
    for (int c = 0; c < CG.h; ++c)
        for (long p : F.ramified_primes) CG.char_table[c].push_back(genus_character(CG, p, c));
    return CG;
}

int class_of_form(const ClassGroup& CG, const QuadForm& f) {
    QuadForm r = reduce_form(CG.field, f);
    auto it = std::lower_bound(CG.forms.begin(), CG.forms.end(), r);
    if (it == CG.forms.end() || !(*it == r)) throw std::logic_error("class_of_form: unknown form");
    return static_cast<int>(it - CG.forms.begin());
}

int class_of_ideal(const ClassGroup& CG, const FracIdeal& I) {
    return class_of_form(CG, form_of_ideal(CG.field, I));
}

Int represented_value(const ClassGroup& CG, int cls, const std::function<bool(const Int&)>& ok,
                      int limit) {
    const QuadForm& f = CG.forms[cls];
    for (int radius = 0; radius <= 2 * limit; ++radius) {
        for (int x = -std::min(radius, limit); x <= std::min(radius, limit); ++x) {
            int yr = radius - std::abs(x);
            if (yr > limit) continue;
            for (int y : (yr == 0 ? std::vector<int>{0} : std::vector<int>{-yr, yr})) {
                Int m = f.a * x * x + f.b * x * y + f.c * y * y;
                if (m > 0 && ok(m)) return m;
            }
        }
    }
    throw std::logic_error("represented_value: search exhausted (bug)");
}

int genus_character(const ClassGroup& CG, long p, int cls) {
    const Field& F = CG.field;
    if (F.disc % p != 0) throw std::invalid_argument("genus_character: p not ramified");
    Int two_disc = 2 * Int(F.abs_disc());
    Int m = represented_value(CG, cls, [&](const Int& v) {
        Int g;
        mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), two_disc.get_mpz_t());
        return g == 1;
    });
    return hilbert_symbol(Rat(m), Rat(F.D), p);
}

std::vector<std::vector<int>> ideal_genus_cosets(const ClassGroup& CG) {
    std::map<std::vector<int>, std::vector<int>> blocks;
    for (int c = 0; c < CG.h; ++c) blocks[CG.char_table[c]].push_back(c);
    std::vector<std::vector<int>> out;
    auto principal_row = CG.char_table[CG.principal()];
    out.push_back(blocks.at(principal_row));
    blocks.erase(principal_row);
    std::vector<std::vector<int>> rest;
    for (auto& [row, cls] : blocks) rest.push_back(cls);
    std::sort(rest.begin(), rest.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

bool same_ideal_genus(const ClassGroup& CG, int c1, int c2) {
    bool by_chars = CG.char_table[c1] == CG.char_table[c2];
    int q = CG.mul(c1, CG.inv(c2));
    auto squares = power_subgroup(CG, 2);
    bool by_squares = std::binary_search(squares.begin(), squares.end(), q);
    if (by_chars != by_squares)
        throw std::logic_error("same_ideal_genus: character and square tests disagree");
    return by_chars;
}

std::vector<int> power_subgroup(const ClassGroup& CG, long n) {
    if (n < 1) throw std::invalid_argument("power_subgroup: n must be positive");
    std::set<int> s;
    for (int c = 0; c < CG.h; ++c) s.insert(CG.pow(c, n));
    return {s.begin(), s.end()};
}

EqualityGuarantee equality_guarantee(const ClassGroup& CG, long n) {
    if (n < 1) throw std::invalid_argument("equality_guarantee: rank must be positive");
    if (std::gcd(n, CG.h) == 1 || n <= 3) return EqualityGuarantee::all_classes;
    if (std::gcd(n, CG.exponent()) <= 2 || CG.is_two_elementary())
        return EqualityGuarantee::within_ideal_genus;
    return EqualityGuarantee::none;
}

std::string to_string(EqualityGuarantee g) {
    switch (g) {
        case EqualityGuarantee::all_classes: return "ALL_CLASSES";
        case EqualityGuarantee::within_ideal_genus: return "WITHIN_IDEAL_GENUS";
        case EqualityGuarantee::rank_le_3_all: return "RANK_LE_3_ALL";
        case EqualityGuarantee::none: return "NONE";
    }
    return "?";
}

FracIdeal odd_norm_ideal_in_class(const ClassGroup& CG, int cls) {
    const Field& F = CG.field;
    long ad = F.abs_disc();
    for (long m = 1; m <= 16 * ad + 16; m += 2) {
        if (std::gcd(m, ad) != 1) continue;
        for (Int beta(0); beta < m; ++beta) {
            if (omega_shift_norm(F, beta) % m != 0) continue;
            FracIdeal I{Rat(1), Int(m), beta};
            if (class_of_ideal(CG, I) == cls) return I;
        }
    }
    throw std::logic_error("odd_norm_ideal_in_class: search exhausted (bug)");
}

}  // namespace hermlat
