// Acceptance suite: recomputes every published reference value and sweeps
// the structural laws of the library. One line per criterion; exit status
// is the number of failed criteria.

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <tuple>

#include "hermlat/search.hpp"

using namespace hermlat;

namespace {

int failures = 0;

void line(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Field field_of_disc(long disc) { return make_field(disc % 4 == 0 ? disc / 4 : disc); }

std::map<long, ClassGroup> group_cache;

const ClassGroup& group(long disc) {
    auto it = group_cache.find(disc);
    if (it == group_cache.end())
        it = group_cache.emplace(disc, enumerate_classes(field_of_disc(disc))).first;
    return it->second;
}

using MassPair = std::pair<std::string, std::string>;  // partial, total

bool masses_match(long disc, int n, Parity parity, std::multiset<MassPair> expect) {
    std::multiset<MassPair> got;
    for (auto& G : list_genera(field_of_disc(disc), n))
        if (G.parity == parity) got.insert({rat_str(partial_mass(G)), rat_str(total_mass(G))});
    return got == expect;
}

// ---------------------------------------------------------------- criterion 1
void criterion_masses() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    ok &= masses_match(-47, 4, Parity::odd, {{"221/8", "1105/8"}});
    ok &= masses_match(-95, 3, Parity::odd, {{"35/2", "70"}, {"35/2", "70"}});
    ok &= masses_match(-852, 2, Parity::odd,
                       {{"35/4", "35/2"}, {"9", "18"}, {"35/2", "35"}, {"18", "36"}});
    ok &= masses_match(-852, 2, Parity::even, {{"6", "12"}, {"35/3", "70/3"}});
    ok &= masses_match(-39, 4, Parity::odd, {{"935/72", "935/36"}, {"154/15", "308/15"}});
    double dt = seconds_since(t0);
    line("1 mass tables (exact)", ok && dt < 1.0,
         "elapsed " + std::to_string(dt).substr(0, 5) + " s of 1 s");
}

// ---------------------------------------------------------------- criterion 2
void criterion_class_groups() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    auto want = [&](long disc, long h, std::vector<long> div) {
        Field F = field_of_disc(disc);
        ClassGroup CG = enumerate_classes(F);
        return CG.h == h && CG.elementary_divisors == div;
    };
    ok &= want(-47, 5, {5});
    ok &= want(-95, 8, {8});
    ok &= want(-852, 8, {2, 4});
    ok &= want(-39, 4, {4});
    ok &= want(-23, 3, {3});
    ok &= want(-83, 3, {3});
    double dt = seconds_since(t0);
    line("2 class groups", ok && dt < 1.0,
         "elapsed " + std::to_string(dt).substr(0, 5) + " s of 1 s");
}

// ---------------------------------------------------------------- criterion 3
SearchReport criterion_search() {
    auto t0 = std::chrono::steady_clock::now();
    SearchReport R = full_search();
    using Row = std::tuple<long, bool, int, std::vector<int>>;  // disc, odd?, n, eps
    std::multiset<Row> got;
    for (auto& r : R.certified()) got.insert({-r.abs_disc, r.parity == Parity::odd, r.rank, r.eps});
    std::multiset<Row> want = {
        {-3, true, 2, {1}},        {-3, true, 3, {1}},
        {-3, true, 4, {1}},        {-3, true, 5, {1}},
        {-4, true, 2, {1}},        {-4, true, 3, {1}},
        {-4, true, 4, {1}},        {-4, false, 4, {1}},
        {-7, true, 2, {1}},        {-8, true, 2, {1}},
        {-8, false, 2, {1}},       {-20, true, 2, {-1, -1}},
        {-24, false, 2, {1, 1}},   {-24, false, 2, {-1, -1}},
        {-40, false, 2, {1, 1}},   {-40, false, 2, {-1, -1}},
        {-88, false, 2, {-1, -1}},
    };
    double dt = seconds_since(t0);
    line("3 single-class classification", got == want && dt < 600.0,
         std::to_string(R.certified().size()) + " genera over 8 discriminants, elapsed " +
             std::to_string(dt).substr(0, 5) + " s");
    return R;
}

// ---------------------------------------------------------------- criterion 4
void criterion_dmax() {
    std::map<int, long> published = {{2, 312}, {3, 16}, {4, 8}, {5, 7}, {6, 4}, {7, 3}};
    bool all_ok = true;
    std::string detail;
    for (auto& [n, want] : published) {
        DmaxInfo info = d_max_info(n);
        bool ok = info.refined == want;
        all_ok &= ok;
        if (!detail.empty()) detail += ", ";
        detail += std::to_string(n) + ":" + std::to_string(info.refined) +
                  (ok ? "" : "!=" + std::to_string(want));
    }
    line("4 discriminant bound table", all_ok, detail);
    if (!all_ok)
        std::cout << "     note: the rank-3 scan finds the mass-1/2 candidate at disc -23 "
                     "(certification correctly fails there), so the reproducible bound is 23; "
                     "no sound bound can exclude it"
                  << std::endl;
}

// ---------------------------------------------------------------- criterion 5
void criterion_properties(const SearchReport& R) {
    auto t0 = std::chrono::steady_clock::now();

    {  // a. mass ratio law
        bool ok = true;
        for (long a = 3; a <= 500 && ok; ++a) {
            if (!is_fundamental_discriminant(-a)) continue;
            Field F = field_of_disc(-a);
            Rat ratio =
                make_rat(Int(analytic_class_number(F)), int_pow(Int(2), F.ramified_count - 1));
            for (int n = 1; n <= 6 && ok; ++n)
                for (auto& G : list_genera(F, n))
                    ok &= total_mass(G) == ratio * partial_mass(G);
        }
        line("5a mass ratio law (|d| <= 500, n <= 6)", ok,
             std::to_string(seconds_since(t0)).substr(0, 5) + " s");
    }

    {  // b. character image size, product formula, kernel = squares
        auto tb = std::chrono::steady_clock::now();
        bool ok = true;
        for (long a = 3; a <= 500 && ok; ++a) {
            if (!is_fundamental_discriminant(-a)) continue;
            const ClassGroup& CG = group(-a);
            std::set<std::vector<int>> rows;
            for (int c = 0; c < CG.h; ++c) {
                int prod = 1;
                for (int v : CG.char_table[c]) prod *= v;
                ok &= prod == 1;
                rows.insert(CG.char_table[c]);
            }
            ok &= static_cast<long>(rows.size()) == (1L << (CG.field.ramified_count - 1));
            std::vector<int> kernel;
            for (int c = 0; c < CG.h; ++c)
                if (CG.char_table[c] == CG.char_table[CG.principal()]) kernel.push_back(c);
            ok &= kernel == power_subgroup(CG, 2);
        }
        line("5b genus characters: product formula, image, kernel (|d| <= 500)", ok,
             std::to_string(seconds_since(tb)).substr(0, 5) + " s");
    }

    {  // c. analytic class number formula
        auto tc = std::chrono::steady_clock::now();
        bool ok = true;
        for (long a = 3; a <= 500 && ok; ++a) {
            if (!is_fundamental_discriminant(-a)) continue;
            ok &= analytic_class_number(field_of_disc(-a)) == group(-a).h;
        }
        line("5c analytic class number formula (|d| <= 500)", ok,
             std::to_string(seconds_since(tc)).substr(0, 5) + " s");
    }

    {  // d + e. construction sweep with trace-form identities
        auto td = std::chrono::steady_clock::now();
        bool ok_d = true, ok_e = true;
        long built = 0;
        for (long a = 3; a <= 300 && ok_d && ok_e; ++a) {
            if (!is_fundamental_discriminant(-a)) continue;
            const ClassGroup& CG = group(-a);
            const Field& F = CG.field;
            for (int n = 1; n <= 6; ++n)
                for (int c = 0; c < CG.h; ++c)
                    for (Parity parity : {Parity::odd, Parity::even}) {
                        if (parity == Parity::even &&
                            !exists_genus(F, parity, n, CG.char_table[c]))
                            continue;
                        HermLattice L = parity == Parity::odd ? construct_odd(CG, n, c)
                                                              : construct_even(CG, n, c);
                        ++built;
                        ok_d &= is_unimodular(L) && hermlat::parity(L) == parity &&
                                is_definite(L) && steinitz_class(L, CG) == c;
                        if (!ok_d) break;
                        {
                            ZGram Z = trace_form(L);
                            ok_e &= zgram_det(Z) == int_pow(Int(F.abs_disc()), n);
                            // omega satisfies its minimal polynomial
                            int d = Z.dim;
                            for (int i = 0; i < d && ok_e; ++i)
                                for (int j = 0; j < d && ok_e; ++j) {
                                    Int acc(0);
                                    for (int k = 0; k < d; ++k)
                                        acc += Z.omega_action[i][k] * Z.omega_action[k][j];
                                    Int expect = F.omega_mode == OmegaMode::root
                                                     ? Int(i == j ? F.D : 0)
                                                     : Int(Z.omega_action[i][j] -
                                                           (i == j ? (1 - F.D) / 4 : 0));
                                    ok_e &= acc == expect;
                                }
                            // gram(Jx, y) = gram(x, (Tr(omega) - J) y)
                            long tr = omega_trace(F);
                            for (int i = 0; i < d && ok_e; ++i)
                                for (int j = 0; j < d && ok_e; ++j) {
                                    Int lhs(0), rhs(0);
                                    for (int k = 0; k < d; ++k) {
                                        lhs += Z.omega_action[k][i] * Z.gram[k][j];
                                        rhs += Z.gram[i][k] * ((k == j ? Int(tr) : Int(0)) -
                                                               Z.omega_action[k][j]);
                                    }
                                    ok_e &= lhs == rhs;
                                }
                        }
                    }
        }
        line("5d sample lattices pass all invariants (|d| <= 300, n <= 6, all classes)", ok_d,
             std::to_string(built) + " lattices, " +
                 std::to_string(seconds_since(td)).substr(0, 5) + " s");
        line("5e trace-form determinant and omega identities", ok_e);
    }

    {  // f. Steinitz twist law
        auto tf = std::chrono::steady_clock::now();
        bool ok = true;
        long twisted = 0;
        for (long a = 3; a <= 300 && ok; ++a) {
            if (!is_fundamental_discriminant(-a)) continue;
            const ClassGroup& CG = group(-a);
            const Field& F = CG.field;
            if (CG.h == 1) continue;
            for (int n = 1; n <= 5; ++n)
                for (int base = 0; base < CG.h && ok; ++base) {
                    HermLattice L = construct_odd(CG, n, base);
                    for (int tw = 0; tw < CG.h && ok; ++tw) {
                        FracIdeal c = ideal_of_form(F, CG.forms[tw]);
                        HermLattice T = twist_lattice(L, c);
                        ++twisted;
                        ok &= steinitz_class(T, CG) == CG.mul(CG.pow(tw, n), base);
                        ok &= is_unimodular(T) && hermlat::parity(T) == Parity::odd &&
                              is_definite(T);
                    }
                }
        }
        line("5f Steinitz twist law (|d| <= 300, n <= 5, all class pairs)", ok,
             std::to_string(twisted) + " twists, " +
                 std::to_string(seconds_since(tf)).substr(0, 5) + " s");
    }

    {  // g. reciprocal masses on the certified genera
        auto tg = std::chrono::steady_clock::now();
        bool ok = !R.certified().empty();
        for (auto& r : R.certified()) {
            Field F = field_of_disc(-r.abs_disc);
            ok &= r.mass * Rat(r.aut_order) == 1;
            ok &= r.aut_order % 2 == 0 && r.aut_order % F.unit_count == 0;
        }
        // divisibility holds on every computed order, certified or not
        for (auto& r : R.rows)
            if (r.aut_order > 0) {
                Field F = field_of_disc(-r.abs_disc);
                ok &= r.aut_order % 2 == 0 && r.aut_order % F.unit_count == 0;
            }
        line("5g |U| * partial mass = 1 on certified genera; divisibility by 2 and w", ok,
             std::to_string(seconds_since(tg)).substr(0, 5) + " s");
    }
}

// ---------------------------------------------------------------- criterion 6
void criterion_equality_guarantee() {
    bool ok = equality_guarantee(group(-39), 4) == EqualityGuarantee::none &&
              equality_guarantee(group(-47), 4) == EqualityGuarantee::all_classes;
    line("6 equality guarantees: NONE at (-39, 4), ALL_CLASSES at (-47, 4)", ok);
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion_masses();
    criterion_class_groups();
    SearchReport R = criterion_search();
    criterion_dmax();
    criterion_properties(R);
    criterion_equality_guarantee();
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) +
                                      " criterion(s) failed")
              << " in " << std::to_string(seconds_since(t0)).substr(0, 6) << " s" << std::endl;
    return failures;
}
