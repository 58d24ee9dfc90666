#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hermlat/ideal.hpp"

namespace hermlat {

// Primitive positive definite integral binary quadratic form (a, b, c)
// of fundamental discriminant b^2 - 4ac = disc(K).
struct QuadForm {
    Int a, b, c;

    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QuadForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

bool form_is_reduced(const QuadForm& f);
QuadForm reduce_form(const Field& F, QuadForm f);
QuadForm principal_form(const Field& F);
QuadForm compose(const Field& F, const QuadForm& f, const QuadForm& g);
QuadForm form_inverse(const Field& F, const QuadForm& f);

// Ideal of the standard correspondence: (a, b, c) -> a Z + ((-b + sqrt(disc))/2) Z.
FracIdeal ideal_of_form(const Field& F, const QuadForm& f);

// The class group realized on the set of reduced forms of discriminant
// disc(K), with the group law pulled through ideal multiplication.
struct ClassGroup {
    Field field;
    std::vector<QuadForm> forms;  // all reduced forms, sorted; index = class id
    long h = 0;
    std::vector<long> elementary_divisors;        // ascending, d1 | d2 | ...
    std::vector<int> generators;                  // class ids matching divisors
    std::vector<std::vector<int>> char_table;     // [class][ramified prime] in {-1,+1}
    std::vector<std::string> class_names;         // generator-exponent words
    std::vector<std::vector<int>> mul_table;

    int principal() const;
    int mul(int i, int j) const { return mul_table[i][j]; }
    int inv(int i) const;
    int pow(int i, long e) const;
    long order_of(int i) const;
    long exponent() const;
    bool is_two_elementary() const;
    int class_by_name(const std::string& word) const;  // -1 if unknown
};

ClassGroup enumerate_classes(const Field& F);

// Builds composition table, structure and class names on a given set of
// reduced forms; the character table is left to the caller. This is the
// shared backend of enumerate_classes and the cache loader.
ClassGroup assemble_class_group(const Field& F, std::vector<QuadForm> forms);

int class_of_ideal(const ClassGroup& CG, const FracIdeal& I);
int class_of_form(const ClassGroup& CG, const QuadForm& f);

// Genus character chi_p([a]) = (N(a), K/Q)_p at a ramified prime, evaluated
// on a represented form value coprime to 2*disc.
int genus_character(const ClassGroup& CG, long p, int cls);

// Partition of the classes into the 2^(t-1) ideal genera (square cosets).
std::vector<std::vector<int>> ideal_genus_cosets(const ClassGroup& CG);
bool same_ideal_genus(const ClassGroup& CG, int c1, int c2);
std::vector<int> power_subgroup(const ClassGroup& CG, long n);

// What the rank together with the class-group structure guarantees about
// partial class numbers agreeing across Steinitz classes.
enum class EqualityGuarantee {
    all_classes,         // equality across every class (gcd(n,h)=1 or n <= 3)
    within_ideal_genus,  // equality inside each square coset
    rank_le_3_all,       // unused alias kept for interface stability
    none,
};

EqualityGuarantee equality_guarantee(const ClassGroup& CG, long n);
std::string to_string(EqualityGuarantee g);

// Searches the class's form for a represented value subject to a predicate;
// arguments are scanned over |x|,|y| <= limit. Throws when exhausted.
Int represented_value(const ClassGroup& CG, int cls, const std::function<bool(const Int&)>& ok,
                      int limit = 50);

// An integral ideal of odd norm coprime to disc in the given class.
FracIdeal odd_norm_ideal_in_class(const ClassGroup& CG, int cls);

}  // namespace hermlat
