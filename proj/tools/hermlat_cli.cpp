// Command line front end: class groups, genera and exact masses of definite
// unimodular hermitian lattices over imaginary-quadratic fields, sample
// construction, automorphism counting and the single-class classification.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "hermlat/serialize.hpp"

using namespace hermlat;
namespace fs = std::filesystem;

namespace {

enum class Format { text, json_fmt, csv };

struct Options {
    Format format = Format::text;
    bool fundamental = false;  // interpret the first argument as d_K
    bool no_cache = false;
};

Field field_from_arg(long value, const Options& opt) {
    if (value >= 0) throw CLI::ValidationError("D", "expected a negative discriminant");
    if (opt.fundamental) {
        if (!is_fundamental_discriminant(value))
            throw CLI::ValidationError("D", "not a fundamental discriminant");
        return make_field(value % 4 == 0 ? value / 4 : value);
    }
    return make_field(value);
}

fs::path cache_dir() {
    if (const char* env = std::getenv("HERMLAT_CACHE_DIR")) return fs::path(env);
    if (const char* home = std::getenv("HOME")) return fs::path(home) / ".cache" / "hermlat";
    return fs::temp_directory_path() / "hermlat-cache";
}

// The cache is advisory: any failure to read, validate or write falls back
// to recomputation silently.
ClassGroup class_group_cached(const Field& F, const Options& opt) {
    if (opt.no_cache) return enumerate_classes(F);
    fs::path file = cache_dir() / ("cg_" + std::to_string(F.abs_disc()) + ".json");
    std::error_code ec;
    if (fs::exists(file, ec)) {
        try {
            std::ifstream in(file);
            json j = json::parse(in);
            return class_group_from_json(j);
        } catch (const std::exception&) {
        }
    }
    ClassGroup CG = enumerate_classes(F);
    fs::create_directories(cache_dir(), ec);
    if (!ec) {
        std::ofstream out(file);
        if (out) out << class_group_to_json(CG).dump(2) << "\n";
    }
    return CG;
}

std::string eps_str(const GenusSym& G) {
    std::string s;
    for (size_t i = 0; i < G.eps.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(G.field.ramified_primes[i]) + ":" + (G.eps[i] > 0 ? "+1" : "-1");
    }
    return s;
}

std::string classes_str(const GenusSym& G, const ClassGroup& CG) {
    std::string s;
    for (int c : occurring_steinitz_classes(G, CG)) {
        if (!s.empty()) s += ",";
        s += CG.class_names[c];
    }
    return s;
}

int cmd_field(const Field& F, const Options& opt) {
    if (opt.format == Format::json_fmt) {
        json j{{"D", F.D},
               {"d_K", F.disc},
               {"ramified_primes", F.ramified_primes},
               {"t", F.ramified_count},
               {"unit_count", F.unit_count},
               {"omega", F.omega_mode == OmegaMode::half ? "(1+sqrt(D))/2" : "sqrt(D)"}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "D            " << F.D << "\n";
    std::cout << "d_K          " << F.disc << "\n";
    std::cout << "omega        " << (F.omega_mode == OmegaMode::half ? "(1+sqrt(D))/2" : "sqrt(D)")
              << "\n";
    std::cout << "ramified     ";
    for (long p : F.ramified_primes) std::cout << p << " ";
    std::cout << "(t = " << F.ramified_count << ")\n";
    std::cout << "unit count   " << F.unit_count << "\n";
    return 0;
}

std::string structure_str(const ClassGroup& CG) {
    if (CG.h == 1) return "trivial";
    std::string s;
    for (auto it = CG.elementary_divisors.rbegin(); it != CG.elementary_divisors.rend(); ++it) {
        if (!s.empty()) s += " x ";
        s += "Z/" + std::to_string(*it);
    }
    return s;
}

int cmd_classgroup(const Field& F, const Options& opt) {
    ClassGroup CG = class_group_cached(F, opt);
    if (opt.format == Format::json_fmt) {
        json j = class_group_to_json(CG);
        j["structure"] = structure_str(CG);
        j["class_names"] = CG.class_names;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "d_K = " << F.disc << "  h = " << CG.h << "  structure " << structure_str(CG)
              << "\n";
    std::cout << std::left << std::setw(10) << "class" << std::setw(16) << "form";
    for (long p : F.ramified_primes) std::cout << std::setw(6) << ("chi_" + std::to_string(p));
    std::cout << "\n";
    for (int c = 0; c < CG.h; ++c) {
        std::ostringstream form;
        form << "(" << CG.forms[c].a << "," << CG.forms[c].b << "," << CG.forms[c].c << ")";
        std::cout << std::setw(10) << CG.class_names[c] << std::setw(16) << form.str();
        for (int v : CG.char_table[c]) std::cout << std::setw(6) << (v > 0 ? "+1" : "-1");
        std::cout << "\n";
    }
    return 0;
}

int print_genera(const std::vector<GenusSym>& genera, const ClassGroup& CG, const Options& opt) {
    if (opt.format == Format::json_fmt) {
        json arr = json::array();
        for (auto& G : genera) arr.push_back(genus_to_json(G, CG));
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    if (opt.format == Format::csv) {
        std::cout << "d_K,parity,n,eps,classes,partial_mass,total_mass\n";
        for (auto& G : genera)
            std::cout << G.field.disc << "," << to_string(G.parity) << "," << G.rank << ",\""
                      << eps_str(G) << "\",\"" << classes_str(G, CG) << "\","
                      << rat_str(partial_mass(G)) << "," << rat_str(total_mass(G)) << "\n";
        return 0;
    }
    std::cout << std::left << std::setw(8) << "parity" << std::setw(4) << "n" << std::setw(22)
              << "eps" << std::setw(18) << "classes" << std::setw(14) << "partial" << std::setw(14)
              << "total" << "\n";
    for (auto& G : genera)
        std::cout << std::setw(8) << to_string(G.parity) << std::setw(4) << G.rank << std::setw(22)
                  << eps_str(G) << std::setw(18) << classes_str(G, CG) << std::setw(14)
                  << rat_str(partial_mass(G)) << std::setw(14) << rat_str(total_mass(G)) << "\n";
    return 0;
}

// Genera of rank n, filtered by parity and either a class word or a
// character vector written as eps=+-- (one sign per ramified prime).
std::vector<GenusSym> select_genera(const Field& F, const ClassGroup& CG, int n,
                                    const std::string& parity, const std::string& cls_word) {
    std::vector<int> eps_filter;
    if (cls_word.rfind("eps=", 0) == 0) {
        std::string signs = cls_word.substr(4);
        if (signs.size() != F.ramified_primes.size())
            throw CLI::ValidationError("class", "eps needs one sign per ramified prime");
        for (char ch : signs) {
            if (ch != '+' && ch != '-')
                throw CLI::ValidationError("class", "eps signs must be + or -");
            eps_filter.push_back(ch == '+' ? 1 : -1);
        }
    }
    std::vector<GenusSym> out;
    for (auto& G : list_genera(F, n)) {
        if (parity == "odd" && G.parity != Parity::odd) continue;
        if (parity == "even" && G.parity != Parity::even) continue;
        if (!eps_filter.empty()) {
            if (G.eps != eps_filter) continue;
        } else if (!cls_word.empty() && cls_word != "all") {
            int c = CG.class_by_name(cls_word);
            if (c < 0) throw CLI::ValidationError("class", "unknown class word '" + cls_word +
                                                               "' (see `classgroup`)");
            if (CG.char_table[c] != G.eps) continue;
        }
        out.push_back(G);
    }
    return out;
}

int cmd_construct(const ClassGroup& CG, int n, const std::string& parity,
                  const std::string& cls_word, const Options& opt) {
    int c = CG.class_by_name(cls_word);
    if (c < 0) throw CLI::ValidationError("class", "unknown class word '" + cls_word + "'");
    HermLattice L = parity == "even" ? construct_even(CG, n, c) : construct_odd(CG, n, c);
    json j = lattice_to_json(L);
    j["parity"] = to_string(hermlat::parity(L));
    j["steinitz_class"] = CG.class_names[steinitz_class(L, CG)];
    j["unimodular"] = is_unimodular(L);
    j["definite"] = is_definite(L);
    std::cout << j.dump(opt.format == Format::json_fmt ? -1 : 2) << "\n";
    return 0;
}

int print_search(const SearchReport& R, const Options& opt) {
    if (opt.format == Format::json_fmt) {
        std::cout << search_report_to_json(R).dump(2) << "\n";
        return 0;
    }
    if (opt.format == Format::csv) {
        std::cout << "d_K,parity,n,eps,partial_mass,candidate,certified,aut_order\n";
        for (auto& r : R.rows) {
            std::cout << -r.abs_disc << "," << to_string(r.parity) << "," << r.rank << ",\"";
            for (int e : r.eps) std::cout << (e > 0 ? "+" : "-");
            std::cout << "\"," << rat_str(r.mass) << "," << r.candidate << "," << r.certified
                      << "," << r.aut_order << "\n";
        }
        return 0;
    }
    for (auto& [n, info] : R.d_max_used)
        std::cout << "d_max(" << n << "): crude " << info.crude << ", refined " << info.refined
                  << "\n";
    std::cout << std::left << std::setw(8) << "d_K" << std::setw(8) << "parity" << std::setw(4)
              << "n" << std::setw(10) << "eps" << std::setw(16) << "partial" << std::setw(10)
              << "|U(L)|" << "\n";
    auto cert = R.certified();
    for (auto& r : cert) {
        std::string eps;
        for (int e : r.eps) eps += e > 0 ? "+" : "-";
        std::cout << std::setw(8) << -r.abs_disc << std::setw(8) << to_string(r.parity)
                  << std::setw(4) << r.rank << std::setw(10) << eps << std::setw(16)
                  << rat_str(r.mass) << r.aut_order << "\n";
    }
    std::cout << cert.size() << " single-class partial genera; " << R.rows.size()
              << " certification attempts in total (full rows with --json or --csv)\n";
    return 0;
}

// Recomputes the built-in reference tables; exit 2 on any mismatch.
int cmd_verify() {
    int bad = 0;
    auto report = [&](const std::string& what, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "OK       " : "MISMATCH ") << what;
        if (!detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "\n";
        if (!ok) ++bad;
    };

    struct GroupCase {
        long disc;
        long h;
        std::vector<long> divisors;
    };
    for (const GroupCase& gc : std::vector<GroupCase>{{-47, 5, {5}},
                                                      {-95, 8, {8}},
                                                      {-852, 8, {2, 4}},
                                                      {-39, 4, {4}},
                                                      {-23, 3, {3}},
                                                      {-83, 3, {3}}}) {
        Field F = make_field(gc.disc % 4 == 0 ? gc.disc / 4 : gc.disc);
        ClassGroup CG = enumerate_classes(F);
        report("class group " + std::to_string(gc.disc), CG.h == gc.h &&
                                                             CG.elementary_divisors == gc.divisors,
               "h=" + std::to_string(CG.h));
    }

    struct MassCase {
        long disc;
        int n;
        Parity parity;
        std::vector<std::pair<std::string, std::string>> masses;  // (partial, total), any order
    };
    std::vector<MassCase> mass_cases = {
        {-47, 4, Parity::odd, {{"221/8", "1105/8"}}},
        {-95, 3, Parity::odd, {{"35/2", "70"}, {"35/2", "70"}}},
        {-852, 2, Parity::odd, {{"35/4", "35/2"}, {"9", "18"}, {"35/2", "35"}, {"18", "36"}}},
        {-852, 2, Parity::even, {{"6", "12"}, {"35/3", "70/3"}}},
        {-39, 4, Parity::odd, {{"935/72", "935/36"}, {"154/15", "308/15"}}},
    };
    for (auto& mc : mass_cases) {
        Field F = make_field(mc.disc % 4 == 0 ? mc.disc / 4 : mc.disc);
        std::multiset<std::pair<std::string, std::string>> want(mc.masses.begin(),
                                                                mc.masses.end()),
            got;
        for (auto& G : list_genera(F, mc.n))
            if (G.parity == mc.parity)
                got.insert({rat_str(partial_mass(G)), rat_str(total_mass(G))});
        report("masses " + std::to_string(mc.disc) + " rank " + std::to_string(mc.n) + " " +
                   to_string(mc.parity),
               want == got);
    }

    // the classification of single-class partial genera
    SearchReport R = full_search();
    std::multiset<std::tuple<long, std::string, int>> got;
    for (auto& r : R.certified()) got.insert({-r.abs_disc, to_string(r.parity), r.rank});
    std::multiset<std::tuple<long, std::string, int>> want = {
        {-3, "odd", 2},  {-3, "odd", 3},   {-3, "odd", 4},   {-3, "odd", 5},   {-4, "odd", 2},
        {-4, "odd", 3},  {-4, "odd", 4},   {-4, "even", 4},  {-7, "odd", 2},   {-8, "odd", 2},
        {-8, "even", 2}, {-20, "odd", 2},  {-24, "even", 2}, {-24, "even", 2}, {-40, "even", 2},
        {-40, "even", 2}, {-88, "even", 2}};
    report("single-class classification", got == want,
           std::to_string(R.certified().size()) + " genera");

    // published discriminant bounds; the rank-3 entry is not reproducible:
    // the scan finds the mass-1/2 candidate at -23, so the honest bound is 23
    std::map<int, long> published = {{2, 312}, {3, 16}, {4, 8}, {5, 7}, {6, 4}, {7, 3}};
    for (auto& [n, want_d] : published) {
        DmaxInfo info = d_max_info(n);
        report("d_max(" + std::to_string(n) + ") = " + std::to_string(want_d),
               info.refined == want_d,
               "crude " + std::to_string(info.crude) + ", refined " +
                   std::to_string(info.refined));
    }

    std::cout << (bad == 0 ? "all reference values reproduced\n"
                           : std::to_string(bad) + " mismatches\n");
    return bad == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"definite unimodular hermitian lattices over imaginary-quadratic fields"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Options opt;
    bool json_flag = false, csv_flag = false;
    app.add_flag("--json", json_flag, "emit JSON");
    app.add_flag("--csv", csv_flag, "emit CSV (genera and search tables)");
    app.add_flag("--fundamental", opt.fundamental,
                 "interpret the first argument as the fundamental discriminant d_K");
    app.add_flag("--no-cache", opt.no_cache, "skip the class group cache");

    long D = 0;
    int n = 0;
    std::string parity = "odd", cls_word = "all";

    auto* c_field = app.add_subcommand("field", "field invariants");
    c_field->add_option("D", D)->required();

    auto* c_cg = app.add_subcommand("classgroup", "class group, forms and genus characters");
    c_cg->add_option("D", D)->required();

    auto* c_genera = app.add_subcommand("genera", "all genera of the given rank, with masses");
    c_genera->add_option("D", D)->required();
    c_genera->add_option("n", n)->required()->check(CLI::PositiveNumber);

    auto* c_mass = app.add_subcommand("mass", "exact partial and total mass");
    c_mass->add_option("D", D)->required();
    c_mass->add_option("n", n)->required()->check(CLI::PositiveNumber);
    c_mass->add_option("parity", parity)->check(CLI::IsMember({"odd", "even"}));
    c_mass->add_option("class", cls_word, "class word from `classgroup`, or 'all'");

    auto* c_construct = app.add_subcommand("construct", "sample unimodular lattice of a genus");
    c_construct->add_option("D", D)->required();
    c_construct->add_option("n", n)->required()->check(CLI::PositiveNumber);
    c_construct->add_option("parity", parity)->required()->check(CLI::IsMember({"odd", "even"}));
    c_construct->add_option("class", cls_word)->required();

    auto* c_aut = app.add_subcommand("aut", "unitary automorphism group order of the sample");
    c_aut->add_option("D", D)->required();
    c_aut->add_option("n", n)->required()->check(CLI::PositiveNumber);
    c_aut->add_option("parity", parity)->required()->check(CLI::IsMember({"odd", "even"}));
    c_aut->add_option("class", cls_word)->required();

    app.add_subcommand("search", "classify single-class partial genera of rank >= 2");
    app.add_subcommand("verify", "recompute built-in reference tables (exit 2 on mismatch)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    opt.format = json_flag ? Format::json_fmt : csv_flag ? Format::csv : Format::text;

    try {
        if (c_field->parsed()) return cmd_field(field_from_arg(D, opt), opt);
        if (c_cg->parsed()) return cmd_classgroup(field_from_arg(D, opt), opt);
        if (c_genera->parsed()) {
            Field F = field_from_arg(D, opt);
            ClassGroup CG = class_group_cached(F, opt);
            return print_genera(list_genera(F, n), CG, opt);
        }
        if (c_mass->parsed()) {
            Field F = field_from_arg(D, opt);
            ClassGroup CG = class_group_cached(F, opt);
            auto genera = select_genera(F, CG, n, parity, cls_word);
            if (genera.empty()) {
                std::cerr << "no genus matches the request\n";
                return 1;
            }
            return print_genera(genera, CG, opt);
        }
        if (c_construct->parsed()) {
            Field F = field_from_arg(D, opt);
            ClassGroup CG = class_group_cached(F, opt);
            return cmd_construct(CG, n, parity, cls_word, opt);
        }
        if (c_aut->parsed()) {
            Field F = field_from_arg(D, opt);
            ClassGroup CG = class_group_cached(F, opt);
            int c = CG.class_by_name(cls_word);
            if (c < 0) {
                std::cerr << "unknown class word '" << cls_word << "'\n";
                return 1;
            }
            HermLattice L =
                parity == "even" ? construct_even(CG, n, c) : construct_odd(CG, n, c);
            std::cout << unitary_aut_order(L) << "\n";
            return 0;
        }
        if (app.get_subcommand("search")->parsed()) return print_search(full_search(), opt);
        if (app.get_subcommand("verify")->parsed()) return cmd_verify();
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const EvenConstructError& e) {
        std::cerr << "no such even lattice: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
