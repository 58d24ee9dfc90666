#include "hermlat/serialize.hpp"

#include <algorithm>

namespace hermlat {

namespace {

constexpr int kSchemaVersion = 1;

long disc_to_radicand(long disc) { return disc % 4 == 0 ? disc / 4 : disc; }

}  // namespace

json class_group_to_json(const ClassGroup& CG) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["d_K"] = CG.field.disc;
    j["h"] = CG.h;
    j["divisors"] = CG.elementary_divisors;
    json forms = json::array();
    for (const auto& f : CG.forms)
        forms.push_back({f.a.get_si(), f.b.get_si(), f.c.get_si()});
    j["forms"] = forms;
    j["char_table"] = CG.char_table;
    return j;
}

ClassGroup class_group_from_json(const json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::invalid_argument("class group cache: unknown schema version");
    long disc = j.at("d_K").get<long>();
    Field F = make_field(disc_to_radicand(disc));

    // The cache is advisory, so a stale or foreign record must never poison
    // results: every invariant the record claims is revalidated here.
    std::vector<QuadForm> forms;
    for (const auto& t : j.at("forms")) {
        QuadForm f{Int(t.at(0).get<long>()), Int(t.at(1).get<long>()), Int(t.at(2).get<long>())};
        if (!form_is_reduced(f) || f.b * f.b - 4 * f.a * f.c != F.disc)
            throw std::invalid_argument("class group cache: bad form");
        forms.push_back(f);
    }
    if (j.at("h").get<long>() != static_cast<long>(forms.size()) ||
        !std::is_sorted(forms.begin(), forms.end()))
        throw std::invalid_argument("class group cache: inconsistent record");

    ClassGroup CG = assemble_class_group(F, std::move(forms));
    if (j.at("divisors").get<std::vector<long>>() != CG.elementary_divisors)
        throw std::invalid_argument("class group cache: inconsistent divisors");
    auto chars = j.at("char_table").get<std::vector<std::vector<int>>>();
    if (static_cast<long>(chars.size()) != CG.h)
        throw std::invalid_argument("class group cache: bad character table");
    for (const auto& row : chars) {
        if (row.size() != F.ramified_primes.size())
            throw std::invalid_argument("class group cache: bad character row");
        int prod = 1;
        for (int v : row) prod *= v;
        if (prod != 1) throw std::invalid_argument("class group cache: bad character row");
    }
    CG.char_table = std::move(chars);
    return CG;
}

json lattice_to_json(const HermLattice& L) {
    json j;
    j["d_K"] = L.field.disc;
    j["n"] = L.rank;
    json ideals = json::array();
    for (const auto& I : L.coeff_ideals)
        ideals.push_back({rat_str(1 / I.s), I.a.get_str(), I.b.get_str()});
    j["ideals"] = ideals;
    json gram = json::array();
    for (const auto& row : L.gram) {
        json r = json::array();
        for (const auto& e : row) r.push_back({rat_str(e.x), rat_str(e.y)});
        gram.push_back(r);
    }
    j["gram"] = gram;
    return j;
}

HermLattice lattice_from_json(const json& j) {
    HermLattice L;
    L.field = make_field(disc_to_radicand(j.at("d_K").get<long>()));
    L.rank = j.at("n").get<int>();
    for (const auto& t : j.at("ideals")) {
        FracIdeal I;
        I.s = 1 / rat_from_str(t.at(0).get<std::string>());
        I.a = Int(t.at(1).get<std::string>());
        I.b = Int(t.at(2).get<std::string>());
        L.coeff_ideals.push_back(I);
    }
    for (const auto& row : j.at("gram")) {
        std::vector<FieldElem> r;
        for (const auto& e : row)
            r.push_back({rat_from_str(e.at(0).get<std::string>()),
                         rat_from_str(e.at(1).get<std::string>())});
        L.gram.push_back(std::move(r));
    }
    check_lattice(L);
    return L;
}

json genus_to_json(const GenusSym& G, const ClassGroup& CG) {
    json j;
    j["d_K"] = G.field.disc;
    j["parity"] = to_string(G.parity);
    j["n"] = G.rank;
    json eps = json::object();
    for (size_t i = 0; i < G.eps.size(); ++i)
        eps[std::to_string(G.field.ramified_primes[i])] = G.eps[i];
    j["eps"] = eps;
    j["partial_mass"] = rat_str(partial_mass(G));
    j["total_mass"] = rat_str(total_mass(G));
    json classes = json::array();
    for (int c : occurring_steinitz_classes(G, CG)) classes.push_back(CG.class_names[c]);
    j["classes"] = classes;
    return j;
}

json search_report_to_json(const SearchReport& R) {
    json j;
    json rows = json::array();
    for (const auto& r : R.rows) {
        json row;
        row["d_K"] = -r.abs_disc;
        row["parity"] = to_string(r.parity);
        row["n"] = r.rank;
        row["eps"] = r.eps;
        row["partial_mass"] = rat_str(r.mass);
        row["candidate"] = r.candidate;
        row["certified"] = r.certified;
        if (r.aut_order > 0) row["aut_order"] = r.aut_order;
        rows.push_back(row);
    }
    j["rows"] = rows;
    json dmax = json::object();
    for (auto& [n, info] : R.d_max_used)
        dmax[std::to_string(n)] = {{"crude", info.crude}, {"refined", info.refined}};
    j["d_max"] = dmax;
    return j;
}

}  // namespace hermlat
