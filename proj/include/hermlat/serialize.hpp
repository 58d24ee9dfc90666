#pragma once

#include <json.hpp>  // vendored single-header nlohmann/json

#include "hermlat/search.hpp"

namespace hermlat {

using json = nlohmann::json;

// Class-group cache record: {schema_version, d_K, h, divisors, forms, char_table}.
json class_group_to_json(const ClassGroup& CG);
ClassGroup class_group_from_json(const json& j);

// Lattice record: {d_K, n, ideals:[(q,a,b)...], gram:[[x,y]...]} with the
// ideal written as (1/q)(aZ + (b+omega)Z), q the rational 1/s as a string.
json lattice_to_json(const HermLattice& L);
HermLattice lattice_from_json(const json& j);

// Genus record: {d_K, parity, n, eps:{p: +-1}, partial_mass, total_mass, classes}.
json genus_to_json(const GenusSym& G, const ClassGroup& CG);

json search_report_to_json(const SearchReport& R);

}  // namespace hermlat
