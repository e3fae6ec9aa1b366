#pragma once

#include <string>

#include <json.hpp>

#include "cendiv/equivalence.hpp"
#include "cendiv/structure.hpp"

namespace cendiv::report {

// ordered_json keeps insertion order, so identical inputs serialize to
// identical bytes.
using json = nlohmann::ordered_json;

json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

// Matrix files: {"field": {...}, "n": 12, "entries": [["1","0",...], ...]}
// with entries as canonical element strings.
json matrix_to_json(const MatrixExact& m);
MatrixExact matrix_from_json(const nlohmann::json& j);
MatrixExact load_matrix_file(const std::string& path);

json profile_to_json(const DivisorProfile& p);
DivisorProfile profile_from_json(const nlohmann::json& j);

json structure_to_json(const StructureReport& r);
StructureReport structure_from_json(const nlohmann::json& j, const Field& f);

json verdict_to_json(const EquivalenceVerdict& v);
EquivalenceVerdict verdict_from_json(const nlohmann::json& j);

json analysis_to_json(const DivisorProfile& p, const StructureReport& r);

std::string render_profile(const DivisorProfile& p);
std::string render_structure(const StructureReport& r);
std::string render_verdict(const EquivalenceVerdict& v);

} // namespace cendiv::report
