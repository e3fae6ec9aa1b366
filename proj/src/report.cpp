#include "cendiv/report.hpp"
#include "cendiv/errors.hpp"
#include "cendiv/factor.hpp"
#include "cendiv/poly_io.hpp"

#include <fstream>
#include <sstream>

namespace cendiv::report {

json field_to_json(const Field& f) {
    json j;
    if (f.is_rationals()) {
        j["kind"] = "Q";
        return j;
    }
    j["kind"] = "GF";
    j["p"] = f.p();
    j["k"] = f.extension_degree();
    if (f.extension_degree() > 1) {
        Field fp = Field::finite(f.p());
        std::vector<FieldElem> cs;
        for (auto c : f.modulus()) cs.push_back(fp.from_integer(c));
        j["modulus"] = Poly::from_coeffs(fp, std::move(cs)).to_string("t");
    }
    return j;
}

Field field_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw parse_error("field descriptor must be an object with a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return Field::rationals();
    if (kind != "GF")
        throw parse_error("field kind must be \"Q\" or \"GF\", got \"" + kind + "\"");
    std::int64_t p = j.at("p").get<std::int64_t>();
    int k = j.contains("k") ? j.at("k").get<int>() : 1;
    if (k == 1) return Field::finite(p);
    if (j.contains("modulus")) {
        // the modulus is a polynomial over F_p in the generator; accept x or t
        std::string text = j.at("modulus").get<std::string>();
        for (auto& ch : text)
            if (ch == 't') ch = 'x';
        Poly mod = parse_poly(Field::finite(p), text);
        std::vector<std::int64_t> coeffs;
        for (int i = 0; i <= mod.degree(); ++i)
            coeffs.push_back(std::get<GFVec>(mod.coeff(i))[0]);
        return Field::finite(p, k, std::move(coeffs));
    }
    return make_extension_field(p, k);
}

json matrix_to_json(const MatrixExact& m) {
    json j;
    j["field"] = field_to_json(m.field());
    j["n"] = m.dim();
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.dim(); ++k) row.push_back(m.field().to_string(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

MatrixExact matrix_from_json(const nlohmann::json& j) {
    Field f = field_from_json(j.at("field"));
    int n = j.at("n").get<int>();
    if (n < 1)
        throw parse_error("matrix dimension must be >= 1");
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw parse_error("matrix must have exactly n rows (non-square input rejected)");
    std::vector<FieldElem> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw parse_error("matrix row " + std::to_string(i + 1) +
                              " does not have n entries (non-square input rejected)");
        for (int k = 0; k < n; ++k) {
            try {
                if (row[k].is_number_integer())
                    entries.push_back(f.from_integer(row[k].get<std::int64_t>()));
                else
                    entries.push_back(parse_element(f, row[k].get<std::string>()));
            } catch (const parse_error& e) {
                throw parse_error("entry (" + std::to_string(i + 1) + "," +
                                  std::to_string(k + 1) + "): " + e.what());
            }
        }
    }
    return MatrixExact::from_entries(f, n, std::move(entries));
}

MatrixExact load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open matrix file '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed JSON in '") + path + "': " + e.what());
    }
    try {
        return matrix_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad matrix file '") + path + "': " + e.what());
    }
}

json profile_to_json(const DivisorProfile& p) {
    json j;
    j["field"] = field_to_json(p.field);
    j["n"] = p.n;
    j["from_permutation"] = p.permutation_origin;
    json divs = json::array();
    for (const auto& d : p.divisors) {
        json e;
        e["base"] = d.base.to_string();
        e["exponent"] = d.exponent;
        e["multiplicity"] = d.multiplicity;
        divs.push_back(std::move(e));
    }
    j["elementary_divisors"] = std::move(divs);
    json blocks = json::array();
    for (const auto& b : p.blocks) {
        json e;
        e["base"] = b.base.to_string();
        e["exponent"] = b.exponent;
        e["pset"] = b.pset;
        e["reducible"] = b.reducible;
        blocks.push_back(std::move(e));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

DivisorProfile profile_from_json(const nlohmann::json& j) {
    Field f = field_from_json(j.at("field"));
    std::vector<DivisorEntry> divisors;
    for (const auto& e : j.at("elementary_divisors"))
        divisors.push_back(DivisorEntry{parse_poly(f, e.at("base").get<std::string>()),
                                        e.at("exponent").get<int>(),
                                        e.at("multiplicity").get<int>()});
    DivisorProfile p = DivisorProfile::from_divisors(f, std::move(divisors));
    if (j.contains("from_permutation")) p.permutation_origin = j.at("from_permutation").get<bool>();
    if (j.contains("n") && j.at("n").get<int>() != p.n)
        throw parse_error("profile JSON: stated n disagrees with the divisor multiset");
    return p;
}

json structure_to_json(const StructureReport& r) {
    json j;
    json blocks = json::array();
    for (const auto& b : r.blocks) {
        json e;
        e["base"] = b.base.to_string();
        e["loewy_length"] = b.loewy_length;
        e["simple_count"] = b.simple_count;
        e["cartan"] = b.cartan;
        e["semisimple"] = b.semisimple;
        e["symmetric_nakayama"] = b.symmetric_nakayama;
        blocks.push_back(std::move(e));
    }
    j["blocks"] = std::move(blocks);
    j["algebra_dim"] = r.algebra_dim;
    if (r.dominant_dimension.infinite)
        j["dominant_dimension"] = "inf";
    else
        j["dominant_dimension"] = 2;
    j["representation_finite"] = r.representation_finite;
    j["principal_cyclic"] = r.principal_cyclic;
    return j;
}

StructureReport structure_from_json(const nlohmann::json& j, const Field& f) {
    StructureReport r;
    for (const auto& e : j.at("blocks"))
        r.blocks.push_back(BlockReport{parse_poly(f, e.at("base").get<std::string>()),
                                       e.at("loewy_length").get<int>(),
                                       e.at("simple_count").get<int>(),
                                       e.at("cartan").get<CartanMatrix>(),
                                       e.at("semisimple").get<bool>(),
                                       e.at("symmetric_nakayama").get<bool>()});
    r.algebra_dim = j.at("algebra_dim").get<std::int64_t>();
    r.dominant_dimension.infinite = j.at("dominant_dimension").is_string();
    r.representation_finite = j.at("representation_finite").get<bool>();
    r.principal_cyclic = j.at("principal_cyclic").get<bool>();
    return r;
}

json verdict_to_json(const EquivalenceVerdict& v) {
    json j;
    j["relation"] = relation_name(v.relation);
    j["equivalent"] = v.equivalent;
    if (v.equivalent) {
        json w = json::array();
        for (const auto& pair : v.witness) {
            json e;
            e["left"] = pair.left;
            e["right"] = pair.right;
            e["mode"] = pair_mode_name(pair.mode);
            w.push_back(std::move(e));
        }
        j["witness"] = std::move(w);
    } else {
        json reason;
        if (v.refusal == RefusalKind::size_mismatch) {
            reason["kind"] = "size_mismatch";
            reason["left"] = v.left_size;
            reason["right"] = v.right_size;
        } else {
            reason["kind"] = "no_perfect_matching";
        }
        j["reason"] = std::move(reason);
    }
    j["theorem"] = v.theorem;
    j["gloss"] = v.gloss;
    j["hypotheses"] = v.hypotheses;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

EquivalenceVerdict verdict_from_json(const nlohmann::json& j) {
    EquivalenceVerdict v;
    auto rel = relation_from_string(j.at("relation").get<std::string>());
    if (!rel)
        throw parse_error("unknown relation in verdict JSON");
    v.relation = *rel;
    v.equivalent = j.at("equivalent").get<bool>();
    if (v.equivalent) {
        for (const auto& e : j.at("witness")) {
            WitnessPair p;
            p.left = e.at("left").get<std::string>();
            p.right = e.at("right").get<std::string>();
            p.mode = e.at("mode").get<std::string>() == "P=J(P)" ? PairMode::P_eq_JP
                                                                 : PairMode::P_eq_P;
            v.witness.push_back(std::move(p));
        }
    } else {
        const auto& reason = j.at("reason");
        if (reason.at("kind").get<std::string>() == "size_mismatch") {
            v.refusal = RefusalKind::size_mismatch;
            v.left_size = reason.at("left").get<int>();
            v.right_size = reason.at("right").get<int>();
        } else {
            v.refusal = RefusalKind::no_perfect_matching;
        }
    }
    v.theorem = j.at("theorem").get<std::string>();
    v.gloss = j.at("gloss").get<std::string>();
    v.hypotheses = j.at("hypotheses").get<std::vector<std::string>>();
    if (j.contains("note")) v.note = j.at("note").get<std::string>();
    return v;
}

json analysis_to_json(const DivisorProfile& p, const StructureReport& r) {
    json j;
    j["profile"] = profile_to_json(p);
    j["structure"] = structure_to_json(r);
    return j;
}

std::string render_profile(const DivisorProfile& p) {
    std::ostringstream out;
    out << "field: " << p.field.name() << "\n";
    out << "n: " << p.n << "\n";
    out << "elementary divisors (E_c, with multiplicities):\n";
    for (const auto& d : p.divisors) {
        MaximalBlock tmp{d.base, d.exponent, {d.exponent}, false};
        out << "  " << tmp.divisor_string();
        if (d.multiplicity > 1) out << "  (multiplicity " << d.multiplicity << ")";
        out << "\n";
    }
    out << "maximal divisors (M_c): ";
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        out << (i ? ", " : "") << p.blocks[i].divisor_string();
    out << "\n";
    out << "reducible maximal divisors (R_c): ";
    bool any = false;
    for (const auto& b : p.blocks)
        if (b.reducible) {
            if (any) out << ", ";
            out << b.divisor_string();
            any = true;
        }
    if (!any) out << "(none)";
    out << "\n";
    out << "power-index sets:\n";
    for (const auto& b : p.blocks) {
        out << "  P(" << b.divisor_string() << ") = {";
        for (std::size_t i = 0; i < b.pset.size(); ++i)
            out << (i ? ", " : "") << b.pset[i];
        out << "}\n";
    }
    return out.str();
}

std::string render_structure(const StructureReport& r) {
    std::ostringstream out;
    out << "blocks:\n";
    for (const auto& b : r.blocks) {
        out << "  base " << b.base.to_string() << ": loewy length " << b.loewy_length
            << ", simples " << b.simple_count << ", cartan [";
        for (std::size_t i = 0; i < b.cartan.size(); ++i) {
            out << (i ? ", " : "") << "[";
            for (std::size_t j = 0; j < b.cartan[i].size(); ++j)
                out << (j ? ", " : "") << b.cartan[i][j];
            out << "]";
        }
        out << "]";
        if (b.semisimple) out << ", semisimple";
        if (b.symmetric_nakayama) out << ", symmetric Nakayama";
        out << "\n";
    }
    out << "algebra dimension: " << r.algebra_dim << "\n";
    out << "dominant dimension: " << r.dominant_dimension.to_string() << "\n";
    out << "representation finite: " << (r.representation_finite ? "yes" : "no") << "\n";
    out << "principal cyclic (S_n(c,R) = R[c]): " << (r.principal_cyclic ? "yes" : "no") << "\n";
    return out.str();
}

std::string render_verdict(const EquivalenceVerdict& v) {
    std::ostringstream out;
    out << "relation " << relation_name(v.relation) << " (" << relation_long_name(v.relation)
        << " equivalence of the centralizer algebras)\n";
    out << "  verdict: " << (v.equivalent ? "equivalent" : "not equivalent") << "\n";
    if (v.equivalent) {
        out << "  witness:\n";
        for (const auto& w : v.witness)
            out << "    " << w.left << "  ->  " << w.right << "   [" << pair_mode_name(w.mode)
                << "]\n";
    } else if (v.refusal == RefusalKind::size_mismatch) {
        out << "  reason: size mismatch (" << v.left_size << " vs " << v.right_size
            << " maximal divisors in the relation's domain)\n";
    } else {
        out << "  reason: no perfect matching of maximal divisors\n";
    }
    out << "  basis: " << v.theorem << " - " << v.gloss << "\n";
    for (const auto& h : v.hypotheses) out << "  hypothesis: " << h << "\n";
    if (!v.note.empty()) out << "  note: " << v.note << "\n";
    return out.str();
}

} // namespace cendiv::report
