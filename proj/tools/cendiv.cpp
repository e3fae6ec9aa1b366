// cendiv: exact elementary-divisor profiles of matrices over Q and F_{p^k},
// equivalence deciders for the associated centralizer algebras, and the
// cycle-type fast path for permutation matrices.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cendiv/equivalence.hpp"
#include "cendiv/errors.hpp"
#include "cendiv/factor.hpp"
#include "cendiv/oracle.hpp"
#include "cendiv/permutation.hpp"
#include "cendiv/report.hpp"
#include "cendiv/structure.hpp"

namespace {

using namespace cendiv;

Field field_from_flags(std::int64_t characteristic, int ext) {
    if (characteristic == 0) {
        if (ext != 1)
            throw precondition_error("--ext requires a positive characteristic");
        return Field::rationals();
    }
    return make_extension_field(characteristic, ext);
}

DivisorProfile profile_from_input(const std::string& input, bool is_perm,
                                  std::int64_t characteristic, int ext) {
    if (is_perm)
        return cycle_type_profile(CycleType::parse(input), field_from_flags(characteristic, ext));
    return profile(report::load_matrix_file(input));
}

std::vector<Relation> requested_relations(const std::string& flag) {
    if (flag == "all") return {Relation::M, Relation::D, Relation::AD, Relation::SM};
    auto rel = relation_from_string(flag);
    if (!rel)
        throw precondition_error("unknown relation '" + flag +
                                 "' (expected morita|derived|ad|sm|all)");
    return {*rel};
}

int run_analyze(const std::string& input, bool is_perm, std::int64_t characteristic, int ext,
                bool as_json) {
    DivisorProfile p = profile_from_input(input, is_perm, characteristic, ext);
    StructureReport r = structure_report(p);
    if (as_json) {
        std::cout << report::analysis_to_json(p, r).dump(2) << "\n";
    } else {
        std::cout << report::render_profile(p) << report::render_structure(r);
    }
    return 0;
}

int run_compare(const std::string& a, const std::string& b, bool is_perm,
                std::int64_t characteristic, int ext, const std::string& relation_flag,
                bool as_json, bool exit_verdict) {
    DivisorProfile pa = profile_from_input(a, is_perm, characteristic, ext);
    DivisorProfile pb = profile_from_input(b, is_perm, characteristic, ext);

    std::vector<Relation> wanted = requested_relations(relation_flag);
    std::vector<EquivalenceVerdict> all = decide_all(pa, pb);
    std::vector<EquivalenceVerdict> selected;
    for (const auto& v : all)
        for (Relation rel : wanted)
            if (v.relation == rel) selected.push_back(v);

    if (as_json) {
        report::json out;
        out["field"] = report::field_to_json(pa.field);
        report::json verdicts = report::json::array();
        for (const auto& v : selected) verdicts.push_back(report::verdict_to_json(v));
        out["verdicts"] = std::move(verdicts);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& v : selected) std::cout << report::render_verdict(v);
    }

    if (exit_verdict)
        for (const auto& v : selected)
            if (!v.equivalent) return 3;
    return 0;
}

int run_split(const std::string& a, const std::string& b, std::int64_t characteristic, int ext,
              bool as_json) {
    CycleType lambda = CycleType::parse(a);
    auto [reg_a, sing_a] = p_split(lambda, characteristic);

    report::json out;
    out["p"] = characteristic;
    out["left"] = {{"type", lambda.to_string()},
                   {"regular", reg_a.to_string()},
                   {"singular", sing_a.to_string()}};
    if (!as_json) {
        std::cout << "cycle type " << lambda.to_string() << " (p = " << characteristic << ")\n";
        std::cout << "  regular part:  " << reg_a.to_string() << "\n";
        std::cout << "  singular part: " << sing_a.to_string() << "\n";
    }

    if (!b.empty()) {
        CycleType mu = CycleType::parse(b);
        auto [reg_b, sing_b] = p_split(mu, characteristic);
        out["right"] = {{"type", mu.to_string()},
                        {"regular", reg_b.to_string()},
                        {"singular", sing_b.to_string()}};
        if (!as_json) {
            std::cout << "cycle type " << mu.to_string() << " (p = " << characteristic << ")\n";
            std::cout << "  regular part:  " << reg_b.to_string() << "\n";
            std::cout << "  singular part: " << sing_b.to_string() << "\n";
        }

        Field f = field_from_flags(characteristic, ext);
        auto verdict = [&](const CycleType& x, const CycleType& y) {
            return decide(Relation::D, cycle_type_profile(x, f), cycle_type_profile(y, f))
                .equivalent;
        };
        bool full = verdict(lambda, mu);
        bool regular = verdict(reg_a, reg_b);
        bool singular = verdict(sing_a, sing_b);
        out["derived_equivalent"] = {
            {"full", full}, {"regular", regular}, {"singular", singular}};
        if (!as_json) {
            std::cout << "derived equivalence over " << f.name() << ":\n";
            std::cout << "  full:     " << (full ? "yes" : "no") << "\n";
            std::cout << "  regular:  " << (regular ? "yes" : "no") << "\n";
            std::cout << "  singular: " << (singular ? "yes" : "no") << "\n";
        }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return 0;
}

int run_selftest(int count, bool as_json) {
    auto rows = run_selftest_corpus(count);
    int failed = 0;
    if (as_json) {
        report::json out = report::json::array();
        for (const auto& r : rows) {
            out.push_back({{"seed", r.seed},
                           {"field", r.field},
                           {"total_degree", r.total_degree},
                           {"roundtrip", r.roundtrip_ok},
                           {"centralizer_dim", r.dim_ok}});
            if (!r.ok()) ++failed;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "seed              field   deg  roundtrip  centralizer-dim\n";
        for (const auto& r : rows) {
            if (!r.ok()) ++failed;
            std::printf("%-16llu  %-6s  %3d  %-9s  %s (%lld vs %lld)\n",
                        static_cast<unsigned long long>(r.seed), r.field.c_str(), r.total_degree,
                        r.roundtrip_ok ? "ok" : "FAIL", r.dim_ok ? "ok" : "FAIL",
                        static_cast<long long>(r.dim_profile), static_cast<long long>(r.dim_brute));
        }
        std::cout << rows.size() - failed << "/" << rows.size() << " corpus items passed\n";
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"elementary-divisor profiles and centralizer-algebra equivalence"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "profile and structure report of one matrix");
    std::string an_input;
    std::string an_perm;
    std::int64_t an_char = 0;
    int an_ext = 1;
    bool an_json = false;
    analyze->add_option("input", an_input, "matrix JSON file");
    analyze->add_option("--perm", an_perm, "cycle type instead of a matrix file, e.g. 15,1^4");
    analyze->add_option("--char", an_char, "field characteristic for --perm (0 = Q)");
    analyze->add_option("--ext", an_ext, "extension degree k for GF(p^k)");
    analyze->add_flag("--json", an_json, "emit JSON");

    auto* compare = app.add_subcommand("compare", "decide the equivalence relations for a pair");
    std::vector<std::string> cp_inputs;
    bool cp_perm = false;
    std::int64_t cp_char = 0;
    int cp_ext = 1;
    std::string cp_relation = "all";
    bool cp_json = false, cp_exit_verdict = false;
    compare->add_option("inputs", cp_inputs, "two matrix files, or two cycle types with --perm")
        ->expected(2);
    compare->add_flag("--perm", cp_perm, "treat the inputs as cycle types");
    compare->add_option("--char", cp_char, "field characteristic for --perm (0 = Q)");
    compare->add_option("--ext", cp_ext, "extension degree k for GF(p^k)");
    compare->add_option("--relation", cp_relation, "morita|derived|ad|sm|all");
    compare->add_flag("--json", cp_json, "emit JSON");
    compare->add_flag("--exit-verdict", cp_exit_verdict,
                      "exit 0 if every requested relation holds, 3 otherwise");

    auto* split =
        app.add_subcommand("split", "p-regular/p-singular parts, with D-verdicts for a pair");
    std::vector<std::string> sp_inputs;
    std::int64_t sp_char = 0;
    int sp_ext = 1;
    bool sp_json = false;
    split->add_option("types", sp_inputs, "one or two cycle types")->expected(1, 2);
    split->add_option("--char", sp_char, "characteristic p (0 = Q)")->required();
    split->add_option("--ext", sp_ext, "extension degree k for GF(p^k)");
    split->add_flag("--json", sp_json, "emit JSON");

    auto* selftest = app.add_subcommand("selftest", "run the seeded oracle corpus");
    int st_count = 200;
    bool st_json = false;
    selftest->add_option("--count", st_count, "number of corpus items (default 200)");
    selftest->add_flag("--json", st_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(analyze)) {
            if (an_input.empty() == an_perm.empty())
                throw precondition_error("analyze needs a matrix file or --perm (not both)");
            return run_analyze(an_perm.empty() ? an_input : an_perm, !an_perm.empty(), an_char,
                               an_ext, an_json);
        }
        if (app.got_subcommand(compare))
            return run_compare(cp_inputs[0], cp_inputs[1], cp_perm, cp_char, cp_ext, cp_relation,
                               cp_json, cp_exit_verdict);
        if (app.got_subcommand(split))
            return run_split(sp_inputs[0], sp_inputs.size() > 1 ? sp_inputs[1] : "", sp_char,
                             sp_ext, sp_json);
        if (app.got_subcommand(selftest))
            return run_selftest(st_count, st_json);
    } catch (const field_mismatch_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
