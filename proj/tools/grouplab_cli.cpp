#include <grouplab/bijection.hpp>
#include <grouplab/constructions.hpp>
#include <grouplab/divisibility.hpp>
#include <grouplab/psirank.hpp>
#include <grouplab/spectrum.hpp>
#include <grouplab/sylow.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace grouplab;

namespace {

struct RunConfig {
    std::string catalog_dir = "catalog";
    int order_cap = 2048;
    int subgroup_cap = 512;
    std::string format = "text";
    bool advisory_incomplete = false;

    BuildLimits limits() const { return BuildLimits{order_cap, subgroup_cap}; }
};

FiniteGroup load_group(const std::string& literal, const RunConfig& cfg) {
    return build(parse_group_literal(literal), cfg.limits());
}

// Scope grammar: a group literal, builtins:<N> (all built-in groups of
// order <= N), or catalog:<n> (ingested directory).
std::vector<FiniteGroup> load_scope(const std::string& scope, const RunConfig& cfg) {
    std::vector<FiniteGroup> out;
    if (scope.rfind("builtins:", 0) == 0) {
        i64 maxn = std::stoll(scope.substr(9));
        for (i64 n = 1; n <= maxn; ++n) {
            Catalog cat = builtin_catalog(n, cfg.limits());
            for (auto& g : cat.groups) out.push_back(std::move(g));
        }
        return out;
    }
    if (scope.rfind("catalog:", 0) == 0) {
        i64 n = std::stoll(scope.substr(8));
        Catalog cat = load_catalog_dir(cfg.catalog_dir, n, cfg.limits());
        return std::move(cat.groups);
    }
    out.push_back(load_group(scope, cfg));
    return out;
}

int emit_reports(const std::vector<DivisibilityReport>& rows, const RunConfig& cfg) {
    if (cfg.format == "json") {
        for (const auto& r : rows) std::cout << report_to_json_line(r) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << report_csv_header() << "\n";
        for (const auto& r : rows) std::cout << report_to_csv_row(r) << "\n";
    } else {
        for (const auto& r : rows) {
            std::cout << r.group_label << " " << r.claim << " [";
            bool first = true;
            for (const auto& [k, v] : r.params) {
                if (!first) std::cout << " ";
                first = false;
                std::cout << k << "=" << v;
            }
            std::cout << "] ";
            if (r.verdict == Verdict::hypothesis_not_met ||
                r.verdict == Verdict::capability_skipped) {
                std::cout << to_string(r.verdict);
            } else {
                std::cout << "observed " << r.observed
                          << (r.required.kind == Requirement::Kind::modulus ? " mod " : " >= ")
                          << r.required.value << " -> " << to_string(r.verdict);
            }
            if (!r.note.empty()) std::cout << "  (" << r.note << ")";
            std::cout << "\n";
        }
    }
    SweepSummary s = summarize(rows);
    std::cout << "summary: " << s.passes << " pass, " << s.failures << " fail, "
              << s.hypothesis_not_met << " hypothesis-not-met, " << s.capability_skipped
              << " capability-skipped\n";
    if (s.capability_skipped > 0)
        std::cerr << "warning: " << s.capability_skipped << " checks capability-skipped\n";
    return s.failures > 0 ? 1 : 0;
}

int emit_verify_lines(const std::vector<VerifyLine>& lines, const RunConfig& cfg) {
    int failures = 0;
    int skipped = 0;
    for (const auto& l : lines) {
        if (l.verdict == Verdict::fail) ++failures;
        if (l.verdict == Verdict::capability_skipped) ++skipped;
        if (cfg.format == "json") {
            std::cout << verify_line_to_json(l) << "\n";
        } else {
            std::cout << l.check << " | " << l.subject << " | " << to_string(l.verdict) << " | "
                      << l.detail << "\n";
        }
    }
    std::cout << "summary: " << failures << " failures over " << lines.size() << " checks\n";
    if (skipped > 0) std::cerr << "warning: " << skipped << " checks capability-skipped\n";
    return failures > 0 ? 1 : 0;
}

void print_info(const FiniteGroup& g, const RunConfig& cfg) {
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["label"] = g.label;
        j["order"] = g.n;
        j["exponent"] = g.exponent();
        j["histogram"] = nlohmann::ordered_json::parse(histogram_to_json(order_histogram(g)));
        j["psi"] = psi_sum(g).get_str();
        j["mean_order"] = mean_order(g).get_str();
        try {
            StructureProfile p = classify(g, cfg.limits());
            j["cyclic"] = p.is_cyclic;
            j["abelian"] = p.is_abelian;
            j["nilpotent"] = p.is_nilpotent;
            j["solvable"] = p.is_solvable;
            j["dedekind"] = p.is_dedekind;
            j["two_group_class"] = to_string(p.two_group_class);
            j["fitting_order"] = p.fitting_order;
        } catch (const CapabilityError& e) {
            j["classify_skipped"] = e.what();
        }
        auto syls = nlohmann::ordered_json::array();
        for (auto [p, e] : factorize(g.n)) {
            SylowInfo s = sylow(g, p);
            nlohmann::ordered_json js;
            js["p"] = p;
            js["order"] = s.representative.size();
            js["cyclic"] = s.is_cyclic;
            js["generalized_quaternion"] = s.is_generalized_quaternion;
            js["exponent"] = s.group_exponent;
            js["rank"] = s.max_elementary_abelian_rank;
            syls.push_back(std::move(js));
        }
        j["sylow"] = syls;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "group " << g.label << "\n";
    std::cout << "  order " << g.n << ", exponent " << g.exponent() << "\n";
    std::cout << "  order histogram " << histogram_to_json(order_histogram(g)) << "\n";
    std::cout << "  psi " << psi_sum(g).get_str() << ", mean order " << mean_order(g).get_str()
              << "\n";
    try {
        StructureProfile p = classify(g, cfg.limits());
        std::cout << "  cyclic=" << p.is_cyclic << " abelian=" << p.is_abelian
                  << " nilpotent=" << p.is_nilpotent << " solvable=" << p.is_solvable
                  << " dedekind=" << p.is_dedekind << "\n";
        std::cout << "  two-group class " << to_string(p.two_group_class) << ", fitting order "
                  << p.fitting_order << "\n";
    } catch (const CapabilityError& e) {
        std::cout << "  classify skipped: " << e.what() << "\n";
    }
    for (auto [p, e] : factorize(g.n)) {
        SylowInfo s = sylow(g, p);
        std::cout << "  sylow " << p << ": order " << s.representative.size() << ", cyclic "
                  << s.is_cyclic << ", generalized-quaternion " << s.is_generalized_quaternion
                  << ", exponent " << s.group_exponent << ", rank "
                  << s.max_elementary_abelian_rank << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grouplab: finite-group spectra, divisibility claims, and order bijections"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("GROUPLAB_CATALOG")) cfg.catalog_dir = env;
    app.add_option("--catalog", cfg.catalog_dir, "catalog directory (env GROUPLAB_CATALOG)");
    app.add_option("--order-cap", cfg.order_cap, "dense table order cap");
    app.add_option("--subgroup-cap", cfg.subgroup_cap, "subgroup enumeration cap");
    app.add_option("--format", cfg.format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--advisory-incomplete", cfg.advisory_incomplete,
                 "allow rankings over incomplete catalogs");

    std::string make_spec, make_out;
    auto* cmd_make = app.add_subcommand("make", "build a group and emit its Cayley table");
    cmd_make
        ->add_option("spec", make_spec,
                     "group literal (C12, Q8, D8, SD16, M16, C4xC2, A4, Dic3, Heis27, C7:C3, "
                     "file:path)")
        ->required();
    cmd_make->add_option("-o,--out", make_out, "output file (default stdout)");

    std::string info_spec;
    auto* cmd_info = app.add_subcommand("info", "structural summary of a group");
    cmd_info->add_option("group", info_spec)->required();

    std::string sol_spec, sol_class;
    i64 sol_d = 1;
    auto* cmd_sol = app.add_subcommand("sol", "Sol(U,d,G) counts and members");
    cmd_sol->add_option("group", sol_spec)->required();
    cmd_sol->add_option("-d", sol_d, "divisor bound d")->required();
    cmd_sol->add_option("-U", sol_class, "class:<element index> for U = [x]^G (default identity)");

    std::string check_claim_name, check_scope;
    auto* cmd_check = app.add_subcommand("check", "run a divisibility claim checker");
    cmd_check->add_option("claim", check_claim_name)->required();
    cmd_check->add_option("scope", check_scope, "group literal | builtins:<N> | catalog:<n>")
        ->required();
    std::map<std::string, i64> check_params;
    for (const char* key : {"p", "d", "j", "r", "s", "m", "k", "e", "y", "pi", "dedekind"}) {
        cmd_check->add_option_function<i64>(
            std::string("--") + key,
            [&check_params, key = std::string(key)](const i64& v) { check_params[key] = v; },
            "claim parameter " + std::string(key));
    }

    std::string bij_g, bij_h, bij_expect;
    bool bij_map = false;
    auto* cmd_bij = app.add_subcommand("bijection", "order-divisibility matching certificate");
    cmd_bij->add_option("G", bij_g)->required();
    cmd_bij->add_option("H", bij_h)->required();
    cmd_bij->add_option("--expect", bij_expect, "feasible or infeasible")
        ->check(CLI::IsMember({"feasible", "infeasible"}));
    cmd_bij->add_flag("--map", bij_map, "emit an explicit element bijection");

    std::string target_g;
    bool target_refined = false;
    auto* cmd_target = app.add_subcommand("cl-target", "coarse or refined target group");
    cmd_target->add_option("G", target_g)->required();
    cmd_target->add_flag("--refined", target_refined);

    i64 rank_n = 0;
    int rank_k = 3;
    std::string rank_source = "auto";
    auto* cmd_rank = app.add_subcommand("rank", "psi tiers over a complete catalog");
    cmd_rank->add_option("n", rank_n)->required();
    cmd_rank->add_option("--k", rank_k, "number of tiers");
    cmd_rank->add_option("--source", rank_source, "builtin, catalog, or auto")
        ->check(CLI::IsMember({"auto", "builtin", "catalog"}));

    std::string verify_what, verify_scope;
    i64 verify_k = 1;
    int verify_l = 1;
    auto* cmd_verify = app.add_subcommand("verify", "run a verifier suite");
    cmd_verify->add_option("what", verify_what)
        ->check(CLI::IsMember({"fmain", "main5", "coo", "bounds", "same-pnil"}))
        ->required();
    cmd_verify->add_option("scope", verify_scope, "group literal | builtins:<N> | catalog:<n>")
        ->required();
    cmd_verify->add_option("--k", verify_k, "power for coo");
    cmd_verify->add_option("--l", verify_l, "l for bounds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_make) {
            FiniteGroup g = load_group(make_spec, cfg);
            std::vector<std::string> header = {"group: " + g.label};
            if (make_out.empty()) {
                save_cayley(g, std::cout, header);
            } else {
                std::ofstream out(make_out);
                if (!out) throw std::runtime_error("cannot write " + make_out);
                save_cayley(g, out, header);
                std::cout << "wrote " << g.label << " (order " << g.n << ") to " << make_out
                          << "\n";
            }
            return 0;
        }
        if (*cmd_info) {
            print_info(load_group(info_spec, cfg), cfg);
            return 0;
        }
        if (*cmd_sol) {
            FiniteGroup g = load_group(sol_spec, cfg);
            std::vector<int> members;
            std::string uname = "1";
            if (sol_class.empty()) {
                members = sol_set(g, {0}, sol_d);
            } else {
                if (sol_class.rfind("class:", 0) != 0)
                    throw std::invalid_argument("expected -U class:<element index>");
                int y = std::stoi(sol_class.substr(6));
                members = sol_set_of_generator_class(g, y, sol_d);
                uname = "[" + std::to_string(y) + "]";
            }
            if (cfg.format == "json") {
                nlohmann::ordered_json j;
                j["group"] = g.label;
                j["U"] = uname;
                j["d"] = sol_d;
                j["count"] = members.size();
                j["members"] = members;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "|Sol(" << uname << "," << sol_d << "," << g.label
                          << ")| = " << members.size() << "\n";
                std::cout << "members:";
                for (int x : members) std::cout << " " << x;
                std::cout << "\n";
            }
            return 0;
        }
        if (*cmd_check) {
            ClaimId claim = claim_from_string(check_claim_name);
            std::vector<FiniteGroup> groups = load_scope(check_scope, cfg);
            std::vector<DivisibilityReport> rows;
            for (const auto& g : groups) {
                auto part = check_claim(claim, g, check_params, cfg.limits());
                rows.insert(rows.end(), part.begin(), part.end());
            }
            std::stable_sort(rows.begin(), rows.end(),
                             [](const DivisibilityReport& a, const DivisibilityReport& b) {
                                 if (a.group_label != b.group_label)
                                     return a.group_label < b.group_label;
                                 if (a.claim != b.claim) return a.claim < b.claim;
                                 return a.params < b.params;
                             });
            return emit_reports(rows, cfg);
        }
        if (*cmd_bij) {
            FiniteGroup g = load_group(bij_g, cfg);
            FiniteGroup h = load_group(bij_h, cfg);
            ClMemberResult res = cl_member(g, h, bij_map);
            std::cout << certificate_to_json(res.certificate) << "\n";
            if (bij_map && res.certificate.feasible) {
                nlohmann::ordered_json j;
                j["map"] = res.element_map;
                std::cout << j.dump() << "\n";
            }
            bool feasible = res.certificate.feasible;
            if (!bij_expect.empty()) return (bij_expect == "feasible") == feasible ? 0 : 1;
            return feasible ? 0 : 1;
        }
        if (*cmd_target) {
            FiniteGroup g = load_group(target_g, cfg);
            GroupSpec spec;
            std::string note;
            if (target_refined) {
                RefinedTarget rt = refined_target_of(g, cfg.limits());
                if (rt.capability_skipped) {
                    std::cerr << "warning: " << rt.note << "\n";
                    return 0;
                }
                spec = rt.spec;
                note = rt.note;
            } else {
                spec = target_of(g);
            }
            FiniteGroup target = build(spec, cfg.limits());
            auto res = cl_member(g, target);
            if (cfg.format == "json") {
                nlohmann::ordered_json j;
                j["group"] = g.label;
                j["target"] = spec_to_string(spec);
                j["refined"] = target_refined;
                j["feasible"] = res.certificate.feasible;
                if (!note.empty()) j["note"] = note;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "target(" << g.label << ") = " << spec_to_string(spec)
                          << (target_refined ? " (refined)" : "") << ", membership "
                          << (res.certificate.feasible ? "feasible" : "INFEASIBLE") << "\n";
                if (!note.empty()) std::cout << "note: " << note << "\n";
            }
            return res.certificate.feasible ? 0 : 1;
        }
        if (*cmd_rank) {
            Catalog cat;
            if (rank_source == "catalog") {
                cat = load_catalog_dir(cfg.catalog_dir, rank_n, cfg.limits());
            } else if (rank_source == "builtin") {
                cat = builtin_catalog(rank_n, cfg.limits());
            } else {
                cat = builtin_catalog(rank_n, cfg.limits());
                if (!cat.complete) {
                    try {
                        cat = load_catalog_dir(cfg.catalog_dir, rank_n, cfg.limits());
                    } catch (const std::exception&) {
                        // keep the incomplete builtin catalog; rank_tiers decides
                    }
                }
            }
            auto tiers = rank_tiers(cat, rank_k, cfg.advisory_incomplete);
            if (cfg.format == "json")
                std::cout << tiers_to_json(tiers) << "\n";
            else
                std::cout << tiers_to_csv(tiers);
            return 0;
        }
        if (*cmd_verify) {
            if (verify_what == "fmain") {
                std::vector<FiniteGroup> groups = load_scope(verify_scope, cfg);
                return emit_verify_lines(verify_fmain(groups, cfg.limits()), cfg);
            }
            if (verify_what == "main5" || verify_what == "coo") {
                Catalog cat;
                if (verify_scope.rfind("catalog:", 0) == 0) {
                    cat = load_catalog_dir(cfg.catalog_dir, std::stoll(verify_scope.substr(8)),
                                           cfg.limits());
                } else if (verify_scope.rfind("builtins:", 0) == 0) {
                    cat = builtin_catalog(std::stoll(verify_scope.substr(9)), cfg.limits());
                } else {
                    throw std::invalid_argument("main5/coo need builtins:<n> or catalog:<n>");
                }
                auto lines = verify_what == "main5" ? verify_main5(cat, cfg.limits())
                                                    : verify_coo(cat, verify_k, cfg.limits());
                return emit_verify_lines(lines, cfg);
            }
            if (verify_what == "bounds") {
                std::vector<FiniteGroup> groups = load_scope(verify_scope, cfg);
                std::vector<VerifyLine> lines;
                for (const auto& g : groups) {
                    auto part = verify_bounds(g, verify_l, {}, cfg.limits());
                    lines.insert(lines.end(), part.begin(), part.end());
                }
                return emit_verify_lines(lines, cfg);
            }
            std::vector<FiniteGroup> groups = load_scope(verify_scope, cfg);
            std::vector<std::pair<const FiniteGroup*, const FiniteGroup*>> pairs;
            for (size_t i = 0; i < groups.size(); ++i)
                for (size_t j = 0; j < groups.size(); ++j)
                    if (i != j && groups[i].n == groups[j].n)
                        pairs.push_back({&groups[i], &groups[j]});
            return emit_verify_lines(verify_same_pnil(pairs), cfg);
        }
    } catch (const CapabilityError& e) {
        std::cerr << "warning: " << e.what() << "\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
