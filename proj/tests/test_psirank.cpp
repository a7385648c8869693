#include <doctest.h>

#include <grouplab/constructions.hpp>
#include <grouplab/psirank.hpp>
#include <grouplab/sylow.hpp>

#include <algorithm>

using namespace grouplab;

namespace {
const std::string kSrc = GROUPLAB_SOURCE_DIR;

int failures(const std::vector<VerifyLine>& lines) { return count_failures(lines); }

bool has_line(const std::vector<VerifyLine>& lines, const std::string& check, Verdict v) {
    for (const auto& l : lines)
        if (l.check == check && l.verdict == v) return true;
    return false;
}

}  // namespace

TEST_CASE("psi tiers at orders 8 and 12") {
    auto t8 = rank_tiers(builtin_catalog(8), 3);
    REQUIRE(t8.size() == 3);
    CHECK(t8[0].members == std::vector<std::string>{"Q8"});
    CHECK(t8[0].psi_value == 27);
    CHECK(t8[1].members == std::vector<std::string>{"C4xC2"});
    CHECK(t8[1].psi_value == 23);
    CHECK(t8[2].members == std::vector<std::string>{"D8"});
    CHECK(t8[2].psi_value == 19);

    auto t12 = rank_tiers(builtin_catalog(12), 3);
    REQUIRE(t12.size() == 3);
    CHECK(t12[0].members == std::vector<std::string>{"C6xC2"});
    CHECK(t12[0].psi_value == 49);
    CHECK(t12[1].members == std::vector<std::string>{"Dic3"});
    CHECK(t12[1].psi_value == 45);
    CHECK(t12[2].members == std::vector<std::string>{"D12"});
    CHECK(t12[2].psi_value == 33);
}

TEST_CASE("prime orders have no tiers") {
    CHECK(rank_tiers(builtin_catalog(7), 3).empty());
    CHECK(rank_tiers(builtin_catalog(13), 3).empty());
}

TEST_CASE("tier determinism under catalog reordering") {
    auto cat = builtin_catalog(12);
    auto tiers = rank_tiers(cat, 3);
    std::reverse(cat.groups.begin(), cat.groups.end());
    auto tiers2 = rank_tiers(cat, 3);
    REQUIRE(tiers.size() == tiers2.size());
    for (size_t i = 0; i < tiers.size(); ++i) {
        CHECK(tiers[i].members == tiers2[i].members);
        CHECK(tiers[i].psi_value == tiers2[i].psi_value);
    }
}

TEST_CASE("equal psi values share a tier") {
    auto cat16 = load_catalog_dir(kSrc + "/catalog", 16);
    auto tiers = rank_tiers(cat16, 3);
    REQUIRE(!tiers.empty());
    CHECK(tiers[0].members == std::vector<std::string>{"C8xC2", "M16"});
    CHECK(tiers[0].psi_value == 87);
    CHECK(tiers[1].members == std::vector<std::string>{"Q16"});
    CHECK(tiers[2].members == std::vector<std::string>{"SD16"});
}

TEST_CASE("incomplete catalogs are refused without the advisory flag") {
    auto cat = builtin_catalog(16);
    CHECK_THROWS_AS(rank_tiers(cat, 3), CapabilityError);
    auto tiers = rank_tiers(cat, 3, /*advisory_incomplete=*/true);
    CHECK(!tiers.empty());
}

TEST_CASE("tier csv and json emission") {
    auto tiers = rank_tiers(builtin_catalog(8), 3);
    std::string csv = tiers_to_csv(tiers);
    CHECK(csv == "n,tier,label,psi\n8,1,Q8,27\n8,2,C4xC2,23\n8,3,D8,19\n");
    std::string json = tiers_to_json(tiers);
    CHECK(json.find("\"members\":[\"Q8\"]") != std::string::npos);
    CHECK(json.find("\"psi\":\"27\"") != std::string::npos);
}

TEST_CASE("psi maximum over each complete catalog is attained by the cyclic group") {
    for (i64 n = 2; n < 16; ++n) {
        auto cat = builtin_catalog(n);
        mpz_class best = -1;
        std::string who;
        for (const auto& g : cat.groups) {
            mpz_class v = psi_sum(g);
            if (v > best) {
                best = v;
                who = g.label;
            }
        }
        CHECK(who == "C" + std::to_string(n));
    }
}

TEST_CASE("main5 at orders 8 and 12") {
    auto lines8 = verify_main5(builtin_catalog(8));
    CHECK(failures(lines8) == 0);
    CHECK(has_line(lines8, "main5:solvable", Verdict::pass));
    CHECK(has_line(lines8, "main5:p-complement", Verdict::pass));

    auto lines12 = verify_main5(builtin_catalog(12));
    CHECK(failures(lines12) == 0);
    bool d12_k_cyclic = false;
    for (const auto& l : lines12)
        if (l.check == "main5:K-cyclic" && l.subject == "D12" && l.verdict == Verdict::pass)
            d12_k_cyclic = true;
    CHECK(d12_k_cyclic);
}

TEST_CASE("main5 on the ingested catalogs") {
    auto lines16 = verify_main5(load_catalog_dir(kSrc + "/catalog", 16));
    CHECK(failures(lines16) == 0);

    auto lines24 = verify_main5(load_catalog_dir(kSrc + "/catalog", 24));
    CHECK(failures(lines24) == 0);
    bool c12c2 = false;
    for (const auto& l : lines24)
        if (l.subject == "C12xC2" && l.check == "main5:p-complement" &&
            l.verdict == Verdict::pass)
            c12c2 = true;
    CHECK(c12c2);

    // order 36 exposes a genuine gap: the third tier is (C2xC2):C9, which
    // has no normal 2-complement; the verifier surfaces exactly that.
    auto lines36 = verify_main5(load_catalog_dir(kSrc + "/catalog", 36));
    CHECK(failures(lines36) == 1);
    bool surfaced = false;
    for (const auto& l : lines36)
        if (l.check == "main5:p-complement" && l.subject == "(C2xC2):C9" &&
            l.verdict == Verdict::fail)
            surfaced = true;
    CHECK(surfaced);
}

TEST_CASE("coo at small orders") {
    auto lines8 = verify_coo(builtin_catalog(8), 1);
    CHECK(failures(lines8) == 0);
    bool q8_branch = false;
    for (const auto& l : lines8)
        if (l.check == "coo:structure" && l.detail.find("Q8") != std::string::npos)
            q8_branch = true;
    CHECK(q8_branch);

    auto lines12 = verify_coo(builtin_catalog(12), 1);
    CHECK(failures(lines12) == 0);
    bool c6c2_branch = false;
    for (const auto& l : lines12)
        if (l.check == "coo:structure" && l.subject.find("C6xC2") == 0 &&
            l.verdict == Verdict::pass)
            c6c2_branch = true;
    CHECK(c6c2_branch);

    auto lines9 = verify_coo(builtin_catalog(9), 1);
    CHECK(failures(lines9) == 0);
    bool c3c3_branch = false;
    for (const auto& l : lines9)
        if (l.check == "coo:structure" && l.subject.find("C3xC3") == 0) c3c3_branch = true;
    CHECK(c3c3_branch);

    // higher power weights and the ingested catalogs
    for (i64 k : {1, 2, 3}) {
        CHECK(failures(verify_coo(builtin_catalog(8), k)) == 0);
        CHECK(failures(verify_coo(builtin_catalog(12), k)) == 0);
        CHECK(failures(verify_coo(load_catalog_dir(kSrc + "/catalog", 24), k)) == 0);
        CHECK(failures(verify_coo(load_catalog_dir(kSrc + "/catalog", 16), k)) == 0);
        CHECK(failures(verify_coo(load_catalog_dir(kSrc + "/catalog", 36), k)) == 0);
    }
    // order 16: both second-tier groups land in the C_{n/p} x C_p branch
    auto lines16 = verify_coo(load_catalog_dir(kSrc + "/catalog", 16), 1);
    int both = 0;
    for (const auto& l : lines16)
        if (l.check == "coo:structure" && l.verdict == Verdict::pass &&
            l.detail == "branch: C8xC2")
            ++both;
    CHECK(both == 2);  // C8xC2 and its order-type twin M16
}

TEST_CASE("bound suite examples") {
    // recursion example: psi(C4xC2) = 1 - 2 + 2^3 psi(C2) = 23
    auto c4c2 = build(spec_abelian({4, 2}));
    auto lines = verify_bounds(c4c2, 1);
    CHECK(failures(lines) == 0);
    bool rec = false;
    for (const auto& l : lines)
        if (l.check == "bounds:omega1-recursion" && l.verdict == Verdict::pass &&
            l.detail.find("23") != std::string::npos)
            rec = true;
    CHECK(rec);

    // mean-order product bound at C2 with r = 1: 9/2 >= 3/2
    auto c2 = build(spec_cyclic(2));
    auto lines2 = verify_bounds(c2, 1);
    CHECK(failures(lines2) == 0);
    bool bound = false;
    for (const auto& l : lines2)
        if (l.check == "bounds:mean-order" && l.detail.find("9/2") != std::string::npos)
            bound = true;
    CHECK(bound);

    auto trivial = build(spec_cyclic(1));
    auto lines3 = verify_bounds(trivial, 1);
    CHECK(failures(lines3) == 0);
}

TEST_CASE("closed form flag fires with the 5/2 versus 3 witness") {
    auto c2 = build(spec_cyclic(2));
    auto lines = verify_bounds(c2, 1);
    bool flagged = false;
    for (const auto& l : lines)
        if (l.check == "bounds:closed-form-flag" && l.verdict == Verdict::pass &&
            l.detail.find("5/2") != std::string::npos &&
            l.detail.find("direct 3") != std::string::npos)
            flagged = true;
    CHECK(flagged);
}

TEST_CASE("omega1 recursion across built-in p-groups up to 64") {
    for (i64 n : {4, 8, 9, 16, 25, 27, 32, 49, 64}) {
        auto cat = builtin_catalog(n);
        for (const auto& g : cat.groups) {
            for (int l = 1; l <= 3; ++l) {
                auto lines = verify_bounds(g, l);
                CAPTURE(g.label);
                CAPTURE(l);
                CHECK(failures(lines) == 0);
            }
        }
    }
}

TEST_CASE("same-pnil pairs") {
    auto s3 = build(spec_dihedral(6));
    auto c6 = build(spec_cyclic(6));
    auto c2c2c3 = build(spec_abelian({2, 2, 3}));
    auto c6c2 = build(spec_abelian({6, 2}));
    std::vector<std::pair<const FiniteGroup*, const FiniteGroup*>> pairs = {
        {&s3, &s3}, {&s3, &c6}, {&c2c2c3, &c6c2}};
    auto lines = verify_same_pnil(pairs);
    CHECK(failures(lines) == 0);
    // S3 -> C6 is feasible with different psi and different order type
    bool differs = false;
    for (const auto& l : lines)
        if (l.subject == "D6 vs C6" && l.verdict == Verdict::pass &&
            l.detail.find("differs") != std::string::npos)
            differs = true;
    CHECK(differs);
    // identical histograms agree on psi and on p-nilpotence at both primes
    int agree = 0;
    for (const auto& l : lines)
        if (l.subject.rfind("C2xC2xC3 vs C6xC2", 0) == 0 &&
            l.check == "same-pnil:p-nilpotent" && l.verdict == Verdict::pass)
            ++agree;
    CHECK(agree == 2);
}

TEST_CASE("same-pnil across built-in catalogs") {
    for (i64 n : {8, 12}) {
        auto cat = builtin_catalog(n);
        std::vector<std::pair<const FiniteGroup*, const FiniteGroup*>> pairs;
        for (const auto& a : cat.groups)
            for (const auto& b : cat.groups) pairs.push_back({&a, &b});
        CHECK(failures(verify_same_pnil(pairs)) == 0);
    }
}

TEST_CASE("monotone bound inequalities over the complete catalogs") {
    for (i64 n = 2; n < 16; ++n) {
        auto cat = builtin_catalog(n);
        for (const auto& g : cat.groups)
            for (int l : {1, 2}) {
                auto lines = verify_bounds(g, l);
                CAPTURE(g.label);
                CHECK(failures(lines) == 0);
            }
    }
}

TEST_CASE("psi_power_sum matches psi at k=1") {
    for (const auto& g : builtin_catalog(12).groups) {
        CHECK(psi_power_sum(g, 1) == psi_sum(g));
        CHECK(psi_power_sum(g, 2) == mpz_class(psi_power(g, FuncId::identity, 2).value.get_num()));
    }
}

TEST_CASE("main5 clause (i) fires on a declared catalog with a rank-3 third tier") {
    // completeness is a declared flag; a curated member list steers the
    // third tier onto C2^3 x C3, whose Sylow 2-subgroup has rank 3
    Catalog cat;
    cat.complete = true;
    cat.groups.push_back(build(spec_abelian({12, 2})));   // psi 161, tier 1
    cat.groups.push_back(build(spec_dicyclic(6)));        // psi 125, tier 2
    cat.groups.push_back(build(spec_abelian({6, 2, 2}))); // psi 105, tier 3
    auto lines = verify_main5(cat);
    CHECK(failures(lines) == 0);
    bool clause_i = false, ptype = false;
    for (const auto& l : lines) {
        if (l.check == "main5:clause-i" && l.verdict == Verdict::pass) clause_i = true;
        if (l.check == "main5:clause-i-ptype" && l.verdict == Verdict::pass) ptype = true;
    }
    CHECK(clause_i);
    CHECK(ptype);
}

TEST_CASE("main5 clause (ii) fires on a declared catalog with two non-cyclic Sylows") {
    Catalog cat;
    cat.complete = true;
    cat.groups.push_back(build(spec_abelian({18, 2})));  // psi 427, tier 1
    cat.groups.push_back(build(spec_abelian({12, 3})));  // psi 275, tier 2
    cat.groups.push_back(build(spec_abelian({6, 6})));   // psi 175, tier 3
    auto lines = verify_main5(cat);
    CHECK(failures(lines) == 0);
    bool clause_ii = false;
    for (const auto& l : lines)
        if (l.check == "main5:clause-ii" && l.subject == "C6xC6" && l.verdict == Verdict::pass)
            clause_ii = true;
    CHECK(clause_ii);
}
