#include <doctest.h>

#include <grouplab/constructions.hpp>
#include <grouplab/group.hpp>
#include <grouplab/spectrum.hpp>
#include <grouplab/sylow.hpp>

#include <algorithm>
#include <set>

using namespace grouplab;

namespace {

// Independent closure oracle: saturate the membership bitmap until no new
// products appear (different shape from the library's queue-based closure).
std::vector<int> closure_oracle(const FiniteGroup& g, std::vector<int> seeds) {
    std::vector<char> in(g.n, 0);
    in[0] = 1;
    for (int s : seeds) in[s] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < g.n; ++a) {
            if (!in[a]) continue;
            for (int b = 0; b < g.n; ++b) {
                if (!in[b]) continue;
                int c = g.mul(a, b);
                if (!in[c]) {
                    in[c] = 1;
                    changed = true;
                }
            }
        }
    }
    std::vector<int> out;
    for (int x = 0; x < g.n; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

std::vector<int> orbit_oracle(const FiniteGroup& g, int x) {
    std::set<int> orbit;
    for (int y = 0; y < g.n; ++y) orbit.insert(g.conj(x, y));
    return {orbit.begin(), orbit.end()};
}

std::vector<FiniteGroup> small_catalog() {
    std::vector<FiniteGroup> out;
    for (i64 n = 1; n < 16; ++n) {
        auto cat = builtin_catalog(n);
        for (auto& g : cat.groups) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

TEST_CASE("element orders") {
    auto c6 = build(spec_cyclic(6));
    CHECK(element_order(c6, 1) == 6);
    CHECK(element_order(c6, 0) == 1);
    auto q8 = build(spec_generalized_quaternion(8));
    // index 2 is a^2, the central involution of the dicyclic presentation
    CHECK(element_order(q8, 2) == 2);
    int involutions = 0;
    for (int x = 0; x < q8.n; ++x)
        if (element_order(q8, x) == 2) ++involutions;
    CHECK(involutions == 1);
    CHECK_THROWS_AS(element_order(c6, 6), std::invalid_argument);
    CHECK_THROWS_AS(element_order(c6, -1), std::invalid_argument);
}

TEST_CASE("table invariants hold on every built-in below 16") {
    for (const auto& g : small_catalog()) {
        CAPTURE(g.label);
        for (int x = 0; x < g.n; ++x) {
            CHECK(g.mul(0, x) == x);
            CHECK(g.mul(x, 0) == x);
            CHECK(g.n % g.order_cache[x] == 0);
            CHECK(g.mul(x, g.inv[x]) == 0);
        }
        // row/column Latin property
        for (int a = 0; a < g.n; ++a) {
            std::set<int> row, col;
            for (int b = 0; b < g.n; ++b) {
                row.insert(g.mul(a, b));
                col.insert(g.mul(b, a));
            }
            CHECK(static_cast<int>(row.size()) == g.n);
            CHECK(static_cast<int>(col.size()) == g.n);
        }
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                for (int c = 0; c < g.n; ++c)
                    REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
}

TEST_CASE("generated subgroups match the closure oracle") {
    auto s3 = build(spec_dihedral(6));
    CHECK(generated_subgroup(s3, {}).elements == std::vector<int>{0});
    int transposition = -1;
    for (int x = 0; x < s3.n; ++x)
        if (s3.order_cache[x] == 2) {
            transposition = x;
            break;
        }
    auto sub = generated_subgroup(s3, {transposition});
    CHECK(sub.size() == 2);
    CHECK(sub.elements == closure_oracle(s3, {transposition}));

    auto q8 = build(spec_generalized_quaternion(8));
    auto whole = generated_subgroup(q8, {1, 4});  // a and b
    CHECK(whole.size() == 8);
    CHECK(whole.elements == closure_oracle(q8, {1, 4}));
}

TEST_CASE("conjugacy classes and centralizers") {
    auto c6 = build(spec_cyclic(6));
    for (const auto& cls : conjugacy_classes(c6)) CHECK(cls.size() == 1);
    CHECK(centralizer(c6, 3).size() == 6);

    auto s3 = build(spec_dihedral(6));
    int transposition = 3;
    REQUIRE(s3.order_cache[transposition] == 2);
    auto cls = orbit_oracle(s3, transposition);
    CHECK(cls.size() == 3);

    auto q8 = build(spec_generalized_quaternion(8));
    auto icls = orbit_oracle(q8, 1);
    CHECK(icls.size() == 2);  // {i, -i}
    CHECK(centralizer(q8, 1).size() == 4);

    for (const auto& g : small_catalog()) {
        CAPTURE(g.label);
        auto classes = conjugacy_classes(g);
        size_t covered = 0;
        for (const auto& c : classes) {
            covered += c.size();
            CHECK(c == orbit_oracle(g, c[0]));
            CHECK(static_cast<i64>(c.size()) * centralizer(g, c[0]).size() == g.n);
        }
        CHECK(static_cast<int>(covered) == g.n);
    }
}

TEST_CASE("sylow subgroups") {
    auto c12 = build(spec_cyclic(12));
    auto s2 = sylow(c12, 2);
    CHECK(s2.representative.size() == 4);
    CHECK(s2.is_cyclic);
    CHECK(s2.exponent_of_n == 2);

    auto sl23 = load_cayley(std::string(GROUPLAB_SOURCE_DIR) + "/catalog/24/06_sl_2_3_.cay");
    auto ssl = sylow(sl23, 2);
    CHECK(ssl.representative.size() == 8);
    CHECK(ssl.is_generalized_quaternion);
    CHECK(!ssl.is_cyclic);

    auto a4 = build(spec_a4());
    auto sa = sylow(a4, 2);
    CHECK(sa.representative.size() == 4);
    CHECK(!sa.is_cyclic);
    CHECK(sa.max_elementary_abelian_rank == 2);
    CHECK(sa.representative.is_normal);

    CHECK_THROWS_AS(sylow(c12, 5), std::invalid_argument);
}

TEST_CASE("classify profiles") {
    for (i64 n : {2, 3, 6, 8, 12, 15}) {
        auto cn = build(spec_cyclic(n));
        auto p = classify(cn);
        CHECK(p.is_cyclic);
        CHECK(p.is_abelian);
        CHECK(p.is_nilpotent);
        CHECK(p.is_solvable);
        CHECK(p.is_dedekind);
        CHECK(p.fitting_order == n);
    }
    auto q8 = build(spec_generalized_quaternion(8));
    auto pq = classify(q8);
    CHECK(pq.is_dedekind);
    CHECK(pq.is_nilpotent);
    CHECK(!pq.is_abelian);
    CHECK(pq.two_group_class == TwoGroupClass::generalized_quaternion);

    auto s3 = build(spec_dihedral(6));
    auto ps = classify(s3);
    CHECK(ps.is_solvable);
    CHECK(!ps.is_nilpotent);
    CHECK(ps.fitting_order == 3);
    CHECK(ps.two_group_class == TwoGroupClass::not_2_group);

    // cyclic implies abelian implies nilpotent implies solvable, everywhere
    for (const auto& g : small_catalog()) {
        auto p = classify(g);
        if (p.is_cyclic) CHECK(p.is_abelian);
        if (p.is_abelian) CHECK(p.is_nilpotent);
        if (p.is_nilpotent) CHECK(p.is_solvable);
        CHECK(g.n % p.fitting_order == 0);
    }
}

TEST_CASE("dedekind recognition") {
    for (i64 m : {1, 3, 5, 7, 11, 13, 15}) {
        auto g = build(spec_direct(spec_cyclic(m), spec_generalized_quaternion(8)));
        CAPTURE(m);
        CHECK(classify(g).is_dedekind);
    }
    CHECK(!classify(build(spec_dihedral(8))).is_dedekind);
    CHECK(!classify(build(spec_dihedral(6))).is_dedekind);
}

TEST_CASE("classify respects the subgroup enumeration cap") {
    BuildLimits limits;
    limits.subgroup_cap = 100;
    auto g = build(spec_cyclic(120));
    CHECK_THROWS_AS(classify(g, limits), CapabilityError);
    try {
        classify(g, limits);
    } catch (const CapabilityError& e) {
        CHECK(std::string(e.what()).find("100") != std::string::npos);
    }
}

TEST_CASE("quotients") {
    auto q8 = build(spec_generalized_quaternion(8));
    auto z = center(q8);
    CHECK(z.size() == 2);
    auto q = quotient(q8, z);
    CHECK(q.n == 4);
    CHECK(q.exponent() == 2);

    auto c6 = build(spec_cyclic(6));
    auto c3 = generated_subgroup(c6, {2});
    auto q2 = quotient(c6, c3);
    CHECK(q2.n == 2);

    auto triv = generated_subgroup(c6, {});
    auto copy = quotient(c6, triv);
    CHECK(copy.n == 6);
    CHECK(same_order_type(copy, c6));

    // o(xN) divides o(x) for every coset
    for (const auto& g : small_catalog()) {
        auto d = derived_subgroup(g);
        if (d.size() == static_cast<int>(g.n)) continue;
        auto q3 = quotient(g, d);
        std::vector<int> coset_of(g.n, -1);
        {
            int idx = 0;
            std::vector<int> reps;
            for (int x = 0; x < g.n; ++x) {
                if (coset_of[x] >= 0) continue;
                for (int h : d.elements) coset_of[g.mul(x, h)] = idx;
                ++idx;
            }
        }
        for (int x = 0; x < g.n; ++x)
            CHECK(g.order_cache[x] % q3.order_cache[coset_of[x]] == 0);
    }

    auto s3 = build(spec_dihedral(6));
    auto c2 = generated_subgroup(s3, {3});
    CHECK(!c2.is_normal);
    CHECK_THROWS_AS(quotient(s3, c2), std::invalid_argument);
}

TEST_CASE("p-nilpotence with witness") {
    auto d12 = build(spec_dihedral(12));
    auto pn = is_p_nilpotent(d12, 2);
    REQUIRE(pn.is_p_nilpotent);
    CHECK(pn.complement->size() == 3);
    bool k_cyclic = false;
    for (int x : pn.complement->elements)
        if (d12.order_cache[x] == 3) k_cyclic = true;
    CHECK(k_cyclic);

    CHECK(!is_p_nilpotent(build(spec_a4()), 2).is_p_nilpotent);

    auto q8 = build(spec_generalized_quaternion(8));
    auto pn8 = is_p_nilpotent(q8, 2);
    CHECK(pn8.is_p_nilpotent);
    CHECK(pn8.complement->size() == 1);
}

TEST_CASE("p-nilpotence agrees with the exhaustive normal-subgroup oracle") {
    for (const auto& g : small_catalog()) {
        CAPTURE(g.label);
        for (auto [p, e] : factorize(g.n)) {
            i64 target = coprime_part(g.n, p);
            bool oracle = false;
            for (const auto& sub : all_subgroups(g))
                if (static_cast<i64>(sub.size()) == target && is_normal_set(g, sub)) {
                    oracle = true;
                    break;
                }
            CHECK(is_p_nilpotent(g, p).is_p_nilpotent == oracle);
        }
    }
}

TEST_CASE("fitting subgroup is the product of the p-cores") {
    auto s3 = build(spec_dihedral(6));
    CHECK(fitting_subgroup(s3).size() == 3);
    auto a4 = build(spec_a4());
    CHECK(fitting_subgroup(a4).size() == 4);
    auto c12 = build(spec_cyclic(12));
    CHECK(fitting_subgroup(c12).size() == 12);
}

TEST_CASE("quotient projection respects products") {
    for (const GroupSpec& spec :
         {spec_generalized_quaternion(8), spec_dihedral(12), spec_a4(), spec_modular(2, 4)}) {
        auto g = build(spec);
        auto z = center(g);
        if (z.size() == 1 || z.size() == static_cast<int>(g.n)) continue;
        auto q = quotient(g, z);
        std::vector<int> coset_of(g.n, -1);
        int idx = 0;
        for (int x = 0; x < g.n; ++x) {
            if (coset_of[x] >= 0) continue;
            for (int h : z.elements) coset_of[g.mul(x, h)] = idx;
            ++idx;
        }
        for (int x = 0; x < g.n; ++x)
            for (int y = 0; y < g.n; ++y)
                REQUIRE(coset_of[g.mul(x, y)] == q.mul(coset_of[x], coset_of[y]));
    }
}

TEST_CASE("elementary abelian enumeration matches a subgroup filter") {
    for (const GroupSpec& spec : {spec_dihedral(16), spec_a4(), spec_abelian({2, 2, 2})}) {
        auto g = build(spec);
        auto [p, e] = *factorize(g.n).begin();
        auto fast = elementary_abelian_subgroups(g, p);
        std::set<std::vector<int>> expected;
        for (const auto& sub : all_subgroups(g)) {
            bool elem = true;
            for (int x : sub)
                if (x != 0 && g.order_cache[x] != p) elem = false;
            bool abelian = true;
            for (int a : sub)
                for (int b : sub)
                    if (g.mul(a, b) != g.mul(b, a)) abelian = false;
            if (elem && abelian) expected.insert(sub);
        }
        CHECK(std::set<std::vector<int>>(fast.begin(), fast.end()) == expected);
    }
}

TEST_CASE("non-cyclic abelian 2-groups classify as other") {
    for (const GroupSpec& spec :
         {spec_abelian({4, 2}), spec_abelian({8, 2}), spec_abelian({4, 4}),
          spec_abelian({2, 2, 2}), spec_abelian({2, 2})}) {
        auto g = build(spec);
        CAPTURE(g.label);
        CHECK(classify(g).two_group_class == TwoGroupClass::other);
    }
    // non-2-groups and odd p-groups report not-2-group
    CHECK(classify(build(spec_cyclic(12))).two_group_class == TwoGroupClass::not_2_group);
    CHECK(classify(build(spec_abelian({3, 3}))).two_group_class == TwoGroupClass::not_2_group);
    // nonabelian order-16 groups outside the five named classes
    auto q8c2 = build(spec_direct(spec_generalized_quaternion(8), spec_cyclic(2)));
    CHECK(classify(q8c2).two_group_class == TwoGroupClass::other);
}
