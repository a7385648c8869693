#include <doctest.h>

#include <grouplab/constructions.hpp>
#include <grouplab/group.hpp>
#include <grouplab/spectrum.hpp>
#include <grouplab/sylow.hpp>

#include <map>
#include <set>
#include <sstream>

using namespace grouplab;

namespace {
const std::string kSrc = GROUPLAB_SOURCE_DIR;

std::string fingerprint(const FiniteGroup& g) {
    std::ostringstream os;
    os << histogram_to_json(order_histogram(g)) << "|ab" << g.is_abelian();
    os << "|z" << histogram_to_json(order_histogram(g, center(g).elements));
    std::vector<size_t> sizes;
    for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    for (size_t s : sizes) os << s << ".";
    os << "|d" << histogram_to_json(order_histogram(g, derived_subgroup(g).elements));
    std::map<size_t, int> sub_count;
    for (const auto& s : all_subgroups(g)) ++sub_count[s.size()];
    for (auto [sz, c] : sub_count) os << sz << ":" << c << ",";
    return os.str();
}

}  // namespace

TEST_CASE("shipped catalogs have the classified counts and pass the group axioms") {
    struct Expect {
        i64 n;
        size_t count;
    };
    for (Expect e : {Expect{16, 14}, Expect{24, 15}, Expect{36, 14}}) {
        auto cat = load_catalog_dir(kSrc + "/catalog", e.n);
        CAPTURE(e.n);
        CHECK(cat.groups.size() == e.count);
        CHECK(cat.complete);
        for (const auto& g : cat.groups) {
            CHECK(g.n == e.n);
            CHECK(!g.label.empty());
        }
    }
}

TEST_CASE("shipped catalog members are pairwise non-isomorphic") {
    for (i64 n : {16, 24, 36}) {
        auto cat = load_catalog_dir(kSrc + "/catalog", n);
        std::set<std::string> prints;
        for (const auto& g : cat.groups) {
            CAPTURE(g.label);
            CHECK(prints.insert(fingerprint(g)).second);
        }
    }
}

TEST_CASE("catalog 24 contains SL(2,3) with a quaternion Sylow 2-subgroup") {
    auto cat = load_catalog_dir(kSrc + "/catalog", 24);
    const FiniteGroup* sl = nullptr;
    for (const auto& g : cat.groups)
        if (g.label == "SL(2,3)") sl = &g;
    REQUIRE(sl != nullptr);
    auto syl = sylow(*sl, 2);
    CHECK(syl.representative.size() == 8);
    CHECK(syl.is_generalized_quaternion);
    CHECK(!is_p_nilpotent(*sl, 2).is_p_nilpotent);
    CHECK(!classify(*sl).is_nilpotent);
    CHECK(classify(*sl).is_solvable);
}

TEST_CASE("catalog 24 contains S4 with the symmetric-group profile") {
    auto cat = load_catalog_dir(kSrc + "/catalog", 24);
    const FiniteGroup* s4 = nullptr;
    for (const auto& g : cat.groups)
        if (g.label == "S4") s4 = &g;
    REQUIRE(s4 != nullptr);
    CHECK(!classify(*s4).is_nilpotent);
    CHECK(classify(*s4).is_solvable);
    CHECK(classify(*s4).fitting_order == 4);
    CHECK(order_histogram(*s4).count(4) == 6);
    CHECK(conjugacy_classes(*s4).size() == 5);
}

TEST_CASE("every shipped group matches its rebuilt counterpart where named") {
    // spot check: the cyclic and dihedral members agree with fresh builds
    auto cat16 = load_catalog_dir(kSrc + "/catalog", 16);
    for (const auto& g : cat16.groups) {
        if (g.label == "C16") CHECK(same_order_type(g, build(spec_cyclic(16))));
        if (g.label == "D16") CHECK(same_order_type(g, build(spec_dihedral(16))));
        if (g.label == "SD16") CHECK(same_order_type(g, build(spec_semidihedral(16))));
        if (g.label == "M16") CHECK(same_order_type(g, build(spec_modular(2, 4))));
    }
}
