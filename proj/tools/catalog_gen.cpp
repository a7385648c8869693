// Regenerates the ingested catalog data (catalog/<n>/*.cay) from the
// classical classifications of groups of order 16, 24, and 36. Verifies
// pairwise non-isomorphism via invariant fingerprints before writing.

#include <grouplab/constructions.hpp>
#include <grouplab/group.hpp>
#include <grouplab/spectrum.hpp>
#include <grouplab/sylow.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace grouplab;

namespace {

FiniteGroup from_perms(int degree, const std::vector<std::vector<int>>& gens,
                       const std::string& label) {
    auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out(degree);
        for (int i = 0; i < degree; ++i) out[i] = b[a[i]];
        return out;
    };
    std::vector<int> identity(degree);
    for (int i = 0; i < degree; ++i) identity[i] = i;
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elements = {identity};
    index[identity] = 0;
    for (size_t qi = 0; qi < elements.size(); ++qi) {
        std::vector<int> cur = elements[qi];
        for (const auto& gen : gens) {
            std::vector<int> next = compose(cur, gen);
            if (!index.count(next)) {
                index[next] = static_cast<int>(elements.size());
                elements.push_back(std::move(next));
            }
        }
    }
    int n = static_cast<int>(elements.size());
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<size_t>(a) * n + b] = index.at(compose(elements[a], elements[b]));
    return make_group(n, std::move(table), label);
}

FiniteGroup relabel(FiniteGroup g, const std::string& label) {
    g.label = label;
    return g;
}

// Invariant fingerprint strong enough to separate the shipped catalogs.
std::string fingerprint(const FiniteGroup& g) {
    std::ostringstream os;
    os << histogram_to_json(order_histogram(g));
    os << "|ab=" << g.is_abelian();
    Subgroup z = center(g);
    os << "|z=" << histogram_to_json(order_histogram(g, z.elements));
    auto classes = conjugacy_classes(g);
    std::vector<size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    os << "|cls=";
    for (size_t s : sizes) os << s << ".";
    Subgroup d = derived_subgroup(g);
    os << "|der=" << histogram_to_json(order_histogram(g, d.elements));
    std::map<size_t, int> sub_count, nrm_count;
    for (const auto& s : all_subgroups(g)) {
        ++sub_count[s.size()];
        if (is_normal_set(g, s)) ++nrm_count[s.size()];
    }
    os << "|sub=";
    for (auto [sz, c] : sub_count) os << sz << ":" << c << ",";
    os << "|nrm=";
    for (auto [sz, c] : nrm_count) os << sz << ":" << c << ",";
    return os.str();
}

std::string file_safe(std::string s) {
    for (char& c : s) {
        if (c == '(' || c == ')' || c == ',' || c == ':' || c == '*') c = '_';
        c = static_cast<char>(tolower(static_cast<unsigned char>(c)));
    }
    return s;
}

void write_catalog(const std::string& root, i64 n, const std::vector<FiniteGroup>& groups) {
    // Pairwise distinctness gate.
    std::map<std::string, std::string> seen;
    for (const auto& g : groups) {
        std::string fp = fingerprint(g);
        if (seen.count(fp)) {
            std::cerr << "fingerprint collision at order " << n << ": " << g.label << " vs "
                      << seen[fp] << "\n";
            std::exit(1);
        }
        seen[fp] = g.label;
    }
    namespace fs = std::filesystem;
    fs::path dir = fs::path(root) / std::to_string(n);
    fs::create_directories(dir);
    int idx = 0;
    for (const auto& g : groups) {
        ++idx;
        char prefix[8];
        snprintf(prefix, sizeof prefix, "%02d_", idx);
        fs::path file = dir / (prefix + file_safe(g.label) + ".cay");
        std::ofstream out(file);
        save_cayley(g, out,
                    {"group: " + g.label, "complete-catalog: true",
                     "provenance: tools/catalog_gen, classical classification of order " +
                         std::to_string(n)});
        std::cout << file.string() << "  (" << g.label << ")\n";
    }
}

GroupSpec swap_action_c2c2_c4() {
    // C4 acting on C2xC2 by swapping the two coordinates.
    return spec_semidirect(spec_abelian({2, 2}), spec_cyclic(4), {{1, {0, 2, 1, 3}}},
                           "(C2xC2):C4");
}

GroupSpec c4_rtimes_c4() {
    return spec_semidirect(spec_cyclic(4), spec_cyclic(4), {{1, {0, 3, 2, 1}}}, "C4:C4");
}

FiniteGroup pauli_group() {
    // Central product D8 * C4: quotient of D8 x C4 by the diagonal C2.
    FiniteGroup big = build(spec_direct(spec_dihedral(8), spec_cyclic(4)));
    // r^2 is rotation index 2 in D8; z^2 is index 2 in C4; pair index 2*4+2.
    Subgroup diag = generated_subgroup(big, {2 * 4 + 2});
    return relabel(quotient(big, diag), "D8*C4");
}

std::vector<FiniteGroup> order16() {
    std::vector<FiniteGroup> out;
    out.push_back(build(spec_cyclic(16)));
    out.push_back(build(spec_abelian({8, 2})));
    out.push_back(build(spec_abelian({4, 4})));
    out.push_back(build(spec_abelian({4, 2, 2})));
    out.push_back(build(spec_abelian({2, 2, 2, 2})));
    out.push_back(build(spec_dihedral(16)));
    out.push_back(build(spec_generalized_quaternion(16)));
    out.push_back(build(spec_semidihedral(16)));
    out.push_back(build(spec_modular(2, 4)));
    out.push_back(build(spec_direct(spec_dihedral(8), spec_cyclic(2))));
    out.push_back(build(spec_direct(spec_generalized_quaternion(8), spec_cyclic(2))));
    out.push_back(build(swap_action_c2c2_c4()));
    out.push_back(build(c4_rtimes_c4()));
    out.push_back(pauli_group());
    return out;
}

std::vector<FiniteGroup> order24() {
    std::vector<FiniteGroup> out;
    out.push_back(build(spec_cyclic(24)));
    out.push_back(build(spec_abelian({12, 2})));
    out.push_back(build(spec_abelian({6, 2, 2})));
    out.push_back(build(spec_dihedral(24)));
    out.push_back(build(spec_dicyclic(6)));
    out.push_back(build(spec_sl23()));
    out.push_back(from_perms(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, "S4"));
    out.push_back(build(spec_direct(spec_a4(), spec_cyclic(2))));
    out.push_back(build(spec_direct(spec_dihedral(8), spec_cyclic(3))));
    out.push_back(build(spec_direct(spec_generalized_quaternion(8), spec_cyclic(3))));
    out.push_back(build(spec_direct(spec_cyclic(4), spec_dihedral(6))));
    out.push_back(build(spec_direct(spec_dihedral(12), spec_cyclic(2))));
    out.push_back(build(
        spec_semidirect(spec_cyclic(3), spec_cyclic(8), {{1, {0, 2, 1}}}, "C3:C8")));
    out.push_back(build(spec_direct(spec_dicyclic(3), spec_cyclic(2))));
    // C3 : D8, rotations invert, reflections act trivially.
    out.push_back(build(spec_semidirect(
        spec_cyclic(3), spec_dihedral(8),
        {{1, {0, 2, 1}}, {4, {0, 1, 2}}}, "C3:D8")));
    return out;
}

std::vector<FiniteGroup> order36() {
    std::vector<FiniteGroup> out;
    out.push_back(build(spec_cyclic(36)));
    out.push_back(build(spec_abelian({18, 2})));
    out.push_back(build(spec_abelian({12, 3})));
    out.push_back(build(spec_abelian({6, 6})));
    out.push_back(build(spec_dihedral(36)));
    out.push_back(build(spec_dicyclic(9)));
    // C9 acting on C2xC2 through its C3 quotient.
    out.push_back(build(spec_semidirect(spec_abelian({2, 2}), spec_cyclic(9),
                                        {{1, {0, 2, 3, 1}}}, "(C2xC2):C9")));
    out.push_back(build(spec_direct(spec_cyclic(3), spec_dicyclic(3))));
    // (C3xC3) : C4, C4 inverting (kernel C2).
    {
        std::vector<int> inv(9);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) inv[x * 3 + y] = ((3 - x) % 3) * 3 + (3 - y) % 3;
        out.push_back(build(spec_semidirect(spec_abelian({3, 3}), spec_cyclic(4), {{1, inv}},
                                            "(C3xC3):C4inv")));
    }
    // (C3xC3) : C4, faithful order-4 action (x,y) -> (y,-x).
    {
        std::vector<int> rot(9);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) rot[x * 3 + y] = y * 3 + (3 - x) % 3;
        out.push_back(build(spec_semidirect(spec_abelian({3, 3}), spec_cyclic(4), {{1, rot}},
                                            "(C3xC3):C4")));
    }
    out.push_back(build(spec_direct(spec_dihedral(6), spec_dihedral(6))));
    out.push_back(build(spec_direct(spec_cyclic(3), spec_a4())));
    out.push_back(build(spec_direct(spec_cyclic(6), spec_dihedral(6))));
    // C2 x ((C3xC3) : C2), inversion on both coordinates.
    {
        std::vector<int> inv(9);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) inv[x * 3 + y] = ((3 - x) % 3) * 3 + (3 - y) % 3;
        GroupSpec gd =
            spec_semidirect(spec_abelian({3, 3}), spec_cyclic(2), {{1, inv}}, "(C3xC3):C2");
        out.push_back(build(spec_direct(spec_cyclic(2), gd)));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::string root = argc > 1 ? argv[1] : "catalog";
    write_catalog(root, 16, order16());
    write_catalog(root, 24, order24());
    write_catalog(root, 36, order36());
    std::cout << "catalogs written under " << root << "\n";
    return 0;
}
