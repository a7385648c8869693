#pragma once

#include <grouplab/errors.hpp>
#include <grouplab/numeric.hpp>

#include <string>
#include <vector>

namespace grouplab {

struct BuildLimits {
    int order_cap = 2048;
    int subgroup_cap = 512;
};

// Finite group as a dense multiplication table over element indices.
// Element 0 is always the identity. Immutable after construction.
struct FiniteGroup {
    int n = 0;
    std::vector<int> table;  // row-major, table[a*n + b] = a*b
    std::vector<int> inv;
    std::vector<int> order_cache;
    std::string label;

    int mul(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
    int pow(int x, i64 e) const;
    int conj(int x, int g) const { return mul(mul(inv[g], x), g); }  // x^g = g^-1 x g
    i64 exponent() const;
    bool is_abelian() const;
};

// Validates the group axioms (identity at 0, Latin square, associativity:
// full check for n <= 256, deterministic sampling above), fills inverse and
// order caches, and checks element orders divide n.
FiniteGroup make_group(int n, std::vector<int> table, std::string label,
                       const BuildLimits& limits = {});

struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> elements;  // sorted, contains 0
    bool is_normal = false;

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const;
};

int element_order(const FiniteGroup& g, int x);

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& seeds);

// Closure of seeds under products, as a sorted element list.
std::vector<int> closure_of(const FiniteGroup& g, const std::vector<int>& seeds);

bool is_subgroup_set(const FiniteGroup& g, const std::vector<int>& sorted_elements);
bool is_normal_set(const FiniteGroup& g, const std::vector<int>& sorted_elements);
std::vector<int> conjugate_set(const FiniteGroup& g, const std::vector<int>& elements, int by);

// Wraps a sorted element set; validates it is a subgroup and caches normality.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);

// Conjugacy classes as sorted element lists, ordered by smallest member.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

Subgroup centralizer(const FiniteGroup& g, int x);
Subgroup centralizer_of_set(const FiniteGroup& g, const std::vector<int>& elements);
Subgroup normalizer(const FiniteGroup& g, const std::vector<int>& subgroup_elements);

Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);

// Quotient G/N over cosets; coset of the identity gets index 0, remaining
// cosets are ordered by their smallest member. Throws if N is not normal.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n);

// A subgroup reified as a standalone group; to_parent maps new indices back.
struct ReifiedSubgroup {
    FiniteGroup group;
    std::vector<int> to_parent;
};
ReifiedSubgroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s,
                                  const std::string& label = "");

// All subgroups as sorted element lists, ordered by (size, lexicographic).
// Throws CapabilityError when |G| exceeds limits.subgroup_cap.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g, const BuildLimits& limits = {});

// One representative per conjugacy class of subgroups, canonical order.
std::vector<std::vector<int>> subgroups_up_to_conjugacy(const FiniteGroup& g,
                                                        const BuildLimits& limits = {});

// Distinct cyclic subgroups <x>, canonical order.
std::vector<std::vector<int>> cyclic_subgroups(const FiniteGroup& g);

// All elementary abelian p-subgroups (including the trivial one), canonical order.
std::vector<std::vector<int>> elementary_abelian_subgroups(const FiniteGroup& g, i64 p);

int max_elementary_abelian_rank(const FiniteGroup& g, i64 p);

// All abelian subgroups contained in the given sorted universe (or the whole
// group when universe is empty), canonical order.
std::vector<std::vector<int>> abelian_subgroups_within(const FiniteGroup& g,
                                                       const std::vector<int>& universe);

}  // namespace grouplab
