#pragma once

#include <grouplab/group.hpp>

#include <optional>
#include <string>

namespace grouplab {

struct SylowInfo {
    i64 prime = 0;
    int exponent_of_n = 0;  // alpha with p^alpha exactly dividing |G|
    Subgroup representative;
    bool is_cyclic = false;
    bool is_generalized_quaternion = false;
    i64 group_exponent = 1;  // exp of the representative
    int max_elementary_abelian_rank = 0;
};

// Deterministic Sylow subgroup: seed with a maximal-order p-element,
// grow through normalizers until the full p-part is reached.
SylowInfo sylow(const FiniteGroup& g, i64 p);

enum class TwoGroupClass {
    not_2_group,
    cyclic,
    dihedral,
    semidihedral,
    generalized_quaternion,
    modular,
    other,
};

std::string to_string(TwoGroupClass c);

struct StructureProfile {
    bool is_cyclic = false;
    bool is_abelian = false;
    bool is_nilpotent = false;
    bool is_solvable = false;
    bool is_dedekind = false;
    TwoGroupClass two_group_class = TwoGroupClass::not_2_group;
    i64 fitting_order = 1;
};

StructureProfile classify(const FiniteGroup& g, const BuildLimits& limits = {});

// O_p(G): intersection of the conjugates of a Sylow p-subgroup.
Subgroup p_core(const FiniteGroup& g, i64 p);

// Fit(G) as the product of the p-cores.
Subgroup fitting_subgroup(const FiniteGroup& g);

struct PNilpotence {
    bool is_p_nilpotent = false;
    std::optional<Subgroup> complement;  // the normal p-complement K when true
};

// True iff the p'-order elements number n_{p'} and are product-closed;
// the witness is that subgroup.
PNilpotence is_p_nilpotent(const FiniteGroup& g, i64 p);

}  // namespace grouplab
