#pragma once

#include <grouplab/constructions.hpp>
#include <grouplab/report.hpp>
#include <grouplab/spectrum.hpp>
#include <grouplab/sylow.hpp>

#include <array>
#include <optional>

namespace grouplab {

// Feasible matching between order classes, or a Hall violator proving no
// order-divisibility bijection exists.
struct BijectionCertificate {
    bool feasible = false;
    // (source order d, target order m, count), d | m, sorted; feasible only.
    std::vector<std::array<i64, 3>> assignment;
    std::vector<i64> violator;  // source orders with deficient neighborhoods
    i64 deficiency = 0;
};

std::string certificate_to_json(const BijectionCertificate& c);

// Transportation problem on the divisibility graph over distinct orders.
BijectionCertificate order_matching(const OrderHistogram& src, const OrderHistogram& tgt);

struct ClMemberResult {
    BijectionCertificate certificate;
    // Element-level bijection realizing the assignment (index in G -> index
    // in H), present only when requested and feasible.
    std::vector<int> element_map;
};

ClMemberResult cl_member(const FiniteGroup& g, const FiniteGroup& h, bool want_element_map = false);

// Coarse per-prime target: cyclic part for cyclic Sylow, C_{p^(a-1)} x C_p
// for non-cyclic (with the quaternion dichotomy at p = 2).
GroupSpec target_of(const FiniteGroup& g);

struct RefinedTarget {
    GroupSpec spec;
    std::map<std::string, i64> ranks;  // per-prime r_i actually used
    bool capability_skipped = false;
    std::string note;
};

// Fine target from maximal-rank A-regular subgroups per prime.
RefinedTarget refined_target_of(const FiniteGroup& g, const BuildLimits& limits = {});

struct MetacyclicBijection {
    bool ok = false;
    std::string refusal;  // failed hypothesis when not ok
    FiniteGroup target;
    std::vector<int> element_map;  // index in G -> index in target
    i64 p = 0, q = 0;
};

// The constructive map for Z-groups (all Sylow subgroups cyclic) onto
// C_{n/|QP|} x QP, validated element by element.
MetacyclicBijection metacyclic_bijection(const FiniteGroup& g, const BuildLimits& limits = {});

// Every group embeds (order-divisibly) into its coarse target, and groups
// with a non-cyclic, non-quaternion Sylow p embed into C_{n/p} x C_p.
std::vector<VerifyLine> verify_fmain(const std::vector<FiniteGroup>& catalog,
                                     const BuildLimits& limits = {});

// Independent oracle: backtracking search for an order-divisible bijection.
bool bijection_exists_bruteforce(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace grouplab
