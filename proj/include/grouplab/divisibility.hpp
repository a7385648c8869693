#pragma once

#include <grouplab/group.hpp>
#include <grouplab/report.hpp>
#include <grouplab/spectrum.hpp>
#include <grouplab/sylow.hpp>

#include <optional>

namespace grouplab {

enum class ClaimId {
    frobenius,
    divv22,
    divv2,
    divv2222,
    frob3,
    lemmm_2va,
    t22va,
    dis,
    dec,
    ciic,
    noncyc,
};

std::string to_string(ClaimId c);
ClaimId claim_from_string(const std::string& s);
std::vector<ClaimId> all_claims();

struct LcmPSet {
    std::vector<int> elements;  // p-elements x with o(hy) | lcm(o(h), o(y)) for all h in <x>
    Subgroup lc;                // LC_p(G) = <elements>
};
LcmPSet lcm_p_set(const FiniteGroup& g, i64 p);

struct ARegularity {
    bool is_a_regular = false;
    bool capability_skipped = false;
    // First violating pair (y, M elements) when not A-regular.
    std::optional<std::pair<int, std::vector<int>>> violation;
};

// N must be a p-subgroup inside the Sylow representative. True iff for every
// p-element y with o(y) > exp(N) and every M <= N whose product set with <y>
// is a subgroup, that subgroup satisfies the LCM_p closure condition.
ARegularity is_a_regular(const FiniteGroup& g, const Subgroup& n, const SylowInfo& syl,
                         const BuildLimits& limits = {});

// Zemlin's invariant of a whole group or a subgroup: min{r, k(p-1)} when
// Sol(1,p^k,H) is product-closed of order p^r, else k(p-1).
i64 m_invariant(const FiniteGroup& h, int k, i64 p);
i64 m_invariant(const FiniteGroup& g, const Subgroup& h, int k, i64 p);

// One claim-instance checker. Missing params trigger an exhaustive sweep
// over all admissible values for that claim.
std::vector<DivisibilityReport> check_claim(ClaimId claim, const FiniteGroup& g,
                                            const std::map<std::string, i64>& params = {},
                                            const BuildLimits& limits = {});

// |Sol([y],d,G)| = #conjugates of <y> times |Sol([y],d_y,C_G(y))| with
// d_y = gcd(|C_G(y)|, d).
DivisibilityReport class_anchored_identity(const FiniteGroup& g, int y, i64 d);

std::vector<DivisibilityReport> sweep(const std::vector<FiniteGroup>& catalog,
                                      const std::vector<ClaimId>& claims,
                                      const BuildLimits& limits = {});

struct SweepSummary {
    int passes = 0;
    int failures = 0;
    int hypothesis_not_met = 0;
    int capability_skipped = 0;
};
SweepSummary summarize(const std::vector<DivisibilityReport>& rows);

// Sol([y], d, G) with [y] the generator set of <y>.
std::vector<int> sol_set_of_generator_class(const FiniteGroup& g, int y, i64 d);

// Profiles (r, s) of eligible subgroups N for the divisibility claims:
// order p^r, exponent p^s, with an A-regular witness of the given kind.
struct EligibleProfile {
    int r = 0;
    int s = 0;
    bool abelian = true;  // false: non-abelian Dedekind witness
};
std::vector<EligibleProfile> eligible_profiles(const FiniteGroup& g, const SylowInfo& syl,
                                               bool dedekind_nonabelian_too,
                                               const BuildLimits& limits = {});

// Largest elementary abelian A-regular subgroup of the Sylow representative;
// nullopt when even the rank-1 subgroup fails (never happens in practice).
std::optional<Subgroup> max_elementary_abelian_aregular(const FiniteGroup& g,
                                                        const SylowInfo& syl,
                                                        const BuildLimits& limits = {});

}  // namespace grouplab
