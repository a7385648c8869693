#pragma once

#include <grouplab/bijection.hpp>
#include <grouplab/constructions.hpp>
#include <grouplab/report.hpp>
#include <grouplab/spectrum.hpp>

namespace grouplab {

struct PsiTier {
    i64 n = 0;
    int tier_index = 0;
    std::vector<std::string> members;  // sorted labels
    mpz_class psi_value;
};

// Descending-psi tiers over the non-cyclic groups of a complete catalog of
// order n. Refuses incomplete catalogs unless advisory_incomplete is set.
std::vector<PsiTier> rank_tiers(const Catalog& catalog, int k_max,
                                bool advisory_incomplete = false);

std::string tiers_to_csv(const std::vector<PsiTier>& tiers);
std::string tiers_to_json(const std::vector<PsiTier>& tiers);

// Third-psi-tier structure checks: solvability, the normal p-complement at
// the smallest prime with non-cyclic Sylow, cyclic K, and the two
// order-type clauses (surrogate-verified).
std::vector<VerifyLine> verify_main5(const Catalog& catalog, const BuildLimits& limits = {});

// Second-largest sum of k-th powers of element orders over all groups of
// order n: the witnesses match one of the three structural branches.
std::vector<VerifyLine> verify_coo(const Catalog& catalog, i64 k, const BuildLimits& limits = {});

// Bound suite for one group: the psi_{f,l}/psi^{f,l} comparisons against
// the per-prime targets, the exact rational mean-order bound, and the
// Omega_1 recursion with the closed-form discrepancy flag.
std::vector<VerifyLine> verify_bounds(const FiniteGroup& g, int l,
                                      const std::map<i64, int>& rank_choice = {},
                                      const BuildLimits& limits = {});

// psi equality iff identical order type on order-divisibly matched pairs,
// plus p-nilpotence transfer when psi values agree.
std::vector<VerifyLine> verify_same_pnil(const std::vector<std::pair<const FiniteGroup*,
                                                                     const FiniteGroup*>>& pairs);

// Sum of k-th powers of element orders (psi^{I,k}).
mpz_class psi_power_sum(const FiniteGroup& g, i64 k);

}  // namespace grouplab
