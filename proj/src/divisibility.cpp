#include <grouplab/divisibility.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace grouplab {

std::string to_string(ClaimId c) {
    switch (c) {
        case ClaimId::frobenius: return "frobenius";
        case ClaimId::divv22: return "divv22";
        case ClaimId::divv2: return "divv2";
        case ClaimId::divv2222: return "divv2222";
        case ClaimId::frob3: return "frob3";
        case ClaimId::lemmm_2va: return "lemmm_2va";
        case ClaimId::t22va: return "t22va";
        case ClaimId::dis: return "dis";
        case ClaimId::dec: return "dec";
        case ClaimId::ciic: return "ciic";
        case ClaimId::noncyc: return "noncyc";
    }
    return "?";
}

ClaimId claim_from_string(const std::string& s) {
    for (ClaimId c : all_claims())
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown claim id: " + s);
}

std::vector<ClaimId> all_claims() {
    return {ClaimId::frobenius, ClaimId::divv22, ClaimId::divv2, ClaimId::divv2222,
            ClaimId::frob3,     ClaimId::lemmm_2va, ClaimId::t22va, ClaimId::dis,
            ClaimId::dec,       ClaimId::ciic,   ClaimId::noncyc};
}

namespace {

bool is_p_element(const FiniteGroup& g, int x, i64 p) {
    return coprime_part(g.order_cache[x], p) == 1;
}

std::vector<i64> primes_of(i64 n) {
    std::vector<i64> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::optional<i64> get(const std::map<std::string, i64>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    return it->second;
}

// Pairwise form of LCM_p(H) = H for a p-subgroup given as a sorted element
// set: equivalent to the per-element definition because h ranges over the
// union of the cyclic subgroups, which is all of H.
bool lcm_closed_set(const FiniteGroup& g, const std::vector<int>& h) {
    for (int a : h)
        for (int b : h) {
            i64 l = lcm_ll(g.order_cache[a], g.order_cache[b]);
            if (l % g.order_cache[g.mul(a, b)] != 0) return false;
        }
    return true;
}

struct ARegCache {
    const FiniteGroup* g = nullptr;
    i64 p = 0;
    // Representatives (min index) of the distinct cyclic subgroups generated
    // by nontrivial p-elements, with their orders.
    std::vector<std::pair<int, i64>> yreps;
    std::map<std::vector<int>, char> closed_ok;
    std::map<std::pair<int, std::vector<int>>, char> pair_state;  // 0 fail, 1 ok, 2 no subgroup
};

void init_areg_cache(ARegCache& c, const FiniteGroup& g, i64 p) {
    c.g = &g;
    c.p = p;
    std::set<std::vector<int>> seen;
    for (int x = 1; x < g.n; ++x) {
        if (!is_p_element(g, x, p)) continue;
        std::vector<int> cyc;
        int acc = 0;
        do {
            cyc.push_back(acc);
            acc = g.mul(acc, x);
        } while (acc != 0);
        std::sort(cyc.begin(), cyc.end());
        // x generates this subgroup; ascending iteration keeps the smallest
        // generator as the representative.
        if (seen.insert(cyc).second) c.yreps.push_back({x, g.order_cache[x]});
    }
    std::sort(c.yreps.begin(), c.yreps.end());
}

// 0 = lcm condition fails, 1 = ok, 2 = product set is not a subgroup.
char pair_state(ARegCache& c, int yrep, const std::vector<int>& m_elems) {
    auto key = std::make_pair(yrep, m_elems);
    auto it = c.pair_state.find(key);
    if (it != c.pair_state.end()) return it->second;
    const FiniteGroup& g = *c.g;

    std::vector<char> in(g.n, 0);
    std::vector<int> prod;
    {
        std::vector<int> ypow;
        int acc = 0;
        do {
            ypow.push_back(acc);
            acc = g.mul(acc, yrep);
        } while (acc != 0);
        for (int m : m_elems)
            for (int yp : ypow) {
                int v = g.mul(m, yp);
                if (!in[v]) {
                    in[v] = 1;
                    prod.push_back(v);
                }
            }
    }
    std::sort(prod.begin(), prod.end());
    char state = 1;
    for (int a : prod) {
        for (int b : prod)
            if (!in[g.mul(a, b)]) {
                state = 2;
                break;
            }
        if (state == 2) break;
    }
    if (state == 1) {
        auto cit = c.closed_ok.find(prod);
        if (cit == c.closed_ok.end()) {
            bool ok = lcm_closed_set(g, prod);
            cit = c.closed_ok.emplace(prod, ok ? 1 : 0).first;
        }
        state = cit->second ? 1 : 0;
    }
    c.pair_state.emplace(std::move(key), state);
    return state;
}

bool a_regular_core(ARegCache& c, const Subgroup& n, i64 exp_n,
                    std::optional<std::pair<int, std::vector<int>>>* violation,
                    const BuildLimits& limits) {
    const FiniteGroup& g = *c.g;
    if (g.is_abelian()) return true;  // every product set is an abelian subgroup

    ReifiedSubgroup rn = subgroup_as_group(g, n);
    std::vector<std::vector<int>> msets;
    for (const auto& sub : all_subgroups(rn.group, limits)) {
        std::vector<int> mapped;
        mapped.reserve(sub.size());
        for (int i : sub) mapped.push_back(rn.to_parent[i]);
        std::sort(mapped.begin(), mapped.end());
        msets.push_back(std::move(mapped));
    }

    for (auto [y, oy] : c.yreps) {
        if (oy <= exp_n) continue;
        for (const auto& m : msets) {
            if (pair_state(c, y, m) == 0) {
                if (violation) *violation = std::make_pair(y, m);
                return false;
            }
        }
    }
    return true;
}

i64 subgroup_exponent(const FiniteGroup& g, const std::vector<int>& elems) {
    i64 e = 1;
    for (int x : elems) e = lcm_ll(e, g.order_cache[x]);
    return e;
}

// Partition of the abelian p-group spanned by the p-elements of an abelian
// group, recovered from order counts.
std::vector<int> abelian_sylow_type(const FiniteGroup& g, i64 p) {
    std::vector<i64> c_log;  // c_i = log_p #{x : o(x) | p^i}
    for (int i = 0;; ++i) {
        i64 cnt = 0;
        i64 pi = ipow(p, i);
        for (int x = 0; x < g.n; ++x)
            if (pi % g.order_cache[x] == 0) ++cnt;
        c_log.push_back(exact_log(cnt, p));
        if (i > 0 && c_log[i] == c_log[i - 1]) {
            c_log.pop_back();
            break;
        }
    }
    // Conjugate-partition differences give lambda'.
    std::vector<int> conj;
    for (size_t i = 1; i < c_log.size(); ++i) conj.push_back(static_cast<int>(c_log[i] - c_log[i - 1]));
    // Transpose back to lambda.
    std::vector<int> lambda;
    for (int row = 1;; ++row) {
        int len = 0;
        for (int v : conj)
            if (v >= row) ++len;
        if (len == 0) break;
        lambda.push_back(len);
    }
    std::sort(lambda.rbegin(), lambda.rend());
    return lambda;
}

void subgroup_type_profiles(const std::vector<int>& lambda, size_t idx, int max_part, int sum,
                            int top, std::set<std::pair<int, int>>& out) {
    if (sum > 0) out.insert({sum, top});
    if (idx >= lambda.size()) return;
    for (int part = std::min(max_part, lambda[idx]); part >= 1; --part)
        subgroup_type_profiles(lambda, idx + 1, part, sum + part, top == 0 ? part : top, out);
}

}  // namespace

LcmPSet lcm_p_set(const FiniteGroup& g, i64 p) {
    if (!is_prime(p) || g.n % p != 0)
        throw std::invalid_argument("lcm_p_set: p must be a prime divisor of the order");
    std::vector<int> pelems;
    for (int x = 0; x < g.n; ++x)
        if (is_p_element(g, x, p)) pelems.push_back(x);

    LcmPSet out;
    for (int x : pelems) {
        bool ok = true;
        std::vector<int> xcyc;
        {
            int acc = 0;
            do {
                xcyc.push_back(acc);
                acc = g.mul(acc, x);
            } while (acc != 0);
        }
        for (int h : xcyc) {
            for (int y : pelems) {
                i64 l = lcm_ll(g.order_cache[h], g.order_cache[y]);
                if (l % g.order_cache[g.mul(h, y)] != 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) out.elements.push_back(x);
    }
    out.lc = generated_subgroup(g, out.elements);
    return out;
}

ARegularity is_a_regular(const FiniteGroup& g, const Subgroup& n, const SylowInfo& syl,
                         const BuildLimits& limits) {
    for (int x : n.elements)
        if (!syl.representative.contains(x))
            throw std::invalid_argument("is_a_regular: N is not inside the Sylow representative");
    ARegularity out;
    if (g.n > limits.subgroup_cap) {
        out.capability_skipped = true;
        return out;
    }
    ARegCache cache;
    init_areg_cache(cache, g, syl.prime);
    std::optional<std::pair<int, std::vector<int>>> violation;
    out.is_a_regular =
        a_regular_core(cache, n, subgroup_exponent(g, n.elements), &violation, limits);
    out.violation = violation;
    return out;
}

i64 m_invariant(const FiniteGroup& h, int k, i64 p) {
    if (k < 1) throw std::invalid_argument("m_invariant: k must be positive");
    if (!is_prime(p) || h.n % p != 0)
        throw std::invalid_argument("m_invariant: p must be a prime divisor of |H|");
    i64 pk = ipow(p, k);
    std::vector<int> sol;
    for (int x = 0; x < h.n; ++x)
        if (pk % h.order_cache[x] == 0) sol.push_back(x);
    i64 fallback = static_cast<i64>(k) * (p - 1);
    if (!is_subgroup_set(h, sol)) return fallback;
    i64 r = exact_log(static_cast<i64>(sol.size()), p);
    return std::min(r, fallback);
}

i64 m_invariant(const FiniteGroup& g, const Subgroup& h, int k, i64 p) {
    return m_invariant(subgroup_as_group(g, h).group, k, p);
}

std::vector<int> sol_set_of_generator_class(const FiniteGroup& g, int y, i64 d) {
    if (y < 0 || y >= g.n) throw std::invalid_argument("sol_set: index out of range");
    std::vector<int> gens;
    int acc = 0;
    do {
        acc = g.mul(acc, y);
        if (element_order(g, acc) == g.order_cache[y]) gens.push_back(acc);
    } while (acc != 0);
    return sol_set(g, gens, d);
}

std::vector<EligibleProfile> eligible_profiles(const FiniteGroup& g, const SylowInfo& syl,
                                               bool dedekind_nonabelian_too,
                                               const BuildLimits& limits) {
    std::vector<EligibleProfile> out;
    std::set<std::tuple<int, int, bool>> seen;
    auto push = [&](int r, int s, bool abelian) {
        if (r < 1) return;
        if (seen.insert({r, s, abelian}).second) out.push_back({r, s, abelian});
    };

    if (g.is_abelian()) {
        std::vector<int> lambda = abelian_sylow_type(g, syl.prime);
        std::set<std::pair<int, int>> profiles;
        subgroup_type_profiles(lambda, 0, lambda.empty() ? 0 : lambda[0], 0, 0, profiles);
        for (auto [r, s] : profiles) push(r, s, true);
    } else {
        ARegCache cache;
        init_areg_cache(cache, g, syl.prime);
        std::map<std::pair<int, int>, std::vector<std::vector<int>>> by_profile;
        for (const auto& cand :
             abelian_subgroups_within(g, syl.representative.elements)) {
            if (cand.size() < 2) continue;
            int r = exact_log(static_cast<i64>(cand.size()), syl.prime);
            int s = exact_log(subgroup_exponent(g, cand), syl.prime);
            by_profile[{r, s}].push_back(cand);
        }
        for (auto& [profile, cands] : by_profile) {
            std::set<std::vector<int>> dropped;
            for (const auto& cand : cands) {
                if (dropped.count(cand)) continue;
                for (int y = 0; y < g.n; ++y) dropped.insert(conjugate_set(g, cand, y));
                Subgroup n = make_subgroup(g, cand);
                if (a_regular_core(cache, n, subgroup_exponent(g, cand), nullptr, limits)) {
                    push(profile.first, profile.second, true);
                    break;
                }
            }
        }
        if (dedekind_nonabelian_too) {
            ReifiedSubgroup rp = subgroup_as_group(g, syl.representative);
            std::set<std::vector<int>> dropped;
            for (const auto& sub : all_subgroups(rp.group, limits)) {
                std::vector<int> mapped;
                for (int i : sub) mapped.push_back(rp.to_parent[i]);
                std::sort(mapped.begin(), mapped.end());
                if (dropped.count(mapped)) continue;
                for (int y = 0; y < g.n; ++y) dropped.insert(conjugate_set(g, mapped, y));
                ReifiedSubgroup rs = subgroup_as_group(g, make_subgroup(g, mapped));
                if (rs.group.is_abelian()) continue;
                bool dedekind = true;
                for (const auto& cyc : cyclic_subgroups(rs.group))
                    if (!is_normal_set(rs.group, cyc)) {
                        dedekind = false;
                        break;
                    }
                if (!dedekind) continue;
                Subgroup n = make_subgroup(g, mapped);
                if (a_regular_core(cache, n, subgroup_exponent(g, mapped), nullptr, limits)) {
                    int r = exact_log(static_cast<i64>(mapped.size()), syl.prime);
                    int s = exact_log(subgroup_exponent(g, mapped), syl.prime);
                    push(r, s, false);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const EligibleProfile& a, const EligibleProfile& b) {
        return std::tie(a.r, a.s, a.abelian) < std::tie(b.r, b.s, b.abelian);
    });
    return out;
}

std::optional<Subgroup> max_elementary_abelian_aregular(const FiniteGroup& g,
                                                        const SylowInfo& syl,
                                                        const BuildLimits& limits) {
    ReifiedSubgroup rp = subgroup_as_group(g, syl.representative);
    auto elem = elementary_abelian_subgroups(rp.group, syl.prime);
    // Largest first, then lexicographic; dedupe conjugates.
    std::stable_sort(elem.begin(), elem.end(), [](const auto& a, const auto& b) {
        return a.size() > b.size();
    });
    ARegCache cache;
    init_areg_cache(cache, g, syl.prime);
    std::set<std::vector<int>> dropped;
    for (const auto& sub : elem) {
        if (sub.size() < 2) continue;
        std::vector<int> mapped;
        for (int i : sub) mapped.push_back(rp.to_parent[i]);
        std::sort(mapped.begin(), mapped.end());
        if (dropped.count(mapped)) continue;
        for (int y = 0; y < g.n; ++y) dropped.insert(conjugate_set(g, mapped, y));
        Subgroup n = make_subgroup(g, mapped);
        if (a_regular_core(cache, n, syl.prime, nullptr, limits)) return n;
    }
    // Fall back to a central subgroup of order p if possible, else any <x>.
    Subgroup z = center(g);
    for (int x : z.elements)
        if (g.order_cache[x] == syl.prime && syl.representative.contains(x))
            return make_subgroup(g, closure_of(g, {x}));
    for (int x : syl.representative.elements)
        if (g.order_cache[x] == syl.prime) {
            Subgroup n = make_subgroup(g, closure_of(g, {x}));
            ARegCache cache2;
            init_areg_cache(cache2, g, syl.prime);
            if (a_regular_core(cache2, n, syl.prime, nullptr, limits)) return n;
        }
    return std::nullopt;
}

namespace {

using Params = std::map<std::string, i64>;

DivisibilityReport base_row(ClaimId claim, const FiniteGroup& g) {
    DivisibilityReport r;
    r.claim = to_string(claim);
    r.group_label = g.label;
    return r;
}

void finish_row(DivisibilityReport& r) {
    if (!r.hypothesis_met) {
        r.verdict = Verdict::hypothesis_not_met;
    } else {
        r.verdict = r.required.satisfied_by(r.observed) ? Verdict::pass : Verdict::fail;
    }
}

std::vector<DivisibilityReport> check_frobenius(const FiniteGroup& g, const Params& params) {
    std::vector<DivisibilityReport> rows;
    std::vector<i64> ds = get(params, "d") ? std::vector<i64>{*get(params, "d")}
                                           : divisors(g.n);
    for (i64 d : ds) {
        DivisibilityReport r = base_row(ClaimId::frobenius, g);
        r.params = {{"d", d}};
        r.hypothesis_met = g.n % d == 0;
        r.observed = sol_count_identity(g, d);
        r.required = {Requirement::Kind::modulus, d};
        finish_row(r);
        rows.push_back(std::move(r));
    }
    return rows;
}

// The A-regular subgroup search enumerates inside the Sylow subgroup; on
// non-abelian groups above the enumeration cap the claim is skipped.
bool profile_search_allowed(const FiniteGroup& g, const BuildLimits& limits) {
    return g.is_abelian() || g.n <= limits.subgroup_cap;
}

DivisibilityReport skipped_row(ClaimId claim, const FiniteGroup& g, const BuildLimits& limits) {
    DivisibilityReport r = base_row(claim, g);
    r.hypothesis_met = false;
    r.verdict = Verdict::capability_skipped;
    r.note = "subgroup search skipped: order " + std::to_string(g.n) +
             " exceeds subgroup enumeration cap " + std::to_string(limits.subgroup_cap);
    return r;
}

std::vector<DivisibilityReport> check_divv22(const FiniteGroup& g, const Params& params,
                                             const BuildLimits& limits) {
    std::vector<DivisibilityReport> rows;
    if (!profile_search_allowed(g, limits)) return {skipped_row(ClaimId::divv22, g, limits)};
    bool allow_dedekind = get(params, "dedekind").value_or(0) != 0;
    std::vector<i64> ps = get(params, "p") ? std::vector<i64>{*get(params, "p")}
                                           : primes_of(g.n);
    for (i64 p : ps) {
        SylowInfo syl = sylow(g, p);
        int t = exact_log(syl.group_exponent, p);
        auto profiles = eligible_profiles(g, syl, allow_dedekind, limits);
        if (!allow_dedekind) {
            profiles.erase(std::remove_if(profiles.begin(), profiles.end(),
                                          [](const EligibleProfile& e) { return !e.abelian; }),
                           profiles.end());
        }
        if (auto pr = get(params, "r")) {
            profiles.erase(std::remove_if(profiles.begin(), profiles.end(),
                                          [&](const EligibleProfile& e) { return e.r != *pr; }),
                           profiles.end());
        }
        if (auto pss = get(params, "s")) {
            profiles.erase(std::remove_if(profiles.begin(), profiles.end(),
                                          [&](const EligibleProfile& e) { return e.s != *pss; }),
                           profiles.end());
        }
        if (profiles.empty()) {
            DivisibilityReport r = base_row(ClaimId::divv22, g);
            r.params = {{"p", p}};
            r.hypothesis_met = false;
            r.note = "no eligible A-regular subgroup";
            finish_row(r);
            rows.push_back(std::move(r));
            continue;
        }
        std::vector<i64> ds = get(params, "d")
                                  ? std::vector<i64>{*get(params, "d")}
                                  : divisors(coprime_part(g.n, p));
        for (const auto& prof : profiles) {
            for (i64 d : ds) {
                for (int j = prof.s; j <= t; ++j) {
                    if (auto pj = get(params, "j"); pj && *pj != j) continue;
                    DivisibilityReport r = base_row(ClaimId::divv22, g);
                    r.params = {{"p", p}, {"d", d}, {"j", j}, {"r", prof.r}, {"s", prof.s}};
                    r.hypothesis_met = true;
                    if (!prof.abelian) r.note = "Dedekind non-abelian N variant";
                    r.observed = sol_count_identity(g, d * ipow(p, j));
                    r.required = {Requirement::Kind::modulus,
                                  d * ipow(p, prof.r + j - prof.s)};
                    finish_row(r);
                    rows.push_back(std::move(r));
                }
            }
        }
    }
    return rows;
}

std::vector<DivisibilityReport> check_divv2(const FiniteGroup& g, const Params& params,
                                            const BuildLimits& limits) {
    std::vector<DivisibilityReport> rows;
    if (!profile_search_allowed(g, limits)) return {skipped_row(ClaimId::divv2, g, limits)};
    std::vector<i64> ps = get(params, "p") ? std::vector<i64>{*get(params, "p")}
                                           : primes_of(g.n);
    for (i64 p : ps) {
        SylowInfo syl = sylow(g, p);
        int t = exact_log(syl.group_exponent, p);
        auto profiles = eligible_profiles(g, syl, /*dedekind_nonabelian_too=*/true, limits);
        if (profiles.empty()) {
            DivisibilityReport r = base_row(ClaimId::divv2, g);
            r.params = {{"p", p}};
            r.hypothesis_met = false;
            r.note = "no eligible Dedekind A-regular subgroup";
            finish_row(r);
            rows.push_back(std::move(r));
            continue;
        }
        // Representatives of the generator classes [y]^G, smallest first.
        std::vector<int> yreps;
        {
            std::set<int> seen;
            for (int y = 0; y < g.n; ++y) {
                auto cls = sol_set_of_generator_class(g, y, 1);  // [y]^G itself
                int rep = *std::min_element(cls.begin(), cls.end());
                if (seen.insert(rep).second) yreps.push_back(rep);
            }
            std::sort(yreps.begin(), yreps.end());
        }
        std::vector<i64> ds = get(params, "d")
                                  ? std::vector<i64>{*get(params, "d")}
                                  : divisors(coprime_part(g.n, p));
        for (const auto& prof : profiles) {
            if (auto pr = get(params, "r"); pr && prof.r != *pr) continue;
            if (auto pss = get(params, "s"); pss && prof.s != *pss) continue;
            for (i64 d : ds) {
                for (int j = prof.s; j <= t; ++j) {
                    if (auto pj = get(params, "j"); pj && *pj != j) continue;
                    for (int y : yreps) {
                        if (auto py = get(params, "y"); py && *py != y) continue;
                        i64 oy = g.order_cache[y];
                        if (gcd_ll(oy, d * p) != 1) continue;
                        DivisibilityReport r = base_row(ClaimId::divv2, g);
                        r.params = {{"p", p}, {"d", d},       {"j", j},
                                    {"r", prof.r}, {"s", prof.s}, {"y", y}};
                        r.hypothesis_met = true;
                        i64 d_coprime_oy = d;
                        for (auto [q, e] : factorize(oy)) d_coprime_oy = coprime_part(d_coprime_oy, q);
                        i64 modulus = lcm_ll(euler_phi(oy),
                                             ipow(p, prof.r + j - prof.s) * d_coprime_oy);
                        r.required = {Requirement::Kind::modulus, modulus};
                        r.observed = static_cast<i64>(
                            sol_set_of_generator_class(g, y, d * ipow(p, j)).size());
                        if (!prof.abelian) r.note = "Dedekind non-abelian N";
                        finish_row(r);
                        rows.push_back(std::move(r));
                    }
                }
            }
        }
    }
    return rows;
}

std::vector<DivisibilityReport> check_divv2222(const FiniteGroup& g, const Params& params,
                                               const BuildLimits& limits) {
    std::vector<DivisibilityReport> rows;
    if (!profile_search_allowed(g, limits)) return {skipped_row(ClaimId::divv2222, g, limits)};
    std::vector<i64> ps = primes_of(g.n);
    // Best profile per prime: maximize r - s, then r.
    std::map<i64, std::optional<EligibleProfile>> best;
    std::map<i64, int> tlog;
    for (i64 p : ps) {
        SylowInfo syl = sylow(g, p);
        tlog[p] = exact_log(syl.group_exponent, p);
        auto profiles = eligible_profiles(g, syl, /*dedekind_nonabelian_too=*/true, limits);
        std::optional<EligibleProfile> chosen;
        for (const auto& prof : profiles) {
            if (!chosen || prof.r - prof.s > chosen->r - chosen->s ||
                (prof.r - prof.s == chosen->r - chosen->s && prof.r > chosen->r))
                chosen = prof;
        }
        best[p] = chosen;
    }
    i64 want_pi = get(params, "pi").value_or(0);
    int subsets = 1 << ps.size();
    for (int mask = 1; mask < subsets; ++mask) {
        std::vector<i64> pi;
        i64 pi_product = 1;
        for (size_t i = 0; i < ps.size(); ++i)
            if (mask & (1 << i)) {
                pi.push_back(ps[i]);
                pi_product *= ps[i];
            }
        if (want_pi && pi_product != want_pi) continue;
        bool all_have = true;
        i64 r_prod = 1, s_prod = 1;
        for (i64 p : pi) {
            if (!best[p]) {
                all_have = false;
                break;
            }
            r_prod *= ipow(p, best[p]->r);
            s_prod *= ipow(p, best[p]->s);
        }
        if (!all_have) {
            DivisibilityReport r = base_row(ClaimId::divv2222, g);
            r.params = {{"pi", pi_product}};
            r.hypothesis_met = false;
            r.note = "a prime in pi lacks a Dedekind A-regular subgroup";
            finish_row(r);
            rows.push_back(std::move(r));
            continue;
        }
        // d runs over divisors of n coprime to every prime of pi.
        std::vector<i64> ds;
        if (auto pd = get(params, "d")) {
            ds = {*pd};
        } else {
            i64 npart = g.n;
            for (i64 p : pi) npart = coprime_part(npart, p);
            ds = divisors(npart);
        }
        // j = prod p^{j_p}, s_p <= j_p <= t_p.
        std::vector<std::pair<i64, i64>> jfactors = {{1, 1}};  // (j value, r*j/s contribution)
        for (i64 p : pi) {
            std::vector<std::pair<i64, i64>> next;
            for (auto [jv, rc] : jfactors)
                for (int jp = best[p]->s; jp <= tlog[p]; ++jp)
                    next.push_back({jv * ipow(p, jp),
                                    rc * ipow(p, best[p]->r + jp - best[p]->s)});
            jfactors = std::move(next);
        }
        for (i64 d : ds)
            for (auto [jv, rc] : jfactors) {
                if (auto pj = get(params, "j"); pj && *pj != jv) continue;
                DivisibilityReport r = base_row(ClaimId::divv2222, g);
                r.params = {{"pi", pi_product}, {"d", d}, {"j", jv}, {"r", r_prod}, {"s", s_prod}};
                r.hypothesis_met = true;
                r.observed = sol_count_identity(g, d * jv);
                r.required = {Requirement::Kind::modulus, d * rc};
                finish_row(r);
                rows.push_back(std::move(r));
            }
    }
    return rows;
}

std::vector<DivisibilityReport> check_frob3(const FiniteGroup& g, const Params& params) {
    std::vector<DivisibilityReport> rows;
    std::vector<i64> ps = get(params, "p") ? std::vector<i64>{*get(params, "p")}
                                           : primes_of(g.n);
    for (i64 p : ps) {
        SylowInfo syl = sylow(g, p);
        FiniteGroup pg = subgroup_as_group(g, syl.representative).group;
        std::vector<i64> ds = get(params, "d")
                                  ? std::vector<i64>{*get(params, "d")}
                                  : divisors(coprime_part(g.n, p));
        for (int j = 1; j <= syl.exponent_of_n; ++j) {
            if (auto pj = get(params, "j"); pj && *pj != j) continue;
            i64 m = m_invariant(pg, j, p);
            for (i64 d : ds) {
                DivisibilityReport r = base_row(ClaimId::frob3, g);
                r.params = {{"p", p}, {"d", d}, {"j", j}, {"m", m}};
                r.hypothesis_met = true;
                r.observed = sol_count_identity(g, d * ipow(p, j));
                r.required = {Requirement::Kind::modulus, d * ipow(p, m)};
                r.note = "m = m(P,j,p) on the Sylow subgroup, Zemlin term read as k(p-1)";
                finish_row(r);
                rows.push_back(std::move(r));
            }
        }
    }
    return rows;
}

std::vector<DivisibilityReport> check_2va_family(ClaimId claim, const FiniteGroup& g,
                                                 const Params& params) {
    std::vector<DivisibilityReport> rows;
    if (g.n % 2 != 0) {
        DivisibilityReport r = base_row(claim, g);
        r.hypothesis_met = false;
        r.note = "odd order";
        finish_row(r);
        rows.push_back(std::move(r));
        return rows;
    }
    SylowInfo syl = sylow(g, 2);
    i64 half = static_cast<i64>(syl.representative.size()) / 2;
    bool has_half_order = false;
    for (int x : syl.representative.elements)
        if (g.order_cache[x] == half) has_half_order = true;
    if (has_half_order) {
        DivisibilityReport r = base_row(claim, g);
        r.params = {{"p", 2}};
        r.hypothesis_met = false;
        r.note = "Sylow 2-subgroup has an element of order |P|/2";
        finish_row(r);
        rows.push_back(std::move(r));
        return rows;
    }
    int t = exact_log(syl.group_exponent, 2);
    std::vector<i64> ds = get(params, "d") ? std::vector<i64>{*get(params, "d")}
                                           : divisors(coprime_part(g.n, 2));
    for (i64 d : ds)
        for (int j = 1; j <= t; ++j) {
            if (auto pj = get(params, "j"); pj && *pj != j) continue;
            DivisibilityReport r = base_row(claim, g);
            r.params = {{"p", 2}, {"d", d}, {"j", j}};
            r.hypothesis_met = true;
            r.observed = sol_count_identity(g, d * ipow(2, j));
            if (claim == ClaimId::lemmm_2va)
                r.required = {Requirement::Kind::modulus, d * ipow(2, j + 1)};
            else
                r.required = {Requirement::Kind::lower_bound, d * ipow(2, j + 2)};
            finish_row(r);
            rows.push_back(std::move(r));
        }
    return rows;
}

std::vector<DivisibilityReport> check_dis(const FiniteGroup& g, const Params& params) {
    std::vector<DivisibilityReport> rows;
    if (g.n == 1) return rows;
    i64 p = primes_of(g.n)[0];
    SylowInfo syl = sylow(g, p);
    bool hyp = !syl.is_cyclic && !syl.is_generalized_quaternion;
    if (!hyp) {
        DivisibilityReport r = base_row(ClaimId::dis, g);
        r.params = {{"p", p}};
        r.hypothesis_met = false;
        r.note = "Sylow subgroup for the smallest prime is cyclic or generalized quaternion";
        finish_row(r);
        rows.push_back(std::move(r));
        return rows;
    }
    int t = exact_log(syl.group_exponent, p);
    std::vector<i64> ds;
    std::string variant;
    if (p > 2) {
        ds = get(params, "d") ? std::vector<i64>{*get(params, "d")}
                              : divisors(coprime_part(g.n, p));
        variant = "variant: p>2, all d coprime to p";
    } else {
        ds = {get(params, "d").value_or(coprime_part(g.n, 2))};
        variant = "variant: p=2, d = n_{2'} only";
    }
    for (i64 d : ds)
        for (int m = 1; m <= t; ++m) {
            if (auto pm = get(params, "m"); pm && *pm != m) continue;
            DivisibilityReport r = base_row(ClaimId::dis, g);
            r.params = {{"p", p}, {"d", d}, {"m", m}};
            r.hypothesis_met = true;
            r.observed = sol_count_identity(g, d * ipow(p, m));
            r.required = {Requirement::Kind::lower_bound, d * ipow(p, m + 1)};
            r.note = variant;
            finish_row(r);
            rows.push_back(std::move(r));
        }
    return rows;
}

std::vector<DivisibilityReport> check_dec(const FiniteGroup& g, const Params& params) {
    std::vector<DivisibilityReport> rows;
    DivisibilityReport r = base_row(ClaimId::dec, g);
    if (g.n % 2 != 0) {
        r.hypothesis_met = false;
        r.note = "odd order";
        finish_row(r);
        rows.push_back(std::move(r));
        return rows;
    }
    SylowInfo syl = sylow(g, 2);
    i64 d = get(params, "d").value_or(coprime_part(g.n, 2));
    r.params = {{"d", d}};
    if (!syl.is_generalized_quaternion) {
        r.hypothesis_met = false;
        r.note = "Sylow 2-subgroup is not generalized quaternion";
        finish_row(r);
        rows.push_back(std::move(r));
        return rows;
    }
    i64 sol2d = sol_count_identity(g, 2 * d);
    if (sol2d != 2 * d) {
        r.hypothesis_met = false;
        r.params["sol_2d"] = sol2d;
        r.note = "|Sol(1,2d,G)| != 2d";
        finish_row(r);
        rows.push_back(std::move(r));
        return rows;
    }
    PNilpotence pn = is_p_nilpotent(g, 2);
    i64 odd_count = 0;
    for (int x = 0; x < g.n; ++x)
        if (g.order_cache[x] % 2 != 0) ++odd_count;
    r.hypothesis_met = true;
    r.observed = odd_count;
    r.required = {Requirement::Kind::modulus, coprime_part(g.n, 2)};
    r.verdict = pn.is_p_nilpotent ? Verdict::pass : Verdict::fail;
    r.note = pn.is_p_nilpotent ? "normal 2-complement found (p-nilpotence witness)"
                               : "no normal 2-complement";
    rows.push_back(std::move(r));
    return rows;
}

std::vector<DivisibilityReport> check_ciic(const FiniteGroup& g, const Params& params) {
    std::vector<DivisibilityReport> rows;
    std::vector<i64> es;
    if (auto pe = get(params, "e")) {
        es = {*pe};
    } else {
        for (i64 e : divisors(g.n))
            if (sol_count_identity(g, e) == e) es.push_back(e);
    }
    for (i64 e : es) {
        if (sol_count_identity(g, e) != e || g.n % e != 0) {
            DivisibilityReport r = base_row(ClaimId::ciic, g);
            r.params = {{"e", e}};
            r.hypothesis_met = false;
            r.note = "e != |Sol(1,e,G)| or e does not divide |G|";
            finish_row(r);
            rows.push_back(std::move(r));
            continue;
        }
        std::vector<i64> shared;
        for (i64 p : primes_of(g.n))
            if (e % p == 0 && (g.n / e) % p == 0) shared.push_back(p);
        if (shared.empty()) {
            DivisibilityReport r = base_row(ClaimId::ciic, g);
            r.params = {{"e", e}};
            r.hypothesis_met = true;
            r.observed = e;
            r.required = {Requirement::Kind::modulus, e};
            r.verdict = Verdict::pass;
            r.note = "vacuous: no prime divides both e and |G|/e";
            rows.push_back(std::move(r));
            continue;
        }
        for (i64 p : shared) {
            DivisibilityReport r = base_row(ClaimId::ciic, g);
            r.params = {{"e", e}, {"p", p}};
            r.hypothesis_met = true;
            r.observed = e;
            r.required = {Requirement::Kind::modulus, e};
            SylowInfo syl = sylow(g, p);
            bool ok;
            std::string cls;
            if (p == 2) {
                TwoGroupClass tc =
                    classify(subgroup_as_group(g, syl.representative).group).two_group_class;
                cls = to_string(tc);
                ok = syl.is_cyclic || tc == TwoGroupClass::cyclic ||
                     tc == TwoGroupClass::generalized_quaternion ||
                     tc == TwoGroupClass::dihedral || tc == TwoGroupClass::semidihedral;
            } else {
                ok = syl.is_cyclic;
                cls = ok ? "cyclic" : "not cyclic";
            }
            r.verdict = ok ? Verdict::pass : Verdict::fail;
            r.note = "Sylow class: " + cls;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::vector<DivisibilityReport> check_noncyc(const FiniteGroup& g, const Params& params) {
    std::vector<DivisibilityReport> rows;
    std::vector<i64> ps = get(params, "p") ? std::vector<i64>{*get(params, "p")}
                                           : primes_of(g.n);
    for (i64 p : ps) {
        if (p == 2) continue;
        SylowInfo syl = sylow(g, p);
        DivisibilityReport r = base_row(ClaimId::noncyc, g);
        r.params = {{"p", p}};
        r.hypothesis_met = !syl.is_cyclic;
        r.observed = syl.max_elementary_abelian_rank;
        r.required = {Requirement::Kind::lower_bound, 2};
        if (!r.hypothesis_met) r.note = "Sylow subgroup is cyclic";
        finish_row(r);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

DivisibilityReport class_anchored_identity(const FiniteGroup& g, int y, i64 d) {
    if (y < 0 || y >= g.n) throw std::invalid_argument("class_anchored_identity: bad element");
    if (d < 1) throw std::invalid_argument("class_anchored_identity: d must be positive");
    DivisibilityReport r;
    r.claim = "class_anchored_identity";
    r.group_label = g.label;
    r.params = {{"y", y}, {"d", d}};
    r.hypothesis_met = true;
    r.observed = static_cast<i64>(sol_set_of_generator_class(g, y, d).size());

    std::vector<int> ycyc = closure_of(g, {y});
    Subgroup nrm = normalizer(g, ycyc);
    i64 conjugates = g.n / nrm.size();

    Subgroup cent = centralizer(g, y);
    ReifiedSubgroup rc = subgroup_as_group(g, cent);
    int y_in_c = static_cast<int>(
        std::lower_bound(rc.to_parent.begin(), rc.to_parent.end(), y) - rc.to_parent.begin());
    i64 dy = gcd_ll(static_cast<i64>(cent.size()), d);
    i64 inner = static_cast<i64>(sol_set_of_generator_class(rc.group, y_in_c, dy).size());

    r.required = {Requirement::Kind::modulus, conjugates * inner};
    r.params["conjugates"] = conjugates;
    r.params["inner"] = inner;
    r.verdict = (r.observed == conjugates * inner) ? Verdict::pass : Verdict::fail;
    r.note = "equality check: |Sol([y],d,G)| = [G:N_G(<y>)]*|Sol([y],d_y,C_G(y))|";
    return r;
}

std::vector<DivisibilityReport> check_claim(ClaimId claim, const FiniteGroup& g,
                                            const std::map<std::string, i64>& params,
                                            const BuildLimits& limits) {
    switch (claim) {
        case ClaimId::frobenius: return check_frobenius(g, params);
        case ClaimId::divv22: return check_divv22(g, params, limits);
        case ClaimId::divv2: return check_divv2(g, params, limits);
        case ClaimId::divv2222: return check_divv2222(g, params, limits);
        case ClaimId::frob3: return check_frob3(g, params);
        case ClaimId::lemmm_2va: return check_2va_family(ClaimId::lemmm_2va, g, params);
        case ClaimId::t22va: return check_2va_family(ClaimId::t22va, g, params);
        case ClaimId::dis: return check_dis(g, params);
        case ClaimId::dec: return check_dec(g, params);
        case ClaimId::ciic: return check_ciic(g, params);
        case ClaimId::noncyc: return check_noncyc(g, params);
    }
    throw std::invalid_argument("check_claim: unknown claim");
}

std::vector<DivisibilityReport> sweep(const std::vector<FiniteGroup>& catalog,
                                      const std::vector<ClaimId>& claims,
                                      const BuildLimits& limits) {
    std::vector<DivisibilityReport> rows;
    for (const FiniteGroup& g : catalog)
        for (ClaimId c : claims) {
            auto part = check_claim(c, g, {}, limits);
            rows.insert(rows.end(), part.begin(), part.end());
        }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const DivisibilityReport& a, const DivisibilityReport& b) {
                         if (a.group_label != b.group_label) return a.group_label < b.group_label;
                         if (a.claim != b.claim) return a.claim < b.claim;
                         return a.params < b.params;
                     });
    return rows;
}

SweepSummary summarize(const std::vector<DivisibilityReport>& rows) {
    SweepSummary s;
    for (const auto& r : rows) {
        switch (r.verdict) {
            case Verdict::pass: ++s.passes; break;
            case Verdict::fail: ++s.failures; break;
            case Verdict::hypothesis_not_met: ++s.hypothesis_not_met; break;
            case Verdict::capability_skipped: ++s.capability_skipped; break;
        }
    }
    return s;
}

}  // namespace grouplab
