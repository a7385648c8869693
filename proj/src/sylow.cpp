#include <grouplab/sylow.hpp>

#include <algorithm>
#include <stdexcept>

namespace grouplab {

namespace {

bool is_prime_power_size(size_t sz, i64 p) {
    i64 m = static_cast<i64>(sz);
    while (m % p == 0) m /= p;
    return m == 1;
}

bool set_is_abelian(const FiniteGroup& g, const std::vector<int>& elems) {
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
            if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
    return true;
}

}  // namespace

SylowInfo sylow(const FiniteGroup& g, i64 p) {
    if (!is_prime(p) || g.n % p != 0)
        throw std::invalid_argument("sylow: p must be a prime divisor of the group order");
    i64 target = p_part(g.n, p);

    // Seed: p-element of maximal order, smallest index breaking ties.
    int seed = 0;
    for (int x = 0; x < g.n; ++x) {
        i64 o = g.order_cache[x];
        if (o % p == 0 && coprime_part(o, p) == 1 && o > g.order_cache[seed]) seed = x;
    }
    Subgroup s = generated_subgroup(g, {seed});

    while (static_cast<i64>(s.size()) < target) {
        Subgroup nor = normalizer(g, s.elements);
        bool extended = false;
        for (int y : nor.elements) {
            if (s.contains(y)) continue;
            if (coprime_part(g.order_cache[y], p) != 1) continue;
            std::vector<int> seeds = s.elements;
            seeds.push_back(y);
            std::vector<int> k = closure_of(g, seeds);
            if (is_prime_power_size(k.size(), p)) {
                s = make_subgroup(g, std::move(k));
                extended = true;
                break;
            }
        }
        if (!extended)
            throw std::runtime_error("sylow: extension stalled (invalid group?)");
    }

    SylowInfo info;
    info.prime = p;
    info.exponent_of_n = exact_log(target, p);
    info.representative = s;

    i64 expo = 1;
    int involutions = 0;
    bool has_full_order = false;
    for (int x : s.elements) {
        i64 o = g.order_cache[x];
        expo = lcm_ll(expo, o);
        if (o == 2) ++involutions;
        if (o == target) has_full_order = true;
    }
    info.group_exponent = expo;
    info.is_cyclic = has_full_order;
    info.is_generalized_quaternion =
        p == 2 && target >= 8 && involutions == 1 && !set_is_abelian(g, s.elements);

    ReifiedSubgroup rs = subgroup_as_group(g, s);
    info.max_elementary_abelian_rank = max_elementary_abelian_rank(rs.group, p);
    return info;
}

std::string to_string(TwoGroupClass c) {
    switch (c) {
        case TwoGroupClass::not_2_group: return "not-2-group";
        case TwoGroupClass::cyclic: return "cyclic";
        case TwoGroupClass::dihedral: return "dihedral";
        case TwoGroupClass::semidihedral: return "semidihedral";
        case TwoGroupClass::generalized_quaternion: return "generalized-quaternion";
        case TwoGroupClass::modular: return "modular";
        case TwoGroupClass::other: return "other";
    }
    return "?";
}

namespace {

TwoGroupClass classify_two_group(const FiniteGroup& g) {
    auto fac = factorize(g.n);
    if (fac.size() != 1 || fac.begin()->first != 2) return TwoGroupClass::not_2_group;
    int n = g.n;
    i64 expo = g.exponent();
    if (expo == n) return TwoGroupClass::cyclic;
    if (g.n < 8) return TwoGroupClass::other;  // only C2xC2 left below 8

    bool abelian = g.is_abelian();
    if (abelian) return TwoGroupClass::other;  // non-cyclic abelian
    int involutions = 0;
    for (int x = 1; x < n; ++x)
        if (g.order_cache[x] == 2) ++involutions;
    if (involutions == 1) return TwoGroupClass::generalized_quaternion;

    if (expo * 2 == n) {
        // Cyclic <a> of index 2; classify by the conjugation exponent a^b = a^t.
        int a = -1;
        for (int x = 0; x < n; ++x)
            if (g.order_cache[x] == expo) {
                a = x;
                break;
            }
        std::vector<int> cyc;
        {
            int acc = 0;
            do {
                cyc.push_back(acc);
                acc = g.mul(acc, a);
            } while (acc != 0);
        }
        std::vector<char> in(n, 0);
        for (int x : cyc) in[x] = 1;
        int b = -1;
        for (int x = 0; x < n; ++x)
            if (!in[x] && g.order_cache[x] == 2) {
                b = x;
                break;
            }
        if (b < 0) return TwoGroupClass::other;  // no outside involution (handled above for GQ)
        int conj = g.conj(a, b);
        i64 t = -1;
        int acc = 0;
        for (i64 k = 0; k < expo; ++k) {
            if (acc == conj) {
                t = k;
                break;
            }
            acc = g.mul(acc, a);
        }
        i64 half = expo / 2;  // 2^{e-2}
        if (t == expo - 1) return TwoGroupClass::dihedral;
        if (t == half - 1) return TwoGroupClass::semidihedral;
        if (t == half + 1) return TwoGroupClass::modular;
        if (t == 1) return TwoGroupClass::other;  // abelian C_{n/2} x C2
        return TwoGroupClass::other;
    }
    return TwoGroupClass::other;
}

}  // namespace

Subgroup p_core(const FiniteGroup& g, i64 p) {
    SylowInfo info = sylow(g, p);
    std::vector<char> common(g.n, 0);
    for (int x : info.representative.elements) common[x] = 1;
    for (int y = 0; y < g.n; ++y) {
        std::vector<int> conj = conjugate_set(g, info.representative.elements, y);
        std::vector<char> in(g.n, 0);
        for (int x : conj) in[x] = 1;
        for (int x = 0; x < g.n; ++x) common[x] = common[x] && in[x];
    }
    std::vector<int> elems;
    for (int x = 0; x < g.n; ++x)
        if (common[x]) elems.push_back(x);
    return make_subgroup(g, std::move(elems));
}

Subgroup fitting_subgroup(const FiniteGroup& g) {
    std::vector<int> seeds;
    for (auto [p, e] : factorize(g.n)) {
        Subgroup core = p_core(g, p);
        seeds.insert(seeds.end(), core.elements.begin(), core.elements.end());
    }
    if (seeds.empty()) seeds.push_back(0);
    return generated_subgroup(g, seeds);
}

StructureProfile classify(const FiniteGroup& g, const BuildLimits& limits) {
    if (g.n > limits.subgroup_cap)
        throw CapabilityError("classify: order " + std::to_string(g.n) +
                              " exceeds subgroup enumeration cap " +
                              std::to_string(limits.subgroup_cap));
    StructureProfile out;
    out.is_abelian = g.is_abelian();
    out.is_cyclic = false;
    for (int x = 0; x < g.n; ++x)
        if (g.order_cache[x] == g.n) {
            out.is_cyclic = true;
            break;
        }

    auto fac = factorize(g.n);

    bool nilpotent = true;
    for (auto [p, e] : fac)
        if (!sylow(g, p).representative.is_normal) {
            nilpotent = false;
            break;
        }
    out.is_nilpotent = nilpotent;

    // Derived series down to the trivial group.
    {
        bool solvable = false;
        FiniteGroup work = g;
        for (;;) {
            Subgroup d = derived_subgroup(work);
            if (d.size() == work.n) break;  // perfect, not solvable
            if (d.size() == 1) {
                solvable = true;
                break;
            }
            work = subgroup_as_group(work, d).group;
        }
        out.is_solvable = solvable || g.n == 1;
    }

    // Dedekind: every subgroup normal, equivalently every cyclic subgroup normal.
    out.is_dedekind = true;
    for (const auto& cyc : cyclic_subgroups(g))
        if (!is_normal_set(g, cyc)) {
            out.is_dedekind = false;
            break;
        }

    out.two_group_class = classify_two_group(g);

    out.fitting_order = 1;
    for (auto [p, e] : fac) out.fitting_order *= p_core(g, p).size();
    return out;
}

PNilpotence is_p_nilpotent(const FiniteGroup& g, i64 p) {
    if (!is_prime(p) || g.n % p != 0)
        throw std::invalid_argument("is_p_nilpotent: p must be a prime divisor of the order");
    i64 target = coprime_part(g.n, p);
    std::vector<int> elems;
    for (int x = 0; x < g.n; ++x)
        if (g.order_cache[x] % p != 0) elems.push_back(x);
    PNilpotence out;
    if (static_cast<i64>(elems.size()) != target) return out;
    if (!is_subgroup_set(g, elems)) return out;
    out.is_p_nilpotent = true;
    out.complement = make_subgroup(g, elems);
    return out;
}

}  // namespace grouplab
