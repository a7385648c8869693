#include <grouplab/group.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace grouplab {

namespace {

// Deterministic PRNG for the sampled associativity check on large tables.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

std::vector<char> membership(int n, const std::vector<int>& elements) {
    std::vector<char> in(n, 0);
    for (int x : elements) in[static_cast<size_t>(x)] = 1;
    return in;
}

}  // namespace

int FiniteGroup::pow(int x, i64 e) const {
    i64 o = order_cache.empty() ? 0 : order_cache[x];
    if (o > 0) {
        e %= o;
        if (e < 0) e += o;
    } else if (e < 0) {
        x = inv[x];
        e = -e;
    }
    int acc = 0;
    int base = x;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

i64 FiniteGroup::exponent() const {
    i64 e = 1;
    for (int x = 0; x < n; ++x) e = lcm_ll(e, order_cache[x]);
    return e;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteGroup make_group(int n, std::vector<int> table, std::string label,
                       const BuildLimits& limits) {
    if (n <= 0) throw std::invalid_argument("make_group: order must be positive");
    if (n > limits.order_cap)
        throw CapabilityError("make_group: order " + std::to_string(n) +
                              " exceeds order cap " + std::to_string(limits.order_cap));
    if (table.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("make_group: table size mismatch");
    for (int v : table)
        if (v < 0 || v >= n) throw std::invalid_argument("make_group: table entry out of range");

    FiniteGroup g;
    g.n = n;
    g.table = std::move(table);
    g.label = std::move(label);

    for (int x = 0; x < n; ++x) {
        if (g.mul(0, x) != x || g.mul(x, 0) != x)
            throw std::invalid_argument("make_group: element 0 is not the identity");
    }

    // Latin square: every row and column is a permutation.
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int v = g.mul(a, b);
            if (seen[v]) throw std::invalid_argument("make_group: row " + std::to_string(a) +
                                                     " repeats entry " + std::to_string(v));
            seen[v] = 1;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) {
            int v = g.mul(a, b);
            if (seen[v]) throw std::invalid_argument("make_group: column " + std::to_string(b) +
                                                     " repeats entry " + std::to_string(v));
            seen[v] = 1;
        }
    }

    auto assoc_at = [&](int a, int b, int c) {
        return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
    };
    if (n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!assoc_at(a, b, c))
                        throw std::invalid_argument("make_group: associativity fails at (" +
                                                    std::to_string(a) + "," + std::to_string(b) +
                                                    "," + std::to_string(c) + ")");
    } else {
        SplitMix64 rng(0x67726f75706cULL ^ static_cast<uint64_t>(n));
        for (int trial = 0; trial < 1 << 17; ++trial) {
            int a = static_cast<int>(rng.next() % n);
            int b = static_cast<int>(rng.next() % n);
            int c = static_cast<int>(rng.next() % n);
            if (!assoc_at(a, b, c))
                throw std::invalid_argument("make_group: associativity fails at (" +
                                            std::to_string(a) + "," + std::to_string(b) + "," +
                                            std::to_string(c) + ")");
        }
    }

    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == 0) {
                g.inv[a] = b;
                break;
            }
    for (int a = 0; a < n; ++a)
        if (g.inv[a] < 0 || g.mul(g.inv[a], a) != 0)
            throw std::invalid_argument("make_group: missing inverse for " + std::to_string(a));

    g.order_cache.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        int k = 1;
        int acc = x;
        while (acc != 0) {
            acc = g.mul(acc, x);
            ++k;
        }
        g.order_cache[x] = k;
        if (n % k != 0)
            throw std::invalid_argument("make_group: element order " + std::to_string(k) +
                                        " does not divide group order");
    }
    return g;
}

bool Subgroup::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

int element_order(const FiniteGroup& g, int x) {
    if (x < 0 || x >= g.n) throw std::invalid_argument("element_order: index out of range");
    return g.order_cache[x];
}

std::vector<int> closure_of(const FiniteGroup& g, const std::vector<int>& seeds) {
    std::vector<char> in(g.n, 0);
    std::vector<int> members;
    std::vector<int> queue;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
            queue.push_back(x);
        }
    };
    add(0);
    for (int s : seeds) {
        if (s < 0 || s >= g.n) throw std::invalid_argument("closure_of: index out of range");
        add(s);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        // Products with everything found so far; finiteness gives inverses.
        for (size_t mi = 0; mi < members.size(); ++mi) {
            int y = members[mi];
            add(g.mul(x, y));
            add(g.mul(y, x));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_subgroup_set(const FiniteGroup& g, const std::vector<int>& sorted_elements) {
    if (sorted_elements.empty() || sorted_elements[0] != 0) return false;
    std::vector<char> in = membership(g.n, sorted_elements);
    for (int a : sorted_elements)
        for (int b : sorted_elements)
            if (!in[g.mul(a, b)]) return false;
    return true;
}

std::vector<int> conjugate_set(const FiniteGroup& g, const std::vector<int>& elements, int by) {
    std::vector<int> out;
    out.reserve(elements.size());
    for (int x : elements) out.push_back(g.conj(x, by));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_normal_set(const FiniteGroup& g, const std::vector<int>& sorted_elements) {
    std::vector<char> in = membership(g.n, sorted_elements);
    for (int h : sorted_elements)
        for (int x = 0; x < g.n; ++x)
            if (!in[g.conj(h, x)]) return false;
    return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!is_subgroup_set(g, elements))
        throw std::invalid_argument("make_subgroup: set is not a subgroup");
    if (g.n % elements.size() != 0)
        throw std::invalid_argument("make_subgroup: Lagrange violation");
    Subgroup s;
    s.parent = &g;
    s.is_normal = is_normal_set(g, elements);
    s.elements = std::move(elements);
    return s;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& seeds) {
    return make_subgroup(g, closure_of(g, seeds));
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<char> done(g.n, 0);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < g.n; ++x) {
        if (done[x]) continue;
        std::vector<int> cls;
        for (int y = 0; y < g.n; ++y) {
            int c = g.conj(x, y);
            if (!done[c]) {
                done[c] = 1;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

Subgroup centralizer(const FiniteGroup& g, int x) {
    if (x < 0 || x >= g.n) throw std::invalid_argument("centralizer: index out of range");
    std::vector<int> elems;
    for (int y = 0; y < g.n; ++y)
        if (g.mul(x, y) == g.mul(y, x)) elems.push_back(y);
    return make_subgroup(g, std::move(elems));
}

Subgroup centralizer_of_set(const FiniteGroup& g, const std::vector<int>& elements) {
    std::vector<int> elems;
    for (int y = 0; y < g.n; ++y) {
        bool ok = true;
        for (int x : elements)
            if (g.mul(x, y) != g.mul(y, x)) {
                ok = false;
                break;
            }
        if (ok) elems.push_back(y);
    }
    return make_subgroup(g, std::move(elems));
}

Subgroup normalizer(const FiniteGroup& g, const std::vector<int>& subgroup_elements) {
    std::vector<char> in = membership(g.n, subgroup_elements);
    std::vector<int> elems;
    for (int y = 0; y < g.n; ++y) {
        bool ok = true;
        for (int x : subgroup_elements)
            if (!in[g.conj(x, y)]) {
                ok = false;
                break;
            }
        if (ok) elems.push_back(y);
    }
    return make_subgroup(g, std::move(elems));
}

Subgroup center(const FiniteGroup& g) {
    std::vector<int> elems;
    for (int x = 0; x < g.n; ++x) {
        bool central = true;
        for (int y = 0; y < g.n; ++y)
            if (g.mul(x, y) != g.mul(y, x)) {
                central = false;
                break;
            }
        if (central) elems.push_back(x);
    }
    return make_subgroup(g, std::move(elems));
}

Subgroup derived_subgroup(const FiniteGroup& g) {
    std::vector<int> comms;
    std::vector<char> seen(g.n, 0);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            int c = g.mul(g.mul(g.inv[a], g.inv[b]), g.mul(a, b));
            if (!seen[c]) {
                seen[c] = 1;
                comms.push_back(c);
            }
        }
    return generated_subgroup(g, comms);
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n) {
    if (n.parent != &g) throw std::invalid_argument("quotient: subgroup of a different group");
    if (!n.is_normal) throw std::invalid_argument("quotient: subgroup is not normal");
    int q = g.n / n.size();
    std::vector<int> coset_of(g.n, -1);
    std::vector<int> reps;
    for (int x = 0; x < g.n; ++x) {
        if (coset_of[x] >= 0) continue;
        int idx = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : n.elements) coset_of[g.mul(x, h)] = idx;
    }
    // Identity's coset is found first (x = 0), so it has index 0 and reps are
    // already ordered by smallest member.
    std::vector<int> table(static_cast<size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            table[static_cast<size_t>(a) * q + b] = coset_of[g.mul(reps[a], reps[b])];
    return make_group(q, std::move(table), g.label + "/N" + std::to_string(n.size()));
}

ReifiedSubgroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s,
                                  const std::string& label) {
    int m = s.size();
    std::vector<int> index_of(g.n, -1);
    for (int i = 0; i < m; ++i) index_of[s.elements[i]] = i;
    std::vector<int> table(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int prod = g.mul(s.elements[a], s.elements[b]);
            if (index_of[prod] < 0)
                throw std::invalid_argument("subgroup_as_group: set not closed");
            table[static_cast<size_t>(a) * m + b] = index_of[prod];
        }
    ReifiedSubgroup out;
    out.group = make_group(
        m, std::move(table),
        label.empty() ? g.label + "[sub" + std::to_string(m) + "]" : label);
    out.to_parent = s.elements;
    return out;
}

std::vector<std::vector<int>> cyclic_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> seen;
    for (int x = 0; x < g.n; ++x) {
        std::vector<int> cyc;
        int acc = 0;
        do {
            cyc.push_back(acc);
            acc = g.mul(acc, x);
        } while (acc != 0);
        std::sort(cyc.begin(), cyc.end());
        seen.insert(std::move(cyc));
    }
    std::vector<std::vector<int>> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g, const BuildLimits& limits) {
    if (g.n > limits.subgroup_cap)
        throw CapabilityError("all_subgroups: order " + std::to_string(g.n) +
                              " exceeds subgroup enumeration cap " +
                              std::to_string(limits.subgroup_cap));
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> queue = cyclic_subgroups(g);
    for (const auto& s : queue) known.insert(s);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<int> h = queue[qi];
        if (static_cast<int>(h.size()) == g.n) continue;
        std::vector<char> in = membership(g.n, h);
        for (int x = 0; x < g.n; ++x) {
            if (in[x]) continue;
            std::vector<int> seeds = h;
            seeds.push_back(x);
            std::vector<int> k = closure_of(g, seeds);
            if (known.insert(k).second) queue.push_back(std::move(k));
        }
    }
    std::vector<std::vector<int>> out(known.begin(), known.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

std::vector<std::vector<int>> subgroups_up_to_conjugacy(const FiniteGroup& g,
                                                        const BuildLimits& limits) {
    auto subs = all_subgroups(g, limits);
    std::set<std::vector<int>> dropped;
    std::vector<std::vector<int>> out;
    for (const auto& s : subs) {
        if (dropped.count(s)) continue;
        out.push_back(s);
        for (int y = 0; y < g.n; ++y) dropped.insert(conjugate_set(g, s, y));
    }
    return out;
}

std::vector<std::vector<int>> elementary_abelian_subgroups(const FiniteGroup& g, i64 p) {
    std::vector<int> order_p;
    for (int x = 1; x < g.n; ++x)
        if (g.order_cache[x] == p) order_p.push_back(x);

    std::set<std::vector<int>> known;
    known.insert({0});
    std::vector<std::vector<int>> queue = {{0}};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<int> h = queue[qi];
        std::vector<char> in = membership(g.n, h);
        for (int x : order_p) {
            if (in[x]) continue;
            bool commutes = true;
            for (int y : h)
                if (g.mul(x, y) != g.mul(y, x)) {
                    commutes = false;
                    break;
                }
            if (!commutes) continue;
            // h is elementary abelian and x is a commuting order-p element,
            // so the closure is elementary abelian again.
            std::vector<int> seeds = h;
            seeds.push_back(x);
            std::vector<int> k = closure_of(g, seeds);
            if (known.insert(k).second) queue.push_back(std::move(k));
        }
    }
    std::vector<std::vector<int>> out(known.begin(), known.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

int max_elementary_abelian_rank(const FiniteGroup& g, i64 p) {
    size_t best = 1;
    for (const auto& s : elementary_abelian_subgroups(g, p)) best = std::max(best, s.size());
    return exact_log(static_cast<i64>(best), p);
}

std::vector<std::vector<int>> abelian_subgroups_within(const FiniteGroup& g,
                                                       const std::vector<int>& universe) {
    std::vector<int> uni = universe;
    if (uni.empty()) {
        uni.resize(g.n);
        for (int i = 0; i < g.n; ++i) uni[i] = i;
    }
    std::vector<char> in_uni = membership(g.n, uni);

    std::set<std::vector<int>> known;
    known.insert({0});
    std::vector<std::vector<int>> queue = {{0}};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<int> h = queue[qi];
        std::vector<char> in = membership(g.n, h);
        for (int x : uni) {
            if (in[x]) continue;
            bool commutes = true;
            for (int y : h)
                if (g.mul(x, y) != g.mul(y, x)) {
                    commutes = false;
                    break;
                }
            if (!commutes) continue;
            std::vector<int> seeds = h;
            seeds.push_back(x);
            std::vector<int> k = closure_of(g, seeds);
            bool inside = true;
            for (int e : k)
                if (!in_uni[e]) {
                    inside = false;
                    break;
                }
            if (inside && known.insert(k).second) queue.push_back(std::move(k));
        }
    }
    std::vector<std::vector<int>> out(known.begin(), known.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

}  // namespace grouplab
