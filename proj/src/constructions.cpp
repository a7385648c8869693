#include <grouplab/constructions.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grouplab {

namespace {

std::vector<int> cyclic_table(i64 k) {
    int n = static_cast<int>(k);
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return t;
}

i64 spec_order(const GroupSpec& s);

i64 product_order(const GroupSpec& s) {
    i64 out = 1;
    for (const auto& c : s.children) out *= spec_order(c);
    return out;
}

i64 spec_order(const GroupSpec& s) {
    using K = GroupSpec::Kind;
    switch (s.kind) {
        case K::cyclic: return s.params[0];
        case K::abelian_product: {
            i64 out = 1;
            for (i64 k : s.params) out *= k;
            return out;
        }
        case K::dihedral: return s.params[0];
        case K::dicyclic: return 4 * s.params[0];
        case K::semidihedral: return s.params[0];
        case K::modular: return ipow(s.params[0], static_cast<int>(s.params[1]));
        case K::direct_product:
        case K::semidirect_product: return product_order(s);
        case K::from_cayley_file:
        case K::from_perm_file: return -1;  // unknown until loaded
    }
    return -1;
}

}  // namespace

GroupSpec spec_cyclic(i64 k) {
    if (k < 1) throw std::invalid_argument("cyclic: order must be positive");
    GroupSpec s;
    s.kind = GroupSpec::Kind::cyclic;
    s.params = {k};
    return s;
}

GroupSpec spec_abelian(std::vector<i64> ks) {
    if (ks.empty()) throw std::invalid_argument("abelian product: needs at least one factor");
    for (i64 k : ks)
        if (k < 1) throw std::invalid_argument("abelian product: factors must be positive");
    GroupSpec s;
    s.kind = GroupSpec::Kind::abelian_product;
    s.params = std::move(ks);
    return s;
}

GroupSpec spec_dihedral(i64 n) {
    if (n < 6 || n % 2 != 0)
        throw std::invalid_argument("dihedral: order must be even and at least 6");
    GroupSpec s;
    s.kind = GroupSpec::Kind::dihedral;
    s.params = {n};
    return s;
}

GroupSpec spec_dicyclic(i64 m) {
    if (m < 2) throw std::invalid_argument("dicyclic: parameter must be at least 2");
    GroupSpec s;
    s.kind = GroupSpec::Kind::dicyclic;
    s.params = {m};
    return s;
}

GroupSpec spec_generalized_quaternion(i64 n) {
    if (n < 8 || (n & (n - 1)) != 0)
        throw std::invalid_argument("generalized quaternion: order must be 2^e with e >= 3");
    return spec_dicyclic(n / 4);
}

GroupSpec spec_semidihedral(i64 n) {
    if (n < 16 || (n & (n - 1)) != 0)
        throw std::invalid_argument("semidihedral: order must be 2^e with e >= 4");
    GroupSpec s;
    s.kind = GroupSpec::Kind::semidihedral;
    s.params = {n};
    return s;
}

GroupSpec spec_modular(i64 p, int s) {
    if (!is_prime(p)) throw std::invalid_argument("modular: p must be prime");
    if (p == 2 ? s < 4 : s < 3)
        throw std::invalid_argument("modular: s must be >= 4 for p = 2, >= 3 otherwise");
    GroupSpec out;
    out.kind = GroupSpec::Kind::modular;
    out.params = {p, s};
    return out;
}

GroupSpec spec_direct(GroupSpec a, GroupSpec b) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::direct_product;
    s.children = {std::move(a), std::move(b)};
    return s;
}

GroupSpec spec_semidirect(GroupSpec normal, GroupSpec acting,
                          std::vector<std::pair<int, std::vector<int>>> action,
                          std::string label) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::semidirect_product;
    s.children = {std::move(normal), std::move(acting)};
    s.action = std::move(action);
    s.label_override = std::move(label);
    return s;
}

GroupSpec spec_from_cayley(std::string path) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::from_cayley_file;
    s.path = std::move(path);
    return s;
}

GroupSpec spec_from_perm(std::string path) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::from_perm_file;
    s.path = std::move(path);
    return s;
}

GroupSpec spec_a4() {
    // V4 indexed as (x, y) -> 2x + y; the 3-cycle permutes the involutions.
    GroupSpec s = spec_semidirect(spec_abelian({2, 2}), spec_cyclic(3),
                                  {{1, {0, 2, 3, 1}}}, "A4");
    return s;
}

GroupSpec spec_c7_c3() {
    std::vector<int> sq(7);
    for (int i = 0; i < 7; ++i) sq[i] = (2 * i) % 7;
    return spec_semidirect(spec_cyclic(7), spec_cyclic(3), {{1, sq}}, "C7:C3");
}

GroupSpec spec_heisenberg(i64 p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("heisenberg: p must be an odd prime");
    int ip = static_cast<int>(p);
    std::vector<int> shear(ip * ip);
    for (int x = 0; x < ip; ++x)
        for (int y = 0; y < ip; ++y) shear[x * ip + y] = x * ip + (x + y) % ip;
    return spec_semidirect(spec_abelian({p, p}), spec_cyclic(p), {{1, shear}},
                           "Heis" + std::to_string(p * p * p));
}

std::string spec_to_string(const GroupSpec& spec) {
    if (!spec.label_override.empty()) return spec.label_override;
    using K = GroupSpec::Kind;
    switch (spec.kind) {
        case K::cyclic: return "C" + std::to_string(spec.params[0]);
        case K::abelian_product: {
            std::string out;
            for (size_t i = 0; i < spec.params.size(); ++i) {
                if (i) out += "x";
                out += "C" + std::to_string(spec.params[i]);
            }
            return out;
        }
        case K::dihedral: return "D" + std::to_string(spec.params[0]);
        case K::dicyclic: {
            i64 m = spec.params[0];
            if ((m & (m - 1)) == 0) return "Q" + std::to_string(4 * m);
            return "Dic" + std::to_string(m);
        }
        case K::semidihedral: return "SD" + std::to_string(spec.params[0]);
        case K::modular:
            return "M" + std::to_string(ipow(spec.params[0], static_cast<int>(spec.params[1])));
        case K::direct_product:
            return spec_to_string(spec.children[0]) + "x" + spec_to_string(spec.children[1]);
        case K::semidirect_product:
            return spec_to_string(spec.children[0]) + ":" + spec_to_string(spec.children[1]);
        case K::from_cayley_file:
        case K::from_perm_file: return "file:" + spec.path;
    }
    return "?";
}

std::vector<int> automorphism_from_generator_images(const FiniteGroup& g,
                                                    const std::vector<int>& gens,
                                                    const std::vector<int>& images) {
    if (gens.size() != images.size())
        throw std::invalid_argument("automorphism: generator/image count mismatch");
    std::vector<int> img(g.n, -1);
    img[0] = 0;
    std::vector<int> queue = {0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int y = g.mul(x, gens[gi]);
            int v = g.mul(img[x], images[gi]);
            if (img[y] < 0) {
                img[y] = v;
                queue.push_back(y);
            } else if (img[y] != v) {
                throw std::invalid_argument("automorphism: images are inconsistent");
            }
        }
    }
    for (int x = 0; x < g.n; ++x)
        if (img[x] < 0)
            throw std::invalid_argument("automorphism: generators do not generate the group");
    // Bijective + multiplicative check.
    std::vector<char> seen(g.n, 0);
    for (int x = 0; x < g.n; ++x) {
        if (seen[img[x]]) throw std::invalid_argument("automorphism: image is not a bijection");
        seen[img[x]] = 1;
    }
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (img[g.mul(a, b)] != g.mul(img[a], img[b]))
                throw std::invalid_argument("automorphism: image is not multiplicative");
    return img;
}

GroupSpec spec_sl23() {
    FiniteGroup q8 = build(spec_dicyclic(2));
    // a = index 1 (order 4), b = index 4; sigma: a -> b, b -> ab.
    std::vector<int> sigma = automorphism_from_generator_images(q8, {1, 4}, {4, q8.mul(1, 4)});
    return spec_semidirect(spec_dicyclic(2), spec_cyclic(3), {{1, sigma}}, "SL(2,3)");
}

namespace {

FiniteGroup build_semidirect(const GroupSpec& spec, const BuildLimits& limits) {
    FiniteGroup ng = build(spec.children[0], limits);
    FiniteGroup bg = build(spec.children[1], limits);
    i64 total = static_cast<i64>(ng.n) * bg.n;
    if (total > limits.order_cap)
        throw CapabilityError("build: order " + std::to_string(total) + " exceeds order cap " +
                              std::to_string(limits.order_cap));

    // Validate each generator image as an automorphism of N.
    std::vector<int> gens;
    std::vector<std::vector<int>> gen_autos;
    for (const auto& [gen, img] : spec.action) {
        if (gen < 0 || gen >= bg.n)
            throw std::invalid_argument("semidirect: acting generator out of range");
        if (static_cast<int>(img.size()) != ng.n)
            throw std::invalid_argument("semidirect: automorphism image list size mismatch");
        if (img[0] != 0) throw std::invalid_argument("semidirect: automorphism must fix identity");
        std::vector<char> seen(ng.n, 0);
        for (int v : img) {
            if (v < 0 || v >= ng.n || seen[v])
                throw std::invalid_argument("semidirect: image list is not a permutation");
            seen[v] = 1;
        }
        for (int a = 0; a < ng.n; ++a)
            for (int b = 0; b < ng.n; ++b)
                if (img[ng.mul(a, b)] != ng.mul(img[a], img[b]))
                    throw std::invalid_argument("semidirect: image list is not an automorphism");
        gens.push_back(gen);
        gen_autos.push_back(img);
    }

    // Extend to phi: B -> Aut(N) with phi(bc) = phi(b) o phi(c).
    std::vector<std::vector<int>> phi(bg.n);
    std::vector<char> known(bg.n, 0);
    phi[0].resize(ng.n);
    for (int i = 0; i < ng.n; ++i) phi[0][i] = i;
    known[0] = 1;
    std::vector<int> queue = {0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int b = queue[qi];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int c = bg.mul(b, gens[gi]);
            std::vector<int> comp(ng.n);
            for (int x = 0; x < ng.n; ++x) comp[x] = phi[b][gen_autos[gi][x]];
            if (!known[c]) {
                phi[c] = std::move(comp);
                known[c] = 1;
                queue.push_back(c);
            } else if (phi[c] != comp) {
                throw std::invalid_argument("semidirect: action is not a homomorphism");
            }
        }
    }
    for (int b = 0; b < bg.n; ++b)
        if (!known[b])
            throw std::invalid_argument("semidirect: action generators do not generate the acting group");
    // Full homomorphism check over all pairs.
    for (int b = 0; b < bg.n; ++b)
        for (int c = 0; c < bg.n; ++c) {
            int bc = bg.mul(b, c);
            for (int x = 0; x < ng.n; ++x)
                if (phi[bc][x] != phi[b][phi[c][x]])
                    throw std::invalid_argument("semidirect: action is not a homomorphism");
        }

    int n = static_cast<int>(total);
    // Element (x in N, b in B) at index x*|B| + b; (0,0) is the identity.
    auto idx = [&](int x, int b) { return x * bg.n + b; };
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int x1 = 0; x1 < ng.n; ++x1)
        for (int b1 = 0; b1 < bg.n; ++b1)
            for (int x2 = 0; x2 < ng.n; ++x2)
                for (int b2 = 0; b2 < bg.n; ++b2) {
                    int x = ng.mul(x1, phi[b1][x2]);
                    int b = bg.mul(b1, b2);
                    table[static_cast<size_t>(idx(x1, b1)) * n + idx(x2, b2)] = idx(x, b);
                }
    std::string label = spec.label_override.empty()
                            ? ng.label + ":" + bg.label
                            : spec.label_override;
    return make_group(n, std::move(table), label, limits);
}

}  // namespace

FiniteGroup build(const GroupSpec& spec, const BuildLimits& limits) {
    using K = GroupSpec::Kind;
    i64 order = spec_order(spec);
    if (order > limits.order_cap)
        throw CapabilityError("build: order " + std::to_string(order) + " exceeds order cap " +
                              std::to_string(limits.order_cap));
    switch (spec.kind) {
        case K::cyclic: {
            int k = static_cast<int>(spec.params[0]);
            return make_group(k, cyclic_table(k),
                              spec.label_override.empty() ? spec_to_string(spec)
                                                          : spec.label_override,
                              limits);
        }
        case K::abelian_product: {
            int n = static_cast<int>(order);
            int m = static_cast<int>(spec.params.size());
            std::vector<int> radix(spec.params.begin(), spec.params.end());
            auto add = [&](int a, int b) {
                int out = 0;
                std::vector<int> digits(m);
                for (int i = m - 1; i >= 0; --i) {
                    int da = a % radix[i];
                    int db = b % radix[i];
                    a /= radix[i];
                    b /= radix[i];
                    digits[i] = (da + db) % radix[i];
                }
                for (int i = 0; i < m; ++i) out = out * radix[i] + digits[i];
                return out;
            };
            std::vector<int> table(static_cast<size_t>(n) * n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = add(a, b);
            return make_group(n, std::move(table),
                              spec.label_override.empty() ? spec_to_string(spec)
                                                          : spec.label_override,
                              limits);
        }
        case K::dihedral: {
            int n = static_cast<int>(order);
            int m = n / 2;
            auto idx = [&](int flip, int rot) { return flip * m + rot; };
            std::vector<int> table(static_cast<size_t>(n) * n);
            for (int f1 = 0; f1 < 2; ++f1)
                for (int r1 = 0; r1 < m; ++r1)
                    for (int f2 = 0; f2 < 2; ++f2)
                        for (int r2 = 0; r2 < m; ++r2) {
                            // (s^f1 r^r1)(s^f2 r^r2) = s^(f1+f2) r^(r2 +- r1)
                            int f = (f1 + f2) % 2;
                            int r = f2 ? ((r2 - r1) % m + m) % m : (r1 + r2) % m;
                            table[static_cast<size_t>(idx(f1, r1)) * n + idx(f2, r2)] =
                                idx(f, r);
                        }
            return make_group(n, std::move(table),
                              spec.label_override.empty() ? spec_to_string(spec)
                                                          : spec.label_override,
                              limits);
        }
        case K::dicyclic: {
            int m = static_cast<int>(spec.params[0]);
            int n = 4 * m;
            int h = 2 * m;
            auto idx = [&](int flip, int rot) { return flip * h + rot; };
            std::vector<int> table(static_cast<size_t>(n) * n);
            for (int f1 = 0; f1 < 2; ++f1)
                for (int r1 = 0; r1 < h; ++r1)
                    for (int f2 = 0; f2 < 2; ++f2)
                        for (int r2 = 0; r2 < h; ++r2) {
                            // a^r1 b^f1 * a^r2 b^f2, with b^2 = a^m, b^-1 a b = a^-1.
                            int r = f1 ? ((r1 - r2) % h + h) % h : (r1 + r2) % h;
                            int f = f1 + f2;
                            if (f == 2) {
                                r = (r + m) % h;
                                f = 0;
                            }
                            table[static_cast<size_t>(idx(f1, r1)) * n + idx(f2, r2)] =
                                idx(f, r);
                        }
            return make_group(n, std::move(table),
                              spec.label_override.empty() ? spec_to_string(spec)
                                                          : spec.label_override,
                              limits);
        }
        case K::semidihedral: {
            int n = static_cast<int>(order);
            int h = n / 2;
            int t = h / 2 - 1;  // a^b = a^(2^(e-2) - 1)
            auto idx = [&](int flip, int rot) { return flip * h + rot; };
            std::vector<int> table(static_cast<size_t>(n) * n);
            for (int f1 = 0; f1 < 2; ++f1)
                for (int r1 = 0; r1 < h; ++r1)
                    for (int f2 = 0; f2 < 2; ++f2)
                        for (int r2 = 0; r2 < h; ++r2) {
                            // a^r1 b^f1 * a^r2 b^f2 with b a^k = a^(t k) b.
                            long long moved = f1 ? (static_cast<long long>(t) * r2) % h : r2;
                            int r = static_cast<int>((r1 + moved) % h);
                            int f = (f1 + f2) % 2;
                            table[static_cast<size_t>(idx(f1, r1)) * n + idx(f2, r2)] =
                                idx(f, r);
                        }
            return make_group(n, std::move(table),
                              spec.label_override.empty() ? spec_to_string(spec)
                                                          : spec.label_override,
                              limits);
        }
        case K::modular: {
            i64 p = spec.params[0];
            int s = static_cast<int>(spec.params[1]);
            i64 h = ipow(p, s - 1);
            i64 t = 1 + ipow(p, s - 2);
            int n = static_cast<int>(order);
            int ip = static_cast<int>(p);
            auto idx = [&](i64 i, int j) { return static_cast<int>(i) * ip + j; };
            // t^j mod h for j < p.
            std::vector<i64> tpow(ip);
            tpow[0] = 1;
            for (int j = 1; j < ip; ++j) tpow[j] = (tpow[j - 1] * t) % h;
            std::vector<int> table(static_cast<size_t>(n) * n);
            for (i64 i1 = 0; i1 < h; ++i1)
                for (int j1 = 0; j1 < ip; ++j1)
                    for (i64 i2 = 0; i2 < h; ++i2)
                        for (int j2 = 0; j2 < ip; ++j2) {
                            // a^i1 b^j1 * a^i2 b^j2 = a^(i1 + i2 t^j1) b^(j1+j2)
                            i64 i = (i1 + i2 * tpow[j1]) % h;
                            int j = (j1 + j2) % ip;
                            table[static_cast<size_t>(idx(i1, j1)) * n + idx(i2, j2)] =
                                idx(i, j);
                        }
            return make_group(n, std::move(table),
                              spec.label_override.empty() ? spec_to_string(spec)
                                                          : spec.label_override,
                              limits);
        }
        case K::direct_product: {
            FiniteGroup a = build(spec.children[0], limits);
            FiniteGroup b = build(spec.children[1], limits);
            i64 total = static_cast<i64>(a.n) * b.n;
            if (total > limits.order_cap)
                throw CapabilityError("build: order " + std::to_string(total) +
                                      " exceeds order cap " + std::to_string(limits.order_cap));
            int n = static_cast<int>(total);
            auto idx = [&](int x, int y) { return x * b.n + y; };
            std::vector<int> table(static_cast<size_t>(n) * n);
            for (int x1 = 0; x1 < a.n; ++x1)
                for (int y1 = 0; y1 < b.n; ++y1)
                    for (int x2 = 0; x2 < a.n; ++x2)
                        for (int y2 = 0; y2 < b.n; ++y2)
                            table[static_cast<size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
                                idx(a.mul(x1, x2), b.mul(y1, y2));
            std::string label = spec.label_override.empty() ? a.label + "x" + b.label
                                                            : spec.label_override;
            return make_group(n, std::move(table), label, limits);
        }
        case K::semidirect_product: return build_semidirect(spec, limits);
        case K::from_cayley_file: return load_cayley(spec.path, limits);
        case K::from_perm_file: return load_perm_generators(spec.path, limits);
    }
    throw std::invalid_argument("build: unknown spec kind");
}

namespace {

// Partitions of e in weakly decreasing order, lexicographically descending.
void partitions_of(int e, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(e, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_of(e - part, part, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_of(int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_of(e, e, cur, out);
    return out;
}

// All abelian isomorphism types of order n in invariant-factor form
// (d1 >= d2 >= ..., d_{i+1} | d_i), cyclic type first.
std::vector<std::vector<i64>> abelian_types(i64 n) {
    if (n == 1) return {{1}};
    auto fac = factorize(n);
    std::vector<std::vector<std::vector<int>>> per_prime;
    std::vector<i64> primes;
    for (auto [p, e] : fac) {
        per_prime.push_back(partitions_of(e));
        primes.push_back(p);
    }
    std::vector<std::vector<i64>> out;
    std::vector<size_t> pick(per_prime.size(), 0);
    for (;;) {
        size_t rows = 0;
        for (size_t i = 0; i < per_prime.size(); ++i)
            rows = std::max(rows, per_prime[i][pick[i]].size());
        std::vector<i64> invariant(rows, 1);
        for (size_t i = 0; i < per_prime.size(); ++i) {
            const auto& part = per_prime[i][pick[i]];
            for (size_t r = 0; r < part.size(); ++r) invariant[r] *= ipow(primes[i], part[r]);
        }
        out.push_back(std::move(invariant));
        size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < per_prime[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    std::sort(out.begin(), out.end());
    std::reverse(out.begin(), out.end());  // cyclic type [n] first
    return out;
}

}  // namespace

Catalog builtin_catalog(i64 n, const BuildLimits& limits) {
    if (n < 1) throw std::invalid_argument("builtin_catalog: n must be positive");
    Catalog cat;
    cat.complete = n < 16;
    if (n > limits.order_cap)
        throw CapabilityError("builtin_catalog: order " + std::to_string(n) +
                              " exceeds order cap " + std::to_string(limits.order_cap));

    for (const auto& type : abelian_types(n)) {
        if (type.size() == 1)
            cat.groups.push_back(build(spec_cyclic(n), limits));
        else
            cat.groups.push_back(build(spec_abelian(type), limits));
    }
    if (n % 2 == 0 && n >= 6) cat.groups.push_back(build(spec_dihedral(n), limits));
    if (n % 4 == 0 && n >= 8) cat.groups.push_back(build(spec_dicyclic(n / 4), limits));

    auto fac = factorize(n);
    bool prime_power = fac.size() == 1;
    if (prime_power) {
        auto [p, e] = *fac.begin();
        if (p == 2 && e >= 4) {
            cat.groups.push_back(build(spec_semidihedral(n), limits));
            cat.groups.push_back(build(spec_modular(2, e), limits));
        }
        if (p != 2 && e == 3) {
            cat.groups.push_back(build(spec_modular(p, 3), limits));
            cat.groups.push_back(build(spec_heisenberg(p), limits));
        }
    }
    if (n == 12) cat.groups.push_back(build(spec_a4(), limits));
    if (n == 21) cat.groups.push_back(build(spec_c7_c3(), limits));
    if (n % 8 == 0 && (n / 8) % 2 == 1 && n / 8 >= 3)
        cat.groups.push_back(
            build(spec_direct(spec_cyclic(n / 8), spec_generalized_quaternion(8)), limits));
    return cat;
}

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> read_content_lines(std::istream& in, bool* complete_catalog,
                                     std::string* name) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        size_t pos = raw.find_first_not_of(" \t");
        if (pos == std::string::npos) continue;
        if (raw[pos] == '#') {
            std::string comment = raw.substr(pos + 1);
            auto trim = [](std::string s) {
                size_t a = s.find_first_not_of(" \t");
                size_t b = s.find_last_not_of(" \t");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            std::string body = trim(comment);
            if (complete_catalog && body.rfind("complete-catalog:", 0) == 0)
                *complete_catalog = trim(body.substr(17)) == "true";
            if (name && body.rfind("group:", 0) == 0) *name = trim(body.substr(6));
            continue;
        }
        lines.push_back({number, raw.substr(pos)});
    }
    return lines;
}

[[noreturn]] void parse_fail(const std::string& path, int line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

CayleyFile load_cayley_file(const std::string& path, const BuildLimits& limits) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    bool complete = false;
    std::string name;
    auto lines = read_content_lines(in, &complete, &name);
    if (lines.empty()) parse_fail(path, 1, "empty file");
    if (lines[0].text != "cayley v1") parse_fail(path, lines[0].number, "expected 'cayley v1'");
    if (lines.size() < 2 || lines[1].text.rfind("n=", 0) != 0)
        parse_fail(path, lines.size() > 1 ? lines[1].number : lines[0].number, "expected 'n=<order>'");
    i64 n = 0;
    try {
        n = std::stoll(lines[1].text.substr(2));
    } catch (...) {
        parse_fail(path, lines[1].number, "invalid order");
    }
    if (n < 1) parse_fail(path, lines[1].number, "order must be positive");
    if (n > limits.order_cap)
        throw CapabilityError(path + ": order " + std::to_string(n) + " exceeds order cap " +
                              std::to_string(limits.order_cap));
    if (lines.size() != static_cast<size_t>(n) + 2)
        parse_fail(path, lines.back().number,
                   "expected " + std::to_string(n) + " table rows, found " +
                       std::to_string(lines.size() - 2));
    std::vector<int> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (i64 r = 0; r < n; ++r) {
        const Line& line = lines[static_cast<size_t>(r) + 2];
        std::istringstream row(line.text);
        i64 v;
        i64 count = 0;
        while (row >> v) {
            if (v < 0 || v >= n) parse_fail(path, line.number, "entry out of range");
            table.push_back(static_cast<int>(v));
            ++count;
        }
        if (!row.eof()) parse_fail(path, line.number, "invalid entry");
        if (count != n)
            parse_fail(path, line.number,
                       "expected " + std::to_string(n) + " entries, found " + std::to_string(count));
    }
    if (name.empty()) {
        name = std::filesystem::path(path).stem().string();
    }
    CayleyFile out;
    try {
        out.group = make_group(static_cast<int>(n), std::move(table), name, limits);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    out.complete_catalog = complete;
    return out;
}

FiniteGroup load_cayley(const std::string& path, const BuildLimits& limits) {
    return load_cayley_file(path, limits).group;
}

FiniteGroup load_perm_generators(const std::string& path, const BuildLimits& limits) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string name;
    auto lines = read_content_lines(in, nullptr, &name);
    if (lines.empty()) parse_fail(path, 1, "empty file");
    if (lines[0].text != "perm v1") parse_fail(path, lines[0].number, "expected 'perm v1'");
    if (lines.size() < 2 || lines[1].text.rfind("degree=", 0) != 0)
        parse_fail(path, lines.size() > 1 ? lines[1].number : lines[0].number,
                   "expected 'degree=<d>'");
    int degree = 0;
    try {
        degree = std::stoi(lines[1].text.substr(7));
    } catch (...) {
        parse_fail(path, lines[1].number, "invalid degree");
    }
    if (degree < 1) parse_fail(path, lines[1].number, "degree must be positive");

    std::vector<std::vector<int>> gens;
    for (size_t li = 2; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.text.rfind("gen:", 0) != 0) parse_fail(path, line.number, "expected 'gen: ...'");
        std::istringstream row(line.text.substr(4));
        std::vector<int> perm;
        i64 v;
        while (row >> v) {
            if (v < 0 || v >= degree) parse_fail(path, line.number, "image out of range");
            perm.push_back(static_cast<int>(v));
        }
        if (!row.eof()) parse_fail(path, line.number, "invalid image");
        if (static_cast<int>(perm.size()) != degree)
            parse_fail(path, line.number, "image list length must equal the degree");
        std::vector<char> seen(degree, 0);
        for (int x : perm) {
            if (seen[x]) parse_fail(path, line.number, "image list is not a permutation");
            seen[x] = 1;
        }
        gens.push_back(std::move(perm));
    }
    if (gens.empty()) parse_fail(path, lines.back().number, "no generators");

    // Orbit closure under composition (apply a, then b).
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
                if (static_cast<i64>(elements.size()) + 1 > limits.order_cap)
                    throw CapabilityError(path + ": closure exceeds order cap " +
                                          std::to_string(limits.order_cap));
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
    if (name.empty()) name = std::filesystem::path(path).stem().string();
    return make_group(n, std::move(table), name, limits);
}

void save_cayley(const FiniteGroup& g, std::ostream& os,
                 const std::vector<std::string>& header_comments) {
    for (const auto& c : header_comments) os << "# " << c << "\n";
    os << "cayley v1\n";
    os << "n=" << g.n << "\n";
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; b < g.n; ++b) {
            if (b) os << ' ';
            os << g.mul(a, b);
        }
        os << "\n";
    }
}

Catalog load_catalog_dir(const std::string& catalog_root, i64 n, const BuildLimits& limits) {
    namespace fs = std::filesystem;
    fs::path dir = fs::path(catalog_root) / std::to_string(n);
    if (!fs::is_directory(dir))
        throw std::runtime_error("no catalog directory " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".cay") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    Catalog cat;
    cat.complete = !files.empty();
    for (const auto& f : files) {
        CayleyFile cf = load_cayley_file(f.string(), limits);
        if (cf.group.n != n)
            throw std::runtime_error(f.string() + ": order " + std::to_string(cf.group.n) +
                                     " does not match directory " + std::to_string(n));
        cat.complete = cat.complete && cf.complete_catalog;
        cat.groups.push_back(std::move(cf.group));
    }
    return cat;
}

GroupSpec parse_group_literal(const std::string& text) {
    if (text.rfind("file:", 0) == 0) {
        std::string path = text.substr(5);
        if (path.size() > 5 && path.substr(path.size() - 5) == ".perm")
            return spec_from_perm(path);
        return spec_from_cayley(path);
    }
    // Direct products split on 'x'.
    std::vector<std::string> tokens;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == 'x') {
                tokens.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        tokens.push_back(cur);
    }
    auto parse_token = [](const std::string& tok) -> GroupSpec {
        auto num = [&](size_t from) -> i64 {
            if (from >= tok.size()) throw std::invalid_argument("bad group literal: " + tok);
            for (size_t i = from; i < tok.size(); ++i)
                if (!isdigit(static_cast<unsigned char>(tok[i])))
                    throw std::invalid_argument("bad group literal: " + tok);
            return std::stoll(tok.substr(from));
        };
        if (tok == "A4") return spec_a4();
        if (tok == "C7:C3") return spec_c7_c3();
        if (tok.rfind("Heis", 0) == 0) {
            i64 n = num(4);
            auto fac = factorize(n);
            if (fac.size() != 1 || fac.begin()->second != 3)
                throw std::invalid_argument("bad Heisenberg order: " + tok);
            return spec_heisenberg(fac.begin()->first);
        }
        if (tok.rfind("SD", 0) == 0) return spec_semidihedral(num(2));
        if (tok.rfind("Dic", 0) == 0) return spec_dicyclic(num(3));
        if (tok.rfind("Q", 0) == 0) return spec_generalized_quaternion(num(1));
        if (tok.rfind("D", 0) == 0) return spec_dihedral(num(1));
        if (tok.rfind("M", 0) == 0) {
            i64 n = num(1);
            auto fac = factorize(n);
            if (fac.size() != 1) throw std::invalid_argument("bad modular order: " + tok);
            return spec_modular(fac.begin()->first, fac.begin()->second);
        }
        if (tok.rfind("C", 0) == 0) return spec_cyclic(num(1));
        throw std::invalid_argument("bad group literal: " + tok);
    };
    // A pure cyclic product is an abelian product spec.
    bool all_cyclic = true;
    std::vector<i64> ks;
    for (const auto& tok : tokens) {
        if (tok.size() >= 2 && tok[0] == 'C' && tok.find(':') == std::string::npos &&
            std::all_of(tok.begin() + 1, tok.end(),
                        [](char c) { return isdigit(static_cast<unsigned char>(c)); })) {
            ks.push_back(std::stoll(tok.substr(1)));
        } else {
            all_cyclic = false;
            break;
        }
    }
    if (all_cyclic && ks.size() > 1) return spec_abelian(ks);
    GroupSpec out = parse_token(tokens[0]);
    for (size_t i = 1; i < tokens.size(); ++i) out = spec_direct(std::move(out), parse_token(tokens[i]));
    return out;
}

}  // namespace grouplab
