#include <grouplab/bijection.hpp>

#include <grouplab/divisibility.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>

namespace grouplab {

namespace {

// Small Dinic max-flow; node 0 = source, node 1 = sink.
struct FlowNet {
    struct Edge {
        int to;
        i64 cap;
        int rev;
    };
    std::vector<std::vector<Edge>> adj;
    std::vector<int> level, iter;

    explicit FlowNet(int nodes) : adj(nodes) {}

    void add_edge(int from, int to, i64 cap) {
        adj[from].push_back({to, cap, static_cast<int>(adj[to].size())});
        adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1});
    }

    bool bfs(int s, int t) {
        level.assign(adj.size(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Edge& e : adj[v])
                if (e.cap > 0 && level[e.to] < 0) {
                    level[e.to] = level[v] + 1;
                    q.push(e.to);
                }
        }
        return level[t] >= 0;
    }

    i64 dfs(int v, int t, i64 f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
            Edge& e = adj[v][i];
            if (e.cap > 0 && level[v] < level[e.to]) {
                i64 d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    adj[e.to][e.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    i64 max_flow(int s, int t) {
        i64 flow = 0;
        while (bfs(s, t)) {
            iter.assign(adj.size(), 0);
            i64 f;
            while ((f = dfs(s, t, INT64_MAX)) > 0) flow += f;
        }
        return flow;
    }

    std::vector<char> reachable_from(int s) const {
        std::vector<char> seen(adj.size(), 0);
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Edge& e : adj[v])
                if (e.cap > 0 && !seen[e.to]) {
                    seen[e.to] = 1;
                    q.push(e.to);
                }
        }
        return seen;
    }
};

}  // namespace

BijectionCertificate order_matching(const OrderHistogram& src, const OrderHistogram& tgt) {
    if (src.total != tgt.total)
        throw std::invalid_argument("order_matching: histogram totals differ");
    std::vector<i64> src_orders, tgt_orders;
    for (auto [d, c] : src.entries) src_orders.push_back(d);
    for (auto [m, c] : tgt.entries) tgt_orders.push_back(m);

    int ns = static_cast<int>(src_orders.size());
    int nt = static_cast<int>(tgt_orders.size());
    FlowNet net(2 + ns + nt);
    auto snode = [&](int i) { return 2 + i; };
    auto tnode = [&](int i) { return 2 + ns + i; };
    for (int i = 0; i < ns; ++i) net.add_edge(0, snode(i), src.count(src_orders[i]));
    for (int i = 0; i < nt; ++i) net.add_edge(tnode(i), 1, tgt.count(tgt_orders[i]));
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j)
            if (tgt_orders[j] % src_orders[i] == 0) net.add_edge(snode(i), tnode(j), INT64_MAX);

    i64 flow = net.max_flow(0, 1);
    BijectionCertificate cert;
    if (flow == src.total) {
        cert.feasible = true;
        // Flow on s->t edges: residual of the reverse edge holds the amount.
        for (int i = 0; i < ns; ++i)
            for (const auto& e : net.adj[snode(i)]) {
                if (e.to < 2 + ns) continue;
                int j = e.to - 2 - ns;
                i64 sent = net.adj[e.to][e.rev].cap;  // cap pushed back on reverse edge
                if (sent > 0) cert.assignment.push_back({src_orders[i], tgt_orders[j], sent});
            }
        std::sort(cert.assignment.begin(), cert.assignment.end());
        return cert;
    }
    cert.feasible = false;
    cert.deficiency = src.total - flow;
    std::vector<char> reach = net.reachable_from(0);
    for (int i = 0; i < ns; ++i)
        if (reach[snode(i)]) cert.violator.push_back(src_orders[i]);
    return cert;
}

std::string certificate_to_json(const BijectionCertificate& c) {
    nlohmann::ordered_json j;
    j["verdict"] = c.feasible ? "feasible" : "infeasible";
    if (c.feasible) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [d, m, count] : c.assignment) arr.push_back({d, m, count});
        j["assignment"] = arr;
    } else {
        j["violator"] = c.violator;
        j["deficiency"] = c.deficiency;
    }
    return j.dump();
}

ClMemberResult cl_member(const FiniteGroup& g, const FiniteGroup& h, bool want_element_map) {
    if (g.n != h.n) throw std::invalid_argument("cl_member: group orders differ");
    ClMemberResult out;
    out.certificate = order_matching(order_histogram(g), order_histogram(h));
    if (!want_element_map || !out.certificate.feasible) return out;

    // Elements grouped by order, matched in ascending index order.
    std::map<i64, std::vector<int>> g_by_order, h_by_order;
    for (int x = 0; x < g.n; ++x) g_by_order[g.order_cache[x]].push_back(x);
    for (int x = 0; x < h.n; ++x) h_by_order[h.order_cache[x]].push_back(x);
    std::map<i64, size_t> h_used;
    out.element_map.assign(g.n, -1);
    for (const auto& [d, m, count] : out.certificate.assignment) {
        auto& sources = g_by_order[d];
        auto& targets = h_by_order[m];
        size_t& used = h_used[m];
        for (i64 k = 0; k < count; ++k) {
            int src = sources.front();
            sources.erase(sources.begin());
            out.element_map[src] = targets[used++];
        }
    }
    return out;
}

GroupSpec target_of(const FiniteGroup& g) {
    if (g.n == 1) return spec_cyclic(1);
    std::vector<GroupSpec> factors;
    bool all_cyclic = true;
    for (auto [p, e] : factorize(g.n)) {
        SylowInfo syl = sylow(g, p);
        i64 pa = ipow(p, syl.exponent_of_n);
        if (syl.is_cyclic) {
            factors.push_back(spec_cyclic(pa));
            continue;
        }
        all_cyclic = false;
        if (p == 2) {
            i64 n2p = coprime_part(g.n, 2);
            i64 observed = sol_count_identity(g, 2 * n2p);
            if (observed == 2 * n2p) {
                factors.push_back(spec_generalized_quaternion(pa));
                continue;
            }
        }
        // Non-cyclic branch: C_{p^(a-1)} x C_p (order-corrected reading).
        factors.push_back(spec_abelian({pa / p, p}));
    }
    if (all_cyclic) return spec_cyclic(g.n);
    GroupSpec out = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) out = spec_direct(std::move(out), factors[i]);
    return out;
}

RefinedTarget refined_target_of(const FiniteGroup& g, const BuildLimits& limits) {
    RefinedTarget out;
    if (g.n == 1) {
        out.spec = spec_cyclic(1);
        return out;
    }
    if (g.n > limits.subgroup_cap) {
        out.capability_skipped = true;
        out.spec = spec_cyclic(g.n);
        out.note = "subgroup search skipped: order exceeds subgroup cap " +
                   std::to_string(limits.subgroup_cap);
        return out;
    }
    std::vector<GroupSpec> factors;
    for (auto [p, e] : factorize(g.n)) {
        SylowInfo syl = sylow(g, p);
        i64 pa = ipow(p, syl.exponent_of_n);
        int alpha = syl.exponent_of_n;
        if (syl.is_cyclic) {
            factors.push_back(spec_cyclic(pa));
            out.ranks["r" + std::to_string(p)] = 1;
            continue;
        }
        std::optional<Subgroup> best = max_elementary_abelian_aregular(g, syl, limits);
        int r = best ? exact_log(static_cast<i64>(best->size()), p) : 1;
        if (p == 2 && r <= 1) {
            // |N_1| = 2 clause: quaternion dichotomy by the Sol count.
            i64 n2p = coprime_part(g.n, 2);
            if (sol_count_identity(g, 2 * n2p) == 2 * n2p) {
                factors.push_back(spec_generalized_quaternion(pa));
                out.ranks["r2"] = 1;
                continue;
            }
            // Non-abelian Dedekind A-regular N (Q8 x elementary abelian).
            auto profiles = eligible_profiles(g, syl, /*dedekind_nonabelian_too=*/true, limits);
            int best_na = 0;
            for (const auto& prof : profiles)
                if (!prof.abelian) best_na = std::max(best_na, prof.r);
            if (best_na >= 3) {
                int rr = best_na;
                std::vector<i64> ks;
                if (rr == 3) {
                    // Order-consistent correction of the stated exponent.
                    if (alpha > 3) ks.push_back(ipow(2, alpha - 3));
                    out.note = "non-abelian branch with r=3: cyclic exponent corrected to alpha-3";
                } else {
                    ks.push_back(ipow(2, alpha - (rr - 1)));
                    for (int i = 0; i < rr - 4; ++i) ks.push_back(2);
                }
                GroupSpec part = spec_generalized_quaternion(8);
                for (auto it = ks.rbegin(); it != ks.rend(); ++it)
                    part = spec_direct(spec_cyclic(*it), std::move(part));
                factors.push_back(std::move(part));
                out.ranks["r2"] = rr;
                continue;
            }
            factors.push_back(spec_abelian({ipow(2, alpha - 1), 2}));
            out.ranks["r2"] = 2;
            continue;
        }
        std::vector<i64> ks = {ipow(p, alpha - (r - 1))};
        for (int i = 0; i < r - 1; ++i) ks.push_back(p);
        factors.push_back(spec_abelian(ks));
        out.ranks["r" + std::to_string(p)] = r;
    }
    out.spec = factors[0];
    for (size_t i = 1; i < factors.size(); ++i)
        out.spec = spec_direct(std::move(out.spec), factors[i]);
    return out;
}

namespace {

int find_generator_of_order(const FiniteGroup& g, const std::vector<int>& pool, i64 order) {
    for (int x : pool)
        if (g.order_cache[x] == order) return x;
    return -1;
}

}  // namespace

MetacyclicBijection metacyclic_bijection(const FiniteGroup& g, const BuildLimits& limits) {
    MetacyclicBijection out;
    auto fail = [&](const std::string& why) {
        out.ok = false;
        out.refusal = why;
        return out;
    };
    if (g.n == 1) return fail("trivial group");
    for (auto [p, e] : factorize(g.n))
        if (!sylow(g, p).is_cyclic)
            return fail("Sylow " + std::to_string(p) + "-subgroup is not cyclic");

    Subgroup fit = fitting_subgroup(g);
    i64 mfit = fit.size();
    i64 k = g.n / mfit;
    if (k == 1) return fail("group is nilpotent: QP cyclic for all choices");
    int fit_gen = find_generator_of_order(g, fit.elements, mfit);
    if (fit_gen < 0) return fail("Fitting subgroup is not cyclic");

    // Cyclic complement to Fit(G).
    int comp_gen = -1;
    for (int x = 0; x < g.n && comp_gen < 0; ++x) {
        if (g.order_cache[x] != k) continue;
        std::vector<int> cyc = closure_of(g, {x});
        bool trivial_meet = true;
        for (int c : cyc)
            if (c != 0 && fit.contains(c)) {
                trivial_meet = false;
                break;
            }
        if (trivial_meet) comp_gen = x;
    }
    if (comp_gen < 0) return fail("no cyclic complement to Fit(G)");

    // Smallest (p, q) with Q acting nontrivially on P.
    std::vector<i64> fit_primes = [&] {
        std::vector<i64> ps;
        for (auto [p, e] : factorize(mfit)) ps.push_back(p);
        return ps;
    }();
    std::vector<i64> comp_primes = [&] {
        std::vector<i64> ps;
        for (auto [p, e] : factorize(k)) ps.push_back(p);
        return ps;
    }();
    int u = -1, v = -1;
    i64 pu = 0, qv = 0;
    for (i64 p : fit_primes) {
        i64 pp = p_part(mfit, p);
        int cand_u = g.pow(fit_gen, mfit / pp);  // generator of Syl_p(Fit)
        for (i64 q : comp_primes) {
            i64 qq = p_part(k, q);
            int cand_v = g.pow(comp_gen, k / qq);
            // QP non-cyclic <=> v does not centralize u.
            if (g.mul(cand_u, cand_v) != g.mul(cand_v, cand_u)) {
                u = cand_u;
                v = cand_v;
                pu = p;
                qv = q;
                break;
            }
        }
        if (u >= 0) break;
    }
    if (u < 0) return fail("QP cyclic for all prime pairs");

    i64 pp = p_part(mfit, pu);
    i64 qq = p_part(k, qv);
    int a = g.pow(fit_gen, pp);   // Hall p'-part generator of Fit
    int b = g.pow(comp_gen, qq);  // Hall q'-part generator of the complement
    i64 oa = mfit / pp, ob = k / qq;

    Subgroup qp = generated_subgroup(g, {u, v});
    if (static_cast<i64>(qp.size()) != pp * qq)
        return fail("QP does not have order |P||Q|");
    ReifiedSubgroup qp_re = subgroup_as_group(g, qp, "QP");

    // Direct product C_{oa*ob} x QP assembled by hand (QP has no spec form).
    FiniteGroup target;
    {
        int n1 = static_cast<int>(oa * ob);
        int n2 = qp_re.group.n;
        int n = n1 * n2;
        std::vector<int> table(static_cast<size_t>(n) * n);
        auto idx = [&](int x, int y) { return x * n2 + y; };
        for (int x1 = 0; x1 < n1; ++x1)
            for (int y1 = 0; y1 < n2; ++y1)
                for (int x2 = 0; x2 < n1; ++x2)
                    for (int y2 = 0; y2 < n2; ++y2)
                        table[static_cast<size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
                            idx((x1 + x2) % n1, qp_re.group.mul(y1, y2));
        target = make_group(n, std::move(table),
                            "C" + std::to_string(oa * ob) + "xQP", limits);
    }

    // Index of an element of QP inside the reified copy.
    std::vector<int> qp_index(g.n, -1);
    for (size_t i = 0; i < qp_re.to_parent.size(); ++i) qp_index[qp_re.to_parent[i]] = static_cast<int>(i);

    // CRT index of a^i b^r inside C_{oa*ob} (a, b have coprime orders).
    auto cyc_index = [&](i64 i, i64 rr) {
        for (i64 t = 0; t < oa * ob; ++t)
            if (t % oa == i % oa && t % ob == rr % ob) return static_cast<int>(t);
        return -1;
    };

    out.element_map.assign(g.n, -1);
    std::vector<char> used(target.n, 0);
    for (i64 i = 0; i < oa; ++i)
        for (i64 j = 0; j < pp; ++j)
            for (i64 r = 0; r < ob; ++r)
                for (i64 s = 0; s < qq; ++s) {
                    int src = g.mul(g.mul(g.pow(a, i), g.pow(u, j)),
                                    g.mul(g.pow(b, r), g.pow(v, s)));
                    int qp_part = qp_index[g.mul(g.pow(u, j), g.pow(v, s))];
                    int dst = cyc_index(i, r) * qp_re.group.n + qp_part;
                    if (out.element_map[src] != -1) return fail("decomposition is not unique");
                    if (used[dst]) return fail("target map is not injective");
                    out.element_map[src] = dst;
                    used[dst] = 1;
                }
    for (int x = 0; x < g.n; ++x) {
        if (out.element_map[x] < 0) return fail("decomposition does not cover G");
        i64 ox = g.order_cache[x];
        i64 ofx = target.order_cache[out.element_map[x]];
        if (ofx % ox != 0)
            return fail("order divisibility fails at element " + std::to_string(x));
    }
    out.ok = true;
    out.target = std::move(target);
    out.p = pu;
    out.q = qv;
    return out;
}

std::vector<VerifyLine> verify_fmain(const std::vector<FiniteGroup>& catalog,
                                     const BuildLimits& limits) {
    std::vector<VerifyLine> lines;
    for (const FiniteGroup& g : catalog) {
        for (auto [p, e] : factorize(g.n)) {
            SylowInfo syl = sylow(g, p);
            VerifyLine line;
            line.check = "fmain:C(n/p)xCp";
            line.subject = g.label + " p=" + std::to_string(p);
            if (syl.is_cyclic || syl.is_generalized_quaternion) {
                line.verdict = Verdict::hypothesis_not_met;
                line.detail = syl.is_cyclic ? "cyclic Sylow (exempt)"
                                            : "generalized quaternion Sylow (exempt)";
                lines.push_back(std::move(line));
                continue;
            }
            FiniteGroup target = g.n / p == 1
                                     ? build(spec_cyclic(p), limits)
                                     : build(spec_abelian({g.n / p, p}), limits);
            auto res = cl_member(g, target);
            line.verdict = res.certificate.feasible ? Verdict::pass : Verdict::fail;
            line.detail = res.certificate.feasible
                              ? "feasible into C" + std::to_string(g.n / p) + "xC" +
                                    std::to_string(p)
                              : "infeasible, deficiency " +
                                    std::to_string(res.certificate.deficiency);
            lines.push_back(std::move(line));
        }
        VerifyLine tline;
        tline.check = "fmain:target_of";
        tline.subject = g.label;
        FiniteGroup target = build(target_of(g), limits);
        auto res = cl_member(g, target);
        tline.verdict = res.certificate.feasible ? Verdict::pass : Verdict::fail;
        tline.detail = (res.certificate.feasible ? "feasible into " : "infeasible into ") +
                       target.label;
        lines.push_back(std::move(tline));
    }
    return lines;
}

namespace {

bool backtrack_assign(const std::vector<std::vector<char>>& allowed, std::vector<int>& match_src,
                      std::vector<int>& match_tgt, size_t src) {
    if (src == match_src.size()) return true;
    for (size_t t = 0; t < match_tgt.size(); ++t) {
        if (match_tgt[t] >= 0 || !allowed[src][t]) continue;
        match_src[src] = static_cast<int>(t);
        match_tgt[t] = static_cast<int>(src);
        if (backtrack_assign(allowed, match_src, match_tgt, src + 1)) return true;
        match_src[src] = -1;
        match_tgt[t] = -1;
    }
    return false;
}

}  // namespace

bool bijection_exists_bruteforce(const FiniteGroup& g, const FiniteGroup& h) {
    if (g.n != h.n) throw std::invalid_argument("bijection oracle: orders differ");
    // Most-constrained-first: assign sources of large order before small.
    std::vector<int> order_idx(g.n);
    for (int i = 0; i < g.n; ++i) order_idx[i] = i;
    std::stable_sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        return g.order_cache[a] > g.order_cache[b];
    });
    std::vector<std::vector<char>> allowed(g.n, std::vector<char>(h.n, 0));
    for (int i = 0; i < g.n; ++i)
        for (int y = 0; y < h.n; ++y)
            allowed[i][y] = h.order_cache[y] % g.order_cache[order_idx[i]] == 0;
    std::vector<int> ms(g.n, -1), mt(h.n, -1);
    return backtrack_assign(allowed, ms, mt, 0);
}

}  // namespace grouplab
