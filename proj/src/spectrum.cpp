#include <grouplab/spectrum.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grouplab {

OrderHistogram order_histogram(const FiniteGroup& g) {
    OrderHistogram h;
    for (int x = 0; x < g.n; ++x) ++h.entries[g.order_cache[x]];
    h.total = g.n;
    return h;
}

OrderHistogram order_histogram(const FiniteGroup& g, const std::vector<int>& subset) {
    OrderHistogram h;
    for (int x : subset) {
        if (x < 0 || x >= g.n) throw std::invalid_argument("order_histogram: index out of range");
        ++h.entries[g.order_cache[x]];
    }
    h.total = static_cast<i64>(subset.size());
    return h;
}

std::string histogram_to_json(const OrderHistogram& h) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto [d, c] : h.entries) {
        if (!first) os << ",";
        first = false;
        os << "[" << d << "," << c << "]";
    }
    os << "]";
    return os.str();
}

std::vector<int> sol_set(const FiniteGroup& g, const std::vector<int>& u, i64 d) {
    if (u.empty()) throw std::invalid_argument("sol_set: U must be nonempty");
    if (d < 1) throw std::invalid_argument("sol_set: d must be positive");
    std::vector<char> in_closure(g.n, 0);
    for (int x : u) {
        if (x < 0 || x >= g.n) throw std::invalid_argument("sol_set: index out of range");
        for (int y = 0; y < g.n; ++y) in_closure[g.conj(x, y)] = 1;
    }
    std::vector<i64> divs = divisors(d);
    std::vector<int> out;
    for (int x = 0; x < g.n; ++x) {
        for (i64 m : divs) {
            if (in_closure[g.pow(x, m)]) {
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

i64 sol_count_identity(const FiniteGroup& g, i64 d) {
    i64 count = 0;
    for (int x = 0; x < g.n; ++x)
        if (d % g.order_cache[x] == 0) ++count;
    return count;
}

std::vector<int> b_d(const FiniteGroup& g, const std::vector<int>& u, i64 d) {
    std::vector<int> out;
    for (int x : u) {
        if (x < 0 || x >= g.n) throw std::invalid_argument("b_d: index out of range");
        if (g.order_cache[x] == d) out.push_back(x);
    }
    return out;
}

bool same_order_type(const FiniteGroup& g, const FiniteGroup& h) {
    if (g.n != h.n) throw std::invalid_argument("same_order_type: group orders differ");
    return order_histogram(g) == order_histogram(h);
}

std::string to_string(FuncId f) {
    switch (f) {
        case FuncId::identity: return "identity";
        case FuncId::square: return "square";
        case FuncId::reciprocal: return "reciprocal";
    }
    return "?";
}

FuncId func_from_string(const std::string& s) {
    if (s == "identity") return FuncId::identity;
    if (s == "square") return FuncId::square;
    if (s == "reciprocal") return FuncId::reciprocal;
    throw std::invalid_argument("unregistered function id: " + s);
}

bool func_is_increasing(FuncId f) { return f != FuncId::reciprocal; }

mpq_class func_apply(FuncId f, i64 order) {
    switch (f) {
        case FuncId::identity: return mpq_class(static_cast<long>(order));
        case FuncId::square: return mpq_class(static_cast<long>(order)) * mpq_class(static_cast<long>(order));
        case FuncId::reciprocal: {
            mpq_class q(1, static_cast<long>(order));
            q.canonicalize();
            return q;
        }
    }
    throw std::invalid_argument("unregistered function id");
}

PsiValue psi_power(const OrderHistogram& h, FuncId f, int l) {
    if (l < 1) throw std::invalid_argument("psi_power: l must be positive");
    mpq_class acc = 0;
    for (auto [d, c] : h.entries) {
        mpq_class v = func_apply(f, d);
        mpq_class pw = 1;
        for (int i = 0; i < l; ++i) pw *= v;
        acc += pw * mpq_class(static_cast<long>(c));
    }
    PsiValue out;
    out.value = acc;
    out.family = PsiFamily::power_sum;
    out.f = f;
    out.l = l;
    return out;
}

PsiValue psi_power(const FiniteGroup& g, FuncId f, int l) {
    return psi_power(order_histogram(g), f, l);
}

PsiValue psi_subset(const OrderHistogram& h, FuncId f, int l) {
    if (l < 1) throw std::invalid_argument("psi_subset: l must be positive");
    if (l > h.total) throw std::invalid_argument("psi_subset: l exceeds the set size");
    // Degree-capped product of (1 + v t)^count over distinct values v.
    std::vector<mpq_class> poly(static_cast<size_t>(l) + 1, 0);
    poly[0] = 1;
    for (auto [d, c] : h.entries) {
        mpq_class v = func_apply(f, d);
        // (1 + v t)^c truncated at degree l via binomials.
        std::vector<mpq_class> factor(static_cast<size_t>(l) + 1, 0);
        mpz_class binom = 1;
        mpq_class vpow = 1;
        for (int k = 0; k <= l; ++k) {
            if (k > c) break;
            factor[k] = mpq_class(binom) * vpow;
            binom = binom * static_cast<long>(c - k) / (k + 1);
            vpow *= v;
        }
        std::vector<mpq_class> next(static_cast<size_t>(l) + 1, 0);
        for (int i = 0; i <= l; ++i) {
            if (poly[i] == 0) continue;
            for (int j = 0; i + j <= l; ++j) {
                if (factor[j] == 0) continue;
                next[i + j] += poly[i] * factor[j];
            }
        }
        poly.swap(next);
    }
    PsiValue out;
    out.value = poly[static_cast<size_t>(l)];
    out.family = PsiFamily::subset_product;
    out.f = f;
    out.l = l;
    return out;
}

PsiValue psi_subset(const FiniteGroup& g, FuncId f, int l) {
    return psi_subset(order_histogram(g), f, l);
}

mpz_class psi_sum(const OrderHistogram& h) {
    mpz_class acc = 0;
    for (auto [d, c] : h.entries) acc += mpz_class(static_cast<long>(d)) * static_cast<long>(c);
    return acc;
}

mpz_class psi_sum(const FiniteGroup& g) { return psi_sum(order_histogram(g)); }

mpq_class mean_order(const FiniteGroup& g) {
    mpq_class q(psi_sum(g), mpz_class(g.n));
    q.canonicalize();
    return q;
}

}  // namespace grouplab
