#pragma once

#include <grouplab/group.hpp>

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace grouplab {

// Multiset of element orders of a group or a subset of one.
struct OrderHistogram {
    std::map<i64, i64> entries;  // order -> count
    i64 total = 0;

    i64 count(i64 d) const {
        auto it = entries.find(d);
        return it == entries.end() ? 0 : it->second;
    }
    bool operator==(const OrderHistogram& other) const { return entries == other.entries; }
};

OrderHistogram order_histogram(const FiniteGroup& g);
OrderHistogram order_histogram(const FiniteGroup& g, const std::vector<int>& subset);

// JSON array of sorted [order, count] pairs.
std::string histogram_to_json(const OrderHistogram& h);

// Sol(U, d, G): all x with x^m in the conjugation closure of U for some m | d.
std::vector<int> sol_set(const FiniteGroup& g, const std::vector<int>& u, i64 d);

// |Sol(1, d, G)| = #{x : o(x) | d}, via the order cache.
i64 sol_count_identity(const FiniteGroup& g, i64 d);

// Elements of U having order exactly d.
std::vector<int> b_d(const FiniteGroup& g, const std::vector<int>& u, i64 d);

// Identical order multisets; throws on an order mismatch.
bool same_order_type(const FiniteGroup& g, const FiniteGroup& h);

enum class FuncId { identity, square, reciprocal };

std::string to_string(FuncId f);
FuncId func_from_string(const std::string& s);
bool func_is_increasing(FuncId f);
mpq_class func_apply(FuncId f, i64 order);

enum class PsiFamily { power_sum, subset_product };

struct PsiValue {
    mpq_class value;  // integral whenever f is integer-valued
    PsiFamily family = PsiFamily::power_sum;
    FuncId f = FuncId::identity;
    int l = 1;
};

// Power-sum family: sum over x of f(o(x))^l.
PsiValue psi_power(const FiniteGroup& g, FuncId f, int l);
PsiValue psi_power(const OrderHistogram& h, FuncId f, int l);

// Subset-product family: l-th elementary symmetric function of {f(o(x))}.
PsiValue psi_subset(const FiniteGroup& g, FuncId f, int l);
PsiValue psi_subset(const OrderHistogram& h, FuncId f, int l);

// psi(G) = sum of element orders.
mpz_class psi_sum(const FiniteGroup& g);
mpz_class psi_sum(const OrderHistogram& h);

// Exact mean element order psi(G)/|G|.
mpq_class mean_order(const FiniteGroup& g);

}  // namespace grouplab
