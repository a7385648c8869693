#pragma once

#include <grouplab/group.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace grouplab {

// Recipe tree for the parametric families and combinators.
struct GroupSpec {
    enum class Kind {
        cyclic,            // params {k}
        abelian_product,   // params {k1..km}
        dihedral,          // params {n}, n = 2m >= 6
        dicyclic,          // params {m}, order 4m; generalized quaternion when m = 2^(e-2)
        semidihedral,      // params {n}, n = 2^e >= 16
        modular,           // params {p, s}: a^(p^(s-1)) = b^p = 1, a^b = a^(1+p^(s-2))
        direct_product,    // children {left, right}
        semidirect_product,  // children {normal, acting} + action
        from_cayley_file,  // path
        from_perm_file,    // path
    };

    Kind kind = Kind::cyclic;
    std::vector<i64> params;
    std::vector<GroupSpec> children;
    // Per acting-group generator (element index in the built acting group),
    // the automorphism of the built normal group as a full image list.
    std::vector<std::pair<int, std::vector<int>>> action;
    std::string path;
    std::string label_override;
};

GroupSpec spec_cyclic(i64 k);
GroupSpec spec_abelian(std::vector<i64> ks);
GroupSpec spec_dihedral(i64 n);
GroupSpec spec_dicyclic(i64 m);
GroupSpec spec_generalized_quaternion(i64 n);  // n = 2^e, e >= 3
GroupSpec spec_semidihedral(i64 n);
GroupSpec spec_modular(i64 p, int s);
GroupSpec spec_direct(GroupSpec a, GroupSpec b);
GroupSpec spec_semidirect(GroupSpec normal, GroupSpec acting,
                          std::vector<std::pair<int, std::vector<int>>> action,
                          std::string label = "");
GroupSpec spec_from_cayley(std::string path);
GroupSpec spec_from_perm(std::string path);

// Named recipes used by the built-in catalog.
GroupSpec spec_a4();
GroupSpec spec_c7_c3();
GroupSpec spec_heisenberg(i64 p);  // order p^3, exponent p, p odd
GroupSpec spec_sl23();

std::string spec_to_string(const GroupSpec& spec);

FiniteGroup build(const GroupSpec& spec, const BuildLimits& limits = {});

// The automorphism of g determined by generator images, as a full image
// list. Throws if the images do not define an automorphism.
std::vector<int> automorphism_from_generator_images(const FiniteGroup& g,
                                                    const std::vector<int>& gens,
                                                    const std::vector<int>& images);

struct Catalog {
    std::vector<FiniteGroup> groups;
    bool complete = false;
};

// All built-in groups of order n. The complete flag is true exactly when the
// built-in families provably exhaust the order (n < 16).
Catalog builtin_catalog(i64 n, const BuildLimits& limits = {});

FiniteGroup load_cayley(const std::string& path, const BuildLimits& limits = {});
FiniteGroup load_perm_generators(const std::string& path, const BuildLimits& limits = {});

struct CayleyFile {
    FiniteGroup group;
    bool complete_catalog = false;
};
CayleyFile load_cayley_file(const std::string& path, const BuildLimits& limits = {});

void save_cayley(const FiniteGroup& g, std::ostream& os,
                 const std::vector<std::string>& header_comments = {});

// catalog/<n>/*.cay, files in filename order; complete iff every file
// declares complete-catalog: true.
Catalog load_catalog_dir(const std::string& catalog_root, i64 n,
                         const BuildLimits& limits = {});

// Compact CLI grammar: C12, Q8, D8, SD16, M16, Dic3, A4, Heis27, C7:C3,
// x-separated direct products (C4xC2, C3xQ8), file:<path>.
GroupSpec parse_group_literal(const std::string& text);

}  // namespace grouplab
