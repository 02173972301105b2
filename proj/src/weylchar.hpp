#pragma once

#include "intpoly.hpp"
#include "permgrp.hpp"
#include "rootsys.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace unip::weylchar {

using rootsys::CartanType;
using rootsys::RootSystem;

struct FakeDegree {
    IPoly poly;
    int valuation = 0; // lowest exponent (the b-invariant)
    int top = 0;       // highest exponent
};

// A Weyl group W(t) realised on the roots of an ambient system together with
// its character table and fake degrees. For reflection subgroups the fake
// degrees are computed with the ambient reflection representation; adding
// trivial summands does not change the coinvariant algebra.
struct WeylContext {
    const RootSystem* ambient = nullptr;
    CartanType type;             // identified type of this group
    permgrp::Group group;        // permutations of the ambient roots
    std::vector<int> fusion;     // class -> ambient Weyl class (only for subgroups)
    std::vector<FakeDegree> fake; // per character (table order)

    int num_chars() const { return (int)fake.size(); }
    long long char_degree(int i) const;
};

// builds W itself (fusion = identity)
WeylContext make_ambient(const RootSystem& rs);
// reflection subgroup generated by the reflections at the given roots
WeylContext make_reflection_subgroup(const RootSystem& rs, const permgrp::Group& ambient_weyl,
                                     const CartanType& sub_type,
                                     const std::vector<rootsys::Vec>& base_roots);

// fake degree of one character (exact Molien evaluation)
FakeDegree fake_degree(const RootSystem& rs, const WeylContext& ctx, int chi_index);

// multiset of (degree, b-invariant) keys of the special characters of a type;
// A by partitions, B/C by symbol interleaving, G2/F4 curated.
std::vector<std::pair<long long, int>> special_keys(const CartanType& t);

// indices into ctx's character table matching special_keys(ctx.type);
// integrity error when a key is ambiguous or unmatched.
std::vector<int> special_characters(const WeylContext& ctx);

// decompose Ind_H^W(chi) into ambient irreducibles; returns multiplicities
std::vector<long long> induce(const WeylContext& ambient, const WeylContext& sub, int chi_index);

// truncated induction: the unique constituent with the same b-invariant
int j_induce(const WeylContext& ambient, const WeylContext& sub, int chi_index);

// partitions and hook lengths (shared with classical combinatorics)
std::vector<std::vector<int>> partitions_of(int n);
long long hook_dimension(const std::vector<int>& lambda); // # standard tableaux
long long nfn(const std::vector<int>& lambda);            // sum (i-1) * lambda_i

} // namespace unip::weylchar
