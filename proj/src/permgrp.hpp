#pragma once

#include "cyclotomic.hpp"
#include "perm.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace unip::permgrp {

struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConjClass {
    int rep;                  // element index of representative
    std::vector<int> members; // element indices, sorted
    long long size() const { return (long long)members.size(); }
};

// Row of a character table: one exact value per conjugacy class.
struct ClassFunction {
    std::vector<Cyc> values; // indexed by class
    long long degree() const { return values.at(0).integer_value(); }
};

struct GroupQuotient;

// Finite permutation group with populate-once caches. Immutable after
// construction; safe for concurrent readers.
class Group {
public:
    Group() = default;
    static Group from_generators(int degree, std::vector<Perm> gens, std::string label = "");

    int degree() const;
    const std::string& label() const;
    const std::vector<Perm>& generators() const;

    const std::vector<Perm>& elements() const; // element 0 is the identity
    long long order() const;
    int element_index(const Perm& p) const; // -1 if not a member
    bool contains(const Perm& p) const { return element_index(p) >= 0; }

    const std::vector<ConjClass>& classes() const;
    int class_of(int elem_idx) const;
    int class_of_perm(const Perm& p) const;
    long long centralizer_order(int class_idx) const;
    int power_class(int class_idx, long long k) const; // class of g^k
    int inverse_class(int class_idx) const;
    int exponent() const;
    bool is_abelian() const;
    int element_order(int elem_idx) const;

    // Exact character table; rows sorted by degree then value tuple.
    const std::vector<ClassFunction>& character_table() const;

    // Subgroup generated inside the same permutation domain.
    Group subgroup(std::vector<Perm> gens, std::string label = "") const;
    Group centralizer(int elem_idx) const;

    std::vector<int> kernel_of_character(const ClassFunction& chi) const; // element indices
    bool is_normal(const std::vector<int>& subgroup_elems) const;

    GroupQuotient quotient(const std::vector<int>& normal_elems) const;

    // Count of conjugacy classes of elements of order prime to ell.
    int ell_regular_class_count(int ell) const;

    struct Fingerprint {
        long long order;
        std::vector<long long> class_sizes; // sorted
        std::vector<long long> degrees;     // sorted
        bool operator==(const Fingerprint&) const = default;
    };
    Fingerprint fingerprint() const;
    // Identify against the small inventory {1, Z_m, (Z2)^r, S3, S4, S5};
    // returns display label like "S3", "Z6", "(Z2)^2", "1".
    std::string identify_small() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

struct GroupQuotient {
    Group group;
    std::vector<int> coset_of; // element index -> quotient element index
};

// Automorphism given on generators; validated to extend to the whole group.
struct FAction {
    std::vector<Perm> gen_images;
    int order = 1;
    static FAction trivial(const Group& g);
};

// Checks the generator images extend to an automorphism; returns the full
// element-index map.
std::vector<int> automorphism_map(const Group& g, const FAction& f);

// Orbits of g . x = g x F(g)^{-1}; with trivial F these are the ordinary
// conjugacy classes.
std::vector<std::vector<int>> twisted_classes(const Group& g, const FAction& f);

// --- label-based construction -------------------------------------------

Group trivial_group();
Group symmetric(int n);               // on n points
Group cyclic(int m);                  // regular representation
Group elem_ab2(int r);                // (Z2)^r
Group direct_product(const Group& a, const Group& b, std::string label = "");

} // namespace unip::permgrp
