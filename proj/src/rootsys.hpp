#pragma once

#include "perm.hpp"
#include "permgrp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unip::rootsys {

struct TypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One irreducible factor; `tilde` marks an all-short-root copy inside a
// non-simply-laced ambient system (display Ã).
struct Component {
    char series = 'A';
    int rank = 0;
    bool tilde = false;
    auto operator<=>(const Component&) const = default;
};

struct CartanType {
    std::vector<Component> components;

    CartanType() = default;
    static CartanType simple(char series, int rank);
    static CartanType parse(const std::string& s); // "A2+~A1", "F4", ...

    void canonicalize();
    int rank() const;
    bool irreducible() const { return components.size() == 1; }
    long long weyl_order() const;
    std::string str() const;       // decorated
    std::string str_plain() const; // decoration stripped
    bool same_plain(const CartanType& o) const;
    bool operator==(const CartanType& o) const = default;
};

using Vec = std::vector<long long>;

long long dot(const Vec& a, const Vec& b);

struct SubsystemRecord {
    int deleted_node = 0; // 0 = affine node
    long long d = 1;      // mark of the deleted node
    CartanType sub_type;
    // base of the subsystem, given both as dual-system vectors and as the
    // corresponding roots of the ambient system (for reflection subgroups)
    std::vector<Vec> base_dual;
    std::vector<Vec> base_roots;
};

class RootSystem {
public:
    static RootSystem build(const CartanType& t); // irreducible types only

    const CartanType& type() const { return type_; }
    int rank() const { return (int)simple_.size(); }
    const std::vector<Vec>& simple_roots() const { return simple_; }
    const std::vector<Vec>& positive_roots() const { return positive_; }
    const std::vector<Vec>& all_roots() const { return roots_; }
    const std::vector<long long>& marks() const { return marks_; } // per simple node
    const Vec& affine_root() const { return theta_dual_src_; } // root of Phi dual to -theta
    bool is_short(const Vec& root) const;

    std::vector<SubsystemRecord> pseudo_levi_subsystems() const;
    std::vector<SubsystemRecord> ell_relevant_subsystems(int ell) const;

    // expansion over simple roots; throws when not in the root lattice
    std::vector<long long> expand_simple(const Vec& v) const;

    // Weyl group as permutations of all_roots(); capped at order 1152.
    permgrp::Group weyl_group() const;
    Perm reflection_perm(const Vec& root) const;
    // matrix of w on the reflection representation, simple-root basis,
    // columns = images of simple roots
    std::vector<std::vector<long long>> element_matrix(const Perm& w) const;

    int root_index(const Vec& v) const;

private:
    CartanType type_;
    std::vector<Vec> simple_;
    std::vector<Vec> positive_;
    std::vector<Vec> roots_; // positives then negatives
    std::vector<long long> marks_;
    Vec theta_dual_;     // highest root of the dual system (scaled coroot coords)
    Vec theta_dual_src_; // the Phi-root whose coroot is theta_dual_
    std::vector<Vec> dual_simple_;  // scaled coroots of simple roots
    std::vector<Vec> dual_roots_;   // scaled coroots of all roots
    long long short_norm_ = 0, long_norm_ = 0;

    Vec coroot_scaled(const Vec& r) const;
    long long coroot_scale_ = 0;
    friend struct RootSystemBuilder;
};

// classify an independent base by its Cartan matrix; lengths from the given
// vectors; tilde decoration from the paired ambient roots (null = none)
CartanType identify_base(const std::vector<Vec>& base, const std::vector<bool>* short_flags);

// degrees of the reflection representation invariants, per type
std::vector<int> reflection_degrees(const CartanType& t);

} // namespace unip::rootsys
