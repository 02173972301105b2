#pragma once

#include "permgrp.hpp"
#include "sprdata.hpp"

#include <string>
#include <vector>

namespace unip::lmod {

using permgrp::ClassFunction;
using permgrp::Group;

// group from a small label: "1", "Z<m>", "S<n>" (n <= 5), "(Z2)^<r>"
Group instantiate(const std::string& label);

// partition labels of Irr(S_n) matched onto the computed character table;
// result[i] = table index of the character with partition label parts[i]
std::vector<int> symmetric_char_indices(const Group& sym, int n,
                                        const std::vector<std::vector<int>>& parts);
int char_index_of_partition(const Group& sym, int n, const std::vector<int>& lambda);

// rows indexed by the group's character table, columns = PIMs
struct DecompositionData {
    std::vector<std::vector<long long>> d;
    int cols() const { return d.empty() ? 0 : (int)d[0].size(); }
};

DecompositionData decomposition_matrix(const Group& A, int ell);

struct ProjectiveCharacter {
    std::vector<long long> mult; // over Irr_K(A), table order
    ClassFunction as_class_function(const Group& A) const;
    long long degree(const Group& A) const;
};

std::vector<ProjectiveCharacter> pim_set(const Group& A, int ell);

struct QuotientResult {
    Group group;
    std::string label;  // identified against {1, Z_m, (Z2)^r, S3, S4, S5}
};

// smallest quotient of A through which every character of S factors
QuotientResult canonical_quotient(const sprdata::UnipotentClassRecord& rec);
QuotientResult ell_special_quotient(const sprdata::UnipotentClassRecord& rec, int ell);

// |M~(Gamma)| and |M~_ell(Gamma)| for trivial F: sums over conjugacy classes
// of centralizer class counts (resp. ell-regular class counts)
long long m_tilde(const Group& gamma);
long long m_tilde_ell(const Group& gamma, int ell);

// best-effort twisted versions; flagged as an extension of the trivial-F path
struct TwistedCount {
    long long value = 0;
    bool extension = false; // true when F is nontrivial
};
TwistedCount m_tilde(const Group& gamma, const permgrp::FAction& f);
TwistedCount m_tilde_ell(const Group& gamma, const permgrp::FAction& f, int ell);

} // namespace unip::lmod
