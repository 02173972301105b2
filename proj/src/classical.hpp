#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace unip::classical {

struct ClassicalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// unipotent class of a classical group, parametrised by a partition
struct PartitionClass {
    std::vector<int> lambda; // weakly decreasing
    char series = 'C';
    int a_rank = 0;          // A_G(u) = (Z2)^a_rank for B/C/D
    long long gcd_parts = 0; // type A: gcd of the parts (p'-part taken later)
    bool very_even = false;  // type D only
    int copy = 0;            // 0/1 for the two classes of a very-even partition
};

// series A takes n = the matrix size (partitions of n); B takes the Lie rank
// n with |lambda| = 2n+1; C and D take the Lie rank with |lambda| = 2n
std::vector<PartitionClass> unipotent_class_data(char series, int rank);

// number of unipotent conjugacy classes of the split group over F_q, q odd
long long rational_unipotent_count(char series, int rank, long long q);

// twisted class count of Z_m under F(x) = t*x, by direct orbit enumeration
long long f_classes_cyclic(long long m, long long t);

struct TypeARow {
    std::vector<int> lambda;
    long long m_lambda = 0;      // p'-part of gcd(lambda)
    long long alpha = 0;         // oracle value (authoritative)
    long long formula_minus = 0; // gcd(m, q-1)_ell
    long long formula_plus = 0;  // gcd(m, q+1)_ell
};
struct TypeAResult {
    std::vector<TypeARow> rows;
    long long total = 0;
    // which sign epsilon in gcd(m, q+epsilon) matches the oracle for this form
    std::string matched_sign; // "-1", "+1", or "both"/"neither" per run
};
TypeAResult alpha_type_a(int n, int ell, long long q, bool unitary);

// exact count of unipotent classes by explicit matrix enumeration
long long brute_force_class_count(char series, int rank, long long q);

} // namespace unip::classical
