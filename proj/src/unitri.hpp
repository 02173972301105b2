#pragma once

#include <optional>
#include <string>
#include <vector>

namespace unip::unitri {

// dense nonnegative integer matrix
struct NonnegMatrix {
    int n = 0;
    std::vector<long long> a; // row major, n x n

    long long& at(int i, int j) { return a[i * n + j]; }
    long long at(int i, int j) const { return a[i * n + j]; }
    static NonnegMatrix identity(int n);
    bool nonneg() const;
};

NonnegMatrix parse_matrix(const std::string& text); // one row per line
std::string print_matrix(const NonnegMatrix& m);
NonnegMatrix multiply(const NonnegMatrix& a, const NonnegMatrix& b);

bool is_lower_unitriangular(const NonnegMatrix& m);

// AB = C with C lower unitriangular?
bool verify_factorization(const NonnegMatrix& a, const NonnegMatrix& b, const NonnegMatrix& c);

struct ColumnResult {
    bool ok = false;
    std::vector<int> sigma; // column permutation: new column j = old column sigma[j]
    std::string path;       // "greedy" or "exhaustive"
};

// find a column permutation making A lower unitriangular; greedy version of
// the forced-entry argument with exhaustive fallback for n <= 8
ColumnResult column_unitriangularize(const NonnegMatrix& a);

struct CertificateResult {
    bool ok = false;
    std::vector<int> row_order; // new row i = old row row_order[i]
    std::vector<int> col_order;
};

// does some simultaneous row/column reordering make S lower unitriangular?
CertificateResult basic_set_certificate(const NonnegMatrix& s);

long long determinant(const NonnegMatrix& m); // exact (Bareiss)

} // namespace unip::unitri
