#include "unitri.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unip::unitri {

NonnegMatrix NonnegMatrix::identity(int n) {
    NonnegMatrix m;
    m.n = n;
    m.a.assign((size_t)n * n, 0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool NonnegMatrix::nonneg() const {
    for (long long v : a)
        if (v < 0) return false;
    return true;
}

NonnegMatrix parse_matrix(const std::string& text) {
    NonnegMatrix m;
    std::istringstream is(text);
    std::string line;
    std::vector<std::vector<long long>> rows;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<long long> row;
        long long v;
        while (ls >> v) row.push_back(v);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("matrix parse: empty input");
    m.n = (int)rows.size();
    for (auto& r : rows)
        if ((int)r.size() != m.n) throw std::runtime_error("matrix parse: not square");
    for (auto& r : rows) m.a.insert(m.a.end(), r.begin(), r.end());
    return m;
}

std::string print_matrix(const NonnegMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) os << (j ? " " : "") << m.at(i, j);
        os << "\n";
    }
    return os.str();
}

NonnegMatrix multiply(const NonnegMatrix& a, const NonnegMatrix& b) {
    if (a.n != b.n) throw std::runtime_error("matrix multiply: size mismatch");
    NonnegMatrix c;
    c.n = a.n;
    c.a.assign((size_t)a.n * a.n, 0);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            long long v = a.at(i, k);
            if (!v) continue;
            for (int j = 0; j < a.n; ++j) c.at(i, j) += v * b.at(k, j);
        }
    return c;
}

bool is_lower_unitriangular(const NonnegMatrix& m) {
    for (int i = 0; i < m.n; ++i) {
        if (m.at(i, i) != 1) return false;
        for (int j = i + 1; j < m.n; ++j)
            if (m.at(i, j) != 0) return false;
    }
    return true;
}

bool verify_factorization(const NonnegMatrix& a, const NonnegMatrix& b, const NonnegMatrix& c) {
    if (a.n != b.n || b.n != c.n) throw std::runtime_error("verify: size mismatch");
    auto prod = multiply(a, b);
    return prod.a == c.a && is_lower_unitriangular(c);
}

namespace {

NonnegMatrix apply_columns(const NonnegMatrix& a, const std::vector<int>& sigma) {
    NonnegMatrix m;
    m.n = a.n;
    m.a.assign(a.a.size(), 0);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) m.at(i, j) = a.at(i, sigma[j]);
    return m;
}

std::optional<std::vector<int>> exhaustive_columns(const NonnegMatrix& a) {
    std::vector<int> sigma(a.n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        if (is_lower_unitriangular(apply_columns(a, sigma))) return sigma;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

} // namespace

ColumnResult column_unitriangularize(const NonnegMatrix& a) {
    if (!a.nonneg()) throw std::runtime_error("column_unitriangularize: negative entry");
    ColumnResult res;
    // greedy forced-entry pass: row i needs a 1 in an unused column whose
    // entries above row i all vanish; ties broken by smallest column index
    std::vector<int> sigma;
    std::vector<char> used(a.n, 0);
    bool stuck = false;
    for (int i = 0; i < a.n && !stuck; ++i) {
        int pick = -1;
        for (int k = 0; k < a.n; ++k) {
            if (used[k] || a.at(i, k) != 1) continue;
            bool zeros_above = true;
            for (int r = 0; r < i; ++r)
                if (a.at(r, k) != 0) zeros_above = false;
            if (zeros_above) { pick = k; break; }
        }
        if (pick < 0) stuck = true;
        else {
            used[pick] = 1;
            sigma.push_back(pick);
        }
    }
    if (!stuck && is_lower_unitriangular(apply_columns(a, sigma))) {
        res.ok = true;
        res.sigma = sigma;
        res.path = "greedy";
        return res;
    }
    if (a.n <= 8) {
        if (auto s = exhaustive_columns(a)) {
            res.ok = true;
            res.sigma = *s;
            res.path = "exhaustive";
            return res;
        }
        res.path = "exhaustive";
        return res; // verified failure
    }
    res.path = "greedy";
    return res;
}

namespace {

// backtracking over column choices: at step i pick a row whose support lies
// inside the chosen columns plus one fresh column holding a 1
bool cert_rec(const NonnegMatrix& s, std::vector<int>& rows, std::vector<int>& cols,
              std::vector<char>& rused, std::vector<char>& cused) {
    int n = s.n;
    int step = (int)rows.size();
    if (step == n) return true;
    for (int r = 0; r < n; ++r) {
        if (rused[r]) continue;
        // candidate fresh columns for this row
        for (int c = 0; c < n; ++c) {
            if (cused[c] || s.at(r, c) != 1) continue;
            bool fits = true;
            for (int c2 = 0; c2 < n && fits; ++c2)
                if (!cused[c2] && c2 != c && s.at(r, c2) != 0) fits = false;
            if (!fits) continue;
            rows.push_back(r);
            cols.push_back(c);
            rused[r] = 1;
            cused[c] = 1;
            if (cert_rec(s, rows, cols, rused, cused)) return true;
            rused[r] = 0;
            cused[c] = 0;
            rows.pop_back();
            cols.pop_back();
        }
    }
    return false;
}

} // namespace

CertificateResult basic_set_certificate(const NonnegMatrix& s) {
    if (!s.nonneg()) throw std::runtime_error("certificate: negative entry");
    CertificateResult res;
    long long det = determinant(s);
    if (det != 1 && det != -1) return res; // reordered unitriangular forces |det| = 1
    std::vector<int> rows, cols;
    std::vector<char> rused(s.n, 0), cused(s.n, 0);
    if (!cert_rec(s, rows, cols, rused, cused)) return res;
    res.ok = true;
    res.row_order = rows;
    res.col_order = cols;
    return res;
}

long long determinant(const NonnegMatrix& m) {
    int n = m.n;
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    long long prev = 1, sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

} // namespace unip::unitri
