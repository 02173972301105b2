#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace unip {

// Permutation of {0..n-1} stored as image vector.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (a*b)(x) = a(b(x))
inline Perm perm_mul(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

inline Perm perm_inv(const Perm& a) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[a[i]] = (int)i;
    return c;
}

inline bool perm_is_identity(const Perm& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != (int)i) return false;
    return true;
}

inline int perm_order(const Perm& a) {
    Perm p = a;
    int k = 1;
    while (!perm_is_identity(p)) {
        p = perm_mul(a, p);
        ++k;
        if (k > 1'000'000) throw std::runtime_error("perm_order: runaway");
    }
    return k;
}

inline Perm perm_pow(const Perm& a, long long k) {
    int n = (int)a.size();
    Perm r = perm_identity(n), base = a;
    long long e = k;
    if (e < 0) { base = perm_inv(a); e = -e; }
    while (e) {
        if (e & 1) r = perm_mul(r, base);
        base = perm_mul(base, base);
        e >>= 1;
    }
    return r;
}

inline bool perm_valid(const Perm& a) {
    std::vector<char> seen(a.size(), 0);
    for (int x : a) {
        if (x < 0 || x >= (int)a.size() || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

} // namespace unip
