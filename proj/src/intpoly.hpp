#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace unip {

// Dense univariate polynomial over Z, coefficient of x^i at index i.
// All arithmetic is exact; division asserts exactness.
struct IPoly {
    std::vector<long long> c;

    IPoly() = default;
    explicit IPoly(std::vector<long long> cc) : c(std::move(cc)) { trim(); }
    static IPoly constant(long long v) { return IPoly{{v}}; }
    static IPoly monomial(long long v, int deg) {
        std::vector<long long> cc(deg + 1, 0);
        cc[deg] = v;
        return IPoly{std::move(cc)};
    }
    // 1 - x^k
    static IPoly one_minus_xk(int k) {
        std::vector<long long> cc(k + 1, 0);
        cc[0] = 1;
        cc[k] = -1;
        return IPoly{std::move(cc)};
    }
    // 1 + x + ... + x^{k-1}
    static IPoly geometric(int k) { return IPoly{std::vector<long long>(k, 1)}; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; } // -1 for zero
    long long coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : 0; }
    long long at1() const {
        long long s = 0;
        for (long long v : c) s += v;
        return s;
    }
    int valuation() const {
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) return (int)i;
        return -1;
    }

    bool operator==(const IPoly& o) const { return c == o.c; }

    IPoly operator+(const IPoly& o) const {
        std::vector<long long> r(std::max(c.size(), o.c.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
        return IPoly{std::move(r)};
    }
    IPoly operator-(const IPoly& o) const {
        std::vector<long long> r(std::max(c.size(), o.c.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
        return IPoly{std::move(r)};
    }
    IPoly operator*(const IPoly& o) const {
        if (is_zero() || o.is_zero()) return IPoly{};
        std::vector<long long> r(c.size() + o.c.size() - 1, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
        }
        return IPoly{std::move(r)};
    }
    IPoly operator*(long long k) const {
        IPoly r = *this;
        for (auto& v : r.c) v *= k;
        r.trim();
        return r;
    }

    // Exact division; throws if the remainder is nonzero or the leading
    // coefficient does not divide along the way.
    IPoly divexact(const IPoly& d) const {
        if (d.is_zero()) throw std::runtime_error("IPoly: division by zero");
        if (is_zero()) return IPoly{};
        std::vector<long long> rem = c;
        int dd = d.degree();
        long long lead = d.c[dd];
        if ((int)rem.size() - 1 < dd) throw std::runtime_error("IPoly: inexact division");
        std::vector<long long> q((int)rem.size() - dd, 0);
        for (int i = (int)rem.size() - 1; i >= dd; --i) {
            if (rem[i] == 0) continue;
            if (rem[i] % lead != 0) throw std::runtime_error("IPoly: inexact division");
            long long f = rem[i] / lead;
            q[i - dd] = f;
            for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c[j];
        }
        for (long long v : rem)
            if (v != 0) throw std::runtime_error("IPoly: inexact division");
        return IPoly{std::move(q)};
    }

    // Divide every coefficient by k, asserting exactness.
    IPoly divscalar(long long k) const {
        IPoly r = *this;
        for (auto& v : r.c) {
            if (v % k != 0) throw std::runtime_error("IPoly: inexact scalar division");
            v /= k;
        }
        return r;
    }

    std::string str(const char* var = "q") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = 0; i < (int)c.size(); ++i) {
            if (c[i] == 0) continue;
            if (!s.empty()) s += c[i] > 0 ? "+" : "-";
            else if (c[i] < 0) s += "-";
            long long a = c[i] > 0 ? c[i] : -c[i];
            if (a != 1 || i == 0) s += std::to_string(a);
            if (i > 0) {
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }
};

} // namespace unip
