#include "cyclotomic.hpp"

#include <algorithm>
#include <numeric>

namespace unip {

namespace {

// polynomial long division of a by monic b, asserts exactness, returns quotient
std::vector<long long> divexact_monic(std::vector<long long> a, const std::vector<long long>& b) {
    int db = (int)b.size() - 1;
    if ((int)a.size() - 1 < db) throw std::runtime_error("cyclotomic: bad division");
    std::vector<long long> q(a.size() - db, 0);
    for (int i = (int)a.size() - 1; i >= db; --i) {
        long long f = a[i];
        if (f == 0) continue;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
    }
    for (long long v : a)
        if (v != 0) throw std::runtime_error("cyclotomic: inexact division");
    return q;
}

} // namespace

const std::vector<long long>& Cyc::cyclotomic_poly(int n) {
    static std::map<int, std::vector<long long>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<long long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = divexact_monic(std::move(num), cyclotomic_poly(d));
    return cache.emplace(n, std::move(num)).first->second;
}

// raw has length n (coefficients of zeta^0..zeta^{n-1}); reduce mod Phi_n.
// 1, zeta, ..., zeta^{phi(n)-1} is a Z-basis of Z[zeta_n], so the reduced
// form is unique and comparisons are plain coordinate comparisons.
Cyc::Cyc(int n, std::vector<long long> raw) : n_(n) {
    const auto& phi_n = cyclotomic_poly(n);
    int d = (int)phi_n.size() - 1;
    for (int i = (int)raw.size() - 1; i >= d; --i) {
        long long f = raw[i];
        if (f == 0) continue;
        raw[i] = 0;
        for (int j = 0; j < d; ++j) raw[i - d + j] -= f * phi_n[j];
    }
    raw.resize(d);
    c_ = std::move(raw);
    if (n_ > 1) {
        bool rational = true;
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) { rational = false; break; }
        if (rational) {
            long long v = c_.empty() ? 0 : c_[0];
            n_ = 1;
            c_ = {v};
        }
    }
}

Cyc Cyc::root_power(int n, long long k, long long v) {
    if (n <= 0) throw std::runtime_error("cyclotomic: bad order");
    std::vector<long long> r(n, 0);
    long long kk = ((k % n) + n) % n;
    r[(size_t)kk] = v;
    return Cyc(n, std::move(r));
}

Cyc Cyc::to_conductor(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::runtime_error("cyclotomic: bad embedding");
    int q = m / n_;
    std::vector<long long> raw(m, 0);
    for (size_t i = 0; i < c_.size(); ++i) raw[i * (size_t)q] += c_[i];
    return Cyc(m, std::move(raw));
}

int Cyc::lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

bool Cyc::is_zero() const {
    for (long long v : c_)
        if (v) return false;
    return true;
}

bool Cyc::is_integer() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

long long Cyc::integer_value() const {
    if (!is_integer()) throw std::runtime_error("cyclotomic: not an integer");
    return c_.empty() ? 0 : c_[0];
}

bool Cyc::operator==(const Cyc& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    int m = lcm_int(n_, o.n_);
    return to_conductor(m).c_ == o.to_conductor(m).c_;
}

Cyc Cyc::operator+(const Cyc& o) const {
    int m = lcm_int(n_, o.n_);
    Cyc a = to_conductor(m), b = o.to_conductor(m);
    std::vector<long long> raw(m, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) raw[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) raw[i] += b.c_[i];
    return Cyc(m, std::move(raw));
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (o * -1); }

Cyc Cyc::operator*(const Cyc& o) const {
    int m = lcm_int(n_, o.n_);
    Cyc a = to_conductor(m), b = o.to_conductor(m);
    std::vector<long long> raw(m, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j]) raw[(i + j) % m] += a.c_[i] * b.c_[j];
    }
    return Cyc(m, std::move(raw));
}

Cyc Cyc::operator*(long long k) const {
    if (k == 0) return Cyc(0);
    std::vector<long long> raw(n_, 0);
    for (size_t i = 0; i < c_.size(); ++i) raw[i] = c_[i] * k;
    return Cyc(n_, std::move(raw));
}

Cyc Cyc::conj() const {
    std::vector<long long> raw(n_, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) raw[(n_ - (long long)i) % n_] += c_[i];
    return Cyc(n_, std::move(raw));
}

std::string Cyc::str() const {
    if (is_integer()) return std::to_string(integer_value());
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!s.empty() && c_[i] > 0) s += "+";
        if (c_[i] == -1 && i > 0) s += "-";
        else if (c_[i] != 1 || i == 0) s += std::to_string(c_[i]);
        if (i > 0) {
            s += "z" + std::to_string(n_);
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace unip
