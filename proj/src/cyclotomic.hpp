#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace unip {

// Element of Z[zeta_n], zeta_n = primitive n-th root of unity.
// Stored as polynomial in zeta of degree < phi(n), canonically reduced
// modulo the n-th cyclotomic polynomial. Exact integer arithmetic only.
class Cyc {
public:
    Cyc() : n_(1), c_{0} {}
    explicit Cyc(long long v) : n_(1), c_{v} {}
    // v * zeta_n^k
    static Cyc root_power(int n, long long k, long long v = 1);

    int conductor() const { return n_; }
    const std::vector<long long>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_integer() const;
    long long integer_value() const; // throws when not an integer

    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator*(long long k) const;

    Cyc conj() const; // zeta -> zeta^{-1}

    std::string str() const;

    // n-th cyclotomic polynomial (monic, integer coefficients).
    static const std::vector<long long>& cyclotomic_poly(int n);

private:
    int n_;                      // conductor of the representation
    std::vector<long long> c_;   // size phi(n_), coeff of zeta^i

    Cyc(int n, std::vector<long long> raw); // reduces raw (size n) mod Phi_n
    static Cyc make(int n, const std::vector<long long>& raw);
    Cyc to_conductor(int m) const; // embed into Z[zeta_m], n_ | m
    static int lcm_int(int a, int b);
    void reduce_conductor();
};

} // namespace unip
