#include "classical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace unip::classical {

namespace {

void partitions_rec(int rest, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(rest - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

int count_distinct_with_parity(const std::vector<int>& lam, int parity) {
    std::set<int> seen;
    for (int x : lam)
        if (x % 2 == parity) seen.insert(x);
    return (int)seen.size();
}

bool multiplicities_even(const std::vector<int>& lam, int parity) {
    std::map<int, int> mult;
    for (int x : lam) mult[x]++;
    for (auto& [p, m] : mult)
        if (p % 2 == parity && m % 2 != 0) return false;
    return true;
}

long long ell_part(long long n, long long ell) {
    long long r = 1;
    while (n % ell == 0) {
        n /= ell;
        r *= ell;
    }
    return r;
}

long long strip_p(long long n, long long p) {
    while (n % p == 0) n /= p;
    return n;
}

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long char_of_prime_power(long long q) {
    for (long long p = 2; p * p <= q; ++p)
        if (q % p == 0) {
            long long r = q;
            while (r % p == 0) r /= p;
            if (r != 1) throw ClassicalError("q is not a prime power");
            return p;
        }
    return q; // q prime
}

} // namespace

std::vector<PartitionClass> unipotent_class_data(char series, int rank) {
    if (rank < 1) throw ClassicalError("rank must be positive");
    std::vector<PartitionClass> out;
    switch (series) {
        case 'A': {
            for (auto& lam : partitions(rank)) {
                PartitionClass c;
                c.lambda = lam;
                c.series = 'A';
                c.gcd_parts = 0;
                for (int x : lam) c.gcd_parts = std::gcd(c.gcd_parts, (long long)x);
                out.push_back(std::move(c));
            }
            break;
        }
        case 'B': {
            for (auto& lam : partitions(2 * rank + 1)) {
                if (!multiplicities_even(lam, 0)) continue; // even parts in pairs
                PartitionClass c;
                c.lambda = lam;
                c.series = 'B';
                c.a_rank = std::max(0, count_distinct_with_parity(lam, 1) - 1);
                out.push_back(std::move(c));
            }
            break;
        }
        case 'C': {
            for (auto& lam : partitions(2 * rank)) {
                if (!multiplicities_even(lam, 1)) continue; // odd parts in pairs
                PartitionClass c;
                c.lambda = lam;
                c.series = 'C';
                c.a_rank = count_distinct_with_parity(lam, 0);
                out.push_back(std::move(c));
            }
            break;
        }
        case 'D': {
            if (rank < 2) throw ClassicalError("type D needs rank >= 2");
            for (auto& lam : partitions(2 * rank)) {
                if (!multiplicities_even(lam, 0)) continue;
                bool very_even = true;
                for (int x : lam)
                    if (x % 2) very_even = false;
                if (very_even) {
                    for (int copy = 0; copy < 2; ++copy) {
                        PartitionClass c;
                        c.lambda = lam;
                        c.series = 'D';
                        c.very_even = true;
                        c.copy = copy;
                        out.push_back(std::move(c));
                    }
                } else {
                    PartitionClass c;
                    c.lambda = lam;
                    c.series = 'D';
                    c.a_rank = std::max(0, count_distinct_with_parity(lam, 1) - 1);
                    out.push_back(std::move(c));
                }
            }
            break;
        }
        default:
            throw ClassicalError(std::string("unsupported series ") + series);
    }
    return out;
}

long long rational_unipotent_count(char series, int rank, long long q) {
    if (q < 3 || q % 2 == 0) throw ClassicalError("q must be an odd prime power");
    char_of_prime_power(q);
    auto classes = unipotent_class_data(series, rank);
    long long total = 0;
    if (series == 'A') {
        long long p = char_of_prime_power(q);
        for (const auto& c : classes) total += std::gcd(strip_p(c.gcd_parts, p), q - 1);
        return total;
    }
    // B/C/D: component groups are elementary abelian 2-groups with trivial
    // F-action on the split form, so each algebraic class contributes 2^r
    for (const auto& c : classes) total += 1LL << c.a_rank;
    return total;
}

long long f_classes_cyclic(long long m, long long t) {
    if (m < 1) throw ClassicalError("modulus must be positive");
    long long tm = ((t % m) + m) % m;
    if (std::gcd(tm == 0 ? m : tm, m) != 1 && m > 1)
        throw ClassicalError("multiplier not invertible");
    // orbits of x ~ x + (g - t g), g in Z_m, found by explicit sweep
    std::vector<int> seen(m, 0);
    long long orbits = 0;
    for (long long x = 0; x < m; ++x) {
        if (seen[x]) continue;
        ++orbits;
        std::vector<long long> stack{x};
        seen[x] = 1;
        while (!stack.empty()) {
            long long cur = stack.back();
            stack.pop_back();
            for (long long g = 0; g < m; ++g) {
                long long y = ((cur + g - tm * g) % m + m) % m;
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    return orbits;
}

TypeAResult alpha_type_a(int n, int ell, long long q, bool unitary) {
    long long p = char_of_prime_power(q);
    if (p == 2) throw ClassicalError("q must be odd");
    if (ell == p) throw ClassicalError("ell must differ from the defining characteristic");
    if (!is_prime_ll(ell)) throw ClassicalError("ell must be prime");
    TypeAResult out;
    bool all_minus = true, all_plus = true;
    for (const auto& c : unipotent_class_data('A', n)) {
        TypeARow row;
        row.lambda = c.lambda;
        row.m_lambda = strip_p(c.gcd_parts, p);
        long long M = ell_part(row.m_lambda, ell);
        // Frobenius acts on the cyclic component group by x -> qx (linear)
        // or x -> -qx (unitary)
        long long t = unitary ? -q : q;
        row.alpha = f_classes_cyclic(M, t);
        row.formula_minus = ell_part(std::gcd(row.m_lambda, q - 1), ell);
        row.formula_plus = ell_part(std::gcd(row.m_lambda, q + 1), ell);
        if (row.alpha != row.formula_minus) all_minus = false;
        if (row.alpha != row.formula_plus) all_plus = false;
        out.total += row.alpha;
        out.rows.push_back(std::move(row));
    }
    if (all_minus && all_plus) out.matched_sign = "both";
    else if (all_minus) out.matched_sign = "-1";
    else if (all_plus) out.matched_sign = "+1";
    else out.matched_sign = "neither";
    return out;
}

// -------------------------------------------------------- brute force -----

namespace {

// dense matrices over F_q, entries 0..q-1
struct MatGroup {
    int n;
    long long q;
    std::vector<std::vector<uint8_t>> elements;
    std::unordered_map<std::string, int> index;
    std::vector<int> genidx;

    static std::string keyof(const std::vector<uint8_t>& m) {
        return std::string(m.begin(), m.end());
    }

    std::vector<uint8_t> mul(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) const {
        std::vector<uint8_t> c(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                int av = a[i * n + k];
                if (!av) continue;
                for (int j = 0; j < n; ++j)
                    c[i * n + j] = (uint8_t)((c[i * n + j] + av * b[k * n + j]) % q);
            }
        return c;
    }

    void close(const std::vector<std::vector<uint8_t>>& gens, long long budget) {
        std::vector<uint8_t> id(n * n, 0);
        for (int i = 0; i < n; ++i) id[i * n + i] = 1;
        elements.push_back(id);
        index.emplace(keyof(id), 0);
        for (const auto& g : gens) {
            auto [it, fresh] = index.emplace(keyof(g), (int)elements.size());
            if (fresh) elements.push_back(g);
            genidx.push_back(it->second);
        }
        for (size_t head = 0; head < elements.size(); ++head) {
            for (int gi : genidx) {
                auto prod = mul(elements[head], elements[gi]);
                if (index.emplace(keyof(prod), (int)elements.size()).second)
                    elements.push_back(std::move(prod));
            }
            if ((long long)elements.size() > budget)
                throw ClassicalError("matrix group enumeration budget exceeded");
        }
    }
};

bool is_unipotent(const std::vector<uint8_t>& m, int n, long long q) {
    // (M - I)^n == 0
    std::vector<long long> a(m.begin(), m.end());
    for (int i = 0; i < n; ++i) a[i * n + i] = (a[i * n + i] + q - 1) % q;
    std::vector<long long> pw = a;
    for (int s = 1; s < n; ++s) {
        std::vector<long long> nx(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (!pw[i * n + k]) continue;
                for (int j = 0; j < n; ++j)
                    nx[i * n + j] = (nx[i * n + j] + pw[i * n + k] * a[k * n + j]) % q;
            }
        pw = std::move(nx);
    }
    for (long long v : pw)
        if (v) return false;
    return true;
}

long long det_modq(std::vector<long long> m, int n, long long q) {
    long long det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r * n + c]) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
            det = (q - det) % q;
        }
        long long inv = 1, base = m[c * n + c], e = q - 2;
        while (e) {
            if (e & 1) inv = inv * base % q;
            base = base * base % q;
            e >>= 1;
        }
        det = det * m[c * n + c] % q;
        for (int r = c + 1; r < n; ++r) {
            long long f = m[r * n + c] * inv % q;
            if (!f) continue;
            for (int j = c; j < n; ++j)
                m[r * n + j] = (m[r * n + j] - f * m[c * n + j] % q + q) % q;
        }
    }
    return det;
}

// unipotent conjugacy classes of the group by orbit sweep
long long count_unipotent_classes(const MatGroup& G) {
    std::vector<int> unip;
    for (size_t i = 0; i < G.elements.size(); ++i)
        if (is_unipotent(G.elements[i], G.n, G.q)) unip.push_back((int)i);
    std::set<int> uniset(unip.begin(), unip.end());
    std::unordered_map<int, int> orbit;
    // generator inverses by power walk: g^{k-1} when g^k = 1
    std::vector<int> geninv;
    for (int gi : G.genidx) {
        int prev = 0, cur = gi;
        while (cur != 0) {
            prev = cur;
            cur = G.index.at(MatGroup::keyof(G.mul(G.elements[cur], G.elements[gi])));
        }
        geninv.push_back(prev);
    }
    long long classes = 0;
    for (int u : unip) {
        if (orbit.count(u)) continue;
        ++classes;
        std::vector<int> stack{u};
        orbit[u] = (int)classes;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (size_t k = 0; k < G.genidx.size(); ++k) {
                auto gx = G.mul(G.elements[G.genidx[k]], G.elements[x]);
                auto gxg = G.mul(gx, G.elements[geninv[k]]);
                int y = G.index.at(MatGroup::keyof(gxg));
                if (!orbit.count(y)) {
                    orbit[y] = (int)classes;
                    stack.push_back(y);
                }
            }
        }
    }
    return classes;
}

std::vector<uint8_t> identity_mat(int n) {
    std::vector<uint8_t> id(n * n, 0);
    for (int i = 0; i < n; ++i) id[i * n + i] = 1;
    return id;
}

// transvection x -> x + c * B(x,v) v for a bilinear form B given as matrix
std::vector<uint8_t> transvection(const std::vector<long long>& B, const std::vector<long long>& v,
                                  long long c, int n, long long q) {
    auto m = identity_mat(n);
    // column action: M e_j = e_j + c * B(e_j, v) v
    for (int j = 0; j < n; ++j) {
        long long bj = 0;
        for (int i = 0; i < n; ++i) bj = (bj + B[j * n + i] * v[i]) % q;
        long long f = c * bj % q;
        for (int i = 0; i < n; ++i)
            m[i * n + j] = (uint8_t)((m[i * n + j] + f * v[i]) % q);
    }
    return m;
}

long long expected_order(char series, int rank, long long q) {
    auto pw = [&](long long b, long long e) {
        long long r = 1;
        while (e--) r *= b;
        return r;
    };
    long long o = 1;
    switch (series) {
        case 'A': { // SL_{rank}(q), rank = matrix size
            int n = rank;
            o = pw(q, (long long)n * (n - 1) / 2);
            for (int i = 2; i <= n; ++i) o *= pw(q, i) - 1;
            return o;
        }
        case 'C':
        case 'B': { // Sp_{2n}(q) and SO_{2n+1}(q) have the same order
            int n2 = rank;
            o = pw(q, (long long)n2 * n2);
            for (int i = 1; i <= n2; ++i) o *= pw(q, 2 * i) - 1;
            return o;
        }
        case 'D': { // split SO_{2n}(q)
            int n2 = rank;
            o = pw(q, (long long)n2 * (n2 - 1)) * (pw(q, n2) - 1);
            for (int i = 1; i < n2; ++i) o *= pw(q, 2 * i) - 1;
            return o;
        }
    }
    throw ClassicalError("unsupported series");
}

} // namespace

long long brute_force_class_count(char series, int rank, long long q) {
    if (rank == 0) return 1;
    if (!is_prime_ll(q)) throw ClassicalError("brute force needs a prime field");
    MatGroup G;
    G.q = q;
    std::vector<std::vector<uint8_t>> gens;

    if (series == 'A') {
        int n = rank;
        G.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                auto m = identity_mat(n);
                m[i * n + j] = 1;
                gens.push_back(m);
            }
    } else if (series == 'C') {
        int n = 2 * rank;
        G.n = n;
        // symplectic form: B(e_i, f_i) = 1 with f_i = e_{rank+i}
        std::vector<long long> B(n * n, 0);
        for (int i = 0; i < rank; ++i) {
            B[i * n + (rank + i)] = 1;
            B[(rank + i) * n + i] = q - 1;
        }
        std::vector<std::vector<long long>> vs;
        for (int i = 0; i < n; ++i) {
            std::vector<long long> v(n, 0);
            v[i] = 1;
            vs.push_back(v);
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<long long> v(n, 0);
                v[i] = 1;
                v[j] = 1;
                vs.push_back(v);
            }
        for (const auto& v : vs)
            for (long long c = 1; c < q; ++c) gens.push_back(transvection(B, v, c, n, q));
    } else if (series == 'B' || series == 'D') {
        int n = series == 'B' ? 2 * rank + 1 : 2 * rank;
        G.n = n;
        // split symmetric form: hyperbolic pairs plus one (for B) diagonal 1
        std::vector<long long> Bf(n * n, 0);
        for (int i = 0; i < (series == 'B' ? rank : rank); ++i) {
            Bf[2 * i * n + (2 * i + 1)] = 1;
            Bf[(2 * i + 1) * n + 2 * i] = 1;
        }
        if (series == 'B') Bf[(n - 1) * n + (n - 1)] = 2; // B(v,v) = 2Q(v)
        // reflections r_v: x -> x - B(x,v)/Q(v) v over anisotropic v generate O
        std::vector<std::vector<uint8_t>> refl;
        std::vector<long long> v(n, 0);
        auto Q = [&](const std::vector<long long>& x) {
            long long s = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) s = (s + Bf[i * n + j] * x[i] * x[j]) % q;
            // B(x,x) = 2Q(x); return B(x,x)
            return s;
        };
        // enumerate all vectors (q^n small for our ranks)
        long long total = 1;
        for (int i = 0; i < n; ++i) total *= q;
        for (long long code = 1; code < total; ++code) {
            long long c = code;
            for (int i = 0; i < n; ++i) {
                v[i] = c % q;
                c /= q;
            }
            long long bvv = Q(v);
            if (bvv == 0) continue;
            // r_v = I - (2/B(v,v)) v v^T Bf ; build column-wise
            long long inv = 1, base = bvv, e = q - 2;
            while (e) {
                if (e & 1) inv = inv * base % q;
                base = base * base % q;
                e >>= 1;
            }
            auto m = identity_mat(n);
            for (int j = 0; j < n; ++j) {
                long long bj = 0;
                for (int i = 0; i < n; ++i) bj = (bj + Bf[j * n + i] * v[i]) % q;
                long long f = 2 * inv % q * bj % q;
                for (int i = 0; i < n; ++i)
                    m[i * n + j] = (uint8_t)(((m[i * n + j] - f * v[i]) % q + q) % q);
            }
            refl.push_back(m);
            if (refl.size() > 4000) break; // plenty to generate O
        }
        // SO = even products; generate by pairwise products of reflections
        for (size_t a = 0; a < refl.size() && a < 40; ++a)
            for (size_t b2 = 0; b2 < refl.size() && b2 < 40; ++b2) {
                if (a == b2) continue;
                MatGroup tmp;
                tmp.n = n;
                tmp.q = q;
                gens.push_back(tmp.mul(refl[a], refl[b2]));
            }
    } else {
        throw ClassicalError("unsupported series");
    }

    G.close(gens, 12'000'000);
    if ((long long)G.elements.size() != expected_order(series, rank, q))
        throw ClassicalError("generated group has wrong order: got " +
                             std::to_string(G.elements.size()) + ", expected " +
                             std::to_string(expected_order(series, rank, q)));
    return count_unipotent_classes(G);
}

} // namespace unip::classical
