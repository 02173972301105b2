#include "permgrp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace unip::permgrp {

namespace {

struct PermHash {
    size_t operator()(const Perm& p) const {
        size_t h = 1469598103934665603ull;
        for (int x : p) {
            h ^= (size_t)x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

long long mulmod(long long a, long long b, long long p) { return (long long)((__int128)a * b % p); }

long long powmod(long long a, long long e, long long p) {
    long long r = 1 % p;
    a %= p;
    if (a < 0) a += p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

long long invmod(long long a, long long p) { return powmod(a, p - 2, p); }

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool cyc_less(const Cyc& a, const Cyc& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
    return a.coeffs() < b.coeffs();
}

using FMat = std::vector<std::vector<long long>>;

} // namespace

struct Group::Impl {
    int degree = 0;
    std::vector<Perm> gens;
    std::string label;

    mutable std::mutex mtx;
    mutable std::vector<Perm> elements;
    mutable std::unordered_map<Perm, int, PermHash> index;
    mutable std::vector<ConjClass> classes;
    mutable std::vector<int> class_of;
    mutable std::vector<int> elem_order;
    mutable int exponent = 0;
    mutable std::vector<ClassFunction> table;
    mutable bool have_elements = false, have_classes = false, have_table = false;

    void need_elements() const {
        if (have_elements) return;
        Perm id = perm_identity(degree);
        elements.push_back(id);
        index.emplace(id, 0);
        for (size_t head = 0; head < elements.size(); ++head) {
            for (const auto& g : gens) {
                Perm q = perm_mul(elements[head], g);
                if (index.emplace(q, (int)elements.size()).second) elements.push_back(std::move(q));
            }
            if (elements.size() > 2'000'000) throw CapabilityError("group enumeration budget exceeded");
        }
        have_elements = true;
    }

    void need_classes() const {
        if (have_classes) return;
        need_elements();
        int n = (int)elements.size();
        class_of.assign(n, -1);
        std::vector<Perm> geninv;
        for (auto& g : gens) geninv.push_back(perm_inv(g));
        for (int e = 0; e < n; ++e) {
            if (class_of[e] >= 0) continue;
            int cid = (int)classes.size();
            ConjClass cc;
            cc.rep = e;
            std::vector<int> stack{e};
            class_of[e] = cid;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                cc.members.push_back(x);
                for (size_t gi = 0; gi < gens.size(); ++gi) {
                    Perm y = perm_mul(gens[gi], perm_mul(elements[x], geninv[gi]));
                    int yi = index.at(y);
                    if (class_of[yi] < 0) {
                        class_of[yi] = cid;
                        stack.push_back(yi);
                    }
                }
            }
            std::sort(cc.members.begin(), cc.members.end());
            classes.push_back(std::move(cc));
        }
        elem_order.assign(n, 0);
        exponent = 1;
        for (int e = 0; e < n; ++e) {
            elem_order[e] = perm_order(elements[e]);
            exponent = std::lcm(exponent, elem_order[e]);
        }
        have_classes = true;
    }

    void need_table() const;
};

Group Group::from_generators(int degree, std::vector<Perm> gens, std::string label) {
    for (auto& g : gens)
        if ((int)g.size() != degree || !perm_valid(g))
            throw IntegrityError("invalid generator permutation");
    Group g;
    g.impl_ = std::make_shared<Impl>();
    g.impl_->degree = degree;
    g.impl_->gens = std::move(gens);
    g.impl_->label = std::move(label);
    return g;
}

int Group::degree() const { return impl_->degree; }
const std::string& Group::label() const { return impl_->label; }
const std::vector<Perm>& Group::generators() const { return impl_->gens; }

const std::vector<Perm>& Group::elements() const {
    std::lock_guard<std::mutex> lk(impl_->mtx);
    impl_->need_elements();
    return impl_->elements;
}

long long Group::order() const { return (long long)elements().size(); }

int Group::element_index(const Perm& p) const {
    elements();
    auto it = impl_->index.find(p);
    return it == impl_->index.end() ? -1 : it->second;
}

const std::vector<ConjClass>& Group::classes() const {
    std::lock_guard<std::mutex> lk(impl_->mtx);
    impl_->need_classes();
    return impl_->classes;
}

int Group::class_of(int e) const {
    classes();
    return impl_->class_of.at(e);
}

int Group::class_of_perm(const Perm& p) const {
    int e = element_index(p);
    if (e < 0) throw IntegrityError("element not in group");
    return class_of(e);
}

long long Group::centralizer_order(int c) const { return order() / classes().at(c).size(); }

int Group::power_class(int c, long long k) const {
    const auto& cls = classes();
    Perm p = perm_pow(impl_->elements[cls.at(c).rep], k);
    return class_of(element_index(p));
}

int Group::inverse_class(int c) const { return power_class(c, -1); }

int Group::exponent() const {
    classes();
    return impl_->exponent;
}

int Group::element_order(int e) const {
    classes();
    return impl_->elem_order.at(e);
}

bool Group::is_abelian() const {
    for (auto& g : impl_->gens)
        for (auto& h : impl_->gens)
            if (perm_mul(g, h) != perm_mul(h, g)) return false;
    return true;
}

// ------------------------------------------------------------------ Dixon --

void Group::Impl::need_table() const {
    if (have_table) return;
    need_classes();
    const int n = (int)classes.size();
    const long long G = (long long)elements.size();
    const int e = exponent;

    long long lo = std::max<long long>({4 * (long long)std::sqrt((double)G) + 1, 2LL * e, 65});
    long long p = 0;
    for (long long cand = (lo / e + 1) * e + 1;; cand += e)
        if (is_prime(cand)) { p = cand; break; }

    long long z;
    {
        long long m = p - 1, gen = 0;
        std::vector<long long> qf;
        for (long long q = 2; q * q <= m; ++q)
            if (m % q == 0) {
                qf.push_back(q);
                while (m % q == 0) m /= q;
            }
        if (m > 1) qf.push_back(m);
        for (long long w = 2;; ++w) {
            bool ok = true;
            for (long long q : qf)
                if (powmod(w, (p - 1) / q, p) == 1) { ok = false; break; }
            if (ok) { gen = w; break; }
        }
        z = powmod(gen, (p - 1) / e, p);
    }

    // class multiplication matrices: (M_i)[k][j] = a_{ijk} with
    // c_i c_j = sum_k a_{ijk} c_k; the common eigenvectors are
    // v[j] = |C_j| chi(g_j)/chi(1).
    std::vector<FMat> M(n, FMat(n, std::vector<long long>(n, 0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Perm& zk = elements[classes[k].rep];
            for (int x : classes[i].members) {
                Perm y = perm_mul(perm_inv(elements[x]), zk);
                M[i][class_of[index.at(y)]][k]++;
            }
        }

    auto apply = [&](const FMat& A, const std::vector<long long>& v) {
        std::vector<long long> w(n, 0);
        for (int k = 0; k < n; ++k) {
            __int128 s = 0;
            for (int j = 0; j < n; ++j)
                if (A[k][j] && v[j]) s += (__int128)A[k][j] * v[j];
            long long r = (long long)(s % p);
            w[k] = r < 0 ? r + p : r;
        }
        return w;
    };

    auto echelon = [&](FMat& B) {
        int r = 0;
        for (int c = 0; c < n && r < (int)B.size(); ++c) {
            int piv = -1;
            for (int i = r; i < (int)B.size(); ++i)
                if (((B[i][c] % p) + p) % p != 0) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(B[r], B[piv]);
            long long inv = invmod(((B[r][c] % p) + p) % p, p);
            for (auto& x : B[r]) x = mulmod(((x % p) + p) % p, inv, p);
            for (int i = 0; i < (int)B.size(); ++i) {
                if (i == r) continue;
                long long f = ((B[i][c] % p) + p) % p;
                if (!f) continue;
                for (int c2 = 0; c2 < n; ++c2)
                    B[i][c2] = (long long)(((B[i][c2] - (__int128)f * B[r][c2]) % p + p) % p);
            }
            ++r;
        }
        FMat out;
        for (auto& row : B) {
            bool nz = false;
            for (long long v : row)
                if (v) { nz = true; break; }
            if (nz) out.push_back(row);
        }
        B = std::move(out);
    };

    // iteratively split the commuting algebra into common eigenspaces
    std::vector<FMat> spaces;
    {
        FMat full(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) full[i][i] = 1;
        spaces.push_back(std::move(full));
    }

    for (int i = 1; i < n; ++i) {
        bool alldone = true;
        for (auto& sp : spaces)
            if (sp.size() != 1) { alldone = false; break; }
        if (alldone) break;

        std::vector<FMat> next;
        for (auto& sp : spaces) {
            int d = (int)sp.size();
            if (d == 1) { next.push_back(std::move(sp)); continue; }
            std::vector<int> pivcol(d, -1);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < n; ++c)
                    if (sp[r][c]) { pivcol[r] = c; break; }
            // matrix of M_i restricted to span(sp): M_i b_t = sum_s A[s][t] b_s
            FMat A(d, std::vector<long long>(d, 0));
            for (int t = 0; t < d; ++t) {
                auto w = apply(M[i], sp[t]);
                for (int s = 0; s < d; ++s) {
                    long long coef = w[pivcol[s]];
                    A[s][t] = coef;
                    if (!coef) continue;
                    for (int c = 0; c < n; ++c)
                        w[c] = (long long)(((w[c] - (__int128)coef * sp[s][c]) % p + p) % p);
                }
                for (int c = 0; c < n; ++c)
                    if (w[c]) throw IntegrityError("class algebra: subspace not invariant");
            }
            // characteristic polynomial via Hessenberg form
            std::vector<long long> cp;
            {
                FMat H = A;
                for (int c = 0; c + 2 < d; ++c) {
                    int piv = -1;
                    for (int r = c + 1; r < d; ++r)
                        if (H[r][c]) { piv = r; break; }
                    if (piv < 0) continue;
                    if (piv != c + 1) {
                        std::swap(H[piv], H[c + 1]);
                        for (int k = 0; k < d; ++k) std::swap(H[k][piv], H[k][c + 1]);
                    }
                    long long inv = invmod(H[c + 1][c], p);
                    for (int r = c + 2; r < d; ++r) {
                        long long f = mulmod(H[r][c], inv, p);
                        if (!f) continue;
                        for (int k = 0; k < d; ++k)
                            H[r][k] = (long long)(((H[r][k] - (__int128)f * H[c + 1][k]) % p + p) % p);
                        for (int k = 0; k < d; ++k)
                            H[k][c + 1] = (long long)((H[k][c + 1] + (__int128)f * H[k][r]) % p);
                    }
                }
                std::vector<std::vector<long long>> P(d + 1);
                P[0] = {1};
                for (int k = 1; k <= d; ++k) {
                    std::vector<long long> cur(P[k - 1].size() + 1, 0);
                    for (size_t t = 0; t < P[k - 1].size(); ++t) {
                        cur[t + 1] = (cur[t + 1] + P[k - 1][t]) % p;
                        cur[t] = (long long)(((cur[t] - (__int128)H[k - 1][k - 1] * P[k - 1][t]) % p + p) % p);
                    }
                    long long beta = 1;
                    for (int m = k - 2; m >= 0; --m) {
                        beta = mulmod(beta, H[m + 1][m], p);
                        if (!beta) break;
                        long long f = mulmod(beta, H[m][k - 1], p);
                        if (!f) continue;
                        for (size_t t = 0; t < P[m].size(); ++t)
                            cur[t] = (long long)(((cur[t] - (__int128)f * P[m][t]) % p + p) % p);
                    }
                    P[k] = std::move(cur);
                }
                cp = std::move(P[d]);
            }
            std::vector<long long> roots;
            for (long long lam = 0; lam < p; ++lam) {
                __int128 v = 0;
                for (int t = (int)cp.size() - 1; t >= 0; --t) v = (v * lam + cp[t]) % p;
                if ((long long)(v % p) == 0) roots.push_back(lam);
            }
            for (long long lam : roots) {
                FMat K(d, std::vector<long long>(d, 0));
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c) K[r][c] = (A[r][c] + (r == c ? p - lam : 0)) % p;
                std::vector<int> pivot_of_col(d, -1);
                int rr = 0;
                for (int c = 0; c < d && rr < d; ++c) {
                    int piv = -1;
                    for (int r2 = rr; r2 < d; ++r2)
                        if (K[r2][c]) { piv = r2; break; }
                    if (piv < 0) continue;
                    std::swap(K[rr], K[piv]);
                    long long inv = invmod(K[rr][c], p);
                    for (auto& x : K[rr]) x = mulmod(x, inv, p);
                    for (int r2 = 0; r2 < d; ++r2) {
                        if (r2 == rr || !K[r2][c]) continue;
                        long long f = K[r2][c];
                        for (int c2 = 0; c2 < d; ++c2)
                            K[r2][c2] = (long long)(((K[r2][c2] - (__int128)f * K[rr][c2]) % p + p) % p);
                    }
                    pivot_of_col[c] = rr;
                    ++rr;
                }
                FMat eig;
                for (int c = 0; c < d; ++c) {
                    if (pivot_of_col[c] >= 0) continue;
                    std::vector<long long> coords(d, 0);
                    coords[c] = 1;
                    for (int c2 = 0; c2 < d; ++c2)
                        if (pivot_of_col[c2] >= 0) coords[c2] = (p - K[pivot_of_col[c2]][c]) % p;
                    std::vector<long long> vec(n, 0);
                    for (int s = 0; s < d; ++s)
                        if (coords[s])
                            for (int cc = 0; cc < n; ++cc)
                                vec[cc] = (long long)((vec[cc] + (__int128)coords[s] * sp[s][cc]) % p);
                    eig.push_back(std::move(vec));
                }
                if (eig.empty()) throw IntegrityError("class algebra: empty eigenspace");
                echelon(eig);
                next.push_back(std::move(eig));
            }
        }
        spaces = std::move(next);
    }
    if ((int)spaces.size() != n) throw IntegrityError("character table: eigenspace split failed");

    auto inv_class = [&](int j) {
        Perm pr = perm_inv(elements[classes[j].rep]);
        return class_of[index.at(pr)];
    };

    std::vector<ClassFunction> chars;
    for (auto& sp : spaces) {
        auto v = sp[0];
        int idclass = class_of[0];
        if (!v[idclass]) throw IntegrityError("character table: bad eigenvector");
        long long inv = invmod(v[idclass], p);
        for (auto& x : v) x = mulmod(x, inv, p);

        __int128 s = 0;
        for (int j = 0; j < n; ++j) {
            long long term = mulmod(v[j], v[inv_class(j)], p);
            term = mulmod(term, invmod((long long)classes[j].size() % p, p), p);
            s = (s + term) % p;
        }
        long long rhs = mulmod(G % p, invmod((long long)(s % p), p), p);
        long long deg = 0;
        for (long long dd = 1; dd * dd <= G; ++dd)
            if (mulmod(dd, dd, p) == rhs) { deg = dd; break; }
        if (!deg) throw IntegrityError("character table: degree recovery failed");

        std::vector<long long> chi_p(n);
        for (int j = 0; j < n; ++j)
            chi_p[j] = mulmod(mulmod(deg % p, v[j], p), invmod((long long)classes[j].size() % p, p), p);

        ClassFunction cf;
        cf.values.resize(n);
        for (int j = 0; j < n; ++j) {
            std::vector<int> pow_class_j(e);
            for (int k = 0; k < e; ++k) {
                Perm pw = perm_pow(elements[classes[j].rep], k);
                pow_class_j[k] = class_of[index.at(pw)];
            }
            Cyc val(0);
            for (int t = 0; t < e; ++t) {
                __int128 acc = 0;
                for (int k = 0; k < e; ++k) {
                    long long zexp = powmod(z, (e - (long long)t * k % e) % e, p);
                    acc = (acc + (__int128)chi_p[pow_class_j[k]] * zexp) % p;
                }
                long long ct = mulmod((long long)(acc % p), invmod(e % p, p), p);
                if (ct > deg) throw IntegrityError("character table: Fourier lift out of range");
                if (ct) val = val + Cyc::root_power(e, t, ct);
            }
            cf.values[j] = val;
        }
        if (!(cf.values[idclass] == Cyc(deg)))
            throw IntegrityError("character table: degree mismatch");
        chars.push_back(std::move(cf));
    }

    int idclass = class_of[0];
    std::sort(chars.begin(), chars.end(), [&](const ClassFunction& a, const ClassFunction& b) {
        long long da = a.values[idclass].integer_value();
        long long db = b.values[idclass].integer_value();
        if (da != db) return da < db;
        for (int j = 0; j < n; ++j) {
            if (a.values[j] == b.values[j]) continue;
            return cyc_less(a.values[j], b.values[j]);
        }
        return false;
    });

    // exact verification: first and second orthogonality
    {
        long long sumsq = 0;
        for (auto& ch : chars) sumsq += ch.degree() * ch.degree();
        if (sumsq != G) throw IntegrityError("character table: sum of squares != |G|");
        for (size_t a = 0; a < chars.size(); ++a)
            for (size_t b = a; b < chars.size(); ++b) {
                Cyc s(0);
                for (int j = 0; j < n; ++j) {
                    Cyc t = chars[a].values[j] * chars[b].values[inv_class(j)];
                    s = s + t * (long long)classes[j].size();
                }
                if (!(s == Cyc(a == b ? G : 0)))
                    throw IntegrityError("character table: orthogonality failed");
            }
    }

    table = std::move(chars);
    have_table = true;
}

const std::vector<ClassFunction>& Group::character_table() const {
    std::lock_guard<std::mutex> lk(impl_->mtx);
    impl_->need_table();
    return impl_->table;
}

// -------------------------------------------------------------- subgroups --

Group Group::subgroup(std::vector<Perm> gens, std::string label) const {
    if (gens.empty()) gens.push_back(perm_identity(impl_->degree));
    for (auto& g : gens)
        if (!contains(g)) throw IntegrityError("subgroup generator outside group");
    return Group::from_generators(impl_->degree, std::move(gens), std::move(label));
}

Group Group::centralizer(int elem_idx) const {
    const auto& els = elements();
    const Perm& x = els[elem_idx];
    std::vector<Perm> cent;
    for (const auto& g : els)
        if (perm_mul(g, x) == perm_mul(x, g)) cent.push_back(g);
    return Group::from_generators(impl_->degree, std::move(cent), "centralizer");
}

std::vector<int> Group::kernel_of_character(const ClassFunction& chi) const {
    const auto& cls = classes();
    Cyc deg = chi.values[class_of(0)];
    std::vector<int> ker;
    for (size_t c = 0; c < cls.size(); ++c)
        if (chi.values[c] == deg)
            for (int m : cls[c].members) ker.push_back(m);
    std::sort(ker.begin(), ker.end());
    return ker;
}

bool Group::is_normal(const std::vector<int>& sub) const {
    std::set<int> s(sub.begin(), sub.end());
    if (!s.count(0)) return false;
    const auto& els = elements();
    for (int a : sub) {
        for (const auto& g : impl_->gens) {
            Perm c = perm_mul(g, perm_mul(els[a], perm_inv(g)));
            if (!s.count(element_index(c))) return false;
        }
    }
    for (int a : sub)
        for (int b : sub)
            if (!s.count(element_index(perm_mul(els[a], els[b])))) return false;
    return true;
}

GroupQuotient Group::quotient(const std::vector<int>& normal_elems) const {
    if (!is_normal(normal_elems)) throw IntegrityError("quotient: subgroup not normal");
    const auto& els = elements();
    int n = (int)els.size();
    std::vector<int> coset_rep(n, -1); // element -> minimal element index of its coset
    std::vector<int> coset_id(n, -1);
    std::vector<int> reps;
    for (int e = 0; e < n; ++e) {
        if (coset_id[e] >= 0) continue;
        int cid = (int)reps.size();
        // coset e*N
        std::vector<int> members;
        for (int x : normal_elems) members.push_back(element_index(perm_mul(els[e], els[x])));
        for (int m : members) {
            coset_id[m] = cid;
            coset_rep[m] = e;
        }
        reps.push_back(e);
    }
    int q = (int)reps.size();
    // left action of generators on cosets
    std::vector<Perm> qgens;
    for (const auto& g : impl_->gens) {
        Perm act(q);
        for (int c = 0; c < q; ++c) act[c] = coset_id[element_index(perm_mul(g, els[reps[c]]))];
        qgens.push_back(std::move(act));
    }
    Group qg = Group::from_generators(q, qgens, label().empty() ? "quotient" : label() + "/N");
    if (qg.order() != order() / (long long)normal_elems.size())
        throw IntegrityError("quotient: order mismatch");
    // element -> quotient element index (via its left-translation permutation)
    std::vector<int> coset_of(n, -1);
    for (int e = 0; e < n; ++e) {
        Perm act(q);
        for (int c = 0; c < q; ++c) act[c] = coset_id[element_index(perm_mul(els[e], els[reps[c]]))];
        int qi = qg.element_index(act);
        if (qi < 0) throw IntegrityError("quotient: surjection failed");
        coset_of[e] = qi;
    }
    // spot-verify homomorphism on generator products
    for (const auto& a : impl_->gens)
        for (const auto& b : impl_->gens) {
            int lhs = coset_of[element_index(perm_mul(a, b))];
            Perm pa(q), pb(q);
            pa = qg.elements()[coset_of[element_index(a)]];
            pb = qg.elements()[coset_of[element_index(b)]];
            if (qg.element_index(perm_mul(pa, pb)) != lhs)
                throw IntegrityError("quotient: not a homomorphism");
        }
    return GroupQuotient{std::move(qg), std::move(coset_of)};
}

int Group::ell_regular_class_count(int ell) const {
    const auto& cls = classes();
    int count = 0;
    for (const auto& c : cls)
        if (element_order(c.rep) % ell != 0) ++count;
    return count;
}

Group::Fingerprint Group::fingerprint() const {
    Fingerprint f;
    f.order = order();
    for (const auto& c : classes()) f.class_sizes.push_back(c.size());
    std::sort(f.class_sizes.begin(), f.class_sizes.end());
    for (const auto& ch : character_table()) f.degrees.push_back(ch.degree());
    std::sort(f.degrees.begin(), f.degrees.end());
    return f;
}

std::string Group::identify_small() const {
    long long N = order();
    if (N == 1) return "1";
    if (is_abelian()) {
        if (exponent() == (int)N) return "Z" + std::to_string(N);
        if (exponent() == 2) {
            int r = 0;
            long long m = N;
            while (m > 1) {
                if (m % 2) throw CapabilityError("group outside inventory");
                m /= 2;
                ++r;
            }
            return "(Z2)^" + std::to_string(r);
        }
        throw CapabilityError("abelian group outside inventory: order " + std::to_string(N));
    }
    auto check = [&](long long ord, size_t ncls, const char* name) {
        if (N == ord && classes().size() == ncls) return true;
        return false;
    };
    if (check(6, 3, "S3")) return "S3";
    if (check(24, 5, "S4")) {
        auto f = fingerprint();
        if (f.degrees == std::vector<long long>{1, 1, 2, 3, 3}) return "S4";
    }
    if (check(120, 7, "S5")) {
        auto f = fingerprint();
        if (f.degrees == std::vector<long long>{1, 1, 4, 4, 5, 5, 6}) return "S5";
    }
    throw CapabilityError("group outside inventory: order " + std::to_string(N));
}

// ---------------------------------------------------------------- FAction --

FAction FAction::trivial(const Group& g) {
    FAction f;
    f.gen_images = g.generators();
    f.order = 1;
    return f;
}

std::vector<int> automorphism_map(const Group& g, const FAction& f) {
    const auto& els = g.elements();
    const auto& gens = g.generators();
    if (f.gen_images.size() != gens.size()) throw IntegrityError("automorphism: generator count");
    for (auto& im : f.gen_images)
        if (!g.contains(im)) throw IntegrityError("automorphism: image outside group");
    int n = (int)els.size();
    std::vector<int> phi(n, -1);
    phi[0] = 0;
    // BFS in the same order elements were generated: e*gens[i]
    std::vector<int> order_idx;
    order_idx.push_back(0);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (size_t head = 0; head < order_idx.size(); ++head) {
        int cur = order_idx[head];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int nxt = g.element_index(perm_mul(els[cur], gens[gi]));
            int img = g.element_index(perm_mul(els[phi[cur]], f.gen_images[gi]));
            if (img < 0) throw IntegrityError("automorphism: escapes group");
            if (phi[nxt] < 0) phi[nxt] = img;
            else if (phi[nxt] != img) throw IntegrityError("automorphism: inconsistent extension");
            if (!seen[nxt]) {
                seen[nxt] = 1;
                order_idx.push_back(nxt);
            }
        }
    }
    // bijectivity
    std::vector<char> hit(n, 0);
    for (int v : phi) {
        if (v < 0 || hit[v]) throw IntegrityError("automorphism: not bijective");
        hit[v] = 1;
    }
    // multiplicativity (full check)
    for (int a = 0; a < n; ++a)
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int ab = g.element_index(perm_mul(els[a], gens[gi]));
            int im = g.element_index(perm_mul(els[phi[a]], f.gen_images[gi]));
            if (phi[ab] != im) throw IntegrityError("automorphism: not multiplicative");
        }
    // order check
    std::vector<int> pw(n);
    for (int i = 0; i < n; ++i) pw[i] = i;
    for (int k = 0; k < f.order; ++k)
        for (int i = 0; i < n; ++i) pw[i] = phi[pw[i]];
    // pw = phi^order applied pointwise; recompute correctly
    pw.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int x = i;
        for (int k = 0; k < f.order; ++k) x = phi[x];
        pw[i] = x;
    }
    for (int i = 0; i < n; ++i)
        if (pw[i] != i) throw IntegrityError("automorphism: order mismatch");
    return phi;
}

std::vector<std::vector<int>> twisted_classes(const Group& g, const FAction& f) {
    auto phi = automorphism_map(g, f);
    const auto& els = g.elements();
    int n = (int)els.size();
    std::vector<int> orbit(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int x = 0; x < n; ++x) {
        if (orbit[x] >= 0) continue;
        int oid = (int)orbits.size();
        std::vector<int> stack{x}, members;
        orbit[x] = oid;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            members.push_back(cur);
            for (const auto& gen : g.generators()) {
                int gi = g.element_index(gen);
                // y = gen * cur * F(gen)^{-1}
                Perm y = perm_mul(gen, perm_mul(els[cur], perm_inv(els[phi[gi]])));
                int yi = g.element_index(y);
                if (orbit[yi] < 0) {
                    orbit[yi] = oid;
                    stack.push_back(yi);
                }
            }
        }
        std::sort(members.begin(), members.end());
        orbits.push_back(std::move(members));
    }
    return orbits;
}

// ------------------------------------------------------------ construction --

Group trivial_group() { return Group::from_generators(1, {perm_identity(1)}, "1"); }

Group symmetric(int n) {
    if (n < 1) throw CapabilityError("symmetric: n >= 1 required");
    if (n == 1) return Group::from_generators(1, {perm_identity(1)}, "S1");
    std::vector<Perm> gens;
    Perm t = perm_identity(n);
    std::swap(t[0], t[1]);
    gens.push_back(t);
    if (n > 2) {
        Perm c(n);
        for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
        gens.push_back(c);
    }
    return Group::from_generators(n, gens, "S" + std::to_string(n));
}

Group cyclic(int m) {
    if (m < 1) throw CapabilityError("cyclic: m >= 1 required");
    if (m == 1) return trivial_group();
    Perm c(m);
    for (int i = 0; i < m; ++i) c[i] = (i + 1) % m;
    return Group::from_generators(m, {c}, "Z" + std::to_string(m));
}

Group elem_ab2(int r) {
    if (r == 0) return trivial_group();
    int deg = 2 * r;
    std::vector<Perm> gens;
    for (int i = 0; i < r; ++i) {
        Perm p = perm_identity(deg);
        std::swap(p[2 * i], p[2 * i + 1]);
        gens.push_back(p);
    }
    return Group::from_generators(deg, gens, "(Z2)^" + std::to_string(r));
}

Group direct_product(const Group& a, const Group& b, std::string label) {
    int da = a.degree(), db = b.degree();
    std::vector<Perm> gens;
    for (const auto& g : a.generators()) {
        Perm p = perm_identity(da + db);
        for (int i = 0; i < da; ++i) p[i] = g[i];
        gens.push_back(p);
    }
    for (const auto& g : b.generators()) {
        Perm p = perm_identity(da + db);
        for (int i = 0; i < db; ++i) p[da + i] = da + g[i];
        gens.push_back(p);
    }
    if (label.empty()) label = a.label() + "x" + b.label();
    return Group::from_generators(da + db, gens, std::move(label));
}

} // namespace unip::permgrp
