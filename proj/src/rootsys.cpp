#include "rootsys.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>

namespace unip::rootsys {

namespace {

// exact rationals for small linear solves
struct Frac {
    long long n = 0, d = 1;
    Frac() = default;
    Frac(long long nn) : n(nn), d(1) {}
    Frac(long long nn, long long dd) : n(nn), d(dd) { norm(); }
    void norm() {
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n == 0) d = 1;
    }
    Frac operator+(const Frac& o) const { return Frac(n * o.d + o.n * d, d * o.d); }
    Frac operator-(const Frac& o) const { return Frac(n * o.d - o.n * d, d * o.d); }
    Frac operator*(const Frac& o) const { return Frac(n * o.n, d * o.d); }
    Frac operator/(const Frac& o) const { return Frac(n * o.d, d * o.n); }
    bool zero() const { return n == 0; }
};

// solve A x = b exactly; A square nonsingular
std::vector<Frac> solve(std::vector<std::vector<Frac>> A, std::vector<Frac> b) {
    int k = (int)A.size();
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int r = c; r < k; ++r)
            if (!A[r][c].zero()) { piv = r; break; }
        if (piv < 0) throw TypeError("singular system");
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (int r = 0; r < k; ++r) {
            if (r == c || A[r][c].zero()) continue;
            Frac f = A[r][c] / A[c][c];
            for (int c2 = c; c2 < k; ++c2) A[r][c2] = A[r][c2] - f * A[c][c2];
            b[r] = b[r] - f * b[c];
        }
    }
    std::vector<Frac> x(k);
    for (int c = 0; c < k; ++c) x[c] = b[c] / A[c][c];
    return x;
}

Vec vneg(const Vec& a) {
    Vec r = a;
    for (auto& v : r) v = -v;
    return r;
}

Vec vsub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

// expansion of v over an independent set `base`, rational; nullopt when v is
// outside the span
std::optional<std::vector<Frac>> expand_over(const std::vector<Vec>& base, const Vec& v) {
    int k = (int)base.size();
    std::vector<std::vector<Frac>> G(k, std::vector<Frac>(k));
    std::vector<Frac> rhs(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) G[i][j] = Frac(dot(base[i], base[j]));
        rhs[i] = Frac(dot(base[i], v));
    }
    auto x = solve(G, rhs);
    // verify (the Gram solve only projects; check exact combination)
    Vec chk(v.size(), 0);
    long long den = 1;
    for (int i = 0; i < k; ++i) den = std::lcm(den, x[i].d);
    for (size_t c = 0; c < v.size(); ++c) {
        long long s = 0;
        for (int i = 0; i < k; ++i) s += x[i].n * (den / x[i].d) * base[i][c];
        chk[c] = s;
        if (s != v[c] * den) return std::nullopt;
    }
    return x;
}

} // namespace

long long dot(const Vec& a, const Vec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// ----------------------------------------------------------- CartanType ---

CartanType CartanType::simple(char series, int rank) {
    auto bad = [&]() { return TypeError(std::string("unsupported type ") + series + std::to_string(rank)); };
    switch (series) {
        case 'A':
            if (rank < 1) throw bad();
            break;
        case 'B':
        case 'C':
        case 'D':
            if (rank < 2) throw bad();
            break;
        case 'E':
            if (rank < 6 || rank > 8) throw bad();
            break;
        case 'F':
            if (rank != 4) throw bad();
            break;
        case 'G':
            if (rank != 2) throw bad();
            break;
        default:
            throw bad();
    }
    CartanType t;
    t.components.push_back({series, rank, false});
    return t;
}

CartanType CartanType::parse(const std::string& s) {
    CartanType t;
    size_t i = 0;
    while (i < s.size()) {
        bool tilde = false;
        if (s[i] == '~') {
            tilde = true;
            ++i;
        }
        if (i >= s.size() || s[i] < 'A' || s[i] > 'G') throw TypeError("parse error in type: " + s);
        char series = s[i++];
        size_t j = i;
        while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
        if (j == i) throw TypeError("parse error in type: " + s);
        int rank = std::stoi(s.substr(i, j - i));
        CartanType c = simple(series, rank);
        c.components[0].tilde = tilde;
        t.components.push_back(c.components[0]);
        i = j;
        if (i < s.size()) {
            if (s[i] != '+') throw TypeError("parse error in type: " + s);
            ++i;
        }
    }
    if (t.components.empty()) throw TypeError("empty type");
    t.canonicalize();
    return t;
}

void CartanType::canonicalize() { std::sort(components.begin(), components.end()); }

int CartanType::rank() const {
    int r = 0;
    for (auto& c : components) r += c.rank;
    return r;
}

long long CartanType::weyl_order() const {
    long long o = 1;
    for (auto& c : components) {
        long long f = 1;
        switch (c.series) {
            case 'A':
                for (int i = 2; i <= c.rank + 1; ++i) f *= i;
                break;
            case 'B':
            case 'C':
                f = 1;
                for (int i = 2; i <= c.rank; ++i) f *= i;
                for (int i = 0; i < c.rank; ++i) f *= 2;
                break;
            case 'D':
                f = 1;
                for (int i = 2; i <= c.rank; ++i) f *= i;
                for (int i = 0; i < c.rank - 1; ++i) f *= 2;
                break;
            case 'G':
                f = 12;
                break;
            case 'F':
                f = 1152;
                break;
            case 'E':
                f = c.rank == 6 ? 51840LL : c.rank == 7 ? 2903040LL : 696729600LL;
                break;
        }
        o *= f;
    }
    return o;
}

std::string CartanType::str() const {
    std::string s;
    for (auto& c : components) {
        if (!s.empty()) s += "+";
        if (c.tilde) s += "~";
        s += c.series;
        s += std::to_string(c.rank);
    }
    return s;
}

std::string CartanType::str_plain() const {
    std::string s;
    for (auto& c : components) {
        if (!s.empty()) s += "+";
        s += c.series;
        s += std::to_string(c.rank);
    }
    return s;
}

bool CartanType::same_plain(const CartanType& o) const {
    auto strip = [](CartanType t) {
        for (auto& c : t.components) c.tilde = false;
        t.canonicalize();
        return t;
    };
    return strip(*this) == strip(o);
}

// ----------------------------------------------------------- RootSystem ---

namespace {

std::vector<Vec> simple_roots_of(const CartanType& t) {
    char s = t.components[0].series;
    int n = t.components[0].rank;
    std::vector<Vec> sr;
    auto unit = [&](int dim, int i, long long v) {
        Vec e(dim, 0);
        e[i] = v;
        return e;
    };
    switch (s) {
        case 'A': {
            for (int i = 0; i < n; ++i) {
                Vec v(n + 1, 0);
                v[i] = 1;
                v[i + 1] = -1;
                sr.push_back(v);
            }
            break;
        }
        case 'B': {
            for (int i = 0; i + 1 < n; ++i) {
                Vec v(n, 0);
                v[i] = 1;
                v[i + 1] = -1;
                sr.push_back(v);
            }
            sr.push_back(unit(n, n - 1, 1));
            break;
        }
        case 'C': {
            for (int i = 0; i + 1 < n; ++i) {
                Vec v(n, 0);
                v[i] = 1;
                v[i + 1] = -1;
                sr.push_back(v);
            }
            sr.push_back(unit(n, n - 1, 2));
            break;
        }
        case 'D': {
            for (int i = 0; i + 1 < n; ++i) {
                Vec v(n, 0);
                v[i] = 1;
                v[i + 1] = -1;
                sr.push_back(v);
            }
            Vec v(n, 0);
            v[n - 2] = 1;
            v[n - 1] = 1;
            sr.push_back(v);
            break;
        }
        case 'G': {
            // alpha1 short, alpha2 long
            sr.push_back({1, -1, 0});
            sr.push_back({-2, 1, 1});
            break;
        }
        case 'F': {
            // reversed Bourbaki, short nodes first; doubled coordinates
            sr.push_back({1, -1, -1, -1}); // (e1-e2-e3-e4)/2
            sr.push_back({0, 0, 0, 2});    // e4
            sr.push_back({0, 0, 2, -2});   // e3-e4
            sr.push_back({0, 2, -2, 0});   // e2-e3
            break;
        }
        case 'E': {
            // Bourbaki E8 coordinates, doubled; E6/E7 use the first 6/7
            std::vector<Vec> e8;
            e8.push_back({1, -1, -1, -1, -1, -1, -1, 1});
            e8.push_back({2, 2, 0, 0, 0, 0, 0, 0});
            e8.push_back({-2, 2, 0, 0, 0, 0, 0, 0});
            e8.push_back({0, -2, 2, 0, 0, 0, 0, 0});
            e8.push_back({0, 0, -2, 2, 0, 0, 0, 0});
            e8.push_back({0, 0, 0, -2, 2, 0, 0, 0});
            e8.push_back({0, 0, 0, 0, -2, 2, 0, 0});
            e8.push_back({0, 0, 0, 0, 0, -2, 2, 0});
            for (int i = 0; i < n; ++i) sr.push_back(e8[i]);
            break;
        }
    }
    return sr;
}

} // namespace

std::vector<long long> RootSystem::expand_simple(const Vec& v) const {
    auto x = expand_over(simple_, v);
    if (!x) throw TypeError("vector outside root lattice span");
    std::vector<long long> out;
    for (auto& f : *x) {
        if (f.d != 1) throw TypeError("vector outside root lattice");
        out.push_back(f.n);
    }
    return out;
}

Vec RootSystem::coroot_scaled(const Vec& r) const {
    long long nn = dot(r, r);
    Vec c = r;
    for (auto& v : c) v *= (coroot_scale_ / nn);
    return c;
}

RootSystem RootSystem::build(const CartanType& t) {
    if (!t.irreducible()) throw TypeError("build_root_system: irreducible type required");
    RootSystem rs;
    rs.type_ = t;
    rs.simple_ = simple_roots_of(t);

    // generate the root set by reflection closure of the simple roots
    std::set<Vec> roots(rs.simple_.begin(), rs.simple_.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> cur(roots.begin(), roots.end());
        for (const auto& b : cur)
            for (const auto& a : rs.simple_) {
                // s_a(b) = b - 2(b,a)/(a,a) a
                long long num = 2 * dot(b, a), den = dot(a, a);
                if (num % den != 0) throw TypeError("non-crystallographic reflection");
                long long c = num / den;
                Vec nb = b;
                for (size_t i = 0; i < nb.size(); ++i) nb[i] -= c * a[i];
                if (roots.insert(nb).second) grew = true;
            }
    }
    // positives: nonnegative expansion over simples
    for (const auto& r : roots) {
        auto x = expand_over(rs.simple_, r);
        if (!x) throw TypeError("root outside simple span");
        bool nonneg = true, nonpos = true;
        for (auto& f : *x) {
            if (f.n > 0) nonpos = false;
            if (f.n < 0) nonneg = false;
        }
        if (!nonneg && !nonpos) throw TypeError("root neither positive nor negative");
        if (nonneg) rs.positive_.push_back(r);
    }
    std::sort(rs.positive_.begin(), rs.positive_.end());
    rs.roots_ = rs.positive_;
    for (const auto& r : rs.positive_) rs.roots_.push_back(vneg(r));

    // norms
    std::set<long long> norms;
    for (const auto& r : rs.roots_) norms.insert(dot(r, r));
    rs.short_norm_ = *norms.begin();
    rs.long_norm_ = *norms.rbegin();

    // scaled coroots
    long long L = 1;
    for (long long nn : norms) L = std::lcm(L, nn);
    rs.coroot_scale_ = 2 * L;
    for (const auto& r : rs.simple_) rs.dual_simple_.push_back(rs.coroot_scaled(r));
    for (const auto& r : rs.roots_) rs.dual_roots_.push_back(rs.coroot_scaled(r));

    // highest root of the dual system w.r.t. the dual simple base:
    // maximal height (sum of expansion coefficients)
    long long best = -1;
    int besti = -1;
    for (size_t i = 0; i < rs.dual_roots_.size(); ++i) {
        auto x = expand_over(rs.dual_simple_, rs.dual_roots_[i]);
        if (!x) throw TypeError("dual root outside dual simple span");
        long long h = 0;
        bool intcoef = true;
        for (auto& f : *x) {
            if (f.d != 1) intcoef = false;
            h += f.n;
        }
        if (!intcoef) throw TypeError("dual root with fractional expansion");
        if (h > best) {
            best = h;
            besti = (int)i;
        }
    }
    rs.theta_dual_ = rs.dual_roots_[besti];
    rs.theta_dual_src_ = rs.roots_[besti];
    auto mx = expand_over(rs.dual_simple_, rs.theta_dual_);
    rs.marks_.clear();
    for (auto& f : *mx) rs.marks_.push_back(f.n);
    for (long long m : rs.marks_)
        if (m <= 0) throw TypeError("marks: nonpositive coefficient");
    // the highest dual root must dominate every dual root coefficientwise
    for (size_t i = 0; i < rs.dual_roots_.size(); ++i) {
        auto x = expand_over(rs.dual_simple_, rs.dual_roots_[i]);
        for (size_t j = 0; j < mx->size(); ++j)
            if ((*x)[j].n > rs.marks_[j]) throw TypeError("marks: not the highest dual root");
    }
    return rs;
}

bool RootSystem::is_short(const Vec& root) const { return dot(root, root) == short_norm_; }

int RootSystem::root_index(const Vec& v) const {
    auto it = std::lower_bound(roots_.begin(), roots_.begin() + positive_.size(), v);
    if (it != roots_.begin() + positive_.size() && *it == v) return (int)(it - roots_.begin());
    // negatives are in the same order after the positives
    Vec n = vneg(v);
    it = std::lower_bound(roots_.begin(), roots_.begin() + positive_.size(), n);
    if (it != roots_.begin() + positive_.size() && *it == n)
        return (int)(it - roots_.begin() + positive_.size());
    return -1;
}

Perm RootSystem::reflection_perm(const Vec& root) const {
    Perm p(roots_.size());
    long long den = dot(root, root);
    for (size_t i = 0; i < roots_.size(); ++i) {
        long long num = 2 * dot(roots_[i], root);
        if (num % den != 0) throw TypeError("reflection: non-integral Cartan number");
        long long c = num / den;
        Vec img = roots_[i];
        for (size_t k = 0; k < img.size(); ++k) img[k] -= c * root[k];
        int idx = root_index(img);
        if (idx < 0) throw TypeError("reflection: image is not a root");
        p[i] = idx;
    }
    return p;
}

permgrp::Group RootSystem::weyl_group() const {
    if (type_.weyl_order() > 1152)
        throw permgrp::CapabilityError("Weyl group too large for the computed path: " + type_.str());
    std::vector<Perm> gens;
    for (const auto& a : simple_) gens.push_back(reflection_perm(a));
    auto g = permgrp::Group::from_generators((int)roots_.size(), gens, "W(" + type_.str() + ")");
    if (g.order() != type_.weyl_order()) throw permgrp::IntegrityError("Weyl group order mismatch");
    return g;
}

std::vector<std::vector<long long>> RootSystem::element_matrix(const Perm& w) const {
    int n = rank();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int j = 0; j < n; ++j) {
        int idx = root_index(simple_[j]);
        const Vec& img = roots_[w[idx]];
        auto col = expand_simple(img);
        for (int i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return m;
}

// ------------------------------------------------- subsystem identification

CartanType identify_base(const std::vector<Vec>& base, const std::vector<bool>* short_flags) {
    int k = (int)base.size();
    // Cartan integers
    std::vector<std::vector<long long>> C(k, std::vector<long long>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            long long num = 2 * dot(base[i], base[j]), den = dot(base[j], base[j]);
            if (num % den != 0) throw TypeError("identify: non-integral Cartan number");
            C[i][j] = num / den;
        }
    // connected components
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (int i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int j = 0; j < k; ++j)
                if (comp[j] < 0 && C[x][j] != 0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    CartanType t;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> nodes;
        for (int i = 0; i < k; ++i)
            if (comp[i] == c) nodes.push_back(i);
        int r = (int)nodes.size();
        // edge weights
        int max_w = 0;
        std::vector<int> deg(r, 0);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
                if (a == b) continue;
                int w = (int)(C[nodes[a]][nodes[b]] * C[nodes[b]][nodes[a]]);
                if (w > 0) {
                    deg[a]++;
                    max_w = std::max(max_w, w);
                }
            }
        // count of short vectors in this component (by norm within the base)
        long long minn = LLONG_MAX, maxn = 0;
        for (int a = 0; a < r; ++a) {
            long long nn = dot(base[nodes[a]], base[nodes[a]]);
            minn = std::min(minn, nn);
            maxn = std::max(maxn, nn);
        }
        int nshort = 0;
        for (int a = 0; a < r; ++a)
            if (dot(base[nodes[a]], base[nodes[a]]) == minn) ++nshort;

        char series;
        if (r == 1) series = 'A';
        else if (max_w == 3) series = 'G';
        else if (max_w == 2) {
            if (r == 2) series = 'B'; // B2 = C2 as Weyl groups; canonical letter B
            else {
                bool middle_double = false;
                for (int a = 0; a < r && !middle_double; ++a)
                    for (int b = 0; b < r; ++b) {
                        if (a == b) continue;
                        int w = (int)(C[nodes[a]][nodes[b]] * C[nodes[b]][nodes[a]]);
                        if (w == 2 && deg[a] >= 2 && deg[b] >= 2) middle_double = true;
                    }
                if (middle_double) series = 'F';
                else if (minn == maxn) throw TypeError("identify: inconsistent lengths");
                else if (nshort == 1) series = 'B';
                else if (nshort == r - 1) series = 'C';
                else throw TypeError("identify: bad B/C pattern");
            }
        } else {
            // simply laced: path / D / E by degree sequence
            int n3 = 0, n1 = 0;
            for (int a = 0; a < r; ++a) {
                if (deg[a] >= 4) throw TypeError("identify: degree > 3 node");
                if (deg[a] == 3) ++n3;
                if (deg[a] <= 1) ++n1;
            }
            if (n3 == 0) series = 'A';
            else if (n3 == 1) {
                // arm lengths from the branch node
                int bn = -1;
                for (int a = 0; a < r; ++a)
                    if (deg[a] == 3) bn = a;
                std::vector<int> arms;
                for (int b = 0; b < r; ++b) {
                    if (b == bn || C[nodes[bn]][nodes[b]] == 0) continue;
                    // walk away from bn
                    int len = 1, prev = bn, cur = b;
                    while (true) {
                        int nxt = -1;
                        for (int cnd = 0; cnd < r; ++cnd)
                            if (cnd != prev && cnd != cur && C[nodes[cur]][nodes[cnd]] != 0) nxt = cnd;
                        if (nxt < 0) break;
                        prev = cur;
                        cur = nxt;
                        ++len;
                    }
                    arms.push_back(len);
                }
                std::sort(arms.begin(), arms.end());
                if (arms.size() != 3) throw TypeError("identify: bad branch");
                if (arms[0] == 1 && arms[1] == 1) series = 'D';
                else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) series = 'E';
                else throw TypeError("identify: unrecognized branch diagram");
            } else
                throw TypeError("identify: multiple branch nodes");
        }
        Component cc;
        cc.series = series;
        cc.rank = r;
        cc.tilde = false;
        if (short_flags) {
            bool all_short = true;
            for (int a = 0; a < r; ++a)
                if (!(*short_flags)[nodes[a]]) all_short = false;
            cc.tilde = all_short;
        }
        t.components.push_back(cc);
    }
    t.canonicalize();
    return t;
}

std::vector<SubsystemRecord> RootSystem::pseudo_levi_subsystems() const {
    std::vector<SubsystemRecord> out;
    int n = rank();
    // extended node list: index 0 = affine (-theta_dual), 1..n = dual simples
    for (int del = 0; del <= n; ++del) {
        SubsystemRecord rec;
        rec.deleted_node = del;
        rec.d = del == 0 ? 1 : marks_[del - 1];
        std::vector<Vec> base_dual;
        std::vector<Vec> base_roots;
        if (del != 0) {
            base_dual.push_back(vneg(theta_dual_));
            base_roots.push_back(vneg(theta_dual_src_));
        }
        for (int i = 0; i < n; ++i) {
            if (i + 1 == del) continue;
            base_dual.push_back(dual_simple_[i]);
            base_roots.push_back(simple_[i]);
        }
        std::vector<bool> shorts;
        for (const auto& r : base_roots) shorts.push_back(is_short(r));
        bool decorate = short_norm_ != long_norm_;
        rec.sub_type = identify_base(base_dual, decorate ? &shorts : nullptr);
        rec.base_dual = std::move(base_dual);
        rec.base_roots = std::move(base_roots);
        out.push_back(std::move(rec));
    }
    // affine-node record must reproduce the ambient type
    if (!out[0].sub_type.same_plain(type_))
        throw TypeError("pseudo-Levi: affine deletion does not restore the ambient type");
    return out;
}

std::vector<SubsystemRecord> RootSystem::ell_relevant_subsystems(int ell) const {
    if (ell < 2) throw TypeError("ell must be a prime");
    auto all = pseudo_levi_subsystems();
    std::vector<SubsystemRecord> out;
    for (auto& r : all) {
        long long d = r.d;
        while (d % ell == 0) d /= ell;
        if (d == 1) out.push_back(r);
    }
    return out;
}

std::vector<int> reflection_degrees(const CartanType& t) {
    std::vector<int> deg;
    for (auto& c : t.components) {
        switch (c.series) {
            case 'A':
                for (int i = 2; i <= c.rank + 1; ++i) deg.push_back(i);
                break;
            case 'B':
            case 'C':
                for (int i = 1; i <= c.rank; ++i) deg.push_back(2 * i);
                break;
            case 'D':
                for (int i = 1; i < c.rank; ++i) deg.push_back(2 * i);
                deg.push_back(c.rank);
                break;
            case 'G':
                deg.insert(deg.end(), {2, 6});
                break;
            case 'F':
                deg.insert(deg.end(), {2, 6, 8, 12});
                break;
            case 'E':
                if (c.rank == 6) deg.insert(deg.end(), {2, 5, 6, 8, 9, 12});
                else if (c.rank == 7) deg.insert(deg.end(), {2, 6, 8, 10, 12, 14, 18});
                else deg.insert(deg.end(), {2, 8, 12, 14, 18, 20, 24, 30});
                break;
        }
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

} // namespace unip::rootsys
