#include "weylchar.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace unip::weylchar {

using permgrp::IntegrityError;

long long WeylContext::char_degree(int i) const { return group.character_table()[i].degree(); }

namespace {

// characteristic polynomial det(xI - M) of an integer matrix, exact
// (Faddeev-LeVerrier; the divisions are exact)
std::vector<long long> char_poly(const std::vector<std::vector<long long>>& M) {
    int n = (int)M.size();
    std::vector<std::vector<long long>> A(n, std::vector<long long>(n, 0));
    std::vector<long long> c(n + 1, 0);
    c[n] = 1;
    auto mul = [&](const std::vector<std::vector<long long>>& X) {
        std::vector<std::vector<long long>> R(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (M[i][k] == 0) continue;
                for (int j = 0; j < n; ++j) R[i][j] += M[i][k] * X[k][j];
            }
        return R;
    };
    // A_1 = M, c_{n-1} = -tr(A_1); A_{k} = M(A_{k-1} + c_{n-k+1} I)
    std::vector<std::vector<long long>> Ak = M;
    for (int k = 1; k <= n; ++k) {
        long long tr = 0;
        for (int i = 0; i < n; ++i) tr += Ak[i][i];
        if (tr % k != 0) throw IntegrityError("char_poly: inexact trace division");
        c[n - k] = -tr / k;
        if (k == n) break;
        for (int i = 0; i < n; ++i) Ak[i][i] += c[n - k];
        Ak = mul(Ak);
    }
    return c;
}

// det(I - q M) as a polynomial in q: reverse of char_poly coefficients
IPoly det_one_minus_qM(const std::vector<std::vector<long long>>& M) {
    auto c = char_poly(M);
    int n = (int)M.size();
    std::vector<long long> r(n + 1);
    for (int j = 0; j <= n; ++j) r[j] = c[n - j];
    return IPoly{std::move(r)};
}

long long int_char_value(const permgrp::ClassFunction& chi, int cls) {
    const Cyc& v = chi.values[cls];
    if (!v.is_integer()) throw IntegrityError("Weyl character value is not a rational integer");
    return v.integer_value();
}

} // namespace

FakeDegree fake_degree(const RootSystem& rs, const WeylContext& ctx, int chi_index) {
    const auto& G = ctx.group;
    const auto& cls = G.classes();
    const auto& chi = G.character_table()[chi_index];
    int n = rs.rank();
    int sub_rank = ctx.type.rank();
    auto degs = rootsys::reflection_degrees(ctx.type);

    // numerator common to all classes: prod (1 - q^{d_j}) * (1-q)^{n - rank}
    IPoly top = IPoly::constant(1);
    for (int d : degs) top = top * IPoly::one_minus_xk(d);
    for (int i = 0; i < n - sub_rank; ++i) top = top * IPoly::one_minus_xk(1);

    IPoly sum;
    for (size_t c = 0; c < cls.size(); ++c) {
        long long v = int_char_value(chi, (int)c);
        if (v == 0) continue;
        auto M = rs.element_matrix(G.elements()[cls[c].rep]);
        IPoly term = top.divexact(det_one_minus_qM(M));
        sum = sum + term * (v * cls[c].size());
    }
    IPoly fd = sum.divscalar(G.order());
    for (long long x : fd.c)
        if (x < 0) throw IntegrityError("fake degree: negative coefficient");
    if (fd.at1() != chi.degree()) throw IntegrityError("fake degree: value at 1 != degree");
    FakeDegree out;
    out.valuation = fd.valuation();
    out.top = fd.degree();
    out.poly = std::move(fd);
    return out;
}

WeylContext make_ambient(const RootSystem& rs) {
    WeylContext ctx;
    ctx.ambient = &rs;
    ctx.type = rs.type();
    ctx.group = rs.weyl_group();
    ctx.fusion.resize(ctx.group.classes().size());
    std::iota(ctx.fusion.begin(), ctx.fusion.end(), 0);
    ctx.fake.resize(ctx.group.character_table().size());
    for (int i = 0; i < (int)ctx.fake.size(); ++i) ctx.fake[i] = fake_degree(rs, ctx, i);

    // Poincare identity: sum chi(1) P_chi = prod (1 + q + ... + q^{d_i - 1})
    IPoly lhs, rhs = IPoly::constant(1);
    for (int i = 0; i < (int)ctx.fake.size(); ++i)
        lhs = lhs + ctx.fake[i].poly * ctx.group.character_table()[i].degree();
    for (int d : rootsys::reflection_degrees(ctx.type)) rhs = rhs * IPoly::geometric(d);
    if (!(lhs == rhs)) throw IntegrityError("fake degrees: Poincare identity failed");
    return ctx;
}

WeylContext make_reflection_subgroup(const RootSystem& rs, const permgrp::Group& ambient_weyl,
                                     const CartanType& sub_type,
                                     const std::vector<rootsys::Vec>& base_roots) {
    WeylContext ctx;
    ctx.ambient = &rs;
    ctx.type = sub_type;
    std::vector<Perm> gens;
    for (const auto& r : base_roots) gens.push_back(rs.reflection_perm(r));
    ctx.group = ambient_weyl.subgroup(gens, "W(" + sub_type.str() + ")");
    if (ctx.group.order() != sub_type.weyl_order())
        throw IntegrityError("reflection subgroup: order mismatch for " + sub_type.str());
    for (const auto& c : ctx.group.classes())
        ctx.fusion.push_back(ambient_weyl.class_of_perm(ctx.group.elements()[c.rep]));
    ctx.fake.resize(ctx.group.character_table().size());
    for (int i = 0; i < (int)ctx.fake.size(); ++i) ctx.fake[i] = fake_degree(rs, ctx, i);

    IPoly lhs, rhs = IPoly::constant(1);
    for (int i = 0; i < (int)ctx.fake.size(); ++i)
        lhs = lhs + ctx.fake[i].poly * ctx.group.character_table()[i].degree();
    for (int d : rootsys::reflection_degrees(sub_type)) rhs = rhs * IPoly::geometric(d);
    for (int i = 0; i < rs.rank() - sub_type.rank(); ++i) rhs = rhs * IPoly::geometric(1);
    if (!(lhs == rhs)) throw IntegrityError("subgroup fake degrees: Poincare identity failed");
    return ctx;
}

// ------------------------------------------------------------- partitions --

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

long long hook_dimension(const std::vector<int>& lam) {
    int rows = (int)lam.size();
    if (rows == 0) return 1;
    long long n = 0;
    for (int x : lam) n += x;
    std::vector<int> conj(lam[0], 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < lam[i]; ++j) conj[j]++;
    long long num = 1;
    // dim = n! / prod hooks; compute exactly by factoring
    std::vector<long long> hooks;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < lam[i]; ++j) hooks.push_back(lam[i] - j + conj[j] - i - 1);
    // n! / prod hooks via sequential exact division
    long long dim = 1;
    std::vector<long long> numer;
    for (long long k = 2; k <= n; ++k) numer.push_back(k);
    for (long long h : hooks) {
        // divide h out of the numerator list
        long long rem = h;
        for (auto& v : numer) {
            long long g = std::gcd(v, rem);
            v /= g;
            rem /= g;
            if (rem == 1) break;
        }
        if (rem != 1) throw IntegrityError("hook formula: inexact division");
    }
    for (long long v : numer) dim *= v;
    (void)num;
    return dim;
}

long long nfn(const std::vector<int>& lam) {
    long long s = 0;
    for (size_t i = 0; i < lam.size(); ++i) s += (long long)i * lam[i];
    return s;
}

// ------------------------------------------------------------ special keys --

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Lusztig symbol test for type B/C bipartitions: pad alpha to one part more
// than beta, set Z1_i = alpha_i + i - 1, Z2_i = beta_i + i - 1 (increasing);
// special iff Z1_1 <= Z2_1 <= Z1_2 <= ... <= Z1_{m+1}.
bool bc_special(std::vector<int> alpha, std::vector<int> beta) {
    std::sort(alpha.begin(), alpha.end());
    std::sort(beta.begin(), beta.end());
    int m = std::max((int)beta.size(), (int)alpha.size() > 0 ? (int)alpha.size() - 1 : 0);
    std::vector<int> a(m + 1, 0), b(m, 0);
    // right-align the sorted parts
    for (size_t i = 0; i < alpha.size(); ++i) a[m + 1 - alpha.size() + i] = alpha[i];
    for (size_t i = 0; i < beta.size(); ++i) b[m - beta.size() + i] = beta[i];
    std::vector<int> z1(m + 1), z2(m);
    for (int i = 0; i <= m; ++i) z1[i] = a[i] + i;
    for (int i = 0; i < m; ++i) z2[i] = b[i] + i;
    for (int i = 0; i < m; ++i) {
        if (z1[i] > z2[i]) return false;
        if (z2[i] > z1[i + 1]) return false;
    }
    return true;
}

void bipartitions(int n, std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
    for (int k = 0; k <= n; ++k)
        for (auto& a : partitions_of(k))
            for (auto& b : partitions_of(n - k)) out.push_back({a, b});
}

std::vector<std::pair<long long, int>> component_special_keys(const rootsys::Component& c) {
    std::vector<std::pair<long long, int>> keys;
    switch (c.series) {
        case 'A': {
            // every character is special; b-invariant of lambda is n(lambda)
            for (auto& lam : partitions_of(c.rank + 1))
                keys.push_back({hook_dimension(lam), (int)nfn(lam)});
            break;
        }
        case 'B':
        case 'C': {
            std::vector<std::pair<std::vector<int>, std::vector<int>>> bp;
            bipartitions(c.rank, bp);
            for (auto& [a, b] : bp) {
                if (!bc_special(a, b)) continue;
                long long ka = 0;
                for (int x : b) ka += x;
                long long deg = binom(c.rank, (int)ka) * hook_dimension(a) * hook_dimension(b);
                int bi = (int)(2 * nfn(a) + 2 * nfn(b) + ka);
                keys.push_back({deg, bi});
            }
            break;
        }
        case 'G':
            keys = {{1, 0}, {2, 1}, {1, 6}};
            break;
        case 'F':
            keys = {{1, 0}, {4, 1}, {9, 2}, {8, 3}, {8, 3}, {12, 4},
                    {9, 10}, {8, 9}, {8, 9}, {4, 13}, {1, 24}};
            break;
        default:
            throw permgrp::CapabilityError(std::string("special characters: type not in inventory: ") +
                                           c.series + std::to_string(c.rank));
    }
    return keys;
}

} // namespace

std::vector<std::pair<long long, int>> special_keys(const CartanType& t) {
    std::vector<std::pair<long long, int>> acc = {{1, 0}};
    for (const auto& c : t.components) {
        auto ck = component_special_keys(c);
        std::vector<std::pair<long long, int>> next;
        for (auto& [d1, b1] : acc)
            for (auto& [d2, b2] : ck) next.push_back({d1 * d2, b1 + b2});
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

std::vector<int> special_characters(const WeylContext& ctx) {
    auto keys = special_keys(ctx.type);
    std::map<std::pair<long long, int>, int> want;
    for (auto& k : keys) want[k]++;
    std::map<std::pair<long long, int>, std::vector<int>> have;
    for (int i = 0; i < ctx.num_chars(); ++i)
        have[{ctx.char_degree(i), ctx.fake[i].valuation}].push_back(i);
    std::vector<int> out;
    for (auto& [k, mult] : want) {
        auto it = have.find(k);
        if (it == have.end() || (int)it->second.size() != mult)
            throw IntegrityError("special characters: key (" + std::to_string(k.first) + "," +
                                 std::to_string(k.second) + ") matches " +
                                 std::to_string(it == have.end() ? 0 : (int)it->second.size()) +
                                 " characters, expected " + std::to_string(mult));
        for (int i : it->second) out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// -------------------------------------------------------------- induction --

std::vector<long long> induce(const WeylContext& ambient, const WeylContext& sub, int chi_index) {
    const auto& W = ambient.group;
    const auto& H = sub.group;
    const auto& wcls = W.classes();
    const auto& hcls = H.classes();
    const auto& chi = H.character_table()[chi_index];

    // Ind(chi)(g_j) = |C_W(g_j)| / |H| * sum over H-classes fusing to j of |c| chi(c)
    std::vector<long long> ind(wcls.size(), 0);
    for (size_t j = 0; j < wcls.size(); ++j) {
        long long s = 0;
        for (size_t c = 0; c < hcls.size(); ++c)
            if (sub.fusion[c] == (int)j) s += hcls[c].size() * int_char_value(chi, (int)c);
        long long num = (W.order() / wcls[j].size()) * s;
        if (num % H.order() != 0) throw IntegrityError("induction: non-integral value");
        ind[j] = num / H.order();
    }
    // decompose
    std::vector<long long> mult;
    const auto& table = W.character_table();
    for (size_t t = 0; t < table.size(); ++t) {
        long long s = 0;
        for (size_t j = 0; j < wcls.size(); ++j) {
            long long pv = int_char_value(table[t], W.inverse_class((int)j));
            s += wcls[j].size() * ind[j] * pv;
        }
        if (s % W.order() != 0) throw IntegrityError("induction: non-integral multiplicity");
        mult.push_back(s / W.order());
    }
    // degree bookkeeping
    long long total = 0;
    for (size_t t = 0; t < table.size(); ++t) total += mult[t] * table[t].degree();
    if (total != (W.order() / H.order()) * chi.degree())
        throw IntegrityError("induction: degree mismatch");
    return mult;
}

int j_induce(const WeylContext& ambient, const WeylContext& sub, int chi_index) {
    auto mult = induce(ambient, sub, chi_index);
    int want_b = sub.fake[chi_index].valuation;
    int found = -1;
    int min_b = INT32_MAX;
    for (size_t t = 0; t < mult.size(); ++t)
        if (mult[t] > 0) min_b = std::min(min_b, ambient.fake[t].valuation);
    if (min_b != want_b)
        throw IntegrityError("j-induction: minimal b of constituents differs from source b");
    long long count = 0;
    for (size_t t = 0; t < mult.size(); ++t)
        if (mult[t] > 0 && ambient.fake[t].valuation == want_b) {
            found = (int)t;
            count += mult[t];
        }
    if (count != 1) throw IntegrityError("j-induction: b-truncation not multiplicity one");
    return found;
}

} // namespace unip::weylchar
