#include "lmod.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>

namespace unip::lmod {

using permgrp::CapabilityError;
using permgrp::IntegrityError;

Group instantiate(const std::string& label) {
    if (label == "1") return permgrp::trivial_group();
    if (label.size() >= 2 && label[0] == 'S') {
        int n = std::stoi(label.substr(1));
        if (n < 1 || n > 5) throw CapabilityError("instantiate: " + label + " outside inventory");
        return permgrp::symmetric(n);
    }
    if (label.size() >= 2 && label[0] == 'Z') return permgrp::cyclic(std::stoi(label.substr(1)));
    if (label.rfind("(Z2)^", 0) == 0) return permgrp::elem_ab2(std::stoi(label.substr(5)));
    throw CapabilityError("instantiate: unknown label " + label);
}

// ------------------------------------------- symmetric group char labels ---

namespace {

// Murnaghan-Nakayama: character of S_n labelled by lambda at cycle type mu
long long mn_value(std::vector<int> lam, std::vector<int> mu) {
    std::sort(lam.rbegin(), lam.rend());
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    if (mu.empty()) return lam.empty() ? 1 : 0;
    if (lam.empty()) return 0;
    int k = mu.back();
    mu.pop_back();
    long long total = 0;
    int rows = (int)lam.size();
    // all rim hooks of size k: remove from row i
    for (int i = 0; i < rows; ++i) {
        // rim hook starting... standard beta-number trick: beta_j = lam_j + (rows-1-j)
        // remove k from beta_i if the result is a valid distinct set
        std::vector<long long> beta(rows);
        for (int j = 0; j < rows; ++j) beta[j] = lam[j] + (rows - 1 - j);
        long long nb = beta[i] - k;
        if (nb < 0) continue;
        bool dup = false;
        for (int j = 0; j < rows; ++j)
            if (j != i && beta[j] == nb) dup = true;
        if (dup) continue;
        beta[i] = nb;
        // height = number of beta entries strictly between nb and old beta_i
        int height = 0;
        for (int j = 0; j < rows; ++j)
            if (j != i && beta[j] > nb && beta[j] < beta[i] + k) ++height;
        std::sort(beta.rbegin(), beta.rend());
        std::vector<int> nl;
        for (int j = 0; j < rows; ++j) {
            long long part = beta[j] - (rows - 1 - j);
            if (part < 0) throw IntegrityError("rim hook removal: negative part");
            if (part > 0) nl.push_back((int)part);
        }
        long long sub = mn_value(nl, mu);
        total += (height % 2 ? -1 : 1) * sub;
    }
    return total;
}

std::vector<int> cycle_type(const Perm& p) {
    int n = (int)p.size();
    std::vector<char> seen(n, 0);
    std::vector<int> type;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = p[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

} // namespace

std::vector<int> symmetric_char_indices(const Group& sym, int n,
                                        const std::vector<std::vector<int>>& parts) {
    const auto& cls = sym.classes();
    const auto& table = sym.character_table();
    std::vector<std::vector<int>> class_types;
    for (const auto& c : cls) class_types.push_back(cycle_type(sym.elements()[c.rep]));
    std::vector<int> out;
    for (const auto& lam : parts) {
        int found = -1;
        for (size_t t = 0; t < table.size(); ++t) {
            bool match = true;
            for (size_t c = 0; c < cls.size() && match; ++c) {
                const Cyc& v = table[t].values[c];
                if (!v.is_integer() || v.integer_value() != mn_value(lam, class_types[c]))
                    match = false;
            }
            if (match) {
                if (found >= 0) throw IntegrityError("symmetric label matching: ambiguous");
                found = (int)t;
            }
        }
        if (found < 0) throw IntegrityError("symmetric label matching: no character matches");
        out.push_back(found);
    }
    std::set<int> uniq(out.begin(), out.end());
    if (uniq.size() != out.size()) throw IntegrityError("symmetric label matching: collision");
    return out;
}

int char_index_of_partition(const Group& sym, int n, const std::vector<int>& lambda) {
    return symmetric_char_indices(sym, n, {lambda})[0];
}

// --------------------------------------------------- decomposition matrices --

namespace {

struct NamedMatrix {
    // rows keyed by partition label string (dot separated), columns = PIMs
    std::vector<std::pair<std::string, std::vector<long long>>> rows;
};

std::string part_label(const std::vector<int>& lam) {
    std::string s;
    for (int x : lam) {
        if (!s.empty()) s += ".";
        s += std::to_string(x);
    }
    return s;
}

std::vector<int> parse_part_label(const std::string& s) {
    std::vector<int> out;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = s.find('.', i);
        if (j == std::string::npos) j = s.size();
        out.push_back(std::stoi(s.substr(i, j - i)));
        i = j + 1;
    }
    return out;
}

// classical small decomposition matrices for S3, S4, S5 at primes dividing
// the order; verified at load by column count, Cartan determinant and the
// regular-character identity
const NamedMatrix* embedded_matrix(const std::string& label, int ell) {
    static const std::map<std::pair<std::string, int>, NamedMatrix> tables = {
        {{"S3", 2},
         {{{"3", {1, 0}}, {"2.1", {0, 1}}, {"1.1.1", {1, 0}}}}},
        {{"S3", 3},
         {{{"3", {1, 0}}, {"2.1", {1, 1}}, {"1.1.1", {0, 1}}}}},
        {{"S4", 2},
         {{{"4", {1, 0}},
           {"3.1", {1, 1}},
           {"2.2", {0, 1}},
           {"2.1.1", {1, 1}},
           {"1.1.1.1", {1, 0}}}}},
        {{"S4", 3},
         {{{"4", {1, 0, 0, 0}},
           {"3.1", {0, 1, 0, 0}},
           {"2.2", {1, 0, 0, 1}},
           {"2.1.1", {0, 0, 1, 0}},
           {"1.1.1.1", {0, 0, 0, 1}}}}},
        {{"S5", 2},
         {{{"5", {1, 0, 0}},
           {"4.1", {0, 1, 0}},
           {"3.2", {1, 0, 1}},
           {"3.1.1", {2, 0, 1}},
           {"2.2.1", {1, 0, 1}},
           {"2.1.1.1", {0, 1, 0}},
           {"1.1.1.1.1", {1, 0, 0}}}}},
        {{"S5", 3},
         {{{"5", {1, 0, 0, 0, 0}},
           {"4.1", {0, 0, 1, 0, 0}},
           {"3.2", {0, 0, 1, 1, 0}},
           {"3.1.1", {0, 0, 0, 0, 1}},
           {"2.2.1", {1, 1, 0, 0, 0}},
           {"2.1.1.1", {0, 1, 0, 0, 0}},
           {"1.1.1.1.1", {0, 0, 0, 1, 0}}}}},
        {{"S5", 5},
         {{{"5", {1, 0, 0, 0, 0, 0}},
           {"4.1", {1, 1, 0, 0, 0, 0}},
           {"3.2", {0, 0, 0, 0, 1, 0}},
           {"3.1.1", {0, 1, 1, 0, 0, 0}},
           {"2.2.1", {0, 0, 0, 0, 0, 1}},
           {"2.1.1.1", {0, 0, 1, 1, 0, 0}},
           {"1.1.1.1.1", {0, 0, 0, 1, 0, 0}}}}},
    };
    auto it = tables.find({label, ell});
    return it == tables.end() ? nullptr : &it->second;
}

long long det_int(std::vector<std::vector<long long>> m) {
    // Bareiss fraction-free elimination
    int n = (int)m.size();
    long long prev = 1, sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        prev = m[k][k];
    }
    return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

void verify_decomposition(const Group& A, int ell, const DecompositionData& D) {
    int nrows = (int)A.character_table().size();
    int ncols = D.cols();
    if ((int)D.d.size() != nrows) throw IntegrityError("decomposition: row count");
    if (ncols != A.ell_regular_class_count(ell))
        throw IntegrityError("decomposition: column count != ell-regular classes");
    for (auto& row : D.d)
        for (long long v : row)
            if (v < 0) throw IntegrityError("decomposition: negative entry");
    for (int c = 0; c < ncols; ++c) {
        bool nz = false;
        for (int r = 0; r < nrows; ++r)
            if (D.d[r][c]) nz = true;
        if (!nz) throw IntegrityError("decomposition: zero column");
    }
    // Cartan matrix: symmetric, det a power of ell, positive diagonal
    std::vector<std::vector<long long>> C(ncols, std::vector<long long>(ncols, 0));
    for (int i = 0; i < ncols; ++i)
        for (int j = 0; j < ncols; ++j)
            for (int r = 0; r < nrows; ++r) C[i][j] += D.d[r][i] * D.d[r][j];
    long long det = det_int(C);
    if (det <= 0) throw IntegrityError("decomposition: Cartan determinant not positive");
    while (det % ell == 0) det /= ell;
    if (det != 1) throw IntegrityError("decomposition: Cartan determinant not a power of ell");
    if (A.order() % ell != 0) {
        // must be the identity
        if (nrows != ncols) throw IntegrityError("decomposition: identity expected");
        for (int r = 0; r < nrows; ++r)
            for (int c = 0; c < ncols; ++c)
                if (D.d[r][c] != (r == c ? 1 : 0))
                    throw IntegrityError("decomposition: identity expected when ell coprime");
    }
    // Brauer degrees from the triangular part; regular character identity
    // dim chi_r = sum_c d[r][c] * dim phi_c  has a unique solution
    std::vector<long long> dims(ncols, -1);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int r = 0; r < nrows; ++r) {
            int unknown = -1;
            long long rest = A.character_table()[r].degree();
            bool usable = true;
            for (int c = 0; c < ncols; ++c) {
                if (!D.d[r][c]) continue;
                if (dims[c] >= 0) rest -= D.d[r][c] * dims[c];
                else if (unknown < 0) unknown = c;
                else usable = false;
            }
            if (usable && unknown >= 0 && rest > 0 && D.d[r][unknown] != 0 &&
                rest % D.d[r][unknown] == 0) {
                dims[unknown] = rest / D.d[r][unknown];
                progress = true;
            }
        }
        if (std::all_of(dims.begin(), dims.end(), [](long long v) { return v >= 0; })) break;
    }
    if (std::any_of(dims.begin(), dims.end(), [](long long v) { return v < 0; }))
        throw IntegrityError("decomposition: Brauer degrees undetermined");
    long long reg = 0;
    for (int c = 0; c < ncols; ++c) {
        long long pimdeg = 0;
        for (int r = 0; r < nrows; ++r) pimdeg += D.d[r][c] * A.character_table()[r].degree();
        reg += dims[c] * pimdeg;
    }
    if (reg != A.order()) throw IntegrityError("decomposition: regular character identity failed");
}

} // namespace

DecompositionData decomposition_matrix(const Group& A, int ell) {
    std::string label = A.identify_small();
    int nrows = (int)A.character_table().size();
    DecompositionData D;

    if (A.order() % ell != 0) {
        D.d.assign(nrows, std::vector<long long>(nrows, 0));
        for (int i = 0; i < nrows; ++i) D.d[i][i] = 1;
        verify_decomposition(A, ell, D);
        return D;
    }
    // ell-group: single projective, the regular character
    bool ellgroup = true;
    {
        long long o = A.order();
        while (o % ell == 0) o /= ell;
        ellgroup = o == 1;
    }
    if (ellgroup) {
        D.d.assign(nrows, std::vector<long long>(nrows ? 1 : 0, 0));
        for (int i = 0; i < nrows; ++i) D.d[i][0] = A.character_table()[i].degree();
        verify_decomposition(A, ell, D);
        return D;
    }
    if (label[0] == 'Z') {
        // cyclic: one block per character of the ell'-part
        long long m = A.order();
        long long mell = 1;
        while (m % ell == 0) {
            m /= ell;
            mell *= ell;
        }
        // characters theta_j: match by value on a generator
        Perm gen;
        for (const auto& e : A.elements())
            if (perm_order(e) == A.order()) { gen = e; break; }
        int gcls = A.class_of_perm(gen);
        long long M = A.order();
        std::vector<long long> expo(nrows, -1);
        for (int t = 0; t < nrows; ++t) {
            for (long long j = 0; j < M; ++j)
                if (A.character_table()[t].values[gcls] == Cyc::root_power((int)M, j)) {
                    expo[t] = j;
                    break;
                }
            if (expo[t] < 0) throw IntegrityError("cyclic: exponent matching failed");
        }
        // columns indexed by residues mod m (the ell'-part), via j mod m... the
        // ell'-component of theta_j is determined by j modulo m' where the
        // character group splits Z_M = Z_m x Z_{mell}: theta_j restricted to
        // the subgroup of order m is determined by j mod m.
        std::map<long long, int> colof;
        int ncols = 0;
        D.d.assign(nrows, std::vector<long long>(A.ell_regular_class_count(ell), 0));
        for (int t = 0; t < nrows; ++t) {
            // restriction to the ell'-subgroup <g^{mell}> is determined by
            // the exponent j*mell mod M
            long long key = (expo[t] * mell) % M;
            if (!colof.count(key)) colof[key] = ncols++;
            D.d[t][colof[key]] = 1;
        }
        verify_decomposition(A, ell, D);
        return D;
    }
    const NamedMatrix* nm = embedded_matrix(label, ell);
    if (!nm) throw CapabilityError("decomposition matrix: no data for " + label + " at ell=" +
                                   std::to_string(ell));
    int n = (int)label[1] - '0';
    D.d.assign(nrows, {});
    for (const auto& [lab, row] : nm->rows) {
        int idx = char_index_of_partition(A, n, parse_part_label(lab));
        D.d[idx] = row;
    }
    for (auto& row : D.d)
        if (row.empty()) throw IntegrityError("decomposition: missing row");
    verify_decomposition(A, ell, D);
    return D;
}

ClassFunction ProjectiveCharacter::as_class_function(const Group& A) const {
    const auto& table = A.character_table();
    ClassFunction out;
    out.values.assign(A.classes().size(), Cyc(0));
    for (size_t t = 0; t < table.size(); ++t) {
        if (!mult[t]) continue;
        for (size_t c = 0; c < out.values.size(); ++c)
            out.values[c] = out.values[c] + table[t].values[c] * mult[t];
    }
    return out;
}

long long ProjectiveCharacter::degree(const Group& A) const {
    long long d = 0;
    for (size_t t = 0; t < mult.size(); ++t) d += mult[t] * A.character_table()[t].degree();
    return d;
}

std::vector<ProjectiveCharacter> pim_set(const Group& A, int ell) {
    auto D = decomposition_matrix(A, ell);
    std::vector<ProjectiveCharacter> out;
    for (int c = 0; c < D.cols(); ++c) {
        ProjectiveCharacter p;
        p.mult.resize(D.d.size());
        for (size_t r = 0; r < D.d.size(); ++r) p.mult[r] = D.d[r][c];
        out.push_back(std::move(p));
    }
    return out;
}

// ------------------------------------------------------------- quotients ---

namespace {

// indices of springer psi labels in the character table of A
std::vector<std::pair<int, long long>> springer_char_indices(
    const Group& A, const sprdata::UnipotentClassRecord& rec) {
    std::vector<std::pair<int, long long>> out; // (table index, a-value)
    if (A.order() == 1) {
        for (const auto& s : rec.springer)
            out.push_back({0, s.a});
        return out;
    }
    const std::string& label = rec.agroup;
    if (label[0] != 'S') throw CapabilityError("springer labels only defined for S_n groups");
    int n = (int)label[1] - '0';
    for (const auto& s : rec.springer) {
        int idx = char_index_of_partition(A, n, parse_part_label(s.psi));
        out.push_back({idx, s.a});
    }
    return out;
}

QuotientResult quotient_by_kernels(const Group& A, const std::vector<std::vector<int>>& kernels) {
    // intersection of the kernels
    std::set<int> inter;
    for (long long e = 0; e < A.order(); ++e) inter.insert((int)e);
    for (const auto& k : kernels) {
        std::set<int> s(k.begin(), k.end());
        std::set<int> nxt;
        for (int e : inter)
            if (s.count(e)) nxt.insert(e);
        inter = std::move(nxt);
    }
    std::vector<int> K(inter.begin(), inter.end());
    auto q = A.quotient(K);
    QuotientResult out;
    out.label = q.group.identify_small();
    out.group = std::move(q.group);

    // minimality sweep for small groups: no strictly larger normal subgroup
    // is contained in every kernel
    if (A.order() <= 120) {
        const auto& cls = A.classes();
        int nc = (int)cls.size();
        for (int mask = 0; mask < (1 << nc); ++mask) {
            if (!(mask & 1)) continue; // must contain the identity class
            std::vector<int> cand;
            for (int c = 0; c < nc; ++c)
                if (mask & (1 << c))
                    for (int m : cls[c].members) cand.push_back(m);
            if ((long long)cand.size() <= (long long)K.size()) continue;
            std::sort(cand.begin(), cand.end());
            if (!A.is_normal(cand)) continue;
            bool inside_all = true;
            for (const auto& k : kernels) {
                std::set<int> s(k.begin(), k.end());
                for (int e : cand)
                    if (!s.count(e)) { inside_all = false; break; }
                if (!inside_all) break;
            }
            if (inside_all)
                throw IntegrityError("quotient minimality sweep: larger common kernel found");
        }
    }
    return out;
}

} // namespace

QuotientResult canonical_quotient(const sprdata::UnipotentClassRecord& rec) {
    Group A = instantiate(rec.agroup);
    auto chars = springer_char_indices(A, rec);
    long long threshold = rec.b ? (long long)*rec.b : rec.a_top();
    std::vector<std::vector<int>> kernels;
    bool any = false;
    for (auto& [idx, a] : chars) {
        if (a != threshold) continue;
        any = true;
        kernels.push_back(A.kernel_of_character(A.character_table()[idx]));
    }
    if (!any) throw IntegrityError("canonical quotient: S empty for class " + rec.name);
    return quotient_by_kernels(A, kernels);
}

QuotientResult ell_special_quotient(const sprdata::UnipotentClassRecord& rec, int ell) {
    Group A = instantiate(rec.agroup);
    auto chars = springer_char_indices(A, rec);
    auto pims = pim_set(A, ell);
    // a_Psi = min a over constituents with a Springer correspondent
    std::vector<long long> apsi(pims.size(), LLONG_MIN);
    for (size_t p = 0; p < pims.size(); ++p) {
        long long best = LLONG_MAX;
        for (auto& [idx, a] : chars)
            if (pims[p].mult[idx] > 0) best = std::min(best, a);
        if (best != LLONG_MAX) apsi[p] = best;
    }
    long long mx = LLONG_MIN;
    for (long long v : apsi) mx = std::max(mx, v);
    if (mx == LLONG_MIN)
        throw IntegrityError("ell-special quotient: no eligible projective for " + rec.name);
    std::vector<std::vector<int>> kernels;
    for (size_t p = 0; p < pims.size(); ++p) {
        if (apsi[p] != mx) continue;
        auto cf = pims[p].as_class_function(A);
        // kernel of the projective character: values equal to the degree
        const auto& cls = A.classes();
        Cyc deg = cf.values[A.class_of(0)];
        std::vector<int> ker;
        for (size_t c = 0; c < cls.size(); ++c)
            if (cf.values[c] == deg)
                for (int m : cls[c].members) ker.push_back(m);
        std::sort(ker.begin(), ker.end());
        kernels.push_back(std::move(ker));
    }
    return quotient_by_kernels(A, kernels);
}

// ---------------------------------------------------------------- counts ---

long long m_tilde(const Group& gamma) {
    long long total = 0;
    for (const auto& c : gamma.classes()) {
        auto cent = gamma.centralizer(c.rep);
        total += (long long)cent.classes().size();
    }
    return total;
}

long long m_tilde_ell(const Group& gamma, int ell) {
    long long total = 0;
    for (const auto& c : gamma.classes()) {
        auto cent = gamma.centralizer(c.rep);
        total += cent.ell_regular_class_count(ell);
    }
    return total;
}

namespace {

bool is_trivial_action(const Group& g, const permgrp::FAction& f) {
    return f.gen_images == g.generators();
}

// twisted centralizer {g : g x F(g)^{-1} = x} as a subgroup
Group twisted_centralizer(const Group& gamma, const std::vector<int>& phi, int x) {
    const auto& els = gamma.elements();
    std::vector<Perm> cent;
    for (long long gi = 0; gi < gamma.order(); ++gi) {
        Perm lhs = perm_mul(els[gi], perm_mul(els[x], perm_inv(els[phi[gi]])));
        if (lhs == els[x]) cent.push_back(els[gi]);
    }
    return Group::from_generators(gamma.degree(), cent, "twisted-centralizer");
}

} // namespace

TwistedCount m_tilde(const Group& gamma, const permgrp::FAction& f) {
    if (is_trivial_action(gamma, f)) return {m_tilde(gamma), false};
    auto phi = permgrp::automorphism_map(gamma, f);
    auto orbits = permgrp::twisted_classes(gamma, f);
    long long total = 0;
    for (const auto& orb : orbits) {
        auto cent = twisted_centralizer(gamma, phi, orb[0]);
        total += (long long)cent.classes().size();
    }
    return {total, true};
}

TwistedCount m_tilde_ell(const Group& gamma, const permgrp::FAction& f, int ell) {
    if (is_trivial_action(gamma, f)) return {m_tilde_ell(gamma, ell), false};
    auto phi = permgrp::automorphism_map(gamma, f);
    auto orbits = permgrp::twisted_classes(gamma, f);
    long long total = 0;
    for (const auto& orb : orbits) {
        auto cent = twisted_centralizer(gamma, phi, orb[0]);
        total += cent.ell_regular_class_count(ell);
    }
    return {total, true};
}

} // namespace unip::lmod
