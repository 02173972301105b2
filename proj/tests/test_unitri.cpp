#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "unitri.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace unip;
using namespace unip::unitri;

namespace {

NonnegMatrix from_rows(std::vector<std::vector<long long>> rows) {
    NonnegMatrix m;
    m.n = (int)rows.size();
    for (auto& r : rows) m.a.insert(m.a.end(), r.begin(), r.end());
    return m;
}

// exhaustive reference for the column search
bool exhaustive_possible(const NonnegMatrix& a) {
    std::vector<int> sigma(a.n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        NonnegMatrix m = a;
        for (int i = 0; i < a.n; ++i)
            for (int j = 0; j < a.n; ++j) m.at(i, j) = a.at(i, sigma[j]);
        if (is_lower_unitriangular(m)) return true;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}

NonnegMatrix random_lower_unitriangular(std::mt19937_64& rng, int n, int maxentry) {
    NonnegMatrix m = NonnegMatrix::identity(n);
    std::uniform_int_distribution<int> d(0, maxentry);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) m.at(i, j) = d(rng);
    return m;
}

NonnegMatrix permute_columns(const NonnegMatrix& a, const std::vector<int>& sigma) {
    NonnegMatrix m = a;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) m.at(i, j) = a.at(i, sigma[j]);
    return m;
}

} // namespace

TEST_CASE("verify_factorization") {
    auto I2 = NonnegMatrix::identity(2);
    CHECK(verify_factorization(I2, I2, I2));
    auto A = from_rows({{1, 0}, {1, 1}});
    CHECK(verify_factorization(A, I2, A));
    auto C = from_rows({{2, 0}, {1, 1}});
    CHECK(!verify_factorization(C, I2, C)); // 2 on the diagonal
    auto B = from_rows({{1, 1}, {0, 1}});
    CHECK(!verify_factorization(A, B, A));
}

TEST_CASE("column_unitriangularize basics") {
    auto L = from_rows({{1, 0, 0}, {2, 1, 0}, {3, 0, 1}});
    auto r = column_unitriangularize(L);
    REQUIRE(r.ok);
    CHECK(r.sigma == std::vector<int>{0, 1, 2});

    auto A = from_rows({{0, 1}, {1, 3}});
    auto r2 = column_unitriangularize(A);
    REQUIRE(r2.ok);
    CHECK(r2.sigma == std::vector<int>{1, 0});
    CHECK(is_lower_unitriangular(permute_columns(A, r2.sigma)));

    auto bad = from_rows({{1, 1}, {1, 1}});
    CHECK(!column_unitriangularize(bad).ok);
}

TEST_CASE("completeness at small scale") {
    // all nonnegative matrices with entries <= 2 and n <= 3 agree with the
    // exhaustive search over column permutations
    for (int n = 1; n <= 3; ++n) {
        long long total = 1;
        for (int i = 0; i < n * n; ++i) total *= 3;
        for (long long code = 0; code < total; ++code) {
            NonnegMatrix m;
            m.n = n;
            long long c = code;
            for (int i = 0; i < n * n; ++i) {
                m.a.push_back(c % 3);
                c /= 3;
            }
            auto r = column_unitriangularize(m);
            bool want = exhaustive_possible(m);
            CHECK(r.ok == want);
            if (r.ok) CHECK(is_lower_unitriangular(permute_columns(m, r.sigma)));
        }
    }
}

TEST_CASE("factorization lemma, randomized") {
    // every A arising from a valid factorization AB = C admits a column
    // permutation; direct executable restatement of the forced-entry argument
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> nd(2, 6);
    for (int iter = 0; iter < 1000; ++iter) {
        int n = nd(rng);
        auto L = random_lower_unitriangular(rng, n, 3);
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        auto A = permute_columns(L, sigma);
        // B = sigma^{-1} applied to a unitriangular factor
        auto U = random_lower_unitriangular(rng, n, 3);
        // C = A * (sigma-inverse rows of U): build B with B[sigma[j]][k] = U[j][k]
        NonnegMatrix B;
        B.n = n;
        B.a.assign((size_t)n * n, 0);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) B.at(sigma[j], k) = U.at(j, k);
        auto C = multiply(A, B);
        REQUIRE(verify_factorization(A, B, C));
        auto r = column_unitriangularize(A);
        REQUIRE(r.ok);
        CHECK(is_lower_unitriangular(permute_columns(A, r.sigma)));
        if (n <= 4) CHECK(exhaustive_possible(A));
    }
}

TEST_CASE("basic_set_certificate") {
    auto I3 = NonnegMatrix::identity(3);
    auto r = basic_set_certificate(I3);
    REQUIRE(r.ok);
    CHECK(r.row_order == std::vector<int>{0, 1, 2});
    CHECK(r.col_order == std::vector<int>{0, 1, 2});

    // scrambled products of unitriangular matrices certify
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + (int)(rng() % 5);
        auto D = random_lower_unitriangular(rng, n, 2);
        auto U = random_lower_unitriangular(rng, n, 2);
        auto S = multiply(D, U); // lower unitriangular
        // scramble rows and columns
        std::vector<int> rp(n), cp(n);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        NonnegMatrix P;
        P.n = n;
        P.a.assign((size_t)n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) P.at(i, j) = S.at(rp[i], cp[j]);
        auto res = basic_set_certificate(P);
        REQUIRE(res.ok);
        // the witness orders reconstruct a lower unitriangular matrix
        NonnegMatrix W;
        W.n = n;
        W.a.assign((size_t)n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) W.at(i, j) = P.at(res.row_order[i], res.col_order[j]);
        CHECK(is_lower_unitriangular(W));
    }

    // singular matrices are rejected through the determinant obstruction
    auto sing = from_rows({{1, 1}, {1, 1}});
    CHECK(!basic_set_certificate(sing).ok);
    CHECK(determinant(sing) == 0);
    auto det2 = from_rows({{2, 1}, {0, 1}});
    CHECK(!basic_set_certificate(det2).ok);
}

TEST_CASE("matrix text round trip") {
    auto m = from_rows({{1, 0, 2}, {0, 1, 0}, {5, 1, 1}});
    auto back = parse_matrix(print_matrix(m));
    CHECK(back.a == m.a);
    CHECK_THROWS(parse_matrix("1 2\n3\n"));
}
