#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "classical.hpp"

#include <map>
#include <numeric>
#include <set>

using namespace unip;
using namespace unip::classical;

TEST_CASE("partition parametrization") {
    // Sp4: partitions of 4 with odd parts paired
    auto c2 = unipotent_class_data('C', 2);
    REQUIRE(c2.size() == 4);
    std::multiset<int> ranks;
    for (auto& c : c2) ranks.insert(c.a_rank);
    CHECK(ranks == std::multiset<int>{0, 1, 1, 1});

    // SO3: partitions of 3 with even parts paired
    auto b1 = unipotent_class_data('B', 1);
    REQUIRE(b1.size() == 2);
    std::set<std::vector<int>> got;
    for (auto& c : b1) got.insert(c.lambda);
    CHECK(got == std::set<std::vector<int>>{{3}, {1, 1, 1}});

    // type A takes the matrix size
    auto a2 = unipotent_class_data('A', 2);
    REQUIRE(a2.size() == 2);
    CHECK(a2[0].gcd_parts + a2[1].gcd_parts == 3); // gcd(2) + gcd(1,1)

    // D: very-even partitions give two classes each
    auto d2 = unipotent_class_data('D', 2);
    int very_even = 0;
    for (auto& c : d2) very_even += c.very_even;
    CHECK(very_even == 2); // the partition (2,2), twice
    // removing the marker merges them
    std::set<std::vector<int>> partitions;
    for (auto& c : d2) partitions.insert(c.lambda);
    CHECK(partitions.size() + 1 == d2.size());

    // series constraints hold
    for (auto& c : unipotent_class_data('B', 3)) {
        int tot = 0;
        std::map<int, int> mult;
        for (int x : c.lambda) {
            tot += x;
            mult[x]++;
        }
        CHECK(tot == 7);
        for (auto& [p, m] : mult)
            if (p % 2 == 0) CHECK(m % 2 == 0);
    }
}

TEST_CASE("rational unipotent counts") {
    CHECK(rational_unipotent_count('C', 2, 3) == 7); // Sp4
    CHECK(rational_unipotent_count('B', 1, 3) == 2); // SO3
    CHECK(rational_unipotent_count('A', 2, 3) == 3); // SL2: 1 + gcd(2, q-1)
    CHECK(rational_unipotent_count('A', 2, 5) == 3);
    CHECK_THROWS_AS(rational_unipotent_count('C', 2, 4), ClassicalError);
}

TEST_CASE("twisted-class oracle for cyclic groups") {
    CHECK(f_classes_cyclic(7, 1) == 7);  // trivial twist
    CHECK(f_classes_cyclic(6, 5) == 2);  // gcd(6, 4)
    CHECK(f_classes_cyclic(1, 3) == 1);
    CHECK(f_classes_cyclic(12, 5) == 4); // gcd(12, 4)
    CHECK(f_classes_cyclic(9, 4) == 3);  // gcd(9, 3)
    CHECK_THROWS_AS(f_classes_cyclic(6, 2), ClassicalError);
    // against the closed form on coprime multipliers
    for (long long m = 1; m <= 24; ++m)
        for (long long t = 1; t <= m; ++t) {
            if (std::gcd(t, m) != 1) continue;
            CHECK(f_classes_cyclic(m, t) == std::gcd(m, t - 1 + m));
        }
}

TEST_CASE("type A counts") {
    // SL2(3) at ell = 2: partitions (2), (1,1) give 2 + 1
    auto r = alpha_type_a(2, 2, 3, false);
    CHECK(r.total == 3);
    // gcd(2,6)_3 + 1
    CHECK(alpha_type_a(2, 3, 7, false).total == 2);
    // partitions (3),(2,1),(1^3): 3_3 + 1 + 1
    CHECK(alpha_type_a(3, 3, 7, false).total == 5);
    CHECK_THROWS_AS(alpha_type_a(3, 3, 9, false), ClassicalError); // ell = p
}

TEST_CASE("type A convention audit") {
    // the formula gcd(m, q + eps)_ell matches the orbit oracle for exactly
    // one eps per form over the whole grid
    bool linear_minus_ok = true, linear_plus_ok = true;
    bool unitary_minus_ok = true, unitary_plus_ok = true;
    for (int n = 1; n <= 6; ++n)
        for (int ell : {2, 3, 5})
            for (long long q : {3, 5, 7, 9}) {
                if (q % ell == 0) continue;
                auto lin = alpha_type_a(n, ell, q, false);
                auto uni = alpha_type_a(n, ell, q, true);
                for (auto& row : lin.rows) {
                    if (row.alpha != row.formula_minus) linear_minus_ok = false;
                    if (row.alpha != row.formula_plus) linear_plus_ok = false;
                }
                for (auto& row : uni.rows) {
                    if (row.alpha != row.formula_minus) unitary_minus_ok = false;
                    if (row.alpha != row.formula_plus) unitary_plus_ok = false;
                }
            }
    CHECK(linear_minus_ok);
    CHECK(!linear_plus_ok);
    CHECK(unitary_plus_ok);
    CHECK(!unitary_minus_ok);
}

TEST_CASE("brute force oracles") {
    CHECK(brute_force_class_count('A', 2, 3) == 3);  // SL2(3), 24 matrices
    CHECK(brute_force_class_count('C', 1, 3) == 3);  // Sp2 = SL2
    CHECK(brute_force_class_count('B', 1, 3) == 2);  // SO3(3)
    CHECK(brute_force_class_count('A', 0, 3) == 1);  // rank-0 boundary
    CHECK(brute_force_class_count('B', 1, 3) == rational_unipotent_count('B', 1, 3));
    CHECK(brute_force_class_count('A', 3, 2) == 3);  // SL3(2): partitions of 3
}
