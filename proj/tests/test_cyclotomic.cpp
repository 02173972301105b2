#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclotomic.hpp"
#include "intpoly.hpp"

using namespace unip;

TEST_CASE("cyclotomic polynomials") {
    CHECK(Cyc::cyclotomic_poly(1) == std::vector<long long>{-1, 1});
    CHECK(Cyc::cyclotomic_poly(2) == std::vector<long long>{1, 1});
    CHECK(Cyc::cyclotomic_poly(4) == std::vector<long long>{1, 0, 1});
    CHECK(Cyc::cyclotomic_poly(6) == std::vector<long long>{1, -1, 1});
    CHECK(Cyc::cyclotomic_poly(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity arithmetic") {
    Cyc z = Cyc::root_power(6, 1);
    Cyc z2 = z * z;
    CHECK(z2 == Cyc::root_power(3, 1));
    // 1 + z3 + z3^2 = 0
    Cyc s = Cyc(1) + Cyc::root_power(3, 1) + Cyc::root_power(3, 2);
    CHECK(s.is_zero());
    // z4^2 = -1
    CHECK(Cyc::root_power(4, 2) == Cyc(-1));
    CHECK(Cyc::root_power(4, 2).is_integer());
    // conjugation
    CHECK(Cyc::root_power(5, 2).conj() == Cyc::root_power(5, 3));
    // sums of a full orbit are integers
    Cyc t(0);
    for (int k = 0; k < 5; ++k) t = t + Cyc::root_power(5, k);
    CHECK(t == Cyc(0));
}

TEST_CASE("mixed conductors") {
    Cyc a = Cyc::root_power(4, 1); // i
    Cyc b = Cyc::root_power(3, 1);
    Cyc p = a * b;
    CHECK(p == Cyc::root_power(12, 7));
    CHECK((a * a + Cyc(1)).is_zero());
}

TEST_CASE("integer polynomials") {
    IPoly p = IPoly::one_minus_xk(6);
    IPoly q = IPoly::one_minus_xk(2);
    IPoly quot = p.divexact(q);
    CHECK(quot == IPoly({1, 0, 1, 0, 1}));
    CHECK_THROWS(p.divexact(IPoly({1, 1, 1})));
    IPoly g = IPoly::geometric(4);
    CHECK(g.at1() == 4);
    CHECK((g * g).degree() == 6);
    CHECK(IPoly({0, 0, 3, 1}).valuation() == 2);
}
