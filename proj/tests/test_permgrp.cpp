#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "permgrp.hpp"
#include "rootsys.hpp"

#include <numeric>
#include <set>

using namespace unip;
using namespace unip::permgrp;

TEST_CASE("orders of labelled groups") {
    CHECK(symmetric(3).order() == 6);
    CHECK(symmetric(5).order() == 120);
    CHECK(cyclic(6).order() == 6);
    CHECK(elem_ab2(3).order() == 8);
    auto wg2 = rootsys::RootSystem::build(rootsys::CartanType::parse("G2")).weyl_group();
    CHECK(wg2.order() == 12);
    auto wf4 = rootsys::RootSystem::build(rootsys::CartanType::parse("F4")).weyl_group();
    CHECK(wf4.order() == 1152);
}

TEST_CASE("conjugacy classes") {
    CHECK(symmetric(4).classes().size() == 5); // partitions of 4
    CHECK(cyclic(6).classes().size() == 6);
    auto wg2 = rootsys::RootSystem::build(rootsys::CartanType::parse("G2")).weyl_group();
    CHECK(wg2.classes().size() == 6);

    // class equation
    for (auto g : {symmetric(4), symmetric(5), cyclic(12), elem_ab2(2)}) {
        long long sum = 0;
        for (const auto& c : g.classes()) {
            sum += c.size();
            CHECK(g.order() % c.size() == 0);
            CHECK(g.centralizer_order((int)(&c - g.classes().data())) * c.size() == g.order());
        }
        CHECK(sum == g.order());
    }
}

TEST_CASE("character tables") {
    auto degrees = [](const Group& g) {
        std::multiset<long long> d;
        for (const auto& ch : g.character_table()) d.insert(ch.degree());
        return d;
    };
    CHECK(degrees(symmetric(3)) == std::multiset<long long>{1, 1, 2});
    CHECK(degrees(symmetric(5)).size() == 7); // partitions of 5
    auto wg2 = rootsys::RootSystem::build(rootsys::CartanType::parse("G2")).weyl_group();
    CHECK(degrees(wg2) == std::multiset<long long>{1, 1, 1, 1, 2, 2});

    // exact second orthogonality on a non-abelian table: columns
    auto s4 = symmetric(4);
    const auto& t = s4.character_table();
    const auto& cls = s4.classes();
    for (size_t c1 = 0; c1 < cls.size(); ++c1)
        for (size_t c2 = 0; c2 < cls.size(); ++c2) {
            Cyc s(0);
            for (const auto& ch : t) s = s + ch.values[c1] * ch.values[c2].conj();
            CHECK(s == Cyc(c1 == c2 ? s4.order() / cls[c1].size() : 0));
        }
}

TEST_CASE("twisted classes") {
    auto s3 = symmetric(3);
    auto orb = twisted_classes(s3, FAction::trivial(s3));
    CHECK(orb.size() == 3);
    // with trivial F the orbits are exactly the conjugacy classes
    std::set<std::vector<int>> a, b;
    for (auto& o : orb) a.insert(o);
    for (auto& c : s3.classes()) b.insert(c.members);
    CHECK(a == b);

    // cyclic group of order 4 with inversion: orbits {0,2} and {1,3}
    auto z4 = cyclic(4);
    FAction inv;
    inv.gen_images = {perm_inv(z4.generators()[0])};
    inv.order = 2;
    auto torb = twisted_classes(z4, inv);
    CHECK(torb.size() == 2);

    auto e8 = elem_ab2(3);
    CHECK(twisted_classes(e8, FAction::trivial(e8)).size() == 8);

    // invalid automorphism rejected
    auto z3 = cyclic(3);
    FAction bad;
    bad.gen_images = {perm_identity(3)};
    bad.order = 1;
    CHECK_THROWS_AS(twisted_classes(z3, bad), IntegrityError);
}

TEST_CASE("ell-regular class counts") {
    CHECK(symmetric(3).ell_regular_class_count(2) == 2); // e, 3-cycles
    CHECK(symmetric(3).ell_regular_class_count(3) == 2); // e, transpositions
    CHECK(cyclic(3).ell_regular_class_count(2) == 3);
    // equal to the class count when ell does not divide |G|
    CHECK(symmetric(4).ell_regular_class_count(5) == (int)symmetric(4).classes().size());
}

TEST_CASE("kernels and quotients") {
    auto s3 = symmetric(3);
    const auto& t = s3.character_table();
    // sign character: the unique nontrivial linear one
    int sign = -1, twodim = -1, triv = -1;
    for (int i = 0; i < 3; ++i) {
        if (t[i].degree() == 2) twodim = i;
        else {
            bool all1 = true;
            for (auto& v : t[i].values)
                if (!(v == Cyc(1))) all1 = false;
            if (all1) triv = i;
            else sign = i;
        }
    }
    CHECK(s3.kernel_of_character(t[sign]).size() == 3);
    CHECK(s3.kernel_of_character(t[twodim]).size() == 1);
    CHECK(s3.kernel_of_character(t[triv]).size() == 6);

    // S4 / V4 is S3
    auto s4 = symmetric(4);
    std::vector<int> v4;
    for (long long e = 0; e < 24; ++e) {
        auto& p = s4.elements()[e];
        auto typ = p;
        int ord = perm_order(p);
        if (e == 0 || (ord == 2 && [&] {
                int moved = 0;
                for (size_t i = 0; i < p.size(); ++i)
                    if (p[i] != (int)i) ++moved;
                return moved == 4;
            }()))
            v4.push_back((int)e);
        (void)typ;
    }
    CHECK(v4.size() == 4);
    auto q = s4.quotient(v4);
    CHECK(q.group.order() == 6);
    CHECK(q.group.identify_small() == "S3");
    // kernel of the surjection is the subgroup
    std::vector<int> ker;
    for (long long e = 0; e < 24; ++e)
        if (q.coset_of[e] == q.coset_of[0]) ker.push_back((int)e);
    CHECK(ker == v4);

    // boundary quotients
    auto whole = s3.quotient({0, 1, 2, 3, 4, 5});
    CHECK(whole.group.order() == 1);
    auto nothing = s3.quotient({0});
    CHECK(nothing.group.order() == 6);
}

TEST_CASE("small-group identification") {
    CHECK(trivial_group().identify_small() == "1");
    CHECK(cyclic(6).identify_small() == "Z6");
    CHECK(elem_ab2(2).identify_small() == "(Z2)^2");
    CHECK(symmetric(3).identify_small() == "S3");
    CHECK(symmetric(4).identify_small() == "S4");
    CHECK(symmetric(5).identify_small() == "S5");
    CHECK(symmetric(2).identify_small() == "Z2"); // S2 is the cyclic group
}

TEST_CASE("oversized Weyl table path is refused") {
    auto rs = rootsys::RootSystem::build(rootsys::CartanType::parse("E6"));
    CHECK_THROWS_AS(rs.weyl_group(), CapabilityError);
}
