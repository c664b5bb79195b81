#include "doctest.h"

#include "clh/conjugacy.hpp"
#include "clh/fplinalg.hpp"

using namespace clh;

TEST_SUITE_BEGIN("conjugacy");

TEST_CASE("irreducible polynomial enumeration") {
    auto deg1 = irreducible_polys(2, 1);
    REQUIRE(deg1.size() == 2);
    CHECK(deg1[0].to_string() == "x");
    CHECK(deg1[1].to_string() == "x+1");

    auto deg2 = irreducible_polys(2, 2);
    REQUIRE(deg2.size() == 1);
    CHECK(deg2[0].to_string() == "x^2+x+1");

    CHECK_THROWS_AS(irreducible_polys(2, 40), std::length_error);
}

TEST_CASE("necklace count identity") {
    for (std::int64_t p : {2, 3})
        for (unsigned d = 1; d <= 6; ++d) {
            Int total(0);
            for (unsigned dd = 1; dd <= d; ++dd)
                if (d % dd == 0)
                    total += Int(dd) * Int(static_cast<unsigned long>(irreducible_polys(p, dd).size()));
            CHECK(total == pow_int(Int(static_cast<long>(p)), d));
        }
}

TEST_CASE("classes of GL(2,2)") {
    auto classes = enumerate_classes(2, 2);
    REQUIRE(classes.size() == 3);
    PolyFp xp1({1, 1}, 2);       // x+1
    PolyFp quad({1, 1, 1}, 2);   // x^2+x+1

    bool saw_id = false, saw_trans = false, saw_rot = false;
    for (const ClassLabel& c : classes) {
        unsigned long degsum = 0;
        for (const auto& [poly, lam] : c.blocks) {
            CHECK_FALSE(poly.is_x());
            degsum += poly.degree() * lam.size();
        }
        CHECK(degsum == 2);
        const Partition* at1 = c.partition_of(xp1);
        const Partition* atq = c.partition_of(quad);
        if (at1 && *at1 == Partition({1, 1})) {
            saw_id = true;
            CHECK(centralizer_order(c, 2) == 6);
            CHECK(class_size(c, 2) == 1);
        } else if (at1 && *at1 == Partition({2})) {
            saw_trans = true;
            CHECK(centralizer_order(c, 2) == 2);
            CHECK(class_size(c, 2) == 3);
        } else if (atq && *atq == Partition({1})) {
            saw_rot = true;
            CHECK(centralizer_order(c, 2) == 3);
            CHECK(class_size(c, 2) == 2);
        }
    }
    CHECK(saw_id);
    CHECK(saw_trans);
    CHECK(saw_rot);
}

TEST_CASE("classes of GL(1,3)") {
    auto classes = enumerate_classes(1, 3);
    CHECK(classes.size() == 2);
}

TEST_CASE("class sizes sum to the group order") {
    for (std::int64_t p : {2, 3}) {
        unsigned nmax = p == 2 ? 5 : 3;
        for (unsigned n = 1; n <= nmax; ++n) {
            Int sum(0);
            unsigned long count = 0;
            for_each_class(n, p, [&](const ClassLabel& c) {
                sum += class_size(c, p);
                ++count;
            });
            CHECK(sum == gl_order(n, p));
            CHECK(Int(static_cast<unsigned long>(count)) == class_count_by_genfun(n, p));
        }
    }
}

TEST_CASE("exact marginals") {
    auto m1 = exact_marginal(1, 2, 1);
    REQUIRE(m1.size() == 1);
    CHECK(m1.at(Partition({1})) == 1);

    auto m2 = exact_marginal(2, 2, 1);
    REQUIRE(m2.size() == 3);
    CHECK(m2.at(Partition({1, 1})) == make_rat(Int(1), Int(6)));
    CHECK(m2.at(Partition({2})) == make_rat(Int(1), Int(2)));
    CHECK(m2.at(Partition()) == make_rat(Int(1), Int(3)));

    auto m13 = exact_marginal(1, 3, 1);
    REQUIRE(m13.size() == 2);
    CHECK(m13.at(Partition()) == make_rat(Int(1), Int(2)));
    CHECK(m13.at(Partition({1})) == make_rat(Int(1), Int(2)));

    for (unsigned n = 1; n <= 4; ++n) {
        Rat total(0);
        for (const auto& [lam, v] : exact_marginal(n, 2, 1)) {
            CHECK(v >= 0);
            total += v;
        }
        CHECK(total == 1);
    }
}

TEST_CASE("marginal does not depend on the chosen unit") {
    for (std::int64_t p : {3, 5})
        for (unsigned n = 1; n <= 3; ++n) {
            auto base = exact_marginal(n, p, 1);
            for (std::uint64_t a = 2; a < static_cast<std::uint64_t>(p); ++a)
                CHECK(exact_marginal(n, p, a) == base);
        }
}

TEST_CASE("cycle index checks") {
    MeasureContext ctx(2, 64, 30);
    CycleIndexReport r2 = cycle_index_check(2, ctx);
    CHECK(r2.ok());
    CHECK(r2.class_sum == 6);
    CycleIndexReport r3 = cycle_index_check(3, ctx);
    CHECK(r3.class_sum == 168);
    CHECK(r3.ok());
    // the distance to the limit shrinks with n
    CHECK(cycle_index_check(4, ctx).tv_to_cl.hi() < r2.tv_to_cl.lo());
}

TEST_CASE("class label wire format") {
    for (const ClassLabel& c : enumerate_classes(2, 2)) {
        const Partition* quad = c.partition_of(PolyFp({1, 1, 1}, 2));
        if (quad && *quad == Partition({1}))
            CHECK(class_label_to_json(c, 2) ==
                  "{\"n\":2,\"p\":2,\"blocks\":[{\"poly\":\"x^2+x+1\",\"partition\":[1]}]}");
    }
}

TEST_CASE("polynomial rendering over odd primes") {
    PolyFp f({2, 0, 1}, 3);  // x^2+2
    CHECK(f.to_string() == "x^2+2");
    PolyFp g({1, 2, 1}, 3);
    CHECK(g.to_string() == "x^2+2x+1");
    CHECK(PolyFp::x_minus(1, 3).to_string() == "x+2");
}

TEST_SUITE_END();
