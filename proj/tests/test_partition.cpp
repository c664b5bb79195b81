#include "doctest.h"

#include "clh/oracles.hpp"
#include "clh/partition.hpp"

using namespace clh;

TEST_SUITE_BEGIN("partition");

TEST_CASE("conjugate mirrors the Young diagram") {
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
}

TEST_CASE("conjugation is an involution and swaps rank with largest part") {
    for (const Partition& lam : enumerate_partitions(12)) {
        CHECK(lam.conjugate().conjugate() == lam);
        CHECK(lam.conjugate().size() == lam.size());
        if (!lam.empty()) CHECK(lam.conjugate().part1(1) == lam.num_parts());
    }
}

TEST_CASE("group shape round trip") {
    GroupShape s = to_group_shape(Partition({3, 1, 1}));
    REQUIRE(s.blocks.size() == 2);
    CHECK(s.blocks[0] == std::pair<unsigned, unsigned>{3, 1});
    CHECK(s.blocks[1] == std::pair<unsigned, unsigned>{1, 2});
    CHECK(to_group_shape(Partition()).blocks.empty());
    CHECK(from_group_shape(GroupShape{{{2, 1}, {1, 1}}}) == Partition({2, 1}));
    for (const Partition& lam : enumerate_partitions(12))
        CHECK(from_group_shape(to_group_shape(lam)) == lam);
}

TEST_CASE("order, rank and exponent of a shape") {
    GroupShape s{{{2, 1}, {1, 1}}};  // Z/p^2 x Z/p
    CHECK(s.order_p() == 3);
    CHECK(s.rank() == 2);
    CHECK(s.exponent_p() == 2);
    GroupShape trivial{};
    CHECK(trivial.order_p() == 0);
    CHECK(trivial.rank() == 0);
    CHECK(trivial.exponent_p() == 0);
    GroupShape elementary{{{1, 3}}};
    CHECK(elementary.order_p() == 3);
    CHECK(elementary.rank() == 3);
    CHECK(elementary.exponent_p() == 1);
}

TEST_CASE("aut_order on small groups, against exhaustive enumeration") {
    CHECK(aut_order(GroupShape{{{1, 1}}}, 2) == 1);
    // these two counts come straight from the generator-image search
    CHECK(*brute_force_aut_count(GroupShape{{{1, 2}}}, 2) == 6);
    CHECK(aut_order(GroupShape{{{1, 2}}}, 2) == 6);
    CHECK(*brute_force_aut_count(GroupShape{{{2, 1}, {1, 1}}}, 2) == 8);
    CHECK(aut_order(GroupShape{{{2, 1}, {1, 1}}}, 2) == 8);
    CHECK_THROWS_AS(aut_order(GroupShape{{{1, 1}}}, 4), std::domain_error);
    CHECK_THROWS_AS(aut_order(GroupShape{{{1, 1}}}, 1), std::domain_error);
}

TEST_CASE("aut_order matches brute force over small orders") {
    for (std::int64_t p : {2, 3}) {
        for (const Partition& lam : enumerate_partitions(4)) {
            GroupShape shape = to_group_shape(lam);
            auto counted = brute_force_aut_count(shape, p, 100000000);
            REQUIRE(counted.has_value());
            CHECK(*counted == aut_order(shape, p));
        }
    }
}

TEST_CASE("enumeration order and bounds") {
    auto all2 = enumerate_partitions(2);
    REQUIRE(all2.size() == 4);
    CHECK(all2[0] == Partition());
    CHECK(all2[1] == Partition({1}));
    CHECK(all2[2] == Partition({2}));
    CHECK(all2[3] == Partition({1, 1}));

    auto cols = enumerate_partitions(3, 1u);
    REQUIRE(cols.size() == 4);
    CHECK(cols[3] == Partition({1, 1, 1}));

    auto rows = enumerate_partitions(4, std::nullopt, 1u);
    REQUIRE(rows.size() == 5);
    CHECK(rows[4] == Partition({4}));
}

TEST_CASE("enumeration yields the partition-count sequence") {
    const unsigned long counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    std::vector<unsigned long> seen(13, 0);
    for_each_partition(12, std::nullopt, std::nullopt,
                       [&](const Partition& lam) { ++seen[lam.size()]; });
    for (unsigned n = 0; n <= 12; ++n) CHECK(seen[n] == counts[n]);
}

TEST_CASE("text and parse round trip") {
    CHECK(Partition({4, 2, 1}).to_string() == "4+2+1");
    CHECK(Partition().to_string() == "()");
    CHECK(Partition::parse("4+2+1") == Partition({4, 2, 1}));
    CHECK(Partition::parse("1+2+4") == Partition({4, 2, 1}));
    CHECK(Partition::parse("()") == Partition());
    CHECK(Partition::parse("0") == Partition());
    CHECK_THROWS(Partition::parse("4+0+1"));
    CHECK_THROWS(Partition::parse("abc"));
    CHECK_THROWS(Partition(std::vector<unsigned>{1, 2}));

    CHECK(Partition({4, 2, 1}).to_json_array() == "[4,2,1]");
    CHECK(Partition().to_json_array() == "[]");
    CHECK(Partition::parse("[4,2,1]") == Partition({4, 2, 1}));
    CHECK(Partition::parse("[]") == Partition());
    CHECK_THROWS(Partition::parse("[4,2"));
}

TEST_SUITE_END();
