#include "doctest.h"

#include "clh/decimal.hpp"
#include "clh/measure.hpp"
#include "clh/oracles.hpp"

using namespace clh;

namespace {

const MeasureContext ctx2(2, 64, 30);
const MeasureContext ctx3(3, 64, 15);

std::string dec(const EvalResult& r, unsigned digits) {
    REQUIRE(r.tail_bound * 2 < pow_rat(make_rat(Int(1), Int(10)), digits));
    return to_decimal_half_even(r.value, digits);
}

}  // namespace

TEST_SUITE_BEGIN("measure");

TEST_CASE("weights of the smallest groups") {
    CHECK(weight(Partition(), ctx2) == 1);
    CHECK(weight(Partition({1}), ctx2) == 1);
    CHECK(weight(Partition({1, 1}), ctx2) == make_rat(Int(1), Int(6)));
    CHECK(weight(Partition({2}), ctx2) == make_rat(Int(1), Int(2)));
}

TEST_CASE("total weight and its reciprocal relation") {
    EvalResult total = total_weight(ctx2);
    CHECK(dec(total, 6) == "3.462747");
    EvalResult product = eval_euler_product(2, ctx2.T);
    CHECK((total * product).contains(Rat(1)));

    EvalResult total13 = total_weight(MeasureContext(13));
    CHECK(dec(total13, 4) == "1.0903");
}

TEST_CASE("probabilities of the smallest groups") {
    CHECK(dec(cl_prob(Partition(), ctx2), 6) == "0.288788");
    CHECK(dec(cl_prob(Partition({1}), ctx2), 6) == "0.288788");
    CHECK(dec(cl_prob(Partition({1, 1}), ctx2), 6) == "0.048131");
}

TEST_CASE("surjection counts by exhaustive enumeration") {
    GroupShape z2{{{1, 1}}};
    CHECK(surjection_count(z2, 1, ctx2) == 1);
    CHECK(surjection_count(z2, 2, ctx2) == 3);
    CHECK(surjection_count(GroupShape{}, 0, ctx2) == 1);
    CHECK(surjection_count(z2, 0, ctx2) == 0);
    // (Z/2)^2 has |GL(2,2)| = 6 ordered generating pairs
    CHECK(surjection_count(GroupShape{{{1, 2}}}, 2, ctx2) == 6);
    CHECK_THROWS_AS(surjection_count(GroupShape{{{3, 3}}}, 3, ctx2), std::length_error);
}

TEST_CASE("twisted weights against surjection counts") {
    CHECK(twisted_weight_wk(Partition({1}), 1, ctx2) == make_rat(Int(1), Int(2)));
    CHECK(twisted_weight_wk(Partition({1, 1}), 1, ctx2) == 0);
    for (std::int64_t p : {2, 3}) {
        MeasureContext ctx(p, 64, 15);
        for (const Partition& lam : enumerate_partitions(3)) {
            GroupShape shape = to_group_shape(lam);
            for (unsigned k = 0; k <= 3; ++k) {
                Rat expected = make_rat(surjection_count(shape, k, ctx),
                                        pow_int(Int(static_cast<long>(p)), k * lam.size())) *
                               weight(lam, ctx);
                CHECK(twisted_weight_wk(lam, k, ctx) == expected);
            }
        }
    }
    // w_k approaches the plain weight from below
    Rat w = weight(Partition({2, 1}), ctx2);
    Rat w30 = twisted_weight_wk(Partition({2, 1}), 30, ctx2);
    CHECK(w30 < w);
    CHECK(w - w30 < make_rat(Int(1), Int(100000000)));
}

TEST_CASE("zeta closed product and functional equation") {
    CHECK(zeta_k(1, 0, 2) == 2);
    CHECK(zeta_k(2, 0, 2) == make_rat(Int(8), Int(3)));
    CHECK(zeta_k(2, 0, 2) == zeta_k(1, 1, 2) * zeta_k(1, 0, 2));
    CHECK(zeta_k(0, 2, 5) == 1);
    CHECK_THROWS_AS(zeta_k(3, -1, 2), std::domain_error);
    for (std::int64_t p : {2, 3, 5})
        for (long s = 0; s <= 3; ++s)
            for (unsigned k1 = 0; k1 <= 6; ++k1)
                for (unsigned k2 = 0; k1 + k2 <= 6; ++k2)
                    CHECK(zeta_k(k1 + k2, s, p) == zeta_k(k1, s + long(k2), p) * zeta_k(k2, s, p));
    CHECK(zeta_k_real(1, 0.0, 2) == doctest::Approx(2.0));
}

TEST_CASE("expected values") {
    GroupFunctional one = GroupFunctional::bounded([](const Partition&) { return Rat(1); }, Rat(1));
    CHECK(expected_value(one, 0, ctx2).contains(Rat(1)));
    CHECK(expected_value(one, 1, ctx2).contains(Rat(1)));
    CHECK(expected_value(one, 0, ctx3).contains(Rat(1)));

    GroupFunctional prank = GroupFunctional::rank_power_bounded(
        [](const Partition& l) { return Rat(pow_int(Int(2), l.num_parts())); }, 1, Rat(1));
    EvalResult e = expected_value(prank, 0, ctx2);
    CHECK(e.contains(moment_p_rank(1, ctx2)));

    GroupFunctional ind = GroupFunctional::bounded(
        [](const Partition& l) { return l.empty() ? Rat(1) : Rat(0); }, Rat(1));
    EvalResult eu = expected_value(ind, 1, ctx2);
    CHECK(eu.gap(u_prob(Partition(), 1, ctx2)) == 0);
    CHECK(dec(eu, 6) == "0.577576");

    CHECK_THROWS(expected_value(GroupFunctional{}, 0, ctx2));
}

TEST_CASE("order distribution against truncated sums") {
    CHECK(prob_order(0, ctx2).gap(cl_prob(Partition(), ctx2)) == 0);
    CHECK(dec(prob_order(1, ctx2), 6) == "0.288788");
    CHECK(dec(prob_order(2, ctx2), 6) == "0.192525");
    for (std::int64_t p : {2, 3, 5}) {
        MeasureContext ctx(p, 64, p == 2 ? 30 : 15);
        for (unsigned long n = 0; n <= 5; ++n) {
            EvalResult oracle =
                oracle_prob([&](const Partition& l) { return l.size() == n; }, ctx);
            CHECK(prob_order(n, ctx).gap(oracle) == 0);
        }
    }
}

TEST_CASE("rank distribution against truncated sums") {
    CHECK(dec(prob_rank(0, ctx2), 6) == "0.288788");
    CHECK(dec(prob_rank(1, ctx2), 6) == "0.577576");
    CHECK(dec(prob_rank(2, ctx2), 6) == "0.128350");
    for (std::int64_t p : {2, 3, 5}) {
        MeasureContext ctx(p, 64, p == 2 ? 30 : 15);
        for (unsigned r = 0; r <= 3; ++r) {
            EvalResult oracle =
                oracle_prob([&](const Partition& l) { return l.num_parts() == r; }, ctx);
            CHECK(prob_rank(r, ctx).gap(oracle) == 0);
        }
    }
}

TEST_CASE("rank-order joint distribution") {
    CHECK(dec(prob_rank_order(1, 1, ctx2), 6) == "0.288788");
    CHECK(dec(prob_rank_order(2, 1, ctx2), 6) == "0.144394");
    CHECK(dec(prob_rank_order(2, 2, ctx2), 6) == "0.048131");
    CHECK(prob_rank_order(1, 2, ctx2).value == 0);
    CHECK(prob_rank_order(3, 0, ctx2).value == 0);
    for (std::int64_t p : {2, 3, 5}) {
        MeasureContext ctx(p, 64, p == 2 ? 30 : 15);
        for (unsigned long n = 0; n <= 5; ++n) {
            EvalResult row = EvalResult::exact(Rat(0));
            for (unsigned r = 0; r <= n; ++r) {
                EvalResult closed = prob_rank_order(n, r, ctx);
                EvalResult oracle = oracle_prob(
                    [&](const Partition& l) { return l.size() == n && l.num_parts() == r; }, ctx);
                CHECK(closed.gap(oracle) == 0);
                row = row + closed;
            }
            CHECK(row.gap(prob_order(n, ctx)) == 0);
        }
    }
}

TEST_CASE("exponent distribution via congruence-filtered products") {
    CHECK(prob_exponent_le(0, ctx2).gap(cl_prob(Partition(), ctx2)) == 0);
    CHECK(dec(prob_exponent_le(1, ctx2), 4) == "0.6274");
    CHECK(prob_exponent_le(25, ctx2).value > make_rat(Int(99), Int(100)));
    for (std::int64_t p : {2, 3, 5}) {
        MeasureContext ctx(p, 64, p == 2 ? 30 : 15);
        for (unsigned e = 0; e <= 3; ++e) {
            EvalResult oracle =
                oracle_prob([&](const Partition& l) { return l.part1(1) <= e; }, ctx);
            CHECK(prob_exponent_le(e, ctx).gap(oracle) == 0);
        }
    }
}

TEST_CASE("moments of p^rank") {
    for (std::int64_t p : {2, 3, 5, 7}) {
        MeasureContext ctx(p);
        CHECK(moment_p_rank(0, ctx) == 1);
        CHECK(moment_p_rank(1, ctx) == 2);
        CHECK(moment_p_rank(2, ctx) == Rat(static_cast<long>(p + 3)));
    }
}

TEST_CASE("monomial sums f_k") {
    auto f1 = order_moment_poly(1);
    REQUIRE(f1.size() == 1);
    CHECK(f1.at(Partition({1})) == 1);

    auto f2 = order_moment_poly(2);
    CHECK(f2.at(Partition({2})) == 1);
    CHECK(f2.at(Partition({1, 1})) == 1);

    auto f4 = order_moment_poly(4);
    CHECK(f4.at(Partition({4})) == 1);
    CHECK(f4.at(Partition({3, 1})) == 4);
    CHECK(f4.at(Partition({2, 2})) == 3);
    CHECK(f4.at(Partition({2, 1, 1})) == 6);
    CHECK(f4.at(Partition({1, 1, 1, 1})) == 1);
    CHECK(order_moment_scale(4) == 15);
}

TEST_CASE("local-order moment series") {
    QSeries m2 = order_moment_series(2, 6);
    const long w2[] = {0, 1, 4, 8, 15, 20, 32};
    for (unsigned j = 0; j <= 6; ++j) CHECK(m2.coeff(j) == w2[j]);

    QSeries m3 = order_moment_series(3, 6);
    const long w3[] = {0, 1, 8, 26, 63, 116, 208};
    for (unsigned j = 0; j <= 6; ++j) CHECK(m3.coeff(j) == w3[j]);

    // the first moment against the direct expectation over the order law
    EvalResult direct = EvalResult::exact(Rat(0));
    for (unsigned long n = 1; n <= 25; ++n)
        direct = direct + prob_order(n, ctx2) * Rat(static_cast<unsigned long>(n));
    Rat slack = tail_poly_geometric(ctx2.q(), 1, 25) / eval_euler_product(2, 40).lo();
    EvalResult direct_full{direct.value + slack / 2, direct.tail_bound + slack / 2};
    EvalResult m1 = order_moment_value(1, 2, 60);
    CHECK(m1.gap(direct_full) == 0);
    CHECK(dec(m1, 4) == "1.6067");
    CHECK(dec(order_moment_value(2, 2, 80), 4) == "5.3255");
}

TEST_CASE("u-probabilities") {
    CHECK(dec(u_prob(Partition(), 1, ctx2), 6) == "0.577576");
    CHECK(dec(u_prob(Partition({1}), 1, ctx2), 6) == "0.288788");
    CHECK_THROWS(u_prob(Partition(), 0, ctx2));

    // first displayed identity: P_u = P / (p^{u ord} prod_{i<=u}(1-p^-i))
    for (unsigned u = 1; u <= 2; ++u)
        for (const Partition& lam : enumerate_partitions(4)) {
            Rat denom = pow_rat(Rat(2), static_cast<long>(u * lam.size()));
            for (unsigned i = 1; i <= u; ++i) denom *= Rat(1) - pow_rat(ctx2.q(), i);
            EvalResult rhs = cl_prob(lam, ctx2) * (Rat(1) / denom);
            CHECK(u_prob(lam, u, ctx2).gap(rhs) == 0);
        }

    for (std::int64_t p : {2, 3, 5}) {
        MeasureContext ctx(p, 64, p == 2 ? 30 : 15);
        for (unsigned u = 1; u <= 2; ++u)
            for (const Partition& lam : enumerate_partitions(4))
                CHECK(u_prob(lam, u, ctx).gap(oracle_u_prob(lam, u, ctx)) == 0);
    }

    // truncated masses approach 1
    for (unsigned u = 1; u <= 2; ++u) {
        Rat sum(0);
        for_each_partition(30, std::nullopt, std::nullopt,
                           [&](const Partition& lam) { sum += u_prob(lam, u, ctx2).lo(); });
        CHECK(sum > Rat(1) - make_rat(Int(1), Int(1000)));
        CHECK(sum < 1);
    }
}

TEST_CASE("normalization of the measure itself") {
    Rat sum(0);
    for_each_partition(30, std::nullopt, std::nullopt,
                       [&](const Partition& lam) { sum += cl_prob(lam, ctx2).lo(); });
    CHECK(sum > Rat(1) - make_rat(Int(1), Int(1000000)));
    CHECK(sum < 1);
}

TEST_CASE("per-order weight mass identity") {
    for (std::int64_t p : {2, 3, 5}) {
        const Rat q = inv_of(p);
        unsigned long bound = p == 2 ? 18 : 12;
        std::vector<Rat> mass(bound + 1, Rat(0));
        for_each_partition(bound, std::nullopt, std::nullopt,
                           [&](const Partition& lam) { mass[lam.size()] += cl_weight(lam, p); });
        Rat denom(1);
        Rat qi = q;
        for (unsigned long n = 1; n <= bound; ++n) {
            denom *= Rat(1) - qi;
            qi *= q;
            CHECK(mass[n] == pow_rat(q, static_cast<long>(n)) / denom);
        }
    }
}

TEST_SUITE_END();
