#include "doctest.h"

#include "clh/decimal.hpp"
#include "clh/qseries.hpp"

using namespace clh;

namespace {

QSeries geometric(unsigned t) {
    QSeries s(t);
    for (unsigned j = 0; j <= t; ++j) s.set_coeff(j, Rat(1));
    return s;
}

}  // namespace

TEST_SUITE_BEGIN("qseries");

TEST_CASE("arithmetic respects truncation") {
    QSeries one_minus_q = QSeries::one(3) - QSeries::monomial(Rat(1), 1, 3);
    QSeries prod = one_minus_q * geometric(3);
    for (unsigned j = 0; j <= 3; ++j) CHECK(prod.coeff(j) == (j == 0 ? 1 : 0));

    QSeries inv = one_minus_q.invert_unit();
    CHECK(inv == geometric(3));

    QSeries a(2), b(2);
    a.set_coeff(0, Rat(1));
    a.set_coeff(1, Rat(-1));
    a.set_coeff(2, Rat(-1));
    b.set_coeff(1, Rat(1));
    b.set_coeff(2, Rat(1));
    CHECK(a + b == QSeries::one(2));

    // the product of a T=5 and a T=3 series only knows coefficients to q^3
    CHECK((geometric(5) * geometric(3)).trunc() == 3);
    CHECK_THROWS_AS(QSeries(4).invert_unit(), std::domain_error);
}

TEST_CASE("euler products expand correctly") {
    QSeries p4 = euler_product(4);
    const long want[] = {1, -1, -1, 0, 0};
    for (unsigned j = 0; j <= 4; ++j) CHECK(p4.coeff(j) == want[j]);

    QSeries skip1 = euler_product(3, [](unsigned i) { return i >= 2; });
    CHECK(skip1.coeff(0) == 1);
    CHECK(skip1.coeff(1) == 0);
    CHECK(skip1.coeff(2) == -1);
    CHECK(skip1.coeff(3) == -1);

    CHECK(euler_product(2, [](unsigned) { return false; }) == QSeries::one(2));
}

TEST_CASE("euler product coefficients match naive polynomial multiplication") {
    const unsigned T = 30;
    std::vector<Rat> naive(T + 1, Rat(0));
    naive[0] = 1;
    for (unsigned i = 1; i <= T; ++i) {
        std::vector<Rat> next(T + 1, Rat(0));
        for (unsigned a = 0; a <= T; ++a) {
            if (naive[a] == 0) continue;
            next[a] += naive[a];
            if (a + i <= T) next[a + i] -= naive[a];
        }
        naive = std::move(next);
    }
    QSeries prod = euler_product(T);
    for (unsigned j = 0; j <= T; ++j) CHECK(prod.coeff(j) == naive[j]);
}

TEST_CASE("eisenstein series coefficients are divisor power sums") {
    QSeries e1 = eisenstein(1, 6);
    const long w1[] = {0, 1, 2, 2, 3, 2, 4};
    for (unsigned j = 0; j <= 6; ++j) CHECK(e1.coeff(j) == w1[j]);

    QSeries e2 = eisenstein(2, 6);
    const long w2[] = {0, 1, 3, 4, 7, 6, 12};
    for (unsigned j = 0; j <= 6; ++j) CHECK(e2.coeff(j) == w2[j]);

    QSeries e3 = eisenstein(3, 2);
    CHECK(e3.coeff(1) == 1);
    CHECK(e3.coeff(2) == 5);
}

TEST_CASE("certified evaluation at q = 1/p") {
    EvalResult m1 = eval_poly_growth(eisenstein(1, 40), 2, 1, Rat(1));
    CHECK(m1.tail_bound < make_rat(Int(1), Int(100000)));
    CHECK(to_decimal_half_even(m1.value, 4) == "1.6067");

    EvalResult p0 = eval_euler_product(2, 40);
    CHECK(p0.tail_bound < make_rat(Int(1), Int(1000000000)));
    CHECK(to_decimal_half_even(p0.value, 6) == "0.288788");

    EvalResult c = eval_poly_growth(QSeries::one(5), 7, 0, Rat(0));
    CHECK(c.value == 1);
    CHECK(c.tail_bound == 0);
}

TEST_CASE("interval refinement nests and evaluation is monotone in T") {
    EvalResult coarse = eval_poly_growth(eisenstein(2, 40), 2, 2, Rat(1));
    EvalResult fine = eval_poly_growth(eisenstein(2, 50), 2, 2, Rat(1));
    CHECK(coarse.contains(fine.value));
    CHECK(fine.hi() <= coarse.hi());
    CHECK(fine.lo() >= coarse.lo());
    CHECK(fine.value > coarse.value);  // coefficients are positive
}

TEST_CASE("interval arithmetic") {
    EvalResult a = EvalResult::from_bounds(Rat(1), Rat(2));
    EvalResult b = EvalResult::from_bounds(Rat(3), Rat(4));
    CHECK((a + b).lo() == 4);
    CHECK((a + b).hi() == 6);
    CHECK((a * b).lo() == 3);
    CHECK((a * b).hi() == 8);
    CHECK(a.reciprocal().lo() == make_rat(Int(1), Int(2)));
    CHECK(a.gap(b) == 1);
    CHECK(a.gap(EvalResult::from_bounds(Rat(2), Rat(3))) == 0);
    CHECK_THROWS_AS(EvalResult::from_bounds(Rat(-1), Rat(1)).reciprocal(), std::domain_error);
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(to_decimal_half_even(make_rat(Int(1), Int(8)), 2) == "0.12");
    CHECK(to_decimal_half_even(make_rat(Int(3), Int(8)), 2) == "0.38");
    CHECK(to_decimal_half_even(make_rat(Int(5), Int(2)), 0) == "2");
    CHECK(to_decimal_half_even(make_rat(Int(7), Int(2)), 0) == "4");
    CHECK(to_decimal_half_even(make_rat(Int(-1), Int(8)), 2) == "-0.12");
    CHECK(to_decimal_half_even(Rat(3), 3) == "3.000");
}

TEST_SUITE_END();
