#include <doctest.h>

#include <nlk3/modforms.hpp>
#include <nlk3/qseries.hpp>

#include <random>

using namespace nlk3;

namespace {

FracSeries one_minus_qn(int n, int trunc) {
    FracSeries f = FracSeries::constant(1, Rat(trunc));
    f.set_coeff(Rat(n), Rat(-1));
    return f;
}

bool equal_below(const FracSeries& a, const FracSeries& b, const Rat& bound) {
    Rat lim = std::min(std::min(a.truncation(), b.truncation()), bound);
    for (const auto& [k, v] : a.terms())
        if (a.exponent_at(k) < lim && b.coeff(a.exponent_at(k)) != v) return false;
    for (const auto& [k, v] : b.terms())
        if (b.exponent_at(k) < lim && a.coeff(b.exponent_at(k)) != v) return false;
    return true;
}

}  // namespace

TEST_CASE("addition") {
    FracSeries one_plus_q = FracSeries::constant(1, Rat(10));
    one_plus_q.set_coeff(Rat(1), Rat(1));
    FracSeries sum = one_plus_q + FracSeries::constant(-1, Rat(10));
    CHECK(sum.coeff(Rat(0)) == 0);
    CHECK(sum.coeff(Rat(1)) == 1);
    CHECK(sum.term_count() == 1);

    FracSeries a = theta_A(12), b = theta_B(12);
    FracSeries ab = a + b;  // even-n terms doubled
    CHECK(ab.coeff(Rat(0)) == 2);
    CHECK(ab.coeff(make_rat(1, 2)) == 4);
    CHECK(ab.coeff(make_rat(1, 8)) == 0);
    CHECK(ab.coeff(Rat(2)) == 4);

    CHECK((a + FracSeries(8, Rat(12))) == a);
}

TEST_CASE("multiplication") {
    FracSeries q18 = FracSeries::monomial(8, make_rat(1, 8), Rat(1), Rat(4));
    CHECK((q18 * q18).coeff(make_rat(1, 4)) == 1);

    // brute-force convolution oracle over (n, m) pairs with n^2 + m^2 = 2
    FracSeries a = theta_A(6), b = theta_B(6);
    Rat oracle(0);
    for (int n = -2; n <= 2; ++n)
        for (int m = -2; m <= 2; ++m)
            if (n * n + m * m == 2) oracle += (m % 2 == 0) ? Rat(1) : Rat(-1);
    CHECK(oracle == -4);
    CHECK((a * b).coeff(make_rat(1, 4)) == oracle);

    CHECK((a * FracSeries::constant(1, Rat(6))) == a);
}

TEST_CASE("inverse") {
    FracSeries geom = one_minus_qn(1, 8).inverse();
    for (int k = 0; k < 8; ++k) CHECK(geom.coeff(Rat(k)) == 1);

    FracSeries delta = eta24(10);
    FracSeries inv = delta.inverse();
    CHECK(inv.min_exponent().value() == Rat(-1));
    FracSeries yz = FracSeries::monomial(1, Rat(1), Rat(1), Rat(10)) * inv;
    CHECK(yz.coeff(Rat(0)) == 1);
    CHECK(yz.coeff(Rat(1)) == 24);
    CHECK(yz.coeff(Rat(2)) == 324);
    CHECK(yz.coeff(Rat(3)) == 3200);
    CHECK(yz.coeff(Rat(4)) == 25650);

    CHECK_THROWS_AS(FracSeries(1, Rat(5)).inverse(), std::domain_error);
}

TEST_CASE("eta24 against the repeated-multiplication oracle") {
    const int order = 50;
    FracSeries single = FracSeries::constant(1, Rat(order));
    for (int n = 1; n < order; ++n) single = single * one_minus_qn(n, order);
    FracSeries power = FracSeries::constant(1, Rat(order));
    for (int i = 0; i < 24; ++i) power = power * single;
    FracSeries oracle = FracSeries::monomial(1, Rat(1), Rat(1), Rat(order)) * power;
    FracSeries direct = eta24(order);
    CHECK(equal_below(direct, oracle, Rat(order)));
    CHECK(direct.coeff(Rat(1)) == 1);
    CHECK(direct.coeff(Rat(2)) == -24);
    CHECK(direct.coeff(Rat(3)) == 252);
}

TEST_CASE("q_derivative") {
    CHECK(FracSeries::constant(7, Rat(5)).q_derivative().is_zero());
    FracSeries q18 = FracSeries::monomial(8, make_rat(1, 8), Rat(1), Rat(4));
    CHECK(q18.q_derivative().coeff(make_rat(1, 8)) == make_rat(1, 8));
    CHECK(theta_A(4).q_derivative().coeff(make_rat(9, 8)) == make_rat(9, 4));
}

TEST_CASE("coefficient reads respect the truncation contract") {
    FracSeries a = theta_A(4);
    CHECK(a.coeff(make_rat(31, 8)) == 0);
    CHECK_THROWS_AS(a.coeff(Rat(4)), std::out_of_range);
    CHECK_THROWS_AS(a.coeff(Rat(100)), std::out_of_range);
    // off-grid but below truncation reads zero
    CHECK(a.coeff(make_rat(1, 3)) == 0);
    // inverse shifts the reliable window: trunc(1/Delta) = trunc - 2
    FracSeries inv = eta24(10).inverse();
    CHECK(inv.truncation() == Rat(8));
    CHECK_THROWS_AS(inv.coeff(Rat(8)), std::out_of_range);
}

TEST_CASE("ring axioms on random truncated inputs") {
    std::mt19937 rng(1234);
    const std::int64_t gradings[] = {1, 2, 4, 8};
    std::uniform_int_distribution<int> pick(0, 3), nterms(0, 6), expo(-4, 24), num(-9, 9),
        den(1, 4);
    auto random_series = [&] {
        std::int64_t n = gradings[pick(rng)];
        FracSeries s(n, Rat(8));
        int count = nterms(rng);
        for (int i = 0; i < count; ++i) s.set_coeff(make_rat(expo(rng), n), make_rat(num(rng), den(rng)));
        return s;
    };
    for (int iter = 0; iter < 60; ++iter) {
        FracSeries a = random_series(), b = random_series(), c = random_series();
        CHECK(equal_below((a + b) + c, a + (b + c), Rat(6)));
        CHECK(equal_below(a * b, b * a, Rat(6)));
        CHECK(equal_below((a * b) * c, a * (b * c), Rat(4)));
        CHECK(equal_below(a * (b + c), a * b + a * c, Rat(4)));
        if (!a.is_zero()) {
            FracSeries prod = a * a.inverse();
            CHECK(equal_below(prod, FracSeries::constant(1, prod.truncation()), Rat(4)));
        }
    }
}

TEST_CASE("grading of a product is the lcm grid") {
    FracSeries x = FracSeries::monomial(2, make_rat(1, 2), Rat(1), Rat(8));
    FracSeries y = FracSeries::monomial(3, make_rat(1, 3), Rat(1), Rat(8));
    FracSeries xy = x * y;
    CHECK(xy.grading() == 6);
    CHECK(xy.coeff(make_rat(5, 6)) == 1);
}
