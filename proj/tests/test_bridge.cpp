#include <doctest.h>

#include <nlk3/bridge.hpp>
#include <nlk3/mirror.hpp>

using namespace nlk3;

namespace {

VVForm quartic_form(int trunc) {
    return fit(4, preset_family("quartic-pencil").constraints, trunc).form;
}

}  // namespace

TEST_CASE("support bound") {
    CHECK(h_top(4, 1) == 1);
    CHECK(h_top(4, 4) == 3);
    CHECK(h_top(4, 10) == 13);
    CHECK(h_top(2, 3) == 3);
}

TEST_CASE("genus expansions from NL tables") {
    VVForm form = quartic_form(16);
    NLTable single = nl_from_form(form, 6, Rat(1), NLProvenance::FittedModular);
    NLTable doubled = nl_from_form(form, 6, Rat(2), NLProvenance::FittedModular);
    RTable r = kkv_table(3, 8);
    CHECK(theorem1_genus(0, single, r, 1) == 320);
    CHECK(theorem1_genus(0, doubled, r, 1) == 640);
    CHECK(theorem1_genus(0, doubled, r, 2) == 10032);
    // empty sum above the support bound
    CHECK(theorem1_genus(3, single, r, 1) == 0);
    CHECK(theorem1_genus(2, single, r, 1) == 0);
    // genus-1 prediction: integral and stable under a truncation increase
    Rat n14 = theorem1_genus(1, doubled, r, 4);
    CHECK(is_integer(n14));
    NLTable wider = nl_from_form(quartic_form(24), 6, Rat(2), NLProvenance::FittedModular);
    CHECK(theorem1_genus(1, wider, r, 4) == n14);
    // spelled out: -2 NL_{1,4} - 54 NL_{2,4} - 800 NL_{3,4}
    Rat by_hand = Rat(-2) * doubled.at(1, 4) + Rat(-54) * doubled.at(2, 4) +
                  Rat(-800) * doubled.at(3, 4);
    CHECK(n14 == by_hand);
}

TEST_CASE("quartic form from the mirror data") {
    BPSTable bps = fiber_bps(10);
    ThetaFit tf = fit_theta_from_gw(bps, 10);
    const long expected[22] = {3,       0,       -81,     -627,    -14436,   -20007,
                               -169092, -120636, -621558, -292796, -1038366, -346122,
                               -878388, -207186, -361908, -56364,  -60021,   -4812,
                               -1881,   -27,     0,       1};
    Rat scale(Int(1) << 22);
    for (int k = 0; k <= 21; ++k)
        CHECK(tf.monomial[static_cast<std::size_t>(k)] * scale == expected[k]);
    CHECK(tf.series.coeff(Rat(0)) == -1);
    CHECK(tf.series.coeff(Rat(1)) == 108);
    CHECK(tf.series.coeff(make_rat(9, 8)) == 320);
    CHECK(tf.series.coeff(make_rat(3, 2)) == 5016);
    CHECK(tf.series.coeff(Rat(2)) == 76950);
    // the two routes agree coefficientwise
    FracSeries modular = scalarize(quartic_form(12));
    for (std::int64_t m = 0; m <= 88; ++m)
        CHECK(tf.series.coeff(make_rat(m, 8)) == modular.coeff(make_rat(m, 8)));
    // rank deficiency is reported, with the dmax hint
    BPSTable small = fiber_bps(4);
    CHECK_THROWS_WITH_AS(fit_theta_from_gw(small, 4),
                         doctest::Contains("raise dmax"), std::runtime_error);
}

TEST_CASE("divisor degrees") {
    FracSeries theta = scalarize(quartic_form(8));
    CHECK(corollary2_degree(1, 3, theta) == 320);  // disc 9
    CHECK(corollary2_degree(2, 4, theta) == 0);    // 108 - 108
    CHECK(psi_series(8).coeff(Rat(2)) == 0);
    CHECK(psi_series(8).coeff(Rat(1)) == 108);
    CHECK(psi_series(8).coeff(Rat(4)) == 108);
    CHECK_THROWS_AS(corollary2_degree(1, 0, theta), std::domain_error);
}

TEST_CASE("generating-function dictionary") {
    BPSTable bps = fiber_bps(6);
    ThetaFit tf = fit_theta_from_gw(fiber_bps(10), 10);
    HarveyMooreReport rep = harvey_moore_check(tf.series, bps, 6);
    // every realized slot (-2/q, the constant, all n_{0,d}) matches exactly
    CHECK(rep.realized_match);
    // but 2 theta / Delta does not vanish off the realized support: the
    // first offender is q^1 with coefficient 2(theta[2] + 24 theta[1] + 324 theta[0])
    CHECK_FALSE(rep.support_vanishes);
    CHECK_FALSE(rep.pass);
    CHECK(rep.first_discrepancy == "first discrepancy at q^(1): generating function has 0, "
                                   "2*theta/Delta has 158436");
    CHECK(rep.checked_exponents == 45);  // m = -8 .. 36 on the eighth-integer grid
    // spot values of 2 theta / Delta
    FracSeries ratio = (tf.series * Rat(2)) * eta24(16).inverse();
    CHECK(ratio.coeff(Rat(-1)) == -2);
    CHECK(ratio.coeff(Rat(0)) == 168);
    CHECK(ratio.coeff(make_rat(1, 8)) == 640);
    CHECK(ratio.coeff(make_rat(1, 2)) == 10032);
    CHECK(ratio.coeff(Rat(1)) == 2 * (Rat(76950) + 24 * Rat(108) + 324 * Rat(-1)));
    CHECK(ratio.coeff(make_rat(9, 8)) == 288384);
    CHECK(ratio.coeff(Rat(2)) == 10979984);
}

TEST_CASE("nl tables carry provenance and the support gate") {
    NLTable t = nl_from_form(quartic_form(10), 4, Rat(1), NLProvenance::FittedModular);
    CHECK(t.provenance == NLProvenance::FittedModular);
    CHECK(t.at(0, 1) == 320);  // disc 9
    CHECK(t.at(1, 1) == 0);    // disc 1, a vanishing slot
    CHECK(t.at(1, 3) == 320);  // disc 9 again, by periodicity
    CHECK(t.at(h_top(4, 4), 4) == -1);  // the disc-0 slot at the support bound
    CHECK_THROWS_AS(t.at(99, 1), std::out_of_range);
}

TEST_CASE("nl periodicity under (h,d) -> (h + d + l/2, d + l)") {
    NLTable t = nl_from_form(quartic_form(16), 8, Rat(1), NLProvenance::FittedModular);
    for (std::int64_t d = 1; d <= 4; ++d)
        for (std::int64_t h = 0; h <= h_top(4, d); ++h)
            CHECK(t.at(h, d) == t.at(h + d + 2, d + 4));
}
