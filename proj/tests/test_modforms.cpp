#include <doctest.h>

#include <nlk3/linalg.hpp>
#include <nlk3/modforms.hpp>

#include <random>

using namespace nlk3;

TEST_CASE("half-integral theta series") {
    FracSeries a = theta_A(4), b = theta_B(4);
    CHECK(a.coeff(Rat(0)) == 1);
    CHECK(a.coeff(make_rat(1, 8)) == 2);
    CHECK(a.coeff(make_rat(1, 2)) == 2);
    CHECK(a.coeff(make_rat(9, 8)) == 2);
    CHECK(a.coeff(Rat(2)) == 2);
    CHECK(b.coeff(make_rat(1, 8)) == -2);
    CHECK(b.coeff(make_rat(1, 2)) == 2);
    CHECK(b.coeff(make_rat(9, 8)) == -2);
    FracSeries diff = a - b;
    CHECK(diff.coeff(make_rat(1, 8)) == 4);
    CHECK(diff.coeff(make_rat(9, 8)) == 4);
    CHECK(diff.coeff(make_rat(1, 2)) == 0);
}

TEST_CASE("U and V") {
    auto [u, v] = theta_UV(4);
    CHECK(u.coeff(make_rat(1, 4)) == 2);
    CHECK(u.coeff(Rat(1)) == 2);
    CHECK(u.coeff(make_rat(9, 4)) == 2);
    // V is U with odd-n terms negated
    CHECK(v.coeff(make_rat(1, 4)) == -2);
    CHECK(v.coeff(Rat(1)) == 2);
    // oracle convolution at q^{1/2}: n^2 + m^2 = 2 with sign (-1)^m
    Rat oracle(0);
    for (int n = -2; n <= 2; ++n)
        for (int m = -2; m <= 2; ++m)
            if (n * n + m * m == 2) oracle += (m % 2 == 0) ? Rat(1) : Rat(-1);
    CHECK((u * v).coeff(make_rat(1, 2)) == oracle);
}

TEST_CASE("siegel theta vectors") {
    VVForm t8 = siegel_theta(8, 12);
    CHECK(t8.orbit_count() == 5);
    CHECK(t8.components[0].coeff(Rat(0)) == 1);
    CHECK(t8.components[0].coeff(Rat(4)) == 2);
    CHECK(t8.components[1].coeff(make_rat(1, 16)) == 1);
    CHECK(t8.components[1].coeff(make_rat(49, 16)) == 1);
    CHECK(t8.components[1].coeff(make_rat(81, 16)) == 1);
    // reflected access
    CHECK(t8.component(7).coeff(make_rat(1, 16)) == 1);
    for (std::int64_t l : {2, 4, 6, 8}) CHECK(grading_invariant_holds(siegel_theta(l, 10)));
}

TEST_CASE("eisenstein series") {
    FracSeries e4 = eisenstein(4, 4), e6 = eisenstein(6, 4), e10 = eisenstein(10, 4);
    CHECK(e4.coeff(Rat(0)) == 1);
    CHECK(e4.coeff(Rat(1)) == 240);
    CHECK(e4.coeff(Rat(2)) == 2160);
    CHECK(e6.coeff(Rat(1)) == -504);
    CHECK(e6.coeff(Rat(2)) == -16632);
    CHECK(e10.coeff(Rat(1)) == -264);
    CHECK(e10.coeff(Rat(2)) == -135432);
    CHECK(bernoulli(4) == make_rat(-1, 30));
    CHECK(bernoulli(10) == make_rat(5, 66));
}

TEST_CASE("rankin-cohen brackets") {
    FracSeries e4 = eisenstein(4, 10), e6 = eisenstein(6, 10);
    // 0-th bracket is plain multiplication
    FracSeries prod = rc_bracket(e4, Rat(4), e6, Rat(6), 0);
    CHECK(prod == e4 * e6);
    // identity against the constant form
    FracSeries one = FracSeries::constant(1, Rat(10));
    CHECK(rc_bracket(e4, Rat(4), one, Rat(0), 0) == e4);
    // weight-12 cusp form: [E4, E6]_1 = -3456 Delta
    FracSeries bracket = rc_bracket(e4, Rat(4), e6, Rat(6), 1);
    FracSeries delta = eta24(10);
    for (int k = 0; k < 9; ++k) CHECK(bracket.coeff(Rat(k)) == Rat(-3456) * delta.coeff(Rat(k)));
}

TEST_CASE("holomorphy of produced forms") {
    for (std::int64_t l : {2, 4, 6, 8})
        for (const auto& f : basis_forms(l, 8))
            for (const auto& comp : f.components)
                if (auto e = comp.min_exponent()) CHECK(*e >= 0);
    for (const auto& fam : preset_families())
        for (const auto& comp : fit(fam.l, fam.constraints, 8).form.components)
            if (auto e = comp.min_exponent()) CHECK(*e >= 0);
}

TEST_CASE("bracket bilinearity on random inputs") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> expo(0, 12), num(-9, 9);
    auto random_series = [&] {
        FracSeries s(1, Rat(9));
        for (int i = 0; i < 5; ++i) s.set_coeff(Rat(expo(rng)), Rat(num(rng)));
        return s;
    };
    for (int iter = 0; iter < 20; ++iter) {
        FracSeries f = random_series(), g = random_series(), h = random_series();
        Rat a(num(rng)), b(num(rng));
        for (int n = 0; n <= 2; ++n) {
            FracSeries lhs = rc_bracket(f * a + g * b, make_rat(5, 2), h, Rat(4), n);
            FracSeries rhs =
                rc_bracket(f, make_rat(5, 2), h, Rat(4), n) * a +
                rc_bracket(g, make_rat(5, 2), h, Rat(4), n) * b;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("basis forms") {
    int expected_count[] = {2, 3, 4, 4};
    int idx = 0;
    for (std::int64_t l : {2, 4, 6, 8}) {
        auto basis = basis_forms(l, 8);
        CHECK(static_cast<int>(basis.size()) == expected_count[idx++]);
        for (const auto& f : basis) {
            CHECK(f.weight_num2 == 21);  // 1/2 + (10-2n) + 2n
            CHECK(grading_invariant_holds(f));
        }
        // exact linear independence of the truncated coefficient matrix
        std::vector<std::vector<Rat>> rows;
        for (const auto& f : basis) {
            std::vector<Rat> row;
            for (const auto& comp : f.components)
                for (std::int64_t m = 0; m < 16 * l; ++m) row.push_back(comp.coeff(make_rat(m, 2 * l)));
            rows.push_back(std::move(row));
        }
        CHECK(exact_rank(rows) == static_cast<int>(basis.size()));
    }
}

TEST_CASE("fits reproduce the classical coefficient vectors") {
    FitResult f4 = fit(4, preset_family("quartic-pencil").constraints, 8);
    CHECK(f4.coefficients == std::vector<Rat>{Rat(-1), make_rat(-5, 4), make_rat(-16, 21)});
    FitResult f2 = fit(2, preset_family("l2-sextic").constraints, 8);
    CHECK(f2.coefficients == std::vector<Rat>{Rat(-1), make_rat(-1, 2)});
    FitResult f6a = fit(6, preset_family("l6-family1").constraints, 8);
    CHECK(f6a.coefficients ==
          std::vector<Rat>{Rat(-1), make_rat(-49, 24), make_rat(-8, 3), make_rat(-12, 5)});
    FitResult f6b = fit(6, preset_family("l6-family2").constraints, 8);
    CHECK(f6b.coefficients ==
          std::vector<Rat>{Rat(-1), make_rat(-17, 8), make_rat(-22, 7), make_rat(-18, 5)});
    FitResult f8 = fit(8, preset_family("l8-quadrics").constraints, 8);
    CHECK(f8.coefficients ==
          std::vector<Rat>{Rat(-1), make_rat(-49, 18), make_rat(-128, 27), make_rat(-256, 45)});
    // the nodal count of the quartic pencil comes out, it is not a constraint
    CHECK(scalarize(f4.form).coeff(Rat(1)) == 108);
    // the family-2 combination has nodal coefficient 78 and reproduces the
    // classical line and elliptic-plane-curve counts of that pencil
    CHECK(f6b.form.components[0].coeff(Rat(1)) == 78);
    CHECK(f6b.form.component(1).coeff(make_rat(13, 12)) == 198);
    CHECK(f6b.form.component(3).coeff(make_rat(3, 4)) == 10);
}

TEST_CASE("scalarization") {
    FracSeries sc4 = scalarize(fit(4, preset_family("quartic-pencil").constraints, 8).form);
    CHECK(sc4.coeff(Rat(0)) == -1);
    CHECK(sc4.coeff(Rat(1)) == 108);
    CHECK(sc4.coeff(make_rat(9, 8)) == 320);
    CHECK(sc4.coeff(make_rat(3, 2)) == 5016);
    CHECK(sc4.coeff(Rat(2)) == 76950);
    // support sits on eighth-integers with residue 0, 1 or 4 only
    CHECK(sc4.coeff(make_rat(1, 4)) == 0);
    CHECK(sc4.coeff(make_rat(3, 8)) == 0);

    FracSeries sc2 = scalarize(fit(2, preset_family("l2-sextic").constraints, 8).form);
    CHECK(sc2.coeff(Rat(0)) == -1);
    CHECK(sc2.coeff(Rat(1)) == 150);
    CHECK(sc2.coeff(make_rat(5, 4)) == 1248);
    CHECK(sc2.coeff(Rat(2)) == 108600);
    CHECK(sc2.coeff(make_rat(9, 4)) == 332800);
    CHECK(sc2.coeff(Rat(3)) == 5113200);

    VVForm zero{2, 21, {FracSeries(4, Rat(5)), FracSeries(4, Rat(5))}};
    CHECK(scalarize(zero).is_zero());
}

TEST_CASE("nl lookups") {
    VVForm form = fit(4, preset_family("quartic-pencil").constraints, 8).form;
    // disc 8 at (h,d) = (2,4): the nodal count
    NLValue v = nl_lookup(form, 2, 4);
    CHECK(v.value == 108);
    CHECK_FALSE(v.hodge_vanishing);
    // negative discriminant gates to zero with the flag set
    NLValue neg = nl_lookup(form, 5, 1);
    CHECK(neg.value == 0);
    CHECK(neg.hodge_vanishing);
    // disc 0: the Hodge degree
    CHECK(nl_lookup(form, 1, 0).value == -1);
}

TEST_CASE("weil representation") {
    for (std::int64_t l : {2, 4, 6, 8}) {
        WeilRep rep = weil_rep(l);
        std::size_t n = static_cast<std::size_t>(l);
        // T is diagonal with phases matching the component grading
        for (std::size_t r = 0; r < n; ++r) {
            double want = -2.0 * 3.14159265358979323846 * static_cast<double>(r * r) /
                          (2.0 * static_cast<double>(l));
            CHECK(std::abs(rep.t[r][r] - std::polar(1.0, want)) < 1e-12);
            for (std::size_t s = 0; s < n; ++s)
                if (s != r) CHECK(std::abs(rep.t[r][s]) == 0.0);
        }
        // S is unitary
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::complex<double> dot = 0.0;
                for (std::size_t k = 0; k < n; ++k) dot += rep.s[i][k] * std::conj(rep.s[j][k]);
                CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-12);
            }
    }
}

TEST_CASE("numeric S-transformation residuals") {
    std::vector<std::complex<double>> at_2i{{0.0, 2.0}};
    CHECK(numeric_modularity_check(siegel_theta(2, 40), at_2i) < 1e-8);
    std::vector<std::complex<double>> at_15i{{0.0, 1.5}};
    VVForm f4 = fit(4, preset_family("quartic-pencil").constraints, 40).form;
    CHECK(numeric_modularity_check(f4, at_15i) < 1e-6);
}
