#include <nlk3/bridge.hpp>
#include <nlk3/lattice.hpp>
#include <nlk3/linalg.hpp>

#include <sstream>
#include <stdexcept>

namespace nlk3 {

const Rat& NLTable::at(std::int64_t h, std::int64_t d) const {
    auto it = values.find({h, d});
    if (it == values.end())
        throw std::out_of_range("NLTable: missing entry (" + std::to_string(h) + "," +
                                std::to_string(d) + ")");
    return it->second;
}

std::int64_t h_top(std::int64_t l, std::int64_t d) { return (d * d) / (2 * l) + 1; }

NLTable nl_from_form(const VVForm& form, std::int64_t dmax, const Rat& scale,
                     NLProvenance provenance) {
    NLTable out;
    out.l = form.level;
    out.provenance = provenance;
    for (std::int64_t d = 1; d <= dmax; ++d)
        for (std::int64_t h = 0; h <= h_top(form.level, d); ++h)
            out.values[{h, d}] = nl_lookup(form, h, d).value * scale;
    return out;
}

Rat theorem1_genus(int g, const NLTable& nl, const RTable& r, std::int64_t d) {
    std::int64_t top = h_top(nl.l, d);
    Rat acc(0);
    for (std::int64_t h = g; h <= top; ++h) {
        if (h > r.hmax())
            throw std::out_of_range("theorem1_genus: RTable does not cover h_top(d)");
        acc += Rat(r.r(g, static_cast<int>(h))) * nl.at(h, d);
    }
    return acc;
}

ThetaFit fit_theta_from_gw(const BPSTable& bps, int dmax) {
    if (dmax < 1) throw std::invalid_argument("fit_theta_from_gw: dmax >= 1");
    for (int d = 1; d <= dmax; ++d)
        if (!bps.values.count({0, d}))
            throw std::invalid_argument("fit_theta_from_gw: missing genus-0 BPS value at d=" +
                                        std::to_string(d));
    // window: the d-equations read exponents up to (dmax^2+8)/8
    int trunc = (dmax * dmax + 8) / 8 + 2;
    FracSeries a = theta_A(trunc), b = theta_B(trunc);
    std::vector<FracSeries> monomials;
    {
        std::vector<FracSeries> apow{FracSeries::constant(1, Rat(trunc))}, bpow = apow;
        for (int i = 0; i < 21; ++i) {
            apow.push_back(apow.back() * a);
            bpow.push_back(bpow.back() * b);
        }
        for (int k = 0; k <= 21; ++k) monomials.push_back(apow[21 - k] * bpow[k]);
    }
    std::vector<Int> r0 = yau_zaslow(static_cast<int>(h_top(4, dmax)));

    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    // one degree relation per d: n_{0,d} = 2 sum_h r_{0,h} Theta[(d^2+8-8h)/8]
    for (int d = 1; d <= dmax; ++d) {
        std::vector<Rat> row(22, Rat(0));
        for (std::int64_t h = 0; 8 * h <= static_cast<std::int64_t>(d) * d + 8; ++h) {
            Rat e = make_rat(static_cast<std::int64_t>(d) * d + 8 - 8 * h, 8);
            Rat w = Rat(2) * Rat(r0[static_cast<std::size_t>(h)]);
            for (int k = 0; k <= 21; ++k) row[k] += w * monomials[k].coeff(e);
        }
        rows.push_back(std::move(row));
        rhs.push_back(bps.values.at({0, d}));
    }
    // normalization from the Hodge degree: Theta[0] = -1
    {
        std::vector<Rat> row(22);
        for (int k = 0; k <= 21; ++k) row[k] = monomials[k].coeff(Rat(0));
        rows.push_back(std::move(row));
        rhs.push_back(Rat(-1));
    }
    // support constraints: coefficients vanish at exponents m/8 with
    // m mod 8 outside {0, 1, 4} (no discriminant d^2 - 8h + 8 hits them)
    for (std::int64_t m = 0; m < 8 * (trunc - 1); ++m) {
        int res = static_cast<int>(m % 8);
        if (res == 0 || res == 1 || res == 4) continue;
        std::vector<Rat> row(22);
        bool all_zero = true;
        for (int k = 0; k <= 21; ++k) {
            row[k] = monomials[k].coeff(make_rat(m, 8));
            all_zero = all_zero && row[k] == 0;
        }
        if (all_zero) continue;
        rows.push_back(std::move(row));
        rhs.push_back(Rat(0));
    }

    LinearSolution sol = solve_exact(std::move(rows), std::move(rhs), 22);
    if (sol.rank < 22)
        throw std::runtime_error("fit_theta_from_gw: rank " + std::to_string(sol.rank) +
                                 " < 22; raise dmax");
    if (!sol.consistent)
        throw std::runtime_error("fit_theta_from_gw: inconsistent system (pipeline bug)");

    ThetaFit out{{}, FracSeries(8, Rat(trunc))};
    for (int k = 0; k <= 21; ++k) {
        out.monomial[static_cast<std::size_t>(k)] = sol.x[k];
        out.series = out.series + monomials[k] * sol.x[k];
    }
    return out;
}

FracSeries psi_series(int trunc) {
    FracSeries psi(1, Rat(trunc));
    for (std::int64_t n = 1; n * n < trunc; ++n) psi.set_coeff(Rat(n * n), Rat(108));
    return psi;
}

Rat corollary2_degree(std::int64_t h, std::int64_t d, const FracSeries& theta) {
    std::int64_t D = disc(4, h, d);
    if (D <= 0) throw std::domain_error("corollary2_degree: needs positive discriminant");
    Rat e = make_rat(D, 8);
    FracSeries psi = psi_series(static_cast<int>(D / 8) + 2);
    return theta.coeff(e) - psi.coeff(e);
}

HarveyMooreReport harvey_moore_check(const FracSeries& theta, const BPSTable& bps, int dmax) {
    HarveyMooreReport report;
    // 2 theta / Delta, reliable strictly below trunc(theta) - 2
    FracSeries lhs = (theta * Rat(2)) * eta24(static_cast<int>(theta.truncation().get_d()) + 1)
                                            .inverse();
    std::map<std::int64_t, Rat> expected;  // keyed by 8 * exponent
    expected[-8] = Rat(-2);
    expected[0] = Rat(168);
    for (int d = 1; d <= dmax; ++d) {
        auto it = bps.values.find({0, d});
        if (it == bps.values.end())
            throw std::invalid_argument("harvey_moore_check: missing n_{0,d} at d=" +
                                        std::to_string(d));
        expected[static_cast<std::int64_t>(d) * d] = it->second;
    }
    // the pole coefficient and the full window (-1, dmax^2/8] on the 1/8 grid
    for (std::int64_t m = -8; m <= static_cast<std::int64_t>(dmax) * dmax; ++m) {
        Rat e = make_rat(m, 8);
        bool realized = expected.count(m) > 0;
        Rat want = realized ? expected[m] : Rat(0);
        Rat got = lhs.coeff(e);
        ++report.checked_exponents;
        if (got != want) {
            if (realized)
                report.realized_match = false;
            else
                report.support_vanishes = false;
            if (report.first_discrepancy.empty()) {
                std::ostringstream os;
                os << "first discrepancy at q^(" << rat_str(e) << "): generating function has "
                   << rat_str(want) << ", 2*theta/Delta has " << rat_str(got);
                report.first_discrepancy = os.str();
            }
        }
    }
    report.pass = report.realized_match && report.support_vanishes;
    return report;
}

}  // namespace nlk3
