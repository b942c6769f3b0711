#pragma once

// The genus 0/1 bridge: Noether-Lefschetz tables from fitted forms, BPS
// predictions from NL numbers, the linear solve recovering the quartic form
// from Gromov-Witten data, and the generating-function identity check.

#include <nlk3/bpsk3.hpp>
#include <nlk3/modforms.hpp>
#include <nlk3/qseries.hpp>

#include <array>
#include <map>
#include <string>

namespace nlk3 {

enum class NLProvenance { FittedModular, MirrorSolved };

struct NLTable {
    std::int64_t l = 4;
    NLProvenance provenance = NLProvenance::FittedModular;
    std::map<std::pair<std::int64_t, std::int64_t>, Rat> values;  // (h,d)

    bool has(std::int64_t h, std::int64_t d) const { return values.count({h, d}) > 0; }
    const Rat& at(std::int64_t h, std::int64_t d) const;
};

// support bound from disc >= 0: NL_{h,d} = 0 for h > floor(d^2/(2l)) + 1
std::int64_t h_top(std::int64_t l, std::int64_t d);

// table over h = 0..h_top(d), d = 1..dmax; scale 2 gives the doubled pencil
NLTable nl_from_form(const VVForm& form, std::int64_t dmax, const Rat& scale,
                     NLProvenance provenance);

// n_{g,d} = sum_{h=g}^{h_top(d)} r_{g,h} NL_{h,d}
Rat theorem1_genus(int g, const NLTable& nl, const RTable& r, std::int64_t d);

struct ThetaFit {
    std::array<Rat, 22> monomial;  // coefficients of A^{21-k} B^k, k = 0..21
    FracSeries series;             // the scalar q-expansion
};

// solves for the quartic form as a degree-21 polynomial in A, B from genus-0
// BPS data of the doubled pencil; equations are the degree relations for
// d = 1..dmax, the vanishing of coefficients at exponents not congruent to
// 0, 1/8 or 1/2 (mod 1), and the normalization from the Hodge degree.
// Throws on a rank-deficient (raise dmax) or inconsistent system.
ThetaFit fit_theta_from_gw(const BPSTable& bps, int dmax);

// the nodal correction 108 sum_{n>0} q^{n^2}
FracSeries psi_series(int trunc);

// degree of the projectivized divisor: theta[disc/8] - psi[disc/8]; the
// discriminant must be positive
Rat corollary2_degree(std::int64_t h, std::int64_t d, const FracSeries& theta);

struct HarveyMooreReport {
    bool realized_match = true;    // -2/q, the constant, and every n_{0,d} slot
    bool support_vanishes = true;  // unrealized eighth-integer exponents are zero
    bool pass = true;              // both of the above
    std::string first_discrepancy;
    int checked_exponents = 0;
};

// compares -2/q + 168 + sum n_{0,d} q^{d^2/8} with 2*theta/Delta at every
// eighth-integer exponent in [-1, dmax^2/8]. The realized slots and the
// vanishing of the unrealized ones are reported separately: the former is
// the degree dictionary, the latter fails (first at q^1, value 158436)
HarveyMooreReport harvey_moore_check(const FracSeries& theta, const BPSTable& bps, int dmax);

}  // namespace nlk3
