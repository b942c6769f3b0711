#pragma once

// Classical theta and Eisenstein series, Rankin-Cohen brackets, Siegel theta
// vectors, Weil representation matrices, and exact fitting of vector-valued
// forms of weight 21/2 against classical constraints.

#include <nlk3/qseries.hpp>

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace nlk3 {

// Vector-valued modular form for the (dual) Weil representation of Z/lZ.
// Only the orbit representatives r = 0..l/2 are stored; the full vector is
// reconstructed through the redundancy component(r) = component(l-r).
struct VVForm {
    std::int64_t level = 0;
    std::int64_t weight_num2 = 0;  // weight, as a numerator over 2
    std::vector<FracSeries> components;

    int orbit_count() const { return static_cast<int>(components.size()); }
    // component for any residue r (reduced mod level, then reflected)
    const FracSeries& component(std::int64_t r) const;
};

// A = sum q^{n^2/8} and B = sum (-1)^n q^{n^2/8}, weight 1/2, grading 8
FracSeries theta_A(int trunc);
FracSeries theta_B(int trunc);

// U = sum q^{n^2/4} and V = sum (-1)^n q^{n^2/4}, grading 4
std::pair<FracSeries, FracSeries> theta_UV(int trunc);

// exact k-th Bernoulli number
Rat bernoulli(int k);

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, even weight k >= 4
FracSeries eisenstein(int k, int trunc);

// n-th Rankin-Cohen bracket of forms of weights k1, k2 (half-integers allowed)
FracSeries rc_bracket(const FracSeries& f, const Rat& k1, const FracSeries& g, const Rat& k2,
                      int n);
// componentwise bracket against a scalar form
VVForm rc_bracket(const VVForm& f, const Rat& k1, const FracSeries& g, const Rat& k2, int n);

// Siegel theta vector: component i is sum_{s in Z} q^{(ls+i)^2/(2l)}, weight 1/2
VVForm siegel_theta(std::int64_t l, int trunc);

// basis F^l_n = [theta^(l), E_{10-2n}]_n; n = 0..l/2 for l = 2,4,6 and 0..3 for l = 8
std::vector<VVForm> basis_forms(std::int64_t l, int trunc);

struct FitConstraint {
    Rat exponent;
    int component;
    Rat value;
};

struct FitResult {
    std::vector<Rat> coefficients;  // c_n against basis_forms(l)
    VVForm form;
};

// unique exact linear combination of the basis meeting the constraints;
// throws std::runtime_error on a singular or inconsistent system
FitResult fit(std::int64_t l, const std::vector<FitConstraint>& constraints, int trunc);

// sum of the orbit-representative components, one per orbit
FracSeries scalarize(const VVForm& f);

struct NLValue {
    Rat value;
    bool hodge_vanishing = false;  // set when the discriminant is negative
};

// NL_{h,d} = component_{d mod l}[disc_l(h,d)/(2l)]; 0 with the flag set when
// the discriminant is negative; throws beyond truncation
NLValue nl_lookup(const VVForm& f, std::int64_t h, std::int64_t d);

// exact check of the T-grading law: component r supported on r^2/(2l) + Z
bool grading_invariant_holds(const VVForm& f);

using CMat = std::vector<std::vector<std::complex<double>>>;

struct WeilRep {
    CMat t;  // diagonal
    CMat s;
};

// rho_l on C[Z/lZ] (signature (2,19) conventions) and its dual (conjugate)
WeilRep weil_rep(std::int64_t l);
WeilRep weil_rep_dual(std::int64_t l);

// max componentwise residual of f(-1/tau) = sqrt(tau)^{2k} rho*(S) f(tau)
// over the sample points; diagnostic only (double precision)
double numeric_modularity_check(const VVForm& f, const std::vector<std::complex<double>>& taus);

// named preset families (Lefschetz pencils of the classical constructions)
struct Family {
    std::string name;
    std::int64_t l;
    std::vector<FitConstraint> constraints;
};

const std::vector<Family>& preset_families();
const Family& preset_family(const std::string& name);

}  // namespace nlk3
