#pragma once

// Genus-0 mirror symmetry for the (4,2) hypersurface in P3 x P1:
// hypergeometric series, the mirror map and its inverse, the potential,
// and extraction of fiber-class invariants.

#include <nlk3/bpsk3.hpp>
#include <nlk3/rational.hpp>

#include <array>
#include <utility>

namespace nlk3 {

// dense power series in q1, q2 truncated beyond orders (d1max, d2max)
class QQ2 {
public:
    QQ2() : QQ2(0, 0) {}
    QQ2(int d1max, int d2max);

    int d1max() const { return d1_; }
    int d2max() const { return d2_; }
    const Rat& at(int d1, int d2) const { return v_[idx(d1, d2)]; }
    Rat& at(int d1, int d2) { return v_[idx(d1, d2)]; }
    bool is_zero() const;

    friend QQ2 operator+(const QQ2& a, const QQ2& b);
    friend QQ2 operator-(const QQ2& a, const QQ2& b);
    friend QQ2 operator*(const QQ2& a, const QQ2& b);
    QQ2 operator*(const Rat& s) const;

    QQ2 inverse() const;        // needs a unit constant term
    QQ2 exponential() const;    // needs zero constant term
    // substitute q1 -> s1, q2 -> s2 (both with zero constant term)
    QQ2 compose(const QQ2& s1, const QQ2& s2) const;

private:
    std::size_t idx(int d1, int d2) const;
    int d1_, d2_;
    std::vector<Rat> v_;
};

// polynomial in t1 (degree <= 3) and t2 (degree <= 1) with QQ2 coefficients
struct TPoly {
    std::array<std::array<QQ2, 2>, 4> a;

    static TPoly zero(int d1max, int d2max);
    friend TPoly operator+(const TPoly& x, const TPoly& y);
    friend TPoly operator-(const TPoly& x, const TPoly& y);
    friend TPoly operator*(const TPoly& x, const TPoly& y);
    TPoly operator*(const Rat& s) const;
    TPoly scaled_by(const QQ2& q) const;  // multiply every t-coefficient
    bool t_free() const;                  // no term of positive t-degree
};

// the joint I-function: one t-polynomial block per H1^i H2^j
class MirrorSeries {
public:
    MirrorSeries(int d1max, int d2max);

    int d1max() const { return d1_; }
    int d2max() const { return d2_; }
    const TPoly& block(int i, int j) const { return blocks_.at(i).at(j); }
    TPoly& block(int i, int j) { return blocks_.at(i).at(j); }
    // coefficient of H1^i H2^j t1^a t2^b q1^d1 q2^d2
    Rat coefficient(int i, int j, int a, int b, int d1, int d2) const;

private:
    int d1_, d2_;
    std::array<std::array<TPoly, 2>, 4> blocks_;
};

// F = sum q1^d1 q2^d2 (4d1+2d2)! / ((d1!)^4 (d2!)^2)
QQ2 hyper_F(int d1max, int d2max);
// same with the harmonic factor sum_{r=1}^{a d1 + b d2} 1/r
QQ2 hyper_G(int a, int b, int d1max, int d2max);

MirrorSeries i_functions(int d1max, int d2max);

struct MirrorMap {
    QQ2 corr1, corr2;  // T_i = t_i + corr_i(q), zero constant term
    QQ2 unit1, unit2;  // e^{T_i} = q_i * unit_i(q), unit constant term 1
};
MirrorMap mirror_map(int d1max, int d2max);

// inverse change of variables: given Q_i = q_i * unit_i(q), returns series
// u_i with q_i = Q_i * u_i(Q); round-trip identity is verified internally
std::pair<QQ2, QQ2> invert_map(const QQ2& unit1, const QQ2& unit2);

struct Potential {
    QQ2 instanton;   // sum N_{0,(d1,d2)} Q1^d1 Q2^d2, classical part removed
    MirrorMap map;
    QQ2 q1_of_Q, q2_of_Q;  // full inverse series q_i(Q)
};

// evaluates the hypergeometric expression for the potential, changes
// variables to Q, subtracts the classical polynomial and checks that all
// log terms cancel; throws std::runtime_error if they do not
Potential potential(int d1max, int d2max);

// genus-0 fiber-class BPS numbers from the Q2^0 row of the potential
BPSTable fiber_bps(int dmax, int d2max = 2);

}  // namespace nlk3
