#pragma once

// Truncated Laurent-type series in q^(1/N) with exact rational coefficients.
//
// A FracSeries is an exact element of Q((q^(1/N))) known on the window
// (-inf, truncation): exponents not stored are zero *below* the truncation,
// and reading at or beyond the truncation is an error, never a silent zero.

#include <nlk3/rational.hpp>

#include <cstdint>
#include <map>
#include <optional>

namespace nlk3 {

class FracSeries {
public:
    // zero series with the given grading denominator and truncation order
    FracSeries(std::int64_t grading, Rat trunc);

    static FracSeries constant(const Rat& value, const Rat& trunc);
    static FracSeries monomial(std::int64_t grading, const Rat& exponent, const Rat& coeff,
                               const Rat& trunc);

    std::int64_t grading() const { return n_; }
    const Rat& truncation() const { return trunc_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t term_count() const { return c_.size(); }

    // exponent of the lowest stored term, if any
    std::optional<Rat> min_exponent() const;

    // stored value or 0; throws std::out_of_range for e >= truncation
    Rat coeff(const Rat& e) const;

    // inserts/overwrites one term, dropping it if value is zero or e >= truncation
    void set_coeff(const Rat& e, const Rat& v);

    // same series on a finer grid; new_grading must be a multiple of grading()
    FracSeries rescaled(std::int64_t new_grading) const;

    // copy with the truncation lowered to new_trunc (no-op if already lower)
    FracSeries truncated(const Rat& new_trunc) const;

    FracSeries operator-() const;
    friend FracSeries operator+(const FracSeries& a, const FracSeries& b);
    friend FracSeries operator-(const FracSeries& a, const FracSeries& b);
    friend FracSeries operator*(const FracSeries& a, const FracSeries& b);
    FracSeries operator*(const Rat& s) const;

    // multiplicative inverse up to truncation; requires a unit (nonzero series)
    FracSeries inverse() const;

    // the operator q d/dq: each coefficient is scaled by its exponent
    FracSeries q_derivative() const;

    FracSeries pow(unsigned e) const;

    // mathematical equality: same coefficients and truncation, gradings aligned
    bool operator==(const FracSeries& o) const;

    // raw access for serialization / evaluation; keys are exponent numerators over grading()
    const std::map<std::int64_t, Rat>& terms() const { return c_; }
    Rat exponent_at(std::int64_t key) const { return make_rat(key, n_); }

private:
    std::int64_t key_of(const Rat& e) const;  // throws if e is off the 1/N grid
    bool on_grid(const Rat& e) const;
    bool below_trunc(std::int64_t key) const;

    std::int64_t n_;
    Rat trunc_;
    std::map<std::int64_t, Rat> c_;
};

// Delta(q) = q prod_{n>=1} (1-q^n)^24, exact to order trunc
FracSeries eta24(int trunc);

}  // namespace nlk3
