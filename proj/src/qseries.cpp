#include <nlk3/qseries.hpp>

#include <numeric>
#include <stdexcept>

namespace nlk3 {

namespace {
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

// smallest integer L with: key < L  <=>  key/n < trunc
std::int64_t key_limit(const Rat& trunc, std::int64_t n) {
    Rat b = trunc * n;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
    if (!fl.fits_slong_p()) return b > 0 ? INT64_MAX : INT64_MIN;
    std::int64_t f = fl.get_si();
    return is_integer(b) ? f : f + 1;
}
}  // namespace

FracSeries::FracSeries(std::int64_t grading, Rat trunc) : n_(grading), trunc_(std::move(trunc)) {
    if (n_ <= 0) throw std::invalid_argument("FracSeries: grading denominator must be positive");
}

FracSeries FracSeries::constant(const Rat& value, const Rat& trunc) {
    FracSeries s(1, trunc);
    s.set_coeff(Rat(0), value);
    return s;
}

FracSeries FracSeries::monomial(std::int64_t grading, const Rat& exponent, const Rat& coeff,
                                const Rat& trunc) {
    FracSeries s(grading, trunc);
    s.set_coeff(exponent, coeff);
    return s;
}

bool FracSeries::on_grid(const Rat& e) const {
    Rat scaled = e * n_;
    return is_integer(scaled);
}

std::int64_t FracSeries::key_of(const Rat& e) const {
    Rat scaled = e * n_;
    if (!is_integer(scaled)) throw std::invalid_argument("FracSeries: exponent off the 1/N grid");
    return to_int64(scaled.get_num());
}

bool FracSeries::below_trunc(std::int64_t key) const { return key < key_limit(trunc_, n_); }

std::optional<Rat> FracSeries::min_exponent() const {
    if (c_.empty()) return std::nullopt;
    return exponent_at(c_.begin()->first);
}

Rat FracSeries::coeff(const Rat& e) const {
    if (e >= trunc_)
        throw std::out_of_range("FracSeries::coeff: exponent " + rat_str(e) +
                                " is at or beyond truncation " + rat_str(trunc_));
    if (!on_grid(e)) return Rat(0);
    auto it = c_.find(key_of(e));
    return it == c_.end() ? Rat(0) : it->second;
}

void FracSeries::set_coeff(const Rat& e, const Rat& v) {
    std::int64_t k = key_of(e);
    if (!below_trunc(k)) return;
    if (v == 0)
        c_.erase(k);
    else
        c_[k] = v;
}

FracSeries FracSeries::rescaled(std::int64_t new_grading) const {
    if (new_grading % n_ != 0)
        throw std::invalid_argument("FracSeries::rescaled: new grading must be a multiple");
    std::int64_t f = new_grading / n_;
    FracSeries r(new_grading, trunc_);
    for (const auto& [k, v] : c_) r.c_[k * f] = v;
    return r;
}

FracSeries FracSeries::truncated(const Rat& new_trunc) const {
    if (new_trunc >= trunc_) return *this;
    FracSeries r(n_, new_trunc);
    std::int64_t lim = key_limit(new_trunc, n_);
    for (const auto& [k, v] : c_) {
        if (k >= lim) break;
        r.c_[k] = v;
    }
    return r;
}

FracSeries FracSeries::operator-() const {
    FracSeries r(n_, trunc_);
    for (const auto& [k, v] : c_) r.c_[k] = -v;
    return r;
}

FracSeries operator+(const FracSeries& a, const FracSeries& b) {
    std::int64_t n = lcm64(a.n_, b.n_);
    FracSeries x = a.rescaled(n), y = b.rescaled(n);
    FracSeries r(n, std::min(a.trunc_, b.trunc_));
    std::int64_t lim = key_limit(r.trunc_, n);
    for (const auto& [k, v] : x.c_)
        if (k < lim) r.c_[k] = v;
    for (const auto& [k, v] : y.c_) {
        if (k >= lim) break;
        auto [it, fresh] = r.c_.try_emplace(k, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) r.c_.erase(it);
        }
    }
    return r;
}

FracSeries operator-(const FracSeries& a, const FracSeries& b) { return a + (-b); }

FracSeries operator*(const FracSeries& a, const FracSeries& b) {
    std::int64_t n = lcm64(a.n_, b.n_);
    FracSeries x = a.rescaled(n), y = b.rescaled(n);
    // a = O(q^{ma}) exactly known below Ta, so the product is known below
    // min(Ta + mb, Tb + ma); an empty factor contributes its truncation as ma.
    Rat ma = x.c_.empty() ? x.trunc_ : x.exponent_at(x.c_.begin()->first);
    Rat mb = y.c_.empty() ? y.trunc_ : y.exponent_at(y.c_.begin()->first);
    FracSeries r(n, std::min(x.trunc_ + mb, y.trunc_ + ma));
    std::int64_t lim = key_limit(r.trunc_, n);
    for (const auto& [ka, va] : x.c_)
        for (const auto& [kb, vb] : y.c_) {
            std::int64_t k = ka + kb;
            if (k >= lim) break;  // y iterates in ascending key order
            Rat prod = va * vb;
            auto [it, fresh] = r.c_.try_emplace(k, prod);
            if (!fresh) it->second += prod;
        }
    for (auto it = r.c_.begin(); it != r.c_.end();)
        it = (it->second == 0) ? r.c_.erase(it) : std::next(it);
    return r;
}

FracSeries FracSeries::operator*(const Rat& s) const {
    FracSeries r(n_, trunc_);
    if (s != 0)
        for (const auto& [k, v] : c_) r.c_[k] = v * s;
    return r;
}

FracSeries FracSeries::inverse() const {
    if (c_.empty()) throw std::domain_error("FracSeries::inverse: series is zero up to truncation");
    std::int64_t k0 = c_.begin()->first;
    const Rat& c0 = c_.begin()->second;
    Rat e0 = exponent_at(k0);
    // self = c0 q^{e0} (1 + u) with u = O(q^{delta}), delta > 0
    Rat rel_order = trunc_ - e0;  // u and (1+u)^{-1} are known below this relative order
    FracSeries u(n_, rel_order);
    for (auto it = std::next(c_.begin()); it != c_.end(); ++it)
        u.set_coeff(exponent_at(it->first) - e0, it->second / c0);
    FracSeries geom = FracSeries::constant(1, rel_order);
    FracSeries term = FracSeries::constant(1, rel_order);
    FracSeries minus_u = -u;
    while (!term.is_zero() && !u.is_zero()) {
        // the window is fixed, so the growing leading exponent empties term
        term = (term * minus_u).truncated(rel_order);
        if (term.is_zero()) break;
        geom = geom + term;
    }
    FracSeries r(n_, trunc_ - 2 * e0);
    for (const auto& [k, v] : geom.c_) r.set_coeff(geom.exponent_at(k) - e0, v / c0);
    return r;
}

FracSeries FracSeries::q_derivative() const {
    FracSeries r(n_, trunc_);
    for (const auto& [k, v] : c_) {
        Rat scaled = v * make_rat(k, n_);
        if (scaled != 0) r.c_[k] = scaled;
    }
    return r;
}

FracSeries FracSeries::pow(unsigned e) const {
    FracSeries r = FracSeries::constant(1, trunc_);
    FracSeries base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

bool FracSeries::operator==(const FracSeries& o) const {
    if (trunc_ != o.trunc_) return false;
    std::int64_t n = lcm64(n_, o.n_);
    return rescaled(n).c_ == o.rescaled(n).c_;
}

FracSeries eta24(int trunc) {
    if (trunc < 1) throw std::invalid_argument("eta24: trunc must be >= 1");
    Rat T(trunc);
    FracSeries r = FracSeries::monomial(1, Rat(1), Rat(1), T);
    for (int n = 1; n < trunc; ++n) {
        FracSeries f = FracSeries::constant(1, T);
        f.set_coeff(Rat(n), Rat(-1));
        r = r * f.pow(24);
    }
    return r;
}

}  // namespace nlk3
