#include <nlk3/picrank.hpp>

#include <cmath>
#include <stdexcept>

namespace nlk3 {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;  // 2 pi
}

std::complex<double> gauss_sum(std::int64_t a, std::int64_t b) {
    if (b < 1) throw std::invalid_argument("gauss_sum: b >= 1");
    std::complex<double> acc = 0.0;
    for (std::int64_t k = 0; k < b; ++k) {
        // reduce a k^2 mod b exactly before going to doubles
        std::int64_t m = ((a % b) * ((k * k) % b)) % b;
        acc += std::polar(1.0, -kTau * static_cast<double>(m) / static_cast<double>(b));
    }
    return acc;
}

BruinierResult bruinier_rank_full(std::int64_t l) {
    if (l < 2 || l % 2 != 0) throw std::invalid_argument("bruinier_rank: even l >= 2");
    double ld = static_cast<double>(l);
    double v = 1.0 + 31.0 / 24.0 + 31.0 / 48.0 * ld;
    v -= gauss_sum(2, 2 * l).real() / (8.0 * std::sqrt(ld));
    std::complex<double> phase = std::polar(1.0, -kTau * 19.0 / 24.0);
    v -= (phase * (gauss_sum(1, 2 * l) + gauss_sum(-3, 2 * l))).real() /
         (6.0 * std::sqrt(3.0 * ld));
    // fractional parts and the count of integral k^2/(2l), both exact
    std::int64_t frac_num = 0;  // sum of (k^2 mod 2l), over a common denominator 2l
    std::int64_t integral_count = 0;
    for (std::int64_t k = 0; k <= l / 2; ++k) {
        std::int64_t rem = (k * k) % (2 * l);
        frac_num += rem;
        if (rem == 0) ++integral_count;
    }
    v -= static_cast<double>(frac_num) / (2.0 * ld);
    v -= static_cast<double>(integral_count);
    double nearest = std::round(v);
    return {static_cast<int>(nearest), v, std::fabs(v - nearest)};
}

int bruinier_rank(std::int64_t l) {
    BruinierResult r = bruinier_rank_full(l);
    if (r.residual >= 1e-6)
        throw std::runtime_error("bruinier_rank: value " + std::to_string(r.value) +
                                 " is not near an integer (formula transcription error?)");
    return r.rank;
}

}  // namespace nlk3
