#pragma once

// Closed-form evaluation of the Noether-Lefschetz Picard rank of the moduli
// space of degree-l quasi-polarized K3 surfaces, via quadratic Gauss sums.

#include <complex>
#include <cstdint>

namespace nlk3 {

// G(a,b) = sum_{k=0}^{b-1} e^{-2 pi i a k^2 / b}
std::complex<double> gauss_sum(std::int64_t a, std::int64_t b);

struct BruinierResult {
    int rank;         // nearest integer
    double value;     // raw formula value
    double residual;  // distance to the nearest integer
};

BruinierResult bruinier_rank_full(std::int64_t l);

// rounded value; throws std::runtime_error if the residual exceeds 1e-6
int bruinier_rank(std::int64_t l);

}  // namespace nlk3
