#pragma once

// Rank-2 polarized lattice arithmetic: discriminants, cosets, multiplicity
// counts and their divisibility refinements, Castelnuovo vanishing slots.

#include <nlk3/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nlk3 {

// Symmetric Gram matrix [[a, b], [b, c]] of an even rank-2 lattice, with the
// distinguished vector v = (1, 0); so a = <v,v> = l.
struct Gram {
    std::int64_t a, b, c;

    std::int64_t det() const { return a * c - b * b; }
    std::int64_t form(std::int64_t x, std::int64_t y) const {
        return a * x * x + 2 * b * x * y + c * y * y;
    }
};

struct LatticePair {
    std::int64_t l;  // even positive polarization degree
    std::int64_t h;
    std::int64_t d;

    // discriminant d^2 - 2lh + 2l = -det of [[l, d], [d, 2h-2]]
    std::int64_t disc() const { return d * d - 2 * l * h + 2 * l; }
    // representative of d in (Z/lZ)/± : min(d mod l, l - d mod l)
    std::int64_t coset() const;
};

std::int64_t disc(std::int64_t l, std::int64_t h, std::int64_t d);

// raised by mu when the counting problem degenerates to infinitely many
// solutions (isotropic direction); callers must use the divisor-coefficient
// path in that regime
struct DegenerateLattice : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// the solutions beta = (x, y) themselves, in the basis of the lattice
std::vector<std::pair<std::int64_t, std::int64_t>> mu_solutions(std::int64_t l, std::int64_t h,
                                                                std::int64_t d, const Gram& gram);

// number of beta in the lattice (gram, v=(1,0)) with <beta,beta> = 2h-2 and
// <beta,v> = d; always 0, 1 or 2 for nondegenerate inputs
int mu(std::int64_t l, std::int64_t h, std::int64_t d, const Gram& gram);

// same count restricted to beta of divisibility (coordinate content) m
int mu_refined(std::int64_t m, std::int64_t l, std::int64_t h, std::int64_t d, const Gram& gram);

// maximal <beta,beta> allowed by Castelnuovo's bound for L.beta = deg:
// 2*C(deg-1, 2) - 2
std::int64_t castelnuovo_max_square(std::int64_t deg);

// Castelnuovo vanishing slots (exponent, component) for the fits:
// d = 1, 2 against the lattices [[l,d],[d,0]], exponent d^2/(2l);
// empty for l = 2 (the degree-2 polarization is not very ample)
std::vector<std::pair<Rat, int>> vanishing_constraints(std::int64_t l);

}  // namespace nlk3
