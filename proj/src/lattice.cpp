#include <nlk3/lattice.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nlk3 {

std::int64_t LatticePair::coset() const {
    std::int64_t r = ((d % l) + l) % l;
    return std::min(r, l - r);
}

std::int64_t disc(std::int64_t l, std::int64_t h, std::int64_t d) {
    if (l <= 0 || l % 2 != 0) throw std::invalid_argument("disc: l must be even positive");
    return LatticePair{l, h, d}.disc();
}

namespace {

__extension__ using I128 = __int128;

// extended gcd: g = a*x + b*y, g >= 0
std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    std::int64_t x1, y1;
    std::int64_t g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// exact floor square root for nonnegative __int128
I128 isqrt128(I128 v) {
    if (v < 0) throw std::domain_error("isqrt128: negative");
    I128 r = static_cast<I128>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// integer roots of A t^2 + B t + C = 0
std::vector<I128> integer_roots(I128 A, I128 B, I128 C) {
    std::vector<I128> roots;
    if (A == 0) {
        if (B == 0) {
            if (C == 0)
                throw DegenerateLattice("mu: infinitely many solutions (isotropic direction)");
            return roots;
        }
        if (C % B == 0) roots.push_back(-C / B);
        return roots;
    }
    I128 disc = B * B - 4 * A * C;
    if (disc < 0) return roots;
    I128 s = isqrt128(disc);
    if (s * s != disc) return roots;
    for (I128 num : {-B + s, -B - s}) {
        if (num % (2 * A) == 0) {
            I128 t = num / (2 * A);
            if (roots.empty() || roots.front() != t) roots.push_back(t);
        }
    }
    return roots;
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> mu_solutions(std::int64_t l, std::int64_t h,
                                                                std::int64_t d, const Gram& gram) {
    if (gram.a != l) throw std::invalid_argument("mu: gram[0][0] must equal l");
    if (gram.a % 2 != 0 || gram.c % 2 != 0)
        throw std::invalid_argument("mu: lattice must be even (even diagonal)");
    std::vector<std::pair<std::int64_t, std::int64_t>> sols;
    // linear condition: l*x + b*y = d, solvable iff gcd(l, b) | d
    std::int64_t u, v;
    std::int64_t g = egcd(gram.a, gram.b, u, v);
    if (d % g != 0) return sols;
    std::int64_t x0 = u * (d / g), y0 = v * (d / g);
    std::int64_t wx = gram.b / g, wy = -gram.a / g;
    // quadratic condition along the solution line: A t^2 + B t + C = 0
    I128 A = gram.form(wx, wy);
    I128 B = 2 * (I128(gram.a) * x0 * wx + I128(gram.b) * (I128(x0) * wy + I128(y0) * wx) +
                  I128(gram.c) * y0 * wy);
    I128 C = I128(gram.a) * x0 * x0 + 2 * I128(gram.b) * x0 * y0 + I128(gram.c) * y0 * y0 -
             (2 * I128(h) - 2);
    for (I128 t : integer_roots(A, B, C)) {
        I128 x = x0 + t * wx, y = y0 + t * wy;
        if (x == 0 && y == 0) continue;  // beta = 0 is not an extra class
        auto fits = [](I128 z) { return z >= INT64_MIN && z <= INT64_MAX; };
        if (!fits(x) || !fits(y)) throw std::overflow_error("mu: solution exceeds 64 bits");
        sols.emplace_back(static_cast<std::int64_t>(x), static_cast<std::int64_t>(y));
    }
    return sols;
}

int mu(std::int64_t l, std::int64_t h, std::int64_t d, const Gram& gram) {
    return static_cast<int>(mu_solutions(l, h, d, gram).size());
}

int mu_refined(std::int64_t m, std::int64_t l, std::int64_t h, std::int64_t d, const Gram& gram) {
    if (m < 1) throw std::invalid_argument("mu_refined: m must be >= 1");
    int count = 0;
    for (const auto& [x, y] : mu_solutions(l, h, d, gram))
        if (std::gcd(std::abs(x), std::abs(y)) == m) ++count;
    return count;
}

std::int64_t castelnuovo_max_square(std::int64_t deg) {
    if (deg < 1) throw std::invalid_argument("castelnuovo_max_square: deg must be >= 1");
    return (deg - 1) * (deg - 2) - 2;  // 2*C(deg-1,2) - 2
}

std::vector<std::pair<Rat, int>> vanishing_constraints(std::int64_t l) {
    if (l == 2) return {};
    if (l != 4 && l != 6 && l != 8)
        throw std::invalid_argument("vanishing_constraints: l must be in {2,4,6,8}");
    // lattices [[l,d],[d,0]] for d = 1, 2 have disc d^2, exponent d^2/(2l)
    return {{make_rat(1, 2 * l), 1}, {make_rat(4, 2 * l), 2}};
}

}  // namespace nlk3
