#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nlk3 {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

// "num/den" with den omitted when 1; matches mpq_class canonical form
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int binomial(const Int& n, unsigned k) {
    // falling factorial / k!, valid for any integer n
    Int num = 1;
    for (unsigned i = 0; i < k; ++i) num *= n - static_cast<long>(i);
    return num / factorial(k);
}

// generalized binomial C(x, k) for rational x, via the falling factorial
inline Rat gbinomial(const Rat& x, unsigned k) {
    Rat num = 1;
    for (unsigned i = 0; i < k; ++i) num *= x - static_cast<long>(i);
    return num / Rat(factorial(k));
}

inline std::int64_t to_int64(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("to_int64: value out of range");
    return v.get_si();
}

}  // namespace nlk3
