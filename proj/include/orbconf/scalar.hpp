#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include "orbconf/error.hpp"

namespace orbconf {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) {
    Rational c = x;
    c.canonicalize();
    return c.get_str();
}

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(std::int64_t x) { return x == 0; }

// Parses "12", "-3" or "7/4"; the rational form is only accepted for Rational.
template <typename Scalar>
Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty scalar");
    if constexpr (std::is_same_v<Scalar, Rational>) {
        Rational r;
        if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
        if (sgn(r.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } else {
        Integer z;
        if (z.set_str(s, 10) != 0) throw ParseError("bad integer literal '" + s + "'");
        return Scalar(z);
    }
}

// Exact C(n, k).
inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace orbconf
