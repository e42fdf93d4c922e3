#pragma once

#include <gmpxx.h>

#include <string>

#include "rauzy/errors.hpp"

namespace rauzy {

/// Exact rational arithmetic. GMP keeps values canonical as long as every
/// entry point canonicalizes, so construction goes through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// floor(q) as an integer.
inline Integer floor_to_integer(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

/// Parses "p", "-p/q" or decimal "0.25" (exact) into a Rational.
Rational parse_rational(const std::string& text);

/// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace rauzy
