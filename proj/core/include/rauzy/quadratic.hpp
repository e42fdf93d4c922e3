#pragma once

#include <string>

#include "rauzy/rational.hpp"

namespace rauzy {

/// Exact element of a real quadratic field: value = a + b*sqrt(d) with
/// rational a, b and a square-free integer d > 1. Canonical form folds
/// square factors of d into b and normalizes rational values to d = 1,
/// so equality of values is equality of representations.
class Quadratic {
public:
    Quadratic() : a_(0), b_(0), d_(1) {}
    Quadratic(Rational rational_part) : a_(std::move(rational_part)), b_(0), d_(1) {}
    Quadratic(long n) : a_(make_rational(n)), b_(0), d_(1) {}
    Quadratic(Rational a, Rational b, long d);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coefficient() const { return b_; }
    long radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return b_ == 0 && a_ == 0; }

    /// -1, 0, +1 by the real value; exact.
    int sign() const;

    Quadratic operator-() const;
    Quadratic conjugate() const;  // a - b*sqrt(d)

    friend Quadratic operator+(const Quadratic& x, const Quadratic& y);
    friend Quadratic operator-(const Quadratic& x, const Quadratic& y);
    friend Quadratic operator*(const Quadratic& x, const Quadratic& y);
    friend Quadratic operator/(const Quadratic& x, const Quadratic& y);

    Quadratic& operator+=(const Quadratic& y) { return *this = *this + y; }
    Quadratic& operator-=(const Quadratic& y) { return *this = *this - y; }
    Quadratic& operator*=(const Quadratic& y) { return *this = *this * y; }
    Quadratic& operator/=(const Quadratic& y) { return *this = *this / y; }

    friend bool operator==(const Quadratic& x, const Quadratic& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Quadratic& x, const Quadratic& y) { return !(x == y); }
    friend bool operator<(const Quadratic& x, const Quadratic& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Quadratic& x, const Quadratic& y) { return y < x; }
    friend bool operator<=(const Quadratic& x, const Quadratic& y) { return !(y < x); }
    friend bool operator>=(const Quadratic& x, const Quadratic& y) { return !(x < y); }

    Integer floor() const;
    double to_double() const;

    /// Renders "p/q" for rationals, "(a+b√d)" otherwise.
    std::string str() const;

    /// Compact triple "(a,b,d)"; inverse of parse_quadratic.
    std::string triple() const;

private:
    void canonicalize();
    static void require_same_field(const Quadratic& x, const Quadratic& y);

    Rational a_;
    Rational b_;
    long d_;
};

/// Accepts "p/q", decimals, or "(a,b,d)" triples.
Quadratic parse_quadratic(const std::string& text);

}  // namespace rauzy
