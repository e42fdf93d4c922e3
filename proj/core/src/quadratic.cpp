#include "rauzy/quadratic.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace rauzy {

namespace {

// Largest s with s^2 | d, by trial division; d is small (a radicand).
long square_part(long d) {
    long s = 1;
    for (long p = 2; p * p <= d; ++p) {
        while (d % (p * p) == 0) {
            d /= p * p;
            s *= p;
        }
    }
    return s;
}

}  // namespace

Quadratic::Quadratic(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ <= 0) throw Error("radicand must be positive");
    canonicalize();
}

void Quadratic::canonicalize() {
    if (d_ > 1) {
        long s = square_part(d_);
        if (s > 1) {
            d_ /= s * s;
            b_ *= s;
        }
    }
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0) d_ = 1;
}

void Quadratic::require_same_field(const Quadratic& x, const Quadratic& y) {
    if (x.b_ != 0 && y.b_ != 0 && x.d_ != y.d_)
        throw Error("mixed quadratic fields: sqrt(" + std::to_string(x.d_) + ") vs sqrt(" +
                    std::to_string(y.d_) + ")");
}

int Quadratic::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b*sqrt(d) have opposite signs: compare a^2 vs b^2*d.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * d_;
    int c = cmp(lhs, rhs);
    return c == 0 ? 0 : (c > 0 ? sa : sb);
}

Quadratic Quadratic::operator-() const {
    Quadratic r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Quadratic Quadratic::conjugate() const {
    Quadratic r = *this;
    r.b_ = -r.b_;
    return r;
}

Quadratic operator+(const Quadratic& x, const Quadratic& y) {
    Quadratic::require_same_field(x, y);
    Quadratic r;
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    r.d_ = x.b_ != 0 ? x.d_ : y.d_;
    r.canonicalize();
    return r;
}

Quadratic operator-(const Quadratic& x, const Quadratic& y) {
    return x + (-y);
}

Quadratic operator*(const Quadratic& x, const Quadratic& y) {
    Quadratic::require_same_field(x, y);
    long d = x.b_ != 0 ? x.d_ : y.d_;
    Quadratic r;
    r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * d;
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    r.d_ = d;
    r.canonicalize();
    return r;
}

Quadratic operator/(const Quadratic& x, const Quadratic& y) {
    if (y.is_zero()) throw Error("division by zero");
    if (y.is_rational()) {
        Quadratic r = x;
        r.a_ /= y.a_;
        r.b_ /= y.a_;
        return r;
    }
    // 1/(a+b√d) = (a-b√d)/(a²-b²d)
    Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * y.d_;
    return x * Quadratic(y.a_ / norm, -y.b_ / norm, y.d_);
}

Integer Quadratic::floor() const {
    // Double estimate, then exact adjustment; the estimate is off by at
    // most a few units even near representation limits.
    double approx = to_double();
    Integer m(std::floor(approx));
    auto leq_value = [this](const Integer& k) {  // k <= value?
        Quadratic diff = *this - Quadratic(make_rational(k, Integer(1)));
        return diff.sign() >= 0;
    };
    while (!leq_value(m)) m -= 1;
    while (leq_value(m + 1)) m += 1;
    return m;
}

double Quadratic::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string Quadratic::str() const {
    if (is_rational()) return to_string(a_);
    std::string out = "(" + to_string(a_);
    out += sgn(b_) < 0 ? "-" : "+";
    Rational ab = abs(b_);
    out += to_string(ab);
    out += "√" + std::to_string(d_) + ")";
    return out;
}

std::string Quadratic::triple() const {
    return "(" + to_string(a_) + "," + to_string(b_) + "," + std::to_string(d_) + ")";
}

Quadratic parse_quadratic(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty number literal");
    if (s.front() != '(') return Quadratic(parse_rational(s));
    if (s.back() != ')') throw ParseError("unterminated triple: " + text);
    std::string body = s.substr(1, s.size() - 2);
    auto c1 = body.find(',');
    auto c2 = body.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos || body.find(',', c2 + 1) != std::string::npos)
        throw ParseError("quadratic triple must be (a,b,d): " + text);
    Rational a = parse_rational(body.substr(0, c1));
    Rational b = parse_rational(body.substr(c1 + 1, c2 - c1 - 1));
    std::string ds = body.substr(c2 + 1);
    char* end = nullptr;
    long d = std::strtol(ds.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || d <= 0)
        throw ParseError("radicand must be a positive integer: " + text);
    return Quadratic(std::move(a), std::move(b), d);
}

}  // namespace rauzy
