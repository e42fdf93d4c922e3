#include "rauzy/rational.hpp"

#include <cctype>

namespace rauzy {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty rational literal");

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal literal, exact: "12.345" -> 12345/1000
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw ParseError("bad decimal literal: " + text);
        Integer num;
        if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
            throw ParseError("bad decimal literal: " + text);
        Integer den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return make_rational(num, den);
    }

    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational literal: " + text);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace rauzy
