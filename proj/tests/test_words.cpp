#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <gmpxx.h>

#include "doctest.h"
#include "oracles.hpp"
#include "rauzy/word_source.hpp"

using namespace rauzy;

namespace {

std::string generate(const WordSource& s, size_t n) {
    return s.alphabet().render(s.prefix(n));
}

Quadratic fib_slope() {  // (3 - sqrt 5)/2
    return Quadratic(make_rational(3, 2), make_rational(-1, 2), 5);
}

}  // namespace

TEST_CASE("morphism text format round-trips") {
    Morphism m = Morphism::from_text("0->001;1->01");
    CHECK(m.to_text() == "0->001;1->01");
    CHECK(m.alphabet().size() == 2);
    CHECK_THROWS_AS(Morphism::from_text("0->001;0->01"), ParseError);
    CHECK_THROWS_AS(Morphism::from_text("0->;1->0"), Error);
    CHECK_THROWS_AS(Morphism::from_text("0->02;1->0"), Error);
}

TEST_CASE("fixed point prefixes") {
    Morphism fib = Morphism::from_text("0->01;1->0");
    CHECK(fib.alphabet().render(fixed_point_prefix(fib, 0, 8)) == "01001010");

    Morphism tm = Morphism::from_text("0->01;1->10");
    CHECK(tm.alphabet().render(fixed_point_prefix(tm, 0, 8)) == "01101001");

    Morphism bad = Morphism::from_text("0->10;1->0");
    CHECK_THROWS_AS(fixed_point_prefix(bad, 0, 4), NotProlongable);

    // long prefixes against the independent recursive constructions
    CHECK(fib.alphabet().render(fixed_point_prefix(fib, 0, 10000)) ==
          oracle::fibonacci_word(10000));
    CHECK(tm.alphabet().render(fixed_point_prefix(tm, 0, 10000)) == oracle::thue_morse(10000));
}

TEST_CASE("prefix monotonicity") {
    WordSource fib = WordSource::morphism("0->01;1->0", '0');
    WordSource mech = WordSource::mechanical(fib_slope(), fib_slope());
    WordSource per = WordSource::periodic("0010");
    for (const WordSource& s : {fib, mech, per}) {
        std::string longer = generate(s, 300);
        for (size_t n : {1u, 17u, 299u}) CHECK(generate(s, n) == longer.substr(0, n));
    }
}

TEST_CASE("is_primitive") {
    CHECK(is_primitive(Morphism::from_text("0->01;1->0")));
    CHECK(is_primitive(Morphism::from_text("0->01;1->10")));
    CHECK_FALSE(is_primitive(Morphism::from_text("0->0;1->1")));
    CHECK_FALSE(is_primitive(Morphism::from_text("0->01;1->1")));  // reducible
    CHECK(is_primitive(Morphism::from_text("0->001;1->01")));
}

TEST_CASE("mechanical words") {
    CHECK(generate(WordSource::mechanical(Quadratic(make_rational(1, 2)), Quadratic(0)), 6) ==
          "010101");
    CHECK(generate(WordSource::mechanical(Quadratic(0), Quadratic(0)), 4) == "0000");
    CHECK(generate(WordSource::mechanical(Quadratic(1), Quadratic(0)), 4) == "1111");
    CHECK_THROWS_AS(WordSource::mechanical(Quadratic(2), Quadratic(0)).prefix(1), Error);
    CHECK_THROWS_AS(WordSource::mechanical(Quadratic(make_rational(1, 2)), Quadratic(1)).prefix(1),
                    Error);
}

TEST_CASE("mechanical with the golden slope equals the substitution fixed point") {
    WordSource mech = WordSource::mechanical(fib_slope(), fib_slope());
    CHECK(generate(mech, 10000) == oracle::fibonacci_word(10000));
}

TEST_CASE("rational slopes are eventually periodic with period at most q") {
    for (auto [p, q] : {std::pair<long, long>{1, 2}, {2, 5}, {3, 7}, {5, 8}}) {
        WordSource s = WordSource::mechanical(Quadratic(make_rational(p, q)),
                                              Quadratic(make_rational(1, 3)));
        std::string w = generate(s, 200);
        // strictly periodic from the start with period q for these params
        bool periodic = true;
        for (size_t i = 0; i + q < w.size(); ++i)
            if (w[i] != w[i + q]) periodic = false;
        CHECK(periodic);
    }
}

TEST_CASE("periodic prefixes") {
    CHECK(generate(WordSource::periodic("01"), 5) == "01010");
    CHECK(generate(WordSource::periodic("001"), 7) == "0010010");
    CHECK_THROWS_AS(WordSource::periodic(""), EmptyPattern);
    CHECK(periodic_prefix(Word("\x00\x01", 2), 3).size() == 3);
}

TEST_CASE("two-interval exchange is the rotation") {
    std::vector<Quadratic> lengths{Quadratic(make_rational(1, 2)), Quadratic(make_rational(1, 2))};
    WordSource s = WordSource::interval_exchange(lengths, {2, 1}, Quadratic(make_rational(1, 4)));
    CHECK(generate(s, 4) == "0101");
}

TEST_CASE("two-interval exchange matches the mechanical word") {
    Quadratic alpha = fib_slope();
    std::vector<Quadratic> lengths{Quadratic(1) - alpha, alpha};
    WordSource iet = WordSource::interval_exchange(lengths, {2, 1}, Quadratic(0));
    WordSource mech = WordSource::mechanical(alpha, Quadratic(0));
    CHECK(generate(iet, 1000) == generate(mech, 1000));
}

TEST_CASE("three-interval exchange against a 200-bit orbit oracle") {
    // lengths sqrt2-1, sqrt2-1, 3-2sqrt2 with the reversing permutation
    Quadratic r2m1(make_rational(-1), make_rational(1), 2);
    std::vector<Quadratic> lengths{r2m1, r2m1,
                                   Quadratic(make_rational(3), make_rational(-2), 2)};
    WordSource s = WordSource::interval_exchange(lengths, {3, 2, 1}, Quadratic(0), 200);
    std::string got = generate(s, 100);

    // independent oracle: plain 200-bit floating iteration
    const unsigned bits = 200;
    mpf_class root2(0, bits);
    mpf_sqrt_ui(root2.get_mpf_t(), 2);
    mpf_class l1 = root2 - 1, l2 = root2 - 1, l3 = 3 - 2 * root2;
    mpf_class c1 = l1, c2 = l1 + l2;
    // after the exchange the intervals appear in order 3,2,1
    mpf_class o1 = l2 + l3, o2 = l3 - l1, o3 = -(l1 + l2);
    mpf_class x(0, bits);
    std::string expected;
    for (int t = 0; t < 100; ++t) {
        if (x < c1) {
            expected += '0';
            x += o1;
        } else if (x < c2) {
            expected += '1';
            x += o2;
        } else {
            expected += '2';
            x += o3;
        }
    }
    CHECK(got == expected);
}

TEST_CASE("interval exchange validation") {
    std::vector<Quadratic> bad_sum{Quadratic(make_rational(1, 2)), Quadratic(make_rational(1, 3))};
    CHECK_THROWS_AS(WordSource::interval_exchange(bad_sum, {2, 1}, Quadratic(0)).prefix(4), Error);
    std::vector<Quadratic> ok{Quadratic(make_rational(1, 2)), Quadratic(make_rational(1, 2))};
    CHECK_THROWS_AS(WordSource::interval_exchange(ok, {1, 1}, Quadratic(0)).prefix(4), Error);
    CHECK_THROWS_AS(WordSource::interval_exchange(ok, {2, 1}, Quadratic(2)).prefix(4), Error);
}

TEST_CASE("mixed-field interval exchange runs approximately and guards precision") {
    // lengths in Q(sqrt3), start point in Q(sqrt2): no common field, so the
    // orbit runs at the declared precision
    std::vector<Quadratic> lengths{
        Quadratic(make_rational(1, 4)),
        Quadratic(make_rational(-1), make_rational(1), 3),    // sqrt3 - 1
        Quadratic(make_rational(7, 4), make_rational(-1), 3)  // 7/4 - sqrt3
    };
    Quadratic start(make_rational(-5, 4), make_rational(1), 2);  // sqrt2 - 5/4 in [0,1)
    WordSource s = WordSource::interval_exchange(lengths, {3, 2, 1}, start, 160);
    CHECK(s.prefix(50).size() == 50);

    // at very low precision the discontinuity guard trips quickly
    WordSource low = WordSource::interval_exchange(lengths, {3, 2, 1}, start, 8);
    CHECK_THROWS_AS(low.prefix(500), PrecisionExhausted);
}

TEST_CASE("explicit prefixes and source JSON round-trip") {
    WordSource s = WordSource::explicit_prefix("0100101");
    CHECK(generate(s, 7) == "0100101");
    CHECK_THROWS_AS(s.prefix(8), Error);

    for (const WordSource& src :
         {WordSource::morphism("0->01;1->0", '0'),
          WordSource::mechanical(fib_slope(), Quadratic(0)), WordSource::periodic("001"),
          WordSource::explicit_prefix("0100101001")}) {
        WordSource back = WordSource::from_json(src.to_json());
        CHECK(back.to_json() == src.to_json());
        CHECK(generate(back, 10) == generate(src, 10));
    }

    std::vector<Quadratic> lengths{Quadratic(make_rational(1, 2)), Quadratic(make_rational(1, 2))};
    WordSource iet = WordSource::interval_exchange(lengths, {2, 1}, Quadratic(make_rational(1, 4)));
    CHECK(WordSource::from_json(iet.to_json()).to_json() == iet.to_json());

    CHECK_THROWS_AS(WordSource::from_json("{}"), ParseError);
    CHECK_THROWS_AS(WordSource::from_json("{\"variant\":\"nope\"}"), ParseError);
    CHECK_THROWS_AS(WordSource::from_json("not json"), ParseError);
}

TEST_CASE("periodic sources expose the uniform substitution") {
    WordSource per = WordSource::periodic("001");
    auto sub = per.substitution();
    REQUIRE(sub);
    CHECK(is_primitive(sub->first));
    CHECK(sub->first.alphabet().render(fixed_point_prefix(sub->first, sub->second, 9)) ==
          "001001001");

    // single-letter patterns stay prolongable
    WordSource zero = WordSource::periodic("0");
    auto sub0 = zero.substitution();
    REQUIRE(sub0);
    CHECK(sub0->first.alphabet().render(fixed_point_prefix(sub0->first, sub0->second, 4)) ==
          "0000");
}
