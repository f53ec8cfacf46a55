#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ringrep/parse.hpp"

using namespace ringrep;

TEST_CASE("ring selectors") {
    CHECK(parse_ring_selector("z") == Ring::integers());
    CHECK(parse_ring_selector("zi") == Ring::gaussian_integers());
    CHECK(parse_ring_selector("fp:7") == Ring::prime_field(7));
    CHECK(parse_ring_selector("fpx:3") == Ring::poly_over_prime_field(3));
    CHECK(parse_ring_selector("q:z") == Ring::fraction_field(Ring::integers()));
    CHECK_THROWS_AS(parse_ring_selector("fp:6"), ArgumentError); // composite
    CHECK_THROWS_AS(parse_ring_selector("nope"), ParseError);
}

TEST_CASE("integer literals") {
    Ring z = Ring::integers();
    CHECK(parse_element(z, "42") == RingElement::integer(42));
    CHECK(parse_element(z, "-17") == RingElement::integer(-17));
    CHECK(format_element(RingElement::integer(-17)) == "-17");
    CHECK_THROWS_AS(parse_element(z, "4x"), ParseError);
    CHECK_THROWS_AS(parse_element(z, ""), ParseError);
}

TEST_CASE("gaussian literals") {
    Ring zi = Ring::gaussian_integers();
    CHECK(parse_element(zi, "3+2i") == RingElement::gaussian(3, 2));
    CHECK(parse_element(zi, "3-2i") == RingElement::gaussian(3, -2));
    CHECK(parse_element(zi, "i") == RingElement::gaussian(0, 1));
    CHECK(parse_element(zi, "-i") == RingElement::gaussian(0, -1));
    CHECK(parse_element(zi, "7") == RingElement::gaussian(7, 0));
    CHECK(parse_element(zi, "-2i") == RingElement::gaussian(0, -2));
    CHECK(format_element(RingElement::gaussian(3, -2)) == "3-2i");
    CHECK(format_element(RingElement::gaussian(0, 1)) == "i");
    CHECK(format_element(RingElement::gaussian(-1, -1)) == "-1-i");
    CHECK_THROWS_AS(parse_element(zi, "1+1"), ParseError);
}

TEST_CASE("prime field literals reduce") {
    Ring f5 = Ring::prime_field(5);
    CHECK(parse_element(f5, "7") == RingElement::residue(5, 2));
    CHECK(parse_element(f5, "-1") == RingElement::residue(5, 4));
    CHECK(format_element(RingElement::residue(5, 4)) == "4");
}

TEST_CASE("polynomial literals") {
    Ring f3x = Ring::poly_over_prime_field(3);
    RingElement e = parse_element(f3x, "2*x^2+x+1");
    CHECK(e == RingElement::poly(3, {Int(1), Int(1), Int(2)}));
    CHECK(format_element(e) == "2*x^2+x+1");
    CHECK(parse_element(f3x, "x") == RingElement::poly(3, {Int(0), Int(1)}));
    CHECK(parse_element(f3x, "x^2 - 1") == RingElement::poly(3, {Int(2), Int(0), Int(1)}));
    CHECK(parse_element(f3x, "0") == RingElement::zero(f3x));
    CHECK(format_element(RingElement::zero(f3x)) == "0");
    CHECK_THROWS_AS(parse_element(f3x, "x^"), ParseError);
    CHECK_THROWS_AS(parse_element(f3x, "y"), ParseError);
}

TEST_CASE("fraction literals") {
    Ring qz = Ring::fraction_field(Ring::integers());
    CHECK(parse_element(qz, "3/2") == fraction_make(RingElement::integer(3), RingElement::integer(2)));
    CHECK(parse_element(qz, "6/4") == parse_element(qz, "3/2"));
    CHECK(parse_element(qz, "5") == fraction_make(RingElement::integer(5), RingElement::integer(1)));
    CHECK(format_element(parse_element(qz, "6/4")) == "3/2");

    Ring qf2x = Ring::fraction_field(Ring::poly_over_prime_field(2));
    RingElement pf = parse_element(qf2x, "(x^2+x)/(x^2)");
    CHECK(format_element(pf) == "(x+1)/x");
    CHECK_THROWS_AS(parse_element(qz, "1/0"), ParseError);
    CHECK_THROWS_AS(parse_element(qz, "1/2/3"), ParseError);
}

TEST_CASE("word grammar") {
    Ring z = Ring::integers();
    Word w = parse_word(z, "u[1]*s[2]*u[3]*s[5]");
    REQUIRE(w.length() == 4);
    NormalForm nf = normalize(w);
    CHECK(nf.mult() == RingElement::integer(10));
    CHECK(nf.trans() == RingElement::integer(7));

    Word empty = parse_word(z, "   ");
    CHECK(empty.empty());
    CHECK(normalize(empty) == NormalForm::identity(z));

    Word single = parse_word(z, "u[0]");
    REQUIRE(single.length() == 1);
    CHECK(single.letters()[0].is_u());

    Ring f2x = Ring::poly_over_prime_field(2);
    Word wp = parse_word(f2x, "s[x]*u[1]");
    NormalForm nfp = normalize(wp);
    CHECK(format_element(nfp.mult()) == "x");
    CHECK(format_element(nfp.trans()) == "x");

    CHECK(format_normal_form(nf) == "(10, 7)");
}

TEST_CASE("word grammar errors carry positions") {
    Ring z = Ring::integers();
    try {
        parse_word(z, "u[1]*s[0]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 5);
    }
    try {
        parse_word(z, "u[1]+u[2]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 4);
    }
    CHECK_THROWS_AS(parse_word(z, "u[1]*"), ParseError);
    CHECK_THROWS_AS(parse_word(z, "v[1]"), ParseError);
    CHECK_THROWS_AS(parse_word(z, "u[1"), ParseError);
}

TEST_CASE("round trip: format then reparse is the identity") {
    std::mt19937_64 rng(0x707);
    std::uniform_int_distribution<long long> entry(-9, 9);
    std::uniform_int_distribution<int> len(0, 10);
    std::uniform_int_distribution<int> kind(0, 1);
    const Ring rings[] = {Ring::integers(), Ring::gaussian_integers(), Ring::prime_field(7),
                          Ring::poly_over_prime_field(3)};
    for (const Ring& ring : rings) {
        for (int k = 0; k < 200; ++k) {
            Word w(ring);
            int n = len(rng);
            for (int i = 0; i < n; ++i) {
                RingElement e = ring.kind() == Ring::Kind::GaussianIntegers
                                    ? RingElement::gaussian(entry(rng), entry(rng))
                                    : RingElement::from_int(ring, Int(entry(rng)));
                if (kind(rng) == 0) {
                    w.append(Generator::u(e));
                } else {
                    if (e.is_zero()) e = RingElement::one(ring);
                    w.append(Generator::s(e));
                }
            }
            Word reparsed = parse_word(ring, format_word(w));
            REQUIRE(reparsed.length() == w.length());
            for (std::size_t i = 0; i < w.length(); ++i) {
                CHECK(reparsed.letters()[i].kind() == w.letters()[i].kind());
                CHECK(reparsed.letters()[i].elem() == w.letters()[i].elem());
            }
        }
    }
}
