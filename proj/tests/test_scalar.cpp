#include "omegader/scalar.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "support/random_gen.hpp"

using namespace omegader;

TEST_CASE("rational normalization through construction") {
    Rational r(3, 6);
    CHECK(numerator(r) == 1);
    CHECK(denominator(r) == 2);
    Rational neg(2, -4);
    CHECK(numerator(neg) == -1);
    CHECK(denominator(neg) == 2);
    CHECK(Rational(0, 7) == Rational(0));
}

TEST_CASE("scalar arithmetic basics") {
    Scalar half = Scalar::of(1, 2);
    Scalar third = Scalar::of(1, 3);
    CHECK(half + third == Scalar::of(5, 6));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(half - half == Scalar(0));
    CHECK(-Scalar(3) == Scalar(-3));
}

TEST_CASE("scalar inverses") {
    CHECK(inv(Scalar(2)) == Scalar::of(1, 2));
    CHECK(inv(Scalar::i()) == -Scalar::i());
    Scalar one_plus_i(Rational(1), Rational(1));
    CHECK(inv(one_plus_i) == Scalar(Rational(1, 2), Rational(-1, 2)));
    CHECK_THROWS_AS(inv(Scalar(0)), division_by_zero);
    CHECK(one_plus_i * inv(one_plus_i) == Scalar(1));
}

TEST_CASE("scalar parsing") {
    CHECK(parse_scalar("3/6") == Scalar::of(1, 2));
    CHECK(parse_scalar("1/2+2/4*i") == Scalar(Rational(1, 2), Rational(1, 2)));
    CHECK(parse_scalar("-1") == Scalar(-1));
    CHECK(parse_scalar("i") == Scalar::i());
    CHECK(parse_scalar("-1*i") == -Scalar::i());
    CHECK(parse_scalar("3-i") == Scalar(Rational(3), Rational(-1)));
    CHECK(parse_scalar("0") == Scalar(0));

    CHECK_THROWS_AS(parse_scalar(""), scalar_parse_error);
    CHECK_THROWS_AS(parse_scalar("1/0"), scalar_parse_error);
    CHECK_THROWS_AS(parse_scalar("1+2i"), scalar_parse_error);
    CHECK_THROWS_AS(parse_scalar("1 + i"), scalar_parse_error);
    CHECK_THROWS_AS(parse_scalar("-i"), scalar_parse_error);
    try {
        parse_scalar("1/2+x");
        FAIL("expected parse error");
    } catch (const scalar_parse_error& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("rendering is canonical") {
    CHECK(render_scalar(Scalar(0)) == "0");
    CHECK(render_scalar(Scalar::of(-3, 9)) == "-1/3");
    CHECK(render_scalar(Scalar::i()) == "i");
    CHECK(render_scalar(-Scalar::i()) == "-1*i");
    CHECK(render_scalar(Scalar(Rational(1, 2), Rational(1, 2))) == "1/2+1/2*i");
    CHECK(render_scalar(Scalar(Rational(3), Rational(-1))) == "3-i");
    CHECK(render_scalar(Scalar(Rational(0), Rational(-5, 7))) == "-5/7*i");
}

TEST_CASE("field axioms on random triples") {
    testgen::Rng rng(20240901);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = testgen::random_scalar(rng);
        Scalar b = testgen::random_scalar(rng);
        Scalar c = testgen::random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Scalar(0) == a);
        CHECK(a * Scalar(1) == a);
        if (!a.is_zero()) {
            CHECK(a * inv(a) == Scalar(1));
            CHECK(inv(inv(a)) == a);
        }
    }
}

TEST_CASE("parse round-trips rendering") {
    testgen::Rng rng(77);
    for (int trial = 0; trial < 1000; ++trial) {
        Scalar s = testgen::random_scalar(rng);
        CHECK(parse_scalar(render_scalar(s)) == s);
    }
}
