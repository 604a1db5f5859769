#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wsd/gaussian.hpp"

using wsd::Gaussian;

TEST_CASE("normalize reduces to lowest terms with positive denominator") {
    CHECK(Gaussian::normalize(2, 4, 0, 1).str() == "1/2");
    CHECK(Gaussian::normalize(0, 1, -6, 4).str() == "-3/2*i");
    CHECK(Gaussian::normalize(3, -6, 0, 1).str() == "-1/2");
    CHECK(Gaussian::normalize(0, 5, 0, -7).str() == "0");
    CHECK(Gaussian::normalize(4, 2, -4, 2) == Gaussian(2) + Gaussian::i(-2));
}

TEST_CASE("normalize rejects zero denominators") {
    CHECK_THROWS_AS(Gaussian::normalize(1, 0, 0, 1), wsd::ZeroDenominator);
    CHECK_THROWS_AS(Gaussian::normalize(0, 1, 1, 0), wsd::ZeroDenominator);
}

TEST_CASE("field arithmetic") {
    Gaussian i = Gaussian::i();
    CHECK(i * i == Gaussian(-1));
    CHECK(Gaussian::i(1, 2) * Gaussian::i(-2) == Gaussian(1));
    CHECK((Gaussian(1) + i) * (Gaussian(1) - i) == Gaussian(2));
    CHECK(Gaussian(1) / (Gaussian(1) + i) == Gaussian::rational(1, 2) + Gaussian::i(-1, 2));
    CHECK(-Gaussian(3) == Gaussian(-3));
    CHECK(Gaussian::rational(2, 3).norm() == mpq_class(4, 9));
    CHECK((Gaussian::rational(1, 2) + Gaussian::i(1, 2)).norm() == mpq_class(1, 2));
    CHECK(Gaussian::i(5).conj() == Gaussian::i(-5));
    CHECK_THROWS_AS(Gaussian(1) / Gaussian(0), wsd::DivisionByZero);
}

TEST_CASE("canonical text grammar") {
    CHECK(Gaussian(0).str() == "0");
    CHECK(Gaussian(-2).str() == "-2");
    CHECK(Gaussian::rational(-1, 2).str() == "-1/2");
    CHECK(Gaussian::i().str() == "1*i");
    CHECK(Gaussian::i(-1).str() == "-1*i");
    CHECK(Gaussian::i(-2).str() == "-2*i");
    CHECK(Gaussian::i(1, 2).str() == "1/2*i");
    CHECK((Gaussian(1) + Gaussian::i(-1, 3)).str() == "1-1/3*i");
    CHECK((Gaussian::rational(-3, 4) + Gaussian::i(2)).str() == "-3/4+2*i");
}

TEST_CASE("parse inverts str on canonical forms") {
    for (const char* s : {"0", "1", "-1", "1/2", "-7/3", "1*i", "-1*i", "2*i", "-1/2*i",
                          "1+1*i", "1-1*i", "-2/3+1/5*i", "4-4*i"}) {
        Gaussian g = Gaussian::parse(s);
        CHECK(g.str() == s);
        CHECK(Gaussian::parse(g.str()) == g);
    }
}

TEST_CASE("parse accepts non-canonical input and normalizes") {
    CHECK(Gaussian::parse("2/4") == Gaussian::rational(1, 2));
    CHECK(Gaussian::parse("0+0*i") == Gaussian(0));
    CHECK(Gaussian::parse("3/3*i") == Gaussian::i());
}

TEST_CASE("parse rejects bad grammar") {
    for (const char* s : {"", "x", "i", "-i", "1//2", "1+", "i*2", "1 + 1*i", "--1", "1/0"}) {
        CHECK_THROWS_AS(Gaussian::parse(s), wsd::Error);
    }
}
