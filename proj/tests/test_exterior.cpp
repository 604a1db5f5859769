#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "wsd/exterior.hpp"

using namespace wsd;

namespace {

// Independent sign rule: concatenate the two ascending generator lists
// and bubble-sort, counting transpositions; duplicates kill the product.
SignedMask oracle_wedge(Mask a, Mask b) {
    std::vector<int> bits;
    for (int k = 0; k < kGenerators; ++k)
        if (a & (1u << k)) bits.push_back(k);
    for (int k = 0; k < kGenerators; ++k)
        if (b & (1u << k)) bits.push_back(k);
    int sign = 1;
    for (std::size_t n = bits.size(); n > 1; --n)
        for (std::size_t p = 0; p + 1 < n; ++p)
            if (bits[p] > bits[p + 1]) {
                std::swap(bits[p], bits[p + 1]);
                sign = -sign;
            }
    for (std::size_t p = 0; p + 1 < bits.size(); ++p)
        if (bits[p] == bits[p + 1]) return {0, 0};
    return {sign, a | b};
}

Multivector random_mv(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<Mask> mask(0, kMaskCount - 1);
    Multivector v;
    for (int t = 0; t < 5; ++t)
        v.add_term(mask(rng), Gaussian(coeff(rng)) + Gaussian::i(coeff(rng)));
    return v;
}

} // namespace

TEST_CASE("generator bits, names, order") {
    CHECK(generator_bit(1, 0) == 0);
    CHECK(generator_bit(2, 0) == 1);
    CHECK(generator_bit(1, 1) == 2);
    CHECK(generator_bit(2, 2) == 5);
    for (int b = 0; b < kGenerators; ++b) {
        CHECK(generator_bit(generator_i(b), generator_j(b)) == b);
        CHECK(parse_generator(generator_name(b)) == b);
    }
    CHECK(generator_name(0) == "v10");
    CHECK(generator_name(3) == "v21");
}

TEST_CASE("wedge sign matches the bubble-sort oracle on all pairs") {
    for (Mask a = 0; a < kMaskCount; ++a)
        for (Mask b = 0; b < kMaskCount; ++b) {
            SignedMask got = wedge_masks(a, b);
            SignedMask want = oracle_wedge(a, b);
            CHECK(got.sign == want.sign);
            if (want.sign != 0) CHECK(got.mask == want.mask);
        }
}

TEST_CASE("contraction sign counts earlier generators") {
    for (Mask m = 0; m < kMaskCount; ++m)
        for (int b = 0; b < kGenerators; ++b) {
            SignedMask got = contract_mask(b, m);
            if (!(m & (1u << b))) {
                CHECK(got.sign == 0);
            } else {
                int below = 0;
                for (int k = 0; k < b; ++k)
                    if (m & (1u << k)) ++below;
                CHECK(got.sign == (below % 2 ? -1 : 1));
                CHECK(got.mask == (m & ~(1u << b)));
            }
        }
}

TEST_CASE("anticommutativity and nilpotence of generators") {
    for (int x = 0; x < kGenerators; ++x) {
        Multivector vx = Multivector::monomial(1u << x);
        CHECK(vx.wedge(vx).is_zero());
        for (int y = 0; y < kGenerators; ++y) {
            if (x == y) continue;
            Multivector vy = Multivector::monomial(1u << y);
            CHECK(vx.wedge(vy) == -(vy.wedge(vx)));
        }
    }
}

TEST_CASE("wedge is associative and bilinear on random elements") {
    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
        Multivector a = random_mv(rng), b = random_mv(rng), c = random_mv(rng);
        CHECK(a.wedge(b).wedge(c) == a.wedge(b.wedge(c)));
        CHECK(a.wedge(b + c) == a.wedge(b) + a.wedge(c));
        Gaussian z = Gaussian::rational(3, 2) + Gaussian::i(-1, 3);
        CHECK(a.scaled(z).wedge(b) == a.wedge(b).scaled(z));
    }
}

TEST_CASE("degree and homogeneity") {
    CHECK(Multivector().degree() == -1);
    CHECK(Multivector::scalar(1).degree() == 0);
    CHECK(gen(1, 0).wedge(gen(2, 2)).degree() == 2);
    Multivector mixed = Multivector::scalar(1) + gen(1, 1);
    CHECK(!mixed.is_homogeneous());
    CHECK(gen(1, 0).is_homogeneous());
}

TEST_CASE("add_term drops cancelled coefficients") {
    Multivector v;
    v.add_term(5, Gaussian::rational(1, 2));
    v.add_term(5, Gaussian::rational(-1, 2));
    CHECK(v.is_zero());
    CHECK(v.terms().empty());
}

TEST_CASE("monomial text round-trip") {
    CHECK(monomial_str(0) == "1");
    CHECK(monomial_str(0b000011) == "v10^v20");
    CHECK(monomial_str(0b110000) == "v12^v22");
    for (Mask m = 0; m < kMaskCount; ++m)
        CHECK(parse_monomial(monomial_str(m)) == m);
    CHECK_THROWS_AS(parse_monomial("v10^v10"), wsd::ParseError);
    CHECK_THROWS_AS(parse_monomial("v30"), wsd::ParseError);
    CHECK_THROWS_AS(parse_monomial(""), wsd::ParseError);
}

TEST_CASE("interior product is adjoint to exterior product") {
    for (int g = 0; g < kGenerators; ++g)
        for (Mask a = 0; a < kMaskCount; ++a)
            for (Mask b = 0; b < kMaskCount; ++b) {
                Multivector ma = Multivector::monomial(a);
                Multivector mb = Multivector::monomial(b);
                CHECK(inner(apply_E(g, ma), mb) == inner(ma, apply_I(g, mb)));
            }
}

TEST_CASE("inner product is Hermitian and conjugate-linear in the first slot") {
    std::mt19937 rng(11);
    for (int t = 0; t < 25; ++t) {
        Multivector a = random_mv(rng), b = random_mv(rng);
        CHECK(inner(a, b) == inner(b, a).conj());
        Gaussian z = Gaussian::rational(2, 5) + Gaussian::i(3);
        CHECK(inner(a.scaled(z), b) == z.conj() * inner(a, b));
        CHECK(inner(a, b.scaled(z)) == z * inner(a, b));
        CHECK(inner(a, a).im() == 0);
        CHECK(inner(a, a).re() >= 0);
    }
}
