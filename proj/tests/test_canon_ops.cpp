#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wsd/canon_ops.hpp"

using namespace wsd;

namespace {

Multivector random_mv(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<Mask> mask(0, kMaskCount - 1);
    Multivector v;
    for (int t = 0; t < 5; ++t)
        v.add_term(mask(rng), Gaussian(coeff(rng)) + Gaussian::i(coeff(rng)));
    return v;
}

} // namespace

TEST_CASE("the three 2-forms have exactly the stated terms") {
    Multivector o1 = gen(1, 0).wedge(gen(1, 1)) + gen(2, 0).wedge(gen(2, 1));
    Multivector o2 = gen(1, 0).wedge(gen(1, 2)) + gen(2, 0).wedge(gen(2, 2));
    Multivector od = gen(1, 1).wedge(gen(1, 2)) + gen(2, 1).wedge(gen(2, 2));
    CHECK(omega1() == o1);
    CHECK(omega2() == o2);
    CHECK(omegaD() == od);
}

TEST_CASE("wedge operators on the scalar") {
    Multivector one = Multivector::scalar(1);
    CHECK(build_L(0).apply(one) == omegaD());
    CHECK(build_L(1).apply(one) == -omega2());
    CHECK(build_L(2).apply(one) == omega1());
    CHECK(build_V(0).apply(one) == column_volume(0));
    CHECK(build_V(1).apply(one) == column_volume(1));
}

TEST_CASE("volume operator is also wedge by (i/2) w ^ wbar") {
    for (int j = 0; j < 3; ++j) {
        Multivector form = w_form(j).wedge(wbar_form(j)).scaled(Gaussian::i(1, 2));
        CHECK(build_V(j) == Operator::wedge_by(form));
        CHECK(column_volume(j) == form);
    }
}

TEST_CASE("contraction-side samples") {
    // Lam_0(omega_D) counts both terms of the pairing
    CHECK(build_Lambda(0).apply(omegaD()) == Multivector::scalar(2));
    // A_0 on the 0-th volume form is 1
    CHECK(build_A(0).apply(column_volume(0)) == Multivector::scalar(1));
    CHECK(build_A(0).apply(Multivector::scalar(1)).is_zero());
}

TEST_CASE("adjoint pairs against the Hermitian metric") {
    std::mt19937 rng(3);
    for (int j = 0; j < 3; ++j) {
        Operator L = build_L(j), Lam = build_Lambda(j);
        Operator V = build_V(j), A = build_A(j);
        CHECK(Lam == L.adjoint());
        CHECK(A == V.adjoint());
        for (int t = 0; t < 10; ++t) {
            Multivector a = random_mv(rng), b = random_mv(rng);
            CHECK(inner(L.apply(a), b) == inner(a, Lam.apply(b)));
            CHECK(inner(V.apply(a), b) == inner(a, A.apply(b)));
        }
    }
}

TEST_CASE("rotation generator") {
    Operator J = build_J();   // would throw if the two constructions disagreed
    // derivation values on generators
    for (int j = 0; j < 3; ++j) {
        CHECK(J.apply(gen(1, j)) == gen(2, j));
        CHECK(J.apply(gen(2, j)) == -gen(1, j));
    }
    // w_j has eigenvalue -i, wbar_j has +i
    for (int j = 0; j < 3; ++j) {
        CHECK(J.apply(w_form(j)) == w_form(j).scaled(Gaussian::i(-1)));
        CHECK(J.apply(wbar_form(j)) == wbar_form(j).scaled(Gaussian::i(1)));
    }
    // derivation property on random pairs
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        Multivector a = random_mv(rng), b = random_mv(rng);
        CHECK(J.apply(a.wedge(b)) == J.apply(a).wedge(b) + a.wedge(J.apply(b)));
    }
    CHECK(J.adjoint() == -J);
    CHECK(J.trace().is_zero());
}

TEST_CASE("complexified generator operators") {
    for (int j = 0; j < 3; ++j) {
        WOps w = build_w_ops(j);
        int b1 = generator_bit(1, j), b2 = generator_bit(2, j);
        CHECK(w.Ew == Operator::E(b1) + Operator::E(b2).scaled(Gaussian::i()));
        CHECK(w.Ewbar == Operator::E(b1) - Operator::E(b2).scaled(Gaussian::i()));
        // adjoints: conjugating the coefficient of E_2j gives
        // (E_1j + i E_2j)^* = I_1j - i I_2j = I_w, and likewise (E_wbar)^* = I_wbar
        CHECK(w.Ew.adjoint() == w.Iw);
        CHECK(w.Ewbar.adjoint() == w.Iwbar);
        // E_w is wedge by w
        CHECK(w.Ew.apply(Multivector::scalar(1)) == w_form(j));
    }
}

TEST_CASE("registry holds the canonical names") {
    Registry reg = canonical_registry();
    for (const char* n : {"E10", "I22", "L0", "Lam2", "V1", "A0", "J",
                          "Ew0", "Ewbar1", "Iw2", "Iwbar0", "Id"})
        CHECK(reg.contains(n));
    CHECK(reg.at("L1") == build_L(1));
    CHECK(reg.at("Id") == Operator::identity());
    CHECK_THROWS_AS(reg.at("nope"), wsd::UnknownOperator);
    // names keep insertion order and start with the Clifford generators
    CHECK(reg.names().front() == "E10");
}

TEST_CASE("permutations act as signed algebra maps") {
    const auto& all = PermS3::all();
    CHECK(all.size() == 6);

    for (const PermS3& s : all) {
        Operator P = permutation_operator(s);
        Operator Pinv = permutation_operator(s.inverse());
        CHECK(P * Pinv == Operator::identity());
        // P is an algebra automorphism with P(v_ij) = v_i,sigma(j), so
        // conjugating "wedge by v_ij" gives exactly "wedge by v_i,sigma(j)"
        for (int j = 0; j < 3; ++j)
            for (int i = 1; i <= 2; ++i) {
                Operator e = Operator::E(generator_bit(i, j));
                CHECK(s3_conjugate(s, e) == Operator::E(generator_bit(i, s.apply(j))));
            }
    }

    // explicit transposition (12): swaps columns 1 and 2
    PermS3 t12{{0, 2, 1}};
    CHECK(t12.sign() == -1);
    CHECK(t12.str() == "(12)");
    Operator P = permutation_operator(t12);
    CHECK(P.apply(gen(1, 1)) == gen(1, 2));
    CHECK(P.apply(gen(1, 0)) == gen(1, 0));

    PermS3 c{{1, 2, 0}};
    CHECK(c.sign() == 1);
    CHECK(c.inverse().map == std::array<int, 3>{2, 0, 1});
}
