#include "doctest.h"

#include <random>

#include "qhsd/novikov.hpp"

using qhsd::GradingSpec;
using qhsd::Int;
using qhsd::NovikovElem;
using qhsd::Rational;

namespace {

NovikovElem random_elem(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 8);
    std::uniform_int_distribution<int> qexp(-10, 10);
    std::uniform_int_distribution<int> tnum(-10, 10);
    std::uniform_int_distribution<int> tden(1, 4);
    std::uniform_int_distribution<int> coeff(-9, 9);
    NovikovElem x;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Rational t(tnum(rng), tden(rng));
        if (t < -10 || t > 10) continue;
        x += NovikovElem::monomial(qexp(rng), t, coeff(rng));
    }
    return x;
}

NovikovElem truncate(const NovikovElem& x, int cap) { return x.truncate_to(Rational(cap)); }

}  // namespace

TEST_CASE("novikov_mul pinned examples") {
    const Rational cap(16);
    NovikovElem T = NovikovElem::T();
    CHECK(novikov_mul(T, T, cap) == NovikovElem::T(Rational(2)));

    // (1 - T) * sum_{j=0..16} T^j = 1 - T^17, which truncates to 1 at cap 16.
    NovikovElem geo;
    for (int j = 0; j <= 16; ++j) geo += NovikovElem::T(Rational(j));
    NovikovElem prod = novikov_mul(NovikovElem(1) - T, geo, cap);
    CHECK(prod == NovikovElem(1));
    CHECK(prod.truncated());

    NovikovElem qT2 = NovikovElem::monomial(1, Rational(2), 1);
    NovikovElem inv = NovikovElem::monomial(-1, Rational(-2), 1);
    CHECK(novikov_mul(qT2, inv, cap) == NovikovElem(1));
}

TEST_CASE("novikov_geometric_inverse") {
    const Rational cap(16);

    NovikovElem one_minus_T = NovikovElem(1) - NovikovElem::T();
    NovikovElem inv = novikov_geometric_inverse(one_minus_T, cap);
    NovikovElem geo;
    for (int j = 0; j <= 16; ++j) geo += NovikovElem::T(Rational(j));
    CHECK(inv == geo);

    NovikovElem qT2 = NovikovElem::monomial(1, Rational(2), 1);
    CHECK(novikov_geometric_inverse(qT2, cap) == NovikovElem::monomial(-1, Rational(-2), 1));

    // (1-T)^2 inverts to sum (j+1) T^j; expected values from the convolution
    // of two geometric series.
    NovikovElem sq = one_minus_T * one_minus_T;
    NovikovElem inv2 = novikov_geometric_inverse(sq, cap);
    NovikovElem expect;
    for (int j = 0; j <= 16; ++j) expect += NovikovElem::monomial(0, Rational(j), j + 1);
    CHECK(inv2 == expect);
    {
        NovikovElem oracle;
        for (int a = 0; a <= 16; ++a)
            for (int b = 0; a + b <= 16; ++b) oracle += NovikovElem::T(Rational(a + b));
        CHECK(oracle == expect);
    }

    // Residual: a * a^{-1} agrees with 1 on all terms up to the cap.
    NovikovElem residual = truncate(sq * inv2, 16) - NovikovElem(1);
    CHECK(residual.is_zero());

    CHECK_THROWS_AS(novikov_geometric_inverse(NovikovElem(2) - NovikovElem::T(), cap),
                    qhsd::NotInvertibleLeadingTerm);
    CHECK_THROWS_AS(
        novikov_geometric_inverse(NovikovElem(1) + NovikovElem::q() - NovikovElem::T(), cap),
        qhsd::NotInvertibleLeadingTerm);
}

TEST_CASE("ring axioms up to the truncation cap") {
    std::mt19937 rng(20260810);
    const Rational cap(16);
    // Working cap high enough that dropped terms cannot re-enter below the
    // comparison cap: input tExp >= -10, so slack 40 is ample.
    const Rational work(56);
    for (int iter = 0; iter < 200; ++iter) {
        NovikovElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
        NovikovElem ab_c = ((a * b).truncate_to(work) * c).truncate_to(cap);
        NovikovElem a_bc = (a * (b * c).truncate_to(work)).truncate_to(cap);
        CHECK(ab_c == a_bc);
        CHECK((a * b) == (b * a));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a * NovikovElem(1)) == a);
    }
}

TEST_CASE("term weight is additive under multiplication") {
    GradingSpec g{8, 2};
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> qexp(-5, 5);
    for (int iter = 0; iter < 100; ++iter) {
        // Build weight-homogeneous elements and check weights add.
        auto homogeneous = [&](int weight) {
            NovikovElem x;
            for (int t = 0; t < 4; ++t) {
                int qe = qexp(rng);
                Rational te = (Rational(weight) - Rational(qe) * g.q_degree) / 2;
                x += NovikovElem::monomial(qe, te, 1 + (t % 3));
            }
            return x;
        };
        int wa = qexp(rng), wb = qexp(rng);
        NovikovElem a = homogeneous(wa), b = homogeneous(wb);
        auto w = qhsd::homogeneous_weight(g, a * b);
        REQUIRE(w.has_value());
        CHECK(*w == Rational(wa) + wb);
    }
}

TEST_CASE("novikov exact division") {
    std::mt19937 rng(4);
    for (int iter = 0; iter < 150; ++iter) {
        NovikovElem a = random_elem(rng), b = random_elem(rng);
        if (b.is_zero()) continue;
        CHECK(NovikovElem::exact_div(a * b, b) == a);
    }
}

TEST_CASE("mul cap precondition") {
    NovikovElem a = NovikovElem::T().truncate_to(Rational(4));
    CHECK_THROWS_AS(novikov_mul(a, NovikovElem(1), Rational(8)), qhsd::InvalidInput);
}
