#include "doctest.h"

#include <random>

#include "qhsd/exact_linalg.hpp"

using qhsd::DenseMatrix;
using qhsd::Int;
using qhsd::LaurentPoly;
using qhsd::NovikovElem;
using qhsd::Rational;

namespace {

// Cofactor-expansion oracle, exponential but obviously correct.
template <class S>
S cofactor_det(const DenseMatrix<S>& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return S(1);
    if (n == 1) return m(0, 0);
    S acc(0);
    int sign = 1;
    for (Eigen::Index j = 0; j < n; ++j) {
        DenseMatrix<S> minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            Eigen::Index cc = 0;
            for (Eigen::Index c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        S term = m(0, j) * cofactor_det(minor);
        acc += sign > 0 ? term : S(0) - term;
        sign = -sign;
    }
    return acc;
}

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> exp(-3, 3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    LaurentPoly p;
    for (int i = 0, n = nterms(rng); i < n; ++i) p += LaurentPoly::monomial(exp(rng), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("bareiss determinant over Z") {
    DenseMatrix<Int> m(3, 3);
    m << Int(2), Int(-1), Int(0), Int(-1), Int(2), Int(-1), Int(0), Int(-1), Int(2);
    CHECK(qhsd::integer_determinant(m) == 4);

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int iter = 0; iter < 50; ++iter) {
        DenseMatrix<Int> a(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a(i, j) = Int(entry(rng));
        CHECK(qhsd::integer_determinant(a) == cofactor_det<Int>(a));
    }
}

TEST_CASE("bareiss determinant over Lambda matches cofactor oracle") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 40; ++iter) {
        DenseMatrix<LaurentPoly> a(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a(i, j) = random_poly(rng);
        CHECK(qhsd::bareiss_determinant<LaurentPoly>(a) == cofactor_det<LaurentPoly>(a));
    }
    for (int iter = 0; iter < 10; ++iter) {
        DenseMatrix<LaurentPoly> a(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a(i, j) = random_poly(rng);
        CHECK(qhsd::bareiss_determinant<LaurentPoly>(a) == cofactor_det<LaurentPoly>(a));
    }
}

TEST_CASE("bareiss handles zero pivots via row swaps") {
    DenseMatrix<LaurentPoly> a(3, 3);
    a(0, 0) = LaurentPoly(0); a(0, 1) = LaurentPoly::q(); a(0, 2) = LaurentPoly(1);
    a(1, 0) = LaurentPoly(1); a(1, 1) = LaurentPoly(0); a(1, 2) = LaurentPoly(0);
    a(2, 0) = LaurentPoly(0); a(2, 1) = LaurentPoly(0); a(2, 2) = LaurentPoly::q(-2);
    CHECK(qhsd::bareiss_determinant<LaurentPoly>(a) == cofactor_det<LaurentPoly>(a));

    DenseMatrix<LaurentPoly> sing(2, 2);
    sing(0, 0) = LaurentPoly::q(); sing(0, 1) = LaurentPoly::q(2);
    sing(1, 0) = LaurentPoly(1); sing(1, 1) = LaurentPoly::q();
    CHECK(qhsd::bareiss_determinant<LaurentPoly>(sing) == LaurentPoly(0));
}

TEST_CASE("bareiss over the Novikov ring") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> tnum(0, 4);
    std::uniform_int_distribution<int> qexp(-2, 2);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int iter = 0; iter < 25; ++iter) {
        DenseMatrix<NovikovElem> a(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                NovikovElem x;
                for (int t = 0; t < 2; ++t)
                    x += NovikovElem::monomial(qexp(rng), Rational(tnum(rng)), coeff(rng));
                a(i, j) = x;
            }
        CHECK(qhsd::bareiss_determinant<NovikovElem>(a) == cofactor_det<NovikovElem>(a));
    }
}

TEST_CASE("cramer numerators solve M x = e1 over Lambda") {
    // Multiplication matrix of h in QH(CP^1); determinant -q, a unit.
    DenseMatrix<LaurentPoly> m(2, 2);
    m(0, 0) = LaurentPoly(0); m(0, 1) = LaurentPoly::q();
    m(1, 0) = LaurentPoly(1); m(1, 1) = LaurentPoly(0);
    qhsd::DenseVector<LaurentPoly> rhs(2);
    rhs(0) = LaurentPoly(1); rhs(1) = LaurentPoly(0);
    auto nums = qhsd::cramer_numerators<LaurentPoly>(m, rhs);
    LaurentPoly det = qhsd::bareiss_determinant<LaurentPoly>(m);
    CHECK(det == LaurentPoly(0) - LaurentPoly::q());
    // M * (N_0, N_1) = det * rhs
    for (int i = 0; i < 2; ++i) {
        LaurentPoly acc(0);
        for (int k = 0; k < 2; ++k) acc += m(i, k) * nums[static_cast<std::size_t>(k)];
        CHECK(acc == rhs(i) * det);
    }
}
