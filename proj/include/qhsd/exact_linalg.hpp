#pragma once

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

#include "qhsd/errors.hpp"
#include "qhsd/laurent.hpp"
#include "qhsd/novikov.hpp"
#include "qhsd/numeric.hpp"

namespace Eigen {

template <>
struct NumTraits<qhsd::LaurentPoly> : GenericNumTraits<qhsd::LaurentPoly> {
    typedef qhsd::LaurentPoly Real;
    typedef qhsd::LaurentPoly NonInteger;
    typedef qhsd::LaurentPoly Nested;
    typedef qhsd::LaurentPoly Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64,
    };
    static int digits10() { return 0; }
};

template <>
struct NumTraits<qhsd::NovikovElem> : GenericNumTraits<qhsd::NovikovElem> {
    typedef qhsd::NovikovElem Real;
    typedef qhsd::NovikovElem NonInteger;
    typedef qhsd::NovikovElem Nested;
    typedef qhsd::NovikovElem Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64,
    };
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace qhsd {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline Int ring_exact_div(const Int& a, const Int& b, const char* context = "exact_div") {
    if (b == 0) throw Error(std::string(context) + ": division by zero");
    if (a % b != 0) throw Error(std::string(context) + ": inexact integer division");
    return a / b;
}
inline LaurentPoly ring_exact_div(const LaurentPoly& a, const LaurentPoly& b,
                                  const char* context = "exact_div") {
    return LaurentPoly::exact_div(a, b, context);
}
inline NovikovElem ring_exact_div(const NovikovElem& a, const NovikovElem& b,
                                  const char* context = "exact_div") {
    return NovikovElem::exact_div(a, b, context);
}

template <class Scalar>
DenseMatrix<Scalar> identity_matrix(Eigen::Index n) {
    DenseMatrix<Scalar> m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Scalar(i == j ? 1 : 0);
    return m;
}

// Plain coefficient-loop product; Eigen's gemm path expects conj() and friends
// which ring scalars do not provide.
template <class Scalar>
DenseMatrix<Scalar> mat_mul(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
    if (a.cols() != b.rows()) throw InvalidInput("mat_mul: shape mismatch");
    DenseMatrix<Scalar> r(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            Scalar acc(0);
            for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            r(i, j) = std::move(acc);
        }
    return r;
}

template <class Scalar>
bool mat_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <class Scalar>
DenseVector<Scalar> mat_apply(const DenseMatrix<Scalar>& a, const DenseVector<Scalar>& x) {
    if (a.cols() != x.size()) throw InvalidInput("mat_apply: shape mismatch");
    DenseVector<Scalar> r(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Scalar acc(0);
        for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * x(k);
        r(i) = std::move(acc);
    }
    return r;
}

// Fraction-free Bareiss elimination over any integral domain with exact
// division.  Intermediate entries stay in the ring; each 2x2 Sylvester
// quotient divides exactly by the previous pivot.
template <class Scalar>
Scalar bareiss_determinant(DenseMatrix<Scalar> m) {
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw InvalidInput("bareiss_determinant: non-square matrix");
    if (n == 0) return Scalar(1);
    int sign = 1;
    Scalar prev(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == Scalar(0)) {
            Eigen::Index pivot = -1;
            for (Eigen::Index r = k + 1; r < n; ++r)
                if (!(m(r, k) == Scalar(0))) { pivot = r; break; }
            if (pivot < 0) return Scalar(0);
            for (Eigen::Index c = k; c < n; ++c) std::swap(m(k, c), m(pivot, c));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Scalar num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = ring_exact_div(num, prev, "bareiss");
            }
            m(i, k) = Scalar(0);
        }
        prev = m(k, k);
    }
    Scalar det = m(n - 1, n - 1);
    return sign < 0 ? Scalar(0) - det : det;
}

// Cramer column: determinants of m with column i replaced by rhs.  Division by
// det(m) is left to the caller (over Lambda the determinant is a unit; over
// the Novikov ring it is inverted by a Neumann series).
template <class Scalar>
std::vector<Scalar> cramer_numerators(const DenseMatrix<Scalar>& m, const DenseVector<Scalar>& rhs) {
    const Eigen::Index n = m.rows();
    if (n != m.cols() || rhs.size() != n) throw InvalidInput("cramer_numerators: shape mismatch");
    std::vector<Scalar> out;
    out.reserve(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        DenseMatrix<Scalar> mi = m;
        for (Eigen::Index r = 0; r < n; ++r) mi(r, i) = rhs(r);
        out.push_back(bareiss_determinant<Scalar>(std::move(mi)));
    }
    return out;
}

inline Int integer_determinant(const DenseMatrix<Int>& m) { return bareiss_determinant<Int>(m); }

}  // namespace qhsd
