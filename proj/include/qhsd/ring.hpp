#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qhsd/errors.hpp"
#include "qhsd/exact_linalg.hpp"
#include "qhsd/laurent.hpp"
#include "qhsd/novikov.hpp"

namespace qhsd {

// ---------------------------------------------------------------------------
// Coefficient-ring glue.  The graded module code is templated on the scalar:
// LaurentPoly for Lambda-rings, NovikovElem for A-rings.  Terms are exposed
// uniformly as (qExp, tExp, coeff).
// ---------------------------------------------------------------------------

struct CoeffTerm {
    std::int64_t q_exp = 0;
    Rational t_exp;
    Int coeff;
};

inline std::vector<CoeffTerm> coeff_terms(const LaurentPoly& p) {
    std::vector<CoeffTerm> out;
    out.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) out.push_back({e, Rational(0), c});
    return out;
}
inline std::vector<CoeffTerm> coeff_terms(const NovikovElem& x) {
    std::vector<CoeffTerm> out;
    out.reserve(x.terms().size());
    for (const auto& [k, c] : x.terms()) out.push_back({k.second, k.first, c});
    return out;
}

inline LaurentPoly coeff_constant_part(const LaurentPoly& p) { return LaurentPoly(p.coefficient(0)); }
inline NovikovElem coeff_constant_part(const NovikovElem& x) {
    return NovikovElem(x.coefficient(0, Rational(0)));
}

inline std::string coeff_str(const LaurentPoly& p) { return p.str(); }
inline std::string coeff_str(const NovikovElem& x) { return x.str(); }

// ---------------------------------------------------------------------------
// Presentations and elements
// ---------------------------------------------------------------------------

struct BasisClass {
    std::string name;
    int degree = 0;  // even, 0..2n
};

template <class Coeff>
struct QhElement {
    std::vector<Coeff> coords;  // one coefficient per basis class

    static QhElement zero(std::size_t rank) { return QhElement{std::vector<Coeff>(rank, Coeff(0))}; }
    static QhElement basis(std::size_t rank, std::size_t index, Coeff scale = Coeff(1)) {
        QhElement e = zero(rank);
        e.coords[index] = std::move(scale);
        return e;
    }

    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](const Coeff& c) { return c == Coeff(0); });
    }

    QhElement& operator+=(const QhElement& o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    QhElement& operator-=(const QhElement& o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }
    friend QhElement operator+(QhElement a, const QhElement& b) { a += b; return a; }
    friend QhElement operator-(QhElement a, const QhElement& b) { a -= b; return a; }
    friend QhElement operator*(const Coeff& s, QhElement a) {
        for (auto& c : a.coords) c = s * c;
        return a;
    }
    friend bool operator==(const QhElement& a, const QhElement& b) { return a.coords == b.coords; }
    friend bool operator!=(const QhElement& a, const QhElement& b) { return !(a == b); }
};

// A quantum cohomology ring as a finite free module over Lambda or A: graded
// basis, Poincare pairing, and the structure constants of the quantum product.
template <class Coeff>
struct RingPresentation {
    std::string name;
    std::vector<BasisClass> basis;
    int dimension = 0;      // complex dimension n; pairing is supported on degree sum 2n
    GradingSpec grading;    // deg(q) = 2C
    DenseMatrix<Int> pairing;
    // constants[i][j] = coordinates of e_i * e_j
    std::vector<std::vector<std::vector<Coeff>>> constants;
    std::map<std::string, std::vector<Coeff>> classes;  // distinguished elements (omega, c1, seidel, ...)

    std::size_t rank() const { return basis.size(); }

    int unit_index() const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].degree == 0) return static_cast<int>(i);
        throw AxiomViolation("presentation has no degree-0 basis class");
    }

    QhElement<Coeff> element(std::size_t index) const { return QhElement<Coeff>::basis(rank(), index); }
    QhElement<Coeff> unit() const { return element(static_cast<std::size_t>(unit_index())); }

    QhElement<Coeff> named_class(const std::string& id) const {
        auto it = classes.find(id);
        if (it == classes.end()) throw UnknownClass(id + " in ring " + name);
        return QhElement<Coeff>{it->second};
    }

    int basis_index(const std::string& id) const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].name == id) return static_cast<int>(i);
        return -1;
    }
};

using LambdaRing = RingPresentation<LaurentPoly>;
using NovikovRing = RingPresentation<NovikovElem>;

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

template <class Coeff>
QhElement<Coeff> quantum_mul(const RingPresentation<Coeff>& ring, const QhElement<Coeff>& a,
                             const QhElement<Coeff>& b) {
    const std::size_t r = ring.rank();
    if (a.coords.size() != r || b.coords.size() != r)
        throw InvalidInput("quantum_mul: element rank does not match ring");
    QhElement<Coeff> out = QhElement<Coeff>::zero(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (a.coords[i] == Coeff(0)) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (b.coords[j] == Coeff(0)) continue;
            Coeff scale = a.coords[i] * b.coords[j];
            const auto& sc = ring.constants[i][j];
            for (std::size_t m = 0; m < r; ++m) {
                if (sc[m] == Coeff(0)) continue;
                out.coords[m] += scale * sc[m];
            }
        }
    }
    return out;
}

// Classical part of the quantum product: the q^0 T^0 layer.
template <class Coeff>
QhElement<Coeff> cup_mul(const RingPresentation<Coeff>& ring, const QhElement<Coeff>& a,
                         const QhElement<Coeff>& b) {
    QhElement<Coeff> out = quantum_mul(ring, a, b);
    for (auto& c : out.coords) c = coeff_constant_part(c);
    return out;
}

// Matrix of x -> a*x in the module basis.
template <class Coeff>
DenseMatrix<Coeff> mul_matrix(const RingPresentation<Coeff>& ring, const QhElement<Coeff>& a) {
    const std::size_t r = ring.rank();
    DenseMatrix<Coeff> m(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        QhElement<Coeff> col = quantum_mul(ring, a, ring.element(j));
        for (std::size_t i = 0; i < r; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col.coords[i];
    }
    return m;
}

// Degree of an element under QH^j = (+)_l H^{j-2lC} q^l, or nullopt for mixed.
template <class Coeff>
std::optional<int> homogeneous_degree(const RingPresentation<Coeff>& ring, const QhElement<Coeff>& a) {
    std::optional<int> deg;
    for (std::size_t m = 0; m < a.coords.size(); ++m) {
        for (const CoeffTerm& t : coeff_terms(a.coords[m])) {
            (void)t.coeff;
            std::int64_t d = ring.basis[m].degree + t.q_exp * ring.grading.q_degree;
            if (!deg) deg = static_cast<int>(d);
            else if (*deg != d) return std::nullopt;
        }
    }
    return deg;  // zero element reports nullopt-free: no terms -> deg stays unset
}

// Coefficient of q^i, as integer coordinates on the cohomology basis (Lambda only).
inline std::vector<Int> extract_degree_component(const LambdaRing& ring,
                                                 const QhElement<LaurentPoly>& a, std::int64_t i) {
    std::vector<Int> out(ring.rank(), Int(0));
    for (std::size_t m = 0; m < ring.rank(); ++m) out[m] = a.coords[m].coefficient(i);
    return out;
}

// Pairing extended bilinearly over the coefficient ring.
template <class Coeff>
Coeff pair_elements(const RingPresentation<Coeff>& ring, const QhElement<Coeff>& a,
                    const QhElement<Coeff>& b) {
    Coeff acc(0);
    const std::size_t r = ring.rank();
    for (std::size_t i = 0; i < r; ++i) {
        if (a.coords[i] == Coeff(0)) continue;
        for (std::size_t j = 0; j < r; ++j) {
            const Int& p = ring.pairing(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            if (p == 0 || b.coords[j] == Coeff(0)) continue;
            acc += Coeff(p) * (a.coords[i] * b.coords[j]);
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Invertibility and inversion
// ---------------------------------------------------------------------------

template <class Coeff>
void require_homogeneous(const RingPresentation<Coeff>& ring, const QhElement<Coeff>& a,
                         const char* op) {
    if (!homogeneous_degree(ring, a) && !a.is_zero())
        throw DegreeMismatch(std::string(op) + " requires a homogeneous element");
}

// Over Lambda: a is invertible iff det of its multiplication matrix is a unit
// of Lambda (i.e. +-q^r).  Over A: iff the minimal-tExp layer of that
// determinant is a unit of Lambda, in which case a Neumann series inverts it.
inline bool is_invertible(const LambdaRing& ring, const QhElement<LaurentPoly>& a) {
    require_homogeneous(ring, a, "is_invertible");
    if (a.is_zero()) return false;
    LaurentPoly det = bareiss_determinant<LaurentPoly>(mul_matrix(ring, a));
    return laurent_is_unit(det);
}

inline bool is_invertible(const NovikovRing& ring, const QhElement<NovikovElem>& a) {
    require_homogeneous(ring, a, "is_invertible");
    if (a.is_zero()) return false;
    for (const auto& c : a.coords)
        if (c.truncated())
            throw TruncationTooSmall("is_invertible: element carries truncated coefficients");
    NovikovElem det = bareiss_determinant<NovikovElem>(mul_matrix(ring, a));
    if (det.is_zero()) {
        if (det.truncated()) throw TruncationTooSmall("is_invertible: determinant fully truncated");
        return false;
    }
    return det.min_t_layer().is_unit();
}

inline QhElement<LaurentPoly> invert(const LambdaRing& ring, const QhElement<LaurentPoly>& a) {
    require_homogeneous(ring, a, "invert");
    DenseMatrix<LaurentPoly> m = mul_matrix(ring, a);
    LaurentPoly det = bareiss_determinant<LaurentPoly>(m);
    if (!laurent_is_unit(det))
        throw NotInvertible("det(mul_matrix) = " + det.str() + " is not a unit of Lambda");
    DenseVector<LaurentPoly> rhs(ring.rank());
    for (std::size_t i = 0; i < ring.rank(); ++i) rhs(static_cast<Eigen::Index>(i)) = LaurentPoly(0);
    rhs(ring.unit_index()) = LaurentPoly(1);
    std::vector<LaurentPoly> nums = cramer_numerators<LaurentPoly>(m, rhs);
    // det = +-q^r; dividing by it is multiplication by +-q^{-r}.
    const auto& [r_exp, r_coeff] = *det.terms().begin();
    LaurentPoly det_inv = LaurentPoly::monomial(-r_exp, r_coeff);  // coeff is +-1
    QhElement<LaurentPoly> x = QhElement<LaurentPoly>::zero(ring.rank());
    for (std::size_t i = 0; i < ring.rank(); ++i) x.coords[i] = nums[i] * det_inv;
    return x;
}

inline QhElement<NovikovElem> invert(const NovikovRing& ring, const QhElement<NovikovElem>& a,
                                     const Rational& cap) {
    require_homogeneous(ring, a, "invert");
    DenseMatrix<NovikovElem> m = mul_matrix(ring, a);
    NovikovElem det = bareiss_determinant<NovikovElem>(m);
    if (det.is_zero() || !det.min_t_layer().is_unit())
        throw NotInvertible("det(mul_matrix) = " + det.str() + " has no unit leading layer");
    DenseVector<NovikovElem> rhs(ring.rank());
    for (std::size_t i = 0; i < ring.rank(); ++i) rhs(static_cast<Eigen::Index>(i)) = NovikovElem(0);
    rhs(ring.unit_index()) = NovikovElem(1);
    std::vector<NovikovElem> nums = cramer_numerators<NovikovElem>(m, rhs);  // exact polynomials
    Rational min_t(0);
    bool any = false;
    for (const auto& nm : nums)
        if (auto t = nm.min_term()) {
            min_t = any ? std::min(min_t, t->t_exp) : t->t_exp;
            any = true;
        }
    if (!any) throw NotInvertible("all Cramer numerators vanish");
    NovikovElem det_inv = novikov_geometric_inverse(det, cap - min_t);
    QhElement<NovikovElem> x = QhElement<NovikovElem>::zero(ring.rank());
    for (std::size_t i = 0; i < ring.rank(); ++i)
        x.coords[i] = (nums[i] * det_inv).truncate_to(cap);
    return x;
}

template <class Coeff>
std::string element_str(const RingPresentation<Coeff>& ring, const QhElement<Coeff>& a) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == Coeff(0)) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff_str(a.coords[i]) << ") " << ring.basis[i].name;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace qhsd
