#pragma once

#include <string>
#include <vector>

#include "qhsd/ring.hpp"

namespace qhsd {

struct AxiomViolationEntry {
    std::string category;  // basis | pairing | unit | commutativity | homogeneity | deformation | frobenius | associativity
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolationEntry> violations;
    bool ok() const { return violations.empty(); }

    std::string summary() const {
        if (ok()) return "ok";
        std::string s = std::to_string(violations.size()) + " violation(s):";
        for (const auto& v : violations) s += "\n  [" + v.category + "] " + v.detail;
        return s;
    }
};

// Verifies the Frobenius-algebra structure of a presentation on basis tuples:
// grading, pairing, unit and commutativity laws, associativity on all basis
// triples, the deformation constraints on the classical layer, and the
// Frobenius compatibility <a*b, c> = <a, b*c>.  Failures are report entries,
// never exceptions.
template <class Coeff>
AxiomReport check_ring_axioms(const RingPresentation<Coeff>& ring) {
    AxiomReport rep;
    auto flag = [&rep](const std::string& cat, const std::string& det) {
        rep.violations.push_back({cat, det});
    };
    const std::size_t r = ring.rank();
    const int two_n = 2 * ring.dimension;

    // Basis sanity: one unit class, even degrees within [0, 2n].
    int units = 0;
    for (const auto& b : ring.basis) {
        if (b.degree == 0) ++units;
        if (b.degree < 0 || b.degree > two_n || b.degree % 2 != 0)
            flag("basis", "class " + b.name + " has degree " + std::to_string(b.degree) +
                              " outside the even range [0, " + std::to_string(two_n) + "]");
    }
    if (units != 1)
        flag("basis", "expected exactly one degree-0 class, found " + std::to_string(units));
    if (!ring.grading.valid())
        flag("basis", "grading spec invalid: deg(q) = " + std::to_string(ring.grading.q_degree));
    if (ring.constants.size() != r)
        flag("basis", "structure constant table rank mismatch");
    if (!rep.ok()) return rep;  // the remaining checks assume a sane shape

    // Pairing: symmetric, unimodular, supported on complementary degrees.
    if (ring.pairing.rows() != static_cast<Eigen::Index>(r) ||
        ring.pairing.cols() != static_cast<Eigen::Index>(r)) {
        flag("pairing", "pairing matrix shape mismatch");
        return rep;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const Int& p = ring.pairing(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            if (p != ring.pairing(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i))) {
                flag("pairing", "pairing not symmetric at (" + ring.basis[i].name + ", " + ring.basis[j].name + ")");
            }
            if (p != 0 && ring.basis[i].degree + ring.basis[j].degree != two_n)
                flag("pairing", "pairing nonzero off complementary degrees at (" + ring.basis[i].name +
                                    ", " + ring.basis[j].name + ")");
        }
    {
        Int pdet = integer_determinant(ring.pairing);
        if (pdet != 1 && pdet != -1)
            flag("pairing", "pairing determinant " + pdet.str() + " is not +-1");
    }

    const int u = ring.unit_index();
    for (std::size_t j = 0; j < r; ++j) {
        QhElement<Coeff> expect = ring.element(j);
        if (QhElement<Coeff>{ring.constants[static_cast<std::size_t>(u)][j]} != expect)
            flag("unit", "1 * " + ring.basis[j].name + " != " + ring.basis[j].name);
    }

    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (ring.constants[i][j] != ring.constants[j][i])
                flag("commutativity", ring.basis[i].name + " * " + ring.basis[j].name + " asymmetric");

    // Degree homogeneity of every structure constant, plus the deformation
    // constraints on the classical layer: the q^0 T^0 part must vanish above
    // degree 2n, and quantum corrections must have positive q-power (Lambda)
    // or positive area (A).
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const int want = ring.basis[i].degree + ring.basis[j].degree;
            for (std::size_t m = 0; m < r; ++m) {
                for (const CoeffTerm& t : coeff_terms(ring.constants[i][j][m])) {
                    std::int64_t got = ring.basis[m].degree + t.q_exp * ring.grading.q_degree;
                    if (got != want)
                        flag("homogeneity", ring.basis[i].name + " * " + ring.basis[j].name +
                                                " has a term of degree " + std::to_string(got) +
                                                " on " + ring.basis[m].name + ", expected " +
                                                std::to_string(want));
                    const bool classical = (t.q_exp == 0 && t.t_exp == 0);
                    if (classical && want > two_n)
                        flag("deformation", ring.basis[i].name + " * " + ring.basis[j].name +
                                                " has a classical term above degree 2n");
                    if (!classical && t.q_exp < 0)
                        flag("deformation", ring.basis[i].name + " * " + ring.basis[j].name +
                                                " has a quantum correction with negative q-power");
                    if (!classical && t.q_exp == 0 && t.t_exp <= 0)
                        flag("deformation", ring.basis[i].name + " * " + ring.basis[j].name +
                                                " has a non-classical term without positive area");
                }
            }
        }

    for (std::size_t i = 0; i < r && rep.violations.size() < 256; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            QhElement<Coeff> eij{ring.constants[i][j]};
            for (std::size_t k = 0; k < r; ++k) {
                QhElement<Coeff> left = quantum_mul(ring, eij, ring.element(k));
                QhElement<Coeff> right =
                    quantum_mul(ring, ring.element(i), QhElement<Coeff>{ring.constants[j][k]});
                if (left != right)
                    flag("associativity", "(" + ring.basis[i].name + " * " + ring.basis[j].name +
                                              ") * " + ring.basis[k].name + " != " +
                                              ring.basis[i].name + " * (" + ring.basis[j].name +
                                              " * " + ring.basis[k].name + ")");
                Coeff lp = pair_elements(ring, eij, ring.element(k));
                Coeff rp = pair_elements(ring, ring.element(i), QhElement<Coeff>{ring.constants[j][k]});
                if (lp != rp)
                    flag("frobenius", "<" + ring.basis[i].name + " * " + ring.basis[j].name + ", " +
                                          ring.basis[k].name + "> != <" + ring.basis[i].name + ", " +
                                          ring.basis[j].name + " * " + ring.basis[k].name + ">");
            }
        }

    return rep;
}

}  // namespace qhsd
