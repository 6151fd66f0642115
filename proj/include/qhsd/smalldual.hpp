#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qhsd/errors.hpp"
#include "qhsd/numeric.hpp"

namespace qhsd {

// Arithmetic invariants of an embedded n-fold with defect k.  With b_2 = 1,
// 2C_X = n+k+2 and 2C_Sigma = n+k; the same formulas are used as defaults in
// the b_2 > 1 examples, where C_Sigma is what the Seidel enumerator needs.
// Landman: positive defect forces n = k (mod 2).
struct SmallDualProfile {
    int n = 0;
    int k = 0;
    bool b2_is_1 = true;

    int two_c_x = 0;      // n + k + 2
    int two_c_sigma = 0;  // n + k
    std::optional<int> c_x;
    std::optional<int> c_sigma;
    std::optional<int> ein_c1_coefficient;  // (n+k)/2 + 1
    int subcritical_index_bound = 0;        // n - k
    int maslov_sphere = 0;                  // N_L = 2C_Sigma = n + k
};

inline SmallDualProfile make_profile(int n, int k, bool b2_is_1) {
    if (n < 1) throw InvalidInput("make_profile: n must be >= 1");
    if (k < 0) throw InvalidInput("make_profile: k must be >= 0");
    if (k > 0 && (n - k) % 2 != 0)
        throw ParityViolation("def(X) = " + std::to_string(k) + " and dim(X) = " + std::to_string(n) +
                              " must have the same parity");
    SmallDualProfile p;
    p.n = n;
    p.k = k;
    p.b2_is_1 = b2_is_1;
    p.two_c_x = n + k + 2;
    p.two_c_sigma = n + k;
    if ((n + k) % 2 == 0) {
        p.c_x = (n + k + 2) / 2;
        p.c_sigma = (n + k) / 2;
        p.ein_c1_coefficient = (n + k) / 2 + 1;
    }
    p.subcritical_index_bound = n - k;
    p.maslov_sphere = n + k;
    return p;
}

// def(Sigma) = max{def(X) - 1, 0} for a smooth hyperplane section.
inline int hyperplane_defect(int def_x) {
    if (def_x < 0) throw InvalidInput("hyperplane_defect: def(X) must be >= 0");
    return std::max(def_x - 1, 0);
}

// Segre lower bound def(CP^n x Y) >= n - dim Y, clamped at zero.
inline int segre_defect_lower(int n, int dim_y) {
    if (n < 1 || dim_y < 0) throw InvalidInput("segre_defect_lower: need n >= 1, dimY >= 0");
    return std::max(n - dim_y, 0);
}

// The subcritical => positive-defect criterion applies when 2C_Sigma does not
// divide n; reports whether that hypothesis holds.
inline bool divisibility_obstruction(int n, int c_sigma) {
    if (n < 1 || c_sigma < 1) throw InvalidInput("divisibility_obstruction: positive inputs required");
    return n % (2 * c_sigma) != 0;
}

// ---------------------------------------------------------------------------
// Blow-up bookkeeping and the Seidel-contribution enumerator
// ---------------------------------------------------------------------------

struct CurveClassGenerator {
    std::string name;
    long h_value = 0;   // h(A) = [Sigma] . A
    long c1_value = 0;  // c_1^X(A)
};

// Generators of the cone R(X) of rational-curve classes.
struct CurveClassData {
    std::vector<CurveClassGenerator> generators;
};

struct BlowupChern {
    long c1_vertical = 0;  // c_1^v = c_1^X(A) + d - 2
    bool in_window = false;  // 2 - 2n <= 2 c_1^v <= 0
};

inline BlowupChern blowup_vertical_chern(long c1_a, long d, int n) {
    BlowupChern r;
    r.c1_vertical = c1_a + d - 2;
    r.in_window = (2 - 2 * static_cast<long>(n) <= 2 * r.c1_vertical) && (2 * r.c1_vertical <= 0);
    return r;
}

// A candidate section class j(A) + dF of the pencil fibration.
struct SectionClass {
    std::vector<long> combination;  // generator multiplicities; empty sum = A = 0
    long d = 0;
    long h_value = 0;       // = 1 - d
    long c1_value = 0;
    long vertical_chern = 0;
    long omega_area = 0;    // <[Omega~], A~> = 2 - d
    Rational t_exp;         // 2 - d
    Rational q_exp;         // (c_1^X(A) - h(A)) / C_Sigma
    bool q_exp_integral = true;

    bool is_fiber_term() const { return d == 1; }
};

struct SeidelEnumeration {
    std::vector<SectionClass> classes;             // F term first, then d = 0, -1, ...
    std::vector<SectionClass> rejected_non_integral;  // candidates with non-integer qExp
    bool nef_short_circuit = false;
    int d_min_used = 0;
};

// Enumerates every candidate contributor to S(pi_ell) per the constraints
// h(A) = 1-d and 3-d-n <= c_1^X(A) <= 2-d, for d in [dMin, 0], plus the F term
// (A = 0, d = 1).  When c_1 - h >= 2 on all generators (the nef criterion) the
// sum collapses to the F term immediately.  Candidates only: whether a class
// actually contributes is a moduli question outside this toolkit.
inline SeidelEnumeration enumerate_seidel_contributions(const SmallDualProfile& profile,
                                                        const CurveClassData& cone, int d_min = -10) {
    if (d_min > 1) throw InvalidInput("enumerate_seidel_contributions: dMin must be <= 1");
    if (!profile.c_sigma)
        throw InvalidInput("enumerate_seidel_contributions: profile has no integral C_Sigma");
    for (const auto& g : cone.generators)
        if (g.h_value < 1)
            throw UnboundedCone("generator " + g.name + " has h = " + std::to_string(g.h_value) +
                                "; h is ample so h >= 1 on curve classes");

    SeidelEnumeration out;
    out.d_min_used = d_min;
    const int n = profile.n;
    const long c_sigma = *profile.c_sigma;

    auto push = [&](std::vector<long> combo, long d) {
        SectionClass sc;
        sc.combination = std::move(combo);
        sc.d = d;
        for (std::size_t i = 0; i < sc.combination.size(); ++i) {
            sc.h_value += sc.combination[i] * cone.generators[i].h_value;
            sc.c1_value += sc.combination[i] * cone.generators[i].c1_value;
        }
        sc.vertical_chern = blowup_vertical_chern(sc.c1_value, d, n).c1_vertical;
        sc.omega_area = 2 - d;
        sc.t_exp = Rational(2 - d);
        sc.q_exp = Rational(sc.c1_value - sc.h_value, c_sigma);
        sc.q_exp_integral = is_integer(sc.q_exp);
        if (sc.q_exp_integral)
            out.classes.push_back(std::move(sc));
        else
            out.rejected_non_integral.push_back(std::move(sc));
    };

    // The F term: A = 0, d = 1; c_1^v(F) = -1.
    push(std::vector<long>(cone.generators.size(), 0), 1);

    bool nef = !cone.generators.empty();
    long min_excess = 0;
    for (std::size_t i = 0; i < cone.generators.size(); ++i) {
        long e = cone.generators[i].c1_value - cone.generators[i].h_value;
        if (i == 0 || e < min_excess) min_excess = e;
        if (e < 0) nef = false;
    }
    if (nef && min_excess >= 2) {
        out.nef_short_circuit = true;
        return out;
    }

    // h(A) = 1 - d with every generator of h-value >= 1 bounds the search.
    for (long d = 0; d >= d_min; --d) {
        const long h_target = 1 - d;
        std::vector<long> combo(cone.generators.size(), 0);
        std::function<void(std::size_t, long)> rec = [&](std::size_t idx, long remaining) {
            if (idx == cone.generators.size()) {
                if (remaining != 0) return;
                long c1 = 0;
                for (std::size_t i = 0; i < combo.size(); ++i)
                    c1 += combo[i] * cone.generators[i].c1_value;
                if (3 - d - n <= c1 && c1 <= 2 - d) push(combo, d);
                return;
            }
            const long h = cone.generators[idx].h_value;
            for (long m = 0; m * h <= remaining; ++m) {
                combo[idx] = m;
                rec(idx + 1, remaining - m * h);
            }
            combo[idx] = 0;
        };
        rec(0, h_target);
    }
    return out;
}

}  // namespace qhsd
