#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhsd/errors.hpp"
#include "qhsd/numeric.hpp"

namespace qhsd {

// Sparse monomial of a polynomial map C^m -> C: coeff * prod u_i^{e_i}.
// Coefficients are exact rationals in the model file, doubles at runtime.
struct ChartMonomial {
    Rational coeff;
    std::vector<int> exponents;
};

struct ChartPolynomial {
    std::vector<ChartMonomial> terms;
};

// Polynomial parametrization of an affine chart of Y = X \ Sigma inside C^N,
// with the declared (n, k) profile of X and the chart domain bound R beyond
// which converged points are discarded (they may belong to another chart).
struct AffineChartModel {
    std::string name;
    int vars = 0;     // m
    int ambient = 0;  // N
    int n = 0;
    int k = 0;
    double chart_bound = 2.0;
    std::vector<ChartPolynomial> components;  // N polynomials in m variables
};

struct SubcritTolerances {
    double grad = 1e-8;     // accepted finite-difference gradient residual
    double eig = 1e-6;      // eigenvalue zero threshold (degeneracy / index)
    double dedup = 1e-6;    // chart-coordinate deduplication distance
    double rank = 1e-5;     // singular-value threshold for rank_C G
    double fd_step = 1e-5;  // central-difference step (Richardson-refined)
    double pair = 1e-4;     // accepted +-lambda pairing defect of Re G
};

struct CriticalPointRecord {
    Eigen::VectorXcd chart_point;   // u in C^m
    Eigen::VectorXcd ambient_point; // z(u) in C^N
    double value = 0.0;             // phi(u) = |z(u) - w0|^2
    double grad_residual = 0.0;     // central-difference gradient norm
    double orth_residual = 0.0;     // |Proj_{T_z Y}(z - w0)|
    double hessian_asymmetry = 0.0; // FD Hessian symmetry defect before symmetrization
    std::vector<double> hessian_eigenvalues;  // sorted ascending, 2m of them
    int morse_index = 0;            // eigenvalues < -tol.eig
    bool degenerate = false;        // some |eigenvalue| <= tol.eig
    int g_rank = 0;                 // estimated rank_C G (singular values > tol.rank)
    bool g_rank_ill_conditioned = false;
    double g_rank_gap_low = 0.0;    // singular-value interval around the threshold
    double g_rank_gap_high = 0.0;
    double pairing_residual = 0.0;  // max |lambda_i + lambda_{2m-1-i}| of recovered Re G
    bool index_eigen_consistent = true;  // #neg(Hess) == #(eig Re G < -1)
};

struct SubcritRun {
    std::uint64_t seed = 0;
    Eigen::VectorXcd w0;
    int starts = 0;
    int converged = 0;
    int discarded_out_of_chart = 0;
    bool no_convergence = false;
    int genericity_attempts = 1;  // w0 resamples until no degenerate record
    std::vector<CriticalPointRecord> records;

    int max_morse_index() const {
        int m = 0;
        for (const auto& r : records)
            if (!r.degenerate) m = std::max(m, r.morse_index);
        return m;
    }
    int max_g_rank() const {
        int m = 0;
        for (const auto& r : records)
            if (!r.degenerate) m = std::max(m, r.g_rank);
        return m;
    }
};

// Validates the full-rank invariant of the chart Jacobian on a random sample;
// throws InvalidInput on failure.
void validate_model(const AffineChartModel& model, std::uint64_t seed = 1);

// Multistart damped Newton on the real gradient of phi_{w0} in chart
// coordinates.  Converged points inside the chart bound are deduplicated and
// analyzed (finite-difference Hessian, Morse index, recovered G).  Zero
// converged starts is reported via no_convergence, not an exception.
SubcritRun find_critical_points(const AffineChartModel& model, const Eigen::VectorXcd& w0,
                                int starts, std::uint64_t seed,
                                const SubcritTolerances& tol = {});

// Gaussian w0, resampled until no converged start is degenerate (Morse
// genericity by rejection).  The chosen w0 and attempt count are in the run.
SubcritRun run_generic_experiment(const AffineChartModel& model, int starts, std::uint64_t seed,
                                  const SubcritTolerances& tol = {});

// Morse index of a converged record; throws DegenerateCritical when some
// eigenvalue sits inside the zero threshold.
int morse_index(const CriticalPointRecord& record, const SubcritTolerances& tol = {});

// Estimated complex rank of G at a converged nondegenerate record; throws
// IllConditioned when singular values cluster at the threshold.
int g_rank(const CriticalPointRecord& record, const SubcritTolerances& tol = {});

// Bundled models.
AffineChartModel model_affine_line();        // C -> C^2, u |-> (u, 0)
AffineChartModel model_parabola();           // C -> C^2, u |-> (u, u^2)
AffineChartModel model_nodal_cubic();        // C -> C^2, u |-> (u^2 - 1, u^3 - u)
AffineChartModel model_segre_p1xp2_chart();  // C^3 -> C^5, (u,v1,v2) |-> (v1,v2,u,uv1,uv2)

}  // namespace qhsd
