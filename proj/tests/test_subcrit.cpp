#include "doctest.h"

#include <cmath>

#include "qhsd/subcrit.hpp"

using namespace qhsd;
using Eigen::VectorXcd;

TEST_CASE("model validation") {
    validate_model(model_affine_line());
    validate_model(model_parabola());
    validate_model(model_nodal_cubic());
    validate_model(model_segre_p1xp2_chart());

    AffineChartModel degenerate = model_affine_line();
    degenerate.components[0] = degenerate.components[1];  // constant map: rank 0
    CHECK_THROWS_AS(validate_model(degenerate), InvalidInput);
}

TEST_CASE("affine line: one critical point of index 0") {
    AffineChartModel model = model_affine_line();
    VectorXcd w0(2);
    w0 << std::complex<double>(0.7, -0.3), std::complex<double>(1.1, 0.4);
    auto run = find_critical_points(model, w0, 12, 42);
    REQUIRE(run.records.size() == 1);
    const auto& rec = run.records[0];
    CHECK(rec.grad_residual <= 1e-8);
    CHECK(morse_index(rec) == 0);
    CHECK_FALSE(rec.degenerate);
    CHECK(g_rank(rec) == 0);
    // Foot of the perpendicular: u = 0.7 - 0.3i.
    CHECK(std::abs(rec.chart_point(0) - w0(0)) < 1e-9);
    CHECK(rec.orth_residual < 1e-9);
    CHECK(rec.pairing_residual <= 1e-4);
}

TEST_CASE("parabola with w0 = (0, 1): frozen calculus oracle") {
    // Critical points of |u|^2 + |u^2 - 1|^2 solve u + 2 conj(u)(u^2 - 1) = 0:
    // u = 0 (index 1, G = -2) and u = +-sqrt(1/2) (minima).
    AffineChartModel model = model_parabola();
    VectorXcd w0(2);
    w0 << std::complex<double>(0.0, 0.0), std::complex<double>(1.0, 0.0);
    auto run = find_critical_points(model, w0, 60, 7);
    REQUIRE(run.records.size() == 3);
    int saddles = 0, minima = 0;
    for (const auto& rec : run.records) {
        CHECK(rec.grad_residual <= 1e-8);
        CHECK_FALSE(rec.degenerate);
        CHECK(rec.pairing_residual <= 1e-4);
        CHECK(rec.index_eigen_consistent);
        double abs_u = std::abs(rec.chart_point(0));
        if (rec.morse_index == 1) {
            ++saddles;
            CHECK(abs_u < 1e-8);
            CHECK(g_rank(rec) == 1);
            // Hessian eigenvalues 2(1 +- 2) = (-2, 6).
            CHECK(rec.hessian_eigenvalues[0] == doctest::Approx(-2.0).epsilon(1e-6));
            CHECK(rec.hessian_eigenvalues[1] == doctest::Approx(6.0).epsilon(1e-6));
        } else {
            ++minima;
            CHECK(rec.morse_index == 0);
            CHECK(abs_u == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
        }
    }
    CHECK(saddles == 1);
    CHECK(minima == 2);
}

TEST_CASE("nodal cubic control: index-1 points occur and obey the k = 0 bound") {
    AffineChartModel model = model_nodal_cubic();
    bool saw_index_1 = false;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto run = run_generic_experiment(model, 25, seed);
        for (const auto& rec : run.records) {
            CHECK(rec.grad_residual <= 1e-8);
            if (rec.degenerate) continue;
            CHECK(rec.morse_index <= 1);  // ind <= dim_C Y for a psh function
            CHECK(rec.g_rank <= 1);
            CHECK(rec.pairing_residual <= 1e-4);
            if (rec.morse_index == 1) saw_index_1 = true;
        }
        if (saw_index_1) break;
    }
    CHECK(saw_index_1);
}

TEST_CASE("mountain-pass oracle: two minima force a saddle between them") {
    // Dense sampling of phi over the chart disc locates >= 2 separated local
    // minima of the parabola model at w0 = (0, 1); an index-1 point must then
    // exist, and the lab indeed reports one (frozen above).  This re-derives
    // the expectation independently of the Newton path.
    AffineChartModel model = model_parabola();
    VectorXcd w0(2);
    w0 << std::complex<double>(0.0, 0.0), std::complex<double>(1.0, 0.0);
    auto phi = [&](double re, double im) {
        std::complex<double> u(re, im);
        std::complex<double> z1 = u, z2 = u * u;
        return std::norm(z1 - w0(0)) + std::norm(z2 - w0(1));
    };
    int minima = 0;
    const int grid = 61;
    const double span = 1.6;
    for (int i = 1; i + 1 < grid; ++i)
        for (int j = 1; j + 1 < grid; ++j) {
            double re = -span + 2 * span * i / (grid - 1);
            double im = -span + 2 * span * j / (grid - 1);
            double h = 2 * span / (grid - 1);
            double c = phi(re, im);
            if (c < phi(re + h, im) && c < phi(re - h, im) && c < phi(re, im + h) &&
                c < phi(re, im - h) && c < phi(re + h, im + h) && c < phi(re - h, im - h) &&
                c < phi(re + h, im - h) && c < phi(re - h, im + h))
                ++minima;
        }
    CHECK(minima == 2);
}

TEST_CASE("segre chart: subcriticality bounds hold across seeds") {
    AffineChartModel model = model_segre_p1xp2_chart();
    const int bound = model.n - model.k;  // 2
    int nondegenerate_records = 0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        auto run = run_generic_experiment(model, 30, seed);
        CHECK_FALSE(run.no_convergence);
        for (const auto& rec : run.records) {
            if (rec.degenerate) continue;
            ++nondegenerate_records;
            CHECK(rec.grad_residual <= 1e-8);
            CHECK(rec.morse_index <= bound);
            CHECK(rec.g_rank <= bound);
            CHECK(rec.pairing_residual <= 1e-4);
            CHECK(rec.hessian_asymmetry <= 10 * 1e-6);
            CHECK(rec.index_eigen_consistent);
        }
    }
    CHECK(nondegenerate_records > 0);
}

TEST_CASE("degenerate and ill-conditioned records raise on direct queries") {
    CriticalPointRecord rec;
    rec.degenerate = true;
    CHECK_THROWS_AS(morse_index(rec), DegenerateCritical);
    CHECK_THROWS_AS(g_rank(rec), DegenerateCritical);
    rec.degenerate = false;
    rec.g_rank_ill_conditioned = true;
    CHECK_THROWS_AS(g_rank(rec), IllConditioned);
}
