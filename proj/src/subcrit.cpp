#include "qhsd/subcrit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace qhsd {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using Complex = std::complex<double>;

struct Evaluation {
    VectorXcd z;                      // N
    MatrixXcd jac;                    // N x m
    std::vector<MatrixXcd> second;    // per component, m x m complex symmetric
};

Evaluation evaluate(const AffineChartModel& model, const VectorXcd& u, bool with_second) {
    const int m = model.vars;
    const int n_amb = model.ambient;
    Evaluation ev;
    ev.z = VectorXcd::Zero(n_amb);
    ev.jac = MatrixXcd::Zero(n_amb, m);
    if (with_second) ev.second.assign(static_cast<std::size_t>(n_amb), MatrixXcd::Zero(m, m));

    // Power tables per variable, up to the largest exponent in the model.
    int max_exp = 1;
    for (const auto& comp : model.components)
        for (const auto& t : comp.terms)
            for (int e : t.exponents) max_exp = std::max(max_exp, e);
    std::vector<std::vector<Complex>> pw(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        pw[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(max_exp) + 1, Complex(1.0, 0.0));
        for (int d = 1; d <= max_exp; ++d)
            pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] =
                pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 1)] * u(i);
    }
    auto power = [&](int var, int e) -> Complex {
        if (e < 0) return Complex(0.0, 0.0);
        return pw[static_cast<std::size_t>(var)][static_cast<std::size_t>(e)];
    };

    for (int c = 0; c < n_amb; ++c) {
        for (const auto& t : model.components[static_cast<std::size_t>(c)].terms) {
            const double coeff = static_cast<double>(t.coeff);
            Complex base(coeff, 0.0);
            for (int i = 0; i < m; ++i) base *= power(i, t.exponents[static_cast<std::size_t>(i)]);
            ev.z(c) += base;
            for (int j = 0; j < m; ++j) {
                const int ej = t.exponents[static_cast<std::size_t>(j)];
                if (ej == 0) continue;
                Complex dj(coeff * ej, 0.0);
                for (int i = 0; i < m; ++i)
                    dj *= power(i, t.exponents[static_cast<std::size_t>(i)] - (i == j ? 1 : 0));
                ev.jac(c, j) += dj;
            }
            if (!with_second) continue;
            for (int j = 0; j < m; ++j)
                for (int l = j; l < m; ++l) {
                    const int ej = t.exponents[static_cast<std::size_t>(j)];
                    const int el = t.exponents[static_cast<std::size_t>(l)];
                    double factor;
                    if (j == l) {
                        if (ej < 2) continue;
                        factor = coeff * ej * (ej - 1);
                    } else {
                        if (ej == 0 || el == 0) continue;
                        factor = coeff * ej * el;
                    }
                    Complex d2(factor, 0.0);
                    for (int i = 0; i < m; ++i) {
                        int e = t.exponents[static_cast<std::size_t>(i)];
                        if (i == j) e -= (j == l ? 2 : 1);
                        if (i == l && j != l) e -= 1;
                        d2 *= power(i, e);
                    }
                    ev.second[static_cast<std::size_t>(c)](j, l) += d2;
                    if (j != l) ev.second[static_cast<std::size_t>(c)](l, j) += d2;
                }
        }
    }
    return ev;
}

VectorXcd to_complex(const VectorXd& x) {
    const int m = static_cast<int>(x.size()) / 2;
    VectorXcd u(m);
    for (int i = 0; i < m; ++i) u(i) = Complex(x(i), x(m + i));
    return u;
}

// Realification of a complex-linear map: (x; y) basis for x + iy.
MatrixXd realify_linear(const MatrixXcd& l) {
    const int m = static_cast<int>(l.rows());
    MatrixXd r(2 * m, 2 * m);
    r.topLeftCorner(m, m) = l.real();
    r.topRightCorner(m, m) = -l.imag();
    r.bottomLeftCorner(m, m) = l.imag();
    r.bottomRightCorner(m, m) = l.real();
    return r;
}

double phi_value(const AffineChartModel& model, const VectorXcd& w0, const VectorXd& x) {
    Evaluation ev = evaluate(model, to_complex(x), false);
    return (ev.z - w0).squaredNorm();
}

// grad phi = 2 (Re(J^H r); Im(J^H r)) in the (x; y) coordinates.
VectorXd analytic_gradient(const AffineChartModel& model, const VectorXcd& w0, const VectorXd& x) {
    Evaluation ev = evaluate(model, to_complex(x), false);
    VectorXcd g = ev.jac.adjoint() * (ev.z - w0);
    const int m = static_cast<int>(g.size());
    VectorXd out(2 * m);
    for (int i = 0; i < m; ++i) {
        out(i) = 2.0 * g(i).real();
        out(m + i) = 2.0 * g(i).imag();
    }
    return out;
}

// Hess phi = 2 (realified Hermitian J^H J + realified Re of the complex
// symmetric form S_{jk} = sum_c z''_{c,jk} conj(r_c)); the S block is the
// second-fundamental-form pairing in chart coordinates.
MatrixXd analytic_hessian(const AffineChartModel& model, const VectorXcd& w0, const VectorXd& x) {
    Evaluation ev = evaluate(model, to_complex(x), true);
    const int m = model.vars;
    VectorXcd r = ev.z - w0;
    MatrixXcd metric = ev.jac.adjoint() * ev.jac;
    MatrixXcd s = MatrixXcd::Zero(m, m);
    for (int c = 0; c < model.ambient; ++c) s += std::conj(r(c)) * ev.second[static_cast<std::size_t>(c)];
    MatrixXd h(2 * m, 2 * m);
    MatrixXd mr = metric.real(), mi = metric.imag();
    MatrixXd sr = s.real(), si = s.imag();
    h.topLeftCorner(m, m) = mr + sr;
    h.topRightCorner(m, m) = -mi - si;
    h.bottomLeftCorner(m, m) = mi - si;
    h.bottomRightCorner(m, m) = mr - sr;
    return 2.0 * h;
}

VectorXd fd_gradient_step(const AffineChartModel& model, const VectorXcd& w0, const VectorXd& x,
                          double h) {
    const int dim = static_cast<int>(x.size());
    VectorXd g(dim);
    VectorXd p = x;
    for (int i = 0; i < dim; ++i) {
        p(i) = x(i) + h;
        double fp = phi_value(model, w0, p);
        p(i) = x(i) - h;
        double fm = phi_value(model, w0, p);
        p(i) = x(i);
        g(i) = (fp - fm) / (2.0 * h);
    }
    return g;
}

VectorXd fd_gradient(const AffineChartModel& model, const VectorXcd& w0, const VectorXd& x,
                     double h) {
    // Richardson refinement of the central difference.
    VectorXd g1 = fd_gradient_step(model, w0, x, h);
    VectorXd g2 = fd_gradient_step(model, w0, x, h / 2.0);
    return (4.0 * g2 - g1) / 3.0;
}

MatrixXd fd_hessian_step(const AffineChartModel& model, const VectorXcd& w0, const VectorXd& x,
                         double h) {
    const int dim = static_cast<int>(x.size());
    MatrixXd hess(dim, dim);
    VectorXd p = x;
    for (int j = 0; j < dim; ++j) {
        p(j) = x(j) + h;
        VectorXd gp = analytic_gradient(model, w0, p);
        p(j) = x(j) - h;
        VectorXd gm = analytic_gradient(model, w0, p);
        p(j) = x(j);
        hess.col(j) = (gp - gm) / (2.0 * h);
    }
    return hess;
}

MatrixXd fd_hessian(const AffineChartModel& model, const VectorXcd& w0, const VectorXd& x,
                    double h) {
    MatrixXd h1 = fd_hessian_step(model, w0, x, h);
    MatrixXd h2 = fd_hessian_step(model, w0, x, h / 2.0);
    return (4.0 * h2 - h1) / 3.0;
}

// Damped Newton on the gradient; returns the converged point or nullopt.
std::optional<VectorXd> newton_solve(const AffineChartModel& model, const VectorXcd& w0,
                                     VectorXd x, double chart_bound) {
    const int dim = static_cast<int>(x.size());
    double mu = 0.0;
    for (int iter = 0; iter < 400; ++iter) {
        VectorXd g = analytic_gradient(model, w0, x);
        double gn = g.norm();
        if (!std::isfinite(gn)) return std::nullopt;
        if (gn < 1e-12) return x;
        MatrixXd h = analytic_hessian(model, w0, x);
        bool accepted = false;
        for (int inner = 0; inner < 60; ++inner) {
            MatrixXd hm = h + mu * MatrixXd::Identity(dim, dim);
            Eigen::LDLT<MatrixXd> ldlt(hm);
            VectorXd step = ldlt.solve(-g);
            if (ldlt.info() == Eigen::Success && step.allFinite()) {
                VectorXd cand = x + step;
                double gc = analytic_gradient(model, w0, cand).norm();
                if (std::isfinite(gc) && gc < gn) {
                    x = cand;
                    mu = mu / 3.0;
                    if (mu < 1e-14) mu = 0.0;
                    accepted = true;
                    break;
                }
            }
            mu = mu == 0.0 ? 1e-4 : mu * 10.0;
            if (mu > 1e14) return std::nullopt;
        }
        if (!accepted) return std::nullopt;
        if (x.norm() > 60.0 * chart_bound) return std::nullopt;
    }
    return std::nullopt;
}

CriticalPointRecord analyze_point(const AffineChartModel& model, const VectorXcd& w0,
                                  const VectorXd& x, const SubcritTolerances& tol) {
    const int m = model.vars;
    CriticalPointRecord rec;
    rec.chart_point = to_complex(x);
    Evaluation ev = evaluate(model, rec.chart_point, false);
    rec.ambient_point = ev.z;
    VectorXcd r = ev.z - w0;
    rec.value = r.squaredNorm();
    rec.grad_residual = fd_gradient(model, w0, x, tol.fd_step).norm();

    // Orthogonality residual |Proj_{T_z Y}(z - w0)| via a thin QR of the Jacobian.
    Eigen::HouseholderQR<MatrixXcd> qr(ev.jac);
    MatrixXcd thin_q = qr.householderQ() * MatrixXcd::Identity(model.ambient, m);
    rec.orth_residual = (thin_q.adjoint() * r).norm();

    MatrixXd hess = fd_hessian(model, w0, x, tol.fd_step);
    rec.hessian_asymmetry = (hess - hess.transpose()).cwiseAbs().maxCoeff();
    MatrixXd sym = 0.5 * (hess + hess.transpose());
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(sym);
    rec.hessian_eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + 2 * m);
    rec.morse_index = 0;
    rec.degenerate = false;
    for (double ev_h : rec.hessian_eigenvalues) {
        if (ev_h < -tol.eig) ++rec.morse_index;
        if (std::abs(ev_h) <= tol.eig) rec.degenerate = true;
    }

    // Recover Re G: pass to an h-orthonormal tangent frame (beta = R alpha), so
    // that Hess/2 = I + Re G there; then split the realified complex-symmetric
    // structure back out.
    MatrixXcd r_factor = qr.matrixQR().topRows(m).triangularView<Eigen::Upper>();
    MatrixXcd r_inv = r_factor.inverse();
    MatrixXd t = realify_linear(r_inv);
    MatrixXd k = 0.5 * (t.transpose() * sym * t) - MatrixXd::Identity(2 * m, 2 * m);
    k = 0.5 * (k + k.transpose());

    Eigen::SelfAdjointEigenSolver<MatrixXd> ek(k);
    VectorXd lam = ek.eigenvalues();
    rec.pairing_residual = 0.0;
    for (int i = 0; i < m; ++i)
        rec.pairing_residual = std::max(rec.pairing_residual, std::abs(lam(i) + lam(2 * m - 1 - i)));
    int neg_g = 0;
    for (int i = 0; i < 2 * m; ++i)
        if (lam(i) < -1.0) ++neg_g;
    rec.index_eigen_consistent = (neg_g == rec.morse_index);

    MatrixXd a = 0.5 * (k.topLeftCorner(m, m) - k.bottomRightCorner(m, m));
    a = 0.5 * (a + a.transpose());
    MatrixXd b = -0.5 * (k.topRightCorner(m, m) + k.bottomLeftCorner(m, m));
    b = 0.5 * (b + b.transpose());
    MatrixXcd s_hat = a.cast<Complex>() + Complex(0.0, 1.0) * b.cast<Complex>();
    Eigen::JacobiSVD<MatrixXcd> svd(s_hat);
    VectorXd sv = svd.singularValues();
    rec.g_rank = 0;
    rec.g_rank_gap_low = 0.0;
    rec.g_rank_gap_high = 0.0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol.rank) {
            ++rec.g_rank;
            rec.g_rank_gap_high = sv(i);  // smallest accepted (sorted descending)
        } else if (rec.g_rank_gap_low == 0.0) {
            rec.g_rank_gap_low = sv(i);   // largest rejected
        }
        if (sv(i) > tol.rank / 10.0 && sv(i) < tol.rank * 10.0) rec.g_rank_ill_conditioned = true;
    }
    return rec;
}

VectorXcd gaussian_vector(int n, std::mt19937_64& rng, double scale) {
    std::normal_distribution<double> normal(0.0, scale);
    VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex(normal(rng), normal(rng));
    return v;
}

}  // namespace

void validate_model(const AffineChartModel& model, std::uint64_t seed) {
    if (model.vars < 1 || model.ambient < model.vars)
        throw InvalidInput("model " + model.name + ": need 1 <= m <= N");
    if (static_cast<int>(model.components.size()) != model.ambient)
        throw InvalidInput("model " + model.name + ": component count != N");
    for (const auto& comp : model.components)
        for (const auto& t : comp.terms)
            if (static_cast<int>(t.exponents.size()) != model.vars)
                throw InvalidInput("model " + model.name + ": monomial arity != m");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-model.chart_bound, model.chart_bound);
    for (int trial = 0; trial < 25; ++trial) {
        VectorXcd u(model.vars);
        for (int i = 0; i < model.vars; ++i) u(i) = Complex(coord(rng), coord(rng));
        Evaluation ev = evaluate(model, u, false);
        Eigen::JacobiSVD<MatrixXcd> svd(ev.jac);
        double smin = svd.singularValues()(model.vars - 1);
        double smax = svd.singularValues()(0);
        if (!(smin > 1e-10 * std::max(1.0, smax)))
            throw InvalidInput("model " + model.name + ": Jacobian rank-deficient at a sample point");
    }
}

SubcritRun find_critical_points(const AffineChartModel& model, const Eigen::VectorXcd& w0,
                                int starts, std::uint64_t seed, const SubcritTolerances& tol) {
    if (starts < 1) throw InvalidInput("find_critical_points: starts must be >= 1");
    if (w0.size() != model.ambient) throw InvalidInput("find_critical_points: w0 size != N");
    SubcritRun run;
    run.seed = seed;
    run.w0 = w0;
    run.starts = starts;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-model.chart_bound, model.chart_bound);
    std::vector<VectorXd> found;
    for (int s = 0; s < starts; ++s) {
        VectorXd x0(2 * model.vars);
        for (int i = 0; i < 2 * model.vars; ++i) x0(i) = coord(rng);
        auto sol = newton_solve(model, w0, x0, model.chart_bound);
        if (!sol) continue;
        ++run.converged;
        VectorXcd u = to_complex(*sol);
        bool outside = false;
        for (int i = 0; i < model.vars; ++i) outside = outside || std::abs(u(i)) > model.chart_bound;
        if (outside) {
            ++run.discarded_out_of_chart;
            continue;
        }
        bool duplicate = false;
        for (const auto& f : found)
            if ((f - *sol).norm() < tol.dedup) { duplicate = true; break; }
        if (duplicate) continue;
        found.push_back(*sol);
    }
    run.no_convergence = run.converged == 0;
    for (const auto& x : found) {
        CriticalPointRecord rec = analyze_point(model, w0, x, tol);
        if (rec.grad_residual > tol.grad) continue;  // not a certified critical point
        run.records.push_back(std::move(rec));
    }
    return run;
}

SubcritRun run_generic_experiment(const AffineChartModel& model, int starts, std::uint64_t seed,
                                  const SubcritTolerances& tol) {
    // Genericity by rejection: resample w0 until no converged record is
    // degenerate.
    SubcritRun last;
    for (int attempt = 0; attempt < 25; ++attempt) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(attempt));
        VectorXcd w0 = gaussian_vector(model.ambient, rng, 1.5);
        SubcritRun run = find_critical_points(model, w0, starts, seed + static_cast<std::uint64_t>(attempt), tol);
        run.genericity_attempts = attempt + 1;
        bool degenerate = false;
        for (const auto& r : run.records) degenerate = degenerate || r.degenerate;
        if (!degenerate && !run.records.empty()) return run;
        last = std::move(run);
    }
    return last;
}

int morse_index(const CriticalPointRecord& record, const SubcritTolerances& tol) {
    (void)tol;
    if (record.degenerate)
        throw DegenerateCritical("eigenvalue within tolerance of zero at the critical point");
    return record.morse_index;
}

int g_rank(const CriticalPointRecord& record, const SubcritTolerances& tol) {
    (void)tol;
    if (record.degenerate)
        throw DegenerateCritical("g_rank requires a nondegenerate critical point");
    if (record.g_rank_ill_conditioned)
        throw IllConditioned("singular values cluster at the rank threshold: [" +
                             std::to_string(record.g_rank_gap_low) + ", " +
                             std::to_string(record.g_rank_gap_high) + "]");
    return record.g_rank;
}

namespace {

ChartPolynomial poly(std::initializer_list<ChartMonomial> terms) { return ChartPolynomial{terms}; }

}  // namespace

AffineChartModel model_affine_line() {
    AffineChartModel m;
    m.name = "affine_line";
    m.vars = 1;
    m.ambient = 2;
    m.n = 1;
    m.k = 0;
    m.chart_bound = 4.0;
    m.components = {poly({{Rational(1), {1}}}), poly({})};
    return m;
}

AffineChartModel model_parabola() {
    AffineChartModel m;
    m.name = "parabola";
    m.vars = 1;
    m.ambient = 2;
    m.n = 1;
    m.k = 0;
    m.chart_bound = 4.0;
    m.components = {poly({{Rational(1), {1}}}), poly({{Rational(1), {2}}})};
    return m;
}

AffineChartModel model_nodal_cubic() {
    AffineChartModel m;
    m.name = "nodal_cubic";
    m.vars = 1;
    m.ambient = 2;
    m.n = 1;
    m.k = 0;
    m.chart_bound = 3.0;
    m.components = {poly({{Rational(1), {2}}, {Rational(-1), {0}}}),
                    poly({{Rational(1), {3}}, {Rational(-1), {1}}})};
    return m;
}

AffineChartModel model_segre_p1xp2_chart() {
    // ([1:u], [1:v1:v2]) in the z_00 = 1 chart of the Segre CP^1 x CP^2 in CP^5.
    AffineChartModel m;
    m.name = "segre_p1xp2_chart";
    m.vars = 3;
    m.ambient = 5;
    m.n = 3;
    m.k = 1;
    m.chart_bound = 3.0;
    m.components = {
        poly({{Rational(1), {0, 1, 0}}}),  // v1
        poly({{Rational(1), {0, 0, 1}}}),  // v2
        poly({{Rational(1), {1, 0, 0}}}),  // u
        poly({{Rational(1), {1, 1, 0}}}),  // u v1
        poly({{Rational(1), {1, 0, 1}}}),  // u v2
    };
    return m;
}

}  // namespace qhsd
