#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qhsd/catalog.hpp"
#include "qhsd/serialization.hpp"
#include "qhsd/verify.hpp"

namespace {

using namespace qhsd;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

Rational default_cap() {
    if (const char* env = std::getenv("QHSD_TRUNCATION_CAP")) {
        try {
            return parse_rational(env);
        } catch (...) {
            throw InvalidInput("QHSD_TRUNCATION_CAP: cannot parse '" + std::string(env) + "'");
        }
    }
    return Rational(16);
}

std::vector<long long> parse_rank_list(const std::string& csv) {
    std::vector<long long> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

void emit(const Json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << canonical_dump(j) << "\n";
    else
        std::cout << text;
}

ManifoldFile catalog_build(const std::string& id) {
    ManifoldFile m;
    m.name = id;
    auto starts_with = [&](const char* p) { return id.rfind(p, 0) == 0; };
    if (starts_with("cpn_")) {
        int n = std::stoi(id.substr(4));
        m.lambda_ring = build_cpn(n);
        m.profile = make_profile(n, n, true);  // CP^n in CP^{n+1} has def = n
        BettiTable t;
        for (int j = 0; j <= 2 * n; ++j) t.ranks.push_back(j % 2 == 0 ? 1 : 0);
        m.betti = t;
        m.expects.omega_invertible = true;
        return m;
    }
    if (starts_with("gr_")) {
        auto second = id.find('_', 3);
        if (second == std::string::npos) throw InvalidInput("catalog id '" + id + "' not understood");
        int k = std::stoi(id.substr(3, second - 3));
        int n = std::stoi(id.substr(second + 1));
        m.lambda_ring = build_grassmannian(k, n);
        BettiTable t;
        t.ranks = degree_ranks(*m.lambda_ring);
        m.betti = t;
        if (k == 2 && n % 2 == 1) {
            // Plucker-embedded Grassmannian of 2-planes in odd dimension; def = 2.
            m.profile = make_profile(2 * (n - 2), 2, true);
            if (m.profile->ein_c1_coefficient)
                m.cone = CurveClassData{{{"line", 1, *m.profile->ein_c1_coefficient}}};
        }
        m.expects.omega_invertible =
            is_invertible(*m.lambda_ring, m.lambda_ring->named_class("omega"));
        return m;
    }
    if (id == "p1xp1_paper") {
        m.novikov_ring = build_p1xp1_paper();
        m.profile = make_profile(3, 1, false);  // X = P(O(-1) + O + O) over CP^1
        m.cone = CurveClassData{{{"s_X", 1, 1}, {"f_X", 1, 2}}};
        m.d_min = 0;  // d < 0 candidates are excluded geometrically, not combinatorially
        m.expects.omega_invertible = true;
        m.expects.seidel_class_count = 2;
        return m;
    }
    if (id == "p1xp1_veronese") {
        m.lambda_ring = build_p1xp1_monotone();
        m.profile = make_profile(3, 0, true);  // X' = Veronese CP^3, def 0
        m.betti = BettiTable{{1, 0, 1, 0, 1, 0, 1}};
        m.expects.omega_invertible = false;
        return m;
    }
    if (id == "segre_m2_r1") {
        // X = CP^3 x CP^2 Segre-embedded: def = r = 1; cone generated by the
        // factor lines with (h, c1) = (1, m+r+1) and (1, m+1) at m = 2, r = 1.
        m.profile = make_profile(5, 1, false);
        m.cone = CurveClassData{{{"line1", 1, 4}, {"line2", 1, 3}}};
        m.expects.seidel_fiber_only = true;
        return m;
    }
    if (id == "segre_p1xp2_chart") {
        m.model = model_segre_p1xp2_chart();
        return m;
    }
    throw InvalidInput("catalog id '" + id + "' not understood; see `qhsd catalog list`");
}

template <class Ring>
int do_invert(const Ring& ring, const std::string& cls, const Rational& cap, bool as_json) {
    auto a = ring.named_class(cls);
    auto inv = [&] {
        if constexpr (std::is_same_v<Ring, LambdaRing>)
            return invert(ring, a);
        else
            return invert(ring, a, cap);
    }();
    auto prod = quantum_mul(ring, a, inv);
    bool exact = prod == ring.unit();
    Json j{{"ring", ring.name}, {"class", cls}, {"inverse", Json::array()}, {"residualZero", exact}};
    for (std::size_t i = 0; i < inv.coords.size(); ++i)
        if (!inv.coords[i].is_zero())
            j["inverse"].push_back(Json::array({ring.basis[i].name, coeff_str(inv.coords[i])}));
    std::ostringstream text;
    text << cls << "^{-1} = " << element_str(ring, inv) << "\n";
    if constexpr (std::is_same_v<Ring, LambdaRing>)
        text << "residual: a * a^{-1} = 1 exactly\n";
    else
        text << "residual: a * a^{-1} = 1 on all terms below the cap (cap " << to_string(cap)
             << ")\n";
    emit(j, as_json, text.str());
    return kExitPass;
}

int run(int argc, char** argv) {
    CLI::App app{"exact quantum cohomology toolkit for projective manifolds with small dual"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string verify_path;
    std::string cap_str;
    auto* verify_cmd = app.add_subcommand("verify", "run every check applicable to a manifold file");
    verify_cmd->add_option("file", verify_path, "manifold JSON file")->required();
    verify_cmd->add_option("--cap", cap_str, "Novikov truncation cap (integer or a/b)");

    std::string invert_path, invert_class = "omega";
    auto* invert_cmd =
        app.add_subcommand("invert", "invert a distinguished class and verify the residual");
    invert_cmd->add_option("file", invert_path, "manifold JSON file")->required();
    invert_cmd->add_option("--class", invert_class, "class name (default omega)");
    invert_cmd->add_option("--cap", cap_str, "Novikov truncation cap");

    auto* catalog_cmd = app.add_subcommand("catalog", "bundled presentations");
    auto* catalog_list_cmd = catalog_cmd->add_subcommand("list", "list catalog identifiers");
    std::string emit_id, emit_out;
    auto* catalog_emit_cmd = catalog_cmd->add_subcommand("emit", "write a catalog entry as JSON");
    catalog_emit_cmd->add_option("--id", emit_id, "catalog identifier")->required();
    catalog_emit_cmd->add_option("--out", emit_out, "output path (stdout when omitted)");

    auto* betti_cmd = app.add_subcommand("betti", "Betti table checks");
    std::string betti_file, betti_space = "x", ranks_csv, cup_csv;
    int betti_c = 0, oh_maslov = 0, opt_n = 0, opt_k = -1;
    auto* per_cmd =
        betti_cmd->add_subcommand("periodicity", "cyclic 2-periodicity and unwrapped identities");
    per_cmd->add_option("--file", betti_file)->required();
    per_cmd->add_option("--space", betti_space, "x (default) or sigma");
    per_cmd->add_option("--c", betti_c, "override the minimal Chern number");
    auto* cyc_cmd = betti_cmd->add_subcommand("cyclic", "print the cyclically graded ranks");
    cyc_cmd->add_option("--file", betti_file)->required();
    cyc_cmd->add_option("--space", betti_space, "x (default) or sigma");
    cyc_cmd->add_option("--c", betti_c, "minimal Chern number (default from profile)");
    auto* transfer_cmd = betti_cmd->add_subcommand("transfer", "derive the hyperplane-section table");
    transfer_cmd->add_option("--file", betti_file)->required();
    auto* window_cmd = betti_cmd->add_subcommand("window", "hard Lefschetz window check");
    window_cmd->add_option("--file", betti_file)->required();
    auto* gysin_cmd = betti_cmd->add_subcommand("gysin", "circle-bundle table from the Gysin sequence");
    gysin_cmd->add_option("--ranks", ranks_csv, "Sigma ranks, comma separated")->required();
    gysin_cmd->add_option("--cup", cup_csv, "ranks of cup(e) (default: hard Lefschetz maxima)");
    auto* oh_cmd = betti_cmd->add_subcommand("oh", "spectral-sequence exactness constraints");
    oh_cmd->add_option("--ranks", ranks_csv, "P ranks, comma separated")->required();
    oh_cmd->add_option("--maslov", oh_maslov, "minimal Maslov number N")->required();
    oh_cmd->add_option("--n", opt_n, "complex dimension of X");
    oh_cmd->add_option("--k", opt_k, "defect of X");

    int def_n = 0, def_k = 0, def_chain_from = -1, segre_dim_y = -1;
    bool def_b2 = true;
    auto* defect_cmd = app.add_subcommand("defect", "small-dual profile arithmetic");
    defect_cmd->add_option("--n", def_n, "complex dimension");
    defect_cmd->add_option("--k", def_k, "defect");
    defect_cmd->add_option("--b2is1", def_b2, "b_2(X) = 1 (default true)");
    defect_cmd->add_option("--chain", def_chain_from, "print the iterated hyperplane-defect chain");
    defect_cmd->add_option("--segre", segre_dim_y, "lower bound def(CP^n x Y) with dim Y given");

    std::string seidel_file;
    int seidel_dmin = -10;
    auto* seidel_cmd = app.add_subcommand("seidel", "enumerate candidate Seidel contributions");
    seidel_cmd->add_option("--file", seidel_file)->required();
    auto* dmin_opt =
        seidel_cmd->add_option("--dmin", seidel_dmin, "lowest d to search (default from file or -10)");

    std::string model_file;
    int starts = 50;
    std::uint64_t seed = 0;
    auto* subcrit_cmd = app.add_subcommand("subcrit", "numerical Morse-index laboratory");
    auto* subcrit_run_cmd = subcrit_cmd->add_subcommand("run", "multistart critical-point search");
    subcrit_run_cmd->add_option("--model", model_file, "manifold file with a model section")
        ->required();
    subcrit_run_cmd->add_option("--starts", starts, "Newton starts per run (default 50)");
    auto* seed_opt = subcrit_run_cmd->add_option("--seed", seed, "RNG seed (required)");

    CLI11_PARSE(app, argc, argv);
    Rational cap = cap_str.empty() ? default_cap() : parse_rational(cap_str);

    if (*verify_cmd) {
        ManifoldFile m = load_manifold(verify_path);
        VerificationReport rep = run_verify(m, cap);
        emit(rep.to_json(), as_json, rep.text());
        return rep.exit_code();
    }

    if (*invert_cmd) {
        ManifoldFile m = load_manifold(invert_path);
        if (!m.has_ring()) throw InvalidInput("file has no ring section");
        if (m.lambda_ring) return do_invert(*m.lambda_ring, invert_class, cap, as_json);
        return do_invert(*m.novikov_ring, invert_class, cap, as_json);
    }

    if (*catalog_list_cmd) {
        Json j = Json::array();
        std::ostringstream text;
        for (const auto& entry : catalog_list()) {
            j.push_back({{"id", entry.id}, {"description", entry.description}});
            text << entry.id << "\t" << entry.description << "\n";
        }
        emit(j, as_json, text.str());
        return kExitPass;
    }
    if (*catalog_emit_cmd) {
        ManifoldFile m = catalog_build(emit_id);
        if (emit_out.empty())
            std::cout << canonical_dump(to_json(m)) << "\n";
        else
            save_manifold(m, emit_out);
        return kExitPass;
    }

    if (*per_cmd || *cyc_cmd || *transfer_cmd || *window_cmd) {
        ManifoldFile m = load_manifold(betti_file);
        const bool sigma_space = betti_space == "sigma";
        std::optional<BettiTable> table = sigma_space ? m.sigma_betti : m.betti;
        if (sigma_space && !table) {
            if (!m.betti || !m.profile)
                throw InvalidInput("no sigmaBetti and no betti+profile to transfer");
            table = lefschetz_transfer(*m.betti, m.profile->n, m.profile->k).table();
        }
        if (!table) throw InvalidInput("file has no betti section");
        if (*per_cmd || *cyc_cmd) {
            int c = betti_c;
            if (c == 0 && m.profile) {
                auto copt = sigma_space ? m.profile->c_sigma : m.profile->c_x;
                if (copt) c = *copt;
            }
            if (c == 0) throw InvalidInput("no minimal Chern number available; pass --c");
            if (*cyc_cmd) {
                CyclicBetti cb = cyclic_betti(*table, c);
                Json j{{"period", cb.period}, {"values", cb.values}};
                std::ostringstream text;
                text << "period " << cb.period << ":";
                for (long long v : cb.values) text << " " << v;
                text << "\n";
                emit(j, as_json, text.str());
                return kExitPass;
            }
            PeriodicityReport rep = check_periodicity(*table, c);
            Json j{{"c", c}, {"pass", rep.pass}, {"failures", rep.failures()}};
            std::ostringstream text;
            text << "periodicity at 2C = " << 2 * c << ": " << (rep.pass ? "pass" : "FAIL") << "\n";
            for (const auto& f : rep.failures()) text << "  failed: " << f << "\n";
            emit(j, as_json, text.str());
            return rep.pass ? kExitPass : kExitCheckFailure;
        }
        if (*transfer_cmd) {
            if (!m.profile) throw InvalidInput("transfer needs a profile section");
            auto res = lefschetz_transfer(*m.betti, m.profile->n, m.profile->k);
            Json ranks = Json::array();
            std::ostringstream text;
            text << "section table:";
            for (const auto& r : res.ranks) {
                if (r) {
                    ranks.push_back(*r);
                    text << " " << *r;
                } else {
                    ranks.push_back(nullptr);
                    text << " ?";
                }
            }
            text << "\n";
            emit(Json{{"ranks", ranks}, {"complete", res.complete()}}, as_json, text.str());
            return kExitPass;
        }
        if (!m.profile) throw InvalidInput("window needs a profile section");
        PeriodicityReport rep = hard_lefschetz_window(*m.betti, m.profile->n, m.profile->k);
        Json j{{"pass", rep.pass}, {"failures", rep.failures()}};
        std::ostringstream text;
        text << "hard Lefschetz window: " << (rep.pass ? "pass" : "FAIL") << "\n";
        emit(j, as_json, text.str());
        return rep.pass ? kExitPass : kExitCheckFailure;
    }

    if (*gysin_cmd) {
        BettiTable sigma{parse_rank_list(ranks_csv)};
        std::optional<std::vector<long long>> cup;
        if (!cup_csv.empty()) cup = parse_rank_list(cup_csv);
        BettiTable p = gysin_circle_bundle(sigma, cup);
        std::ostringstream text;
        text << "b(P):";
        for (long long r : p.ranks) text << " " << r;
        text << "\n";
        emit(to_json(p), as_json, text.str());
        return kExitPass;
    }
    if (*oh_cmd) {
        BettiTable p{parse_rank_list(ranks_csv)};
        std::optional<std::pair<int, int>> nk;
        if (opt_n > 0 && opt_k >= 0) nk = std::pair{opt_n, opt_k};
        OhReport rep = oh_exactness_check(p, oh_maslov, nk);
        Json j{{"pass", rep.pass},
               {"boundFailures", rep.bounds.failures()},
               {"vanishingFailures", rep.vanishing.failures()},
               {"advisoryFailures", rep.advisory.failures()}};
        std::ostringstream text;
        text << "exactness bounds: " << (rep.pass ? "pass" : "FAIL") << "\n";
        for (const auto& f : rep.bounds.failures()) text << "  failed: " << f << "\n";
        for (const auto& f : rep.vanishing.failures()) text << "  vanishing failed: " << f << "\n";
        for (const auto& f : rep.advisory.failures()) text << "  advisory: " << f << "\n";
        emit(j, as_json, text.str());
        return rep.pass ? kExitPass : kExitCheckFailure;
    }

    if (*defect_cmd) {
        if (def_chain_from >= 0) {
            Json chain = Json::array();
            std::ostringstream text;
            int d = def_chain_from;
            chain.push_back(d);
            text << d;
            while (d > 0) {
                d = hyperplane_defect(d);
                chain.push_back(d);
                text << " -> " << d;
            }
            text << "\n";
            emit(Json{{"chain", chain}}, as_json, text.str());
            return kExitPass;
        }
        if (segre_dim_y >= 0) {
            int bound = segre_defect_lower(def_n, segre_dim_y);
            emit(Json{{"defectLowerBound", bound}}, as_json,
                 "def(X) >= " + std::to_string(bound) + "\n");
            return kExitPass;
        }
        SmallDualProfile p = make_profile(def_n, def_k, def_b2);
        Json j = to_json(p);
        j["twoCX"] = p.two_c_x;
        j["twoCSigma"] = p.two_c_sigma;
        if (p.c_x) j["CX"] = *p.c_x;
        if (p.c_sigma) j["CSigma"] = *p.c_sigma;
        if (p.ein_c1_coefficient) j["einC1Coefficient"] = *p.ein_c1_coefficient;
        j["subcriticalIndexBound"] = p.subcritical_index_bound;
        j["maslovSphere"] = p.maslov_sphere;
        if (p.c_sigma) j["divisibilityObstruction"] = divisibility_obstruction(p.n, *p.c_sigma);
        std::ostringstream text;
        text << "n = " << p.n << ", k = " << p.k << ", 2C_X = " << p.two_c_x
             << ", 2C_Sigma = " << p.two_c_sigma;
        if (p.c_x) text << ", C_X = " << *p.c_x;
        if (p.c_sigma) text << ", C_Sigma = " << *p.c_sigma;
        if (p.ein_c1_coefficient) text << ", c1 = " << *p.ein_c1_coefficient << " h";
        text << ", index bound = " << p.subcritical_index_bound << ", N_L = " << p.maslov_sphere
             << "\n";
        emit(j, as_json, text.str());
        return kExitPass;
    }

    if (*seidel_cmd) {
        ManifoldFile m = load_manifold(seidel_file);
        if (!m.cone || !m.profile) throw InvalidInput("seidel needs cone and profile sections");
        int dmin = dmin_opt->count() > 0 ? seidel_dmin : m.d_min.value_or(-10);
        SeidelEnumeration res = enumerate_seidel_contributions(*m.profile, *m.cone, dmin);
        std::ostringstream text;
        if (res.classes.size() == 1 && res.classes[0].is_fiber_term()) {
            text << "F term only; S = [omega]T\n";
        } else {
            for (const auto& sc : res.classes) {
                text << (sc.is_fiber_term() ? "F term" : "A =");
                if (!sc.is_fiber_term())
                    for (std::size_t i = 0; i < sc.combination.size(); ++i)
                        if (sc.combination[i] != 0)
                            text << " " << sc.combination[i] << "*" << m.cone->generators[i].name;
                text << "  (d = " << sc.d << ", c1^v = " << sc.vertical_chern << ", T^"
                     << to_string(sc.t_exp) << ", q^" << to_string(sc.q_exp) << ")\n";
            }
        }
        for (const auto& sc : res.rejected_non_integral) {
            text << "rejected (non-integer qExp " << to_string(sc.q_exp) << "): A =";
            for (std::size_t i = 0; i < sc.combination.size(); ++i)
                if (sc.combination[i] != 0)
                    text << " " << sc.combination[i] << "*" << m.cone->generators[i].name;
            text << " at d = " << sc.d << "\n";
        }
        emit(to_json(res), as_json, text.str());
        return kExitPass;
    }

    if (*subcrit_run_cmd) {
        if (seed_opt->count() == 0)
            throw InvalidInput("subcrit run requires --seed for reproducibility");
        ManifoldFile m = load_manifold(model_file);
        if (!m.model) throw InvalidInput("file has no model section");
        SubcritRun run = run_generic_experiment(*m.model, starts, seed);
        Json j = to_json(run, *m.model);
        std::ostringstream text;
        text << "model " << m.model->name << " (n = " << m.model->n << ", k = " << m.model->k
             << "): " << run.records.size() << " critical points from " << run.converged
             << " converged starts (seed " << run.seed << ")\n";
        for (const auto& rec : run.records)
            text << "  index " << rec.morse_index << ", g-rank " << rec.g_rank
                 << ", |grad| = " << rec.grad_residual << (rec.degenerate ? " (degenerate)" : "")
                 << "\n";
        text << j["verdict"].get<std::string>() << "\n";
        emit(j, as_json, text.str());
        bool ok = j["indexBoundSatisfied"].get<bool>() && j["gRankBoundSatisfied"].get<bool>() &&
                  !run.no_convergence;
        return ok ? kExitPass : kExitCheckFailure;
    }

    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const NotInvertible& e) {
        std::cerr << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
