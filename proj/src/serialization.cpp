#include "qhsd/serialization.hpp"

#include <fstream>
#include <sstream>

#include "qhsd/axioms.hpp"

namespace qhsd {

namespace {

Json int_to_json(const Int& v) {
    if (fits_int64(v)) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

Int int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw SchemaError(where + ": expected integer or decimal string");
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + ": missing field '" + key + "'");
    return *it;
}

int int_field(const Json& j, const char* key, const std::string& where) {
    const Json& f = field(j, key, where);
    if (!f.is_number_integer()) throw SchemaError(where + "." + key + ": expected integer");
    return f.get<int>();
}

template <class Coeff>
Json coords_to_json(const std::vector<Coeff>& coords) {
    Json out = Json::array();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == Coeff(0)) continue;
        out.push_back(Json::array({Json(i), to_json(coords[i])}));
    }
    return out;
}

template <class Coeff>
std::vector<Coeff> coords_from_json(const Json& j, std::size_t rank, const std::string& where,
                                    Coeff (*parse)(const Json&, const std::string&)) {
    if (!j.is_array()) throw SchemaError(where + ": expected array of [basis, coeff] pairs");
    std::vector<Coeff> out(rank, Coeff(0));
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw SchemaError(where + ": expected [basis, coeff] pair");
        std::size_t idx = entry[0].get<std::size_t>();
        if (idx >= rank) throw SchemaError(where + ": basis index out of range");
        out[idx] = parse(entry[1], where);
    }
    return out;
}

template <class Coeff>
Json ring_to_json_impl(const RingPresentation<Coeff>& ring, const char* kind) {
    Json j;
    j["coefficients"] = kind;
    j["name"] = ring.name;
    j["dimension"] = ring.dimension;
    j["qDegree"] = ring.grading.q_degree;
    Json basis = Json::array();
    for (const auto& b : ring.basis) basis.push_back({{"name", b.name}, {"degree", b.degree}});
    j["basis"] = basis;
    Json pairing = Json::array();
    for (Eigen::Index i = 0; i < ring.pairing.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < ring.pairing.cols(); ++c)
            row.push_back(int_to_json(ring.pairing(i, c)));
        pairing.push_back(row);
    }
    j["pairing"] = pairing;
    Json constants = Json::array();
    for (std::size_t i = 0; i < ring.rank(); ++i)
        for (std::size_t c = i; c < ring.rank(); ++c) {
            Json v = coords_to_json(ring.constants[i][c]);
            if (v.empty()) continue;
            constants.push_back({{"i", i}, {"j", c}, {"value", v}});
        }
    j["structureConstants"] = constants;
    Json classes = Json::object();
    for (const auto& [name, coords] : ring.classes) classes[name] = coords_to_json(coords);
    j["classes"] = classes;
    return j;
}

template <class Coeff>
RingPresentation<Coeff> ring_from_json_impl(const Json& j,
                                            Coeff (*parse)(const Json&, const std::string&)) {
    RingPresentation<Coeff> ring;
    ring.name = field(j, "name", "ring").get<std::string>();
    ring.dimension = int_field(j, "dimension", "ring");
    ring.grading.q_degree = int_field(j, "qDegree", "ring");
    const Json& basis = field(j, "basis", "ring");
    if (!basis.is_array() || basis.empty()) throw SchemaError("ring.basis: expected nonempty array");
    for (const auto& b : basis)
        ring.basis.push_back({field(b, "name", "ring.basis").get<std::string>(),
                              int_field(b, "degree", "ring.basis")});
    const std::size_t r = ring.rank();
    const Json& pairing = field(j, "pairing", "ring");
    if (!pairing.is_array() || pairing.size() != r) throw SchemaError("ring.pairing: expected r rows");
    ring.pairing = DenseMatrix<Int>(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        if (!pairing[i].is_array() || pairing[i].size() != r)
            throw SchemaError("ring.pairing: expected r columns");
        for (std::size_t c = 0; c < r; ++c)
            ring.pairing(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
                int_from_json(pairing[i][c], "ring.pairing");
    }
    ring.constants.assign(r, std::vector<std::vector<Coeff>>(r, std::vector<Coeff>(r, Coeff(0))));
    for (const auto& e : field(j, "structureConstants", "ring")) {
        std::size_t i = static_cast<std::size_t>(int_field(e, "i", "ring.structureConstants"));
        std::size_t c = static_cast<std::size_t>(int_field(e, "j", "ring.structureConstants"));
        if (i >= r || c >= r) throw SchemaError("ring.structureConstants: index out of range");
        auto coords = coords_from_json<Coeff>(field(e, "value", "ring.structureConstants"), r,
                                              "ring.structureConstants.value", parse);
        ring.constants[i][c] = coords;
        ring.constants[c][i] = std::move(coords);
    }
    if (j.contains("classes"))
        for (const auto& [name, coords] : j.at("classes").items())
            ring.classes[name] = coords_from_json<Coeff>(coords, r, "ring.classes." + name, parse);
    return ring;
}

Json rational_pair(const Rational& r) {
    return Json::array({int_to_json(rational_num(r)), int_to_json(rational_den(r))});
}

}  // namespace

Json to_json(const LaurentPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(Json::array({Json(e), int_to_json(c)}));
    return out;
}

LaurentPoly laurent_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected array of [exp, coeff] pairs");
    LaurentPoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw SchemaError(where + ": expected [exp, coeff]");
        p += LaurentPoly::monomial(t[0].get<std::int64_t>(), int_from_json(t[1], where));
    }
    return p;
}

Json to_json(const NovikovElem& x) {
    Json out = Json::array();
    for (const auto& [k, c] : x.terms())
        out.push_back(Json::array({Json(k.second), int_to_json(rational_num(k.first)),
                                   int_to_json(rational_den(k.first)), int_to_json(c)}));
    return out;
}

NovikovElem novikov_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected array of [qExp, tNum, tDen, coeff]");
    NovikovElem x;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 4)
            throw SchemaError(where + ": expected [qExp, tNum, tDen, coeff]");
        Int den = int_from_json(t[2], where);
        if (den == 0) throw SchemaError(where + ": zero tExp denominator");
        x += NovikovElem::monomial(t[0].get<std::int64_t>(),
                                   Rational(int_from_json(t[1], where), den),
                                   int_from_json(t[3], where));
    }
    return x;
}

Json to_json(const LambdaRing& ring) { return ring_to_json_impl(ring, "lambda"); }
Json to_json(const NovikovRing& ring) { return ring_to_json_impl(ring, "novikov"); }

Json to_json(const SmallDualProfile& p) {
    return Json{{"n", p.n}, {"k", p.k}, {"b2is1", p.b2_is_1}};
}

Json to_json(const BettiTable& t) {
    Json ranks = Json::array();
    for (long long r : t.ranks) ranks.push_back(r);
    return ranks;
}

Json to_json(const CurveClassData& c) {
    Json gens = Json::array();
    for (const auto& g : c.generators)
        gens.push_back({{"name", g.name}, {"h", g.h_value}, {"c1", g.c1_value}});
    return Json{{"generators", gens}};
}

Json to_json(const AffineChartModel& m) {
    Json comps = Json::array();
    for (const auto& p : m.components) {
        Json terms = Json::array();
        for (const auto& t : p.terms) {
            Json term = Json::array(
                {int_to_json(rational_num(t.coeff)), int_to_json(rational_den(t.coeff))});
            for (int e : t.exponents) term.push_back(e);
            terms.push_back(term);
        }
        comps.push_back(terms);
    }
    return Json{{"name", m.name},       {"vars", m.vars},   {"ambient", m.ambient},
                {"n", m.n},             {"k", m.k},         {"chartBound", m.chart_bound},
                {"components", comps}};
}

Json to_json(const ManifoldFile& m) {
    Json j;
    j["name"] = m.name;
    if (m.profile) j["profile"] = to_json(*m.profile);
    if (m.betti) j["betti"] = to_json(*m.betti);
    if (m.sigma_betti) j["sigmaBetti"] = to_json(*m.sigma_betti);
    if (m.lambda_ring) j["ring"] = to_json(*m.lambda_ring);
    if (m.novikov_ring) j["ring"] = to_json(*m.novikov_ring);
    if (m.cone) j["cone"] = to_json(*m.cone);
    if (m.d_min) j["dMin"] = *m.d_min;
    if (m.model) j["model"] = to_json(*m.model);
    Json expects = Json::object();
    if (m.expects.omega_invertible) expects["omegaInvertible"] = *m.expects.omega_invertible;
    if (m.expects.sigma_betti) expects["sigmaBetti"] = *m.expects.sigma_betti;
    if (m.expects.seidel_fiber_only) expects["seidelFiberOnly"] = *m.expects.seidel_fiber_only;
    if (m.expects.seidel_class_count) expects["seidelClassCount"] = *m.expects.seidel_class_count;
    if (!expects.empty()) j["expects"] = expects;
    return j;
}

Json to_json(const SeidelEnumeration& e) {
    auto cls = [](const SectionClass& sc) {
        Json combo = Json::array();
        for (long m : sc.combination) combo.push_back(m);
        return Json{{"combination", combo},
                    {"d", sc.d},
                    {"h", sc.h_value},
                    {"c1", sc.c1_value},
                    {"verticalChern", sc.vertical_chern},
                    {"omegaArea", sc.omega_area},
                    {"tExp", rational_pair(sc.t_exp)},
                    {"qExp", rational_pair(sc.q_exp)},
                    {"fiberTerm", sc.is_fiber_term()}};
    };
    Json classes = Json::array();
    for (const auto& sc : e.classes) classes.push_back(cls(sc));
    Json rejected = Json::array();
    for (const auto& sc : e.rejected_non_integral) rejected.push_back(cls(sc));
    return Json{{"classes", classes},
                {"rejectedNonIntegralQExp", rejected},
                {"nefShortCircuit", e.nef_short_circuit},
                {"dMin", e.d_min_used}};
}

Json to_json(const CriticalPointRecord& r) {
    auto cvec = [](const Eigen::VectorXcd& v) {
        Json out = Json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i)
            out.push_back(Json::array({v(i).real(), v(i).imag()}));
        return out;
    };
    return Json{{"chartPoint", cvec(r.chart_point)},
                {"ambientPoint", cvec(r.ambient_point)},
                {"value", r.value},
                {"gradResidual", r.grad_residual},
                {"orthResidual", r.orth_residual},
                {"hessianAsymmetry", r.hessian_asymmetry},
                {"hessianEigenvalues", r.hessian_eigenvalues},
                {"morseIndex", r.morse_index},
                {"degenerate", r.degenerate},
                {"gRank", r.g_rank},
                {"gRankIllConditioned", r.g_rank_ill_conditioned},
                {"pairingResidual", r.pairing_residual},
                {"indexEigenConsistent", r.index_eigen_consistent}};
}

Json to_json(const SubcritRun& run, const AffineChartModel& model) {
    Json records = Json::array();
    int nondegenerate = 0;
    for (const auto& r : run.records) {
        records.push_back(to_json(r));
        if (!r.degenerate) ++nondegenerate;
    }
    const int bound = model.n - model.k;
    Json w0 = Json::array();
    for (Eigen::Index i = 0; i < run.w0.size(); ++i)
        w0.push_back(Json::array({run.w0(i).real(), run.w0(i).imag()}));
    const bool index_ok = run.max_morse_index() <= bound;
    const bool rank_ok = run.max_g_rank() <= bound;
    std::string verdict;
    if (run.no_convergence)
        verdict = "no start converged";
    else if (index_ok && rank_ok)
        verdict = "no counterexample found among " + std::to_string(nondegenerate) +
                  " converged nondegenerate critical points";
    else
        verdict = "BOUND VIOLATED";
    return Json{{"model", model.name},
                {"declared", Json{{"n", model.n}, {"k", model.k}}},
                {"indexBound", bound},
                {"seed", run.seed},
                {"starts", run.starts},
                {"converged", run.converged},
                {"discardedOutOfChart", run.discarded_out_of_chart},
                {"noConvergence", run.no_convergence},
                {"genericityAttempts", run.genericity_attempts},
                {"w0", w0},
                {"records", records},
                {"maxMorseIndex", run.max_morse_index()},
                {"maxGRank", run.max_g_rank()},
                {"indexBoundSatisfied", index_ok},
                {"gRankBoundSatisfied", rank_ok},
                {"verdict", verdict}};
}

namespace {

BettiTable betti_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw SchemaError(where + ": expected nonempty rank array");
    BettiTable t;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw SchemaError(where + ": ranks must be nonnegative integers");
        t.ranks.push_back(v.get<long long>());
    }
    return t;
}

AffineChartModel model_from_json(const Json& j) {
    AffineChartModel m;
    m.name = field(j, "name", "model").get<std::string>();
    m.vars = int_field(j, "vars", "model");
    m.ambient = int_field(j, "ambient", "model");
    m.n = int_field(j, "n", "model");
    m.k = int_field(j, "k", "model");
    m.chart_bound = field(j, "chartBound", "model").get<double>();
    for (const auto& comp : field(j, "components", "model")) {
        ChartPolynomial p;
        for (const auto& term : comp) {
            if (!term.is_array() || term.size() != static_cast<std::size_t>(m.vars) + 2)
                throw SchemaError("model.components: expected [num, den, e_1..e_m]");
            ChartMonomial mono;
            Int den = int_from_json(term[1], "model.components");
            if (den == 0) throw SchemaError("model.components: zero denominator");
            mono.coeff = Rational(int_from_json(term[0], "model.components"), den);
            for (int i = 0; i < m.vars; ++i) {
                int e = term[static_cast<std::size_t>(i) + 2].get<int>();
                if (e < 0) throw SchemaError("model.components: negative exponent");
                mono.exponents.push_back(e);
            }
            p.terms.push_back(std::move(mono));
        }
        m.components.push_back(std::move(p));
    }
    return m;
}

void validate_sections(const ManifoldFile& m) {
    if (m.lambda_ring) {
        AxiomReport rep = check_ring_axioms(*m.lambda_ring);
        if (!rep.ok()) throw AxiomViolation("ring '" + m.lambda_ring->name + "': " + rep.summary());
    }
    if (m.novikov_ring) {
        AxiomReport rep = check_ring_axioms(*m.novikov_ring);
        if (!rep.ok()) throw AxiomViolation("ring '" + m.novikov_ring->name + "': " + rep.summary());
    }
    if (m.model) validate_model(*m.model);
}

}  // namespace

ManifoldFile manifold_from_json(const Json& j) {
    ManifoldFile m;
    m.name = field(j, "name", "manifold").get<std::string>();
    if (j.contains("profile")) {
        const Json& p = j.at("profile");
        m.profile = make_profile(int_field(p, "n", "profile"), int_field(p, "k", "profile"),
                                 field(p, "b2is1", "profile").get<bool>());
    }
    if (j.contains("betti")) m.betti = betti_from_json(j.at("betti"), "betti");
    if (j.contains("sigmaBetti")) m.sigma_betti = betti_from_json(j.at("sigmaBetti"), "sigmaBetti");
    if (j.contains("ring")) {
        const Json& r = j.at("ring");
        std::string kind = field(r, "coefficients", "ring").get<std::string>();
        if (kind == "lambda")
            m.lambda_ring = ring_from_json_impl<LaurentPoly>(r, laurent_from_json);
        else if (kind == "novikov")
            m.novikov_ring = ring_from_json_impl<NovikovElem>(r, novikov_from_json);
        else
            throw SchemaError("ring.coefficients: expected 'lambda' or 'novikov'");
    }
    if (j.contains("cone")) {
        CurveClassData cone;
        for (const auto& g : field(j.at("cone"), "generators", "cone"))
            cone.generators.push_back({field(g, "name", "cone.generators").get<std::string>(),
                                       g.at("h").get<long>(), g.at("c1").get<long>()});
        m.cone = std::move(cone);
    }
    if (j.contains("dMin")) m.d_min = j.at("dMin").get<int>();
    if (j.contains("model")) m.model = model_from_json(j.at("model"));
    if (j.contains("expects")) {
        const Json& e = j.at("expects");
        if (e.contains("omegaInvertible"))
            m.expects.omega_invertible = e.at("omegaInvertible").get<bool>();
        if (e.contains("sigmaBetti"))
            m.expects.sigma_betti = e.at("sigmaBetti").get<std::vector<long long>>();
        if (e.contains("seidelFiberOnly"))
            m.expects.seidel_fiber_only = e.at("seidelFiberOnly").get<bool>();
        if (e.contains("seidelClassCount"))
            m.expects.seidel_class_count = e.at("seidelClassCount").get<int>();
    }
    return m;
}

ManifoldFile load_manifold(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError(path + ": " + e.what());
    }
    ManifoldFile m = manifold_from_json(j);
    validate_sections(m);
    return m;
}

void save_manifold(const ManifoldFile& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write " + path);
    out << canonical_dump(to_json(m)) << "\n";
}

ManifoldFile load_presentation(const std::string& path) { return load_manifold(path); }
void save_presentation(const ManifoldFile& m, const std::string& path) { save_manifold(m, path); }

std::string canonical_dump(const Json& j) { return j.dump(2); }

}  // namespace qhsd
