#include "qhsd/catalog.hpp"

#include <map>

#include "qhsd/errors.hpp"

namespace qhsd {

namespace {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return Int(0);
    Int r(1);
    for (int i = 0; i < k; ++i) { r *= n - i; r /= i + 1; }
    return r;
}

template <class Coeff>
void init_constants(RingPresentation<Coeff>& ring) {
    const std::size_t r = ring.rank();
    ring.constants.assign(r, std::vector<std::vector<Coeff>>(r, std::vector<Coeff>(r, Coeff(0))));
}

}  // namespace

LambdaRing build_cpn(int n) {
    if (n < 1) throw InvalidInput("build_cpn: n must be >= 1");
    LambdaRing ring;
    ring.name = "cpn_" + std::to_string(n);
    ring.dimension = n;
    ring.grading.q_degree = 2 * (n + 1);  // 2C_X = n + k + 2 at k = n
    for (int i = 0; i <= n; ++i) {
        std::string nm = i == 0 ? "1" : (i == 1 ? "h" : "h^" + std::to_string(i));
        ring.basis.push_back({nm, 2 * i});
    }
    const std::size_t r = ring.rank();
    ring.pairing = DenseMatrix<Int>(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            ring.pairing(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                Int(static_cast<int>(i + j) == n ? 1 : 0);
    init_constants(ring);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            // h^i * h^j = h^{i+j}, with the relation h^{n+1} = q.
            int s = i + j;
            if (s <= n)
                ring.constants[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] = LaurentPoly(1);
            else
                ring.constants[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(s - n - 1)] = LaurentPoly::q();
        }
    std::vector<LaurentPoly> omega(r, LaurentPoly(0));
    omega[1] = LaurentPoly(1);
    ring.classes["omega"] = omega;
    std::vector<LaurentPoly> c1(r, LaurentPoly(0));
    c1[1] = LaurentPoly(n + 1);
    ring.classes["c1"] = c1;
    return ring;
}

NovikovRing build_p1xp1_paper() {
    NovikovRing ring;
    ring.name = "p1xp1_paper";
    ring.dimension = 2;
    ring.grading.q_degree = 4;
    ring.basis = {{"1", 0}, {"alpha", 2}, {"beta", 2}, {"pt", 4}};
    ring.pairing = DenseMatrix<Int>(4, 4);
    ring.pairing.setZero();
    ring.pairing(0, 3) = ring.pairing(3, 0) = Int(1);
    ring.pairing(1, 2) = ring.pairing(2, 1) = Int(1);
    init_constants(ring);

    const NovikovElem one(1);
    const NovikovElem qT2 = NovikovElem::monomial(1, Rational(2), 1);
    const NovikovElem qT = NovikovElem::monomial(1, Rational(1), 1);
    auto set = [&ring](int i, int j, int m, const NovikovElem& v) {
        ring.constants[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = v;
        ring.constants[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] = v;
    };
    for (int j = 0; j < 4; ++j) set(0, j, j, one);   // unit
    set(1, 1, 0, qT2);                               // alpha * alpha = q T^2
    set(2, 2, 0, qT);                                // beta * beta = q T
    set(1, 2, 3, one);                               // alpha * beta = pt
    set(1, 3, 2, qT2);                               // alpha * pt = q T^2 beta
    set(2, 3, 1, qT);                                // beta * pt = q T alpha
    set(3, 3, 0, qT2 * qT);                          // pt * pt = q^2 T^3

    auto cls = [](NovikovElem a, NovikovElem b, NovikovElem c, NovikovElem d) {
        return std::vector<NovikovElem>{std::move(a), std::move(b), std::move(c), std::move(d)};
    };
    const NovikovElem z(0);
    const NovikovElem T = NovikovElem::T();
    const NovikovElem T2 = NovikovElem::T(Rational(2));
    ring.classes["omega"] = cls(z, NovikovElem(2), one, z);                       // [omega] = 2 alpha + beta
    ring.classes["c1"] = cls(z, NovikovElem(2), NovikovElem(2), z);               // c1 = 2 alpha + 2 beta
    ring.classes["seidel"] = cls(z, NovikovElem(2) * T, T + T2, z);               // S = (2a+b)T + bT^2
    return ring;
}

LambdaRing build_p1xp1_monotone() {
    LambdaRing ring;
    ring.name = "p1xp1_veronese";
    ring.dimension = 2;
    ring.grading.q_degree = 4;
    ring.basis = {{"1", 0}, {"alpha", 2}, {"beta", 2}, {"pt", 4}};
    ring.pairing = DenseMatrix<Int>(4, 4);
    ring.pairing.setZero();
    ring.pairing(0, 3) = ring.pairing(3, 0) = Int(1);
    ring.pairing(1, 2) = ring.pairing(2, 1) = Int(1);
    init_constants(ring);

    const LaurentPoly one(1);
    const LaurentPoly q = LaurentPoly::q();
    auto set = [&ring](int i, int j, int m, const LaurentPoly& v) {
        ring.constants[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = v;
        ring.constants[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] = v;
    };
    for (int j = 0; j < 4; ++j) set(0, j, j, one);
    set(1, 1, 0, q);   // T -> 1 specialization of the non-monotone relations
    set(2, 2, 0, q);
    set(1, 2, 3, one);
    set(1, 3, 2, q);
    set(2, 3, 1, q);
    set(3, 3, 0, q * q);

    const LaurentPoly z(0);
    ring.classes["omega"] = {z, one, one, z};  // [omega'] = alpha + beta
    ring.classes["c1"] = {z, LaurentPoly(2), LaurentPoly(2), z};
    return ring;
}

LambdaRing build_grassmannian(int k, int n, int size_bound) {
    if (k < 1 || k >= n) throw InvalidInput("build_grassmannian: need 1 <= k < n");
    if (binomial(n, k) > size_bound)
        throw SizeBoundExceeded("Gr(" + std::to_string(k) + "," + std::to_string(n) + ") rank " +
                                binomial(n, k).str() + " exceeds bound " + std::to_string(size_bound));
    LambdaRing ring;
    ring.name = "gr_" + std::to_string(k) + "_" + std::to_string(n);
    ring.dimension = k * (n - k);
    ring.grading.q_degree = 2 * n;  // C_{Gr(k,n)} = n

    std::vector<Partition> box = partitions_in_box(k, n - k);
    std::map<Partition, std::size_t> index;
    for (std::size_t i = 0; i < box.size(); ++i) {
        ring.basis.push_back({weight(box[i]) == 0 ? "1" : partition_name(box[i]), 2 * weight(box[i])});
        index[box[i]] = i;
    }
    const std::size_t r = ring.rank();

    ring.pairing = DenseMatrix<Int>(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        Partition comp = box_complement(box[i], k, n - k);
        for (std::size_t j = 0; j < r; ++j)
            ring.pairing(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Int(box[j] == comp ? 1 : 0);
    }

    init_constants(ring);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            auto prod = quantum_lr_product(box[i], box[j], k, n);
            for (const auto& [key, c] : prod) {
                const auto& [d, nu] = key;
                auto it = index.find(nu);
                if (it == index.end())
                    throw AxiomViolation("rim-hook reduction left the box at " + partition_name(nu));
                LaurentPoly term = LaurentPoly::monomial(d, c);
                ring.constants[i][j][it->second] += term;
                if (i != j) ring.constants[j][i][it->second] += term;
            }
        }

    std::vector<LaurentPoly> omega(r, LaurentPoly(0));
    omega[index.at(Partition{1})] = LaurentPoly(1);  // sigma_1 = hyperplane class
    ring.classes["omega"] = omega;
    std::vector<LaurentPoly> c1(r, LaurentPoly(0));
    c1[index.at(Partition{1})] = LaurentPoly(n);
    ring.classes["c1"] = c1;
    return ring;
}

std::vector<CatalogEntryInfo> catalog_list() {
    return {
        {"cpn_<n>", "QH*(CP^n; Lambda), e.g. cpn_3; def(CP^n in CP^{n+1}) = n"},
        {"gr_<k>_<n>", "QH*(Gr(k,n); Lambda) via the n-rim-hook rule, e.g. gr_2_5"},
        {"gr_2_5", "Plucker-embedded Gr(5,2) of the introduction (alias: 2-planes in C^5); def = 2"},
        {"p1xp1_paper", "CP^1 x CP^1 section of the P(O(-1)+O+O) bundle, over the Novikov ring A; def = 1"},
        {"p1xp1_veronese", "CP^1 x CP^1 as hyperplane section of the Veronese CP^3, over Lambda; def = 0"},
        {"segre_m2_r1", "Segre CP^3 x CP^2 profile with curve cone (no ring); def = 1"},
        {"segre_p1xp2_chart", "affine chart model of Segre CP^1 x CP^2 minus a hyperplane (subcrit lab)"},
    };
}

}  // namespace qhsd
