#pragma once

#include <string>
#include <vector>

#include "qhsd/ring.hpp"
#include "qhsd/rimhook.hpp"

namespace qhsd {

// QH*(CP^n; Lambda): basis 1, h, ..., h^n with h * h^i = h^{i+1} and
// h^{*(n+1)} = q; deg(q) = 2(n+1) = 2C_X for the defect-n embedding
// CP^n in CP^{n+1}.
LambdaRing build_cpn(int n);

// The two CP^1 x CP^1 presentations: the non-monotone hyperplane section with
// [omega] = 2a + b over the Novikov ring A (relations a*a = qT^2, b*b = qT,
// a*b = pt, deg q = 4), and the monotone Veronese-section form [omega'] = a + b
// over Lambda obtained by setting T = 1.
NovikovRing build_p1xp1_paper();
LambdaRing build_p1xp1_monotone();

// QH*(Gr(k,n); Lambda) on the Schubert basis of the k x (n-k) box, with
// structure constants from the n-rim-hook reduction of classical LR products;
// deg(q) = 2n and the pairing is complementary-partition duality.
LambdaRing build_grassmannian(int k, int n, int size_bound = 64);

// Ranks of the basis per cohomological degree 0..2n.
template <class Coeff>
std::vector<long long> degree_ranks(const RingPresentation<Coeff>& ring) {
    std::vector<long long> ranks(static_cast<std::size_t>(2 * ring.dimension + 1), 0);
    for (const auto& b : ring.basis) ++ranks[static_cast<std::size_t>(b.degree)];
    return ranks;
}

struct CatalogEntryInfo {
    std::string id;
    std::string description;
};

// Identifiers accepted by catalog_build_* and the CLI `catalog` subcommands.
std::vector<CatalogEntryInfo> catalog_list();

}  // namespace qhsd
