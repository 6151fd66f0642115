#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhsd/errors.hpp"

namespace qhsd {

// Ranks of torsion-free cohomology, b_0 .. b_top.  top is 2n for a closed
// complex n-fold; circle-bundle totals are odd-dimensional, so the type only
// assumes a top degree.
struct BettiTable {
    std::vector<long long> ranks;

    int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
    long long rank(long j) const {
        if (j < 0 || j >= static_cast<long>(ranks.size())) return 0;
        return ranks[static_cast<std::size_t>(j)];
    }
    long long total() const {
        long long s = 0;
        for (long long r : ranks) s += r;
        return s;
    }
    // Degrees where Poincare duality b_j = b_{top-j} fails.
    std::vector<int> pd_violations() const {
        std::vector<int> v;
        for (int j = 0; j <= top_degree(); ++j)
            if (rank(j) != rank(top_degree() - j)) v.push_back(j);
        return v;
    }
};

struct CyclicBetti {
    int period = 0;  // 2C
    std::vector<long long> values;
};

// Wrap-around sums b~_i = sum_l b_{i + 2Cl}.
inline CyclicBetti cyclic_betti(const BettiTable& table, int c) {
    if (c < 1) throw InvalidInput("cyclic_betti: C must be >= 1");
    CyclicBetti out;
    out.period = 2 * c;
    out.values.assign(static_cast<std::size_t>(out.period), 0);
    for (int j = 0; j <= table.top_degree(); ++j)
        out.values[static_cast<std::size_t>(j % out.period)] += table.rank(j);
    return out;
}

struct CheckEntry {
    std::string what;
    bool pass = true;
};

struct PeriodicityReport {
    std::vector<CheckEntry> entries;
    bool pass = true;

    void add(std::string what, bool ok) {
        pass = pass && ok;
        entries.push_back({std::move(what), ok});
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> f;
        for (const auto& e : entries)
            if (!e.pass) f.push_back(e.what);
        return f;
    }
};

// Cyclic 2-periodicity b~_j = b~_{j+2} at period 2C, together with the
// unwrapped identities it is equivalent to on PD tables:
//   b_j + b_{j+2C} = b_{j+2} + b_{j+2C+2}   (0 <= j <= 2C-3)
//   b_{2C-2} = b_{2C} + 1
//   b_{2C-1} = b_{2C+1} + b_1
// For an n-fold X with defect k these are the n+k+2 = 2C_X identities; for its
// section Sigma the same shape at 2C_Sigma = n+k.
inline PeriodicityReport check_periodicity(const BettiTable& table, int c) {
    if (c < 1) throw InvalidInput("check_periodicity: C must be >= 1");
    PeriodicityReport rep;
    auto pd = table.pd_violations();
    rep.add("poincare duality", pd.empty());
    rep.add("b_0 = 1", table.rank(0) == 1);

    CyclicBetti cb = cyclic_betti(table, c);
    const int p = cb.period;
    for (int j = 0; j < p; ++j) {
        long long lhs = cb.values[static_cast<std::size_t>(j)];
        long long rhs = cb.values[static_cast<std::size_t>((j + 2) % p)];
        rep.add("b~_" + std::to_string(j) + " = b~_" + std::to_string(j + 2), lhs == rhs);
    }
    for (int j = 0; j + 3 <= p; ++j)
        rep.add("b_" + std::to_string(j) + " + b_" + std::to_string(j + p) + " = b_" +
                    std::to_string(j + 2) + " + b_" + std::to_string(j + p + 2),
                table.rank(j) + table.rank(j + p) == table.rank(j + 2) + table.rank(j + p + 2));
    rep.add("b_" + std::to_string(p - 2) + " = b_" + std::to_string(p) + " + 1",
            table.rank(p - 2) == table.rank(p) + 1);
    rep.add("b_" + std::to_string(p - 1) + " = b_" + std::to_string(p + 1) + " + b_1",
            table.rank(p - 1) == table.rank(p + 1) + table.rank(1));
    return rep;
}

// Betti table of a smooth hyperplane section: isomorphisms b_j(Sigma) = b_j(X)
// for j <= n+k-2, the rest by Poincare duality on Sigma.  With k = 0 the
// middle rank b_{n-1}(Sigma) is genuinely out of range and stays unknown.
struct TransferResult {
    std::vector<std::optional<long long>> ranks;  // length 2n-1

    bool complete() const {
        for (const auto& r : ranks)
            if (!r) return false;
        return true;
    }
    BettiTable table() const {
        BettiTable t;
        for (const auto& r : ranks) {
            if (!r) throw InconsistentTable("transfer left unknown ranks");
            t.ranks.push_back(*r);
        }
        return t;
    }
};

inline TransferResult lefschetz_transfer(const BettiTable& table_x, int n, int k) {
    if (n < 2) throw InvalidInput("lefschetz_transfer: n must be >= 2");
    if (table_x.top_degree() != 2 * n)
        throw InvalidInput("lefschetz_transfer: table does not have 2n+1 entries");
    TransferResult out;
    out.ranks.assign(static_cast<std::size_t>(2 * n - 1), std::nullopt);
    const int top = 2 * n - 2;
    for (int j = 0; j <= top; ++j) {
        std::optional<long long> direct, dual;
        if (j <= n + k - 2) direct = table_x.rank(j);
        if (top - j <= n + k - 2) dual = table_x.rank(top - j);
        if (direct && dual && *direct != *dual)
            throw InconsistentTable("transfer conflict at j = " + std::to_string(j) + ": " +
                                    std::to_string(*direct) + " vs " + std::to_string(*dual));
        if (direct)
            out.ranks[static_cast<std::size_t>(j)] = direct;
        else if (dual)
            out.ranks[static_cast<std::size_t>(j)] = dual;
    }
    return out;
}

// Rank-level hard Lefschetz window: b_j = b_{j+2} for n-k-1 <= j <= n+k-3
// (out-of-range ranks are zero).
inline PeriodicityReport hard_lefschetz_window(const BettiTable& table, int n, int k) {
    PeriodicityReport rep;
    for (int j = n - k - 1; j <= n + k - 3; ++j)
        rep.add("b_" + std::to_string(j) + " = b_" + std::to_string(j + 2),
                table.rank(j) == table.rank(j + 2));
    return rep;
}

// Betti table of the unit circle bundle P over Sigma with Euler class e, from
// the Gysin sequence over a field:
//   b_j(P) = (b_j - rank_{j-2}) + (b_{j-1} - rank_{j-1}),
// rank_j being the rank of cup(e): H^j -> H^{j+2}.  When absent, ranks default
// to the maximum hard Lefschetz allows on a smooth polarized table: injective
// below the middle degree, surjective above.
inline BettiTable gysin_circle_bundle(const BettiTable& sigma,
                                      std::optional<std::vector<long long>> cup_ranks = std::nullopt) {
    if (sigma.top_degree() % 2 != 0)
        throw InvalidInput("gysin_circle_bundle: Sigma table must have even top degree");
    const int top = sigma.top_degree();
    const int m = top / 2;
    std::vector<long long> rk(static_cast<std::size_t>(std::max(top - 1, 0)), 0);
    if (cup_ranks) {
        if (static_cast<int>(cup_ranks->size()) != std::max(top - 1, 0))
            throw InvalidInput("gysin_circle_bundle: expected " + std::to_string(std::max(top - 1, 0)) +
                               " cup ranks");
        rk = *cup_ranks;
    } else {
        for (int j = 0; j <= top - 2; ++j)
            rk[static_cast<std::size_t>(j)] = j <= m - 1 ? sigma.rank(j) : sigma.rank(j + 2);
    }
    auto rank_at = [&](long j) -> long long {
        if (j < 0 || j >= static_cast<long>(rk.size())) return 0;
        return rk[static_cast<std::size_t>(j)];
    };
    for (int j = 0; j <= top - 2; ++j)
        if (rank_at(j) < 0 || rank_at(j) > std::min(sigma.rank(j), sigma.rank(j + 2)))
            throw RankInconsistency("cup rank at H^" + std::to_string(j) + " exceeds " +
                                    std::to_string(std::min(sigma.rank(j), sigma.rank(j + 2))));
    BettiTable p;
    p.ranks.assign(static_cast<std::size_t>(top + 2), 0);
    for (int j = 0; j <= top + 1; ++j) {
        long long v = (sigma.rank(j) - rank_at(j - 2)) + (sigma.rank(j - 1) - rank_at(j - 1));
        if (v < 0) throw RankInconsistency("negative rank b_" + std::to_string(j) + "(P)");
        p.ranks[static_cast<std::size_t>(j)] = v;
    }
    return p;
}

// Exactness constraints on H^*(P) from the three-term sequences
// H^{j-1+N} -> H^j -> H^{j+1-N} with vanishing limit: b_j <= b_{j-1+N} + b_{j+1-N}.
// With (n, k) supplied, also the quoted vanishing window
// H^j(P) = 0 for n-k+3 <= j <= n+k-2, and the advisory isomorphism range
// b_j = b_{j-1+n+k} for 0 <= j <= n-k-2 (the derivation is only sketched, so
// its failures are reported as advisory).
struct OhReport {
    PeriodicityReport bounds;
    PeriodicityReport vanishing;
    PeriodicityReport advisory;
    bool pass = true;
};

inline OhReport oh_exactness_check(const BettiTable& p, int maslov,
                                   std::optional<std::pair<int, int>> nk = std::nullopt) {
    if (maslov < 2) throw InvalidInput("oh_exactness_check: N must be >= 2");
    OhReport rep;
    for (int j = 0; j <= p.top_degree(); ++j)
        rep.bounds.add("b_" + std::to_string(j) + " <= b_" + std::to_string(j - 1 + maslov) +
                           " + b_" + std::to_string(j + 1 - maslov),
                       p.rank(j) <= p.rank(j - 1 + maslov) + p.rank(j + 1 - maslov));
    if (nk) {
        const auto [n, k] = *nk;
        for (int j = n - k + 3; j <= n + k - 2; ++j)
            rep.vanishing.add("b_" + std::to_string(j) + "(P) = 0", p.rank(j) == 0);
        for (int j = 0; j <= n - k - 2; ++j)
            rep.advisory.add("b_" + std::to_string(j) + "(P) = b_" + std::to_string(j - 1 + n + k) + "(P)",
                             p.rank(j) == p.rank(j - 1 + n + k));
    }
    rep.pass = rep.bounds.pass && rep.vanishing.pass;
    return rep;
}

}  // namespace qhsd
