#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <vector>

#include "qhsd/errors.hpp"
#include "qhsd/partitions.hpp"

namespace qhsd {

// Result of reducing a partition with at most k rows modulo n-rim-hooks into
// the k x (n-k) box.  `vanishes` when two beta-numbers share a residue mod n
// (no reduction into the box exists).  Otherwise the reduction is unique up to
// removal order; d counts removed hooks and sign collects one factor
// (-1)^(k - height) per hook, height being the number of rows the hook spans.
struct RimHookReduction {
    bool vanishes = true;
    int d = 0;
    int sign = 1;
    Partition nu;
};

inline RimHookReduction reduce_rim_hooks(const Partition& rho, int k, int n) {
    RimHookReduction out;
    if (static_cast<int>(rho.size()) > k)
        throw InvalidInput("reduce_rim_hooks: partition has more than k rows");
    // Beta-numbers on the abacus: strictly decreasing, in-box means all < n.
    std::vector<long> beta(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) beta[static_cast<std::size_t>(i)] = part(rho, static_cast<std::size_t>(i)) + (k - 1 - i);

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if ((beta[static_cast<std::size_t>(i)] - beta[static_cast<std::size_t>(j)]) % n == 0)
                return out;  // residue collision: class reduces to zero

    out.vanishes = false;
    // Removing one n-rim-hook = moving a bead down by n; its height is 1 plus
    // the number of beads strictly between source and target.
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j < k; ++j) {
            long& b = beta[static_cast<std::size_t>(j)];
            if (b < n) continue;
            long target = b - n;
            int between = 0;
            for (int i = 0; i < k; ++i) {
                long v = beta[static_cast<std::size_t>(i)];
                if (v > target && v < b) ++between;
            }
            int height = 1 + between;
            if ((k - height) % 2 != 0) out.sign = -out.sign;
            b = target;
            ++out.d;
            moved = true;
        }
    }

    std::sort(beta.rbegin(), beta.rend());
    Partition nu(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) nu[static_cast<std::size_t>(i)] = static_cast<int>(beta[static_cast<std::size_t>(i)] - (k - 1 - i));
    out.nu = normalized(std::move(nu));
    return out;
}

// Quantum Littlewood-Richardson expansion of s_lambda * s_mu in QH(Gr(k,n)):
// the classical product over partitions with at most k rows, followed by the
// n-rim-hook reduction.  Keys are (d, nu); values are the q^d-coefficients.
// BCF positivity makes every final coefficient nonnegative; a negative one can
// only come from a sign mistake, so it aborts loudly.
inline std::map<std::pair<int, Partition>, Int> quantum_lr_product(const Partition& lambda,
                                                                   const Partition& mu, int k, int n) {
    std::map<std::pair<int, Partition>, Int> acc;
    const int w = weight(lambda) + weight(mu);
    const int max_part = part(lambda, 0) + part(mu, 0);
    for (const Partition& rho : partitions_of_weight(w, k, max_part)) {
        Int c = lr_coefficient(lambda, mu, rho);
        if (c == 0) continue;
        RimHookReduction red = reduce_rim_hooks(rho, k, n);
        if (red.vanishes) continue;
        acc[{red.d, red.nu}] += red.sign * c;
    }
    for (auto it = acc.begin(); it != acc.end();) {
        if (it->second == 0) { it = acc.erase(it); continue; }
        if (it->second < 0)
            throw AxiomViolation("rim-hook reduction produced a negative coefficient " +
                                 it->second.str() + " on q^" + std::to_string(it->first.first) + " " +
                                 partition_name(it->first.second) + " in " + partition_name(lambda) +
                                 " * " + partition_name(mu));
        ++it;
    }
    if (weight(lambda) == 0 || weight(mu) == 0) {
        // Unit row: s_[] * s_mu = s_mu exactly.
        const Partition& other = weight(lambda) == 0 ? mu : lambda;
        if (acc.size() != 1 || acc.begin()->first != std::pair<int, Partition>{0, other})
            throw AxiomViolation("unit product corrupted for " + partition_name(other));
    }
    return acc;
}

}  // namespace qhsd
