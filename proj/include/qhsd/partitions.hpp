#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "qhsd/errors.hpp"
#include "qhsd/numeric.hpp"

namespace qhsd {

// Weakly decreasing nonnegative parts, stored without trailing zeros.
using Partition = std::vector<int>;

inline Partition normalized(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
    if (!p.empty() && p.back() < 0) throw InvalidInput("partition parts must be nonnegative");
    return p;
}

inline int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }
inline int part(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

inline bool fits_in_box(const Partition& p, int rows, int cols) {
    if (static_cast<int>(p.size()) > rows) return false;
    return p.empty() || p.front() <= cols;
}

inline bool contains(const Partition& outer, const Partition& inner) {
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (part(outer, i) < inner[i]) return false;
    return true;
}

// Complement inside the k x (n-k) box: mu_i = (n-k) - lambda_{k+1-i}.
inline Partition box_complement(const Partition& p, int rows, int cols) {
    if (!fits_in_box(p, rows, cols)) throw InvalidInput("box_complement: partition exceeds box");
    Partition c(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) c[static_cast<std::size_t>(i)] = cols - part(p, static_cast<std::size_t>(rows - 1 - i));
    return normalized(std::move(c));
}

inline std::string partition_name(const Partition& p) {
    if (p.empty()) return "s[]";
    std::string s = "s[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

// All partitions inside a rows x cols box, ordered by weight and then with
// wider shapes first; this fixes the Schubert basis order.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> all;
    Partition cur;
    std::function<void(int, int)> gen = [&](int row, int maxPart) {
        all.push_back(cur);
        if (row >= rows) return;
        for (int v = 1; v <= maxPart; ++v) {
            cur.push_back(v);
            gen(row + 1, v);
            cur.pop_back();
        }
    };
    gen(0, cols);
    std::sort(all.begin(), all.end(), [](const Partition& a, const Partition& b) {
        int wa = weight(a), wb = weight(b);
        if (wa != wb) return wa < wb;
        return a > b;  // s[2] before s[1,1]
    });
    return all;
}

// Partitions of weight w with at most `rows` rows and parts at most `maxPart`.
inline std::vector<Partition> partitions_of_weight(int w, int rows, int maxPart) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int, int)> gen = [&](int remaining, int row, int bound) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (row >= rows) return;
        for (int v = std::min(bound, remaining); v >= 1; --v) {
            cur.push_back(v);
            gen(remaining - v, row + 1, v);
            cur.pop_back();
        }
    };
    gen(w, 0, maxPart);
    return out;
}

// Littlewood-Richardson coefficient c^{nu}_{lambda, mu} by direct enumeration
// of LR skew tableaux of shape nu/lambda with content mu: semistandard rows,
// strict columns, and the reverse reading word a lattice word.
inline Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (weight(lambda) + weight(mu) != weight(nu)) return Int(0);
    if (!contains(nu, lambda)) return Int(0);
    if (mu.empty()) return Int(1);

    const int rows = static_cast<int>(nu.size());
    const int values = static_cast<int>(mu.size());
    // Cells in reading order: each row right to left, rows top to bottom.
    struct Cell { int r, c; };
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = nu[static_cast<std::size_t>(r)] - 1; c >= part(lambda, static_cast<std::size_t>(r)); --c)
            cells.push_back({r, c});

    std::vector<std::vector<int>> fill(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        fill[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[static_cast<std::size_t>(r)]), 0);
    std::vector<int> count(static_cast<std::size_t>(values) + 1, 0);

    Int total(0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            total += 1;
            return;
        }
        const auto [r, c] = cells[idx];
        int lo = 1, hi = values;
        // Weak increase along the row: the right neighbour was filled already.
        if (c + 1 < nu[static_cast<std::size_t>(r)])
            hi = std::min(hi, fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]);
        // Strict increase down the column when the cell above is in the skew shape.
        if (r > 0 && c < nu[static_cast<std::size_t>(r - 1)] && c >= part(lambda, static_cast<std::size_t>(r - 1)))
            lo = std::max(lo, fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (count[static_cast<std::size_t>(v)] >= mu[static_cast<std::size_t>(v - 1)]) continue;
            // Lattice condition on the prefix of the reading word.
            if (v > 1 && count[static_cast<std::size_t>(v - 1)] <= count[static_cast<std::size_t>(v)]) continue;
            fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++count[static_cast<std::size_t>(v)];
            rec(idx + 1);
            --count[static_cast<std::size_t>(v)];
            fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        }
    };
    rec(0);
    return total;
}

}  // namespace qhsd
