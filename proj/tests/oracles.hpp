#pragma once

// Brute-force reference computations. Nothing here calls into the code paths
// it is used to check.

#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "gtam/walks.hpp"

namespace oracle {

/// Literal reading: in every column, the East step of `lower` is not
/// strictly above the East step of `upper`.
inline bool above_by_columns(const gtam::Walk& lower, const gtam::Walk& upper) {
    if (lower.endpoint() != upper.endpoint()) return false;
    auto heights = [](const gtam::Walk& w) {
        std::vector<int> h;
        int y = 0;
        for (char c : w.word()) {
            if (c == 'N')
                ++y;
            else
                h.push_back(y);
        }
        return h;
    };
    const auto a = heights(lower), b = heights(upper);
    for (std::size_t col = 0; col < a.size(); ++col)
        if (a[col] > b[col]) return false;
    return true;
}

/// Every walk reachable from `start` by repeated covering moves, where the
/// covering move is re-implemented directly from its definition.
inline std::set<gtam::Walk> push_closure(const gtam::Walk& nu, const gtam::Walk& start) {
    const auto end = nu.endpoint();
    auto xprime = [&](int y) {
        if (y == end.y) return end.x;
        int x = 0, h = 0;
        for (char c : nu.word()) {
            if (c == 'E')
                ++x;
            else if (h++ == y)
                return x;
        }
        return -1;
    };
    std::set<gtam::Walk> seen{start};
    std::queue<gtam::Walk> todo;
    todo.push(start);
    while (!todo.empty()) {
        const gtam::Walk g = todo.front();
        todo.pop();
        const std::string& w = g.word();
        std::vector<int> xs{0}, ys{0};
        for (char c : w) {
            xs.push_back(xs.back() + (c == 'E'));
            ys.push_back(ys.back() + (c == 'N'));
        }
        for (std::size_t k = 1; k < w.size(); ++k) {
            if (!(w[k - 1] == 'E' && w[k] == 'N')) continue;
            const int lab = xprime(ys[k]) - xs[k];
            std::size_t m = k + 1;
            while (xprime(ys[m]) - xs[m] != lab) ++m;
            gtam::Walk next(w.substr(0, k - 1) + w.substr(k, m - k) + "E" + w.substr(m));
            if (seen.insert(next).second) todo.push(next);
        }
    }
    return seen;
}

/// Number of pairs (g, g') of Dyck walks of length 2n with g' weakly above g,
/// counted by a dynamic program over the pair of heights.
inline std::int64_t nested_dyck_pairs(int n) {
    // state: (height of lower, height of upper) after k steps of each,
    // walking both simultaneously; upper stays weakly above lower iff its
    // prefix of N steps is never smaller at equal lengths.
    std::map<std::pair<int, int>, std::int64_t> cur{{{0, 0}, 1}};
    for (int k = 0; k < 2 * n; ++k) {
        std::map<std::pair<int, int>, std::int64_t> nxt;
        for (auto& [hs, c] : cur)
            for (int dl : {1, -1})
                for (int du : {1, -1}) {
                    const int l = hs.first + dl, u = hs.second + du;
                    if (l < 0 || u < 0 || u < l) continue;
                    nxt[{l, u}] += c;
                }
        cur = std::move(nxt);
    }
    return cur[{0, 0}];
}

/// The running example: a triple in R_{7,5}[3,2] whose middle and upper
/// bracket vectors relative to the lower walk are (4,0,0,4,3,3,5) and
/// (5,4,0,4,2,3,5). Middle and upper walks are read off from the
/// multiplicities of the two vectors; the lower walk is the one with
/// three East steps at height 0 producing both vectors that comes first in
/// lexicographic order (two other lower walks give the same vectors).
inline gtam::WalkTriple running_example_triple() {
    return {gtam::Walk("EEENEENNENNE"), gtam::Walk("EENNNEENEENE"), gtam::Walk("ENNENENEENEE")};
}

}  // namespace oracle
