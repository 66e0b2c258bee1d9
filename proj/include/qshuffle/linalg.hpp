#pragma once

#include <map>
#include <optional>
#include <vector>

#include "numbers.hpp"

namespace qshuffle {

// Sparse row over the rationals, keyed by column index.
using SparseRow = std::map<int, Rational>;

struct RankResult {
    int rank = 0;
    // input indices of a maximal independent subset, in input order
    std::vector<int> independent_rows;
    // for the first dependent row found: coefficients over the input rows of
    // a vanishing combination (nonzero on the dependent row itself)
    std::optional<std::vector<Rational>> kernel;
    int first_dependent_row = -1;
};

// Incremental row-echelon over Q. Each candidate row is reduced against the
// pivots collected so far; rows that vanish are dependent. When
// want_kernel is set, the reduction multipliers are tracked so a vanishing
// combination over the original rows can be reported.
inline RankResult sparse_rank(const std::vector<SparseRow>& rows, bool want_kernel = false) {
    RankResult res;
    struct Pivot {
        int col;
        SparseRow row;                 // leading coefficient normalized to 1
        std::map<int, Rational> comb;  // expression in terms of original rows
    };
    std::vector<Pivot> pivots;

    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        SparseRow r = rows[static_cast<size_t>(i)];
        std::map<int, Rational> comb;
        if (want_kernel) comb[i] = 1;
        for (const Pivot& p : pivots) {
            auto it = r.find(p.col);
            if (it == r.end()) continue;
            Rational factor = it->second;
            r.erase(it);
            for (const auto& [c, v] : p.row) {
                if (c == p.col) continue;
                auto [rit, fresh] = r.try_emplace(c, Rational(-factor * v));
                if (!fresh) {
                    rit->second -= factor * v;
                    if (rit->second == 0) r.erase(rit);
                }
            }
            if (want_kernel) {
                for (const auto& [j, v] : p.comb) {
                    auto [cit, fresh] = comb.try_emplace(j, Rational(-factor * v));
                    if (!fresh) {
                        cit->second -= factor * v;
                        if (cit->second == 0) comb.erase(cit);
                    }
                }
            }
        }
        if (r.empty()) {
            if (res.first_dependent_row < 0) {
                res.first_dependent_row = i;
                if (want_kernel) {
                    std::vector<Rational> k(rows.size(), Rational(0));
                    for (const auto& [j, v] : comb) k[static_cast<size_t>(j)] = v;
                    res.kernel = std::move(k);
                }
            }
            continue;
        }
        int col = r.begin()->first;
        Rational lead = r.begin()->second;
        for (auto& [c, v] : r) v /= lead;
        if (want_kernel)
            for (auto& [j, v] : comb) v /= lead;
        pivots.push_back({col, std::move(r), std::move(comb)});
        res.independent_rows.push_back(i);
        ++res.rank;
    }
    return res;
}

}  // namespace qshuffle
