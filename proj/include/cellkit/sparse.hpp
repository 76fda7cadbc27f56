// Sparse integer columns and the column reduction that extracts a lattice
// basis for the image of a (very wide) sparse boundary matrix.
#pragma once

#include "cellkit/int.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cellkit {

// Sorted by row index, no zero coefficients.
using SparseVec = std::vector<std::pair<std::int32_t, Int>>;

struct SparseMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseVec> columns;
};

// a*x + b*y, merged by row.
inline SparseVec sparse_combine(const Int& a, const SparseVec& x, const Int& b,
                                const SparseVec& y) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            Int v = a * x[i].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            Int v = b * y[j].second;
            if (v != 0) out.emplace_back(y[j].first, std::move(v));
            ++j;
        } else {
            Int v = a * x[i].second + b * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

inline void sparse_negate(SparseVec& x) {
    for (auto& [r, v] : x) v = -v;
}

// Reduces the given columns to a basis of the lattice they span. Pivot of a
// column is its bottom-most entry; same-pivot columns are combined by exact
// division or a Bezout step, which preserves the spanned lattice.
inline std::vector<SparseVec> image_lattice_basis(const std::vector<SparseVec>& cols) {
    std::vector<SparseVec> basis;
    std::unordered_map<std::int32_t, std::size_t> owner;  // pivot row -> basis slot
    for (const auto& orig : cols) {
        SparseVec c = orig;
        while (!c.empty()) {
            const std::int32_t row = c.back().first;
            auto it = owner.find(row);
            if (it == owner.end()) {
                if (c.back().second < 0) sparse_negate(c);
                owner.emplace(row, basis.size());
                basis.push_back(std::move(c));
                break;
            }
            SparseVec& b = basis[it->second];
            const Int& beta = b.back().second;  // > 0
            const Int& alpha = c.back().second;
            if (alpha % beta == 0) {
                c = sparse_combine(1, c, -(alpha / beta), b);
            } else {
                Int s, t;
                Int g = exgcd(beta, alpha, s, t);
                SparseVec nb = sparse_combine(s, b, t, c);
                SparseVec nc = sparse_combine(beta / g, c, -(alpha / g), b);
                b = std::move(nb);
                c = std::move(nc);
            }
        }
    }
    return basis;
}

}  // namespace cellkit
