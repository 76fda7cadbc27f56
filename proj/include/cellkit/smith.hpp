// Smith normal form over the integers, with optional unimodular transforms.
//
// The elimination is fraction-free with minimal-absolute-value pivot
// selection, which keeps intermediate entries small on the sparse boundary
// matrices this library feeds it. Output is deterministic for a given input.
#pragma once

#include "cellkit/int.hpp"
#include "cellkit/int_matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cellkit {

// Elementary column operation, recorded in application order. AddMul means
// "column j += k * column i". The record is enough to apply V^{-1} to a
// vector later without ever storing V itself.
struct ColOp {
    enum class Kind : std::uint8_t { Swap, Negate, AddMul };
    Kind kind;
    std::uint32_t i = 0, j = 0;
    Int k;
};

// Applies V^{-1} to a coordinate vector by replaying the recorded column
// operations (each op's inverse acts on the left, in recording order).
inline void apply_inverse_col_ops(const std::vector<ColOp>& ops, std::vector<Int>& y) {
    for (const auto& op : ops) {
        switch (op.kind) {
            case ColOp::Kind::Swap:
                std::swap(y[op.i], y[op.j]);
                break;
            case ColOp::Kind::Negate:
                y[op.i] = -y[op.i];
                break;
            case ColOp::Kind::AddMul:
                if (y[op.j] != 0) y[op.i] -= op.k * y[op.j];
                break;
        }
    }
}

struct SnfOptions {
    bool with_u = false;
    bool with_v = false;
    bool with_u_inv = false;
    bool with_v_inv = false;
    bool record_col_ops = false;
};

struct SnfResult {
    std::vector<Int> diag;  // length min(rows, cols); divisibility chain, zeros last
    std::size_t rank = 0;   // number of nonzero diagonal entries
    IntMatrix d;            // the diagonalized matrix, rows x cols
    IntMatrix u, v, u_inv, v_inv;  // populated per options
    std::vector<ColOp> col_ops;    // populated if record_col_ops
};

namespace detail {

// Deterministic pivot scan: smallest |entry|, ties by row-major position.
// Early exit on 1, the global minimum.
inline bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Int& x = a.at(i, j);
            if (x == 0) continue;
            Int ax = abs_int(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
                if (best == 1) return true;
            }
        }
    return found;
}

}  // namespace detail

inline SnfResult smith_normal_form_engine(IntMatrix a, const SnfOptions& opt = {}) {
    const std::size_t m = a.rows(), n = a.cols();
    SnfResult res;
    if (opt.with_u) res.u = IntMatrix::identity(m);
    if (opt.with_u_inv) res.u_inv = IntMatrix::identity(m);
    if (opt.with_v) res.v = IntMatrix::identity(n);
    if (opt.with_v_inv) res.v_inv = IntMatrix::identity(n);

    auto row_swap = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        if (opt.with_u) res.u.swap_rows(i, j);
        if (opt.with_u_inv) res.u_inv.swap_cols(i, j);
    };
    auto row_addmul = [&](std::size_t dst, std::size_t src, const Int& f) {
        a.row_addmul(dst, src, f);
        if (opt.with_u) res.u.row_addmul(dst, src, f);
        if (opt.with_u_inv) res.u_inv.col_addmul(src, dst, -f);
    };
    auto row_negate = [&](std::size_t i) {
        a.negate_row(i);
        if (opt.with_u) res.u.negate_row(i);
        if (opt.with_u_inv) res.u_inv.negate_col(i);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        if (opt.with_v) res.v.swap_cols(i, j);
        if (opt.with_v_inv) res.v_inv.swap_rows(i, j);
        if (opt.record_col_ops)
            res.col_ops.push_back({ColOp::Kind::Swap, static_cast<std::uint32_t>(i),
                                   static_cast<std::uint32_t>(j), Int()});
    };
    // column dst += f * column src
    auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& f) {
        a.col_addmul(dst, src, f);
        if (opt.with_v) res.v.col_addmul(dst, src, f);
        if (opt.with_v_inv) res.v_inv.row_addmul(src, dst, -f);
        if (opt.record_col_ops)
            res.col_ops.push_back({ColOp::Kind::AddMul, static_cast<std::uint32_t>(src),
                                   static_cast<std::uint32_t>(dst), f});
    };

    const std::size_t steps = std::min(m, n);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        std::size_t pi, pj;
        if (!detail::find_pivot(a, t, pi, pj)) break;
        if (pi != t) row_swap(t, pi);
        if (pj != t) col_swap(t, pj);

        for (;;) {
            const bool unit_pivot = abs_int(a.at(t, t)) == 1;

            // Clear the pivot column with row operations.
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                const Int& x = a.at(i, t);
                if (x == 0) continue;
                Int q = nearest_quotient(x, a.at(t, t));
                row_addmul(i, t, -q);
                if (a.at(i, t) != 0) dirty = true;
            }
            if (dirty) {
                // A remainder strictly smaller than the pivot survives;
                // promote the new minimum and restart.
                std::size_t qi = t, qj = t;
                detail::find_pivot(a, t, qi, qj);
                if (qi != t) row_swap(t, qi);
                if (qj != t) col_swap(t, qj);
                continue;
            }

            // Clear the pivot row with column operations.
            for (std::size_t j = t + 1; j < n; ++j) {
                const Int& x = a.at(t, j);
                if (x == 0) continue;
                Int q = nearest_quotient(x, a.at(t, t));
                col_addmul(j, t, -q);
                if (a.at(t, j) != 0) dirty = true;
            }
            if (dirty) {
                std::size_t qi = t, qj = t;
                detail::find_pivot(a, t, qi, qj);
                if (qi != t) row_swap(t, qi);
                if (qj != t) col_swap(t, qj);
                continue;
            }

            if (unit_pivot) break;  // 1 divides everything

            // Divisibility chain repair: drag a non-multiple into the pivot row.
            bool fixed = true;
            const Int& piv = a.at(t, t);
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a.at(i, j) % piv != 0) {
                        row_addmul(t, i, 1);
                        fixed = false;
                        break;
                    }
            if (fixed) break;
        }

        if (a.at(t, t) < 0) row_negate(t);
    }

    res.diag.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) res.diag[i] = a.at(i, i);
    res.rank = t;
    res.d = std::move(a);
    return res;
}

// Full decomposition U*A*V = D.
struct SmithForm {
    IntMatrix u, d, v;
    std::vector<Int> diag;
};

inline SmithForm smith_normal_form(const IntMatrix& a) {
    SnfOptions opt;
    opt.with_u = opt.with_v = true;
    auto r = smith_normal_form_engine(a, opt);
    return {std::move(r.u), std::move(r.d), std::move(r.v), std::move(r.diag)};
}

inline std::vector<Int> snf_diag(const IntMatrix& a) {
    return smith_normal_form_engine(a).diag;
}

inline std::size_t matrix_rank(const IntMatrix& a) {
    return smith_normal_form_engine(a).rank;
}

// Basis of the integer kernel lattice of A, as columns.
inline IntMatrix kernel_lattice(const IntMatrix& a) {
    SnfOptions opt;
    opt.with_v = true;
    auto r = smith_normal_form_engine(a, opt);
    const std::size_t n = a.cols(), k = n - r.rank;
    IntMatrix ker(n, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) ker.at(i, j) = r.v.at(i, r.rank + j);
    return ker;
}

// Exact solution y of R*y = b, if one exists.
inline std::optional<std::vector<Int>> lattice_solve(const IntMatrix& r, const std::vector<Int>& b) {
    if (b.size() != r.rows()) throw std::invalid_argument("lattice_solve: size mismatch");
    SnfOptions opt;
    opt.with_u = opt.with_v = true;
    auto s = smith_normal_form_engine(r, opt);
    // Solve D*w = U*b, then y = V*w.
    std::vector<Int> ub(r.rows());
    for (std::size_t i = 0; i < r.rows(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < r.rows(); ++j)
            if (s.u.at(i, j) != 0 && b[j] != 0) acc += s.u.at(i, j) * b[j];
        ub[i] = std::move(acc);
    }
    std::vector<Int> w(r.cols(), 0);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        if (i < s.diag.size() && s.diag[i] != 0) {
            if (ub[i] % s.diag[i] != 0) return std::nullopt;
            w[i] = ub[i] / s.diag[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> y(r.cols(), 0);
    for (std::size_t i = 0; i < r.cols(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (s.v.at(i, j) != 0 && w[j] != 0) acc += s.v.at(i, j) * w[j];
        y[i] = std::move(acc);
    }
    return y;
}

// Does b lie in the column lattice of R?
inline bool lattice_contains(const IntMatrix& r, const std::vector<Int>& b) {
    return lattice_solve(r, b).has_value();
}

}  // namespace cellkit
