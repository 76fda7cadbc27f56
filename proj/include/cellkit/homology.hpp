// Integral group homology from the normalized bar resolution. The degree-n
// chain group has one basis element per tuple of non-identity group
// elements; tuples acquiring an identity entry under the differential are
// dropped. H_n is ker d_n / im d_{n+1}, computed exactly:
//   * Smith form of d_n yields a unimodular change of basis whose trailing
//     coordinates parametrize ker d_n (the column operations are recorded,
//     not the transform matrix itself);
//   * a lattice basis of im d_{n+1} is extracted by sparse column reduction
//     and rewritten in those kernel coordinates;
//   * the cokernel of the result is the homology group in canonical form.
#pragma once

#include "cellkit/abelian.hpp"
#include "cellkit/config.hpp"
#include "cellkit/errors.hpp"
#include "cellkit/finite_group.hpp"
#include "cellkit/smith.hpp"
#include "cellkit/sparse.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace cellkit {

struct BarChainLevel {
    std::size_t degree = 0;
    std::size_t order = 1;       // group order
    std::size_t basis_size = 1;  // (order-1)^degree
};

struct BoundaryMap {
    BarChainLevel source;  // degree n
    BarChainLevel target;  // degree n-1
    SparseMat matrix;      // target.basis_size rows, source.basis_size columns
};

namespace detail {

inline std::uint64_t checked_pow(std::size_t base, unsigned exp, std::uint64_t budget,
                                 const char* what) {
    Int v = 1;
    for (unsigned i = 0; i < exp; ++i) v *= static_cast<unsigned long>(base);
    if (v > Int(budget))
        throw BudgetExceeded(std::string(what) + " needs a basis of " + v.str() +
                             " tuples, above the budget of " + std::to_string(budget));
    return v.convert_to<std::uint64_t>();
}

}  // namespace detail

inline BarChainLevel bar_chain_level(const FiniteGroup& g, unsigned degree,
                                     const RunConfig& cfg = {}) {
    BarChainLevel lvl;
    lvl.degree = degree;
    lvl.order = g.order();
    lvl.basis_size = detail::checked_pow(g.order() - 1, degree, cfg.homology_basis_budget,
                                         "bar chain level");
    return lvl;
}

// d_n : C_n -> C_{n-1} with trivial integer coefficients:
//   d[g1|...|gn] = [g2|...|gn]
//                + sum_i (-1)^i [g1|...|g_i g_{i+1}|...|gn]
//                + (-1)^n [g1|...|g_{n-1}].
// Basis tuples are indexed lexicographically (first entry most significant),
// entry value = element index - 1.
inline BoundaryMap bar_boundary(const FiniteGroup& g, unsigned n, const RunConfig& cfg = {}) {
    if (n < 1 || n > cfg.degree_cap)
        throw BudgetExceeded("bar boundary degree " + std::to_string(n) +
                             " is outside the configured degree cap of " +
                             std::to_string(cfg.degree_cap));
    BoundaryMap b;
    b.source = bar_chain_level(g, n, cfg);
    b.target = bar_chain_level(g, n - 1, cfg);
    b.matrix.rows = b.target.basis_size;
    b.matrix.cols = b.source.basis_size;
    b.matrix.columns.resize(b.matrix.cols);
    if (g.order() == 1) return b;  // no non-identity elements, empty bases

    const std::size_t m = g.order() - 1;
    std::vector<std::int32_t> tuple(n);  // element indices (1-based into the group)
    for (std::uint64_t col = 0; col < b.matrix.cols; ++col) {
        std::uint64_t rest = col;
        for (std::size_t i = n; i-- > 0;) {
            tuple[i] = static_cast<std::int32_t>(rest % m) + 1;
            rest /= m;
        }
        std::map<std::int64_t, Int> terms;
        auto face_index = [&](const std::vector<std::int32_t>& t) -> std::int64_t {
            std::int64_t idx = 0;
            for (auto e : t) idx = idx * static_cast<std::int64_t>(m) + (e - 1);
            return idx;
        };
        std::vector<std::int32_t> face(n - 1);
        // face 0: drop the first entry
        for (std::size_t i = 1; i < n; ++i) face[i - 1] = tuple[i];
        terms[face_index(face)] += 1;
        // inner faces: merge entries i-1 and i (1-based positions i, i+1)
        for (std::size_t i = 1; i < n; ++i) {
            std::int32_t prod = g.mul(tuple[i - 1], tuple[i]);
            if (prod == FiniteGroup::identity()) continue;  // normalized: tuple dies
            std::size_t w = 0;
            for (std::size_t j = 0; j + 1 < n; ++j) {
                if (j == i - 1)
                    face[w++] = prod;
                else
                    face[w++] = tuple[j < i - 1 ? j : j + 1];
            }
            terms[face_index(face)] += (i % 2 == 0) ? 1 : -1;
        }
        // last face: drop the final entry
        for (std::size_t i = 0; i + 1 < n; ++i) face[i] = tuple[i];
        terms[face_index(face)] += (n % 2 == 0) ? 1 : -1;

        SparseVec colv;
        for (auto& [row, coeff] : terms)
            if (coeff != 0) colv.emplace_back(static_cast<std::int32_t>(row), coeff);
        b.matrix.columns[col] = std::move(colv);
    }
    // at n = 1 the two degree-0 faces cancel in `terms`, so d1 = 0 falls out
    return b;
}

inline IntMatrix sparse_to_dense(const SparseMat& s) {
    IntMatrix m(s.rows, s.cols);
    for (std::size_t j = 0; j < s.cols; ++j)
        for (const auto& [r, v] : s.columns[j]) m.at(r, j) = v;
    return m;
}

inline FgAbGroup homology(const FiniteGroup& g, unsigned n, const RunConfig& cfg = {}) {
    if (n < 1) throw std::invalid_argument("homology: degree must be >= 1");
    if (n + 1 > cfg.degree_cap)
        throw BudgetExceeded("homology at degree " + std::to_string(n) +
                             " needs boundaries up to degree " + std::to_string(n + 1) +
                             ", above the degree cap of " + std::to_string(cfg.degree_cap));
    if (g.order() == 1) return FgAbGroup::trivial();
    detail::checked_pow(g.order() - 1, n + 1, cfg.homology_basis_budget, "homology");

    BoundaryMap dn = bar_boundary(g, n, cfg);
    BoundaryMap dn1 = bar_boundary(g, n + 1, cfg);

    // Kernel coordinates of d_n.
    std::size_t kernel_rank;
    std::vector<ColOp> ops;
    const std::size_t cn = dn.matrix.cols;
    if (n == 1) {
        kernel_rank = cn;  // d1 = 0: everything is a cycle
    } else {
        SnfOptions opt;
        opt.record_col_ops = true;
        auto s = smith_normal_form_engine(sparse_to_dense(dn.matrix), opt);
        kernel_rank = cn - s.rank;
        ops = std::move(s.col_ops);
    }
    const std::size_t r = cn - kernel_rank;

    // Lattice basis of im d_{n+1}, rewritten in kernel coordinates.
    std::vector<SparseVec> basis = image_lattice_basis(dn1.matrix.columns);
    IntMatrix rel(kernel_rank, basis.size());
    std::vector<Int> y(cn);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (auto& v : y) v = 0;
        for (const auto& [row, val] : basis[j]) y[row] = val;
        apply_inverse_col_ops(ops, y);
        for (std::size_t i = 0; i < r; ++i)
            if (y[i] != 0)
                throw TheoremViolation(
                    "bar differential composition is nonzero: boundary image escapes the cycle "
                    "lattice");
        for (std::size_t i = 0; i < kernel_rank; ++i) rel.at(i, j) = y[r + i];
    }
    return cokernel(rel);
}

inline FgAbGroup schur_multiplier(const FiniteGroup& g, const RunConfig& cfg = {}) {
    return homology(g, 2, cfg);
}

inline bool homology_is_P_torsion(const FiniteGroup& g, const PrimeSet& p,
                                  const std::vector<unsigned>& degrees, const RunConfig& cfg = {}) {
    for (unsigned n : degrees) {
        FgAbGroup h = homology(g, n, cfg);
        if (h.free_rank() != 0) return false;
        for (const auto& d : h.invariant_factors())
            if (!p.supports(d)) return false;
    }
    return true;
}

}  // namespace cellkit
