// Dense exact integer matrices: the substrate for all the homological
// algebra below. Row-major storage, arbitrary-precision entries.
#pragma once

#include "cellkit/int.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellkit {

class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix diagonal(const std::vector<Int>& d) {
        IntMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) {
        check(i, j);
        return a_[i * cols_ + j];
    }
    const Int& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return a_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: size mismatch in product");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& aik = a_[i * cols_ + k];
                if (aik == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Int& bkj = o.a_[k * o.cols_ + j];
                    if (bkj != 0) r.a_[i * o.cols_ + j] += aik * bkj;
                }
            }
        return r;
    }

    std::vector<Int> column(std::size_t j) const {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    // Elementary operations used by the normal-form algorithms.
    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
    }
    void negate_col(std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
    }
    // row dst += f * row src
    void row_addmul(std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        Int* d = &a_[dst * cols_];
        const Int* s = &a_[src * cols_];
        for (std::size_t k = 0; k < cols_; ++k)
            if (s[k] != 0) d[k] += f * s[k];
    }
    // col dst += f * col src
    void col_addmul(std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        for (std::size_t k = 0; k < rows_; ++k) {
            const Int& s = a_[k * cols_ + src];
            if (s != 0) a_[k * cols_ + dst] += f * s;
        }
    }

    // Fraction-free (Bareiss) determinant; exact at every step.
    Int determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
        std::size_t n = rows_;
        if (n == 0) return 1;
        IntMatrix m = *this;
        Int sign = 1, prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m.at(k, k) == 0) {
                std::size_t piv = k + 1;
                while (piv < n && m.at(piv, k) == 0) ++piv;
                if (piv == n) return 0;
                m.swap_rows(k, piv);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j) {
                    Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                    m.at(i, j) = t / prev;  // exact by Bareiss
                }
            prev = m.at(k, k);
        }
        return sign * m.at(n - 1, n - 1);
    }

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("IntMatrix: index out of range");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// File format: first line "rows cols", then row-major whitespace-separated
// integers.
inline IntMatrix read_matrix(std::istream& in) {
    long long r = 0, c = 0;
    if (!(in >> r >> c) || r < 0 || c < 0)
        throw std::invalid_argument("matrix file: expected non-negative \"rows cols\" header");
    IntMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    for (long long i = 0; i < r; ++i)
        for (long long j = 0; j < c; ++j) {
            std::string tok;
            if (!(in >> tok))
                throw std::invalid_argument("matrix file: too few entries");
            try {
                m.at(i, j) = Int(tok);
            } catch (...) {
                throw std::invalid_argument("matrix file: bad integer '" + tok + "'");
            }
        }
    return m;
}

inline void write_matrix(std::ostream& out, const IntMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
}

}  // namespace cellkit
