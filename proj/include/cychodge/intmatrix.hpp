#pragma once

#include "cychodge/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace cychodge {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("IntMatrix: dimensions must be positive");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return e_[idx(i, j)]; }
    const Int& at(int i, int j) const { return e_[idx(i, j)]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
        IntMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (int j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    /// Determinant by cofactor-free fraction-bearing elimination over Q.
    Int det() const {
        if (rows_ != cols_) throw std::invalid_argument("IntMatrix: det of non-square matrix");
        std::vector<std::vector<Rat>> m(static_cast<size_t>(rows_),
                                        std::vector<Rat>(static_cast<size_t>(cols_)));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m[i][j] = Rat(at(i, j));
        Rat d(1);
        for (int c = 0; c < cols_; ++c) {
            int pivot = -1;
            for (int r = c; r < rows_; ++r)
                if (!m[r][c].is_zero()) { pivot = r; break; }
            if (pivot < 0) return 0;
            if (pivot != c) { std::swap(m[pivot], m[c]); d = -d; }
            d *= m[c][c];
            for (int r = c + 1; r < rows_; ++r) {
                if (m[r][c].is_zero()) continue;
                Rat f = m[r][c] / m[c][c];
                for (int j = c; j < cols_; ++j) m[r][j] -= f * m[c][j];
            }
        }
        return d.to_int();
    }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("IntMatrix: index out of range");
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }

    int rows_, cols_;
    std::vector<Int> e_;
};

struct SmithResult {
    IntMatrix d;  ///< diagonal, entries d1 | d2 | ... >= 0
    IntMatrix u;  ///< unimodular, rows x rows
    IntMatrix v;  ///< unimodular, cols x cols; u*m*v = d
};

/// Smith normal form by exact row/column reduction, pivoting on the entry
/// of minimal absolute value to keep coefficient growth down.
inline SmithResult smith_normal_form(const IntMatrix& m0) {
    const int rows = m0.rows(), cols = m0.cols();
    IntMatrix m = m0;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
        for (int j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
        for (int i = 0; i < cols; ++i) std::swap(v.at(i, a), v.at(i, b));
    };
    auto add_row = [&](int dst, int src, const Int& f) {  // row dst += f * row src
        for (int j = 0; j < cols; ++j) m.at(dst, j) += f * m.at(src, j);
        for (int j = 0; j < rows; ++j) u.at(dst, j) += f * u.at(src, j);
    };
    auto add_col = [&](int dst, int src, const Int& f) {
        for (int i = 0; i < rows; ++i) m.at(i, dst) += f * m.at(i, src);
        for (int i = 0; i < cols; ++i) v.at(i, dst) += f * v.at(i, src);
    };
    auto negate_row = [&](int r) {
        for (int j = 0; j < cols; ++j) m.at(r, j) = -m.at(r, j);
        for (int j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
    };

    const int steps = std::min(rows, cols);
    for (int t = 0; t < steps; ++t) {
        // pivot: nonzero entry of minimal |value| in the trailing block
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const Int& x = m.at(i, j);
                if (x == 0) continue;
                Int a = abs(x);
                if (pi < 0 || a < best) { best = a; pi = i; pj = j; }
            }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
                add_row(i, t, -q);
                if (m.at(i, t) != 0) { swap_rows(t, i); dirty = true; }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
                add_col(j, t, -q);
                if (m.at(t, j) != 0) { swap_cols(t, j); dirty = true; }
            }
        }
        // enforce divisibility of the trailing block by the pivot
        bool redo = false;
        for (int i = t + 1; i < rows && !redo; ++i)
            for (int j = t + 1; j < cols && !redo; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    add_row(t, i, 1);
                    redo = true;
                }
        if (redo) { --t; continue; }
        if (m.at(t, t) < 0) negate_row(t);
    }

    SmithResult res{m, u, v};
    return res;
}

}  // namespace cychodge
