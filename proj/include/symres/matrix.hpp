#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symres/errors.hpp"
#include "symres/poly.hpp"

namespace symres {

/// Dense row-major matrix with entries in an exact ring: a field scalar
/// (Rational, Fp) or a polynomial over one. A zero exemplar pins the ring
/// and table context even for empty shapes.
template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, T zero)
        : rows_(rows), cols_(cols), zero_(std::move(zero)),
          e_(rows * cols, zero_) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& at(std::size_t i, std::size_t j) { return e_.at(i * cols_ + j); }
    const T& at(std::size_t i, std::size_t j) const { return e_.at(i * cols_ + j); }

    bool is_square() const { return rows_ == cols_; }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k)
            std::swap(e_[i * cols_ + k], e_[j * cols_ + k]);
    }

    static Matrix identity(std::size_t n, const T& one) {
        Matrix m(n, n, one.zero_like());
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_, cols_;
    T zero_;
    std::vector<T> e_;
};

/// Determinant by fraction-free (Bareiss) elimination. Pivoting scans the
/// current column for the first structurally nonzero entry; row swaps
/// flip the sign. Every interior division is exact by the algorithm's
/// invariant; an inexact_division escaping from here is a bug, not an
/// input condition.
template <class T>
T bareiss_det(Matrix<T> m) {
    if (!m.is_square()) throw dimension_mismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    T one = m.zero().one_like();
    if (n == 0) return one;
    T prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m.at(piv, k).is_zero()) ++piv;
        if (piv == n) return m.zero();
        if (piv != k) {
            m.swap_rows(piv, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = exact_div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j),
                                       prev);
        prev = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

/// Independent determinant oracle: recursive cofactor expansion along the
/// first row. Cost grows factorially, hence the dimension guard.
template <class T>
T cofactor_det(const Matrix<T>& m) {
    if (!m.is_square()) throw dimension_mismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n > 8) throw guard_exceeded("cofactor determinant limited to dimension 8");
    if (n == 0) return m.zero().one_like();
    if (n == 1) return m.at(0, 0);
    T acc = m.zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Matrix<T> minor(n - 1, n - 1, m.zero());
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        T term = m.at(0, j) * cofactor_det(minor);
        if (j % 2 == 0) acc += term; else acc -= term;
    }
    return acc;
}

/// Matrix of partial derivatives: entry (i, j) = d ps[i] / d vars[j].
template <class R>
Matrix<Poly<R>> jacobian(std::span<const Poly<R>> ps, std::span<const std::string> vars) {
    if (ps.empty()) throw dimension_mismatch("jacobian of an empty system");
    const auto& table = ps.front().table();
    for (const auto& p : ps) require_compatible(table, p.table());
    for (const auto& v : vars) table->require(v);
    Matrix<Poly<R>> m(ps.size(), vars.size(), ps.front().zero_like());
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < vars.size(); ++j)
            m.at(i, j) = ps[i].derivative(vars[j]);
    return m;
}

/// Rank by exact Gaussian elimination over a field.
template <class R>
std::size_t rank_over_field(Matrix<R> m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank) m.swap_rows(piv, rank);
        R inv = m.at(rank, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(rank, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            R f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

template <class R>
struct LinearSolveResult {
    bool consistent = false;
    std::size_t rank = 0;
    std::vector<R> solution; // empty when inconsistent
};

/// One exact solution of A x = b with free variables pinned to zero, or
/// inconsistency. Reduction to RREF keeps the pivot bookkeeping trivial.
template <class R>
LinearSolveResult<R> solve_linear_info(Matrix<R> a, std::vector<R> b) {
    if (b.size() != a.rows()) throw dimension_mismatch("rhs length != row count");
    const std::size_t n = a.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row) {
            a.swap_rows(piv, row);
            std::swap(b[piv], b[row]);
        }
        R inv = a.at(row, col).inverse();
        for (std::size_t j = col; j < n; ++j) a.at(row, j) *= inv;
        b[row] *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            R f = a.at(i, col);
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(row, j);
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    LinearSolveResult<R> res;
    res.rank = pivot_col.size();
    for (std::size_t i = row; i < a.rows(); ++i)
        if (!b[i].is_zero()) return res; // 0 = nonzero: no solution
    res.consistent = true;
    R zero = a.rows() ? b.front().zero_like() : a.zero().zero_like();
    res.solution.assign(n, zero);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        res.solution[pivot_col[r]] = b[r];
    return res;
}

template <class R>
std::optional<std::vector<R>> solve_linear(Matrix<R> a, std::vector<R> b) {
    auto res = solve_linear_info(std::move(a), std::move(b));
    if (!res.consistent) return std::nullopt;
    return std::move(res.solution);
}

} // namespace symres
