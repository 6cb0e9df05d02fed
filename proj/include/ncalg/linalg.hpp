#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncalg/rational.hpp"

namespace ncalg {

// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw std::invalid_argument("RatMatrix: entry count mismatch");
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
        return m;
    }

    static RatMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rat>>& cols) {
        RatMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("from_columns: column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Rat> column(std::size_t j) const {
        std::vector<Rat> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_zero() const {
        for (const Rat& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix add: shape mismatch");
        RatMatrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
        return c;
    }

    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sub: shape mismatch");
        RatMatrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
        return c;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
        RatMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rat& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Rat& bkj = b(k, j);
                    if (!bkj.is_zero()) c(i, j) += aik * bkj;
                }
            }
        return c;
    }

    friend RatMatrix operator*(const Rat& s, const RatMatrix& a) {
        RatMatrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = s * a.e_[i];
        return c;
    }

    friend std::vector<Rat> operator*(const RatMatrix& a, const std::vector<Rat>& x) {
        if (a.cols_ != x.size()) throw std::invalid_argument("matvec: shape mismatch");
        std::vector<Rat> y(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
        return y;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> e_;
};

inline RatMatrix hcat(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row count mismatch");
    RatMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

struct RrefResult {
    RatMatrix matrix;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form by exact Gauss-Jordan elimination. The first
// nonzero entry of each column is taken as pivot; no pivoting heuristics.
inline RrefResult rref(RatMatrix a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row) a.swap_rows(p, row);
        const Rat inv = Rat(1) / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            const Rat factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& a) { return rref(a).pivot_cols.size(); }

// One exact solution of A x = b, or nullopt when inconsistent. Free
// variables are set to zero, so the result is deterministic.
inline std::optional<std::vector<Rat>> solve_linear(const RatMatrix& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const RrefResult r = rref(std::move(aug));
    if (!r.pivot_cols.empty() && r.pivot_cols.back() == a.cols()) return std::nullopt;
    std::vector<Rat> x(a.cols());
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) x[r.pivot_cols[k]] = r.matrix(k, a.cols());
    return x;
}

// rank([A | w]) = rank(A), i.e. the last augmented column holds no pivot.
inline bool in_column_space(const RatMatrix& a, const std::vector<Rat>& w) {
    if (w.size() != a.rows()) throw std::invalid_argument("in_column_space: vector length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = w[i];
    }
    const RrefResult r = rref(std::move(aug));
    return r.pivot_cols.empty() || r.pivot_cols.back() != a.cols();
}

}  // namespace ncalg
