#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncalg/linalg.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

namespace detail {

// Incremental column-space tracker: keeps a forward-reduced copy of every
// independent column so each new candidate costs one reduction pass.
class ColumnSpan {
public:
    explicit ColumnSpan(std::size_t dim) : dim_(dim) {}

    std::size_t rank() const { return cols_.size(); }

    // true iff w enlarges the span (w is then absorbed)
    bool add(std::vector<Rat> w) {
        if (w.size() != dim_) throw std::invalid_argument("ColumnSpan: dimension mismatch");
        reduce(w);
        std::size_t pivot = 0;
        while (pivot < dim_ && w[pivot].is_zero()) ++pivot;
        if (pivot == dim_) return false;
        const Rat inv = Rat(1) / w[pivot];
        for (Rat& x : w) x *= inv;
        cols_.push_back(std::move(w));
        pivots_.push_back(pivot);
        return true;
    }

    bool contains(std::vector<Rat> w) const {
        if (w.size() != dim_) throw std::invalid_argument("ColumnSpan: dimension mismatch");
        reduce(w);
        for (const Rat& x : w)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    void reduce(std::vector<Rat>& w) const {
        for (std::size_t k = 0; k < cols_.size(); ++k) {
            const Rat& c = w[pivots_[k]];
            if (c.is_zero()) continue;
            const Rat factor = c;
            for (std::size_t i = 0; i < dim_; ++i)
                if (!cols_[k][i].is_zero()) w[i] -= factor * cols_[k][i];
        }
    }

    std::size_t dim_;
    std::vector<std::vector<Rat>> cols_;   // monic at their pivot rows
    std::vector<std::size_t> pivots_;
};

}  // namespace detail

struct KrylovLabel {
    Word word;                 // over the operator alphabet, letter j = apply T_j
    std::vector<Rat> vector;   // word(T) v, identical to the basis column
};

// The smallest joint invariant subspace containing v, as an explicit basis
// of vectors u(T) v with their words.
struct KrylovClosure {
    std::size_t ambient_dim = 0;
    RatMatrix basis;                  // ambient_dim x rank, the raw kept columns
    std::vector<KrylovLabel> labels;  // one per basis column
    std::size_t stabilized_at = 0;    // first k with V_k = V_{k+1}

    std::size_t rank() const { return labels.size(); }
};

// Ascending-chain computation V_0 <= V_1 <= ... until stabilization. New
// columns are produced in BFS order (generation, then operator index, then
// parent column), and only rank-enlarging columns are kept. A zero start
// vector yields the zero subspace.
inline KrylovClosure krylov_closure(std::span<const RatMatrix> ops, const std::vector<Rat>& v) {
    const std::size_t n = v.size();
    for (const RatMatrix& t : ops)
        if (t.rows() != n || t.cols() != n)
            throw std::invalid_argument("krylov_closure: operators must be n x n");

    KrylovClosure out;
    out.ambient_dim = n;

    detail::ColumnSpan span(n);
    if (!span.add(v)) {  // v = 0
        out.basis = RatMatrix(n, 0);
        return out;
    }
    out.labels.push_back({Word(), v});

    std::vector<std::size_t> frontier{0};
    std::size_t generation = 0;
    while (true) {
        std::vector<std::size_t> next;
        for (std::uint32_t j = 0; j < ops.size(); ++j) {
            for (std::size_t parent : frontier) {
                std::vector<Rat> w = ops[j] * out.labels[parent].vector;
                if (!span.add(w)) continue;
                next.push_back(out.labels.size());
                out.labels.push_back({out.labels[parent].word.prepend(j), std::move(w)});
            }
        }
        if (next.empty()) {
            out.stabilized_at = generation;
            break;
        }
        frontier = std::move(next);
        ++generation;
    }

    std::vector<std::vector<Rat>> cols;
    cols.reserve(out.labels.size());
    for (const KrylovLabel& l : out.labels) cols.push_back(l.vector);
    out.basis = RatMatrix::from_columns(n, cols);
    return out;
}

inline KrylovClosure krylov_closure(const std::vector<RatMatrix>& ops, const std::vector<Rat>& v) {
    return krylov_closure(std::span<const RatMatrix>(ops), v);
}

// col(V) is invariant under Y iff rank([Y V | V]) = rank(V); a single rref
// of [V | Y V] decides this (a pivot past V's columns means some Y V column
// leaves the span).
inline bool is_invariant_subspace(const RatMatrix& y, const RatMatrix& v) {
    if (!y.is_square() || y.cols() != v.rows())
        throw std::invalid_argument("is_invariant_subspace: shape mismatch");
    const RrefResult r = rref(hcat(v, y * v));
    for (std::size_t p : r.pivot_cols)
        if (p >= v.cols()) return false;
    return true;
}

inline bool is_joint_invariant(std::span<const RatMatrix> ops, const RatMatrix& v) {
    for (const RatMatrix& t : ops)
        if (!is_invariant_subspace(t, v)) return false;
    return true;
}

inline bool is_joint_invariant(const std::vector<RatMatrix>& ops, const RatMatrix& v) {
    return is_joint_invariant(std::span<const RatMatrix>(ops), v);
}

}  // namespace ncalg
