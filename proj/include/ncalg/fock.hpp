#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "ncalg/linalg.hpp"
#include "ncalg/poly.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

// Coordinates of a truncated-Fock-space element in the word basis of the
// owning FockSpace.
using FockVector = std::vector<Rat>;

// The truncated Fock space F_m on d variables: all words of degree <= m in
// degree-then-lex order form the basis, with the empty word first.
class FockSpace {
public:
    FockSpace(std::size_t d, std::size_t m) : d_(d), m_(m) {
        if (d == 0) throw std::invalid_argument("FockSpace: need at least one variable");
        std::vector<Word> level{Word()};
        append_level(level);
        for (std::size_t deg = 1; deg <= m; ++deg) {
            std::vector<Word> next;
            next.reserve(level.size() * d);
            for (std::uint32_t a = 0; a < d; ++a)
                for (const Word& w : level) next.push_back(w.prepend(a));
            append_level(next);
            level = std::move(next);
        }
    }

    std::size_t d() const { return d_; }
    std::size_t order() const { return m_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Word>& basis() const { return basis_; }
    const Word& word_at(std::size_t i) const { return basis_.at(i); }

    std::size_t index_of(const Word& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) throw std::out_of_range("FockSpace: word not in basis");
        return it->second;
    }

    FockVector unit_vector(std::size_t i) const {
        FockVector v(dim());
        v.at(i) = Rat(1);
        return v;
    }

    // The left creation operator L_{x_k} in the word basis: the column of a
    // word w holds e_{x_k w} when deg(w) < m and is zero when deg(w) = m.
    RatMatrix creation_matrix(std::uint32_t k) const {
        if (k >= d_) throw std::out_of_range("creation_matrix: variable index out of range");
        RatMatrix l(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            const Word& w = basis_[j];
            if (w.degree() < m_) l(index_of(w.prepend(k)), j) = Rat(1);
        }
        return l;
    }

    MatTuple creation_tuple() const {
        std::vector<RatMatrix> ls;
        ls.reserve(d_);
        for (std::uint32_t k = 0; k < d_; ++k) ls.push_back(creation_matrix(k));
        return MatTuple(dim(), std::move(ls));
    }

    NcPoly to_poly(const FockVector& v) const {
        if (v.size() != dim()) throw std::invalid_argument("FockSpace: coordinate length mismatch");
        NcPoly p(d_);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) p.add_term(basis_[i], v[i]);
        return p;
    }

    FockVector from_poly(const NcPoly& p) const {
        if (p.nvars() != d_) throw std::invalid_argument("FockSpace: alphabet mismatch");
        FockVector v(dim());
        for (const auto& [w, c] : p.terms()) {
            if (w.degree() > m_) throw std::invalid_argument("FockSpace: polynomial degree exceeds order");
            v[index_of(w)] = c;
        }
        return v;
    }

    // p(L_{x_1}, ..., L_{x_d}) applied to v, computed symbolically as
    // truncate(p * poly(v), m) rather than through dim x dim matrices.
    FockVector apply_at_creation(const NcPoly& p, const FockVector& v) const {
        return from_poly((p * to_poly(v)).truncate(m_));
    }

private:
    void append_level(const std::vector<Word>& level) {
        for (const Word& w : level) {
            index_.emplace(w, basis_.size());
            basis_.push_back(w);
        }
    }

    std::size_t d_;
    std::size_t m_;
    std::vector<Word> basis_;
    std::map<Word, std::size_t> index_;
};

}  // namespace ncalg
