#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncalg/linalg.hpp"
#include "ncalg/rational.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

// Homogeneity of a polynomial: the zero polynomial is homogeneous of every
// degree and gets its own tag.
struct Homogeneity {
    enum class Kind { zero, homogeneous, inhomogeneous };
    Kind kind = Kind::zero;
    std::size_t degree = 0;  // meaningful only when kind == homogeneous

    bool is_homogeneous_or_zero() const { return kind != Kind::inhomogeneous; }
};

// Noncommutative polynomial over the rationals: a finitely supported map
// from words to nonzero coefficients, tagged with its alphabet size. The
// term map is ordered degree-then-lex, so iteration is canonical.
class NcPoly {
public:
    explicit NcPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static NcPoly constant(std::size_t nvars, Rat c) {
        NcPoly p(nvars);
        p.add_term(Word(), std::move(c));
        return p;
    }

    static NcPoly variable(std::size_t nvars, std::uint32_t index) {
        NcPoly p(nvars);
        p.add_term(Word({index}), Rat(1));
        return p;
    }

    static NcPoly monomial(std::size_t nvars, Word w, Rat c) {
        NcPoly p(nvars);
        p.add_term(std::move(w), std::move(c));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Word, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // degree of the zero polynomial is the distinguished "below everything"
    // value, encoded as nullopt
    std::optional<std::size_t> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first.degree();
    }

    Rat coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    const std::pair<const Word, Rat>& leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
        return *terms_.rbegin();
    }

    void add_term(Word w, Rat c) {
        check_word(w);
        if (c.is_zero()) return;
        // try_emplace leaves c intact when the word is already present
        auto [it, inserted] = terms_.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Same polynomial over a (usually larger) alphabet.
    NcPoly with_nvars(std::size_t nvars) const {
        NcPoly p(nvars);
        for (const auto& [w, c] : terms_) p.add_term(w, c);
        return p;
    }

    Homogeneity homogeneity() const {
        if (terms_.empty()) return {Homogeneity::Kind::zero, 0};
        const std::size_t k = terms_.begin()->first.degree();
        if (terms_.rbegin()->first.degree() != k) return {Homogeneity::Kind::inhomogeneous, 0};
        return {Homogeneity::Kind::homogeneous, k};
    }

    // Canonical representative of p + I_m: drops all words of degree > m.
    NcPoly truncate(std::size_t m) const {
        NcPoly p(nvars_);
        for (const auto& [w, c] : terms_) {
            if (w.degree() > m) break;  // terms are degree-ordered
            p.terms_.emplace(w, c);
        }
        return p;
    }

    NcPoly& operator+=(const NcPoly& o) {
        check_alphabet(o);
        if (this == &o) {
            for (auto& [w, c] : terms_) c += c;
            return *this;
        }
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }

    NcPoly& operator-=(const NcPoly& o) {
        check_alphabet(o);
        if (this == &o) {
            terms_.clear();
            return *this;
        }
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }

    friend NcPoly operator-(const NcPoly& a) {
        NcPoly p(a.nvars_);
        for (const auto& [w, c] : a.terms_) p.terms_.emplace(w, -c);
        return p;
    }

    friend NcPoly operator*(const Rat& s, const NcPoly& a) {
        NcPoly p(a.nvars_);
        if (s.is_zero()) return p;
        for (const auto& [w, c] : a.terms_) p.terms_.emplace(w, s * c);
        return p;
    }

    // Bilinear extension of word concatenation.
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
        a.check_alphabet(b);
        NcPoly p(a.nvars_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) p.add_term(wa * wb, ca * cb);
        return p;
    }

    friend bool operator==(const NcPoly& a, const NcPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_word(const Word& w) const {
        for (std::uint32_t l : w.letters())
            if (l >= nvars_) throw std::invalid_argument("NcPoly: letter index out of alphabet");
    }

    void check_alphabet(const NcPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("NcPoly: alphabet size mismatch");
    }

    std::size_t nvars_;
    std::map<Word, Rat> terms_;
};

// A d-tuple of square matrices of equal size, the evaluation point of a
// d-variable polynomial.
struct MatTuple {
    std::size_t n = 0;
    std::vector<RatMatrix> mats;

    MatTuple() = default;
    MatTuple(std::size_t size, std::vector<RatMatrix> ms) : n(size), mats(std::move(ms)) {
        for (const RatMatrix& m : mats)
            if (m.rows() != n || m.cols() != n)
                throw std::invalid_argument("MatTuple: matrices must all be n x n");
    }
    explicit MatTuple(std::vector<RatMatrix> ms)
        : MatTuple(ms.empty() ? 0 : ms.front().rows(), std::move(ms)) {}

    std::size_t arity() const { return mats.size(); }
};

// Substitution u(f_1, ..., f_l): replaces letter j of each word of h by
// f[j], preserving order; the empty word maps to the constant 1.
inline NcPoly substitute(const NcPoly& h, std::span<const NcPoly> f) {
    if (h.nvars() != f.size()) throw std::invalid_argument("substitute: arity mismatch");
    const std::size_t d = f.empty() ? 0 : f.front().nvars();
    for (const NcPoly& fj : f)
        if (fj.nvars() != d) throw std::invalid_argument("substitute: generators over different alphabets");
    NcPoly out(d);
    for (const auto& [w, c] : h.terms()) {
        NcPoly prod = NcPoly::constant(d, Rat(1));
        for (std::uint32_t letter : w.letters()) prod = prod * f[letter];
        out += c * prod;
    }
    return out;
}

inline NcPoly substitute(const NcPoly& h, const std::vector<NcPoly>& f) {
    return substitute(h, std::span<const NcPoly>(f));
}

// Evaluation at a matrix tuple; the empty word becomes the identity.
inline RatMatrix evaluate_at_matrices(const NcPoly& p, const MatTuple& x) {
    if (p.nvars() != x.arity()) throw std::invalid_argument("evaluate_at_matrices: arity mismatch");
    RatMatrix acc(x.n, x.n);
    for (const auto& [w, c] : p.terms()) {
        RatMatrix prod = RatMatrix::identity(x.n);
        for (std::uint32_t letter : w.letters()) prod = prod * x.mats[letter];
        acc = acc + c * prod;
    }
    return acc;
}

}  // namespace ncalg
