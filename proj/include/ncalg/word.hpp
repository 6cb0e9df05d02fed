#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace ncalg {

// A word in the free monoid: a finite sequence of 0-based variable indices.
// The empty word is the multiplicative identity; the degree of a word is its
// length. Words compare by degree first, then lexicographically, which is
// the canonical basis order used everywhere in this library.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint32_t> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<std::uint32_t> letters) : letters_(letters) {}

    std::size_t degree() const { return letters_.size(); }
    bool is_empty() const { return letters_.empty(); }
    const std::vector<std::uint32_t>& letters() const { return letters_; }

    Word prepend(std::uint32_t letter) const {
        std::vector<std::uint32_t> ls;
        ls.reserve(letters_.size() + 1);
        ls.push_back(letter);
        ls.insert(ls.end(), letters_.begin(), letters_.end());
        return Word(std::move(ls));
    }

    Word append(std::uint32_t letter) const {
        std::vector<std::uint32_t> ls = letters_;
        ls.push_back(letter);
        return Word(std::move(ls));
    }

    friend Word operator*(const Word& a, const Word& b) {
        std::vector<std::uint32_t> ls;
        ls.reserve(a.letters_.size() + b.letters_.size());
        ls.insert(ls.end(), a.letters_.begin(), a.letters_.end());
        ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
        return Word(std::move(ls));
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

    // degree-then-lex
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<std::uint32_t> letters_;
};

}  // namespace ncalg
