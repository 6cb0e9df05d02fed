#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncalg/poly.hpp"
#include "ncalg/rational.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

struct ParseError : std::runtime_error {
    std::size_t offset;  // byte offset into the input
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

namespace detail {

// Recursive-descent parser for the polynomial grammar:
//
//   expr   := sign? term (('+'|'-') term)*
//   term   := coeff? ('*'? factor)*
//   factor := var ('^' nat)?
//   var    := 'x' nat | 'y' nat        (1-based index)
//   coeff  := integer ('/' positive-integer)?
//
// Juxtaposition and '*' both mean concatenation product, '^' binds tighter,
// whitespace is insignificant. No parentheses. Indices are 1-based on the
// surface and 0-based internally.
class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    NcPoly parse(std::optional<std::size_t> declared_vars) {
        std::vector<std::pair<Word, Rat>> terms;
        std::size_t max_index = 0;  // 1-based

        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        while (true) {
            terms.push_back(parse_term(sign, max_index));
            skip_ws();
            if (at_end()) break;
            if (peek() == '+') sign = 1;
            else if (peek() == '-') sign = -1;
            else throw ParseError("expected '+', '-' or end of input", pos_);
            ++pos_;
        }

        std::size_t nvars = std::max<std::size_t>(declared_vars.value_or(0), max_index);
        NcPoly p(nvars);
        for (auto& [w, c] : terms) p.add_term(std::move(w), std::move(c));
        return p;
    }

private:
    static constexpr std::uint64_t kMaxExponent = 4096;  // resource guard

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n'))
            ++pos_;
    }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && is_digit(peek())) ++pos_;
        if (pos_ == start) throw ParseError("expected digits", pos_);
        return std::string(s_.substr(start, pos_ - start));
    }

    std::uint64_t small_nat(std::uint64_t limit, const char* what) {
        const std::size_t start = pos_;
        const std::string ds = digits();
        if (ds.size() > 20) throw ParseError(std::string(what) + " out of range", start);
        std::uint64_t v = 0;
        for (char c : ds) {
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
            if (v > limit) throw ParseError(std::string(what) + " out of range", start);
        }
        return v;
    }

    std::pair<Word, Rat> parse_term(int sign, std::size_t& max_index) {
        skip_ws();
        const std::size_t term_start = pos_;
        Rat coeff(sign);
        bool has_content = false;

        if (!at_end() && is_digit(peek())) {
            const std::string num = digits();
            std::string den;
            skip_ws();
            if (!at_end() && peek() == '/') {
                const std::size_t slash = pos_;
                ++pos_;
                skip_ws();
                if (at_end() || !is_digit(peek())) throw ParseError("expected denominator", pos_);
                den = digits();
                mpz_class dz(den);
                if (dz == 0) throw ParseError("zero denominator", slash + 1);
            }
            coeff *= den.empty() ? Rat::from_string(num) : Rat::from_string(num + "/" + den);
            has_content = true;
        }

        std::vector<std::uint32_t> letters;
        while (true) {
            skip_ws();
            bool saw_star = false;
            if (!at_end() && peek() == '*') {
                saw_star = true;
                ++pos_;
                skip_ws();
            }
            if (at_end() || (peek() != 'x' && peek() != 'y')) {
                if (saw_star) throw ParseError("expected variable after '*'", pos_);
                break;
            }
            ++pos_;  // consume 'x' or 'y'
            if (at_end() || !is_digit(peek())) throw ParseError("expected variable index", pos_);
            const std::size_t idx_pos = pos_;
            const std::uint64_t index = small_nat(1u << 20, "variable index");
            if (index == 0) throw ParseError("variable index must be at least 1", idx_pos);
            std::uint64_t exponent = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                if (at_end() || !is_digit(peek())) throw ParseError("expected exponent", pos_);
                exponent = small_nat(kMaxExponent, "exponent");
            }
            max_index = std::max<std::size_t>(max_index, index);
            for (std::uint64_t e = 0; e < exponent; ++e)
                letters.push_back(static_cast<std::uint32_t>(index - 1));
            has_content = true;
        }

        if (!has_content) throw ParseError("expected term", term_start);
        return {Word(std::move(letters)), std::move(coeff)};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

inline void format_word(std::string& out, const Word& w, char letter) {
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t run = i + 1;
        while (run < ls.size() && ls[run] == ls[i]) ++run;
        if (i > 0) out += '*';
        out += letter;
        out += std::to_string(ls[i] + 1);
        if (run - i > 1) {
            out += '^';
            out += std::to_string(run - i);
        }
        i = run;
    }
}

}  // namespace detail

// Parses the grammar above; the alphabet size is the larger of
// declared_vars and the highest variable index seen. 'x' and 'y' are
// interchangeable surface names for the same indexed variables.
inline NcPoly parse_poly(std::string_view text, std::optional<std::size_t> declared_vars = {}) {
    return detail::PolyParser(text).parse(declared_vars);
}

// Canonical text form: terms in degree-then-lex order with the highest
// word first, integer or "p/q" coefficients, '*'-separated letters with '^'
// for adjacent repeats. parse_poly(format_poly(p)) == p up to the declared
// alphabet size.
inline std::string format_poly(const NcPoly& p, char letter = 'x') {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const Rat mag = c.abs();
        if (w.is_empty()) {
            out += mag.str();
        } else {
            if (mag != Rat(1)) {
                out += mag.str();
                out += '*';
            }
            detail::format_word(out, w, letter);
        }
    }
    return out;
}

}  // namespace ncalg
