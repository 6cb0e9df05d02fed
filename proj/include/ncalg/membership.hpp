#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/poly.hpp"
#include "ncalg/rational.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

namespace detail {

// Sparse incremental elimination over the word basis. Candidates offered in
// a fixed order become members iff they are independent of the span so far;
// each member contributes one pivot row keyed by its (monic) leading word,
// stored with its expansion over the members. express() then writes a
// target polynomial as an exact linear combination of the members.
class PolySpan {
public:
    explicit PolySpan(std::size_t nvars) : nvars_(nvars) {}

    std::size_t members() const { return members_; }

    // true iff q enlarges the span; q is then member number members()-1
    bool add(const NcPoly& q) {
        if (q.nvars() != nvars_) throw std::invalid_argument("PolySpan: alphabet mismatch");
        NcPoly r = q;
        std::map<std::size_t, Rat> comb{{members_, Rat(1)}};
        reduce(r, &comb);
        if (r.is_zero()) return false;
        const Rat inv = Rat(1) / r.leading_term().second;
        Row row{inv * r, {}};
        for (auto& [i, c] : comb) {
            Rat v = inv * c;
            if (!v.is_zero()) row.comb.emplace(i, std::move(v));
        }
        rows_.emplace(row.poly.leading_term().first, std::move(row));
        ++members_;
        return true;
    }

    // coefficients with q = sum c_i member_i, or nullopt if q is outside
    // the span
    std::optional<std::vector<Rat>> express(const NcPoly& q) const {
        if (q.nvars() != nvars_) throw std::invalid_argument("PolySpan: alphabet mismatch");
        NcPoly r = q;
        std::map<std::size_t, Rat> acc;
        while (!r.is_zero()) {
            const auto& [lead, lc] = r.leading_term();
            auto it = rows_.find(lead);
            if (it == rows_.end()) return std::nullopt;
            const Rat factor = lc;
            r -= factor * it->second.poly;
            for (const auto& [i, c] : it->second.comb) {
                auto [slot, inserted] = acc.try_emplace(i, factor * c);
                if (!inserted) slot->second += factor * c;
            }
        }
        std::vector<Rat> out(members_);
        for (const auto& [i, c] : acc) out[i] = c;
        return out;
    }

private:
    struct Row {
        NcPoly poly;                      // monic leading coefficient
        std::map<std::size_t, Rat> comb;  // poly = sum comb[i] * member_i
    };

    void reduce(NcPoly& r, std::map<std::size_t, Rat>* comb) const {
        while (!r.is_zero()) {
            const auto& [lead, lc] = r.leading_term();
            auto it = rows_.find(lead);
            if (it == rows_.end()) return;
            const Rat factor = lc;
            r -= factor * it->second.poly;
            if (comb)
                for (const auto& [i, c] : it->second.comb) {
                    auto [slot, inserted] = comb->try_emplace(i, -(factor * c));
                    if (!inserted) slot->second -= factor * c;
                }
        }
    }

    std::size_t nvars_;
    std::size_t members_ = 0;
    std::map<Word, Row> rows_;
};

}  // namespace detail

enum class MembershipRoute { fock, direct, single, semidecide };

inline const char* route_name(MembershipRoute r) {
    switch (r) {
        case MembershipRoute::fock: return "fock";
        case MembershipRoute::direct: return "direct";
        case MembershipRoute::single: return "single";
        case MembershipRoute::semidecide: return "semidecide";
    }
    return "?";
}

// A certificate h with g = h(f_1, ..., f_l) exactly; every decider verifies
// this identity before returning.
struct MembershipCertificate {
    NcPoly h;  // over l fresh variables y_1, ..., y_l
    MembershipRoute route;
    std::optional<std::size_t> m;  // truncation order, fock route only
};

struct MembershipVerdict {
    enum class Kind { member, non_member, unknown };

    Kind kind = Kind::unknown;
    std::optional<MembershipCertificate> certificate;
    std::optional<std::size_t> cap;  // set on unknown verdicts

    bool is_member() const { return kind == Kind::member; }
    bool is_non_member() const { return kind == Kind::non_member; }
    bool is_unknown() const { return kind == Kind::unknown; }

    static MembershipVerdict member(MembershipCertificate cert) {
        return {Kind::member, std::move(cert), std::nullopt};
    }
    static MembershipVerdict non_member() { return {Kind::non_member, std::nullopt, std::nullopt}; }
    static MembershipVerdict unknown(std::size_t cap) { return {Kind::unknown, std::nullopt, cap}; }
};

inline bool verify_certificate(const NcPoly& g, std::span<const NcPoly> f, const NcPoly& h) {
    return substitute(h, f) == g;
}

inline bool verify_certificate(const NcPoly& g, const std::vector<NcPoly>& f, const NcPoly& h) {
    return verify_certificate(g, std::span<const NcPoly>(f), h);
}

// Zeroes every word u of h whose substituted degree (sum of fdegs over the
// letters of u) exceeds m. For homogeneous generators the discarded words'
// images cancel among themselves, so the filtered certificate reproduces g
// exactly, with deg h(f) <= m.
inline NcPoly degree_filter(const NcPoly& h, std::span<const std::size_t> fdegs, std::size_t m) {
    if (h.nvars() != fdegs.size()) throw std::invalid_argument("degree_filter: arity mismatch");
    NcPoly out(h.nvars());
    for (const auto& [w, c] : h.terms()) {
        std::size_t sdeg = 0;
        for (std::uint32_t letter : w.letters()) sdeg += fdegs[letter];
        if (sdeg <= m) out.add_term(w, c);
    }
    return out;
}

inline NcPoly degree_filter(const NcPoly& h, const std::vector<std::size_t>& fdegs, std::size_t m) {
    return degree_filter(h, std::span<const std::size_t>(fdegs), m);
}

namespace detail {

struct HomogeneousSetup {
    std::size_t d = 0;                // ambient alphabet
    std::vector<std::size_t> active;  // generator indices kept for enumeration
    std::vector<std::size_t> fdegs;   // their homogeneous degrees, all >= 1
};

// Shared validation for the homogeneous deciders. Zero and degree-0
// generators contribute nothing beyond the constants already present in the
// unital algebra, and keeping them would make bounded-degree word
// enumeration infinite, so they are dropped here.
inline HomogeneousSetup homogeneous_setup(const NcPoly& g, std::span<const NcPoly> f) {
    HomogeneousSetup s;
    s.d = g.nvars();
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (f[j].nvars() != s.d)
            throw std::invalid_argument("membership: generators and g must share one alphabet");
        const Homogeneity hom = f[j].homogeneity();
        if (hom.kind == Homogeneity::Kind::inhomogeneous)
            throw std::invalid_argument("membership: generator " + std::to_string(j + 1) +
                                        " is not homogeneous (use semidecide_membership)");
        if (hom.kind == Homogeneity::Kind::homogeneous && hom.degree >= 1) {
            s.active.push_back(j);
            s.fdegs.push_back(hom.degree);
        }
    }
    return s;
}

// Rewrites a certificate over the active alphabet back to the full list of
// l generators.
inline NcPoly widen_certificate(const NcPoly& h_active, const std::vector<std::size_t>& active,
                                std::size_t l) {
    NcPoly h(l);
    for (const auto& [w, c] : h_active.terms()) {
        std::vector<std::uint32_t> letters;
        letters.reserve(w.degree());
        for (std::uint32_t a : w.letters()) letters.push_back(static_cast<std::uint32_t>(active[a]));
        h.add_term(Word(std::move(letters)), c);
    }
    return h;
}

inline MembershipCertificate checked_certificate(const NcPoly& g, std::span<const NcPoly> f,
                                                 NcPoly h, MembershipRoute route,
                                                 std::optional<std::size_t> m) {
    if (!verify_certificate(g, f, h))
        throw std::logic_error("membership: produced certificate failed verification");
    return {std::move(h), route, m};
}

// Constant-only algebra: every generator was dropped.
inline MembershipVerdict decide_constants_only(const NcPoly& g, std::span<const NcPoly> f,
                                               MembershipRoute route) {
    if (g.degree().value_or(0) == 0) {
        NcPoly h = NcPoly::constant(f.size(), g.coeff(Word()));
        return MembershipVerdict::member(checked_certificate(g, f, std::move(h), route, std::nullopt));
    }
    return MembershipVerdict::non_member();
}

}  // namespace detail

// Complete decider for homogeneous generators, Fock-space route: builds the
// Krylov closure of the vacuum vector 1 under (f_1(L), ..., f_l(L)) in F_m
// with m = deg g, then solves g(L)1 over the closure basis. The operators
// act symbolically (multiply and truncate), and each kept basis element
// carries the word u with u(F(L))1 equal to it, so a solution lifts to a
// certificate mod I_m; the degree filter turns that into exact equality.
// Unsolvable means non-membership: any member would be expressible at this
// truncation order.
inline MembershipVerdict decide_homogeneous_fock(const NcPoly& g, std::span<const NcPoly> f) {
    const detail::HomogeneousSetup s = detail::homogeneous_setup(g, f);
    if (s.active.empty()) return detail::decide_constants_only(g, f, MembershipRoute::fock);

    const std::size_t m = g.degree().value_or(0);

    struct Node {
        Word label;    // over the active alphabet
        NcPoly value;  // label(F(L)) 1, truncated to degree <= m
    };
    detail::PolySpan span(s.d);
    std::vector<Node> members{{Word(), NcPoly::constant(s.d, Rat(1))}};
    span.add(members.front().value);

    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::uint32_t a = 0; a < s.active.size(); ++a) {
            for (std::size_t parent : frontier) {
                NcPoly w = (f[s.active[a]] * members[parent].value).truncate(m);
                if (!span.add(w)) continue;
                next.push_back(members.size());
                members.push_back({members[parent].label.prepend(a), std::move(w)});
            }
        }
        frontier = std::move(next);
    }

    const auto coeffs = span.express(g.truncate(m));
    if (!coeffs) return MembershipVerdict::non_member();

    NcPoly h_active(s.active.size());
    for (std::size_t i = 0; i < members.size(); ++i) h_active.add_term(members[i].label, (*coeffs)[i]);
    h_active = degree_filter(h_active, s.fdegs, m);
    NcPoly h = detail::widen_certificate(h_active, s.active, f.size());
    return MembershipVerdict::member(
        detail::checked_certificate(g, f, std::move(h), MembershipRoute::fock, m));
}

// Complete decider for homogeneous generators, direct route; also the
// independent oracle the Fock route is cross-checked against. Enumerates
// the words u over the active generators with substituted degree at most
// deg g and solves g = sum c_u u(f) in coefficient space. Each u(f) is
// homogeneous of degree exactly the substituted degree, so only words whose
// substituted degree occurs in g's support can contribute.
inline MembershipVerdict decide_homogeneous_direct(const NcPoly& g, std::span<const NcPoly> f) {
    const detail::HomogeneousSetup s = detail::homogeneous_setup(g, f);
    if (s.active.empty()) return detail::decide_constants_only(g, f, MembershipRoute::direct);

    const std::size_t dmax = g.degree().value_or(0);
    std::set<std::size_t> wanted;
    for (const auto& [w, c] : g.terms()) wanted.insert(w.degree());

    struct Node {
        Word word;     // over the active alphabet
        NcPoly value;  // word(f), untruncated
        std::size_t sdeg;
    };

    detail::PolySpan span(s.d);
    std::vector<Word> member_words;
    auto consider = [&](const Node& node) {
        if (wanted.contains(node.sdeg) && span.add(node.value)) member_words.push_back(node.word);
    };

    std::vector<Node> level{{Word(), NcPoly::constant(s.d, Rat(1)), 0}};
    consider(level.front());
    while (!level.empty()) {
        std::vector<Node> next;
        for (const Node& parent : level) {
            for (std::uint32_t a = 0; a < s.active.size(); ++a) {
                const std::size_t sdeg = parent.sdeg + s.fdegs[a];
                if (sdeg > dmax) continue;
                Node child{parent.word.append(a), parent.value * f[s.active[a]], sdeg};
                consider(child);
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }

    const auto coeffs = span.express(g);
    if (!coeffs) return MembershipVerdict::non_member();

    NcPoly h_active(s.active.size());
    for (std::size_t i = 0; i < member_words.size(); ++i) h_active.add_term(member_words[i], (*coeffs)[i]);
    NcPoly h = detail::widen_certificate(h_active, s.active, f.size());
    return MembershipVerdict::member(
        detail::checked_certificate(g, f, std::move(h), MembershipRoute::direct, std::nullopt));
}

// Complete decider for a single generator (not necessarily homogeneous).
// The free algebra has no zero divisors, so deg(sum_{k<=N} c_k f^k) =
// N deg f whenever c_N != 0; the power bound floor(deg g / deg f) therefore
// covers every possible h.
inline MembershipVerdict decide_single_generator(const NcPoly& g, const NcPoly& f) {
    if (f.nvars() != g.nvars())
        throw std::invalid_argument("membership: generator and g must share one alphabet");
    const std::size_t df = f.degree().value_or(0);
    if (df == 0) {
        const std::vector<NcPoly> fs{f};
        return detail::decide_constants_only(g, fs, MembershipRoute::single);
    }

    const std::size_t kmax = g.degree().value_or(0) / df;
    detail::PolySpan span(g.nvars());
    std::vector<std::size_t> member_powers;
    NcPoly power = NcPoly::constant(g.nvars(), Rat(1));
    for (std::size_t k = 0; k <= kmax; ++k) {
        if (span.add(power)) member_powers.push_back(k);
        if (k < kmax) power = power * f;
    }
    const auto coeffs = span.express(g);
    if (!coeffs) return MembershipVerdict::non_member();

    NcPoly h(1);
    for (std::size_t i = 0; i < member_powers.size(); ++i)
        h.add_term(Word(std::vector<std::uint32_t>(member_powers[i], 0)), (*coeffs)[i]);
    const std::vector<NcPoly> fs{f};
    return MembershipVerdict::member(
        detail::checked_certificate(g, fs, std::move(h), MembershipRoute::single, std::nullopt));
}

// Semidecision procedure for arbitrary generators: for n = 1..cap, solve
// g = sum_{deg(u) <= n} c_u u(f) and stop at the first solvable stage.
// Exhausting the cap yields Unknown(cap), never NonMember — the general
// membership problem is undecidable and this procedure is only guaranteed
// to terminate on members.
inline MembershipVerdict semidecide_membership(const NcPoly& g, std::span<const NcPoly> f,
                                               std::size_t cap) {
    const std::size_t d = g.nvars();
    const std::size_t l = f.size();
    for (const NcPoly& fj : f)
        if (fj.nvars() != d)
            throw std::invalid_argument("membership: generators and g must share one alphabet");

    struct Node {
        Word word;
        NcPoly value;  // word(f)
    };

    detail::PolySpan span(d);
    std::vector<Word> member_words;
    std::vector<Node> level{{Word(), NcPoly::constant(d, Rat(1))}};
    if (span.add(level.front().value)) member_words.push_back(level.front().word);

    for (std::size_t n = 1; n <= cap; ++n) {
        std::vector<Node> next;
        for (const Node& parent : level) {
            for (std::uint32_t j = 0; j < l; ++j) {
                Node child{parent.word.append(j), parent.value * f[j]};
                if (span.add(child.value)) member_words.push_back(child.word);
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);

        const auto coeffs = span.express(g);
        if (!coeffs) continue;
        NcPoly h(l);
        for (std::size_t i = 0; i < member_words.size(); ++i) h.add_term(member_words[i], (*coeffs)[i]);
        return MembershipVerdict::member(
            detail::checked_certificate(g, f, std::move(h), MembershipRoute::semidecide, std::nullopt));
    }
    return MembershipVerdict::unknown(cap);
}

inline MembershipVerdict decide_homogeneous_fock(const NcPoly& g, const std::vector<NcPoly>& f) {
    return decide_homogeneous_fock(g, std::span<const NcPoly>(f));
}
inline MembershipVerdict decide_homogeneous_direct(const NcPoly& g, const std::vector<NcPoly>& f) {
    return decide_homogeneous_direct(g, std::span<const NcPoly>(f));
}
inline MembershipVerdict semidecide_membership(const NcPoly& g, const std::vector<NcPoly>& f,
                                               std::size_t cap) {
    return semidecide_membership(g, std::span<const NcPoly>(f), cap);
}

}  // namespace ncalg
