#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncalg/fock.hpp"
#include "ncalg/invariant.hpp"
#include "ncalg/linalg.hpp"
#include "ncalg/poly.hpp"

namespace ncalg {

// A non-membership witness: col(V) is jointly invariant for every f_j(X)
// but not for g(X). Its existence proves g lies outside the unital algebra
// generated by f_1, ..., f_l.
struct Witness {
    std::size_t n = 0;
    std::size_t r = 0;
    MatTuple X;
    RatMatrix V;  // n x r, full column rank
    bool checked = false;
};

enum class SearchStrategy { random, fock_compression, krylov_subspaces };

struct SearchConfig {
    std::size_t max_n = 4;
    std::size_t max_trials_per_size = 40;
    std::uint64_t seed = 0;
    // zero twice: biased toward sparse, nilpotent-like candidates
    std::vector<Rat> entry_pool{Rat(-1), Rat(0), Rat(0), Rat(1)};
    std::set<SearchStrategy> strategies{SearchStrategy::random, SearchStrategy::fock_compression,
                                        SearchStrategy::krylov_subspaces};

    bool has(SearchStrategy s) const { return strategies.contains(s); }
};

// Exact check of the three witness conditions: rank(V) = r, col(V) jointly
// invariant under every f_j(X), col(V) not invariant under g(X).
inline bool verify_witness(const NcPoly& g, std::span<const NcPoly> f, const MatTuple& x,
                           const RatMatrix& v) {
    if (g.nvars() != x.arity()) throw std::invalid_argument("verify_witness: arity mismatch");
    if (v.rows() != x.n || v.cols() == 0 || v.cols() > x.n)
        throw std::invalid_argument("verify_witness: V must be n x r with 1 <= r <= n");
    if (rank(v) != v.cols()) return false;
    for (const NcPoly& fj : f)
        if (!is_invariant_subspace(evaluate_at_matrices(fj, x), v)) return false;
    return !is_invariant_subspace(evaluate_at_matrices(g, x), v);
}

inline bool verify_witness(const NcPoly& g, const std::vector<NcPoly>& f, const MatTuple& x,
                           const RatMatrix& v) {
    return verify_witness(g, std::span<const NcPoly>(f), x, v);
}

namespace detail {

// Candidate subspaces are Krylov closures of the evaluated generator tuple,
// so full column rank and joint invariance hold by construction and only
// the third condition needs testing. Proper subspaces only: the zero and
// full spaces are invariant under everything.
inline std::optional<Witness> try_start_vector(const NcPoly& g, std::span<const NcPoly> f,
                                               const MatTuple& x,
                                               const std::vector<RatMatrix>& evals,
                                               const RatMatrix& g_eval,
                                               const std::vector<Rat>& start) {
    const KrylovClosure closure = krylov_closure(evals, start);
    const std::size_t r = closure.rank();
    if (r == 0 || r == x.n) return std::nullopt;
    if (is_invariant_subspace(g_eval, closure.basis)) return std::nullopt;
    Witness w{x.n, r, x, closure.basis, false};
    w.checked = verify_witness(g, f, w.X, w.V);
    if (!w.checked) throw std::logic_error("witness search: candidate failed re-verification");
    return w;
}

}  // namespace detail

// Seeded random search: for each size n, draw matrix tuples with entries
// from the pool and test Krylov-closure subspaces of standard basis vectors
// (strategy krylov-subspaces) and of random vectors (strategy random).
// Deterministic for a fixed config; returns the first verified witness.
inline std::optional<Witness> search_witness_random(const NcPoly& g, std::span<const NcPoly> f,
                                                    const SearchConfig& cfg) {
    if (cfg.max_n < 1 || cfg.entry_pool.empty())
        throw std::invalid_argument("search_witness_random: invalid config");
    const std::size_t d = g.nvars();
    std::mt19937_64 rng(cfg.seed);
    // rng() % k is stable across platforms, unlike the distribution classes
    auto draw = [&]() { return cfg.entry_pool[rng() % cfg.entry_pool.size()]; };

    const bool basis_starts = cfg.has(SearchStrategy::krylov_subspaces);
    // fall back to random starts when only fock-compression is selected so a
    // direct call is never a no-op
    const bool random_starts = cfg.has(SearchStrategy::random) || !basis_starts;

    for (std::size_t n = 1; n <= cfg.max_n; ++n) {
        for (std::size_t trial = 0; trial < cfg.max_trials_per_size; ++trial) {
            std::vector<RatMatrix> mats(d, RatMatrix(n, n));
            for (RatMatrix& m : mats)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) m(i, j) = draw();
            const MatTuple x(n, std::move(mats));

            std::vector<RatMatrix> evals;
            evals.reserve(f.size());
            for (const NcPoly& fj : f) evals.push_back(evaluate_at_matrices(fj, x));
            const RatMatrix g_eval = evaluate_at_matrices(g, x);

            std::vector<std::vector<Rat>> starts;
            if (basis_starts)
                for (std::size_t i = 0; i < n; ++i) {
                    std::vector<Rat> e(n);
                    e[i] = Rat(1);
                    starts.push_back(std::move(e));
                }
            if (random_starts)
                for (int k = 0; k < 2; ++k) {
                    std::vector<Rat> v(n);
                    for (Rat& c : v) c = draw();
                    starts.push_back(std::move(v));
                }

            for (const auto& start : starts)
                if (auto w = detail::try_start_vector(g, f, x, evals, g_eval, start)) return w;
        }
    }
    return std::nullopt;
}

// Structured search over truncated-Fock compressions: the evaluation points
// are the creation-operator tuples of F_m for m = 1, 2, ..., and the
// candidate subspaces are Krylov closures of the basis vectors. These
// nilpotent tuples separate graded behavior well and need no randomness.
inline std::optional<Witness> search_witness_structured(const NcPoly& g, std::span<const NcPoly> f,
                                                        const SearchConfig& cfg) {
    if (cfg.max_n < 1) throw std::invalid_argument("search_witness_structured: invalid config");
    const std::size_t d = g.nvars();
    if (d == 0) return std::nullopt;  // scalar tuples fix every subspace

    constexpr std::size_t dim_limit = 4096;
    for (std::size_t m = 1; m <= cfg.max_n; ++m) {
        const FockSpace space(d, m);
        if (space.dim() > dim_limit) break;
        const MatTuple x = space.creation_tuple();

        std::vector<RatMatrix> evals;
        evals.reserve(f.size());
        for (const NcPoly& fj : f) evals.push_back(evaluate_at_matrices(fj, x));
        const RatMatrix g_eval = evaluate_at_matrices(g, x);

        for (std::size_t i = 0; i < space.dim(); ++i)
            if (auto w = detail::try_start_vector(g, f, x, evals, g_eval, space.unit_vector(i)))
                return w;
    }
    return std::nullopt;
}

// Strategy dispatcher: structured candidates first (they are cheap and
// deterministic), then the random sweep.
inline std::optional<Witness> search_witness(const NcPoly& g, std::span<const NcPoly> f,
                                             const SearchConfig& cfg) {
    if (cfg.has(SearchStrategy::fock_compression))
        if (auto w = search_witness_structured(g, f, cfg)) return w;
    if (cfg.has(SearchStrategy::random) || cfg.has(SearchStrategy::krylov_subspaces))
        if (auto w = search_witness_random(g, f, cfg)) return w;
    return std::nullopt;
}

inline std::optional<Witness> search_witness_random(const NcPoly& g, const std::vector<NcPoly>& f,
                                                    const SearchConfig& cfg) {
    return search_witness_random(g, std::span<const NcPoly>(f), cfg);
}
inline std::optional<Witness> search_witness_structured(const NcPoly& g, const std::vector<NcPoly>& f,
                                                        const SearchConfig& cfg) {
    return search_witness_structured(g, std::span<const NcPoly>(f), cfg);
}
inline std::optional<Witness> search_witness(const NcPoly& g, const std::vector<NcPoly>& f,
                                             const SearchConfig& cfg) {
    return search_witness(g, std::span<const NcPoly>(f), cfg);
}

}  // namespace ncalg
