#include <catch2/catch_amalgamated.hpp>

#include "ncalg/membership.hpp"
#include "ncalg/parse.hpp"
#include "ncalg/witness.hpp"
#include "testutil.hpp"

using namespace ncalg;

namespace {

NcPoly P(const std::string& text, std::size_t nvars) { return parse_poly(text, nvars); }

MatTuple jordan_tuple() {
    RatMatrix x(2, 2);
    x(0, 1) = Rat(1);
    return MatTuple(2, {x});
}

RatMatrix e2col() {
    RatMatrix v(2, 1);
    v(1, 0) = Rat(1);
    return v;
}

}  // namespace

TEST_CASE("verify_witness examples") {
    const NcPoly g = P("x1", 1);
    const std::vector<NcPoly> f{P("x1^2", 1)};

    // f1(X) = 0 fixes everything, g(X) e2 = e1 leaves the span
    CHECK(verify_witness(g, f, jordan_tuple(), e2col()));

    SECTION("condition 3 fails when g equals a generator") {
        const std::vector<NcPoly> f_self{P("x1", 1)};
        RatMatrix e1(2, 1);
        e1(0, 0) = Rat(1);
        CHECK_FALSE(verify_witness(g, f_self, jordan_tuple(), e1));
    }

    SECTION("condition 1 fails on rank-deficient V") {
        RatMatrix dup(2, 2);
        dup(1, 0) = Rat(1);
        dup(1, 1) = Rat(1);
        CHECK_FALSE(verify_witness(g, f, jordan_tuple(), dup));
    }

    SECTION("malformed shapes are rejected") {
        CHECK_THROWS_AS(verify_witness(g, f, jordan_tuple(), RatMatrix(2, 0)),
                        std::invalid_argument);
        CHECK_THROWS_AS(verify_witness(g, f, jordan_tuple(), RatMatrix(3, 1)),
                        std::invalid_argument);
    }
}

TEST_CASE("random search finds the Jordan-block witness family") {
    const NcPoly g = P("x1", 1);
    const std::vector<NcPoly> f{P("x1^2", 1)};
    SearchConfig cfg;
    cfg.max_n = 2;
    cfg.seed = 5;
    cfg.strategies = {SearchStrategy::random, SearchStrategy::krylov_subspaces};
    const auto w = search_witness_random(g, f, cfg);
    REQUIRE(w.has_value());
    CHECK(w->checked);
    CHECK(verify_witness(g, f, w->X, w->V));
}

TEST_CASE("no witness exists when g is a generator") {
    const NcPoly g = P("x1", 1);
    const std::vector<NcPoly> f{P("x1", 1)};
    SearchConfig cfg;
    cfg.max_n = 3;
    cfg.max_trials_per_size = 10;
    CHECK_FALSE(search_witness(g, f, cfg).has_value());
}

TEST_CASE("size-1 matrices never witness anything") {
    const NcPoly g = P("x1", 1);
    const std::vector<NcPoly> f{P("x1^2", 1)};
    SearchConfig cfg;
    cfg.max_n = 1;
    cfg.strategies = {SearchStrategy::random, SearchStrategy::krylov_subspaces};
    CHECK_FALSE(search_witness_random(g, f, cfg).has_value());
}

TEST_CASE("structured search walks the creation compressions") {
    const NcPoly g = P("x1", 1);
    const std::vector<NcPoly> f{P("x1^2", 1)};
    SearchConfig cfg;
    cfg.max_n = 3;
    const auto w = search_witness_structured(g, f, cfg);
    REQUIRE(w.has_value());
    CHECK(w->checked);
    // the order-1 compression already carries one: f(X) = 0 fixes the vacuum
    // line while g(X) moves it
    CHECK(w->n == 2);
    CHECK(w->r == 1);

    SECTION("constant g fixes every subspace") {
        CHECK_FALSE(search_witness_structured(P("3", 1), f, cfg).has_value());
    }

    SECTION("variables as generators leave nothing invariant to exploit") {
        const std::vector<NcPoly> vars{P("x1", 2), P("x2", 2)};
        CHECK_FALSE(search_witness_structured(P("x1x2", 2), vars, cfg).has_value());
    }
}

TEST_CASE("searches are deterministic in the seed") {
    const NcPoly g = P("x1x2", 2);
    const std::vector<NcPoly> f{P("x1^2", 2), P("x2", 2)};
    SearchConfig cfg;
    cfg.max_n = 3;
    cfg.max_trials_per_size = 15;
    cfg.seed = 17;
    const auto a = search_witness(g, f, cfg);
    const auto b = search_witness(g, f, cfg);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
        CHECK(a->n == b->n);
        CHECK(a->r == b->r);
        CHECK(a->V == b->V);
        for (std::size_t k = 0; k < a->X.arity(); ++k) CHECK(a->X.mats[k] == b->X.mats[k]);
    }
}

TEST_CASE("every found witness is sound against the semidecider") {
    nctest::Rng rng(51);
    for (int iter = 0; iter < 12; ++iter) {
        const std::size_t d = rng.between(1, 2);
        const std::size_t l = rng.between(1, 2);
        std::vector<NcPoly> f;
        for (std::size_t j = 0; j < l; ++j) f.push_back(nctest::random_nonzero_poly(rng, d, 2, 2));
        const NcPoly g = nctest::random_nonzero_poly(rng, d, 2, 2);

        SearchConfig cfg;
        cfg.max_n = 2;
        cfg.max_trials_per_size = 8;
        cfg.seed = rng.raw();
        const auto w = search_witness(g, f, cfg);
        if (!w) continue;
        CHECK(verify_witness(g, f, w->X, w->V));
        CHECK_FALSE(semidecide_membership(g, f, 4).is_member());
    }
}

TEST_CASE("joint invariant subspaces are invariant for members") {
    // direction (ii) => (i) of the main theorem at desk scale
    nctest::Rng rng(52);
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t d = rng.between(1, 2);
        const std::size_t l = rng.between(1, 3);
        std::vector<NcPoly> f;
        for (std::size_t j = 0; j < l; ++j) f.push_back(nctest::random_poly(rng, d, 2, 3));
        NcPoly h(l);
        for (std::size_t t = rng.between(1, 3); t > 0; --t)
            h.add_term(nctest::random_word(rng, l, rng.below(3)), nctest::random_coeff(rng));
        const NcPoly g = substitute(h, f);

        const std::size_t n = rng.between(1, 4);
        const MatTuple x = nctest::random_tuple(rng, d, n);
        std::vector<RatMatrix> evals;
        for (const NcPoly& fj : f) evals.push_back(evaluate_at_matrices(fj, x));
        const KrylovClosure closure = krylov_closure(evals, nctest::random_vector(rng, n));
        if (closure.rank() == 0) continue;
        CHECK(is_invariant_subspace(evaluate_at_matrices(g, x), closure.basis));
    }
}
