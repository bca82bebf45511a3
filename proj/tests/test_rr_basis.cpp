#include <doctest.h>

#include <random>

#include "curvecodes/reference.hpp"
#include "curvecodes/rr_basis.hpp"
#include "test_fixtures.hpp"

using namespace curvecodes;
using testing::Q8;

namespace {
const std::array<uint64_t, 5> kPoles{40, 50, 60, 64, 65};
}

TEST_CASE("canonical monomials for small pole orders") {
    MonomialSolver solver(kPoles, 2000);
    CHECK(solver.monomial_for(0).e == std::array<uint32_t, 5>{0, 0, 0, 0, 0});
    CHECK(solver.monomial_for(40).e == std::array<uint32_t, 5>{1, 0, 0, 0, 0});
    CHECK(solver.monomial_for(65).e == std::array<uint32_t, 5>{0, 0, 0, 0, 1});
    CHECK(solver.monomial_for(392).e == std::array<uint32_t, 5>{0, 4, 0, 3, 0});
    CHECK_THROWS_AS(solver.monomial_for(39), DomainError);  // a gap
}

TEST_CASE("greedy solver equals the exhaustive lex-min search") {
    MonomialSolver solver(kPoles, 1500);
    for (uint64_t s = 0; s <= 1500; ++s) {
        if (!solver.representable(s)) continue;
        CHECK(solver.monomial_for(s).e == reference::monomial_for_brute(kPoles, s).e);
    }
}

TEST_CASE("pole order is additive under multiplication") {
    MonomialSolver solver(kPoles, 3000);
    std::mt19937 rng(5);
    std::uniform_int_distribution<uint64_t> d(0, 1400);
    for (int i = 0; i < 200; ++i) {
        uint64_t s1 = d(rng), s2 = d(rng);
        if (!solver.representable(s1) || !solver.representable(s2)) continue;
        Monomial m1 = solver.monomial_for(s1), m2 = solver.monomial_for(s2);
        Monomial prod;
        for (int j = 0; j < 5; ++j) prod.e[static_cast<size_t>(j)] =
            m1.e[static_cast<size_t>(j)] + m2.e[static_cast<size_t>(j)];
        CHECK(prod.pole_order(kPoles) == s1 + s2);
    }
}

TEST_CASE("basis sizes follow the semigroup and Riemann-Roch") {
    const auto& q8 = Q8::get();
    const auto& S = q8.codes.semigroup();
    const auto& solver = q8.codes.solver();

    CHECK(basis(S, solver, 392, 196).dimension() == 197);
    CHECK(basis(S, solver, 65, 196).dimension() == 6);
    CHECK(basis(S, solver, 39, 196).dimension() == 1);  // constants only
    for (uint64_t rho : {400u, 1000u, 5000u}) CHECK(basis(S, solver, rho, 196).dimension() == rho - 195);
}

TEST_CASE("bases are nested") {
    const auto& q8 = Q8::get();
    const auto b1 = basis(q8.codes.semigroup(), q8.codes.solver(), 300, 196);
    const auto b2 = basis(q8.codes.semigroup(), q8.codes.solver(), 500, 196);
    REQUIRE(b1.dimension() <= b2.dimension());
    for (size_t i = 0; i < b1.dimension(); ++i) CHECK(b1.monomials[i] == b2.monomials[i]);
}

TEST_CASE("a wrong genus certificate refuses large bases only") {
    const auto& q8 = Q8::get();
    const auto& S = q8.codes.semigroup();
    const auto& solver = q8.codes.solver();
    CHECK_THROWS_AS(basis(S, solver, 392, 195), Error);
    CHECK_NOTHROW(basis(S, solver, 100, 195));  // below 2g-1 no certificate is needed
}

TEST_CASE("log-table evaluation equals repeated multiplication") {
    const auto& q8 = Q8::get();
    MonomialSolver solver(kPoles, 3000);
    std::mt19937 rng(11);
    std::uniform_int_distribution<uint64_t> ds(0, 2900);
    std::uniform_int_distribution<size_t> dp(0, q8.pts.size() - 1);
    int done = 0;
    while (done < 300) {
        const uint64_t s = ds(rng);
        if (!solver.representable(s)) continue;
        const Monomial m = solver.monomial_for(s);
        const CurvePoint& P = q8.pts[dp(rng)];
        CHECK(evaluate(q8.F, m, P) == reference::evaluate_naive(q8.F, m, P));
        ++done;
    }
    // the double-evaluation anchor: the canonical monomial of pole order 392
    // at the first point in canonical order
    const Monomial m392 = solver.monomial_for(392);
    CHECK(evaluate(q8.F, m392, q8.pts[0]) == reference::evaluate_naive(q8.F, m392, q8.pts[0]));
    CHECK(evaluate(q8.F, m392, q8.pts[0]) == Fe{0});  // the origin zeroes y^4 t^3
}
