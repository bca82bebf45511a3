#include <doctest.h>

#include <random>

#include "curvecodes/gf_matrix.hpp"
#include "curvecodes/reference.hpp"
#include "test_fixtures.hpp"

using namespace curvecodes;
using testing::Q8;

namespace {

// random product of known maximal rank over GF(2^12)
GfBitMatrix random_product(const Field& F, size_t k, size_t n, size_t r, uint64_t seed,
                           std::vector<std::vector<uint32_t>>* dense_out = nullptr) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint32_t> d(0, F.size() - 1);
    std::vector<std::vector<uint32_t>> B(k, std::vector<uint32_t>(r));
    std::vector<std::vector<uint32_t>> C(r, std::vector<uint32_t>(n));
    for (auto& row : B)
        for (auto& v : row) v = d(rng);
    for (auto& row : C)
        for (auto& v : row) v = d(rng);
    GfBitMatrix M(k, n, F.degree());
    if (dense_out) dense_out->assign(k, std::vector<uint32_t>(n, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) {
            Fe acc{0};
            for (size_t l = 0; l < r; ++l) acc = F.add(acc, F.mul(Fe{B[i][l]}, Fe{C[l][j]}));
            if (acc.code) M.set(i, j, acc.code);
            if (dense_out) (*dense_out)[i][j] = acc.code;
        }
    return M;
}

} // namespace

TEST_CASE("set/get round trip") {
    const Field& F = Field::gf4096();
    GfBitMatrix M(3, 130, F.degree());
    std::mt19937 rng(3);
    std::uniform_int_distribution<uint32_t> d(0, 4095);
    std::vector<std::vector<uint32_t>> mirror(3, std::vector<uint32_t>(130, 0));
    for (int it = 0; it < 500; ++it) {
        size_t r = static_cast<size_t>(d(rng)) % 3, c = static_cast<size_t>(d(rng)) % 130;
        uint32_t v = d(rng);
        M.set(r, c, v);
        mirror[r][c] = v;
    }
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 130; ++c) CHECK(M.get(r, c) == mirror[r][c]);
}

TEST_CASE("bit-sliced rank agrees with the dense reference on random products") {
    const Field& F = Field::gf4096();
    for (auto [k, n, r, seed] : std::vector<std::tuple<size_t, size_t, size_t, uint64_t>>{
             {10, 30, 5, 1}, {20, 50, 20, 2}, {40, 60, 33, 3}, {64, 64, 64, 4}, {70, 200, 51, 5}}) {
        std::vector<std::vector<uint32_t>> dense;
        GfBitMatrix M = random_product(F, k, n, r, seed, &dense);
        const size_t want = reference::rank_dense(F, dense);
        CHECK(want <= r);
        CHECK(M.rank_destructive(F) == want);
    }
}

TEST_CASE("rank is invariant under the thread count") {
    const Field& F = Field::gf4096();
    for (uint64_t seed : {7u, 8u}) {
        GfBitMatrix a = random_product(F, 90, 300, 77, seed);
        GfBitMatrix b = a.clone();
        CHECK(a.rank_destructive(F, 1) == b.rank_destructive(F, 0));
    }
}

TEST_CASE("evaluation matrix of {1,x,y,z,t,w} has rank 6") {
    const auto& q8 = Q8::get();
    const auto b = basis(q8.codes.semigroup(), q8.codes.solver(), 65, 196);
    REQUIRE(b.dimension() == 6);
    GfBitMatrix M = evaluation_matrix(q8.F, q8.pts, b);
    // entries match the coordinates themselves
    CHECK(M.get(0, 0) == 1);
    for (size_t j = 0; j < q8.pts.size(); j += 1717) {
        CHECK(M.get(1, j) == q8.pts[j].x.code);
        CHECK(M.get(2, j) == q8.pts[j].y.code);
        CHECK(M.get(3, j) == q8.pts[j].z.code);
        CHECK(M.get(4, j) == q8.pts[j].t.code);
        CHECK(M.get(5, j) == q8.pts[j].w.code);
    }
    CHECK(M.rank_destructive(q8.F) == 6);
}

TEST_CASE("evaluation matrix respects a column subset") {
    const auto& q8 = Q8::get();
    const auto b = basis(q8.codes.semigroup(), q8.codes.solver(), 130, 196);
    std::vector<uint32_t> cols{0, 5, 100, 20000, 29183};
    GfBitMatrix M = evaluation_matrix(q8.F, q8.pts, b, cols);
    CHECK(M.cols() == cols.size());
    for (size_t r = 0; r < b.dimension(); ++r)
        for (size_t j = 0; j < cols.size(); ++j)
            CHECK(M.get(r, j) == evaluate(q8.F, b.monomials[r], q8.pts[cols[j]]).code);
}

TEST_CASE("nested bases give nested row spaces") {
    const auto& q8 = Q8::get();
    // small column sample keeps the dense path cheap
    std::vector<uint32_t> cols;
    for (uint32_t j = 0; j < 600; ++j) cols.push_back(j * 48);
    const auto b1 = basis(q8.codes.semigroup(), q8.codes.solver(), 300, 196);
    const auto b2 = basis(q8.codes.semigroup(), q8.codes.solver(), 450, 196);
    GfBitMatrix M1 = evaluation_matrix(q8.F, q8.pts, b1, cols);
    GfBitMatrix M2 = evaluation_matrix(q8.F, q8.pts, b2, cols);
    const size_t r2 = M2.clone().rank_destructive(q8.F);
    CHECK(GfBitMatrix::stacked_rank(M1, M2, q8.F) == r2);
}
