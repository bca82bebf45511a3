#include <doctest.h>

#include <algorithm>

#include "curvecodes/point_enum.hpp"
#include "curvecodes/reference.hpp"
#include "test_fixtures.hpp"

using namespace curvecodes;
using testing::Q8;

TEST_CASE("point counts, t = 0 fiber, maximality") {
    const auto& q8 = Q8::get();
    CHECK(q8.pts.size() == 29184);
    CHECK(q8.pts.t_zero_count() == 64);
    // maximality over F_{q^4}: affine points + P_inf = q^4 + 1 + 2 g q^2
    CHECK(q8.pts.size() + 1 == 4096 + 1 + 2 * 196 * 64);
    // the 64 t = 0 points are exactly the F_8-rational affine points
    for (uint32_t i : q8.pts.fiber_of(Fe{0})) {
        CHECK(q8.F.in_subfield(q8.pts[i].x, 8));
        CHECK(q8.F.in_subfield(q8.pts[i].y, 8));
    }
}

TEST_CASE("origin lies on the curve with z = w = 0") {
    const auto& q8 = Q8::get();
    const auto& P0 = q8.pts[0];
    CHECK(P0.x == Fe{0});
    CHECK(P0.y == Fe{0});
    CHECK(P0.t == Fe{0});
    CHECK(P0.z == Fe{0});
    CHECK(P0.w == Fe{0});
}

TEST_CASE("canonical order is strict and deterministic") {
    const auto& q8 = Q8::get();
    const auto key = [](const CurvePoint& P) { return std::tuple(P.x.code, P.y.code, P.t.code); };
    for (size_t i = 1; i < q8.pts.size(); ++i) CHECK(key(q8.pts[i - 1]) < key(q8.pts[i]));
    // serial re-run gives the identical sequence
    const auto serial = enumerate_points(q8.spec, q8.F, 1);
    REQUIRE(serial.size() == q8.pts.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].x == q8.pts[i].x);
        CHECK(serial[i].y == q8.pts[i].y);
        CHECK(serial[i].t == q8.pts[i].t);
        CHECK(serial[i].z == q8.pts[i].z);
        CHECK(serial[i].w == q8.pts[i].w);
    }
}

TEST_CASE("solver-based enumeration matches the naive scan") {
    const auto& q8 = Q8::get();
    auto naive = reference::enumerate_naive(q8.spec, q8.F);
    std::sort(naive.begin(), naive.end(), [](const CurvePoint& a, const CurvePoint& b) {
        return std::tuple(a.x.code, a.y.code, a.t.code) < std::tuple(b.x.code, b.y.code, b.t.code);
    });
    REQUIRE(naive.size() == q8.pts.size());
    for (size_t i = 0; i < naive.size(); ++i) {
        CHECK(naive[i].x == q8.pts[i].x);
        CHECK(naive[i].y == q8.pts[i].y);
        CHECK(naive[i].t == q8.pts[i].t);
    }
}

TEST_CASE("t-fibers: 456 fibers of size exactly 64") {
    const auto& q8 = Q8::get();
    const auto r = t_fibers(q8.pts, q8.spec);
    CHECK(r.fiber_count == 456);
    CHECK(r.expected_fibers == 456);
    CHECK(r.expected_size == 64);
    CHECK(r.uniform);
    CHECK(r.pass);
    REQUIRE(r.histogram.size() == 1);
    CHECK(r.histogram.at(64) == 456);
}

TEST_CASE("plane model vanishes everywhere; generator perturbation does not") {
    const auto& q8 = Q8::get();
    const auto r = verify_plane_model(q8.pts, q8.spec, q8.F);
    CHECK(r.total == 29184);
    CHECK(r.failures == 0);
    // y -> y + g breaks the identity at every single point here
    CHECK(r.control_nonzero == 29184);
    CHECK(r.pass);
}

TEST_CASE("y -> y + 1 is a symmetry of the plane model, not a usable control") {
    // (y+1)^{2^j} = y^{2^j} + 1 makes the four y-terms cancel pairwise
    const auto& q8 = Q8::get();
    const Fe one{1};
    int checked = 0;
    for (size_t i = 0; i < q8.pts.size(); i += 977) {
        const auto& P = q8.pts[i];
        const Fe y1 = q8.F.add(P.y, one);
        const Fe t35 = q8.F.pow(P.t, 35);
        Fe v = q8.F.pow(y1, 64);
        v = q8.F.add(v, q8.F.mul(q8.F.pow(y1, 8), t35));
        v = q8.F.add(v, q8.F.pow(y1, 8));
        v = q8.F.add(v, q8.F.mul(y1, t35));
        v = q8.F.add(v, q8.F.pow(P.t, 50));
        CHECK(v == Fe{0});
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("coordinate zero supports") {
    const auto& q8 = Q8::get();
    const auto r = verify_coordinate_divisors(q8.pts, q8.spec);
    CHECK(r.x_zeros == 8);
    CHECK(r.y_zeros == 8);
    CHECK(r.t_zeros == 64);
    CHECK(r.w_zeros == 1);
    CHECK(r.pass);
}

TEST_CASE("per-point identities hold (spot sample)") {
    const auto& q8 = Q8::get();
    const auto& F = q8.F;
    for (size_t i = 0; i < q8.pts.size(); i += 211) {
        const auto& P = q8.pts[i];
        const Fe s = F.add(F.pow(P.x, 8), P.x);
        CHECK(F.add(F.pow(P.y, 8), P.y) == F.mul(F.pow(P.x, 2), s));
        CHECK(F.pow(P.t, 5) == s);
        CHECK(P.z == F.add(F.pow(P.y, 4), F.pow(P.x, 5)));
        CHECK(P.w == F.add(F.mul(P.x, F.pow(P.y, 4)), F.pow(P.z, 4)));
        CHECK(F.add(F.pow(P.z, 8), P.z) == F.mul(F.pow(P.x, 4), s));
        CHECK(F.add(F.pow(P.w, 8), P.w) == F.mul(F.pow(P.y, 4), s));
    }
}

TEST_CASE("fiber lookup on an absent t value throws") {
    const auto& q8 = Q8::get();
    // the generator is not among the 456 fiber values iff its 5th power is
    // not in the image of x -> x^8 + x; find some absent value
    bool found_absent = false;
    for (uint32_t c = 1; c < 41 && !found_absent; ++c) {
        bool present = false;
        for (Fe t : q8.pts.t_values())
            if (t.code == c) { present = true; break; }
        if (!present) {
            CHECK_THROWS_AS(q8.pts.fiber_of(Fe{c}), DomainError);
            found_absent = true;
        }
    }
    CHECK(found_absent);
}
