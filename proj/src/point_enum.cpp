#include "curvecodes/point_enum.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace curvecodes {

namespace {

struct CoverConsts {
    uint64_t q, q0, m;
};

CoverConsts cover_consts(const CurveSpec& spec, const Field& F) {
    if (spec.family != CurveFamily::SuzukiCover)
        throw DomainError("point enumeration implemented for the Suzuki cover");
    CoverConsts c;
    c.q = spec.q.convert_to<uint64_t>();
    c.q0 = spec.q0.convert_to<uint64_t>();
    c.m = spec.m.convert_to<uint64_t>();
    const uint64_t want = c.q * c.q * c.q * c.q;
    if (F.size() != want)
        throw DomainError("field size " + std::to_string(F.size()) + " does not match q^4 = " +
                          std::to_string(want));
    return c;
}

// points above one x, sorted by (y,t); empty when the fiber is empty
void points_for_x(const Field& F, const AdditiveSolver& ys_solver, const CoverConsts& c, uint32_t xcode,
                  std::vector<CurvePoint>& out) {
    out.clear();
    const Fe x{xcode};
    const Fe s = F.add(F.pow(x, c.q), x);                // x^q + x
    const Fe c1 = F.mul(F.pow(x, c.q0), s);              // x^{q0}(x^q + x)
    const auto ys = ys_solver.solve(c1);
    if (ys.empty()) return;
    const auto ts = F.nth_roots(c.m, s);
    if (ts.empty()) return;
    out.reserve(ys.size() * ts.size());
    for (Fe y : ys) {
        const Fe z = F.add(F.pow(y, 2 * c.q0), F.pow(x, 2 * c.q0 + 1));
        const Fe w = F.add(F.mul(x, F.pow(y, 2 * c.q0)), F.pow(z, 2 * c.q0));
        if (F.add(F.pow(z, c.q), z) != F.mul(F.pow(x, 2 * c.q0), s))
            throw Error("enumeration failure: z identity violated at x = " + std::to_string(xcode));
        if (F.add(F.pow(w, c.q), w) != F.mul(F.pow(y, 2 * c.q0), s))
            throw Error("enumeration failure: w identity violated at x = " + std::to_string(xcode));
        for (Fe t : ts) out.push_back(CurvePoint{x, y, t, z, w});
    }
    // ys and ts are sorted, so (y,t) lexicographic order holds already
}

} // namespace

PointSet::PointSet(std::vector<CurvePoint> pts) : pts_(std::move(pts)) {
    for (uint32_t i = 0; i < pts_.size(); ++i) fibers_[pts_[i].t.code].push_back(i);
    t_values_.reserve(fibers_.size());
    for (const auto& [tc, idx] : fibers_) t_values_.push_back(Fe{tc});
    // canonical order sanity
    for (size_t i = 1; i < pts_.size(); ++i) {
        const auto key = [](const CurvePoint& P) {
            return std::tuple(P.x.code, P.y.code, P.t.code);
        };
        if (!(key(pts_[i - 1]) < key(pts_[i])))
            throw Error("point set not in canonical order / contains duplicates");
    }
}

const std::vector<uint32_t>& PointSet::fiber_of(Fe t) const {
    auto it = fibers_.find(t.code);
    if (it == fibers_.end()) throw DomainError("no fiber over the given t value");
    return it->second;
}

size_t PointSet::t_zero_count() const {
    auto it = fibers_.find(0);
    return it == fibers_.end() ? 0 : it->second.size();
}

PointSet enumerate_points(const CurveSpec& spec, const Field& F, int threads) {
    const auto c = cover_consts(spec, F);
    const uint32_t n_x = F.size();
    std::vector<std::vector<CurvePoint>> buckets(n_x);

    if (threads == 1) {
        const AdditiveSolver solver(F, static_cast<uint32_t>(c.q), '+');
        for (uint32_t xc = 0; xc < n_x; ++xc) points_for_x(F, solver, c, xc, buckets[xc]);
    } else {
#ifdef _OPENMP
#pragma omp parallel num_threads(threads > 0 ? threads : omp_get_max_threads())
        {
            const AdditiveSolver solver(F, static_cast<uint32_t>(c.q), '+');
#pragma omp for schedule(static)
            for (int64_t xc = 0; xc < static_cast<int64_t>(n_x); ++xc)
                points_for_x(F, solver, c, static_cast<uint32_t>(xc), buckets[static_cast<size_t>(xc)]);
        }
#else
        const AdditiveSolver solver(F, static_cast<uint32_t>(c.q), '+');
        for (uint32_t xc = 0; xc < n_x; ++xc) points_for_x(F, solver, c, xc, buckets[xc]);
#endif
    }

    // deterministic assembly in x order regardless of scheduling
    size_t total = 0;
    for (const auto& b : buckets) total += b.size();
    std::vector<CurvePoint> all;
    all.reserve(total);
    for (auto& b : buckets) all.insert(all.end(), b.begin(), b.end());

    const uint64_t expected = c.q * c.q * c.q * (c.q * c.q - c.q + 1);  // q^5 - q^4 + q^3
    if (all.size() != expected)
        throw Error("enumeration failure: got " + std::to_string(all.size()) + " points, expected " +
                    std::to_string(expected));
    return PointSet(std::move(all));
}

EnumerationCount enumerate_count(const CurveSpec& spec, const Field& F, int threads) {
    const auto c = cover_consts(spec, F);
    const uint32_t n_x = F.size();
    uint64_t total = 0, t_zero = 0;

#ifdef _OPENMP
#pragma omp parallel num_threads(threads > 0 ? threads : omp_get_max_threads()) \
    reduction(+ : total, t_zero)
    {
        const AdditiveSolver solver(F, static_cast<uint32_t>(c.q), '+');
#pragma omp for schedule(static)
        for (int64_t xc = 0; xc < static_cast<int64_t>(n_x); ++xc) {
            const Fe x{static_cast<uint32_t>(xc)};
            const Fe s = F.add(F.pow(x, c.q), x);
            const auto ys = solver.solve(F.mul(F.pow(x, c.q0), s));
            if (ys.empty()) continue;
            const auto ts = F.nth_roots(c.m, s);
            total += ys.size() * ts.size();
            if (s.code == 0) t_zero += ys.size();  // the only root of t^m = 0 is t = 0
        }
    }
#else
    const AdditiveSolver solver(F, static_cast<uint32_t>(c.q), '+');
    for (uint32_t xc = 0; xc < n_x; ++xc) {
        const Fe x{xc};
        const Fe s = F.add(F.pow(x, c.q), x);
        const auto ys = solver.solve(F.mul(F.pow(x, c.q0), s));
        if (ys.empty()) continue;
        const auto ts = F.nth_roots(c.m, s);
        total += ys.size() * ts.size();
        if (s.code == 0) t_zero += ys.size();
    }
#endif
    (void)threads;
    EnumerationCount out;
    out.total = total;
    out.t_zero = t_zero;
    const uint64_t q = c.q;
    out.counts_ok = (total == q * q * q * (q * q - q + 1)) && (t_zero == q * q);
    return out;
}

FiberReport t_fibers(const PointSet& pts, const CurveSpec& spec) {
    FiberReport r;
    const uint64_t q = spec.q.convert_to<uint64_t>();
    r.expected_fibers = q * q * q - q * q + q;
    r.expected_size = q * q;
    r.fiber_count = pts.t_values().size();
    r.uniform = true;
    for (Fe t : pts.t_values()) {
        const uint64_t sz = pts.fiber_of(t).size();
        ++r.histogram[sz];
        if (sz != r.expected_size) r.uniform = false;
    }
    r.pass = r.uniform && r.fiber_count == r.expected_fibers;
    return r;
}

PlaneModelReport verify_plane_model(const PointSet& pts, const CurveSpec& spec, const Field& F,
                                    int threads) {
    const uint64_t q = spec.q.convert_to<uint64_t>();
    const uint64_t q0 = spec.q0.convert_to<uint64_t>();
    const uint64_t m = spec.m.convert_to<uint64_t>();
    const uint64_t e1 = m * (q - 1);      // exponent of t multiplying y^q and y
    const uint64_t e2 = (q + q0) * m;     // pure t exponent
    const Fe g = F.generator();
    if (F.in_subfield(g, static_cast<uint32_t>(q)))
        throw Error("generator unexpectedly lies in the base subfield");

    const auto eval_F = [&](Fe y, Fe t) {
        const Fe t1 = F.pow(t, e1);
        Fe v = F.pow(y, q * q);
        v = F.add(v, F.mul(F.pow(y, q), t1));
        v = F.add(v, F.pow(y, q));
        v = F.add(v, F.mul(y, t1));
        v = F.add(v, F.pow(t, e2));
        return v;
    };

    PlaneModelReport r;
    r.total = pts.size();
    uint64_t failures = 0, control_nonzero = 0;
    const int64_t n = static_cast<int64_t>(pts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : failures, control_nonzero) \
    num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (int64_t i = 0; i < n; ++i) {
        const CurvePoint& P = pts[static_cast<size_t>(i)];
        if (eval_F(P.y, P.t).code != 0) ++failures;
        if (eval_F(F.add(P.y, g), P.t).code != 0) ++control_nonzero;
    }
    (void)threads;
    r.failures = failures;
    r.control_nonzero = control_nonzero;
    r.pass = (r.failures == 0) && (r.control_nonzero > 0);
    return r;
}

DivisorReport verify_coordinate_divisors(const PointSet& pts, const CurveSpec& spec) {
    DivisorReport r;
    const uint64_t q = spec.q.convert_to<uint64_t>();
    bool w_only_origin = true;
    for (const CurvePoint& P : pts.points()) {
        if (P.x.code == 0) ++r.x_zeros;
        if (P.y.code == 0) ++r.y_zeros;
        if (P.t.code == 0) ++r.t_zeros;
        if (P.w.code == 0) {
            ++r.w_zeros;
            if (P.x.code != 0 || P.y.code != 0 || P.t.code != 0) w_only_origin = false;
        }
    }
    r.x_ok = (r.x_zeros == q);
    r.y_ok = (r.y_zeros == q);
    r.t_ok = (r.t_zeros == q * q);
    r.w_ok = (r.w_zeros == 1) && w_only_origin;
    r.pass = r.x_ok && r.y_ok && r.t_ok && r.w_ok;
    return r;
}

} // namespace curvecodes
