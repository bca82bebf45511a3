#ifndef CURVECODES_POINT_ENUM_HPP
#define CURVECODES_POINT_ENUM_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "curvecodes/curve_catalog.hpp"
#include "curvecodes/gf.hpp"

namespace curvecodes {

/// Affine point of the Suzuki cover with its derived coordinates
/// z = y^{2q0} + x^{2q0+1} and w = x y^{2q0} + z^{2q0}.
struct CurvePoint {
    Fe x, y, t, z, w;
};

/// All affine points rational over the evaluation field, in the canonical
/// order (code(x), code(y), code(t)) ascending.  This order fixes the column
/// order of every generator matrix the project emits.
class PointSet {
public:
    explicit PointSet(std::vector<CurvePoint> pts);

    size_t size() const { return pts_.size(); }
    const CurvePoint& operator[](size_t i) const { return pts_[i]; }
    const std::vector<CurvePoint>& points() const { return pts_; }

    const std::vector<Fe>& t_values() const { return t_values_; }
    /// Indices of the points in the fiber over the given t value.
    const std::vector<uint32_t>& fiber_of(Fe t) const;
    size_t t_zero_count() const;

private:
    std::vector<CurvePoint> pts_;
    std::vector<Fe> t_values_;
    std::map<uint32_t, std::vector<uint32_t>> fibers_;
};

/// Enumerates the affine points of the Suzuki cover over F_{q^4}: for each x,
/// the y's come from the additive solver of y^q + y = x^{q0}(x^q + x) and the
/// t's from the m-th roots of x^q + x.  Every point's auxiliary identities
/// z^q + z = x^{2q0}(x^q+x) and w^q + w = y^{2q0}(x^q+x) are asserted.
/// threads = 1 forces the serial path, 0 uses the OpenMP default.
PointSet enumerate_points(const CurveSpec& spec, const Field& F, int threads = 0);

/// Streaming count for sizes where storing the set is unreasonable (q = 32):
/// returns (total points, points with t = 0) and checks both against the
/// closed forms q^5-q^4+q^3 and q^2.
struct EnumerationCount {
    uint64_t total = 0;
    uint64_t t_zero = 0;
    bool counts_ok = false;
};
EnumerationCount enumerate_count(const CurveSpec& spec, const Field& F, int threads = 0);

struct FiberReport {
    uint64_t fiber_count = 0;
    uint64_t expected_fibers = 0;
    uint64_t expected_size = 0;
    bool uniform = false;                     ///< every fiber has the expected size
    std::map<uint64_t, uint64_t> histogram;   ///< fiber size -> multiplicity
    bool pass = false;
};

FiberReport t_fibers(const PointSet& pts, const CurveSpec& spec);

struct PlaneModelReport {
    uint64_t total = 0;
    uint64_t failures = 0;              ///< points where F(y,t) != 0
    uint64_t control_nonzero = 0;       ///< perturbed evaluations that are nonzero
    bool pass = false;                  ///< failures == 0 and control_nonzero > 0
};

/// Evaluates F(y,t) = y^{q^2} + y^q t^{m(q-1)} + y^q + y t^{m(q-1)} + t^{(q+q0)m}
/// at every point.  The negative control perturbs y by the field generator g
/// (g outside F_q; y -> y+1 is useless as a control because F(y+1,t) = F(y,t)
/// identically in characteristic 2).
PlaneModelReport verify_plane_model(const PointSet& pts, const CurveSpec& spec, const Field& F,
                                    int threads = 0);

struct DivisorReport {
    uint64_t x_zeros = 0, y_zeros = 0, t_zeros = 0, w_zeros = 0;
    bool x_ok = false;  ///< exactly q points (0,a,0)
    bool y_ok = false;  ///< exactly q points (b,0,0)
    bool t_ok = false;  ///< exactly q^2 points
    bool w_ok = false;  ///< only the origin
    bool pass = false;
};

DivisorReport verify_coordinate_divisors(const PointSet& pts, const CurveSpec& spec);

} // namespace curvecodes

#endif
