#ifndef CURVECODES_AG_CODES_HPP
#define CURVECODES_AG_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvecodes/curve_catalog.hpp"
#include "curvecodes/gf.hpp"
#include "curvecodes/gf_matrix.hpp"
#include "curvecodes/point_enum.hpp"
#include "curvecodes/rr_basis.hpp"
#include "curvecodes/semigroup.hpp"

namespace curvecodes {

/// Exact nonnegative rational, used for the Singleton-defect columns.
struct Rational {
    uint64_t num = 0, den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    /// Fixed-point decimal with the given number of significant digits,
    /// round half up ("0.0067160" style, never scientific).
    std::string to_decimal(int significant) const;
};

struct CodeParams {
    uint64_t n = 0, k = 0;
    std::optional<uint64_t> deg_G;
    std::optional<uint64_t> dstar;       ///< n - deg G (when deg G < n)
    std::optional<uint64_t> ell;
    std::optional<uint64_t> rho_ell;
    std::optional<uint64_t> d_ord;
    std::optional<uint64_t> delta_bound;     ///< n + 1 - k - d_ord
    std::optional<int64_t> dual_goppa_bound; ///< deg G - (2g - 2), printed for information
    Rational Delta_bound;                    ///< delta_bound / n
};

/// Which evaluation divisor a check runs over.  The dual-code tables use all
/// affine points; the multi-point equivalence argument needs the t != 0
/// subset, and mixing the two breaks its diagonal matrix.
enum class DivisorChoice { AllAffine, TNonzero };

struct EquivalenceReport {
    uint64_t r = 0;
    DivisorChoice divisor;
    uint64_t divisor_size = 0;
    uint64_t zero_diagonal_entries = 0;
    bool invertible = false;  ///< all diagonal entries t(P)^r nonzero
};

struct PairCheck {
    uint64_t seed = 0;
    uint64_t pairs = 0;
    uint64_t plain_failures = 0;
    uint64_t twisted_failures = 0;
};

/// Results of the Castle duality verification over D = all affine points.
///
/// The plain power-sum sweep asserts sum_P h_s(P) = 0 for every nongap
/// s <= sweep_limit.  That identity would follow from div(d phi) = (2g-2) P_inf
/// for phi = prod_{alpha in U} (t - alpha), but phi comes out as
/// T^456 + T^421 + T^281 + T, whose derivative T^420 + T^280 + 1 is not
/// constant, so the plain sums are only guaranteed to vanish for
/// s <= v(d phi / phi) = 2694 and indeed fail at 150 larger nongaps.
/// The twisted sweep weights each point by 1 / phi'(t(P)) (the residues of
/// dt / phi(t), with div(dt) = (2g-2) P_inf) and must have zero failures:
/// it certifies C(D, r P)^perp = u * C(D, r^perp P) with u_P = 1/phi'(t(P)).
struct CastleReport {
    uint64_t n = 0;
    uint64_t sweep_limit = 0;
    uint64_t nongaps_swept = 0;
    std::vector<uint64_t> plain_failures;
    std::vector<uint64_t> twisted_failures;
    std::vector<std::pair<uint64_t, uint32_t>> phi_coefficients;  ///< (exponent, code), sparse
    std::vector<uint32_t> phi_prime_values_on_fibers;             ///< distinct values, sorted
    PairCheck pair_check;
    uint64_t k_r = 0, k_r_perp = 0;  ///< dimensions at r = 392 and its dual degree
    bool dimension_identity_ok = false;
    bool plain_pass = false;
    bool twisted_pass = false;
};

struct RankCheck {
    uint64_t r = 0;
    uint64_t k = 0;
    uint64_t rank = 0;
    uint64_t columns_used = 0;
    bool full_width = false;  ///< false = leading r+1 columns (a proof of full rank all the same)
    bool ok = false;
};

/// One-point codes C(D, r P_inf) and duals C_ell(P_inf) on the q = 8 Suzuki
/// cover.  Binds the field, the enumerated points, the Weierstrass semigroup
/// and the monomial solver; immutable and safe to share between threads.
class OnePointCodes {
public:
    OnePointCodes(const Field& F, const PointSet& pts, const CurveSpec& spec);

    const NumericalSemigroup& semigroup() const { return S_; }
    const MonomialSolver& solver() const { return solver_; }
    uint64_t n() const { return n_; }
    uint64_t genus() const { return g_; }

    /// Dimension of L(r P_inf) realized at the points; r >= n is refused
    /// (the evaluation map is no longer injective there).
    CodeParams one_point_params(uint64_t r) const;

    GfBitMatrix generator_matrix(uint64_t r, const std::vector<uint32_t>& columns = {},
                                 int threads = 0) const;

    /// Rank certificate: over the leading min(n, r+1) columns by default,
    /// which proves rank = k because a nonzero function of pole order <= r
    /// has at most r zeros.  full_width forces all n columns.
    RankCheck rank_check(uint64_t r, bool full_width = false, int threads = 0) const;

    CodeParams dual_code_params(uint64_t ell) const;
    std::vector<CodeParams> dord_table(uint64_t ell_lo, uint64_t ell_hi) const;

    EquivalenceReport monomial_equivalence_check(uint64_t r, DivisorChoice divisor) const;

    CastleReport castle_duality_check(uint64_t seed, int threads = 0) const;

    /// Plain power sum sum_P h_s(P) for one pole order (test hook).
    Fe power_sum(uint64_t s) const;

private:
    const Field& F_;
    const PointSet& pts_;
    CurveSpec spec_;
    uint64_t n_, g_;
    NumericalSemigroup S_;
    MonomialSolver solver_;

    // batch-evaluation data: per t!=0 point the logs of the five coordinates,
    // t = 0 points kept aside for scalar handling
    std::vector<std::array<uint32_t, 5>> logs_;
    std::vector<uint32_t> tnz_index_;    // point index per logs_ entry
    std::vector<uint32_t> tzero_index_;  // indices of the t = 0 points
};

} // namespace curvecodes

#endif
