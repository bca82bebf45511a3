#ifndef CURVECODES_DERIVED_PARAMS_HPP
#define CURVECODES_DERIVED_PARAMS_HPP

#include <cstdint>
#include <vector>

#include "curvecodes/ag_codes.hpp"
#include "curvecodes/semigroup.hpp"

namespace curvecodes {

/// CSS quantum code parameters.  d_bound is always a lower bound on the
/// distance; the true quantum distance is never computed here.
struct QuantumParams {
    uint64_t n = 0;
    uint64_t s = 0;            ///< logical dimension
    uint64_t d_bound = 0;
    uint64_t deltaQ_bound = 0; ///< n - s - 2 d_bound + 2
    Rational DeltaQ_bound;
    bool beyond_text_range = false;  ///< table row past the stated ell range (kept, flagged)
};

/// General t-point CSS construction: a_i <= b_i and
/// 2g-2 < sum a < sum b < n give k = sum b - sum a and
/// d >= min(n - sum b, sum a - (2g-2)).
QuantumParams css_general_t_point(uint64_t genus, uint64_t n, const std::vector<uint64_t>& a_list,
                                  const std::vector<uint64_t>& b_list);

/// Nested-dual CSS construction on the q = 8 cover: either
/// ell in [3g-1, n-g] with s in [1, n-2*ell], or the table regime
/// ell in [2g, 3g-2] with s = n - 2*ell.  d_bound = ell + 1 - g in both.
QuantumParams css_nested_dual(const NumericalSemigroup& S, uint64_t genus, uint64_t n, uint64_t ell,
                              uint64_t s);

/// All rows with s = n - 2*ell for ell = 2g .. 3g-1+2 (the printed table:
/// 198 rows, s from n-4g down by 2, d_bound ascending from 2g/2... see tests).
std::vector<QuantumParams> quantum_table(const NumericalSemigroup& S, uint64_t genus, uint64_t n);

/// Unit-memory convolutional code derived from the dual one-point code of
/// degree rho_ell: (n, k-s, s; 1, d_f >= d_ord(ell)) with k = rho_ell + 1 - g
/// and 2s <= k.
struct ConvParams {
    uint64_t n = 0;
    uint64_t dimension = 0;  ///< k - s
    uint64_t degree = 0;     ///< s
    uint64_t memory = 1;
    uint64_t d_f_bound = 0;
};

ConvParams conv_params(const NumericalSemigroup& S, uint64_t genus, uint64_t n, uint64_t rho_ell,
                       uint64_t s);

} // namespace curvecodes

#endif
