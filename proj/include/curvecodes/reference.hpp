#ifndef CURVECODES_REFERENCE_HPP
#define CURVECODES_REFERENCE_HPP

#include <cstdint>
#include <vector>

#include "curvecodes/gf.hpp"
#include "curvecodes/point_enum.hpp"
#include "curvecodes/rr_basis.hpp"

namespace curvecodes::reference {

/// Straightforward serial implementations of the hot kernels.  They exist to
/// cross-check the optimized OpenMP paths (tests) and to anchor the
/// benchmark; none of them is used on the fast path.

/// Membership bitmap by repeated scanning until a fixpoint, O(bound * |gens|)
/// per pass.  Independent of the dynamic-programming closure.
std::vector<bool> closure_oracle(const std::vector<uint64_t>& generators, uint64_t bound);

/// Brute-force telescopic test, a direct transcription of the definition
/// with its own membership search.
bool telescopic_oracle(const std::vector<uint64_t>& sequence);

/// Monomial evaluation by repeated multiplication (no log tables).
Fe evaluate_naive(const Field& F, const Monomial& mon, const CurvePoint& P);

/// Plain power sum via evaluate_naive, serial.
Fe power_sum_naive(const Field& F, const PointSet& pts, const Monomial& mon);

/// Point enumeration that scans every candidate y and t instead of solving.
std::vector<CurvePoint> enumerate_naive(const CurveSpec& spec, const Field& F);

/// Textbook dense Gaussian elimination rank over the field (row-major
/// element matrix), serial.
size_t rank_dense(const Field& F, std::vector<std::vector<uint32_t>> m);

/// Lexicographically smallest exponent vector by exhaustive search.
Monomial monomial_for_brute(const std::array<uint64_t, 5>& poles, uint64_t s);

} // namespace curvecodes::reference

#endif
