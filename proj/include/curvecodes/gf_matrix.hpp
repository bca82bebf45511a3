#ifndef CURVECODES_GF_MATRIX_HPP
#define CURVECODES_GF_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "curvecodes/gf.hpp"
#include "curvecodes/point_enum.hpp"
#include "curvecodes/rr_basis.hpp"

namespace curvecodes {

/// Bit-sliced matrix over GF(2^kbits), kbits <= 16.  Storage is plane-major
/// per row: row r holds kbits contiguous bit planes, so a scaled-row update
/// decomposes into one contiguous stream XOR per output plane.
class GfBitMatrix {
public:
    GfBitMatrix(size_t rows, size_t cols, int kbits);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    int kbits() const { return kbits_; }

    void set(size_t r, size_t c, uint32_t v);
    uint32_t get(size_t r, size_t c) const;

    /// Row rank by blocked elimination (destroys the matrix content).
    /// Pivot rows keep zeros left of their pivot column, so updates start at
    /// the pivot word; pivots are kept column-sorted for correctness.
    size_t rank_destructive(const Field& F, int threads = 0);

    /// Appends the rows of other (same width) and returns the rank of the
    /// stacked matrix; used for row-space containment checks.
    static size_t stacked_rank(const GfBitMatrix& a, const GfBitMatrix& b, const Field& F,
                               int threads = 0);

    GfBitMatrix clone() const { return *this; }

private:
    size_t rows_, cols_, words_;
    int kbits_;
    std::vector<uint64_t> data_;  // rows_ * kbits_ * words_

    friend struct RankKernel;
};

/// Evaluation matrix of a monomial basis over a subset of the point columns
/// (empty subset = all points, canonical order).
GfBitMatrix evaluation_matrix(const Field& F, const PointSet& pts, const BasisSpec& basis,
                              const std::vector<uint32_t>& columns = {}, int threads = 0);

} // namespace curvecodes

#endif
