#include "curvecodes/gf_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace curvecodes {

GfBitMatrix::GfBitMatrix(size_t rows, size_t cols, int kbits)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), kbits_(kbits) {
    if (kbits < 1 || kbits > 16) throw DomainError("kbits out of range");
    data_.assign(rows_ * words_ * static_cast<size_t>(kbits_), 0);
}

void GfBitMatrix::set(size_t r, size_t c, uint32_t v) {
    const size_t w = c >> 6;
    const uint64_t bit = 1ull << (c & 63);
    for (int b = 0; b < kbits_; ++b) {
        uint64_t& word = data_[(r * static_cast<size_t>(kbits_) + static_cast<size_t>(b)) * words_ + w];
        if ((v >> b) & 1u) word |= bit;
        else word &= ~bit;
    }
}

uint32_t GfBitMatrix::get(size_t r, size_t c) const {
    const size_t w = c >> 6;
    const unsigned sh = c & 63;
    uint32_t v = 0;
    for (int b = 0; b < kbits_; ++b)
        v |= static_cast<uint32_t>(
                 (data_[(r * static_cast<size_t>(kbits_) + static_cast<size_t>(b)) * words_ + w] >> sh) &
                 1u)
             << b;
    return v;
}

namespace {

// dst ^= s0 ^ s1 ^ ... over n words; fixed stream count so the compiler can
// unroll and vectorize each case
template <int N>
void xor_streams(uint64_t* __restrict dst, const uint64_t* const* __restrict src, size_t n) {
    for (size_t w = 0; w < n; ++w) {
        uint64_t acc = src[0][w];
        for (int i = 1; i < N; ++i) acc ^= src[i][w];
        dst[w] ^= acc;
    }
}

using XorFn = void (*)(uint64_t* __restrict, const uint64_t* const* __restrict, size_t);
constexpr XorFn kXor[17] = {nullptr,          &xor_streams<1>,  &xor_streams<2>,  &xor_streams<3>,
                            &xor_streams<4>,  &xor_streams<5>,  &xor_streams<6>,  &xor_streams<7>,
                            &xor_streams<8>,  &xor_streams<9>,  &xor_streams<10>, &xor_streams<11>,
                            &xor_streams<12>, &xor_streams<13>, &xor_streams<14>, &xor_streams<15>,
                            &xor_streams<16>};

} // namespace

struct RankKernel {
    GfBitMatrix& M;
    const Field& F;
    const int kb;
    const size_t words;
    // mulmask[c][b]: which input planes feed output plane b under multiply-by-c
    std::vector<uint16_t> mulmask;

    explicit RankKernel(GfBitMatrix& m, const Field& f)
        : M(m), F(f), kb(m.kbits_), words(m.words_) {
        mulmask.assign(F.size() * static_cast<size_t>(kb), 0);
        for (uint32_t c = 1; c < F.size(); ++c) {
            for (int p = 0; p < kb; ++p) {
                const uint32_t prod = F.mul(Fe{c}, Fe{1u << p}).code;
                for (int b = 0; b < kb; ++b)
                    if ((prod >> b) & 1u)
                        mulmask[c * static_cast<size_t>(kb) + static_cast<size_t>(b)] |=
                            static_cast<uint16_t>(1u << p);
            }
        }
    }

    uint64_t* plane(size_t r, int b) {
        return M.data_.data() + (r * static_cast<size_t>(kb) + static_cast<size_t>(b)) * words;
    }

    // dst_row ^= c * src_row over words >= w0; one contiguous stream XOR per
    // output plane
    void add_scaled(size_t dst, size_t src, uint32_t c, size_t w0) {
        const uint16_t* masks = &mulmask[c * static_cast<size_t>(kb)];
        const size_t n = words - w0;
        const uint64_t* srcs[16];
        for (int b = 0; b < kb; ++b) {
            uint16_t m = masks[b];
            int cnt = 0;
            while (m) {
                srcs[cnt++] = plane(src, std::countr_zero(m)) + w0;
                m = static_cast<uint16_t>(m & (m - 1));
            }
            if (cnt) kXor[cnt](plane(dst, b) + w0, srcs, n);
        }
    }

    struct Pivot {
        uint32_t row, col;
        uint32_t inv;  // inverse of the pivot entry
    };

    // reduce row r against pivots (must be column-sorted); returns the leading
    // nonzero column or SIZE_MAX if the row collapses to zero
    size_t reduce_row(size_t r, const std::vector<Pivot>& pivots) {
        for (const Pivot& p : pivots) {
            const uint32_t c = M.get(r, p.col);
            if (c == 0) continue;
            add_scaled(r, p.row, F.mul(Fe{c}, Fe{p.inv}).code, p.col >> 6);
        }
        const uint64_t* pl[16];
        for (int b = 0; b < kb; ++b) pl[b] = plane(r, b);
        for (size_t w = 0; w < words; ++w) {
            uint64_t any = 0;
            for (int b = 0; b < kb; ++b) any |= pl[b][w];
            if (any) return w * 64 + static_cast<size_t>(std::countr_zero(any));
        }
        return SIZE_MAX;
    }
};

size_t GfBitMatrix::rank_destructive(const Field& F, int threads) {
    if (F.size() != (1u << kbits_))
        throw DomainError("field size does not match the matrix element width");
    RankKernel K(*this, F);
    std::vector<RankKernel::Pivot> pivots;
    pivots.reserve(rows_);

    const size_t B = 128;  // row block
    for (size_t blk = 0; blk < rows_; blk += B) {
        const size_t end = std::min(rows_, blk + B);
        // phase 1: reduce block rows against the pivot snapshot (parallel)
        const std::vector<RankKernel::Pivot> snapshot = pivots;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) \
    num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
        for (int64_t r = static_cast<int64_t>(blk); r < static_cast<int64_t>(end); ++r)
            K.reduce_row(static_cast<size_t>(r), snapshot);
        (void)threads;
        // phase 2: serial scan, absorbing new pivots in column order
        for (size_t r = blk; r < end; ++r) {
            const size_t lead = K.reduce_row(r, pivots);
            if (lead == SIZE_MAX) continue;
            const uint32_t v = get(r, lead);
            RankKernel::Pivot p{static_cast<uint32_t>(r), static_cast<uint32_t>(lead),
                                F.inv(Fe{v}).code};
            pivots.insert(std::upper_bound(pivots.begin(), pivots.end(), p,
                                           [](const auto& a, const auto& b) { return a.col < b.col; }),
                          p);
        }
    }
    return pivots.size();
}

size_t GfBitMatrix::stacked_rank(const GfBitMatrix& a, const GfBitMatrix& b, const Field& F,
                                 int threads) {
    if (a.cols_ != b.cols_ || a.kbits_ != b.kbits_) throw DomainError("incompatible stack");
    GfBitMatrix s(a.rows_ + b.rows_, a.cols_, a.kbits_);
    std::memcpy(s.data_.data(), a.data_.data(), a.data_.size() * sizeof(uint64_t));
    std::memcpy(s.data_.data() + a.data_.size(), b.data_.data(), b.data_.size() * sizeof(uint64_t));
    return s.rank_destructive(F, threads);
}

GfBitMatrix evaluation_matrix(const Field& F, const PointSet& pts, const BasisSpec& basis,
                              const std::vector<uint32_t>& columns, int threads) {
    std::vector<uint32_t> cols = columns;
    if (cols.empty()) {
        cols.resize(pts.size());
        for (uint32_t i = 0; i < pts.size(); ++i) cols[i] = i;
    }
    GfBitMatrix M(basis.dimension(), cols.size(), F.degree());
    const int64_t nrows = static_cast<int64_t>(basis.dimension());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (int64_t r = 0; r < nrows; ++r) {
        const Monomial& mon = basis.monomials[static_cast<size_t>(r)];
        for (size_t j = 0; j < cols.size(); ++j) {
            const Fe v = evaluate(F, mon, pts[cols[j]]);
            if (v.code) M.set(static_cast<size_t>(r), j, v.code);
        }
    }
    (void)threads;
    return M;
}

} // namespace curvecodes
