#include "curvecodes/reference.hpp"

#include <algorithm>
#include <numeric>

namespace curvecodes::reference {

std::vector<bool> closure_oracle(const std::vector<uint64_t>& generators, uint64_t bound) {
    std::vector<bool> member(bound + 1, false);
    member[0] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (uint64_t s = 0; s <= bound; ++s) {
            if (member[s]) continue;
            for (uint64_t g : generators) {
                if (g <= s && member[s - g]) {
                    member[s] = true;
                    changed = true;
                    break;
                }
            }
        }
    }
    return member;
}

bool telescopic_oracle(const std::vector<uint64_t>& sequence) {
    uint64_t dall = 0;
    for (uint64_t a : sequence) dall = std::gcd(dall, a);
    if (dall != 1) return false;
    if (sequence.size() == 1) return sequence[0] == 1;
    uint64_t d_prev = sequence[0];
    for (size_t i = 1; i < sequence.size(); ++i) {
        const uint64_t d_i = std::gcd(d_prev, sequence[i]);
        const uint64_t target = sequence[i] / d_i;
        std::vector<uint64_t> scaled;
        for (size_t j = 0; j < i; ++j) scaled.push_back(sequence[j] / d_prev);
        const auto member = closure_oracle(scaled, target);
        if (!member[target]) return false;
        d_prev = d_i;
    }
    return true;
}

Fe evaluate_naive(const Field& F, const Monomial& mon, const CurvePoint& P) {
    const std::array<Fe, 5> coord{P.x, P.y, P.z, P.t, P.w};
    Fe acc = F.one();
    for (int i = 0; i < 5; ++i)
        for (uint32_t e = 0; e < mon.e[static_cast<size_t>(i)]; ++e)
            acc = F.mul(acc, coord[static_cast<size_t>(i)]);
    return acc;
}

Fe power_sum_naive(const Field& F, const PointSet& pts, const Monomial& mon) {
    Fe acc{0};
    for (const CurvePoint& P : pts.points()) acc = F.add(acc, evaluate_naive(F, mon, P));
    return acc;
}

std::vector<CurvePoint> enumerate_naive(const CurveSpec& spec, const Field& F) {
    const uint64_t q = spec.q.convert_to<uint64_t>();
    const uint64_t q0 = spec.q0.convert_to<uint64_t>();
    const uint64_t m = spec.m.convert_to<uint64_t>();
    std::vector<CurvePoint> out;
    for (uint32_t xc = 0; xc < F.size(); ++xc) {
        const Fe x{xc};
        const Fe s = F.add(F.pow(x, q), x);
        const Fe c1 = F.mul(F.pow(x, q0), s);
        for (uint32_t yc = 0; yc < F.size(); ++yc) {
            const Fe y{yc};
            if (F.add(F.pow(y, q), y) != c1) continue;
            for (uint32_t tc = 0; tc < F.size(); ++tc) {
                const Fe t{tc};
                if (F.pow(t, m) != s) continue;
                const Fe z = F.add(F.pow(y, 2 * q0), F.pow(x, 2 * q0 + 1));
                const Fe w = F.add(F.mul(x, F.pow(y, 2 * q0)), F.pow(z, 2 * q0));
                out.push_back(CurvePoint{x, y, t, z, w});
            }
        }
    }
    return out;
}

size_t rank_dense(const Field& F, std::vector<std::vector<uint32_t>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = SIZE_MAX;
        for (size_t r = rank; r < rows; ++r)
            if (m[r][col]) { piv = r; break; }
        if (piv == SIZE_MAX) continue;
        std::swap(m[rank], m[piv]);
        const Fe ipiv = F.inv(Fe{m[rank][col]});
        for (size_t r = rank + 1; r < rows; ++r) {
            if (!m[r][col]) continue;
            const Fe c = F.mul(Fe{m[r][col]}, ipiv);
            for (size_t cc = col; cc < cols; ++cc)
                m[r][cc] = F.add(Fe{m[r][cc]}, F.mul(c, Fe{m[rank][cc]})).code;
        }
        ++rank;
    }
    return rank;
}

Monomial monomial_for_brute(const std::array<uint64_t, 5>& poles, uint64_t s) {
    Monomial best;
    bool found = false;
    for (uint64_t a = 0; a * poles[0] <= s; ++a)
        for (uint64_t b = 0; a * poles[0] + b * poles[1] <= s; ++b)
            for (uint64_t c = 0; a * poles[0] + b * poles[1] + c * poles[2] <= s; ++c)
                for (uint64_t d = 0;
                     a * poles[0] + b * poles[1] + c * poles[2] + d * poles[3] <= s; ++d) {
                    const uint64_t rem =
                        s - a * poles[0] - b * poles[1] - c * poles[2] - d * poles[3];
                    if (rem % poles[4]) continue;
                    Monomial cand;
                    cand.e = {static_cast<uint32_t>(a), static_cast<uint32_t>(b),
                              static_cast<uint32_t>(c), static_cast<uint32_t>(d),
                              static_cast<uint32_t>(rem / poles[4])};
                    if (!found || cand.e < best.e) {
                        best = cand;
                        found = true;
                    }
                }
    if (!found) throw DomainError("no representation");
    return best;
}

} // namespace curvecodes::reference
