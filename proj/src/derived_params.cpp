#include "curvecodes/derived_params.hpp"

#include <numeric>
#include <string>

namespace curvecodes {

QuantumParams css_general_t_point(uint64_t genus, uint64_t n, const std::vector<uint64_t>& a_list,
                                  const std::vector<uint64_t>& b_list) {
    if (a_list.size() != b_list.size() || a_list.empty())
        throw DomainError("a_list and b_list must be nonempty and of equal length");
    for (size_t i = 0; i < a_list.size(); ++i)
        if (a_list[i] > b_list[i])
            throw DomainError("a_" + std::to_string(i + 1) + " > b_" + std::to_string(i + 1));
    const uint64_t sa = std::accumulate(a_list.begin(), a_list.end(), uint64_t{0});
    const uint64_t sb = std::accumulate(b_list.begin(), b_list.end(), uint64_t{0});
    if (!(2 * genus - 2 < sa))
        throw DomainError("sum(a) = " + std::to_string(sa) + " must exceed 2g-2 = " +
                          std::to_string(2 * genus - 2));
    if (!(sa < sb)) throw DomainError("sum(a) must be strictly below sum(b)");
    if (!(sb < n)) throw DomainError("sum(b) = " + std::to_string(sb) + " must be below n");
    QuantumParams q;
    q.n = n;
    q.s = sb - sa;
    q.d_bound = std::min(n - sb, sa - (2 * genus - 2));
    q.deltaQ_bound = n - q.s - 2 * q.d_bound + 2;
    q.DeltaQ_bound = Rational{q.deltaQ_bound, n};
    return q;
}

QuantumParams css_nested_dual(const NumericalSemigroup& S, uint64_t genus, uint64_t n, uint64_t ell,
                              uint64_t s) {
    const uint64_t g = genus;
    const bool theorem_regime = (ell >= 3 * g - 1) && (ell <= n - g) && (s >= 1) && (s <= n - 2 * ell);
    const bool table_regime = (ell >= 2 * g) && (ell <= 3 * g - 2) && (s == n - 2 * ell);
    if (!theorem_regime && !table_regime)
        throw DomainError("(ell, s) = (" + std::to_string(ell) + ", " + std::to_string(s) +
                          ") outside both the ell >= 3g-1 range and the table regime");
    QuantumParams q;
    q.n = n;
    q.s = s;
    q.d_bound = ell + 1 - g;
    q.deltaQ_bound = n - s - 2 * q.d_bound + 2;
    q.DeltaQ_bound = Rational{q.deltaQ_bound, n};
    // cross-check the minimum in d >= min(d_ord(C_ell), d1*) when s = n - 2*ell:
    // both branches are >= ell+1-g, so the bound is attained by the d_ord branch
    if (s == n - 2 * ell) {
        const uint64_t d_ord_branch = S.d_ord(ell);
        const uint64_t rho_ls = S.rho(ell + s);
        const uint64_t d1_star = n - rho_ls;  // Goppa bound on the inner code
        if (std::min(d_ord_branch, d1_star) < q.d_bound)
            throw Error("nested-dual bound inconsistency at ell = " + std::to_string(ell));
    }
    return q;
}

std::vector<QuantumParams> quantum_table(const NumericalSemigroup& S, uint64_t genus, uint64_t n) {
    std::vector<QuantumParams> rows;
    const uint64_t g = genus;
    // printed rows run from ell = 2g to ell = 3g+1 with s = n - 2*ell; the
    // text states the range as 2g .. 3g-2, so the last three rows are kept
    // but flagged
    for (uint64_t ell = 2 * g; ell <= 3 * g + 1; ++ell) {
        QuantumParams row = css_nested_dual(S, g, n, ell, n - 2 * ell);
        row.beyond_text_range = ell > 3 * g - 2;
        rows.push_back(row);
    }
    return rows;
}

ConvParams conv_params(const NumericalSemigroup& S, uint64_t genus, uint64_t n, uint64_t rho_ell,
                       uint64_t s) {
    const uint64_t g = genus;
    if (!(rho_ell > 2 * g - 2 && rho_ell < n))
        throw DomainError("rho_ell = " + std::to_string(rho_ell) +
                          " outside the interval (2g-2, n)");
    if (!S.contains(rho_ell))
        throw DomainError("rho_ell = " + std::to_string(rho_ell) + " is not a nongap");
    const uint64_t k = rho_ell + 1 - g;
    if (s == 0 || 2 * s > k)
        throw DomainError("s = " + std::to_string(s) + " violates 1 <= s <= k/2 with k = " +
                          std::to_string(k));
    const uint64_t ell = S.index_of(rho_ell);
    ConvParams c;
    c.n = n;
    c.dimension = k - s;
    c.degree = s;
    c.memory = 1;
    c.d_f_bound = S.d_ord(ell);
    return c;
}

} // namespace curvecodes
