#include "curvecodes/rr_basis.hpp"

#include <string>

namespace curvecodes {

MonomialSolver::MonomialSolver(std::array<uint64_t, 5> poles, uint64_t bound)
    : poles_(poles), bound_(bound) {
    for (uint64_t p : poles_)
        if (p == 0) throw DomainError("pole orders must be positive");
    for (int i = 4; i >= 0; --i) {
        auto& rep = suffix_rep_[static_cast<size_t>(i)];
        rep.assign(bound_ + 1, false);
        rep[0] = true;
        for (uint64_t s = 0; s <= bound_; ++s) {
            if (!rep[s]) continue;
            for (int j = i; j < 5; ++j) {
                const uint64_t nxt = s + poles_[static_cast<size_t>(j)];
                if (nxt <= bound_) rep[nxt] = true;
            }
        }
    }
}

bool MonomialSolver::representable(uint64_t s) const {
    if (s > bound_) throw HorizonError("monomial solver bound exceeded");
    return suffix_rep_[0][s];
}

Monomial MonomialSolver::monomial_for(uint64_t s) const {
    if (!representable(s))
        throw DomainError("pole order " + std::to_string(s) + " is a gap: no monomial");
    Monomial m;
    uint64_t rem = s;
    for (int i = 0; i < 4; ++i) {
        uint32_t e = 0;
        while (!(rem >= static_cast<uint64_t>(e) * poles_[static_cast<size_t>(i)] &&
                 suffix_rep_[static_cast<size_t>(i) + 1]
                            [rem - static_cast<uint64_t>(e) * poles_[static_cast<size_t>(i)]]))
            ++e;
        m.e[static_cast<size_t>(i)] = e;
        rem -= static_cast<uint64_t>(e) * poles_[static_cast<size_t>(i)];
    }
    m.e[4] = static_cast<uint32_t>(rem / poles_[4]);
    return m;
}

BasisSpec basis(const NumericalSemigroup& S, const MonomialSolver& solver, uint64_t rho,
                uint64_t expected_genus) {
    if (rho > solver.bound())
        throw HorizonError("basis cap exceeds the monomial solver bound");
    const uint64_t g = S.genus();
    if (rho + 1 >= 2 * g && g != expected_genus)
        throw Error("semigroup genus " + std::to_string(g) + " does not match the certified genus " +
                    std::to_string(expected_genus) + "; refusing a basis claimed to span L(rho P)");
    BasisSpec b;
    b.rho_cap = rho;
    b.poles = solver.poles();
    for (uint64_t s = 0; s <= rho; ++s) {
        if (!S.contains(s)) continue;
        Monomial m = solver.monomial_for(s);
        b.pole_orders.push_back(s);
        b.monomials.push_back(m);
    }
    if (rho >= 2 * g - 1 && b.dimension() != rho - g + 1)
        throw Error("Riemann-Roch dimension mismatch at rho = " + std::to_string(rho));
    return b;
}

Fe evaluate(const Field& F, const Monomial& mon, const CurvePoint& P) {
    const std::array<Fe, 5> coord{P.x, P.y, P.z, P.t, P.w};
    uint64_t acc = 0;  // log accumulator
    for (int i = 0; i < 5; ++i) {
        const uint32_t e = mon.e[static_cast<size_t>(i)];
        if (e == 0) continue;
        if (coord[static_cast<size_t>(i)].code == 0) return Fe{0};
        acc += static_cast<uint64_t>(F.log(coord[static_cast<size_t>(i)])) * e;
    }
    return F.exp(static_cast<uint32_t>(acc % F.order()));
}

} // namespace curvecodes
