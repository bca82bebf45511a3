#ifndef CURVECODES_RR_BASIS_HPP
#define CURVECODES_RR_BASIS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "curvecodes/gf.hpp"
#include "curvecodes/point_enum.hpp"
#include "curvecodes/semigroup.hpp"

namespace curvecodes {

/// x^a y^b z^c t^d w^e; pole order at P_inf is the weighted exponent sum,
/// because each of the five functions has its only pole there.
struct Monomial {
    std::array<uint32_t, 5> e{};  // exponents of x, y, z, t, w
    uint64_t pole_order(const std::array<uint64_t, 5>& poles) const {
        uint64_t s = 0;
        for (int i = 0; i < 5; ++i) s += poles[i] * e[i];
        return s;
    }
    bool operator==(const Monomial&) const = default;
};

/// Lexicographically-smallest-exponent representative per pole order.
/// Ties are impossible by construction: the solver minimizes a, then b, ...
/// A suffix-representability table makes each query a short greedy walk.
class MonomialSolver {
public:
    MonomialSolver(std::array<uint64_t, 5> poles, uint64_t bound);
    /// The canonical monomial with the given pole order; DomainError if the
    /// value is not representable (i.e. a gap).
    Monomial monomial_for(uint64_t s) const;
    bool representable(uint64_t s) const;
    uint64_t bound() const { return bound_; }
    const std::array<uint64_t, 5>& poles() const { return poles_; }

private:
    std::array<uint64_t, 5> poles_;
    uint64_t bound_;
    std::array<std::vector<bool>, 5> suffix_rep_;  // representable by poles_[i..4]
};

/// One monomial per nongap <= rho, in increasing pole order.
struct BasisSpec {
    uint64_t rho_cap = 0;
    std::array<uint64_t, 5> poles{};
    std::vector<Monomial> monomials;
    std::vector<uint64_t> pole_orders;
    uint64_t dimension() const { return monomials.size(); }
};

/// Builds the graded monomial basis.  For rho >= 2g-1 the count must equal
/// rho - g + 1 (Riemann-Roch); expected_genus is the curve genus certificate
/// and a mismatch with the semigroup genus refuses the request rather than
/// emitting a matrix that might not span the full space.
BasisSpec basis(const NumericalSemigroup& S, const MonomialSolver& solver, uint64_t rho,
                uint64_t expected_genus);

/// Log-table evaluation of a monomial at a point.
Fe evaluate(const Field& F, const Monomial& mon, const CurvePoint& P);

} // namespace curvecodes

#endif
