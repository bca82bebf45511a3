#ifndef CURVECODES_SEMIGROUP_HPP
#define CURVECODES_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

#include "curvecodes/errors.hpp"

namespace curvecodes {

/// Numerical semigroup generated by a gcd-1 set of positive integers,
/// enumerated up to a horizon that is always at least 2*conductor + 2, so
/// every nu / d_ord query below the horizon is exact.
///
/// Indexing convention: rho(1) = 0, rho strictly increasing (the tables the
/// project reproduces are keyed as k = n - ell under this convention).
class NumericalSemigroup {
public:
    static NumericalSemigroup from_generators(std::vector<uint64_t> generators,
                                              uint64_t bound_hint = 0);

    const std::vector<uint64_t>& generators() const { return gens_; }
    uint64_t bound() const { return bound_; }
    uint64_t conductor() const { return conductor_; }
    uint64_t genus() const { return genus_; }
    uint64_t largest_gap() const;      ///< conductor - 1 for nontrivial semigroups
    std::vector<uint64_t> gaps() const;
    uint64_t nongap_count() const { return static_cast<uint64_t>(nongaps_.size()); }

    /// Membership; exact for every s (s >= conductor is always a member).
    bool contains(uint64_t s) const {
        if (s <= bound_) return member_[s];
        return true;  // bound_ >= 2c+2 > conductor
    }

    /// ell-th smallest member, rho(1) = 0.  Throws HorizonError past the horizon.
    uint64_t rho(uint64_t ell) const;
    /// Inverse of rho for members.
    uint64_t index_of(uint64_t member) const;

    /// Feng-Rao function: ordered pairs of members summing to rho(ell+1).
    uint64_t nu(uint64_t ell) const;

    /// Order bound min{nu(m) : m >= ell}.  The scan stops once
    /// rho(m+1) >= 2c-1, where nu(m) = rho(m+1)+1-2g and is strictly
    /// increasing, so the minimum closes with a finite scan.
    uint64_t d_ord(uint64_t ell) const;

    /// True iff 2g-1 is a gap.  Also verifies the pairing
    /// (s member <=> 2g-1-s gap) and throws Error on any mismatch.
    bool is_symmetric() const;

    /// Re-enumerated copy with a bound of at least new_bound.
    NumericalSemigroup with_bound(uint64_t new_bound) const;

private:
    NumericalSemigroup() = default;
    std::vector<uint64_t> gens_;
    uint64_t bound_ = 0;
    uint64_t conductor_ = 0;
    uint64_t genus_ = 0;
    std::vector<bool> member_;
    std::vector<uint64_t> nongaps_;
};

/// Telescopic test for an ordered generator sequence: gcd of the whole
/// sequence is 1 and each a_i/d_i lies in the semigroup generated by the
/// scaled prefix (d_i = gcd of the first i entries).
bool is_telescopic(const std::vector<uint64_t>& sequence);

/// Shortcut evaluations for d_ord on a symmetric semigroup, each
/// cross-checked against the direct computation.
struct DordShortcuts {
    bool high_ell_applies = false;      ///< ell >= 3g-1
    uint64_t high_ell_value = 0;        ///< ell + 1 - g when applicable
    bool campillo_applies = false;      ///< rho(ell+1) = 2g-1+e with e a nonzero member
    uint64_t campillo_value = 0;        ///< nu(ell) when applicable
    uint64_t direct = 0;
    bool consistent = false;
};

DordShortcuts dord_shortcuts(const NumericalSemigroup& S, uint64_t ell);

} // namespace curvecodes

#endif
