#include "curvecodes/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace curvecodes {

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<uint64_t> generators,
                                                       uint64_t bound_hint) {
    if (generators.empty()) throw DomainError("empty generator list");
    for (uint64_t g : generators)
        if (g == 0) throw DomainError("generators must be positive");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    uint64_t d = 0;
    for (uint64_t g : generators) d = std::gcd(d, g);
    if (d != 1)
        throw DomainError("gcd of generators is " + std::to_string(d) +
                          ", not 1: not a numerical semigroup");

    // enumerate, growing the horizon until bound >= 2*conductor + 2
    uint64_t bound = std::max<uint64_t>(bound_hint, 4 * generators.back());
    for (;;) {
        NumericalSemigroup S;
        S.gens_ = generators;
        S.bound_ = bound;
        S.member_.assign(bound + 1, false);
        S.member_[0] = true;
        for (uint64_t s = 0; s <= bound; ++s) {
            if (!S.member_[s]) continue;
            for (uint64_t g : generators) {
                if (s + g <= bound) S.member_[s + g] = true;
                else break;
            }
        }
        uint64_t last_gap = 0;
        bool any_gap = false;
        uint64_t genus = 0;
        for (uint64_t s = 0; s <= bound; ++s) {
            if (!S.member_[s]) { last_gap = s; any_gap = true; ++genus; }
        }
        // the frontier may still contain gaps if the horizon is too small
        uint64_t conductor = any_gap ? last_gap + 1 : 0;
        if (bound >= 2 * conductor + 2) {
            S.conductor_ = conductor;
            S.genus_ = genus;
            S.nongaps_.reserve(bound + 1 - genus);
            for (uint64_t s = 0; s <= bound; ++s)
                if (S.member_[s]) S.nongaps_.push_back(s);
            return S;
        }
        bound = std::max(2 * conductor + 2, 2 * bound);
    }
}

uint64_t NumericalSemigroup::largest_gap() const {
    if (genus_ == 0) throw DomainError("the full semigroup has no gaps");
    return conductor_ - 1;
}

std::vector<uint64_t> NumericalSemigroup::gaps() const {
    std::vector<uint64_t> out;
    out.reserve(genus_);
    for (uint64_t s = 0; s < conductor_; ++s)
        if (!member_[s]) out.push_back(s);
    return out;
}

uint64_t NumericalSemigroup::rho(uint64_t ell) const {
    if (ell == 0) throw DomainError("rho is 1-based (rho(1) = 0)");
    if (ell > nongaps_.size())
        throw HorizonError("rho(" + std::to_string(ell) + ") is beyond the horizon; re-enumerate with bound >= " +
                           std::to_string(conductor_ + ell));  // c + ell overshoots the ell-th member
    return nongaps_[ell - 1];
}

uint64_t NumericalSemigroup::index_of(uint64_t member) const {
    if (!contains(member)) throw DomainError(std::to_string(member) + " is not a member");
    if (member >= conductor_)
        return static_cast<uint64_t>(
                   std::lower_bound(nongaps_.begin(), nongaps_.end(), conductor_) - nongaps_.begin()) +
               (member - conductor_) + 1;
    auto it = std::lower_bound(nongaps_.begin(), nongaps_.end(), member);
    return static_cast<uint64_t>(it - nongaps_.begin()) + 1;
}

uint64_t NumericalSemigroup::nu(uint64_t ell) const {
    const uint64_t r = rho(ell + 1);
    uint64_t count = 0;
    for (uint64_t s = 0; s <= r; ++s)
        if (contains(s) && contains(r - s)) ++count;
    return count;
}

uint64_t NumericalSemigroup::d_ord(uint64_t ell) const {
    if (ell == 0) throw DomainError("ell must be >= 1");
    uint64_t best = UINT64_MAX;
    for (uint64_t m = ell;; ++m) {
        const uint64_t rm = rho(m + 1);
        if (rm >= 2 * conductor_ - 1) {
            // tail: nu(m) = rho(m+1)+1-2g from here on, strictly increasing
            best = std::min(best, rm + 1 - 2 * genus_);
            return best;
        }
        best = std::min(best, nu(m));
    }
}

bool NumericalSemigroup::is_symmetric() const {
    if (genus_ == 0) return false;  // 2g-1 = -1 undefined; N_0 is not symmetric in this sense
    const uint64_t g2 = 2 * genus_ - 1;
    const bool sym = !contains(g2);
    if (sym) {
        for (uint64_t s = 0; s <= g2; ++s)
            if (contains(s) == contains(g2 - s))
                throw Error("internal consistency failure: symmetry pairing violated at s = " +
                            std::to_string(s));
    }
    return sym;
}

NumericalSemigroup NumericalSemigroup::with_bound(uint64_t new_bound) const {
    return from_generators(gens_, std::max(new_bound, bound_));
}

bool is_telescopic(const std::vector<uint64_t>& sequence) {
    if (sequence.empty()) throw DomainError("empty sequence");
    for (uint64_t a : sequence)
        if (a == 0) throw DomainError("sequence entries must be positive");
    uint64_t dall = 0;
    for (uint64_t a : sequence) dall = std::gcd(dall, a);
    if (dall != 1) return false;
    if (sequence.size() == 1) return sequence[0] == 1;

    uint64_t d_prev = sequence[0];
    for (size_t i = 1; i < sequence.size(); ++i) {
        const uint64_t d_i = std::gcd(d_prev, sequence[i]);
        // membership of a_i/d_i in <a_1/d_{i-1}, ..., a_{i-1}/d_{i-1}>
        std::vector<uint64_t> scaled;
        scaled.reserve(i);
        for (size_t j = 0; j < i; ++j) scaled.push_back(sequence[j] / d_prev);
        const uint64_t target = sequence[i] / d_i;
        // scaled prefix has gcd 1 by construction
        auto S = NumericalSemigroup::from_generators(scaled, target + 1);
        if (!S.contains(target)) return false;
        d_prev = d_i;
    }
    return true;
}

DordShortcuts dord_shortcuts(const NumericalSemigroup& S, uint64_t ell) {
    if (!S.is_symmetric()) throw DomainError("shortcuts require a symmetric semigroup");
    DordShortcuts out;
    const uint64_t g = S.genus();
    out.direct = S.d_ord(ell);
    if (ell >= 3 * g - 1) {
        out.high_ell_applies = true;
        out.high_ell_value = ell + 1 - g;
    }
    const uint64_t r = S.rho(ell + 1);
    if (r >= 2 * g) {
        const uint64_t e = r - (2 * g - 1);
        if (e > 0 && S.contains(e)) {
            out.campillo_applies = true;
            out.campillo_value = S.nu(ell);
        }
    }
    out.consistent = (!out.high_ell_applies || out.high_ell_value == out.direct) &&
                     (!out.campillo_applies || out.campillo_value == out.direct);
    return out;
}

} // namespace curvecodes
