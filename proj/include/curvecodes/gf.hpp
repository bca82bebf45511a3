#ifndef CURVECODES_GF_HPP
#define CURVECODES_GF_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "curvecodes/errors.hpp"

namespace curvecodes {

/// Element of a finite field, identified by its integer code
/// sum_i coeff_i * p^i (little-endian coefficient encoding).
struct Fe {
    uint32_t code = 0;
    auto operator<=>(const Fe&) const = default;
};

/// GF(p^k) for p in {2,3}, k <= 20, with eagerly built discrete-log tables.
///
/// The modulus is verified irreducible at construction (trial division, so a
/// failure names a factor).  The generator is the smallest-code primitive
/// element; for every modulus shipped with this project that element is x
/// itself.  Immutable after construction; all operations are pure and safe
/// for concurrent readers.
class Field {
public:
    Field(int p, int k, std::vector<int> modulus);

    /// Canonical contexts with the documented moduli (built once, shared).
    static const Field& gf8();     ///< GF(2^3),  x^3 + x + 1
    static const Field& gf4096();  ///< GF(2^12), x^12 + x^6 + x^4 + x + 1
    static const Field& gf27();    ///< GF(3^3),  x^3 + 2x + 1
    static const Field& gf2_20();  ///< GF(2^20), x^20 + x^3 + 1 (slow-mode)

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    uint32_t size() const { return size_; }
    uint32_t order() const { return size_ - 1; }  ///< multiplicative group order
    const std::vector<int>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    Fe element(uint32_t code) const;
    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }
    Fe generator() const { return gen_; }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const {
        if (a.code == 0 || b.code == 0) return Fe{0};
        uint32_t s = log_[a.code] + log_[b.code];
        if (s >= order()) s -= order();
        return Fe{exp_[s]};
    }
    Fe inv(Fe a) const;
    Fe pow(Fe a, uint64_t e) const;
    Fe frobenius(Fe a) const { return pow(a, static_cast<uint64_t>(p_)); }

    uint32_t log(Fe a) const;          ///< discrete log of a nonzero element
    Fe exp(uint32_t e) const { return Fe{exp_[e % order()]}; }

    std::vector<int> coeffs(Fe a) const;
    Fe from_coeffs(const std::vector<int>& c) const;

    /// Subfield membership test a^q == a (subfields share the big-field codes).
    bool in_subfield(Fe a, uint32_t q) const { return pow(a, q) == a; }

    /// All y with y^q + y = c (sign '+') or y^q - y = c (sign '-').
    /// q must be a power of p whose exponent divides k.  The result is empty
    /// or a coset of the kernel of the additive map (size q), sorted by code.
    std::vector<Fe> solve_additive(uint32_t q, char sign, Fe c) const;

    /// All t with t^m = c, via the log tables; {0} for c = 0, otherwise
    /// gcd(m, order()) roots or none depending on divisibility of log(c).
    std::vector<Fe> nth_roots(uint64_t m, Fe c) const;

    /// Raw table access for batch kernels.
    const uint32_t* exp_table() const { return exp_.data(); }
    const uint32_t* log_table() const { return log_.data(); }

private:
    int p_, k_;
    uint32_t size_;
    std::vector<int> modulus_;
    Fe gen_;
    std::vector<uint32_t> exp_;  // size order(), exp_[i] = gen^i
    std::vector<uint32_t> log_;  // size size_, log_[0] unused

    std::vector<int> mul_coeffs(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Precomputed solver for the F_p-linear map y -> y^q +/- y on one context.
/// Builds the k x k prime-field matrix once; solve() is then a cheap
/// back-substitution plus kernel-coset enumeration.
class AdditiveSolver {
public:
    AdditiveSolver(const Field& F, uint32_t q, char sign);
    /// Solutions sorted by code; empty or exactly kernel-size many.
    std::vector<Fe> solve(Fe c) const;
    size_t kernel_size() const;

private:
    const Field& F_;
    int p_, k_;
    // row-reduced matrix [M | I] bookkeeping
    std::vector<std::vector<int>> rref_;    // k rows of length k
    std::vector<std::vector<int>> trans_;   // row ops applied, k x k
    std::vector<int> pivot_col_of_row_;
    std::vector<int> free_cols_;
    std::vector<std::vector<int>> kernel_basis_;
};

} // namespace curvecodes

#endif
