#ifndef CURVECODES_CURVE_CATALOG_HPP
#define CURVECODES_CURVE_CATALOG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "curvecodes/errors.hpp"

namespace curvecodes {

using bigint = boost::multiprecision::cpp_int;

enum class CurveFamily { Suzuki, Ree, SuzukiCover, ReeCover };

std::string family_name(CurveFamily f);
CurveFamily family_from_name(const std::string& name);

/// Closed-form constants of one curve in the Suzuki/Ree tower, all derived
/// from s with exact big-integer arithmetic (Ree quantities overflow 64 bits
/// from s = 2 on).
struct CurveSpec {
    CurveFamily family;
    unsigned s = 1;
    int p = 2;                 ///< 2 for the Suzuki side, 3 for the Ree side
    bigint q0, q;              ///< q0 = p^s, q = p*q0^2
    bigint m;                  ///< Kummer cover degree; 1 for the base curves
    bigint genus;
    bigint rational_points;    ///< F_q-rational places, including the infinite one
    int maximality_exponent = 4;  ///< maximal over F_{q^this}
    std::vector<bigint> infinity_pole_orders;  ///< pole orders of the coordinate functions at P_inf

    bool is_cover() const {
        return family == CurveFamily::SuzukiCover || family == CurveFamily::ReeCover;
    }
};

CurveSpec make_curve(CurveFamily family, unsigned s);

/// One row of the ramification data: how much an automorphism of the given
/// kind contributes to the different divisor.  Kept as static documentation;
/// only the tau rows enter computations.
struct DifferentContributionCase {
    std::string order_condition;
    std::string i_sigma;
    std::string i_sigma_tau;
};

const std::vector<DifferentContributionCase>& different_contribution_cases(CurveFamily family);

/// 2g~ - 2 = m(2g-2) + (m-1)(fixed points of tau), where tau generates the
/// Galois group of the cyclic cover and fixes every F_q-rational place.
struct HurwitzReport {
    bigint lhs, rhs;
    bigint cover_term, tau_term;
    bool ok = false;
};

HurwitzReport hurwitz_quotient_check(const CurveSpec& spec);

struct AutOrders {
    bigint curve_aut_order;          ///< |simple group| * m
    bigint code_aut_subgroup_order;  ///< curve order * |Aut(F_eval)| * |F_eval^*|
};

AutOrders aut_orders(const CurveSpec& spec);

/// Parameters of the multi-point code with G = r * (sum of all F_q-rational
/// places) and D = all remaining rational places of the evaluation field.
/// k comes from Riemann-Roch and is only valid on the stated open interval
/// for r; outside it the record is flagged rather than rejected.
struct MultipointParams {
    bigint q, r, n, deg_G, dstar;
    std::optional<bigint> k;  ///< set only when the Riemann-Roch branch applies
    bool valid = false;
    std::string note;
};

MultipointParams multipoint_params(const CurveSpec& spec, const bigint& r);

} // namespace curvecodes

#endif
