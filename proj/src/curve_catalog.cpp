#include "curvecodes/curve_catalog.hpp"

namespace curvecodes {

std::string family_name(CurveFamily f) {
    switch (f) {
        case CurveFamily::Suzuki: return "suzuki";
        case CurveFamily::Ree: return "ree";
        case CurveFamily::SuzukiCover: return "suzuki-cover";
        case CurveFamily::ReeCover: return "ree-cover";
    }
    return "?";
}

CurveFamily family_from_name(const std::string& name) {
    if (name == "suzuki") return CurveFamily::Suzuki;
    if (name == "ree") return CurveFamily::Ree;
    if (name == "suzuki-cover") return CurveFamily::SuzukiCover;
    if (name == "ree-cover") return CurveFamily::ReeCover;
    throw DomainError("unknown curve family '" + name + "'");
}

CurveSpec make_curve(CurveFamily family, unsigned s) {
    if (s < 1) throw DomainError("s must be >= 1");
    CurveSpec c;
    c.family = family;
    c.s = s;
    const bool suzuki_side = (family == CurveFamily::Suzuki || family == CurveFamily::SuzukiCover);
    c.p = suzuki_side ? 2 : 3;
    c.q0 = 1;
    for (unsigned i = 0; i < s; ++i) c.q0 *= c.p;
    c.q = c.p * c.q0 * c.q0;
    c.maximality_exponent = suzuki_side ? 4 : 6;

    const bigint& q = c.q;
    const bigint& q0 = c.q0;
    switch (family) {
        case CurveFamily::Suzuki:
            c.m = 1;
            c.genus = q0 * (q - 1);
            c.rational_points = q * q + 1;
            // pole orders of x, y at the infinite place, read off the defining equation
            c.infinity_pole_orders = {q, q + q0};
            break;
        case CurveFamily::Ree:
            c.m = 1;
            c.genus = 3 * q0 * (q - 1) * (q + q0 + 1) / 2;
            c.rational_points = q * q * q + 1;
            c.infinity_pole_orders = {q, q + q0, q + 2 * q0};
            break;
        case CurveFamily::SuzukiCover: {
            c.m = q - 2 * q0 + 1;
            bigint num = q * q * q - 2 * q * q + q;
            if (num % 2 != 0) throw Error("genus numerator not even");
            c.genus = num / 2;
            c.rational_points = q * q + 1;
            // x, y, z, t, w
            c.infinity_pole_orders = {q * q - 2 * q * q0 + q, q * q - q * q0 + q0,
                                      q * q - q + 2 * q0, q * q, q * q + 1};
            break;
        }
        case CurveFamily::ReeCover: {
            c.m = q - 3 * q0 + 1;
            bigint num = q * q * q * q - 2 * q * q * q + q;
            if (num % 2 != 0) throw Error("genus numerator not even");
            c.genus = num / 2;
            c.rational_points = q * q * q + 1;
            // x, y, z, t; the full generating set of H(P_inf) is not known
            c.infinity_pole_orders = {c.m * q * q, c.m * q * (q + q0), c.m * q * (q + 2 * q0),
                                      q * q * q};
            break;
        }
    }
    return c;
}

const std::vector<DifferentContributionCase>& different_contribution_cases(CurveFamily family) {
    static const std::vector<DifferentContributionCase> suzuki = {
        {"o(sigma) = 2", "m(2q0+1)+1", "1"},
        {"o(sigma) = 4", "m+1", "1"},
        {"o(sigma) | q-1", "2", "2"},
        {"o(sigma) | q+2q0+1", "0", "0"},
        {"o(sigma) | q-2q0+1", "0", "4m for one power, else 0"},
        {"sigma = id, tau^k (k != 0)", "-", "q^2+1"},
    };
    static const std::vector<DifferentContributionCase> ree = {
        {"o(sigma) = 3, central in a Sylow 3-subgroup", "m(q+3q0+1)+1", "1"},
        {"o(sigma) = 3, non-central", "m(3q0+1)+1", "1"},
        {"o(sigma) = 9", "m+1", "1"},
        {"o(sigma) = 2", "q+1", "q+1"},
        {"o(sigma) = 6", "1", "1"},
        {"o(sigma) | q-1, o != 2", "2", "2"},
        {"o(sigma) | q+1, o != 2", "0", "0"},
        {"o(sigma) | q+3q0+1", "0", "0"},
        {"o(sigma) | q-3q0+1", "0", "6m for one power, else 0"},
        {"sigma = id, tau^k (k != 0)", "-", "q^3+1"},
    };
    if (family == CurveFamily::SuzukiCover || family == CurveFamily::Suzuki) return suzuki;
    return ree;
}

HurwitzReport hurwitz_quotient_check(const CurveSpec& spec) {
    HurwitzReport r;
    if (!spec.is_cover()) {
        // m = 1: trivially 2g-2 = 2g-2
        r.lhs = 2 * spec.genus - 2;
        r.cover_term = r.lhs;
        r.tau_term = 0;
        r.rhs = r.lhs;
        r.ok = true;
        return r;
    }
    const auto base = make_curve(
        spec.family == CurveFamily::SuzukiCover ? CurveFamily::Suzuki : CurveFamily::Ree, spec.s);
    r.lhs = 2 * spec.genus - 2;
    r.cover_term = spec.m * (2 * base.genus - 2);
    // every nontrivial power of tau fixes exactly the F_q-rational places
    r.tau_term = (spec.m - 1) * spec.rational_points;
    r.rhs = r.cover_term + r.tau_term;
    r.ok = (r.lhs == r.rhs);
    return r;
}

AutOrders aut_orders(const CurveSpec& spec) {
    if (!spec.is_cover()) throw DomainError("aut_orders is defined for the cover families");
    const bigint& q = spec.q;
    bigint simple_order;
    if (spec.family == CurveFamily::SuzukiCover)
        simple_order = (q * q + 1) * q * q * (q - 1);
    else
        simple_order = (q * q * q + 1) * q * q * q * (q - 1);
    AutOrders out;
    out.curve_aut_order = simple_order * spec.m;
    // evaluation field F_{q^E} with q = p^(2s+1): field automorphism count (2s+1)E
    const unsigned E = static_cast<unsigned>(spec.maximality_exponent);
    const unsigned field_deg = (2 * spec.s + 1) * E;
    bigint eval_size = 1;
    for (unsigned i = 0; i < E; ++i) eval_size *= q;
    out.code_aut_subgroup_order = out.curve_aut_order * field_deg * (eval_size - 1);
    return out;
}

MultipointParams multipoint_params(const CurveSpec& spec, const bigint& r) {
    if (!spec.is_cover()) throw DomainError("multipoint_params is defined for the cover families");
    const bigint& q = spec.q;
    MultipointParams out;
    out.q = q;
    out.r = r;
    bigint r_upper;
    if (spec.family == CurveFamily::SuzukiCover) {
        out.n = q * q * q * q * q - q * q * q * q + q * q * q - q * q;
        out.deg_G = r * (q * q + 1);
        r_upper = q * q * q - q * q;
    } else {
        bigint q3 = q * q * q;
        out.n = q3 * q3 * q - q3 * q3 + q3 * q - q3;
        out.deg_G = r * (q3 + 1);
        r_upper = q3 * q - q3;
    }
    out.dstar = out.n - out.deg_G;
    if (r > q - 2 && r < r_upper) {
        out.k = out.deg_G + 1 - spec.genus;
        out.valid = true;
    } else {
        out.valid = false;
        out.note = "r outside the open interval (q-2, " + r_upper.str() +
                   "): dimension not determined by Riemann-Roch here";
    }
    return out;
}

} // namespace curvecodes
