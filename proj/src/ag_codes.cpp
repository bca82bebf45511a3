#include "curvecodes/ag_codes.hpp"

#include <algorithm>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace curvecodes {

std::string Rational::to_decimal(int significant) const {
    if (num == 0) return "0";
    if (num >= den) throw DomainError("to_decimal expects a value in [0, 1)");
    // position of the first significant digit after the decimal point
    int lead = 1;
    unsigned __int128 scaled = (unsigned __int128)num * 10;
    while (scaled < den) {
        scaled *= 10;
        ++lead;
    }
    // digits = round(num/den * 10^(lead + significant - 1)), half up
    unsigned __int128 v = num;
    for (int i = 0; i < lead + significant - 1; ++i) v *= 10;
    unsigned __int128 digits = (2 * v + den) / (2 * (unsigned __int128)den);
    std::string ds;
    while (digits > 0) {
        ds.push_back(static_cast<char>('0' + static_cast<int>(digits % 10)));
        digits /= 10;
    }
    std::reverse(ds.begin(), ds.end());
    if (static_cast<int>(ds.size()) > significant) --lead;  // rounding carried over
    std::string out = "0.";
    for (int i = 1; i < lead; ++i) out += "0";
    out += ds;
    return out;
}

OnePointCodes::OnePointCodes(const Field& F, const PointSet& pts, const CurveSpec& spec)
    : F_(F), pts_(pts), spec_(spec),
      n_(pts.size()),
      g_(spec.genus.convert_to<uint64_t>()),
      S_(NumericalSemigroup::from_generators(
          [&] {
              std::vector<uint64_t> gens;
              for (const bigint& p : spec.infinity_pole_orders)
                  gens.push_back(p.convert_to<uint64_t>());
              return gens;
          }(),
          pts.size() + 2 * spec.genus.convert_to<uint64_t>())),
      solver_(
          [&] {
              std::array<uint64_t, 5> poles{};
              for (size_t i = 0; i < 5; ++i)
                  poles[i] = spec.infinity_pole_orders.at(i).convert_to<uint64_t>();
              return poles;
          }(),
          pts.size() + 2 * spec.genus.convert_to<uint64_t>()) {
    if (S_.genus() != g_)
        throw Error("semigroup genus does not match the curve genus; pole-order data inconsistent");
    logs_.reserve(n_);
    for (uint32_t i = 0; i < n_; ++i) {
        const CurvePoint& P = pts_[i];
        if (P.t.code == 0) {
            tzero_index_.push_back(i);
            continue;
        }
        // off the t = 0 fiber all five coordinates are nonzero
        logs_.push_back({F_.log(P.x), F_.log(P.y), F_.log(P.z), F_.log(P.t), F_.log(P.w)});
        tnz_index_.push_back(i);
    }
}

namespace {

// fold a value < 2^32 into [0, 2^12 - 2], using 2^12 = 1 (mod 4095)
inline uint32_t fold4095(uint32_t v) {
    v = (v & 4095u) + (v >> 12);
    v = (v & 4095u) + (v >> 12);
    if (v >= 4095u) v -= 4095u;
    return v;
}

} // namespace

CodeParams OnePointCodes::one_point_params(uint64_t r) const {
    if (r >= n_)
        throw DomainError("deg G = " + std::to_string(r) + " >= n: the evaluation map is not injective");
    CodeParams c;
    c.n = n_;
    c.deg_G = r;
    c.dstar = n_ - r;
    uint64_t k = 0;
    for (uint64_t s = 0; s <= r; ++s)
        if (S_.contains(s)) ++k;
    c.k = k;
    return c;
}

GfBitMatrix OnePointCodes::generator_matrix(uint64_t r, const std::vector<uint32_t>& columns,
                                            int threads) const {
    const BasisSpec b = basis(S_, solver_, r, g_);
    return evaluation_matrix(F_, pts_, b, columns, threads);
}

RankCheck OnePointCodes::rank_check(uint64_t r, bool full_width, int threads) const {
    RankCheck rc;
    rc.r = r;
    rc.k = one_point_params(r).k;
    rc.full_width = full_width;
    std::vector<uint32_t> cols;
    if (!full_width && r + 1 < n_) {
        cols.resize(static_cast<size_t>(r) + 1);
        for (uint32_t i = 0; i <= r; ++i) cols[i] = i;
    }
    rc.columns_used = cols.empty() ? n_ : cols.size();
    GfBitMatrix M = generator_matrix(r, cols, threads);
    rc.rank = M.rank_destructive(F_, threads);
    rc.ok = (rc.rank == rc.k);
    return rc;
}

CodeParams OnePointCodes::dual_code_params(uint64_t ell) const {
    if (ell == 0 || ell > n_) throw DomainError("ell out of range [1, n]");
    CodeParams c;
    c.n = n_;
    c.k = n_ - ell;
    c.ell = ell;
    c.rho_ell = S_.rho(ell);
    c.d_ord = S_.d_ord(ell);
    c.delta_bound = c.n + 1 - c.k - *c.d_ord;
    c.Delta_bound = Rational{*c.delta_bound, c.n};
    const int64_t dual_goppa = static_cast<int64_t>(*c.rho_ell) - static_cast<int64_t>(2 * g_ - 2);
    c.dual_goppa_bound = dual_goppa;
    return c;
}

std::vector<CodeParams> OnePointCodes::dord_table(uint64_t ell_lo, uint64_t ell_hi) const {
    std::vector<CodeParams> out;
    if (ell_hi < ell_lo) return out;
    out.resize(ell_hi - ell_lo + 1);
    const int64_t lo = static_cast<int64_t>(ell_lo);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (int64_t ell = lo; ell <= static_cast<int64_t>(ell_hi); ++ell)
        out[static_cast<size_t>(ell - lo)] = dual_code_params(static_cast<uint64_t>(ell));
    return out;
}

EquivalenceReport OnePointCodes::monomial_equivalence_check(uint64_t r, DivisorChoice divisor) const {
    EquivalenceReport rep;
    rep.r = r;
    rep.divisor = divisor;
    uint64_t zeros = 0, size = 0;
    for (const CurvePoint& P : pts_.points()) {
        if (divisor == DivisorChoice::TNonzero && P.t.code == 0) continue;
        ++size;
        // t(P)^r = 0 iff t(P) = 0 and r >= 1
        if (r >= 1 && P.t.code == 0) ++zeros;
    }
    rep.divisor_size = size;
    rep.zero_diagonal_entries = zeros;
    rep.invertible = (zeros == 0);
    return rep;
}

Fe OnePointCodes::power_sum(uint64_t s) const {
    const Monomial mon = solver_.monomial_for(s);
    const uint32_t* exp = F_.exp_table();
    uint32_t acc = 0;
    for (const auto& L : logs_) {
        uint32_t v = 0;
        for (int i = 0; i < 5; ++i) v += mon.e[static_cast<size_t>(i)] * L[static_cast<size_t>(i)];
        acc ^= exp[fold4095(v)];
    }
    for (uint32_t idx : tzero_index_) acc ^= evaluate(F_, mon, pts_[idx]).code;
    return Fe{acc};
}

CastleReport OnePointCodes::castle_duality_check(uint64_t seed, int threads) const {
    CastleReport rep;
    rep.n = n_;
    rep.sweep_limit = n_ + 2 * g_ - 2 - S_.rho(2);  // smallest positive nongap is rho(2)
    const uint32_t* exp = F_.exp_table();

    // phi(T) = prod over the fiber values (T - alpha); char 2, so T + alpha
    std::vector<uint32_t> phi{1};
    for (Fe alpha : pts_.t_values()) {
        std::vector<uint32_t> nxt(phi.size() + 1, 0);
        for (size_t i = 0; i < phi.size(); ++i) {
            nxt[i + 1] ^= phi[i];
            nxt[i] ^= F_.mul(Fe{phi[i]}, alpha).code;
        }
        phi = std::move(nxt);
    }
    for (size_t i = 0; i < phi.size(); ++i)
        if (phi[i]) rep.phi_coefficients.emplace_back(i, phi[i]);
    // derivative: odd-degree terms survive
    std::vector<uint32_t> dphi(phi.size() - 1, 0);
    for (size_t i = 1; i < phi.size(); i += 2) dphi[i - 1] = phi[i];
    const auto eval_poly = [&](const std::vector<uint32_t>& p, Fe v) {
        Fe acc{0};
        for (size_t i = p.size(); i-- > 0;) acc = F_.add(F_.mul(acc, v), Fe{p[i]});
        return acc;
    };

    // weight log per t-fiber: log(1 / phi'(alpha))
    std::set<uint32_t> distinct;
    std::vector<uint32_t> weight_log_of_t(F_.size(), 0);
    for (Fe alpha : pts_.t_values()) {
        const Fe d = eval_poly(dphi, alpha);
        if (d.code == 0) throw Error("phi' vanishes on a fiber value; simple-zero structure violated");
        distinct.insert(d.code);
        weight_log_of_t[alpha.code] = F_.log(F_.inv(d));
    }
    rep.phi_prime_values_on_fibers.assign(distinct.begin(), distinct.end());

    // per-point weight logs aligned with logs_
    std::vector<uint32_t> wlog(logs_.size());
    for (size_t i = 0; i < logs_.size(); ++i)
        wlog[i] = weight_log_of_t[pts_[tnz_index_[i]].t.code];
    const uint32_t wlog_t0 = weight_log_of_t[0];

    // sweep all nongaps <= limit, plain and twisted
    std::vector<uint64_t> nongaps;
    for (uint64_t s = 0; s <= rep.sweep_limit; ++s)
        if (S_.contains(s)) nongaps.push_back(s);
    rep.nongaps_swept = nongaps.size();

    std::vector<uint8_t> plain_bad(nongaps.size(), 0), twisted_bad(nongaps.size(), 0);
    const int64_t nng = static_cast<int64_t>(nongaps.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) \
    num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (int64_t i = 0; i < nng; ++i) {
        const Monomial mon = solver_.monomial_for(nongaps[static_cast<size_t>(i)]);
        uint32_t plain = 0, twisted = 0;
        for (size_t j = 0; j < logs_.size(); ++j) {
            const auto& L = logs_[j];
            uint32_t v = 0;
            for (int c = 0; c < 5; ++c) v += mon.e[static_cast<size_t>(c)] * L[static_cast<size_t>(c)];
            plain ^= exp[fold4095(v)];
            twisted ^= exp[fold4095(v + wlog[j])];
        }
        for (uint32_t idx : tzero_index_) {
            const uint32_t val = evaluate(F_, mon, pts_[idx]).code;
            plain ^= val;
            if (val) twisted ^= exp[fold4095(F_.log(Fe{val}) + wlog_t0)];
        }
        plain_bad[static_cast<size_t>(i)] = plain != 0;
        twisted_bad[static_cast<size_t>(i)] = twisted != 0;
    }
    (void)threads;
    for (size_t i = 0; i < nongaps.size(); ++i) {
        if (plain_bad[i]) rep.plain_failures.push_back(nongaps[i]);
        if (twisted_bad[i]) rep.twisted_failures.push_back(nongaps[i]);
    }

    // randomized pairwise orthogonality at r = 392
    const uint64_t r = 2 * g_;  // 392
    const uint64_t r_perp = n_ + 2 * g_ - 2 - r;
    const BasisSpec br = basis(S_, solver_, r, g_);
    const BasisSpec bp = basis(S_, solver_, r_perp, g_);
    rep.k_r = br.dimension();
    rep.k_r_perp = bp.dimension();  // = r_perp - g + 1, asserted inside basis()
    rep.dimension_identity_ok = (rep.k_r + rep.k_r_perp == n_);

    rep.pair_check.seed = seed;
    rep.pair_check.pairs = 10000;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> da(0, br.dimension() - 1), db(0, bp.dimension() - 1);
    for (uint64_t it = 0; it < rep.pair_check.pairs; ++it) {
        const Monomial& ma = br.monomials[da(rng)];
        const Monomial& mb = bp.monomials[db(rng)];
        Monomial prod;
        for (int c = 0; c < 5; ++c) prod.e[static_cast<size_t>(c)] =
            ma.e[static_cast<size_t>(c)] + mb.e[static_cast<size_t>(c)];
        uint32_t plain = 0, twisted = 0;
        for (size_t j = 0; j < logs_.size(); ++j) {
            const auto& L = logs_[j];
            uint32_t v = 0;
            for (int c = 0; c < 5; ++c) v += prod.e[static_cast<size_t>(c)] * L[static_cast<size_t>(c)];
            plain ^= exp[fold4095(v)];
            twisted ^= exp[fold4095(v + wlog[j])];
        }
        for (uint32_t idx : tzero_index_) {
            const uint32_t val = evaluate(F_, prod, pts_[idx]).code;
            plain ^= val;
            if (val) twisted ^= exp[fold4095(F_.log(Fe{val}) + wlog_t0)];
        }
        if (plain) ++rep.pair_check.plain_failures;
        if (twisted) ++rep.pair_check.twisted_failures;
    }

    rep.plain_pass = rep.plain_failures.empty();
    rep.twisted_pass = rep.twisted_failures.empty() && rep.pair_check.twisted_failures == 0;
    return rep;
}

} // namespace curvecodes
