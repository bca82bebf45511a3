// Acceptance suite: runs the numbered criteria end to end and prints one
// PASS/FAIL line per criterion.  Exit status is nonzero if any requested
// criterion fails.  Expected tables are the frozen reference CSVs under
// tests/data (printed values, decimal separator normalized).

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "curvecodes/ag_codes.hpp"
#include "curvecodes/curve_catalog.hpp"
#include "curvecodes/derived_params.hpp"
#include "curvecodes/gf.hpp"
#include "curvecodes/point_enum.hpp"
#include "curvecodes/reference.hpp"
#include "curvecodes/rr_basis.hpp"
#include "curvecodes/semigroup.hpp"

using namespace curvecodes;

namespace {

struct Options {
    std::string data_dir = "tests/data";
    std::vector<int> criteria;  // empty = all
    int threads = 0;
    uint64_t seed = 1;
};

struct GoldenDordRow {
    uint64_t n, k, rho, dord, delta;
    std::string Delta_printed;
};

struct GoldenQuantumRow {
    uint64_t n, s, d;
    std::string DeltaQ_printed;
};

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

std::vector<GoldenDordRow> load_dord_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::string line;
    std::getline(in, line);  // header
    std::vector<GoldenDordRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto c = split_csv_line(line);
        rows.push_back({std::stoull(c[0]), std::stoull(c[1]), std::stoull(c[2]), std::stoull(c[3]),
                        std::stoull(c[4]), c[5]});
    }
    return rows;
}

std::vector<GoldenQuantumRow> load_quantum_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::string line;
    std::getline(in, line);
    std::vector<GoldenQuantumRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto c = split_csv_line(line);
        rows.push_back({std::stoull(c[0]), std::stoull(c[1]), std::stoull(c[2]), c[3]});
    }
    return rows;
}

// printed decimal (e.g. "0.0000342") vs exact num/den: the printed value must
// sit within one unit in its last printed digit of the exact rational.  The
// reference tables mix truncation and rounding, so exact-rounding equality is
// too strict, but sub-ulp agreement pins every digit that is actually right.
bool printed_matches(const std::string& printed, uint64_t num, uint64_t den) {
    const auto dot = printed.find('.');
    if (dot == std::string::npos) return false;
    const std::string frac = printed.substr(dot + 1);
    const int nd = static_cast<int>(frac.size());
    long double scale = 1.0L;
    for (int i = 0; i < nd; ++i) scale *= 10.0L;
    // |p - num/den| < 1/10^nd  <=>  |p_digits * den - num * 10^nd| < den
    unsigned long long p_digits = std::stoull(frac);
    const __int128 lhs = static_cast<__int128>(p_digits) * den;
    __int128 rhs = static_cast<__int128>(num);
    for (int i = 0; i < nd; ++i) rhs *= 10;
    const __int128 diff = lhs > rhs ? lhs - rhs : rhs - lhs;
    return diff < static_cast<__int128>(den);
}

struct Harness {
    Options opt;
    bool any_fail = false;
    // lazily built shared state
    std::unique_ptr<PointSet> pts;
    std::unique_ptr<OnePointCodes> codes;
    CurveSpec spec = make_curve(CurveFamily::SuzukiCover, 1);

    const PointSet& points() {
        if (!pts) pts = std::make_unique<PointSet>(enumerate_points(spec, Field::gf4096(), opt.threads));
        return *pts;
    }
    const OnePointCodes& one_point() {
        if (!codes) codes = std::make_unique<OnePointCodes>(Field::gf4096(), points(), spec);
        return *codes;
    }

    void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << std::endl;
        if (!pass) any_fail = true;
    }
};

void criterion1(Harness& h) {
    const auto golden = load_dord_golden(h.opt.data_dir + "/dord_table_q8.csv");
    const auto& codes = h.one_point();
    bool ok = golden.size() == 588;
    std::string detail = "rows=" + std::to_string(golden.size());
    uint64_t int_mismatch = 0, delta_mismatch = 0;
    for (const auto& g : golden) {
        const uint64_t ell = g.n - g.k;
        const auto row = codes.dual_code_params(ell);
        if (row.n != g.n || row.k != g.k || *row.rho_ell != g.rho || *row.d_ord != g.dord ||
            *row.delta_bound != g.delta)
            ++int_mismatch;
        if (!printed_matches(g.Delta_printed, *row.delta_bound, row.n)) ++delta_mismatch;
    }
    // spot anchors
    const std::vector<std::array<uint64_t, 3>> anchors{{29182, 40, 2},   {29103, 256, 8},
                                                       {29102, 257, 10}, {28997, 381, 30},
                                                       {28793, 586, 200}, {28595, 784, 394}};
    uint64_t anchor_bad = 0;
    for (const auto& a : anchors) {
        const auto row = codes.dual_code_params(29184 - a[0]);
        if (*row.rho_ell != a[1] || *row.d_ord != a[2]) ++anchor_bad;
    }
    ok = ok && int_mismatch == 0 && delta_mismatch == 0 && anchor_bad == 0;
    detail += ", integer mismatches=" + std::to_string(int_mismatch) +
              ", Delta mismatches=" + std::to_string(delta_mismatch) +
              ", anchor failures=" + std::to_string(anchor_bad);
    h.report(1, ok, "dord-table reproduces every printed row", detail);
}

void criterion2(Harness& h) {
    auto S8 = NumericalSemigroup::from_generators({40, 50, 60, 64, 65});
    const bool q8_ok =
        S8.genus() == 196 && S8.largest_gap() == 391 && S8.conductor() == 392 && S8.is_symmetric();
    auto S32 = NumericalSemigroup::from_generators({800, 900, 1000, 1024, 1025});
    const uint64_t expect32 = (32ull * 32 * 32 - 2 * 32 * 32 + 32) / 2;
    const bool match32 = S32.genus() == expect32;
    std::string detail = "q=8: genus=" + std::to_string(S8.genus()) +
                         ", conductor=" + std::to_string(S8.conductor()) +
                         ", symmetric=" + (S8.is_symmetric() ? std::string("yes") : std::string("no")) +
                         "; q=32 finding: generated-semigroup genus " + std::to_string(S32.genus()) +
                         (match32 ? " equals " : " DIFFERS from ") + std::to_string(expect32);
    h.report(2, q8_ok, "semigroup certificate", detail);
}

void criterion3(Harness& h) {
    const auto& pts = h.points();
    const bool ok = pts.size() == 29184 && pts.t_zero_count() == 64 &&
                    pts.size() + 1 == 4096 + 1 + 2 * 196 * 64;
    h.report(3, ok, "point enumeration",
             "points=" + std::to_string(pts.size()) + ", t=0 points=" +
                 std::to_string(pts.t_zero_count()) + ", maximality identity " +
                 (ok ? "holds" : "violated"));
}

void criterion4(Harness& h) {
    const auto r = verify_plane_model(h.points(), h.spec, Field::gf4096(), h.opt.threads);
    h.report(4, r.pass, "plane model vanishes on all points",
             "failures=" + std::to_string(r.failures) +
                 ", perturbed nonzero=" + std::to_string(r.control_nonzero) + "/" +
                 std::to_string(r.total));
}

void criterion5(Harness& h) {
    const auto r = t_fibers(h.points(), h.spec);
    h.report(5, r.pass, "weak-Castle fiber structure",
             std::to_string(r.fiber_count) + " fibers, uniform size " +
                 (r.uniform ? std::to_string(r.expected_size) : std::string("NO")));
}

void criterion6(Harness& h) {
    const auto rep = h.one_point().castle_duality_check(h.opt.seed, h.opt.threads);
    std::string detail = "nongaps swept=" + std::to_string(rep.nongaps_swept) +
                         ", plain failures=" + std::to_string(rep.plain_failures.size());
    if (!rep.plain_failures.empty()) {
        detail += " (first " + std::to_string(rep.plain_failures.front()) + ")";
    }
    h.report(6, rep.plain_pass, "duality power-sum sweep, plain", detail);
    // context line: the fiber-weighted sweep that the computed phi' dictates
    std::cout << "       note: weighted sweep (1/phi'(t)) failures="
              << rep.twisted_failures.size()
              << ", pair check plain/twisted failures=" << rep.pair_check.plain_failures << "/"
              << rep.pair_check.twisted_failures << "; see the verification report" << std::endl;
}

void criterion7(Harness& h) {
    const auto& codes = h.one_point();
    bool all_ok = true;
    std::string detail;
    for (uint64_t r : {392ull, 500ull, 1000ull, 5000ull, 14000ull}) {
        const bool full = r <= 1000;
        const auto rc = codes.rank_check(r, full, h.opt.threads);
        all_ok = all_ok && rc.ok && rc.k == r - 195;
        if (!detail.empty()) detail += ", ";
        detail += "r=" + std::to_string(r) + ":" + std::to_string(rc.rank) +
                  (rc.full_width ? "" : "*");
    }
    h.report(7, all_ok, "generator-matrix ranks equal r-g+1",
             detail + " (* = leading r+1 columns certificate)");
}

void criterion8(Harness& h) {
    const auto golden = load_quantum_golden(h.opt.data_dir + "/quantum_table_q8.csv");
    auto S = NumericalSemigroup::from_generators({40, 50, 60, 64, 65}, 29600);
    const auto rows = quantum_table(S, 196, 29184);
    bool ok = golden.size() == 198 && rows.size() == 198;
    uint64_t mism = 0;
    for (size_t i = 0; i < std::min(golden.size(), rows.size()); ++i) {
        const auto& g = golden[i];
        const auto& r = rows[i];
        if (r.n != g.n || r.s != g.s || r.d_bound != g.d ||
            !printed_matches(g.DeltaQ_printed, r.deltaQ_bound, r.n))
            ++mism;
    }
    ok = ok && mism == 0 && rows.front().s == 28400 && rows.back().s == 28006 &&
         rows.front().d_bound == 197 && rows.back().d_bound == 394;
    h.report(8, ok, "quantum table reproduces all printed rows",
             "rows=" + std::to_string(rows.size()) + ", mismatches=" + std::to_string(mism));
}

void criterion9(Harness& h) {
    const auto h8 = hurwitz_quotient_check(make_curve(CurveFamily::SuzukiCover, 1));
    const auto h32 = hurwitz_quotient_check(make_curve(CurveFamily::SuzukiCover, 2));
    const auto hr = hurwitz_quotient_check(make_curve(CurveFamily::ReeCover, 1));
    const bool ok = h8.ok && h8.lhs == 390 && h32.ok && h32.lhs == 30750 && hr.ok &&
                    hr.lhs == 492100;
    h.report(9, ok, "Hurwitz consistency",
             "q=8: " + h8.lhs.str() + "=" + h8.rhs.str() + "; q=32: " + h32.lhs.str() + "=" +
                 h32.rhs.str() + "; Ree q=27: " + hr.lhs.str() + "=" + hr.rhs.str());
}

void criterion10(Harness& h) {
    // (a) closure oracle agreement on 100 random generator sets
    std::mt19937 rng(static_cast<uint32_t>(h.opt.seed));
    std::uniform_int_distribution<uint64_t> dgen(2, 50), dcount(2, 5);
    int done = 0;
    uint64_t oracle_bad = 0;
    while (done < 100) {
        std::vector<uint64_t> gens(dcount(rng));
        for (auto& g : gens) g = dgen(rng);
        uint64_t d = 0;
        for (uint64_t g : gens) d = std::gcd(d, g);
        if (d != 1) continue;
        auto S = NumericalSemigroup::from_generators(gens);
        const auto member = reference::closure_oracle(gens, S.bound());
        for (uint64_t s = 0; s <= S.bound(); ++s)
            if (S.contains(s) != member[s]) ++oracle_bad;
        ++done;
    }
    // (b) shortcut vs direct for every ell >= 3g-1 in the table range
    const auto& S8 = h.one_point().semigroup();
    uint64_t shortcut_bad = 0;
    for (uint64_t ell = 587; ell <= 589; ++ell) {
        const auto sc = dord_shortcuts(S8, ell);
        if (!sc.high_ell_applies || !sc.consistent || sc.direct != ell + 1 - 196) ++shortcut_bad;
    }
    // (c) nu tail formula up to the horizon
    uint64_t tail_bad = 0;
    const uint64_t c = S8.conductor(), g = S8.genus();
    for (uint64_t ell = 1;; ++ell) {
        uint64_t r;
        try {
            r = S8.rho(ell + 1);
        } catch (const HorizonError&) {
            break;
        }
        if (r > S8.bound() - 1) break;
        if (r >= 2 * c - 1 && S8.nu(ell) != r + 1 - 2 * g) ++tail_bad;
    }
    const bool ok = oracle_bad == 0 && shortcut_bad == 0 && tail_bad == 0;
    h.report(10, ok, "property suites",
             "oracle disagreements=" + std::to_string(oracle_bad) +
                 ", shortcut failures=" + std::to_string(shortcut_bad) +
                 ", nu-tail failures=" + std::to_string(tail_bad));
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--data" && i + 1 < argc) opt.data_dir = argv[++i];
        else if (a == "--criterion" && i + 1 < argc) opt.criteria.push_back(std::atoi(argv[++i]));
        else if (a == "--threads" && i + 1 < argc) opt.threads = std::atoi(argv[++i]);
        else if (a == "--seed" && i + 1 < argc) opt.seed = std::strtoull(argv[++i], nullptr, 10);
        else {
            std::cerr << "usage: acceptance [--criterion N]... [--data DIR] [--threads N] [--seed S]\n";
            return 2;
        }
    }
    if (opt.criteria.empty()) opt.criteria = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};

    Harness h;
    h.opt = opt;
    using Fn = void (*)(Harness&);
    const Fn fns[10] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                        criterion6, criterion7, criterion8, criterion9, criterion10};
    for (int c : opt.criteria) {
        if (c < 1 || c > 10) {
            std::cerr << "unknown criterion " << c << "\n";
            return 2;
        }
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fns[c - 1](h);
        } catch (const std::exception& e) {
            h.report(c, false, "exception", e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        std::cout << "       elapsed: " << ms << " ms" << std::endl;
    }
    return h.any_fail ? 1 : 0;
}
