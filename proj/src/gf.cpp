#include "curvecodes/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace curvecodes {

namespace {

std::string poly_to_string(const std::vector<int>& c) {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) {
            if (c[i] != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

// remainder of a by monic b over GF(p); both little-endian
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int c = a.back();
        if (c != 0) {
            int shift = static_cast<int>(a.size()) - 1 - db;
            for (int i = 0; i <= db; ++i) {
                int v = a[shift + i] - c * b[i];
                a[shift + i] = ((v % p) + p) % p;
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// returns a nontrivial monic factor of degree <= k/2, or empty if irreducible
std::vector<int> find_factor(const std::vector<int>& mod, int p) {
    const int k = static_cast<int>(mod.size()) - 1;
    for (int d = 1; d <= k / 2; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<uint64_t>(p);
        for (uint64_t code = 0; code < count; ++code) {
            std::vector<int> div(d + 1, 0);
            uint64_t c = code;
            for (int i = 0; i < d; ++i) { div[i] = static_cast<int>(c % p); c /= p; }
            div[d] = 1;
            if (poly_rem(mod, div, p).empty()) return div;
        }
    }
    return {};
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

Field::Field(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    if (p != 2 && p != 3)
        throw UnsupportedCharacteristicError("unsupported characteristic " + std::to_string(p) +
                                             " (only p = 2 and p = 3)");
    if (k < 1 || k > 20) throw DomainError("extension degree out of range [1,20]");
    if (static_cast<int>(modulus_.size()) != k + 1 || modulus_.back() != 1)
        throw DomainError("modulus must be monic of degree k");
    for (int c : modulus_)
        if (c < 0 || c >= p) throw DomainError("modulus coefficients must lie in [0,p)");

    if (auto f = find_factor(modulus_, p_); !f.empty())
        throw ReducibleModulusError("modulus " + poly_to_string(modulus_) +
                                    " is reducible: divisible by " + poly_to_string(f));

    size_ = 1;
    for (int i = 0; i < k_; ++i) size_ *= static_cast<uint32_t>(p_);
    const uint32_t N = size_ - 1;
    exp_.assign(N, 0);
    log_.assign(size_, 0);

    // smallest-code primitive element; order test via the prime factors of N
    const auto pf = prime_factors(N);
    std::vector<int> gen_coeffs;
    for (uint32_t cand = 2; cand < size_; ++cand) {
        std::vector<int> g(k_, 0);
        uint32_t c = cand;
        for (int i = 0; i < k_; ++i) { g[i] = static_cast<int>(c % p_); c /= p_; }
        // cand^e via square-and-multiply on coefficient vectors
        auto powmod = [&](uint64_t e) {
            std::vector<int> r(k_, 0);
            r[0] = 1;
            std::vector<int> b = g;
            while (e) {
                if (e & 1) r = mul_coeffs(r, b);
                b = mul_coeffs(b, b);
                e >>= 1;
            }
            return r;
        };
        bool primitive = true;
        for (uint64_t f : pf) {
            auto r = powmod(N / f);
            bool is_one = r[0] == 1 && std::all_of(r.begin() + 1, r.end(), [](int v) { return v == 0; });
            if (is_one) { primitive = false; break; }
        }
        if (primitive) {
            gen_ = Fe{cand};
            gen_coeffs = g;
            break;
        }
    }

    std::vector<int> cur(k_, 0);
    cur[0] = 1;
    for (uint32_t i = 0; i < N; ++i) {
        uint32_t code = 0;
        for (int j = k_ - 1; j >= 0; --j) code = code * static_cast<uint32_t>(p_) + static_cast<uint32_t>(cur[j]);
        exp_[i] = code;
        log_[code] = i;
        cur = mul_coeffs(cur, gen_coeffs);
    }
}

std::vector<int> Field::mul_coeffs(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
    r = poly_rem(std::move(r), modulus_, p_);
    r.resize(static_cast<size_t>(k_), 0);
    return r;
}

const Field& Field::gf8() {
    static const Field F(2, 3, {1, 1, 0, 1});
    return F;
}

const Field& Field::gf4096() {
    static const Field F(2, 12, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1});
    return F;
}

const Field& Field::gf27() {
    static const Field F(3, 3, {1, 2, 0, 1});
    return F;
}

const Field& Field::gf2_20() {
    static const Field F(2, 20, [] {
        std::vector<int> m(21, 0);
        m[0] = 1; m[3] = 1; m[20] = 1;
        return m;
    }());
    return F;
}

std::string Field::modulus_string() const { return poly_to_string(modulus_); }

Fe Field::element(uint32_t code) const {
    if (code >= size_) throw DomainError("element code out of range");
    return Fe{code};
}

Fe Field::add(Fe a, Fe b) const {
    if (p_ == 2) return Fe{a.code ^ b.code};
    uint32_t r = 0, m = 1, x = a.code, y = b.code;
    for (int i = 0; i < k_; ++i) {
        r += ((x % 3 + y % 3) % 3) * m;
        x /= 3; y /= 3; m *= 3;
    }
    return Fe{r};
}

Fe Field::neg(Fe a) const {
    if (p_ == 2) return a;
    uint32_t r = 0, m = 1, x = a.code;
    for (int i = 0; i < k_; ++i) {
        r += ((3 - x % 3) % 3) * m;
        x /= 3; m *= 3;
    }
    return Fe{r};
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::inv(Fe a) const {
    if (a.code == 0) throw DivisionByZeroError("inverse of zero");
    uint32_t l = log_[a.code];
    return Fe{exp_[l == 0 ? 0 : order() - l]};
}

Fe Field::pow(Fe a, uint64_t e) const {
    if (a.code == 0) return e == 0 ? one() : zero();
    uint64_t l = (static_cast<uint64_t>(log_[a.code]) * (e % order())) % order();
    return Fe{exp_[l]};
}

uint32_t Field::log(Fe a) const {
    if (a.code == 0) throw DivisionByZeroError("log of zero");
    return log_[a.code];
}

std::vector<int> Field::coeffs(Fe a) const {
    std::vector<int> c(static_cast<size_t>(k_), 0);
    uint32_t x = a.code;
    for (int i = 0; i < k_; ++i) { c[i] = static_cast<int>(x % p_); x /= static_cast<uint32_t>(p_); }
    return c;
}

Fe Field::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > k_) throw DomainError("too many coefficients");
    uint32_t code = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] < 0 || c[i] >= p_) throw DomainError("coefficient out of range");
        code = code * static_cast<uint32_t>(p_) + static_cast<uint32_t>(c[i]);
    }
    return Fe{code};
}

std::vector<Fe> Field::solve_additive(uint32_t q, char sign, Fe c) const {
    AdditiveSolver s(*this, q, sign);
    return s.solve(c);
}

std::vector<Fe> Field::nth_roots(uint64_t m, Fe c) const {
    if (m == 0) throw DomainError("nth_roots: m must be positive");
    if (c.code == 0) return {Fe{0}};
    const uint64_t N = order();
    const uint64_t g = std::gcd(m, N);
    const uint64_t lc = log_[c.code];
    if (lc % g != 0) return {};
    // solve m*u = lc (mod N): u0 = (lc/g) * (m/g)^{-1} mod N/g
    const uint64_t Ng = N / g;
    uint64_t mg = (m / g) % Ng;
    // extended Euclid inverse of mg mod Ng
    int64_t t0 = 0, t1 = 1;
    uint64_t r0 = Ng, r1 = mg;
    while (r1 != 0) {
        uint64_t quot = r0 / r1;
        uint64_t r2 = r0 - quot * r1;
        int64_t t2 = t0 - static_cast<int64_t>(quot) * t1;
        r0 = r1; r1 = r2; t0 = t1; t1 = t2;
    }
    uint64_t inv = static_cast<uint64_t>((t0 % static_cast<int64_t>(Ng) + static_cast<int64_t>(Ng)) %
                                         static_cast<int64_t>(Ng));
    uint64_t u0 = ((lc / g) % Ng) * inv % Ng;
    std::vector<Fe> out;
    out.reserve(g);
    for (uint64_t i = 0; i < g; ++i) out.push_back(Fe{exp_[(u0 + i * Ng) % N]});
    std::sort(out.begin(), out.end());
    return out;
}

AdditiveSolver::AdditiveSolver(const Field& F, uint32_t q, char sign)
    : F_(F), p_(F.characteristic()), k_(F.degree()) {
    if (sign != '+' && sign != '-') throw DomainError("sign must be '+' or '-'");
    // q = p^j with j dividing k
    uint32_t qq = q;
    int j = 0;
    while (qq > 1 && qq % static_cast<uint32_t>(p_) == 0) { qq /= static_cast<uint32_t>(p_); ++j; }
    if (qq != 1 || j == 0 || k_ % j != 0)
        throw DomainError("q must be a power of the characteristic with exponent dividing k");

    // columns of the matrix: L(x^i) = (x^i)^q +/- x^i in coefficients
    std::vector<std::vector<int>> M(static_cast<size_t>(k_), std::vector<int>(static_cast<size_t>(k_), 0));
    for (int i = 0; i < k_; ++i) {
        std::vector<int> basis(static_cast<size_t>(k_), 0);
        basis[static_cast<size_t>(i)] = 1;
        Fe b = F_.from_coeffs(basis);
        Fe img = F_.pow(b, q);
        img = (sign == '+') ? F_.add(img, b) : F_.sub(img, b);
        auto col = F_.coeffs(img);
        for (int r = 0; r < k_; ++r) M[static_cast<size_t>(r)][static_cast<size_t>(i)] = col[static_cast<size_t>(r)];
    }

    // row reduce [M | I] over GF(p)
    rref_ = M;
    trans_.assign(static_cast<size_t>(k_), std::vector<int>(static_cast<size_t>(k_), 0));
    for (int i = 0; i < k_; ++i) trans_[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    pivot_col_of_row_.assign(static_cast<size_t>(k_), -1);

    int row = 0;
    std::vector<bool> is_pivot(static_cast<size_t>(k_), false);
    for (int col = 0; col < k_ && row < k_; ++col) {
        int pr = -1;
        for (int r = row; r < k_; ++r)
            if (rref_[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(rref_[static_cast<size_t>(row)], rref_[static_cast<size_t>(pr)]);
        std::swap(trans_[static_cast<size_t>(row)], trans_[static_cast<size_t>(pr)]);
        // normalize pivot to 1
        int piv = rref_[static_cast<size_t>(row)][static_cast<size_t>(col)];
        int ipiv = 1;
        while ((piv * ipiv) % p_ != 1) ++ipiv;
        for (int cc = 0; cc < k_; ++cc) {
            rref_[static_cast<size_t>(row)][static_cast<size_t>(cc)] =
                rref_[static_cast<size_t>(row)][static_cast<size_t>(cc)] * ipiv % p_;
            trans_[static_cast<size_t>(row)][static_cast<size_t>(cc)] =
                trans_[static_cast<size_t>(row)][static_cast<size_t>(cc)] * ipiv % p_;
        }
        for (int r = 0; r < k_; ++r) {
            if (r == row) continue;
            int f = rref_[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int cc = 0; cc < k_; ++cc) {
                rref_[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
                    ((rref_[static_cast<size_t>(r)][static_cast<size_t>(cc)] -
                      f * rref_[static_cast<size_t>(row)][static_cast<size_t>(cc)]) % p_ + p_) % p_;
                trans_[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
                    ((trans_[static_cast<size_t>(r)][static_cast<size_t>(cc)] -
                      f * trans_[static_cast<size_t>(row)][static_cast<size_t>(cc)]) % p_ + p_) % p_;
            }
        }
        pivot_col_of_row_[static_cast<size_t>(row)] = col;
        is_pivot[static_cast<size_t>(col)] = true;
        ++row;
    }
    for (int col = 0; col < k_; ++col)
        if (!is_pivot[static_cast<size_t>(col)]) free_cols_.push_back(col);

    // kernel basis: one vector per free column
    for (int fc : free_cols_) {
        std::vector<int> v(static_cast<size_t>(k_), 0);
        v[static_cast<size_t>(fc)] = 1;
        for (int r = 0; r < k_; ++r) {
            int pc = pivot_col_of_row_[static_cast<size_t>(r)];
            if (pc < 0) break;
            // pivot var = -sum(free part)
            int val = rref_[static_cast<size_t>(r)][static_cast<size_t>(fc)];
            v[static_cast<size_t>(pc)] = ((-val) % p_ + p_) % p_;
        }
        kernel_basis_.push_back(std::move(v));
    }
}

size_t AdditiveSolver::kernel_size() const {
    size_t s = 1;
    for (size_t i = 0; i < kernel_basis_.size(); ++i) s *= static_cast<size_t>(p_);
    return s;
}

std::vector<Fe> AdditiveSolver::solve(Fe c) const {
    auto rhs = F_.coeffs(c);
    // apply the recorded row operations to the right-hand side
    std::vector<int> b(static_cast<size_t>(k_), 0);
    for (int r = 0; r < k_; ++r) {
        int acc = 0;
        for (int cc = 0; cc < k_; ++cc)
            acc += trans_[static_cast<size_t>(r)][static_cast<size_t>(cc)] * rhs[static_cast<size_t>(cc)];
        b[static_cast<size_t>(r)] = acc % p_;
    }
    // consistency: zero rows of rref must have zero rhs
    std::vector<int> part(static_cast<size_t>(k_), 0);
    for (int r = 0; r < k_; ++r) {
        int pc = pivot_col_of_row_[static_cast<size_t>(r)];
        if (pc < 0) {
            if (b[static_cast<size_t>(r)] != 0) return {};
        } else {
            part[static_cast<size_t>(pc)] = b[static_cast<size_t>(r)];
        }
    }
    // enumerate particular + kernel combinations
    std::vector<Fe> out;
    const size_t nb = kernel_basis_.size();
    size_t total = 1;
    for (size_t i = 0; i < nb; ++i) total *= static_cast<size_t>(p_);
    out.reserve(total);
    std::vector<int> sel(nb, 0);
    for (size_t it = 0; it < total; ++it) {
        std::vector<int> v = part;
        size_t idx = it;
        for (size_t i = 0; i < nb; ++i) {
            int ci = static_cast<int>(idx % static_cast<size_t>(p_));
            idx /= static_cast<size_t>(p_);
            if (ci)
                for (int j = 0; j < k_; ++j)
                    v[static_cast<size_t>(j)] =
                        (v[static_cast<size_t>(j)] + ci * kernel_basis_[i][static_cast<size_t>(j)]) % p_;
        }
        out.push_back(F_.from_coeffs(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace curvecodes
