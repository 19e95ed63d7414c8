#include "secant/oracle.hpp"

#include "secant/prng.hpp"

#include <algorithm>

namespace secant::oracle {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 f : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == f) return true;
        if (n % f == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

int param_dim(const ModelDescriptor& desc) {
    switch (desc.family) {
        case models::Family::veronese:
        case models::Family::binary_forms:
            return desc.m;
        case models::Family::segre:
            return desc.d * desc.m;
        case models::Family::segre_veronese: {
            int s = 0;
            for (auto [m, d] : desc.factors) s += m;
            return s;
        }
        case models::Family::grassmannian:
            return desc.d * desc.m;
    }
    throw input_error("bad family");
}

int rank_mod_p(std::vector<std::vector<u64>> m, u64 p) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m.front().size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] % p == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        const u64 inv = invmod(m[r][c] % p, p);
        for (size_t i = r + 1; i < rows; ++i) {
            const u64 f = mulmod(m[i][c] % p, inv, p);
            if (f == 0) continue;
            for (size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] + p - mulmod(f, m[r][j] % p, p)) % p;
        }
        ++r;
    }
    return static_cast<int>(r);
}

namespace {

u64 det_mod_p(std::vector<std::vector<u64>> m, u64 p) {
    const size_t n = m.size();
    u64 det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && m[pivot][c] % p == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = p - det;
        }
        det = mulmod(det, m[c][c] % p, p);
        const u64 inv = invmod(m[c][c] % p, p);
        for (size_t i = c + 1; i < n; ++i) {
            const u64 f = mulmod(m[i][c] % p, inv, p);
            if (f == 0) continue;
            for (size_t j = c; j < n; ++j)
                m[i][j] = (m[i][j] + p - mulmod(f, m[c][j] % p, p)) % p;
        }
    }
    return det % p;
}

int max_monomial_degree(const ModelDescriptor& desc) {
    switch (desc.family) {
        case models::Family::veronese:
        case models::Family::binary_forms:
        case models::Family::segre:
            return desc.d;
        case models::Family::segre_veronese: {
            int d = 1;
            for (auto [mi, di] : desc.factors) d = std::max(d, di);
            return d;
        }
        case models::Family::grassmannian:
            return 1;  // multilinear with unit coefficients
    }
    return 1;
}

// Jacobian of the monomial map x -> (x^a)_a over a support configuration whose
// points have integer entries. Rows follow config order. Zero coordinates are
// legal; partials are assembled as products, never by division.
std::vector<std::vector<u64>> monomial_jacobian(const std::vector<std::vector<int>>& supports,
                                                const std::vector<u64>& x, u64 p) {
    const size_t pd = x.size();
    int max_exp = 1;
    for (const auto& a : supports)
        for (int e : a) max_exp = std::max(max_exp, e);
    std::vector<std::vector<u64>> pows(pd, std::vector<u64>(max_exp + 1, 1));
    for (size_t j = 0; j < pd; ++j)
        for (int e = 1; e <= max_exp; ++e) pows[j][e] = mulmod(pows[j][e - 1], x[j] % p, p);

    std::vector<std::vector<u64>> jac;
    jac.reserve(supports.size());
    for (const auto& a : supports) {
        std::vector<u64> row(pd, 0);
        for (size_t j = 0; j < pd; ++j) {
            if (!a[j]) continue;
            u64 v = u64(a[j]) % p;
            for (size_t i = 0; i < pd && v; ++i)
                if (a[i]) v = mulmod(v, pows[i][a[i] - (i == j ? 1 : 0)], p);
            row[j] = v;
        }
        jac.push_back(std::move(row));
    }
    return jac;
}

std::vector<std::vector<int>> integer_supports(const ModelDescriptor& desc) {
    // Unreduced coordinates throughout: the oracle works on the model itself.
    models::PointConfig cfg;
    switch (desc.family) {
        case models::Family::veronese:
        case models::Family::binary_forms:
            cfg = models::veronese_config(desc.m, desc.d);
            break;
        case models::Family::segre:
            cfg = models::segre_config(desc.d, desc.m, /*reduced=*/false);
            break;
        case models::Family::segre_veronese:
            cfg = models::segre_veronese_config(desc.factors);
            break;
        default:
            throw input_error("no monomial support for this family");
    }
    std::vector<std::vector<int>> supports;
    supports.reserve(cfg.sets.size());
    for (const auto& s : cfg.sets) {
        std::vector<int> a;
        a.reserve(s.points.front().size());
        for (const auto& x : s.points.front()) a.push_back(static_cast<int>(x.get_num().get_si()));
        supports.push_back(std::move(a));
    }
    return supports;
}

}  // namespace

std::vector<std::vector<u64>> jacobian_at(const ModelDescriptor& desc,
                                          const std::vector<u64>& point, u64 p) {
    if (!is_prime(p)) throw input_error("modulus must be prime");
    if (static_cast<int>(point.size()) != param_dim(desc))
        throw input_error("parameter point has wrong dimension");
    if (p <= static_cast<u64>(max_monomial_degree(desc)))
        throw prime_error("prime divides an exponent scaling; retry with a larger prime");

    if (desc.family != models::Family::grassmannian)
        return monomial_jacobian(integer_supports(desc), point, p);

    // Grassmannian: coordinates are the maximal minors det(x_J) of a d x m
    // matrix; partial derivatives are signed cofactors.
    const int d = desc.d, m = desc.m;
    std::vector<std::vector<u64>> jac;
    std::vector<int> subset(d);
    for (int i = 0; i < d; ++i) subset[i] = i;
    while (true) {
        std::vector<u64> row(d * m, 0);
        for (int r = 0; r < d; ++r) {
            for (int t = 0; t < d; ++t) {
                std::vector<std::vector<u64>> minor;
                minor.reserve(d - 1);
                for (int rr = 0; rr < d; ++rr) {
                    if (rr == r) continue;
                    std::vector<u64> mrow;
                    mrow.reserve(d - 1);
                    for (int tt = 0; tt < d; ++tt) {
                        if (tt == t) continue;
                        mrow.push_back(point[rr * m + subset[tt]] % p);
                    }
                    minor.push_back(std::move(mrow));
                }
                u64 cof = minor.empty() ? 1 : det_mod_p(std::move(minor), p);
                if ((r + t) % 2 == 1) cof = (p - cof) % p;
                row[r * m + subset[t]] = cof;
            }
        }
        jac.push_back(std::move(row));
        int i = d - 1;
        while (i >= 0 && subset[i] == m - d + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < d; ++j) subset[j] = subset[j - 1] + 1;
    }
    return jac;
}

OracleReport terracini_dim(const ModelDescriptor& desc, int k, u64 prime, int trials,
                           uint64_t seed) {
    if (k < 1) throw input_error("terracini_dim: need k >= 1");
    if (trials < 1) throw input_error("terracini_dim: need trials >= 1");
    if (!is_prime(prime)) throw input_error("terracini_dim: modulus must be prime");
    if (prime < (1ULL << 30))
        throw input_error("terracini_dim: prime below the configured floor (2^30)");

    const int pd = param_dim(desc);
    const long long n = desc.ambient_space_dim();
    OracleReport report;
    report.model = desc;
    report.k = k;
    report.prime = prime;
    report.trials = trials;

    for (int t = 0; t < trials; ++t) {
        Prng rng(mix64(mix64(seed, prime), static_cast<uint64_t>(t)));
        std::vector<std::vector<u64>> stacked(static_cast<size_t>(n),
                                              std::vector<u64>(static_cast<size_t>(k) * pd, 0));
        for (int block = 0; block < k; ++block) {
            std::vector<u64> x(pd);
            for (auto& xi : x) xi = 1 + rng.below(prime - 1);
            auto jac = jacobian_at(desc, x, prime);
            for (long long row = 0; row < n; ++row)
                for (int col = 0; col < pd; ++col)
                    stacked[row][static_cast<size_t>(block) * pd + col] = jac[row][col];
        }
        report.rank_per_trial.push_back(rank_mod_p(std::move(stacked), prime));
    }
    report.reported_dim = *std::max_element(report.rank_per_trial.begin(),
                                            report.rank_per_trial.end());
    report.matches_expected =
        report.reported_dim == models::expected_secant_dim(desc, k);
    return report;
}

}  // namespace secant::oracle
