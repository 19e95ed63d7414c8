#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "secant/geometry.hpp"
#include "secant/prng.hpp"

using namespace secant;
using namespace secant::geometry;

namespace {

// Independent rank oracle: plain rational Gaussian elimination, no Bareiss.
int rank_reference(QMat m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m.front().size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Rat rnd_rat(Prng& rng) {
    return frac(static_cast<long>(rng.range(-9, 9)), static_cast<long>(1 + rng.below(4)));
}

}  // namespace

TEST_CASE("rank: stated examples") {
    CHECK(rank({}) == 0);
    CHECK(rank({qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}) == 3);
    CHECK(rank({qv({1, 2}), qv({2, 4})}) == 1);
    CHECK_THROWS_AS(rank({qv({1, 2}), qv({1, 2, 3})}), input_error);
}

TEST_CASE("rank agrees with the reference elimination on random matrices") {
    Prng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
        QMat m(rows, QVec(cols));
        for (auto& row : m)
            for (auto& x : row) x = rnd_rat(rng);
        CHECK(rank(m) == rank_reference(m));
    }
}

TEST_CASE("rank invariances: row permutation and nonzero scaling") {
    Prng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const size_t rows = 2 + rng.below(4), cols = 2 + rng.below(4);
        QMat m(rows, QVec(cols));
        for (auto& row : m)
            for (auto& x : row) x = rnd_rat(rng);
        const int base = rank(m);

        QMat shuffled = m;
        for (size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        CHECK(rank(shuffled) == base);

        QMat scaled = m;
        const Rat factor = frac(static_cast<long>(1 + rng.below(7)), static_cast<long>(1 + rng.below(3)));
        for (auto& x : scaled[rng.below(scaled.size())]) x *= factor;
        CHECK(rank(scaled) == base);
    }
}

TEST_CASE("affine_dim: conventions and examples") {
    CHECK(affine_dim({}) == -1);
    CHECK(affine_dim({qv({0, 0})}) == 0);
    CHECK(affine_dim({qv({0, 0}), qv({1, 0}), qv({0, 1})}) == 2);
    CHECK(affine_dim({qv({0, 0}), qv({1, 1}), qv({2, 2})}) == 1);
}

TEST_CASE("affine_dim + 1 never exceeds the point count") {
    Prng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const size_t n = rng.below(6), m = 1 + rng.below(5);
        std::vector<QVec> pts(n, QVec(m));
        for (auto& p : pts)
            for (auto& x : p) x = rnd_rat(rng);
        CHECK(affine_dim(pts) + 1 <= static_cast<int>(pts.size()));
    }
}

TEST_CASE("points on a hyperplane off the origin: rank = affine_dim + 1") {
    Prng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const size_t m = 2 + rng.below(4);
        // hyperplane x_0 = c with c != 0; remaining coordinates free
        const Rat c(static_cast<long>(1 + rng.below(5)));
        const size_t n = 1 + rng.below(6);
        std::vector<QVec> pts(n, QVec(m));
        for (auto& p : pts) {
            p[0] = c;
            for (size_t j = 1; j < m; ++j) p[j] = rnd_rat(rng);
        }
        CHECK(rank(pts) == affine_dim(pts) + 1);
    }
}

TEST_CASE("GramForm: construction guards") {
    CHECK_NOTHROW(GramForm::standard(4));
    CHECK_THROWS_AS(GramForm({qv({1, 2}), qv({3, 4})}), input_error);   // not symmetric
    CHECK_THROWS_AS(GramForm({qv({0, 0}), qv({0, 1})}), input_error);   // not definite
    CHECK_THROWS_AS(GramForm({qv({-1, 0}), qv({0, 1})}), input_error);  // negative minor
    // positive definite non-diagonal form is accepted
    CHECK_NOTHROW(GramForm({qv({2, 1}), qv({1, 2})}));
}

TEST_CASE("dist_sq: stated examples") {
    const auto g6 = GramForm::standard(6);
    const QVec zero(6, Rat(0));
    QVec half(6, frac(1, 2));
    CHECK(dist_sq(zero, zero, g6) == 0);
    CHECK(dist_sq(zero, half, g6) == frac(3, 2));

    // squared distance between two unreduced Segre rows is twice the Hamming distance
    QVec w1 = qv({1, 0, 0, 1, 0, 0});  // word 00 over m=3, d=2
    QVec w2 = qv({0, 1, 0, 1, 0, 0});  // word 10
    CHECK(dist_sq(w1, w2, g6) == 2);
    QVec w3 = qv({0, 1, 0, 0, 0, 1});  // word 12, Hamming distance 2 from 00
    CHECK(dist_sq(w1, w3, g6) == 4);
}

TEST_CASE("dist_sq: symmetry, translation invariance, definiteness") {
    Prng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const size_t m = 1 + rng.below(5);
        const auto g = GramForm::standard(static_cast<int>(m));
        QVec u(m), w(m), t(m);
        for (size_t j = 0; j < m; ++j) {
            u[j] = rnd_rat(rng);
            w[j] = rnd_rat(rng);
            t[j] = rnd_rat(rng);
        }
        CHECK(dist_sq(u, w, g) == dist_sq(w, u, g));
        CHECK(dist_sq(u, w, g) >= 0);
        CHECK((dist_sq(u, w, g) == 0) == (u == w));
        QVec ut = u, wt = w;
        for (size_t j = 0; j < m; ++j) {
            ut[j] += t[j];
            wt[j] += t[j];
        }
        CHECK(dist_sq(ut, wt, g) == dist_sq(u, w, g));
    }
}

TEST_CASE("rank on forced-low-rank products matches the reference") {
    Prng rng(16180);
    for (int trial = 0; trial < 150; ++trial) {
        const size_t rows = 2 + rng.below(5), cols = 2 + rng.below(5);
        const size_t inner = 1 + rng.below(3);
        QMat a(rows, QVec(inner)), b(inner, QVec(cols));
        for (auto& r : a)
            for (auto& x : r) x = rnd_rat(rng);
        for (auto& r : b)
            for (auto& x : r) x = rnd_rat(rng);
        QMat m(rows, QVec(cols, Rat(0)));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                for (size_t t = 0; t < inner; ++t) m[i][j] += a[i][t] * b[t][j];
        const int r = rank(m);
        CHECK(r == rank_reference(m));
        CHECK(r <= static_cast<int>(inner));
    }
}

TEST_CASE("rank with leading zero columns") {
    QMat m = {{Rat(0), Rat(0), Rat(1), Rat(2)},
              {Rat(0), Rat(0), Rat(2), Rat(4)},
              {Rat(0), Rat(0), Rat(0), Rat(7)}};
    CHECK(rank(m) == 2);
}
