#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "secant/bounds.hpp"
#include "secant/codes.hpp"
#include "secant/search.hpp"
#include "secant/geometry.hpp"
#include "secant/prng.hpp"

#include <algorithm>
#include <set>

using namespace secant;
using namespace secant::codes;

namespace {

const std::vector<std::vector<int>> kSegreParityCheck = {
    {0, 0, 0, 1, 1, 1}, {0, 1, 1, 0, 0, 1}, {1, 0, 1, 0, 1, 0}};

std::vector<int> word(const std::string& s) {
    std::vector<int> w;
    for (char c : s) w.push_back(c - '0');
    return w;
}

// test-local rank over Z_q
int rank_mod_q(std::vector<std::vector<int>> m, int q) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m.front().size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] % q == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const int piv = ((m[r][c] % q) + q) % q;
        int inv = 0;
        for (int x = 1; x < q; ++x)
            if (piv * x % q == 1) inv = x;
        for (size_t i = r + 1; i < rows; ++i) {
            const int f = ((m[i][c] % q + q) % q) * inv % q;
            for (size_t j = c; j < cols; ++j)
                m[i][j] = ((m[i][j] - f * m[r][j]) % q + q) % q;
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

TEST_CASE("code_from_parity_check: the length-6 binary instance") {
    const auto code = code_from_parity_check(kSegreParityCheck, 2);
    CHECK(code.q == 2);
    CHECK(code.length == 6);
    REQUIRE(code.words.size() == 8);
    CHECK(code.min_distance == 3);
    for (const char* w : {"000000", "100110", "010101", "001011", "110011", "101101",
                          "011110", "111000"})
        CHECK(code.contains(word(w)));
}

TEST_CASE("code_from_parity_check: degenerate checks") {
    const auto all = code_from_parity_check({{0, 0, 0, 0}}, 2);
    CHECK(all.words.size() == 16);

    const auto even = code_from_parity_check({{1, 1, 1, 1, 1}}, 2);
    CHECK(even.words.size() == 16);
    CHECK(even.min_distance == 2);
    for (const auto& w : even.words)
        CHECK(std::count(w.begin(), w.end(), 1) % 2 == 0);

    CHECK_THROWS_AS(code_from_parity_check({{1, 0}}, 4), input_error);
}

TEST_CASE("code_from_parity_check: size is q^(d - rank), words lie in the kernel") {
    Prng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const int q = std::array<int, 3>{2, 3, 5}[rng.below(3)];
        const int d = 2 + static_cast<int>(rng.below(4));
        const int r = 1 + static_cast<int>(rng.below(3));
        std::vector<std::vector<int>> h(r, std::vector<int>(d));
        for (auto& row : h)
            for (auto& x : row) x = static_cast<int>(rng.below(q));
        const auto code = code_from_parity_check(h, q);
        mpz_class expected = 1;
        for (int i = 0; i < d - rank_mod_q(h, q); ++i) expected *= q;
        CHECK(mpz_class(static_cast<long>(code.words.size())) == expected);
        for (const auto& w : code.words)
            for (const auto& row : h) {
                long long s = 0;
                for (int i = 0; i < d; ++i) s += static_cast<long long>(row[i]) * w[i];
                CHECK(s % q == 0);
            }
    }
}

TEST_CASE("rook_bound: stated values and the disjoint-ball formula") {
    const auto code = code_from_parity_check(kSegreParityCheck, 2);
    CHECK(rook_bound(code) == 56);

    CHECK(rook_bound(CodeSpec::from_words(2, 6, {word("000000")})) == 7);

    std::vector<std::vector<int>> all;
    for (int v = 0; v < 16; ++v)
        all.push_back({v >> 3 & 1, v >> 2 & 1, v >> 1 & 1, v & 1});
    CHECK(rook_bound(CodeSpec::from_words(2, 4, all)) == 16);

    // distance >= 3 makes the balls disjoint
    Prng rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 4 + static_cast<int>(rng.below(3));
        std::vector<std::vector<int>> kept;
        for (int tries = 0; tries < 40; ++tries) {
            std::vector<int> w(d);
            for (auto& x : w) x = static_cast<int>(rng.below(2));
            bool ok = true;
            for (const auto& p : kept) ok &= hamming_distance(p, w) >= 3;
            if (ok) kept.push_back(w);
        }
        const auto c = CodeSpec::from_words(2, d, kept);
        if (c.min_distance >= 3)
            CHECK(rook_bound(c) ==
                  static_cast<long long>(c.words.size()) * (1 + d));
    }
}

TEST_CASE("grassmann_code_bound: stated values") {
    CHECK(grassmann_code_bound(CodeSpec::from_words(2, 5, {word("11000")})) == 7);
    for (int m = 4; m <= 8; ++m)
        for (int d = 1; 2 * d <= m; ++d) {
            std::vector<int> w(m, 0);
            for (int i = 0; i < d; ++i) w[i] = 1;
            CHECK(grassmann_code_bound(CodeSpec::from_words(2, m, {w})) == 1 + d * (m - d));
        }

    // two weight-2 words at distance 4 in length 6: enumerate independently
    const auto two = CodeSpec::from_words(2, 6, {word("110000"), word("001100")});
    REQUIRE(two.min_distance == 4);
    long long expected = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            std::vector<int> w(6, 0);
            w[i] = w[j] = 1;
            bool near = false;
            for (const auto& c : two.words) near |= hamming_distance(c, w) <= 2;
            expected += near;
        }
    CHECK(grassmann_code_bound(two) == expected);
    CHECK(grassmann_code_bound(two) <= 14);

    CHECK_THROWS_AS(grassmann_code_bound(CodeSpec::from_words(2, 4, {word("1100"), word("1110")})),
                    input_error);
    CHECK_THROWS_AS(grassmann_code_bound(CodeSpec::from_words(3, 4, {{1, 1, 0, 0}})), input_error);
}

TEST_CASE("grassmann_code_bound: distance >= 6 gives the disjoint-ball formula") {
    const auto code = greedy_constant_weight_code(9, 3, 6);
    REQUIRE(code.words.size() >= 2);
    CHECK(code.min_distance >= 6);
    CHECK(grassmann_code_bound(code) ==
          static_cast<long long>(code.words.size()) * (1 + 3 * (9 - 3)));
}

TEST_CASE("veronese_corner_bound: stated values") {
    CHECK(veronese_corner_bound({1}, 3, 3) == 3);
    for (int m = 2; m <= 5; ++m)
        for (int d = 3; d <= 5; ++d) {
            std::vector<int> corners;
            for (int i = 1; i <= m; ++i) corners.push_back(i);
            CHECK(veronese_corner_bound(corners, m, d) == static_cast<long long>(m) * m);
        }
    CHECK(veronese_corner_bound({1, 2}, 3, 2) == 5);
    // k corners, d >= 3: k*m by disjointness
    CHECK(veronese_corner_bound({1, 3}, 4, 3) == 8);
    CHECK_THROWS_AS(veronese_corner_bound({1, 1}, 3, 3), input_error);
    CHECK_THROWS_AS(veronese_corner_bound({5}, 3, 3), input_error);
}

TEST_CASE("code_to_segre_witness: reduced identity and unreduced isometry") {
    const auto code = code_from_parity_check(kSegreParityCheck, 2);
    QVec centre(6, frac(1, 2));
    const auto w = code_to_segre_witness(code, {centre});
    REQUIRE(w.k() == 9);
    CHECK(w.sites.back() == centre);
    // q=2: the embedding is the identity on words
    for (size_t i = 0; i < code.words.size(); ++i)
        for (int j = 0; j < 6; ++j) CHECK(w.sites[i][j] == code.words[i][j]);

    const auto origin = code_to_segre_witness(CodeSpec::from_words(2, 6, {word("000000")}), {});
    CHECK(origin.k() == 1);
    CHECK(origin.sites[0] == QVec(6, Rat(0)));

    // unreduced (q=3): squared distance is twice the Hamming distance
    const auto tern = CodeSpec::from_words(3, 4, {{0, 1, 2, 0}, {2, 1, 0, 0}, {0, 0, 0, 1}});
    const auto wt = code_to_segre_witness(tern, {});
    const auto g = geometry::GramForm::standard(12);
    for (size_t i = 0; i < tern.words.size(); ++i)
        for (size_t j = 0; j < tern.words.size(); ++j)
            CHECK(geometry::dist_sq(wt.sites[i], wt.sites[j], g) ==
                  2 * hamming_distance(tern.words[i], tern.words[j]));
}

TEST_CASE("greedy_constant_weight_code: stated instances") {
    const auto disjoint = greedy_constant_weight_code(6, 3, 6);
    CHECK(disjoint.words.size() >= 1);
    CHECK(disjoint.contains(word("111000")));

    const auto all = greedy_constant_weight_code(5, 2, 2);
    CHECK(all.words.size() == 10);

    const auto steiner = greedy_constant_weight_code(7, 3, 4);
    CHECK(steiner.words.size() == 7);
    for (size_t i = 0; i < steiner.words.size(); ++i)
        for (size_t j = i + 1; j < steiner.words.size(); ++j)
            CHECK(hamming_distance(steiner.words[i], steiner.words[j]) >= 4);
    // greedy maximality: every weight-3 word outside the code is within distance 2
    for (int v = 0; v < 128; ++v) {
        std::vector<int> w;
        for (int b = 6; b >= 0; --b) w.push_back(v >> b & 1);
        if (std::count(w.begin(), w.end(), 1) != 3 || steiner.contains(w)) continue;
        bool blocked = false;
        for (const auto& c : steiner.words) blocked |= hamming_distance(c, w) < 4;
        CHECK(blocked);
    }
}

TEST_CASE("the eight uncovered words are the complements, with syndrome (1,1,1)") {
    const auto code = code_from_parity_check(kSegreParityCheck, 2);
    std::set<std::vector<int>> covered;
    for (const auto& w : code.words) {
        covered.insert(w);
        for (int i = 0; i < 6; ++i) {
            auto n = w;
            n[i] ^= 1;
            covered.insert(n);
        }
    }
    std::set<std::vector<int>> uncovered;
    for (int v = 0; v < 64; ++v) {
        std::vector<int> w;
        for (int b = 5; b >= 0; --b) w.push_back(v >> b & 1);
        if (!covered.count(w)) uncovered.insert(w);
    }
    REQUIRE(uncovered.size() == 8);
    for (const auto& c : code.words) {
        std::vector<int> comp(6);
        for (int i = 0; i < 6; ++i) comp[i] = 1 - c[i];
        CHECK(uncovered.count(comp) == 1);
    }
    for (const auto& u : uncovered)
        for (const auto& row : kSegreParityCheck) {
            int s = 0;
            for (int i = 0; i < 6; ++i) s += row[i] * u[i];
            CHECK(s % 2 == 1);
        }
}

TEST_CASE("the nine-site cube witness needs no perturbation and lifts to an affine witness") {
    const auto code = code_from_parity_check(kSegreParityCheck, 2);
    const auto cfg = models::segre_config(6, 2, true);
    const auto g = geometry::GramForm::standard(6);
    QVec centre(6, frac(1, 2));
    const auto w = code_to_segre_witness(code, {centre});

    // all 64 assignments are already strict
    const auto vor = bounds::eval_voronoi_partition(cfg, w, g);
    REQUIRE(vor.ties.empty());
    REQUIRE(vor.total == 63);
    const auto perturbed = secant::search::perturb_witness(w, cfg, g);
    CHECK(perturbed.sites == w.sites);

    // certification loop with doubling height, then affine evaluation
    Rat height(1);
    std::optional<bounds::Witness> conv;
    for (int attempt = 0; attempt < 40 && !conv; ++attempt) {
        try {
            conv = bounds::voronoi_to_affine_witness(cfg, w, g, height);
        } catch (const lift_error& e) {
            height = e.suggested_height;
        }
    }
    REQUIRE(conv.has_value());
    const auto aff = bounds::eval_affine_partition(cfg, *conv);
    CHECK(aff.total >= 63);
}
