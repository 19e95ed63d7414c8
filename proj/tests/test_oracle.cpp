#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "secant/geometry.hpp"
#include "secant/oracle.hpp"
#include "secant/prng.hpp"

using namespace secant;
using namespace secant::oracle;
using models::ModelDescriptor;

TEST_CASE("is_prime: the default primes and small cases") {
    CHECK(is_prime(kPrimeA));
    CHECK(is_prime(kPrimeB));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(!is_prime(1));
    CHECK(!is_prime(2147483647ULL * 3));
    CHECK(!is_prime((1ULL << 32) + 1));  // 641 * 6700417
}

TEST_CASE("param_dim per family") {
    CHECK(param_dim(ModelDescriptor::veronese(3, 4)) == 3);
    CHECK(param_dim(ModelDescriptor::binary_forms(7)) == 2);
    CHECK(param_dim(ModelDescriptor::segre(6, 2)) == 12);
    CHECK(param_dim(ModelDescriptor::segre_veronese({{3, 2}, {2, 1}})) == 5);
    CHECK(param_dim(ModelDescriptor::grassmannian(5, 2)) == 10);
}

TEST_CASE("rank_mod_p on a known matrix") {
    const uint64_t p = kPrimeA;
    CHECK(rank_mod_p({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}, p) == 2);
    CHECK(rank_mod_p({{1, 0}, {0, 1}}, p) == 2);
    CHECK(rank_mod_p({{0, 0}, {0, 0}}, p) == 0);
    // rank can drop mod p: the matrix [[p, 0], [0, 1]] is singular mod p
    CHECK(rank_mod_p({{p, 0}, {0, 1}}, p) == 1);
}

TEST_CASE("jacobian_at: tangent to pure powers at a coordinate point") {
    const auto desc = ModelDescriptor::veronese(2, 3);
    const auto jac = jacobian_at(desc, {1, 0}, kPrimeA);
    REQUIRE(jac.size() == 4);  // rows follow colex supports (3,0),(2,1),(1,2),(0,3)
    CHECK(jac[0] == std::vector<uint64_t>{3, 0});
    CHECK(jac[1] == std::vector<uint64_t>{0, 1});
    CHECK(jac[2] == std::vector<uint64_t>{0, 0});
    CHECK(jac[3] == std::vector<uint64_t>{0, 0});
    CHECK(rank_mod_p(jac, kPrimeA) == 2);
}

TEST_CASE("jacobian_at: pure tensors at a coordinate point") {
    const auto desc = ModelDescriptor::segre(2, 2);
    const auto jac = jacobian_at(desc, {1, 0, 1, 0}, kPrimeA);
    CHECK(rank_mod_p(jac, kPrimeA) == 3);  // cone dimension d(m-1)+1
}

TEST_CASE("jacobian_at: Grassmannian rank matches an exact rational computation") {
    const auto desc = ModelDescriptor::grassmannian(4, 2);
    Prng rng(71);
    std::vector<uint64_t> pt(8);
    for (auto& x : pt) x = 1 + rng.below(97);
    const auto jac = jacobian_at(desc, pt, kPrimeA);
    CHECK(rank_mod_p(jac, kPrimeA) == 5);

    // independent exact route: cofactor Jacobian of the six 2x2 minors of a
    // rational 2x4 matrix, rank over Q
    QMat x(2, QVec(4));
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) x[r][c] = Rat(static_cast<long>(pt[r * 4 + c]));
    QMat jac_q;
    for (int c1 = 0; c1 < 4; ++c1)
        for (int c2 = c1 + 1; c2 < 4; ++c2) {
            // minor = x[0][c1] x[1][c2] - x[0][c2] x[1][c1]
            QVec row(8, Rat(0));
            row[0 * 4 + c1] = x[1][c2];
            row[1 * 4 + c2] = x[0][c1];
            row[0 * 4 + c2] = -x[1][c1];
            row[1 * 4 + c1] = -x[0][c2];
            jac_q.push_back(std::move(row));
        }
    CHECK(geometry::rank(jac_q) == 5);
}

TEST_CASE("jacobian_at: primes not exceeding the degree are rejected") {
    const auto desc = ModelDescriptor::veronese(2, 3);
    CHECK_THROWS_AS(jacobian_at(desc, {1, 1}, 3), prime_error);
    CHECK_NOTHROW(jacobian_at(desc, {1, 1}, 5));
    CHECK_THROWS_AS(jacobian_at(desc, {1, 1, 1}, 5), input_error);
}

TEST_CASE("terracini_dim: the defective plane Veronese cases") {
    const auto v32 = terracini_dim(ModelDescriptor::veronese(3, 2), 2, kPrimeA, 3, 1);
    CHECK(v32.reported_dim == 5);
    CHECK(!v32.matches_expected);  // expected dimension is 6

    const auto v34 = terracini_dim(ModelDescriptor::veronese(3, 4), 5, kPrimeA, 3, 1);
    CHECK(v34.reported_dim == 14);
    CHECK(!v34.matches_expected);  // defect 1 below 15
}

TEST_CASE("terracini_dim: the ninth secant of the sixth Segre power of P^1") {
    const auto rep = terracini_dim(ModelDescriptor::segre(6, 2), 9, kPrimeA, 2, 7);
    CHECK(rep.reported_dim == 63);
    CHECK(rep.matches_expected);
}

TEST_CASE("terracini_dim: k=1 returns the cone dimension for every family") {
    std::vector<ModelDescriptor> grid = {
        ModelDescriptor::veronese(3, 2),   ModelDescriptor::veronese(4, 3),
        ModelDescriptor::binary_forms(6),  ModelDescriptor::segre(3, 2),
        ModelDescriptor::segre(2, 3),      ModelDescriptor::segre_veronese({{2, 2}, {2, 1}}),
        ModelDescriptor::grassmannian(4, 2), ModelDescriptor::grassmannian(6, 2),
    };
    for (const auto& desc : grid) {
        const auto rep = terracini_dim(desc, 1, kPrimeB, 2, 3);
        CHECK(rep.reported_dim == desc.cone_dim());
    }
}

TEST_CASE("terracini_dim: monotone in k and capped by the expected dimension") {
    const auto desc = ModelDescriptor::veronese(3, 3);
    int prev = 0;
    for (int k = 1; k <= 5; ++k) {
        const auto rep = terracini_dim(desc, k, kPrimeA, 2, 5);
        CHECK(rep.reported_dim >= prev);
        CHECK(rep.reported_dim <= models::expected_secant_dim(desc, k));
        CHECK(rep.reported_dim == *std::max_element(rep.rank_per_trial.begin(),
                                                    rep.rank_per_trial.end()));
        prev = rep.reported_dim;
    }
}

TEST_CASE("terracini_dim: two primes and two seeds agree on a small grid") {
    std::vector<ModelDescriptor> grid = {
        ModelDescriptor::veronese(3, 3),
        ModelDescriptor::segre(3, 2),
        ModelDescriptor::grassmannian(5, 2),
    };
    for (const auto& desc : grid)
        for (int k : {1, 2, 4}) {
            const auto a = terracini_dim(desc, k, kPrimeA, 2, 11);
            const auto b = terracini_dim(desc, k, kPrimeB, 2, 12);
            CHECK(a.reported_dim == b.reported_dim);
        }
}

TEST_CASE("terracini_dim: guards") {
    const auto desc = ModelDescriptor::veronese(3, 2);
    CHECK_THROWS_AS(terracini_dim(desc, 0, kPrimeA, 1, 1), input_error);
    CHECK_THROWS_AS(terracini_dim(desc, 1, kPrimeA, 0, 1), input_error);
    CHECK_THROWS_AS(terracini_dim(desc, 1, 1000003, 1, 1), input_error);  // below the floor
    CHECK_THROWS_AS(terracini_dim(desc, 1, (1ULL << 31) - 2, 1, 1), input_error);  // composite
}
