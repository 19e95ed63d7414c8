#pragma once

#include "secant/models.hpp"

#include <cstdint>
#include <vector>

namespace secant::oracle {

using models::ModelDescriptor;

bool is_prime(uint64_t n);

// Dimension of the parameter space of the standard parametrisation.
int param_dim(const ModelDescriptor& desc);

// Rank of a matrix over Z_p (entries already reduced), Gaussian elimination.
int rank_mod_p(std::vector<std::vector<uint64_t>> m, uint64_t p);

// Jacobian of the coordinate functions at the given parameter point, reduced
// mod p: an (ambient dim) x (param dim) matrix. Monomial families use the
// coefficient-free monomial parametrisation, which is a diagonal change of
// coordinates as long as p exceeds the degree; smaller primes are rejected.
std::vector<std::vector<uint64_t>> jacobian_at(const ModelDescriptor& desc,
                                               const std::vector<uint64_t>& point,
                                               uint64_t p);

struct OracleReport {
    ModelDescriptor model;
    int k = 1;
    uint64_t prime = 0;
    int trials = 0;
    std::vector<int> rank_per_trial;
    int reported_dim = 0;
    bool matches_expected = false;
};

// Terracini rank probe: stack k Jacobians at seeded random points of
// (Z_p \ {0})^paramdim and take the maximal rank over the trials. The result
// is a certified lower bound on dim kC and generically equals it.
OracleReport terracini_dim(const ModelDescriptor& desc, int k, uint64_t prime, int trials,
                           uint64_t seed);

// Default word-size primes used by the acceptance suites.
inline constexpr uint64_t kPrimeA = 2147483647ULL;  // 2^31 - 1
inline constexpr uint64_t kPrimeB = 2147483629ULL;  // 2^31 - 19

}  // namespace secant::oracle
