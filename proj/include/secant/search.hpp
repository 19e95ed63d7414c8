#pragma once

#include "secant/bounds.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace secant::search {

using bounds::GramForm;
using bounds::PartitionResult;
using bounds::PointConfig;
using bounds::Problem;
using bounds::Witness;

struct SearchParams {
    uint64_t seed = 1;
    int restarts = 4;
    int steps = 400;
    Rat initial_step_size = Rat(1);
    Rat cooling = frac(99, 100);
    int candidate_grid_denominator = 2;

    void validate() const;
};

struct SearchOutcome {
    Witness best_witness;
    PartitionResult best_result;
    std::vector<std::pair<long long, long long>> trace;  // (step, best value)
};

// Exhaustive maximum over all k-subsets of the candidate sites (for the affine
// problem, also over a small offset grid per subset). Deterministic; refuses
// with a budget_error when the enumeration would exceed the budget.
SearchOutcome brute_force(const PointConfig& config, int k, Problem problem,
                          const std::vector<QVec>& candidates,
                          const std::optional<GramForm>& g = std::nullopt,
                          long long budget = 5'000'000);

// Simulated annealing over grid-valued site moves. Deterministic for a fixed
// seed; restarts use independent substreams and merge by (value, lexicographic
// witness), so the result does not depend on scheduling.
SearchOutcome anneal(const PointConfig& config, int k, Problem problem,
                     const SearchParams& params,
                     const std::vector<Witness>& seeds = {},
                     const std::optional<GramForm>& g = std::nullopt, int jobs = 1);

// Deterministic tie resolution for Voronoi witnesses: displaces sites by a
// rational vector small enough that every strict cell assignment is preserved
// and every previously tied point acquires a strict winner. Tie-free witnesses
// are returned unchanged.
Witness perturb_witness(const Witness& w, const PointConfig& config, const GramForm& g);

// Ordered saturated site list for the plane Veronese of degree d (1..8),
// rebuilt deterministically from triangle partitions of the dilated simplex.
std::vector<QVec> build_veronese_m3_sites(int d);

// Bundled witness for the plane Veronese: the first k sites of the shipped
// degree-d list, padded with remote empty-cell sites when k exceeds it.
Witness veronese_m3_witness(int d, int k);
Witness veronese_m3_witness(int d, int k, const std::string& data_dir);

// Writes the bundle consumed by veronese_m3_witness.
void write_veronese_m3_bundle(const std::string& path);
std::string default_data_dir();

// Grows a saturated degree-(target-2) or degree-(target-6) witness to degree
// target_d by tiling the added border strip; the result is verified by the
// Voronoi evaluator before it is returned.
Witness extend_veronese_witness(const Witness& w, int source_d, int target_d);

// Seed constructions.
Witness binary_forms_midpoint_witness(int d, int k);
Witness veronese_corner_witness(int m, int d, int k);
// Pads a witness with count remote sites that win nothing.
Witness with_far_sites(Witness w, const PointConfig& config, int count);

}  // namespace secant::search
