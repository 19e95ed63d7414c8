#pragma once

#include "secant/geometry.hpp"
#include "secant/models.hpp"

#include <optional>
#include <string>
#include <vector>

namespace secant::bounds {

using geometry::GramForm;
using models::PointConfig;

enum class Problem { linear, affine, voronoi };

std::string problem_name(Problem p);
Problem problem_from_name(const std::string& name);

// k sites in Q^m, plus one offset per site for the affine problem.
struct Witness {
    std::vector<QVec> sites;
    std::optional<std::vector<Rat>> offsets;

    int k() const { return static_cast<int>(sites.size()); }
};

struct PartitionResult {
    Problem problem = Problem::linear;
    // Per player: labels of the sets won, and the winning points (deduplicated,
    // config order). player_dims[i] is dim<D_i> for the linear problem and
    // 1 + affdim(D_i) otherwise; empty D_i contributes 0 either way.
    std::vector<std::vector<std::string>> winning_sets;
    std::vector<std::vector<QVec>> winning_directions;
    std::vector<int> player_dims;
    long long total = 0;
    std::vector<std::string> ties;
    // Optional diagnostics: per (player, set) the minimum of <v_i, a> (+ a_i)
    // over the set, or the squared distance to the site for Voronoi.
    std::optional<std::vector<std::vector<Rat>>> minima;
};

// Strict-minimiser semantics throughout: a pair (i, a) wins a set only when it
// beats every other pair, including the same player's other points. Ties are
// reported, never perturbed here.
PartitionResult eval_linear_partition(const PointConfig& config, const Witness& w,
                                      bool keep_minima = false);
PartitionResult eval_affine_partition(const PointConfig& config, const Witness& w,
                                      bool keep_minima = false);
// Requires every set to be a singleton and w to carry no offsets.
PartitionResult eval_voronoi_partition(const PointConfig& config, const Witness& w,
                                       const GramForm& g, bool keep_minima = false);

PartitionResult eval(Problem problem, const PointConfig& config, const Witness& w,
                     const GramForm& g, bool keep_minima = false);

// Affine-linear map a -> matrix*a + offset from Q^m to Q^{m'}.
struct AffineMap {
    QMat matrix;  // m' x m
    QVec offset;  // length m'; empty means zero

    QVec apply(const QVec& p) const;
    static AffineMap delete_coordinates(int m, const std::vector<int>& drop);
};

// Image configuration; duplicates within a set are merged, labels preserved.
PointConfig project_config(const PointConfig& config, const AffineMap& map);

// For configurations on the hyperplane <h, a> = c (c != 0): absorb the offsets
// into the sites, v_i' = v_i + (a_i / c) h, preserving every strict inequality.
Witness affine_to_linear_witness(const Witness& w, const QVec& h, const Rat& c);

// Sphere-lift conversion of a Voronoi witness into an affine witness that
// reproduces every strict cell membership on the given point set. The lift
// height must be large enough for the chordal approximation to respect all
// strict inequalities; otherwise a lift_error with a suggested height is thrown.
Witness voronoi_to_affine_witness(const PointConfig& config, const Witness& w,
                                  const GramForm& g, const Rat& lift_height);

}  // namespace secant::bounds
