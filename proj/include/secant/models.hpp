#pragma once

#include "secant/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace secant::models {

// A labelled family of finite point sets A_b in Q^m, one per basis vector of
// the target space. Singleton sets for monomial parametrisations.
struct PointConfig {
    struct Set {
        std::string label;
        std::vector<QVec> points;
    };
    int ambient_dim = 0;
    std::vector<Set> sets;

    // All points of all sets, config order, duplicates kept.
    std::vector<QVec> all_points() const;
    bool all_singletons() const;
};

enum class Family { veronese, binary_forms, segre, segre_veronese, grassmannian };

struct ModelDescriptor {
    Family family;
    // veronese: m,d; binary_forms: d (m=2); segre: d factors of P^{m-1};
    // grassmannian: d-planes in K^m; segre_veronese: list of (m_i, d_i).
    int m = 0;
    int d = 0;
    std::vector<std::pair<int, int>> factors;

    static ModelDescriptor veronese(int m, int d);
    static ModelDescriptor binary_forms(int d);
    static ModelDescriptor segre(int d, int m);
    static ModelDescriptor segre_veronese(std::vector<std::pair<int, int>> factors);
    static ModelDescriptor grassmannian(int m, int d);

    long long cone_dim() const;
    long long ambient_space_dim() const;
    std::string name() const;
};

// (dim C, dim V)
std::pair<long long, long long> model_dims(const ModelDescriptor& desc);

// min(k * dim C, dim V)
long long expected_secant_dim(const ModelDescriptor& desc, int k);

// Exponent-vector supports. Multi-index enumeration is colexicographic.
PointConfig veronese_config(int m, int d);
PointConfig binary_forms_config(int d);
PointConfig segre_config(int d, int m, bool reduced);
PointConfig segre_veronese_config(const std::vector<std::pair<int, int>>& factors);
PointConfig grassmann_config(int m, int d);

// The support configuration the evaluators use for this model
// (reduced coordinates for binary Segre powers).
PointConfig config_for(const ModelDescriptor& desc);

// All multi-indices a in N^m with |a| = d, colex order.
std::vector<std::vector<int>> compositions(int m, int d);

}  // namespace secant::models
