#include "secant/bounds.hpp"

#include <algorithm>

namespace secant::bounds {

using geometry::affine_dim;
using geometry::dist_sq;
using geometry::dot;
using geometry::rank;

std::string problem_name(Problem p) {
    switch (p) {
        case Problem::linear: return "linear";
        case Problem::affine: return "affine";
        case Problem::voronoi: return "voronoi";
    }
    return "?";
}

Problem problem_from_name(const std::string& name) {
    if (name == "linear") return Problem::linear;
    if (name == "affine") return Problem::affine;
    if (name == "voronoi") return Problem::voronoi;
    throw input_error("unknown problem '" + name + "'");
}

namespace {

void check_witness_dims(const PointConfig& config, const Witness& w) {
    if (w.sites.empty()) throw input_error("witness needs at least one site");
    for (const auto& v : w.sites)
        if (static_cast<int>(v.size()) != config.ambient_dim)
            throw input_error("witness site dimension mismatch");
    if (w.offsets && static_cast<int>(w.offsets->size()) != w.k())
        throw input_error("offsets length must equal number of sites");
}

void push_direction(std::vector<QVec>& dirs, const QVec& p) {
    if (std::find(dirs.begin(), dirs.end(), p) == dirs.end()) dirs.push_back(p);
}

// Shared core of the linear and affine evaluators; they differ only in the
// per-pair value and the dimension functional.
PartitionResult eval_pairing(const PointConfig& config, const Witness& w, bool affine,
                             bool keep_minima) {
    check_witness_dims(config, w);
    const int k = w.k();
    PartitionResult res;
    res.problem = affine ? Problem::affine : Problem::linear;
    res.winning_sets.resize(k);
    res.winning_directions.resize(k);
    res.player_dims.assign(k, 0);
    if (keep_minima)
        res.minima.emplace(k, std::vector<Rat>(config.sets.size()));

    for (size_t b = 0; b < config.sets.size(); ++b) {
        const auto& set = config.sets[b];
        if (set.points.empty()) throw input_error("empty point set '" + set.label + "'");
        bool have_best = false;
        Rat best;
        int best_player = -1;
        const QVec* best_point = nullptr;
        bool tie = false;
        for (int i = 0; i < k; ++i) {
            bool have_min_i = false;
            Rat min_i;
            for (const auto& a : set.points) {
                Rat val = dot(w.sites[i], a);
                if (affine) val += (*w.offsets)[i];
                if (!have_min_i || val < min_i) {
                    min_i = val;
                    have_min_i = true;
                }
                if (!have_best || val < best) {
                    best = val;
                    best_player = i;
                    best_point = &a;
                    have_best = true;
                    tie = false;
                } else if (val == best) {
                    tie = true;
                }
            }
            if (keep_minima) (*res.minima)[i][b] = min_i;
        }
        if (tie) {
            res.ties.push_back(set.label);
        } else {
            res.winning_sets[best_player].push_back(set.label);
            push_direction(res.winning_directions[best_player], *best_point);
        }
    }

    for (int i = 0; i < k; ++i) {
        res.player_dims[i] = affine
            ? (res.winning_directions[i].empty() ? 0 : 1 + affine_dim(res.winning_directions[i]))
            : rank(res.winning_directions[i]);
        res.total += res.player_dims[i];
    }
    return res;
}

}  // namespace

PartitionResult eval_linear_partition(const PointConfig& config, const Witness& w,
                                      bool keep_minima) {
    if (w.offsets) throw input_error("linear partition takes no offsets");
    return eval_pairing(config, w, /*affine=*/false, keep_minima);
}

PartitionResult eval_affine_partition(const PointConfig& config, const Witness& w,
                                      bool keep_minima) {
    if (!w.offsets) throw input_error("affine partition requires offsets");
    return eval_pairing(config, w, /*affine=*/true, keep_minima);
}

PartitionResult eval_voronoi_partition(const PointConfig& config, const Witness& w,
                                       const GramForm& g, bool keep_minima) {
    if (!config.all_singletons())
        throw mismatch_error("Voronoi partition requires singleton sets");
    if (w.offsets) throw input_error("Voronoi partition takes no offsets");
    if (g.dim() != config.ambient_dim) throw input_error("Gram form dimension mismatch");
    check_witness_dims(config, w);

    const int k = w.k();
    PartitionResult res;
    res.problem = Problem::voronoi;
    res.winning_sets.resize(k);
    res.winning_directions.resize(k);
    res.player_dims.assign(k, 0);
    if (keep_minima)
        res.minima.emplace(k, std::vector<Rat>(config.sets.size()));

    for (size_t b = 0; b < config.sets.size(); ++b) {
        const auto& set = config.sets[b];
        const QVec& a = set.points.front();
        Rat best;
        int best_player = -1;
        bool tie = false;
        for (int i = 0; i < k; ++i) {
            Rat d = dist_sq(w.sites[i], a, g);
            if (keep_minima) (*res.minima)[i][b] = d;
            if (best_player < 0 || d < best) {
                best = d;
                best_player = i;
                tie = false;
            } else if (d == best) {
                tie = true;
            }
        }
        if (tie) {
            res.ties.push_back(set.label);
        } else {
            res.winning_sets[best_player].push_back(set.label);
            push_direction(res.winning_directions[best_player], a);
        }
    }

    for (int i = 0; i < k; ++i) {
        res.player_dims[i] =
            res.winning_directions[i].empty() ? 0 : 1 + affine_dim(res.winning_directions[i]);
        res.total += res.player_dims[i];
    }
    return res;
}

PartitionResult eval(Problem problem, const PointConfig& config, const Witness& w,
                     const GramForm& g, bool keep_minima) {
    switch (problem) {
        case Problem::linear: return eval_linear_partition(config, w, keep_minima);
        case Problem::affine: return eval_affine_partition(config, w, keep_minima);
        case Problem::voronoi: return eval_voronoi_partition(config, w, g, keep_minima);
    }
    throw input_error("bad problem");
}

QVec AffineMap::apply(const QVec& p) const {
    if (!matrix.empty() && matrix.front().size() != p.size())
        throw input_error("affine map: dimension mismatch");
    QVec out(matrix.size(), Rat(0));
    for (size_t i = 0; i < matrix.size(); ++i) {
        for (size_t j = 0; j < p.size(); ++j)
            if (matrix[i][j] != 0) out[i] += matrix[i][j] * p[j];
        if (!offset.empty()) out[i] += offset[i];
    }
    return out;
}

AffineMap AffineMap::delete_coordinates(int m, const std::vector<int>& drop) {
    AffineMap map;
    for (int j = 0; j < m; ++j) {
        if (std::find(drop.begin(), drop.end(), j) != drop.end()) continue;
        QVec row(m, Rat(0));
        row[j] = 1;
        map.matrix.push_back(std::move(row));
    }
    return map;
}

PointConfig project_config(const PointConfig& config, const AffineMap& map) {
    if (!map.matrix.empty() && static_cast<int>(map.matrix.front().size()) != config.ambient_dim)
        throw input_error("project_config: map dimension mismatch");
    PointConfig out;
    out.ambient_dim = static_cast<int>(map.matrix.size());
    for (const auto& set : config.sets) {
        PointConfig::Set img;
        img.label = set.label;
        for (const auto& p : set.points) {
            QVec q = map.apply(p);
            if (std::find(img.points.begin(), img.points.end(), q) == img.points.end())
                img.points.push_back(std::move(q));
        }
        out.sets.push_back(std::move(img));
    }
    return out;
}

Witness affine_to_linear_witness(const Witness& w, const QVec& h, const Rat& c) {
    if (!w.offsets) throw input_error("affine_to_linear_witness: witness has no offsets");
    if (c == 0) throw input_error("hyperplane must avoid the origin (c != 0)");
    for (const auto& v : w.sites)
        if (v.size() != h.size()) throw input_error("hyperplane dimension mismatch");
    Witness out;
    out.sites.reserve(w.sites.size());
    for (size_t i = 0; i < w.sites.size(); ++i) {
        const Rat f = (*w.offsets)[i] / c;
        QVec v = w.sites[i];
        for (size_t j = 0; j < v.size(); ++j) v[j] += f * h[j];
        out.sites.push_back(std::move(v));
    }
    return out;
}

namespace {

// Lower rational approximation of 1 / sqrt(s), error below 1 / (num * 2^prec).
Rat inv_sqrt_lower(const Rat& s, unsigned prec) {
    // 1/sqrt(num/den) = sqrt(num*den) / num
    const mpz_class num = s.get_num(), den = s.get_den();
    mpz_class scaled = num * den;
    mpz_class shift = mpz_class(1) << prec;
    scaled *= shift * shift;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Rat r(root, num * shift);
    r.canonicalize();
    return r;
}

}  // namespace

Witness voronoi_to_affine_witness(const PointConfig& config, const Witness& w,
                                  const GramForm& g, const Rat& lift_height) {
    if (w.offsets) throw input_error("voronoi witness must not carry offsets");
    if (!config.all_singletons())
        throw mismatch_error("voronoi_to_affine_witness requires singleton sets");
    if (lift_height <= 0) throw input_error("lift height must be positive");
    check_witness_dims(config, w);
    if (g.dim() != config.ambient_dim) throw input_error("Gram form dimension mismatch");

    const int k = w.k();
    const Rat m2 = lift_height * lift_height;
    std::vector<Rat> s(k);  // squared lifted norms |(v_i, M)|^2
    for (int i = 0; i < k; ++i) s[i] = g.inner(w.sites[i], w.sites[i]) + m2;

    // Strict Voronoi relations that the affine witness must reproduce:
    // for each point, every ordered pair (closer site, farther site).
    struct Constraint {
        int i, j;
        Rat ti, tj;  // (a, v_i)_G + M^2 and (a, v_j)_G + M^2
    };
    std::vector<Constraint> constraints;
    for (const auto& set : config.sets) {
        const QVec& a = set.points.front();
        std::vector<Rat> d(k), t(k);
        for (int i = 0; i < k; ++i) {
            d[i] = dist_sq(w.sites[i], a, g);
            t[i] = g.inner(a, w.sites[i]) + m2;
        }
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j || !(d[i] < d[j])) continue;
                // Exact chordal comparison: t_i / sqrt(s_i) > t_j / sqrt(s_j).
                bool holds;
                if (t[i] <= 0)
                    holds = false;
                else if (t[j] <= 0)
                    holds = true;
                else
                    holds = t[i] * t[i] * s[j] > t[j] * t[j] * s[i];
                if (!holds)
                    throw lift_error("lift height " + rat_to_string(lift_height) +
                                         " cannot separate all strict Voronoi relations; "
                                         "retry with a larger height",
                                     lift_height * 2);
                constraints.push_back({i, j, t[i], t[j]});
            }
    }

    // Rational approximations of 1/sqrt(s_i), refined until every strict
    // inequality is decided by the approximations themselves.
    std::vector<Rat> r(k);
    for (unsigned prec = 32;; prec *= 2) {
        for (int i = 0; i < k; ++i) r[i] = inv_sqrt_lower(s[i], prec);
        bool ok = true;
        for (const auto& c : constraints)
            if (!(c.ti * r[c.i] > c.tj * r[c.j])) {
                ok = false;
                break;
            }
        if (ok) break;
        if (prec > (1u << 20))
            throw lift_error("certification did not converge; retry with a larger height",
                             lift_height * 2);
    }

    Witness out;
    out.sites.resize(k);
    out.offsets.emplace(k);
    for (int i = 0; i < k; ++i) {
        QVec gv(config.ambient_dim, Rat(0));
        for (int row = 0; row < config.ambient_dim; ++row)
            for (int col = 0; col < config.ambient_dim; ++col)
                gv[row] += g.matrix()[row][col] * w.sites[i][col];
        for (auto& x : gv) x *= -r[i];
        out.sites[i] = std::move(gv);
        (*out.offsets)[i] = -r[i] * m2;
    }
    return out;
}

}  // namespace secant::bounds
