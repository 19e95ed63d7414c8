#include "secant/search.hpp"

#include "secant/prng.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <limits>
#include <map>
#include <optional>

#ifndef SECANT_WITNESS_DIR
#define SECANT_WITNESS_DIR "witnesses"
#endif

namespace secant::search {

using bounds::eval;
using bounds::eval_voronoi_partition;

void SearchParams::validate() const {
    if (restarts < 1) throw input_error("restarts must be >= 1");
    if (steps < 1) throw input_error("steps must be >= 1");
    if (!(cooling > 0 && cooling < 1)) throw input_error("cooling must lie in (0,1)");
    if (initial_step_size <= 0) throw input_error("initial_step_size must be positive");
    if (candidate_grid_denominator < 1) throw input_error("grid denominator must be >= 1");
}

namespace {

int cmp(const Rat& a, const Rat& b) { return mpq_cmp(a.get_mpq_t(), b.get_mpq_t()); }

// Total order on witnesses used for deterministic merges.
bool witness_less(const Witness& a, const Witness& b) {
    if (a.sites.size() != b.sites.size()) return a.sites.size() < b.sites.size();
    for (size_t i = 0; i < a.sites.size(); ++i) {
        if (a.sites[i].size() != b.sites[i].size()) return a.sites[i].size() < b.sites[i].size();
        for (size_t j = 0; j < a.sites[i].size(); ++j) {
            int c = cmp(a.sites[i][j], b.sites[i][j]);
            if (c) return c < 0;
        }
    }
    const bool ao = a.offsets.has_value(), bo = b.offsets.has_value();
    if (ao != bo) return bo;
    if (ao)
        for (size_t i = 0; i < a.offsets->size(); ++i) {
            int c = cmp((*a.offsets)[i], (*b.offsets)[i]);
            if (c) return c < 0;
        }
    return false;
}

GramForm gram_or_standard(const std::optional<GramForm>& g, int dim) {
    return g ? *g : GramForm::standard(dim);
}

Rat max_abs_coordinate(const PointConfig& config, const Witness* w = nullptr) {
    Rat m = 0;
    auto absorb = [&m](const QVec& v) {
        for (const auto& x : v) {
            Rat a = abs(x);
            if (a > m) m = a;
        }
    };
    for (const auto& set : config.sets)
        for (const auto& p : set.points) absorb(p);
    if (w)
        for (const auto& s : w->sites) absorb(s);
    return m;
}

}  // namespace

Witness with_far_sites(Witness w, const PointConfig& config, int count) {
    if (count <= 0) return w;
    const Rat bound = max_abs_coordinate(config, &w) + 1;
    const int m = config.ambient_dim;
    for (int t = 0; t < count; ++t) {
        const Rat s = bound * (m + 1) * (10 + 20 * t);
        QVec v(m);
        for (int j = 0; j < m; ++j) v[j] = (j % 2 == 0) ? s : -s;
        w.sites.push_back(std::move(v));
        // a large positive offset keeps padded sites out of affine contests too
        if (w.offsets) w.offsets->push_back(s * s);
    }
    return w;
}

SearchOutcome brute_force(const PointConfig& config, int k, Problem problem,
                          const std::vector<QVec>& candidates,
                          const std::optional<GramForm>& g, long long budget) {
    if (k < 1) throw input_error("brute_force: need k >= 1");
    const int n = static_cast<int>(candidates.size());
    if (n < k) throw input_error("brute_force: fewer candidates than sites");
    for (const auto& c : candidates)
        if (static_cast<int>(c.size()) != config.ambient_dim)
            throw input_error("brute_force: candidate dimension mismatch");

    mpz_class combos = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    if (problem == Problem::affine) {
        mpz_class grid = 1;
        for (int i = 0; i < k; ++i) grid *= 3;
        combos *= grid;
    }
    if (combos > mpz_class(std::to_string(budget))) {
        long long req = combos.fits_slong_p() ? combos.get_si() : std::numeric_limits<long long>::max();
        throw budget_error("brute_force: enumeration needs " + combos.get_str() +
                               " evaluations, budget is " + std::to_string(budget),
                           req);
    }

    const GramForm gram = gram_or_standard(g, config.ambient_dim);
    static const std::array<Rat, 3> kOffsetGrid = {Rat(0), frac(-1, 2), frac(1, 2)};

    SearchOutcome out;
    bool have_best = false;
    long long step = 0;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Witness w;
        for (int i = 0; i < k; ++i) w.sites.push_back(candidates[idx[i]]);
        std::vector<std::vector<int>> offset_digit_sets;
        if (problem == Problem::affine) {
            std::vector<int> digits(k, 0);
            while (true) {
                offset_digit_sets.push_back(digits);
                int pos = k - 1;
                while (pos >= 0 && digits[pos] == 2) digits[pos--] = 0;
                if (pos < 0) break;
                ++digits[pos];
            }
        } else {
            offset_digit_sets.push_back({});
        }
        for (const auto& digits : offset_digit_sets) {
            Witness cand = w;
            if (problem == Problem::affine) {
                cand.offsets.emplace(k);
                for (int i = 0; i < k; ++i) (*cand.offsets)[i] = kOffsetGrid[digits[i]];
            }
            PartitionResult res = eval(problem, config, cand, gram);
            ++step;
            if (!have_best || res.total > out.best_result.total) {
                out.best_witness = std::move(cand);
                out.best_result = std::move(res);
                out.trace.emplace_back(step, out.best_result.total);
                have_best = true;
            }
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

namespace {

struct RestartResult {
    Witness witness;
    PartitionResult result;
    std::vector<std::pair<long long, long long>> trace;
};

RestartResult anneal_restart(const PointConfig& config, int k, Problem problem,
                             const SearchParams& params, const std::vector<Witness>& seeds,
                             const GramForm& gram, int restart) {
    Prng rng(mix64(params.seed, static_cast<uint64_t>(restart)));
    const int m = config.ambient_dim;
    const auto points = config.all_points();
    const long q = params.candidate_grid_denominator;

    Rat step_units_rat = params.initial_step_size * q;
    long unit_cap = std::max<long>(1, static_cast<long>(step_units_rat.get_num().get_si() /
                                                        step_units_rat.get_den().get_si()));

    auto random_site = [&]() {
        const QVec& base = points[rng.below(points.size())];
        QVec v = base;
        for (int j = 0; j < m; ++j)
            v[j] += frac(static_cast<long>(rng.range(-q, q)), q);
        return v;
    };

    Witness cur;
    if (restart < static_cast<int>(seeds.size())) {
        cur = seeds[restart];
        if (problem == Problem::affine && !cur.offsets) cur.offsets.emplace(k, Rat(0));
        if (problem != Problem::affine) cur.offsets.reset();
        if (cur.k() != k) throw input_error("anneal: seed witness has wrong number of sites");
    } else {
        for (int i = 0; i < k; ++i) cur.sites.push_back(random_site());
        if (problem == Problem::affine) cur.offsets.emplace(k, Rat(0));
    }

    PartitionResult cur_res = eval(problem, config, cur, gram);
    RestartResult best{cur, cur_res, {{0, cur_res.total}}};

    double temp = 2.0;
    const double cool = mpq_get_d(params.cooling.get_mpq_t());
    for (int s = 1; s <= params.steps; ++s, temp *= cool) {
        Witness cand = cur;
        const uint64_t kind = rng.below(10);
        const int site = static_cast<int>(rng.below(static_cast<uint64_t>(k)));
        if (kind < 7) {
            const long units = 1 + static_cast<long>(rng.below(2 * unit_cap));
            const Rat delta = frac(rng.below(2) ? units : -units, q);
            if (problem == Problem::affine && rng.below(4) == 0) {
                (*cand.offsets)[site] += delta;
            } else {
                const int coord = static_cast<int>(rng.below(static_cast<uint64_t>(m)));
                cand.sites[site][coord] += delta;
            }
        } else {
            cand.sites[site] = random_site();
        }
        PartitionResult cand_res = eval(problem, config, cand, gram);
        const long long diff = cand_res.total - cur_res.total;
        bool accept = diff >= 0;
        if (!accept && temp > 1e-12)
            accept = rng.unit() < std::exp(static_cast<double>(diff) / temp);
        if (accept) {
            cur = std::move(cand);
            cur_res = std::move(cand_res);
            if (cur_res.total > best.result.total) {
                best.witness = cur;
                best.result = cur_res;
                best.trace.emplace_back(s, cur_res.total);
            }
        }
    }
    return best;
}

}  // namespace

SearchOutcome anneal(const PointConfig& config, int k, Problem problem,
                     const SearchParams& params, const std::vector<Witness>& seeds,
                     const std::optional<GramForm>& g, int jobs) {
    params.validate();
    if (k < 1) throw input_error("anneal: need k >= 1");
    const GramForm gram = gram_or_standard(g, config.ambient_dim);

    std::vector<RestartResult> results(params.restarts);
    if (jobs <= 1) {
        for (int r = 0; r < params.restarts; ++r)
            results[r] = anneal_restart(config, k, problem, params, seeds, gram, r);
    } else {
        std::vector<std::future<RestartResult>> futs;
        futs.reserve(params.restarts);
        for (int r = 0; r < params.restarts; ++r)
            futs.push_back(std::async(std::launch::async, [&, r] {
                return anneal_restart(config, k, problem, params, seeds, gram, r);
            }));
        for (int r = 0; r < params.restarts; ++r) results[r] = futs[r].get();
    }

    // Merge by (total, then lexicographic witness); independent of scheduling.
    int best = 0;
    for (int r = 1; r < params.restarts; ++r) {
        if (results[r].result.total > results[best].result.total ||
            (results[r].result.total == results[best].result.total &&
             witness_less(results[r].witness, results[best].witness)))
            best = r;
    }
    SearchOutcome out;
    out.best_witness = std::move(results[best].witness);
    out.trace = std::move(results[best].trace);
    out.best_result = eval(problem, config, out.best_witness, gram);
    return out;
}

Witness perturb_witness(const Witness& w, const PointConfig& config, const GramForm& g) {
    PartitionResult base = eval_voronoi_partition(config, w, g);
    if (base.ties.empty()) return w;

    Prng rng(0x5eca9700dULL);
    for (int attempt = 0; attempt < 256; ++attempt) {
        Rat mag(1);
        mag /= mpz_class(mpz_class(1) << (4 + std::min(attempt, 48)));
        Witness cand = w;
        for (auto& site : cand.sites) {
            bool nonzero = false;
            for (auto& x : site) {
                const long dir = static_cast<long>(rng.range(-3, 3));
                if (dir) nonzero = true;
                x += mag * dir;
            }
            if (!nonzero) site[0] += mag;
        }
        PartitionResult res = eval_voronoi_partition(config, cand, g);
        if (!res.ties.empty()) continue;
        bool preserved = true;
        for (int i = 0; i < w.k() && preserved; ++i)
            for (const auto& label : base.winning_sets[i]) {
                const auto& now = res.winning_sets[i];
                if (std::find(now.begin(), now.end(), label) == now.end()) {
                    preserved = false;
                    break;
                }
            }
        if (preserved) return cand;
    }
    throw mismatch_error("perturb_witness: could not resolve ties");
}

// ---------------------------------------------------------------------------
// Plane Veronese witnesses: unit-triangle partitions of the dilated simplex.
// Each partition centroid is a deep hole of the triangular lattice, so every
// lattice point is strictly nearer its own centroid than any other one.
// ---------------------------------------------------------------------------

namespace {

struct P2 {
    int a, b;
    bool operator<(const P2& o) const { return std::tie(b, a) < std::tie(o.b, o.a); }
    bool operator==(const P2& o) const { return a == o.a && b == o.b; }
};

using Cell = std::array<P2, 3>;

// Exact-cover search for a partition of pts into unit up/down triangles and,
// when allow_bent is set, 120-degree two-edge paths (needed on border strips
// that admit no pure triangle partition). Unit cells are preferred; skip
// selects the skip-th solution in search order so a caller can run down
// alternatives when an outer verification rejects one.
std::optional<std::vector<Cell>> tile_points(std::vector<P2> pts, bool allow_bent = false,
                                             int skip = 0) {
    std::sort(pts.begin(), pts.end());
    std::map<P2, int> index;
    for (size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
    auto at = [&](int a, int b) -> int {
        auto it = index.find({a, b});
        return it == index.end() ? -1 : it->second;
    };

    std::vector<std::array<int, 3>> cells;
    std::vector<Cell> cell_pts;
    for (const auto& p : pts) {
        const int p0 = index[p];
        // up triangle with p as its bottom-left corner
        int r = at(p.a + 1, p.b), u = at(p.a, p.b + 1);
        if (r >= 0 && u >= 0) {
            cells.push_back({p0, r, u});
            cell_pts.push_back({p, P2{p.a + 1, p.b}, P2{p.a, p.b + 1}});
        }
        // down triangle with p as its bottom corner
        int ul = at(p.a - 1, p.b + 1), ur = at(p.a, p.b + 1);
        if (ul >= 0 && ur >= 0) {
            cells.push_back({p0, ul, ur});
            cell_pts.push_back({p, P2{p.a - 1, p.b + 1}, P2{p.a, p.b + 1}});
        }
    }
    if (allow_bent) {
        static constexpr std::array<P2, 6> kSteps = {
            P2{1, 0}, P2{0, 1}, P2{-1, 1}, P2{-1, 0}, P2{0, -1}, P2{1, -1}};
        auto is_step = [&](int a, int b) {
            for (const auto& s : kSteps)
                if (s.a == a && s.b == b) return true;
            return false;
        };
        for (const auto& p : pts) {
            const int p0 = index[p];
            for (size_t i = 0; i < kSteps.size(); ++i)
                for (size_t j = i + 1; j < kSteps.size(); ++j) {
                    const auto &u2 = kSteps[i], &v2 = kSteps[j];
                    if (!is_step(u2.a + v2.a, u2.b + v2.b)) continue;  // 120 degrees
                    int qa = at(p.a + u2.a, p.b + u2.b), qb = at(p.a + v2.a, p.b + v2.b);
                    if (qa < 0 || qb < 0) continue;
                    cells.push_back({p0, qa, qb});
                    cell_pts.push_back(
                        {p, P2{p.a + u2.a, p.b + u2.b}, P2{p.a + v2.a, p.b + v2.b}});
                }
        }
    }
    std::vector<std::vector<int>> containing(pts.size());
    for (size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) containing[v].push_back(static_cast<int>(c));

    std::vector<bool> covered(pts.size(), false);
    std::vector<int> chosen;
    size_t cursor = 0;
    int remaining_skips = skip;

    auto dfs = [&](auto&& self) -> bool {
        while (cursor < pts.size() && covered[cursor]) ++cursor;
        if (cursor == pts.size()) return remaining_skips-- == 0;
        const size_t saved = cursor;
        for (int c : containing[saved]) {
            const auto& cell = cells[c];
            if (covered[cell[0]] || covered[cell[1]] || covered[cell[2]]) continue;
            for (int v : cell) covered[v] = true;
            chosen.push_back(c);
            if (self(self)) return true;
            chosen.pop_back();
            for (int v : cell) covered[v] = false;
            cursor = saved;
        }
        cursor = saved;
        return false;
    };
    if (!dfs(dfs)) return std::nullopt;

    std::vector<Cell> out;
    out.reserve(chosen.size());
    for (int c : chosen) out.push_back(cell_pts[c]);
    return out;
}

QVec lattice_point(const P2& p, int d) { return {Rat(p.a), Rat(p.b), Rat(d - p.a - p.b)}; }

QVec centroid(const Cell& cell, int d) {
    QVec g(3, Rat(0));
    for (const auto& p : cell) {
        const QVec v = lattice_point(p, d);
        for (int j = 0; j < 3; ++j) g[j] += v[j];
    }
    for (auto& x : g) x /= 3;
    return g;
}

QVec qvec3(const Rat& a, const Rat& b, const Rat& c) { return {a, b, c}; }

// Two-row border strip (rows c = 0, 1 of the degree-d simplex) tiled by an
// alternating up/down walk. skip_first_bottom drops the corner (0, d, 0),
// which becomes the singleton cell of degrees divisible by 3.
std::vector<Cell> two_row_strip(int d, bool skip_first_bottom) {
    auto bottom = [&](int i) { return P2{i, d - i}; };
    auto top = [&](int i) { return P2{i, d - 1 - i}; };
    std::vector<Cell> cells;
    int bi = skip_first_bottom ? 1 : 0;
    int ti = 0;
    while (bi <= d || ti <= d - 1) {
        if (bi == ti) {
            cells.push_back({bottom(bi), bottom(bi + 1), top(ti)});
            bi += 2;
            ti += 1;
        } else if (bi == ti + 1) {
            cells.push_back({bottom(bi), top(ti), top(ti + 1)});
            bi += 1;
            ti += 2;
        } else {
            throw mismatch_error("strip walk invariant broken");
        }
    }
    return cells;
}

}  // namespace

namespace {

// Degrees 5 and 7 admit no partition into unit lattice triangles; their
// figures need a few bent triples, each still captured strictly by a site at
// its centroid. Cell lists found by annealing and frozen here; the bundle
// builder re-verifies them through the evaluator.
std::vector<QVec> centroid_sites(const std::vector<std::array<std::array<int, 3>, 3>>& cells) {
    std::vector<QVec> sites;
    for (const auto& cell : cells) {
        QVec g(3, Rat(0));
        for (const auto& p : cell)
            for (int j = 0; j < 3; ++j) g[j] += p[j];
        for (auto& x : g) x /= 3;
        sites.push_back(std::move(g));
    }
    return sites;
}

const std::vector<std::array<std::array<int, 3>, 3>> kDegree5Cells = {
    {{{1, 4, 0}, {0, 5, 0}, {0, 4, 1}}}, {{{1, 0, 4}, {0, 1, 4}, {0, 0, 5}}},
    {{{0, 3, 2}, {1, 1, 3}, {0, 2, 3}}}, {{{3, 2, 0}, {2, 3, 0}, {3, 1, 1}}},
    {{{2, 2, 1}, {1, 3, 1}, {1, 2, 2}}}, {{{3, 0, 2}, {2, 1, 2}, {2, 0, 3}}},
    {{{5, 0, 0}, {4, 1, 0}, {4, 0, 1}}}};

const std::vector<std::array<std::array<int, 3>, 3>> kDegree7Cells = {
    {{{1, 4, 2}, {0, 5, 2}, {0, 4, 3}}}, {{{1, 0, 6}, {0, 1, 6}, {0, 0, 7}}},
    {{{0, 3, 4}, {1, 1, 5}, {0, 2, 5}}}, {{{4, 3, 0}, {3, 4, 0}, {3, 3, 1}}},
    {{{2, 2, 3}, {1, 3, 3}, {1, 2, 4}}}, {{{3, 0, 4}, {2, 1, 4}, {2, 0, 5}}},
    {{{5, 1, 1}, {5, 0, 2}, {4, 0, 3}}}, {{{1, 6, 0}, {0, 7, 0}, {0, 6, 1}}},
    {{{2, 5, 0}, {2, 4, 1}, {1, 5, 1}}}, {{{3, 2, 2}, {2, 3, 2}, {3, 1, 3}}},
    {{{5, 2, 0}, {4, 2, 1}, {4, 1, 2}}}, {{{7, 0, 0}, {6, 1, 0}, {6, 0, 1}}}};

}  // namespace

std::vector<QVec> build_veronese_m3_sites(int d) {
    if (d < 1 || d > 8) throw input_error("build_veronese_m3_sites: d must lie in 1..8");
    if (d == 2) {
        // No exact-dimension figure exists (the (2,2) defect): triangle, edge, point.
        return {qvec3(frac(1, 3), frac(1, 3), frac(4, 3)), qvec3(frac(3, 2), frac(1, 2), Rat(0)),
                qvec3(Rat(0), Rat(2), Rat(0))};
    }
    if (d == 4) {
        // The (4,5) defect: four triangles, an edge on the bottom row, and the
        // absorbed point (2,2,0) split off last.
        return {qvec3(frac(1, 3), frac(1, 3), frac(10, 3)), qvec3(frac(10, 3), frac(1, 3), frac(1, 3)),
                qvec3(frac(1, 3), frac(7, 3), frac(4, 3)),  qvec3(frac(5, 3), frac(2, 3), frac(5, 3)),
                qvec3(frac(1, 2), frac(7, 2), Rat(0)),     qvec3(Rat(2), Rat(2), Rat(0))};
    }
    if (d == 5) return centroid_sites(kDegree5Cells);
    if (d == 7) return centroid_sites(kDegree7Cells);

    std::vector<P2> pts;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) pts.push_back({a, b});
    const int n = static_cast<int>(pts.size());

    std::vector<QVec> sites;
    if (n % 3 == 0) {
        auto cover = tile_points(pts);
        if (!cover) throw mismatch_error("no triangle partition found for d=" + std::to_string(d));
        for (const auto& cell : *cover) sites.push_back(centroid(cell, d));
        return sites;
    }
    // One leftover point (d divisible by 3); its own site goes last.
    std::vector<P2> ordered = pts;
    std::sort(ordered.begin(), ordered.end());
    for (const auto& leftover : ordered) {
        std::vector<P2> rest;
        for (const auto& p : pts)
            if (!(p == leftover)) rest.push_back(p);
        auto cover = tile_points(rest);
        if (!cover) continue;
        for (const auto& cell : *cover) sites.push_back(centroid(cell, d));
        sites.push_back(lattice_point(leftover, d));
        return sites;
    }
    throw mismatch_error("no near-partition found for d=" + std::to_string(d));
}

std::string default_data_dir() {
    if (const char* env = std::getenv("SECANT_DATA_DIR")) return env;
    return SECANT_WITNESS_DIR;
}

void write_veronese_m3_bundle(const std::string& path) {
    nlohmann::json entries = nlohmann::json::array();
    for (int d = 1; d <= 8; ++d) {
        nlohmann::json sites = nlohmann::json::array();
        for (const auto& s : build_veronese_m3_sites(d)) {
            nlohmann::json site = nlohmann::json::array();
            for (const auto& x : s) site.push_back(rat_to_string(x));
            sites.push_back(std::move(site));
        }
        entries.push_back({{"d", d}, {"sites", std::move(sites)}});
    }
    nlohmann::json bundle = {{"version", "1"}, {"family", "veronese_m3"},
                             {"witnesses", std::move(entries)}};
    std::ofstream out(path);
    if (!out) throw input_error("cannot write bundle file " + path);
    out << bundle.dump(1) << "\n";
}

Witness veronese_m3_witness(int d, int k) { return veronese_m3_witness(d, k, default_data_dir()); }

Witness veronese_m3_witness(int d, int k, const std::string& data_dir) {
    if (d < 1 || d > 8)
        throw input_error("bundled witnesses cover d = 1..8 only; run search for other degrees");
    if (k < 1) throw input_error("veronese_m3_witness: need k >= 1");

    const std::string path = data_dir + "/veronese_m3.json";
    std::ifstream in(path);
    if (!in) throw input_error("cannot read witness bundle " + path);
    nlohmann::json bundle = nlohmann::json::parse(in);

    for (const auto& entry : bundle.at("witnesses")) {
        if (entry.at("d").get<int>() != d) continue;
        Witness w;
        for (const auto& site : entry.at("sites")) {
            QVec v;
            for (const auto& x : site)
                v.push_back(x.is_number_integer()
                                ? Rat(static_cast<long>(x.get<int64_t>()))
                                : rat_from_string(x.get<std::string>()));
            w.sites.push_back(std::move(v));
            if (w.k() == k) break;
        }
        if (w.k() < k)
            w = with_far_sites(std::move(w), models::veronese_config(3, d), k - w.k());
        return w;
    }
    throw input_error("bundle has no entry for d=" + std::to_string(d));
}

Witness extend_veronese_witness(const Witness& w, int source_d, int target_d) {
    const int diff = target_d - source_d;
    if (target_d < 9) throw input_error("extend_veronese_witness: target degree must be >= 9");
    if (diff != 2 && diff != 6) throw input_error("source degree must be target-2 or target-6");
    if (diff == 2 && target_d % 3 == 2)
        throw input_error("degrees = 2 mod 3 extend from target-6");
    if (diff == 6 && target_d % 3 != 2)
        throw input_error("only degrees = 2 mod 3 extend from target-6");
    for (const auto& s : w.sites)
        if (s.size() != 3) throw input_error("witness must live in Q^3");

    Witness base;
    for (const auto& s : w.sites) {
        QVec v = s;
        v[2] += diff;
        base.sites.push_back(std::move(v));
    }

    const int d = target_d;
    const auto cfg = models::veronese_config(3, d);
    const auto gram = GramForm::standard(3);
    const long long expected = (static_cast<long long>(d) + 1) * (d + 2) / 2;

    auto assemble = [&](const std::vector<Cell>& cells, bool singleton) {
        Witness out = base;
        for (const auto& cell : cells) out.sites.push_back(centroid(cell, d));
        if (singleton) out.sites.push_back(lattice_point(P2{0, d}, d));
        return out;
    };
    auto defect_note = [&](const PartitionResult& res, const Witness& out) {
        for (int i = 0; i < out.k(); ++i) {
            const auto sz = static_cast<long long>(res.winning_directions[i].size());
            if (res.player_dims[i] < sz)
                return "defective cell at site " + std::to_string(i) + ": " +
                       std::to_string(sz) + " points span affine dim " +
                       std::to_string(res.player_dims[i] - 1);
        }
        return "ties left unresolved: total " + std::to_string(res.total) + ", expected " +
               std::to_string(expected);
    };

    // Never hand back an unverified construction.
    if (diff == 2) {
        const bool singleton = d % 3 == 0;
        Witness out = assemble(two_row_strip(d, /*skip_first_bottom=*/singleton), singleton);
        const auto res = eval_voronoi_partition(cfg, out, gram);
        if (res.total != expected) throw mismatch_error("extension failed: " + defect_note(res, out));
        return out;
    }

    std::vector<P2> pts;
    for (int a = 0; a <= d; ++a)
        for (int b = std::max(0, d - 5 - a); a + b <= d; ++b) pts.push_back({a, b});
    std::string last_note = "six-row strip admits no partition into capturable cells";
    for (int skip = 0; skip < 32; ++skip) {
        auto cover = tile_points(pts, /*allow_bent=*/true, skip);
        if (!cover) break;
        Witness out = assemble(*cover, false);
        const auto res = eval_voronoi_partition(cfg, out, gram);
        if (res.total == expected) return out;
        last_note = defect_note(res, out);
    }
    throw mismatch_error("extension failed: " + last_note);
}

Witness binary_forms_midpoint_witness(int d, int k) {
    if (d < 1 || k < 1) throw input_error("binary_forms_midpoint_witness: need d, k >= 1");
    Witness w;
    const int pairs = (d + 1) / 2;
    for (int i = 1; i <= std::min(k, pairs); ++i) {
        // Midpoint of (2i-2, d-2i+2) and (2i-1, d-2i+1).
        w.sites.push_back({frac(4 * i - 3, 2), frac(2 * d - 4 * i + 3, 2)});
    }
    if (d % 2 == 0 && w.k() < k) w.sites.push_back({Rat(d), Rat(0)});
    if (w.k() < k)
        w = with_far_sites(std::move(w), models::binary_forms_config(d), k - w.k());
    return w;
}

Witness veronese_corner_witness(int m, int d, int k) {
    if (m < 2 || d < 1) throw input_error("veronese_corner_witness: need m >= 2, d >= 1");
    if (k < 1 || k > m) throw input_error("corner witness needs 1 <= k <= m");
    Witness w;
    for (int i = 0; i < k; ++i) {
        QVec v(m, Rat(0));
        v[i] = d;
        w.sites.push_back(std::move(v));
    }
    return w;
}

}  // namespace secant::search
