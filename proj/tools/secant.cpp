// Command-line front end: generate support configurations, evaluate partition
// witnesses, search for good witnesses, compute code bounds, run the
// finite-field rank oracle, reproduce the headline results, and render
// planar figures.
//
// Exit codes: 0 success, 1 reproduction mismatch, 2 usage/parse error,
// 3 semantic mismatch (wrong problem/config pairing, unsupported projection).

#include "secant/json_io.hpp"
#include "secant/manifest.hpp"
#include "secant/prng.hpp"
#include "secant/render.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace secant;
using io::json;

namespace {

struct Global {
    uint64_t seed = 1;
    int jobs = 1;
    std::string output;
    std::string format = "text";
    std::vector<std::pair<std::string, std::string>> inputs;  // path -> hash

    void note_input(const std::string& path) { inputs.emplace_back(path, manifest::file_hash(path)); }

    void emit(const json& payload, const std::string& what, int argc, char** argv) {
        if (!output.empty()) {
            io::write_json_file(output, payload);
            manifest::RunManifest m;
            std::ostringstream cmd;
            for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
            m.command = cmd.str();
            m.inputs = inputs;
            m.seed = seed;
            m.outputs = {output};
            manifest::write_manifest(m, output);
            std::cout << what << " written to " << output << "\n";
        }
        if (format == "json" || output.empty()) std::cout << payload.dump(1) << "\n";
    }
};

models::ModelDescriptor parse_family(const std::string& family, int m, int d,
                                     const std::string& factors) {
    if (family == "veronese") return models::ModelDescriptor::veronese(m, d);
    if (family == "binary-forms" || family == "binary_forms")
        return models::ModelDescriptor::binary_forms(d);
    if (family == "segre") return models::ModelDescriptor::segre(d, m);
    if (family == "grassmann" || family == "grassmannian")
        return models::ModelDescriptor::grassmannian(m, d);
    if (family == "segre-veronese" || family == "segre_veronese") {
        // factors like "2,2;2,1" (m_i,d_i pairs)
        std::vector<std::pair<int, int>> fs;
        std::stringstream ss(factors);
        std::string part;
        while (std::getline(ss, part, ';')) {
            const auto comma = part.find(',');
            if (comma == std::string::npos)
                throw input_error("factors must look like m1,d1;m2,d2");
            fs.emplace_back(std::stoi(part.substr(0, comma)), std::stoi(part.substr(comma + 1)));
        }
        return models::ModelDescriptor::segre_veronese(fs);
    }
    throw input_error("unknown family '" + family + "'");
}

geometry::GramForm load_gram(Global& g, const std::string& path, int dim) {
    if (path.empty()) return geometry::GramForm::standard(dim);
    g.note_input(path);
    return io::gram_from_json(io::load_json_file(path));
}

struct ReproRow {
    std::string name;
    long long expected;
    long long actual;
    bool pass;
};

int report_rows(Global& g, const std::string& target, const std::vector<ReproRow>& rows,
                int argc, char** argv) {
    bool all = true;
    json jrows = json::array();
    for (const auto& r : rows) {
        all &= r.pass;
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  expected=" << r.expected
                  << " actual=" << r.actual << "\n";
        jrows.push_back({{"name", r.name},
                         {"expected", r.expected},
                         {"actual", r.actual},
                         {"pass", r.pass}});
    }
    std::cout << (all ? "OK" : "MISMATCH") << "  " << target << ": " << rows.size()
              << " checks\n";
    if (!g.output.empty()) {
        Global quiet = g;
        quiet.format = "quiet";
        quiet.emit(json{{"target", target}, {"rows", jrows}, {"pass", all}}, "report", argc, argv);
    }
    return all ? 0 : 1;
}

std::vector<ReproRow> reproduce_binary_forms(uint64_t seed, int dmax) {
    std::vector<ReproRow> rows;
    const auto gram = geometry::GramForm::standard(2);
    for (int d = 1; d <= dmax; ++d) {
        const auto cfg = models::binary_forms_config(d);
        const int kmax = (d + 1) / 2 + 2;
        for (int k = 1; k <= kmax; ++k) {
            search::SearchParams params;
            params.seed = mix64(seed, static_cast<uint64_t>(d * 100 + k));
            params.restarts = 1;
            params.steps = 40;
            auto out = search::anneal(cfg, k, bounds::Problem::voronoi, params,
                                      {search::binary_forms_midpoint_witness(d, k)});
            const long long want = std::min<long long>(2LL * k, d + 1);
            rows.push_back({"binary-forms d=" + std::to_string(d) + " k=" + std::to_string(k),
                            want, out.best_result.total, out.best_result.total == want});
        }
    }
    return rows;
}

std::vector<ReproRow> reproduce_veronese_m3(uint64_t seed, int dmax) {
    std::vector<ReproRow> rows;
    const auto gram = geometry::GramForm::standard(3);
    for (int d = 1; d <= std::min(dmax, 8); ++d) {
        const auto cfg = models::veronese_config(3, d);
        const long long n = static_cast<long long>(cfg.sets.size());
        const int kmax = static_cast<int>(search::build_veronese_m3_sites(d).size()) + 2;
        for (int k = 1; k <= kmax; ++k) {
            long long want = std::min<long long>(3LL * k, n);
            if (d == 2 && k == 2) want = 5;
            if (d == 4 && k == 5) want = 14;
            const auto w = search::veronese_m3_witness(d, k);
            const auto res = bounds::eval_voronoi_partition(cfg, w, gram);
            rows.push_back({"veronese m=3 d=" + std::to_string(d) + " k=" + std::to_string(k),
                            want, res.total, res.total == want});
        }
    }
    // independent rank oracle at the two defective spots, two primes, two seeds
    for (auto [d, k, dim] : {std::tuple{2, 2, 5LL}, {4, 5, 14LL}}) {
        if (d > dmax) continue;
        const auto desc = models::ModelDescriptor::veronese(3, d);
        for (uint64_t prime : {oracle::kPrimeA, oracle::kPrimeB})
            for (uint64_t s : {seed, seed + 1}) {
                const auto rep = oracle::terracini_dim(desc, k, prime, 2, s);
                rows.push_back({"oracle veronese(3," + std::to_string(d) +
                                    ") k=" + std::to_string(k) + " p=" + std::to_string(prime) +
                                    " seed=" + std::to_string(s),
                                dim, rep.reported_dim, rep.reported_dim == dim});
            }
    }
    return rows;
}

std::vector<ReproRow> reproduce_segre_p1_6(uint64_t seed) {
    std::vector<ReproRow> rows;
    const auto code = codes::code_from_parity_check(
        {{0, 0, 0, 1, 1, 1}, {0, 1, 1, 0, 0, 1}, {1, 0, 1, 0, 1, 0}}, 2);
    rows.push_back({"codewords", 8, static_cast<long long>(code.words.size()),
                    code.words.size() == 8});
    rows.push_back({"min distance", 3, code.min_distance, code.min_distance == 3});
    rows.push_back({"rook bound", 56, codes::rook_bound(code), codes::rook_bound(code) == 56});

    const auto cfg = models::segre_config(6, 2, true);
    QVec centre(6, frac(1, 2));
    const auto w = codes::code_to_segre_witness(code, {centre});
    const auto res = bounds::eval_voronoi_partition(cfg, w, geometry::GramForm::standard(6));
    rows.push_back({"voronoi total", 63, res.total, res.total == 63});

    // the centre cell consists of the eight complements of the codewords
    const auto& cell = res.winning_directions[8];
    bool complements = cell.size() == 8;
    for (const auto& word : code.words) {
        QVec comp(6);
        for (int i = 0; i < 6; ++i) comp[i] = 1 - word[i];
        complements &= std::find(cell.begin(), cell.end(), comp) != cell.end();
    }
    rows.push_back({"centre cell = complements", 8, static_cast<long long>(cell.size()),
                    complements});

    for (uint64_t prime : {oracle::kPrimeA, oracle::kPrimeB}) {
        const auto rep =
            oracle::terracini_dim(models::ModelDescriptor::segre(6, 2), 9, prime, 2, seed);
        rows.push_back({"oracle dim 9C p=" + std::to_string(prime), 63, rep.reported_dim,
                        rep.reported_dim == 63});
    }
    return rows;
}

std::vector<ReproRow> reproduce_code_bounds(uint64_t seed) {
    std::vector<ReproRow> rows;
    const auto gram3 = geometry::GramForm::standard(3);
    // corner witnesses against the closed-form corner bound
    for (int m = 2; m <= 4; ++m)
        for (int d = 1; d <= 4; ++d)
            for (int k = 1; k <= m; ++k) {
                std::vector<int> corners;
                for (int i = 1; i <= k; ++i) corners.push_back(i);
                const long long bound = codes::veronese_corner_bound(corners, m, d);
                const auto cfg = models::veronese_config(m, d);
                const auto g = geometry::GramForm::standard(m);
                const auto w =
                    search::perturb_witness(search::veronese_corner_witness(m, d, k), cfg, g);
                const auto res = bounds::eval_voronoi_partition(cfg, w, g);
                rows.push_back({"corner veronese(" + std::to_string(m) + "," + std::to_string(d) +
                                    ") k=" + std::to_string(k),
                                bound, res.total, res.total >= bound});
            }
    // random distance-3 binary codes against the rook bound
    Prng rng(mix64(seed, 0xc0de));
    for (int d = 2; d <= 5; ++d) {
        const auto cfg = models::segre_config(d, 2, true);
        const auto g = geometry::GramForm::standard(d);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<std::vector<int>> kept;
            for (int tries = 0; tries < 24; ++tries) {
                std::vector<int> word(d);
                for (auto& x : word) x = static_cast<int>(rng.below(2));
                bool ok = true;
                for (const auto& p : kept) ok &= codes::hamming_distance(p, word) >= 3;
                if (ok) kept.push_back(word);
            }
            const auto code = codes::CodeSpec::from_words(2, d, kept);
            const long long bound = codes::rook_bound(code);
            const auto w =
                search::perturb_witness(codes::code_to_segre_witness(code, {}), cfg, g);
            const auto res = bounds::eval_voronoi_partition(cfg, w, g);
            rows.push_back({"rook segre d=" + std::to_string(d) + " |B|=" +
                                std::to_string(code.words.size()) + " trial " +
                                std::to_string(trial),
                            bound, res.total, res.total >= bound});
        }
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lower bounds for secant dimensions of toric cones"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--seed", g.seed, "global PRNG seed");
    app.add_option("--jobs", g.jobs, "parallel restarts for searches");
    app.add_option("--output", g.output, "output file path");
    app.add_option("--format", g.format, "stdout format: text or json");

    // generate
    auto* gen = app.add_subcommand("generate", "write a support configuration");
    std::string family, factors;
    int opt_m = 0, opt_d = 0;
    bool reduced = false, unreduced = false;
    gen->add_option("--family", family, "veronese|binary-forms|segre|segre-veronese|grassmann")
        ->required();
    gen->add_option("--m", opt_m, "ambient parameter m");
    gen->add_option("--d", opt_d, "degree / number of factors d");
    gen->add_option("--factors", factors, "segre-veronese factors, e.g. 2,2;2,1");
    gen->add_flag("--reduced", reduced, "reduced Segre coordinates");
    gen->add_flag("--unreduced", unreduced, "unreduced Segre coordinates");

    // eval
    auto* ev = app.add_subcommand("eval", "evaluate a witness on a configuration");
    std::string problem = "voronoi", config_path, witness_path, gram_path;
    bool perturb = false, diagnostics = false;
    ev->add_option("--problem", problem, "linear|affine|voronoi")->required();
    ev->add_option("--config", config_path, "configuration JSON")->required();
    ev->add_option("--witness", witness_path, "witness JSON")->required();
    ev->add_option("--gram", gram_path, "Gram form JSON (default: standard)");
    ev->add_flag("--perturb", perturb, "resolve Voronoi ties deterministically first");
    ev->add_flag("--diagnostics", diagnostics, "keep per-(player,set) minima");

    // search
    auto* se = app.add_subcommand("search", "look for a high-value witness");
    std::string method = "anneal", candidates_path, seeds_path;
    int k = 1, restarts = 4, steps = 400, grid_den = 2;
    long long budget = 5'000'000;
    std::string cooling = "99/100", step_size = "1";
    se->add_option("--problem", problem, "linear|affine|voronoi")->required();
    se->add_option("--config", config_path, "configuration JSON")->required();
    se->add_option("--k", k, "number of sites")->required();
    se->add_option("--method", method, "anneal|brute");
    se->add_option("--candidates", candidates_path, "candidate sites (JSON array of points)");
    se->add_option("--seeds", seeds_path, "seed witnesses (JSON array)");
    se->add_option("--gram", gram_path, "Gram form JSON");
    se->add_option("--restarts", restarts, "anneal restarts");
    se->add_option("--steps", steps, "anneal steps per restart");
    se->add_option("--grid-denominator", grid_den, "rational grid denominator");
    se->add_option("--cooling", cooling, "cooling factor in (0,1)");
    se->add_option("--step-size", step_size, "initial step size");
    se->add_option("--budget", budget, "enumeration budget for brute force");

    // codes
    auto* co = app.add_subcommand("codes", "build codes and code bounds");
    std::string parity_path, code_path, bound, corners;
    int q = 2, weight = 0, distance = 0;
    co->add_option("--parity-check", parity_path, "parity check matrix JSON {\"matrix\":[[...]]}");
    co->add_option("--q", q, "alphabet size (prime for parity checks)");
    co->add_option("--code", code_path, "explicit code JSON");
    bool greedy = false;
    co->add_flag("--greedy", greedy, "greedy constant-weight code");
    co->add_option("--m", opt_m, "word length");
    co->add_option("--weight", weight, "constant weight");
    co->add_option("--distance", distance, "minimum distance for greedy");
    co->add_option("--bound", bound, "rook|grassmann|corner");
    co->add_option("--corners", corners, "corner indices, e.g. 1,2,3");
    co->add_option("--d", opt_d, "degree for the corner bound");

    // oracle
    auto* ora = app.add_subcommand("oracle", "finite-field Terracini rank probe");
    uint64_t prime = oracle::kPrimeA;
    int trials = 3;
    ora->add_option("--family", family, "model family")->required();
    ora->add_option("--m", opt_m, "ambient parameter m");
    ora->add_option("--d", opt_d, "degree d");
    ora->add_option("--factors", factors, "segre-veronese factors");
    ora->add_option("--k", k, "secant order")->required();
    ora->add_option("--prime", prime, "word-sized prime");
    ora->add_option("--trials", trials, "random trials");

    // reproduce
    auto* re = app.add_subcommand("reproduce", "re-run a headline computation");
    std::string target;
    int dmax = 12;
    re->add_option("target", target, "binary-forms|veronese-m3|segre-p1-6|code-bounds")
        ->required();
    re->add_option("--dmax", dmax, "largest degree");

    // render
    auto* rd = app.add_subcommand("render", "draw a planar configuration as SVG");
    rd->add_option("--config", config_path, "configuration JSON")->required();
    rd->add_option("--witness", witness_path, "witness JSON")->required();
    rd->add_option("--gram", gram_path, "Gram form JSON");

    // bundle (regenerates the shipped witness data)
    auto* bu = app.add_subcommand("bundle", "rebuild the bundled witness data file");

    for (auto* sub : {gen, ev, se, co, ora, re, rd, bu}) sub->fallthrough();

    try {
        app.parse(argc, argv);

        if (gen->parsed()) {
            models::PointConfig cfg;
            if ((family == "segre") && !unreduced && (reduced || opt_m == 2))
                cfg = models::segre_config(opt_d, opt_m, true);
            else if (family == "segre")
                cfg = models::segre_config(opt_d, opt_m, false);
            else
                cfg = models::config_for(parse_family(family, opt_m, opt_d, factors));
            std::cout << cfg.sets.size() << " sets, ambient dimension " << cfg.ambient_dim
                      << "\n";
            g.emit(io::config_to_json(cfg), "configuration", argc, argv);
            return 0;
        }
        if (ev->parsed()) {
            g.note_input(config_path);
            g.note_input(witness_path);
            const auto cfg = io::config_from_json(io::load_json_file(config_path));
            auto w = io::witness_from_json(io::load_json_file(witness_path));
            const auto gram = load_gram(g, gram_path, cfg.ambient_dim);
            const auto prob = bounds::problem_from_name(problem);
            if (perturb) {
                if (prob != bounds::Problem::voronoi)
                    throw mismatch_error("--perturb applies to the Voronoi problem");
                w = search::perturb_witness(w, cfg, gram);
            }
            const auto res = bounds::eval(prob, cfg, w, gram, diagnostics);
            std::cout << "total " << res.total << ", ties " << res.ties.size() << "\n";
            g.emit(io::result_to_json(res), "result", argc, argv);
            return 0;
        }
        if (se->parsed()) {
            g.note_input(config_path);
            const auto cfg = io::config_from_json(io::load_json_file(config_path));
            const auto prob = bounds::problem_from_name(problem);
            std::optional<geometry::GramForm> gram;
            if (!gram_path.empty()) gram = load_gram(g, gram_path, cfg.ambient_dim);
            search::SearchOutcome out;
            if (method == "brute") {
                if (candidates_path.empty())
                    throw input_error("brute search needs --candidates");
                g.note_input(candidates_path);
                std::vector<QVec> cands;
                for (const auto& p : io::load_json_file(candidates_path))
                    cands.push_back(io::qvec_from_json(p));
                out = search::brute_force(cfg, k, prob, cands, gram, budget);
            } else if (method == "anneal") {
                search::SearchParams params;
                params.seed = g.seed;
                params.restarts = restarts;
                params.steps = steps;
                params.candidate_grid_denominator = grid_den;
                params.cooling = rat_from_string(cooling);
                params.initial_step_size = rat_from_string(step_size);
                std::vector<bounds::Witness> seeds;
                if (!seeds_path.empty()) {
                    g.note_input(seeds_path);
                    for (const auto& sj : io::load_json_file(seeds_path))
                        seeds.push_back(io::witness_from_json(sj));
                }
                out = search::anneal(cfg, k, prob, params, seeds, gram, g.jobs);
            } else {
                throw input_error("unknown search method '" + method + "'");
            }
            std::cout << "best total " << out.best_result.total << "\n";
            g.emit(io::outcome_to_json(out), "search outcome", argc, argv);
            return 0;
        }
        if (co->parsed()) {
            std::optional<codes::CodeSpec> code;
            if (!parity_path.empty()) {
                g.note_input(parity_path);
                std::vector<std::vector<int>> h;
                for (const auto& row : io::load_json_file(parity_path).at("matrix"))
                    h.push_back(row.get<std::vector<int>>());
                code = codes::code_from_parity_check(h, q);
            } else if (greedy) {
                code = codes::greedy_constant_weight_code(opt_m, weight, distance);
            } else if (!code_path.empty()) {
                g.note_input(code_path);
                code = io::code_from_json(io::load_json_file(code_path));
            }
            json payload;
            if (code) {
                payload["code"] = io::code_to_json(*code);
                std::cout << code->words.size() << " codewords, min distance "
                          << code->min_distance << "\n";
            }
            if (bound == "rook") {
                if (!code) throw input_error("rook bound needs a code");
                payload["rook_bound"] = codes::rook_bound(*code);
                std::cout << "rook bound " << codes::rook_bound(*code) << "\n";
            } else if (bound == "grassmann") {
                if (!code) throw input_error("grassmann bound needs a code");
                payload["grassmann_bound"] = codes::grassmann_code_bound(*code);
                std::cout << "grassmann bound " << codes::grassmann_code_bound(*code) << "\n";
            } else if (bound == "corner") {
                std::vector<int> idx;
                std::stringstream ss(corners);
                std::string part;
                while (std::getline(ss, part, ',')) idx.push_back(std::stoi(part));
                payload["corner_bound"] = codes::veronese_corner_bound(idx, opt_m, opt_d);
                std::cout << "corner bound " << codes::veronese_corner_bound(idx, opt_m, opt_d)
                          << "\n";
            } else if (!bound.empty()) {
                throw input_error("unknown bound '" + bound + "'");
            }
            if (!code && bound.empty())
                throw input_error("codes: nothing to do (give --parity-check, --greedy, "
                                  "--code, or --bound corner)");
            g.emit(payload, "codes output", argc, argv);
            return 0;
        }
        if (ora->parsed()) {
            const auto desc = parse_family(family, opt_m, opt_d, factors);
            const auto rep = oracle::terracini_dim(desc, k, prime, trials, g.seed);
            std::cout << desc.name() << " k=" << k << ": reported dim " << rep.reported_dim
                      << " (expected " << models::expected_secant_dim(desc, k) << ", "
                      << (rep.matches_expected ? "match" : "below expected") << ")\n";
            g.emit(io::oracle_report_to_json(rep), "oracle report", argc, argv);
            return 0;
        }
        if (re->parsed()) {
            std::vector<ReproRow> rows;
            if (target == "binary-forms")
                rows = reproduce_binary_forms(g.seed, dmax);
            else if (target == "veronese-m3")
                rows = reproduce_veronese_m3(g.seed, std::min(dmax, 8));
            else if (target == "segre-p1-6")
                rows = reproduce_segre_p1_6(g.seed);
            else if (target == "code-bounds")
                rows = reproduce_code_bounds(g.seed);
            else
                throw input_error("unknown reproduce target '" + target + "'");
            return report_rows(g, target, rows, argc, argv);
        }
        if (rd->parsed()) {
            g.note_input(config_path);
            g.note_input(witness_path);
            const auto cfg = io::config_from_json(io::load_json_file(config_path));
            const auto w = io::witness_from_json(io::load_json_file(witness_path));
            const auto gram = load_gram(g, gram_path, cfg.ambient_dim);
            const auto res = bounds::eval_voronoi_partition(cfg, w, gram);
            const auto svg = render::render_svg(cfg, w, res);
            if (g.output.empty()) {
                std::cout << svg;
            } else {
                std::ofstream out(g.output);
                if (!out) throw input_error("cannot write " + g.output);
                out << svg;
                manifest::RunManifest m;
                std::ostringstream cmd;
                for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
                m.command = cmd.str();
                m.inputs = g.inputs;
                m.seed = g.seed;
                m.outputs = {g.output};
                manifest::write_manifest(m, g.output);
                std::cout << "figure written to " << g.output << "\n";
            }
            return 0;
        }
        if (bu->parsed()) {
            const std::string path =
                g.output.empty() ? search::default_data_dir() + "/veronese_m3.json" : g.output;
            search::write_veronese_m3_bundle(path);
            manifest::RunManifest m;
            std::ostringstream cmd;
            for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
            m.command = cmd.str();
            m.seed = g.seed;
            m.outputs = {path};
            manifest::write_manifest(m, path);
            std::cout << "bundle written to " << path << "\n";
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    } catch (const mismatch_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lift_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
