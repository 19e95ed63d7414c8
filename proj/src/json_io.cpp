#include "secant/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace secant::io {

json rat_to_json(const Rat& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p())
        return json(static_cast<int64_t>(r.get_num().get_si()));
    return json(rat_to_string(r));
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw input_error("rational must be an integer or a 'p/q' string");
}

json qvec_to_json(const QVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rat_to_json(x));
    return out;
}

QVec qvec_from_json(const json& j) {
    if (!j.is_array()) throw input_error("point must be an array");
    QVec v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

json config_to_json(const models::PointConfig& config) {
    json sets = json::array();
    for (const auto& s : config.sets) {
        json pts = json::array();
        for (const auto& p : s.points) pts.push_back(qvec_to_json(p));
        sets.push_back({{"label", s.label}, {"points", std::move(pts)}});
    }
    return {{"ambient_dim", config.ambient_dim}, {"sets", std::move(sets)}};
}

models::PointConfig config_from_json(const json& j) {
    models::PointConfig config;
    config.ambient_dim = j.at("ambient_dim").get<int>();
    if (config.ambient_dim < 1) throw input_error("ambient_dim must be positive");
    std::set<std::string> labels;
    for (const auto& s : j.at("sets")) {
        models::PointConfig::Set set;
        set.label = s.at("label").get<std::string>();
        if (!labels.insert(set.label).second)
            throw input_error("duplicate set label '" + set.label + "'");
        for (const auto& p : s.at("points")) {
            QVec v = qvec_from_json(p);
            if (static_cast<int>(v.size()) != config.ambient_dim)
                throw input_error("point dimension mismatch in set '" + set.label + "'");
            if (std::find(set.points.begin(), set.points.end(), v) == set.points.end())
                set.points.push_back(std::move(v));
        }
        if (set.points.empty())
            throw input_error("set '" + set.label + "' has no points");
        config.sets.push_back(std::move(set));
    }
    if (config.sets.empty()) throw input_error("configuration has no sets");
    return config;
}

json witness_to_json(const bounds::Witness& w) {
    json sites = json::array();
    for (const auto& s : w.sites) sites.push_back(qvec_to_json(s));
    json out = {{"sites", std::move(sites)}};
    if (w.offsets) {
        json offs = json::array();
        for (const auto& a : *w.offsets) offs.push_back(rat_to_json(a));
        out["offsets"] = std::move(offs);
    }
    return out;
}

bounds::Witness witness_from_json(const json& j) {
    bounds::Witness w;
    for (const auto& s : j.at("sites")) w.sites.push_back(qvec_from_json(s));
    if (w.sites.empty()) throw input_error("witness has no sites");
    if (j.contains("offsets")) {
        std::vector<Rat> offs;
        for (const auto& a : j.at("offsets")) offs.push_back(rat_from_json(a));
        if (offs.size() != w.sites.size())
            throw input_error("offsets length must equal site count");
        w.offsets = std::move(offs);
    }
    return w;
}

json gram_to_json(const geometry::GramForm& g) {
    json rows = json::array();
    for (const auto& r : g.matrix()) rows.push_back(qvec_to_json(r));
    return {{"matrix", std::move(rows)}};
}

geometry::GramForm gram_from_json(const json& j) {
    QMat m;
    for (const auto& r : j.at("matrix")) m.push_back(qvec_from_json(r));
    return geometry::GramForm(std::move(m));
}

json result_to_json(const bounds::PartitionResult& r) {
    json winning_sets = json::array(), directions = json::array(), dims = json::array();
    for (const auto& ws : r.winning_sets) winning_sets.push_back(ws);
    for (const auto& dirs : r.winning_directions) {
        json pts = json::array();
        for (const auto& p : dirs) pts.push_back(qvec_to_json(p));
        directions.push_back(std::move(pts));
    }
    for (int d : r.player_dims) dims.push_back(d);
    json out = {{"problem", bounds::problem_name(r.problem)},
                {"k", r.winning_sets.size()},
                {"winning_sets", std::move(winning_sets)},
                {"winning_directions", std::move(directions)},
                {"player_dims", std::move(dims)},
                {"total", r.total},
                {"ties", r.ties}};
    if (r.minima) {
        json minima = json::array();
        for (const auto& row : *r.minima) {
            json jr = json::array();
            for (const auto& x : row) jr.push_back(rat_to_json(x));
            minima.push_back(std::move(jr));
        }
        out["minima"] = std::move(minima);
    }
    return out;
}

bounds::PartitionResult result_from_json(const json& j) {
    bounds::PartitionResult r;
    r.problem = bounds::problem_from_name(j.at("problem").get<std::string>());
    for (const auto& ws : j.at("winning_sets"))
        r.winning_sets.push_back(ws.get<std::vector<std::string>>());
    for (const auto& dirs : j.at("winning_directions")) {
        std::vector<QVec> pts;
        for (const auto& p : dirs) pts.push_back(qvec_from_json(p));
        r.winning_directions.push_back(std::move(pts));
    }
    r.player_dims = j.at("player_dims").get<std::vector<int>>();
    r.total = j.at("total").get<long long>();
    r.ties = j.at("ties").get<std::vector<std::string>>();
    if (j.contains("minima")) {
        std::vector<std::vector<Rat>> minima;
        for (const auto& row : j.at("minima")) {
            std::vector<Rat> mr;
            for (const auto& x : row) mr.push_back(rat_from_json(x));
            minima.push_back(std::move(mr));
        }
        r.minima = std::move(minima);
    }
    return r;
}

json code_to_json(const codes::CodeSpec& code) {
    if (code.q > 10) throw input_error("code serialisation supports q <= 10");
    json words = json::array();
    for (const auto& w : code.words) {
        std::string s;
        for (int c : w) s += static_cast<char>('0' + c);
        words.push_back(std::move(s));
    }
    return {{"q", code.q}, {"length", code.length}, {"words", std::move(words)}};
}

codes::CodeSpec code_from_json(const json& j) {
    const int q = j.at("q").get<int>();
    const int length = j.at("length").get<int>();
    std::vector<std::vector<int>> words;
    for (const auto& sw : j.at("words")) {
        const std::string s = sw.get<std::string>();
        if (static_cast<int>(s.size()) != length)
            throw input_error("codeword '" + s + "' has wrong length");
        std::vector<int> w;
        for (char c : s) {
            if (c < '0' || c > '9') throw input_error("codeword symbols must be digits");
            w.push_back(c - '0');
        }
        words.push_back(std::move(w));
    }
    return codes::CodeSpec::from_words(q, length, std::move(words));
}

json model_to_json(const models::ModelDescriptor& desc) {
    switch (desc.family) {
        case models::Family::veronese:
            return {{"family", "veronese"}, {"m", desc.m}, {"d", desc.d}};
        case models::Family::binary_forms:
            return {{"family", "binary_forms"}, {"d", desc.d}};
        case models::Family::segre:
            return {{"family", "segre"}, {"d", desc.d}, {"m", desc.m}};
        case models::Family::segre_veronese: {
            json factors = json::array();
            for (auto [m, d] : desc.factors) factors.push_back({m, d});
            return {{"family", "segre_veronese"}, {"factors", std::move(factors)}};
        }
        case models::Family::grassmannian:
            return {{"family", "grassmannian"}, {"m", desc.m}, {"d", desc.d}};
    }
    throw input_error("bad family");
}

models::ModelDescriptor model_from_json(const json& j) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "veronese")
        return models::ModelDescriptor::veronese(j.at("m").get<int>(), j.at("d").get<int>());
    if (family == "binary_forms")
        return models::ModelDescriptor::binary_forms(j.at("d").get<int>());
    if (family == "segre")
        return models::ModelDescriptor::segre(j.at("d").get<int>(), j.at("m").get<int>());
    if (family == "segre_veronese") {
        std::vector<std::pair<int, int>> factors;
        for (const auto& f : j.at("factors"))
            factors.emplace_back(f.at(0).get<int>(), f.at(1).get<int>());
        return models::ModelDescriptor::segre_veronese(std::move(factors));
    }
    if (family == "grassmannian")
        return models::ModelDescriptor::grassmannian(j.at("m").get<int>(), j.at("d").get<int>());
    throw input_error("unknown family '" + family + "'");
}

json oracle_report_to_json(const oracle::OracleReport& report) {
    return {{"model", model_to_json(report.model)},
            {"k", report.k},
            {"prime", report.prime},
            {"trials", report.trials},
            {"rank_per_trial", report.rank_per_trial},
            {"reported_dim", report.reported_dim},
            {"matches_expected", report.matches_expected}};
}

json outcome_to_json(const search::SearchOutcome& outcome) {
    json trace = json::array();
    for (auto [step, value] : outcome.trace) trace.push_back({step, value});
    return {{"best_witness", witness_to_json(outcome.best_witness)},
            {"best_result", result_to_json(outcome.best_result)},
            {"trace", std::move(trace)}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << j.dump(1) << "\n";
}

}  // namespace secant::io
