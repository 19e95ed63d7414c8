#include "secant/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace secant::render {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
    "#f032e6", "#9a6324", "#008080", "#808000", "#000075", "#ffb000"};

constexpr int kUnit = 40;  // pixels per lattice step
constexpr int kMargin = 40;

// sqrt(3)/2, fixed rational approximation; display only.
const Rat kRowHeight = frac(8660254, 10000000);

std::pair<Rat, Rat> project(const QVec& p) {
    switch (p.size()) {
        case 1: return {p[0], Rat(0)};
        case 2: return {p[0], p[1]};
        case 3: return {p[1] + p[2] / 2, p[2] * kRowHeight};
        default: throw mismatch_error("render: unsupported ambient dimension");
    }
}

// Fixed two-decimal formatting with exact rounding.
std::string px(const Rat& r) {
    Rat scaled = r * 100;
    mpz_class num = scaled.get_num(), den = scaled.get_den();
    mpz_class q;
    // round half up toward +infinity
    mpz_class twice = 2 * num + den;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    const bool neg = q < 0;
    mpz_class a = abs(q);
    mpz_class whole = a / 100, frac = a % 100;
    std::string s = (neg ? "-" : "") + whole.get_str() + ".";
    const std::string f = frac.get_str();
    s += f.size() == 1 ? "0" + f : f;
    return s;
}

}  // namespace

std::string render_svg(const models::PointConfig& config, const bounds::Witness& w,
                       const bounds::PartitionResult& result) {
    if (config.ambient_dim > 3)
        throw mismatch_error(
            "render: supported projections are ambient dim 1, 2, or the constant-sum plane "
            "in dim 3");
    if (config.ambient_dim == 3) {
        Rat sum0;
        bool first = true;
        for (const auto& set : config.sets)
            for (const auto& p : set.points) {
                Rat s = p[0] + p[1] + p[2];
                if (first) {
                    sum0 = s;
                    first = false;
                } else if (s != sum0) {
                    throw mismatch_error(
                        "render: 3-dimensional configurations must lie on a constant-sum "
                        "plane");
                }
            }
    }

    struct Mark {
        Rat x, y;
        int player;  // -1: tie
        bool site;
    };
    std::vector<Mark> marks;

    auto owner_of = [&](const std::string& label) {
        for (size_t i = 0; i < result.winning_sets.size(); ++i)
            if (std::find(result.winning_sets[i].begin(), result.winning_sets[i].end(), label) !=
                result.winning_sets[i].end())
                return static_cast<int>(i);
        return -1;
    };

    for (const auto& set : config.sets) {
        const int player = owner_of(set.label);
        for (const auto& p : set.points) {
            auto [x, y] = project(p);
            marks.push_back({x, y, player, false});
        }
    }
    for (int i = 0; i < w.k(); ++i) {
        auto [x, y] = project(w.sites[i]);
        marks.push_back({x, y, i, true});
    }

    Rat minx = marks.front().x, maxx = minx, miny = marks.front().y, maxy = miny;
    for (const auto& m : marks) {
        if (m.x < minx) minx = m.x;
        if (maxx < m.x) maxx = m.x;
        if (m.y < miny) miny = m.y;
        if (maxy < m.y) maxy = m.y;
    }

    auto to_px = [&](const Rat& x, const Rat& y) {
        return std::pair<Rat, Rat>{kMargin + kUnit * (x - minx), kMargin + kUnit * (maxy - y)};
    };
    const Rat width = kMargin * 2 + kUnit * (maxx - minx);
    const Rat height = kMargin * 2 + kUnit * (maxy - miny);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width) << "\" height=\""
        << px(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    for (const auto& m : marks) {
        auto [cx, cy] = to_px(m.x, m.y);
        if (m.site) {
            const char* color = kPalette[m.player % kPalette.size()];
            svg << "<path d=\"M " << px(cx) << " " << px(cy - 8) << " L " << px(cx + 8) << " "
                << px(cy) << " L " << px(cx) << " " << px(cy + 8) << " L " << px(cx - 8) << " "
                << px(cy) << " Z\" fill=\"" << color << "\" stroke=\"#000000\"/>\n";
        } else if (m.player < 0) {
            svg << "<circle cx=\"" << px(cx) << "\" cy=\"" << px(cy)
                << "\" r=\"6\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
        } else {
            const char* color = kPalette[m.player % kPalette.size()];
            svg << "<circle cx=\"" << px(cx) << "\" cy=\"" << px(cy) << "\" r=\"6\" fill=\""
                << color << "\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace secant::render
