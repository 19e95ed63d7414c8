#include "secant/models.hpp"

#include <algorithm>
#include <numeric>

namespace secant::models {

namespace {

// Generators materialise every point; refuse plainly un-desk-sized requests.
constexpr long long kMaxGeneratedSets = 1'000'000;

void check_set_budget(long long sets) {
    if (sets > kMaxGeneratedSets)
        throw input_error("configuration would have " + std::to_string(sets) +
                          " sets; limit is " + std::to_string(kMaxGeneratedSets));
}

long long checked_pow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1LL << 62) / base) throw input_error("ambient dimension overflows");
        r *= base;
    }
    return r;
}

std::string int_csv(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

// Words over {0..m-1}, length d, lexicographic, last letter fastest.
std::vector<std::vector<int>> words(int d, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> w(d, 0);
    while (true) {
        out.push_back(w);
        int pos = d - 1;
        while (pos >= 0 && w[pos] == m - 1) w[pos--] = 0;
        if (pos < 0) break;
        ++w[pos];
    }
    return out;
}

std::string word_label(const std::vector<int>& w, int m) {
    if (m <= 10) {
        std::string s;
        for (int c : w) s += static_cast<char>('0' + c);
        return s;
    }
    return int_csv(w);
}

}  // namespace

std::vector<std::vector<int>> compositions(int m, int d) {
    if (m < 1 || d < 0) throw input_error("compositions: bad parameters");
    if (m == 1) return {{d}};
    std::vector<std::vector<int>> out;
    for (int last = 0; last <= d; ++last) {
        for (auto prefix : compositions(m - 1, d - last)) {
            prefix.push_back(last);
            out.push_back(std::move(prefix));
        }
    }
    return out;
}

std::vector<QVec> PointConfig::all_points() const {
    std::vector<QVec> out;
    for (const auto& s : sets)
        for (const auto& p : s.points) out.push_back(p);
    return out;
}

bool PointConfig::all_singletons() const {
    return std::all_of(sets.begin(), sets.end(),
                       [](const Set& s) { return s.points.size() == 1; });
}

ModelDescriptor ModelDescriptor::veronese(int m, int d) {
    if (m < 2 || d < 1) throw input_error("veronese: need m >= 2, d >= 1");
    return {Family::veronese, m, d, {}};
}

ModelDescriptor ModelDescriptor::binary_forms(int d) {
    if (d < 1) throw input_error("binary_forms: need d >= 1");
    return {Family::binary_forms, 2, d, {}};
}

ModelDescriptor ModelDescriptor::segre(int d, int m) {
    if (d < 1 || m < 2) throw input_error("segre: need d >= 1, m >= 2");
    return {Family::segre, m, d, {}};
}

ModelDescriptor ModelDescriptor::segre_veronese(std::vector<std::pair<int, int>> factors) {
    if (factors.empty()) throw input_error("segre_veronese: empty factor list");
    for (auto [m, d] : factors)
        if (m < 2 || d < 1) throw input_error("segre_veronese: need m_i >= 2, d_i >= 1");
    ModelDescriptor desc{Family::segre_veronese, 0, 0, std::move(factors)};
    return desc;
}

ModelDescriptor ModelDescriptor::grassmannian(int m, int d) {
    if (d < 1 || 2 * d > m) throw input_error("grassmannian: need 1 <= d <= m/2");
    return {Family::grassmannian, m, d, {}};
}

long long ModelDescriptor::cone_dim() const {
    switch (family) {
        case Family::veronese:
        case Family::binary_forms:
            return m;
        case Family::segre:
            return static_cast<long long>(d) * (m - 1) + 1;
        case Family::segre_veronese: {
            long long s = 1;
            for (auto [mi, di] : factors) s += mi - 1;
            return s;
        }
        case Family::grassmannian:
            return static_cast<long long>(d) * (m - d) + 1;
    }
    throw input_error("bad family");
}

long long ModelDescriptor::ambient_space_dim() const {
    switch (family) {
        case Family::veronese:
        case Family::binary_forms:
            return binomial_ll(d + m - 1, m - 1);
        case Family::segre:
            return checked_pow(m, d);
        case Family::segre_veronese: {
            long long p = 1;
            for (auto [mi, di] : factors) {
                long long b = binomial_ll(di + mi - 1, mi - 1);
                if (p > (1LL << 62) / b) throw input_error("ambient dimension overflows");
                p *= b;
            }
            return p;
        }
        case Family::grassmannian:
            return binomial_ll(m, d);
    }
    throw input_error("bad family");
}

std::string ModelDescriptor::name() const {
    switch (family) {
        case Family::veronese:
            return "veronese(" + std::to_string(m) + "," + std::to_string(d) + ")";
        case Family::binary_forms:
            return "binary_forms(" + std::to_string(d) + ")";
        case Family::segre:
            return "segre(" + std::to_string(d) + "," + std::to_string(m) + ")";
        case Family::segre_veronese: {
            std::string s = "segre_veronese[";
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) s += ",";
                s += "(" + std::to_string(factors[i].first) + "," +
                     std::to_string(factors[i].second) + ")";
            }
            return s + "]";
        }
        case Family::grassmannian:
            return "grassmannian(" + std::to_string(m) + "," + std::to_string(d) + ")";
    }
    return "?";
}

std::pair<long long, long long> model_dims(const ModelDescriptor& desc) {
    return {desc.cone_dim(), desc.ambient_space_dim()};
}

long long expected_secant_dim(const ModelDescriptor& desc, int k) {
    if (k < 1) throw input_error("expected_secant_dim: need k >= 1");
    return std::min(static_cast<long long>(k) * desc.cone_dim(), desc.ambient_space_dim());
}

PointConfig veronese_config(int m, int d) {
    if (m < 2 || d < 1) throw input_error("veronese_config: need m >= 2, d >= 1");
    check_set_budget(binomial_ll(d + m - 1, m - 1));
    PointConfig cfg;
    cfg.ambient_dim = m;
    for (const auto& a : compositions(m, d)) {
        QVec pt(a.begin(), a.end());
        cfg.sets.push_back({int_csv(a), {std::move(pt)}});
    }
    return cfg;
}

PointConfig binary_forms_config(int d) { return veronese_config(2, d); }

PointConfig segre_config(int d, int m, bool reduced) {
    if (d < 1 || m < 2) throw input_error("segre_config: need d >= 1, m >= 2");
    check_set_budget(checked_pow(m, d));
    PointConfig cfg;
    cfg.ambient_dim = reduced ? d * (m - 1) : d * m;
    for (const auto& w : words(d, m)) {
        QVec pt(cfg.ambient_dim, Rat(0));
        for (int r = 0; r < d; ++r) {
            if (reduced) {
                // Delete the last column of each row; the letter m-1 becomes a zero row.
                if (w[r] < m - 1) pt[r * (m - 1) + w[r]] = 1;
            } else {
                pt[r * m + w[r]] = 1;
            }
        }
        cfg.sets.push_back({word_label(w, m), {std::move(pt)}});
    }
    return cfg;
}

PointConfig segre_veronese_config(const std::vector<std::pair<int, int>>& factors) {
    check_set_budget(ModelDescriptor::segre_veronese(factors).ambient_space_dim());
    int ambient = 0;
    std::vector<std::vector<std::vector<int>>> parts;
    for (auto [m, d] : factors) {
        parts.push_back(compositions(m, d));
        ambient += m;
    }
    PointConfig cfg;
    cfg.ambient_dim = ambient;
    std::vector<size_t> idx(factors.size(), 0);
    while (true) {
        QVec pt;
        std::string label;
        for (size_t f = 0; f < factors.size(); ++f) {
            const auto& a = parts[f][idx[f]];
            for (int x : a) pt.emplace_back(x);
            if (f) label += "|";
            label += int_csv(a);
        }
        cfg.sets.push_back({std::move(label), {std::move(pt)}});
        size_t pos = factors.size();
        while (pos > 0 && ++idx[pos - 1] == parts[pos - 1].size()) idx[--pos] = 0;
        if (pos == 0) break;
    }
    return cfg;
}

PointConfig grassmann_config(int m, int d) {
    if (d < 1 || 2 * d > m) throw input_error("grassmann_config: need 1 <= d <= m/2");
    long long sets = binomial_ll(m, d);
    check_set_budget(sets);
    for (int i = 2; i <= d; ++i) {
        sets *= i;  // point count; bounded before each step by the budget check
        check_set_budget(sets);
    }
    PointConfig cfg;
    cfg.ambient_dim = d * m;
    // d-subsets of {1..m} in lexicographic order.
    std::vector<int> subset(d);
    std::iota(subset.begin(), subset.end(), 1);
    while (true) {
        PointConfig::Set set;
        std::vector<int> label_cols = subset;
        set.label = int_csv(label_cols);
        std::vector<int> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            QVec pt(cfg.ambient_dim, Rat(0));
            for (int r = 0; r < d; ++r) pt[r * m + (subset[perm[r]] - 1)] = 1;
            set.points.push_back(std::move(pt));
        } while (std::next_permutation(perm.begin(), perm.end()));
        cfg.sets.push_back(std::move(set));

        int i = d - 1;
        while (i >= 0 && subset[i] == m - d + 1 + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < d; ++j) subset[j] = subset[j - 1] + 1;
    }
    return cfg;
}

PointConfig config_for(const ModelDescriptor& desc) {
    switch (desc.family) {
        case Family::veronese:
            return veronese_config(desc.m, desc.d);
        case Family::binary_forms:
            return binary_forms_config(desc.d);
        case Family::segre:
            return segre_config(desc.d, desc.m, /*reduced=*/desc.m == 2);
        case Family::segre_veronese:
            return segre_veronese_config(desc.factors);
        case Family::grassmannian:
            return grassmann_config(desc.m, desc.d);
    }
    throw input_error("bad family");
}

}  // namespace secant::models
