#include "secant/codes.hpp"

#include <algorithm>
#include <set>

namespace secant::codes {

int hamming_distance(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw input_error("hamming_distance: length mismatch");
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

CodeSpec CodeSpec::from_words(int q, int length, std::vector<std::vector<int>> words) {
    if (q < 2 || length < 1) throw input_error("code needs q >= 2, length >= 1");
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) != length) throw input_error("codeword length mismatch");
        for (int c : w)
            if (c < 0 || c >= q) throw input_error("codeword symbol out of range");
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    CodeSpec code{q, length, std::move(words), length + 1};
    for (size_t i = 0; i < code.words.size(); ++i)
        for (size_t j = i + 1; j < code.words.size(); ++j)
            code.min_distance =
                std::min(code.min_distance, hamming_distance(code.words[i], code.words[j]));
    return code;
}

bool CodeSpec::contains(const std::vector<int>& w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

namespace {

bool is_prime_int(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// Enumerate {0..q-1}^d, lexicographic, last symbol fastest.
template <typename F>
void for_each_word(int d, int q, F&& fn) {
    std::vector<int> w(d, 0);
    while (true) {
        fn(w);
        int pos = d - 1;
        while (pos >= 0 && w[pos] == q - 1) w[pos--] = 0;
        if (pos < 0) break;
        ++w[pos];
    }
}

}  // namespace

CodeSpec code_from_parity_check(const std::vector<std::vector<int>>& h, int q) {
    if (!is_prime_int(q)) throw input_error("parity-check alphabet size must be prime");
    if (h.empty() || h.front().empty()) throw input_error("empty parity check matrix");
    const int d = static_cast<int>(h.front().size());
    for (const auto& row : h)
        if (static_cast<int>(row.size()) != d)
            throw input_error("ragged parity check matrix");

    std::vector<std::vector<int>> words;
    for_each_word(d, q, [&](const std::vector<int>& w) {
        for (const auto& row : h) {
            long long s = 0;
            for (int i = 0; i < d; ++i) s += static_cast<long long>(row[i]) * w[i];
            if (s % q != 0) return;
        }
        words.push_back(w);
    });
    return CodeSpec::from_words(q, d, std::move(words));
}

long long rook_bound(const CodeSpec& code) {
    std::set<std::vector<int>> covered;
    for (const auto& w : code.words) {
        covered.insert(w);
        for (int pos = 0; pos < code.length; ++pos)
            for (int sym = 0; sym < code.q; ++sym) {
                if (sym == w[pos]) continue;
                auto n = w;
                n[pos] = sym;
                covered.insert(std::move(n));
            }
    }
    return static_cast<long long>(covered.size());
}

long long grassmann_code_bound(const CodeSpec& code) {
    if (code.q != 2) throw input_error("constant-weight bound needs a binary code");
    if (code.words.empty()) return 0;
    const int weight = static_cast<int>(
        std::count(code.words.front().begin(), code.words.front().end(), 1));
    for (const auto& w : code.words)
        if (std::count(w.begin(), w.end(), 1) != weight)
            throw input_error("code is not constant-weight");

    // Constant-weight words at distance <= 2 are the word itself and its
    // single-transposition neighbours.
    std::set<std::vector<int>> covered;
    for (const auto& w : code.words) {
        covered.insert(w);
        for (int from = 0; from < code.length; ++from) {
            if (w[from] != 1) continue;
            for (int to = 0; to < code.length; ++to) {
                if (w[to] != 0) continue;
                auto n = w;
                n[from] = 0;
                n[to] = 1;
                covered.insert(std::move(n));
            }
        }
    }
    return static_cast<long long>(covered.size());
}

long long veronese_corner_bound(const std::vector<int>& corners, int m, int d) {
    if (m < 2 || d < 1) throw input_error("veronese_corner_bound: need m >= 2, d >= 1");
    if (corners.empty() || static_cast<int>(corners.size()) > m)
        throw input_error("need between 1 and m corner indices");
    std::set<int> distinct(corners.begin(), corners.end());
    if (distinct.size() != corners.size()) throw input_error("corner indices must be distinct");
    for (int c : corners)
        if (c < 1 || c > m) throw input_error("corner index out of range");

    long long count = 0;
    for (const auto& a : models::compositions(m, d)) {
        for (int c : corners) {
            int l1 = 0;
            for (int j = 0; j < m; ++j)
                l1 += std::abs(a[j] - (j == c - 1 ? d : 0));
            if (l1 <= 2) {
                ++count;
                break;
            }
        }
    }
    return count;
}

bounds::Witness code_to_segre_witness(const CodeSpec& code,
                                      const std::vector<QVec>& extra_sites) {
    bounds::Witness w;
    const int site_dim = code.q == 2 ? code.length : code.length * code.q;
    for (const auto& word : code.words) {
        QVec site(site_dim, Rat(0));
        if (code.q == 2) {
            for (int i = 0; i < code.length; ++i) site[i] = word[i];
        } else {
            for (int i = 0; i < code.length; ++i) site[i * code.q + word[i]] = 1;
        }
        w.sites.push_back(std::move(site));
    }
    for (const auto& s : extra_sites) {
        if (static_cast<int>(s.size()) != site_dim)
            throw input_error("extra site dimension mismatch");
        w.sites.push_back(s);
    }
    return w;
}

CodeSpec greedy_constant_weight_code(int m, int d, int min_dist) {
    if (d < 0 || d > m) throw input_error("weight must lie in 0..m");
    if (min_dist % 2 != 0 || min_dist > 2 * d)
        throw input_error("constant-weight distance must be even and <= 2d");
    std::vector<std::vector<int>> kept;
    for_each_word(m, 2, [&](const std::vector<int>& w) {
        if (std::count(w.begin(), w.end(), 1) != d) return;
        for (const auto& prev : kept)
            if (hamming_distance(prev, w) < min_dist) return;
        kept.push_back(w);
    });
    return CodeSpec::from_words(2, m, std::move(kept));
}

}  // namespace secant::codes
